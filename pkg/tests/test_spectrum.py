import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from magnon_ring.model import Boundary, ChainConfig, DmConfig, ValidationError
from magnon_ring.oracle import Model, hopping_matrix
from magnon_ring.spectrum import (
    dm_spectrum,
    eigenbasis,
    gauge_phases,
    obc_gauge_transform,
    open_eigenvector,
    open_spectrum,
    ring_eigenvector,
    ring_spectrum,
)


def ring(n, theta=0.0):
    return ChainConfig(n, theta, Boundary.RING)


def chain(n, theta=0.0):
    return ChainConfig(n, theta, Boundary.OPEN)


def test_ring_extremes_theta0():
    spec = ring_spectrum(ring(8))
    energy = dict(zip(np.round(spec.k, 12), spec.energy))
    assert energy[0.0] == -1.0
    assert energy[round(math.pi, 12)] == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 8, 13])
def test_ring_mode_numbers(n):
    spec = ring_spectrum(ring(n))
    assert len(spec) == n
    assert all(-n / 2 < m <= n / 2 for m in spec.n)
    assert list(spec.n) == sorted(spec.n)
    np.testing.assert_allclose(spec.k, 2 * np.pi * spec.n / n)


def test_ring_theta_shifts_dispersion():
    theta = 0.37
    spec = ring_spectrum(ring(8, theta))
    np.testing.assert_allclose(spec.energy, -np.cos(spec.k + theta), atol=0)


def test_ring_n4_quarter_turn():
    # n = -1, 0, 1, 2 -> k = -pi/2, 0, pi/2, pi
    spec = ring_spectrum(ring(4, math.pi / 2))
    np.testing.assert_array_equal(spec.n, [-1, 0, 1, 2])
    np.testing.assert_allclose(spec.energy, [-1.0, 0.0, 1.0, 0.0], atol=1e-15)


def test_open_n3():
    spec = open_spectrum(chain(3, 1.3))
    np.testing.assert_allclose(spec.k, [math.pi / 4, math.pi / 2, 3 * math.pi / 4])
    np.testing.assert_allclose(spec.energy, [-math.sqrt(2) / 2, 0.0, math.sqrt(2) / 2], atol=1e-15)
    dense = np.linalg.eigvalsh(hopping_matrix(chain(3, 1.3)))
    np.testing.assert_allclose(np.sort(spec.energy), dense, atol=1e-14)


def test_open_n2():
    spec = open_spectrum(chain(2))
    np.testing.assert_allclose(spec.k, [math.pi / 3, 2 * math.pi / 3])
    np.testing.assert_allclose(spec.energy, [-0.5, 0.5], atol=1e-15)


def test_open_theta_independent_exactly():
    a, b = open_spectrum(chain(7, 1.0)), open_spectrum(chain(7, 0.0))
    np.testing.assert_array_equal(a.energy, b.energy)
    np.testing.assert_array_equal(a.k, b.k)


def test_wrong_boundary_rejected():
    with pytest.raises(ValidationError):
        ring_spectrum(chain(4))
    with pytest.raises(ValidationError):
        open_spectrum(ring(4))
    with pytest.raises(ValidationError):
        dm_spectrum(chain(4), DmConfig(1.0))


def test_ring_eigenvector_uniform():
    np.testing.assert_allclose(ring_eigenvector(ring(4), 0.0), [0.5] * 4)


def test_ring_eigenvector_rejects_bad_k():
    with pytest.raises(ValidationError):
        ring_eigenvector(ring(4), 0.3)


def test_ring_eigenvector_accepts_equivalent_k():
    a = ring_eigenvector(ring(4), 3 * math.pi / 2)
    b = ring_eigenvector(ring(4), -math.pi / 2)
    np.testing.assert_allclose(a, b, atol=1e-15)


def test_open_eigenvector_n3():
    v = open_eigenvector(chain(3), math.pi / 2)
    np.testing.assert_allclose(v, np.sqrt(0.5) * np.array([1, 0, -1]), atol=1e-15)


def test_open_eigenvector_modulus_theta_independent():
    k = 2 * math.pi / 6
    a = np.abs(open_eigenvector(chain(5, 0.9), k))
    b = np.abs(open_eigenvector(chain(5, 0.0), k))
    np.testing.assert_allclose(a, b, atol=1e-15)


@given(n=st.integers(2, 12), theta=st.floats(-math.pi, math.pi), boundary=st.sampled_from(list(Boundary)))
def test_eigen_equation(n, theta, boundary):
    config = ChainConfig(n, theta, boundary)
    H = hopping_matrix(config)
    spec = ring_spectrum(config) if boundary is Boundary.RING else open_spectrum(config)
    V = eigenbasis(config)
    np.testing.assert_allclose(H @ V, V * spec.energy, atol=1e-12)
    np.testing.assert_allclose(V.conj().T @ V, np.eye(n), atol=1e-12)


def test_ring_plane_wave_modulus():
    v = ring_eigenvector(ring(7, 0.4), 2 * 2 * math.pi / 7)
    np.testing.assert_allclose(np.abs(v), 1 / math.sqrt(7))


@pytest.mark.parametrize("n", [4, 6, 9])
def test_ring_symmetric_dispersion_at_theta0(n):
    spec = ring_spectrum(ring(n))
    lookup = {int(m): e for m, e in zip(spec.n, spec.energy)}
    for m, e in lookup.items():
        partner = -m if -m in lookup else m  # n = N/2 is its own partner
        assert lookup[partner] == pytest.approx(e, abs=1e-15)


@given(n=st.integers(2, 15), theta=st.floats(-3.0, 3.0))
def test_ring_multiset_periodic(n, theta):
    a = np.sort(ring_spectrum(ring(n, theta)).energy)
    b = np.sort(ring_spectrum(ring(n, theta + 2 * math.pi / n)).energy)
    np.testing.assert_allclose(a, b, atol=1e-12)


def test_dm_zero_is_plain_ring():
    np.testing.assert_array_equal(dm_spectrum(ring(6), DmConfig(0.0)).energy, ring_spectrum(ring(6)).energy)


def test_dm_unit_coupling():
    spec = dm_spectrum(ring(6), DmConfig(1.0))
    np.testing.assert_allclose(spec.energy, -math.sqrt(2) * np.cos(spec.k + math.pi / 4), atol=1e-14)


@pytest.mark.parametrize("dz", [0.5, 1.0, 2.0, -0.7])
def test_dm_is_rescaled_ring(dz):
    dm = DmConfig(dz)
    scaled = dm_spectrum(ring(7), dm).energy * math.cos(dm.phi)
    np.testing.assert_allclose(scaled, ring_spectrum(ring(7, dm.phi)).energy, atol=1e-12)
    np.testing.assert_allclose(np.sort(np.linalg.eigvalsh(hopping_matrix(ring(7), Model.DM, dm))),
                               np.sort(dm_spectrum(ring(7), dm).energy), atol=1e-12)


def test_gauge_identity_at_theta0():
    np.testing.assert_array_equal(obc_gauge_transform(chain(5)), np.ones(5))


def test_gauge_rejects_ring():
    with pytest.raises(ValidationError):
        obc_gauge_transform(ring(5, 0.3))


def test_gauge_removes_theta_on_open_chain():
    theta = 0.7
    U = np.diag(obc_gauge_transform(chain(4, theta)))
    conj = U @ hopping_matrix(chain(4, theta)) @ U.conj().T
    np.testing.assert_allclose(conj, hopping_matrix(chain(4)), atol=1e-14, rtol=0)


def test_gauge_fails_on_ring():
    theta, n = 0.5, 5
    U = np.diag(gauge_phases(n, theta))
    conj = U @ hopping_matrix(ring(n, theta)) @ U.conj().T
    dev = np.max(np.abs(conj - hopping_matrix(ring(n))))
    # only the wrap-around bond keeps a phase e^{i N theta}
    assert dev == pytest.approx(0.5 * abs(np.exp(1j * n * theta) - 1), abs=1e-14)
    assert dev > 1e-6


def test_gauge_works_on_ring_with_commensurate_phase():
    n = 6
    theta = 2 * math.pi / n
    U = np.diag(gauge_phases(n, theta))
    conj = U @ hopping_matrix(ring(n, theta)) @ U.conj().T
    np.testing.assert_allclose(conj, hopping_matrix(ring(n)), atol=1e-14)
