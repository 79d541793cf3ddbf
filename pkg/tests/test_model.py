import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from magnon_ring.model import (
    AcFieldConfig,
    Boundary,
    ChainConfig,
    DmConfig,
    InChainPair,
    IsolatedSpin,
    MagnonAmplitudes,
    ValidationError,
    ac_phase_per_link,
    make_initial_amplitudes,
)

# CODATA 2018, typed in by hand so the check does not go through scipy.constants
HBAR = 1.054571817e-34
C_LIGHT = 2.99792458e8
BOHR_MAGNETON = 9.2740100783e-24

R = 1 / math.sqrt(2)


def test_initial_isolated_spin():
    amps = make_initial_amplitudes(ChainConfig(5), IsolatedSpin(1))
    np.testing.assert_array_equal(amps.alpha, [R, 0, 0, 0, 0])
    assert amps.alpha_isolated == R
    assert amps.time == 0.0


def test_initial_in_chain_pair():
    amps = make_initial_amplitudes(ChainConfig(4), InChainPair(1, 2))
    np.testing.assert_array_equal(amps.alpha, [R, R, 0, 0])
    assert amps.alpha_isolated is None


def test_degenerate_pair_rejected():
    with pytest.raises(ValidationError):
        make_initial_amplitudes(ChainConfig(3), InChainPair(1, 1))


@pytest.mark.parametrize("scenario", [IsolatedSpin(0), IsolatedSpin(6), InChainPair(2, 6)])
def test_out_of_range_sites_rejected(scenario):
    with pytest.raises(ValidationError):
        make_initial_amplitudes(ChainConfig(5), scenario)


@given(
    n=st.integers(2, 40),
    data=st.data(),
)
def test_initial_state_normalised(n, data):
    if data.draw(st.booleans()):
        scenario = IsolatedSpin(data.draw(st.integers(1, n)))
    else:
        m1, m2 = data.draw(st.lists(st.integers(1, n), min_size=2, max_size=2, unique=True))
        scenario = InChainPair(m1, m2)
    amps = make_initial_amplitudes(ChainConfig(n), scenario)
    assert abs(amps.norm_squared() - 1.0) < 1e-15


@pytest.mark.parametrize(
    "theta, expected",
    [(0.0, 0.0), (2 * math.pi + 0.3, 0.3), (-math.pi, -math.pi), (math.pi, math.pi), (7.0, 7.0 - 2 * math.pi)],
)
def test_theta_is_reduced(theta, expected):
    assert ChainConfig(4, theta).theta == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("n", [1, 0, -3, 2.5])
def test_bad_site_count(n):
    with pytest.raises(ValidationError):
        ChainConfig(n)


def test_boundary_from_string():
    assert ChainConfig(3, boundary="open").boundary is Boundary.OPEN


def test_amplitudes_immutable():
    amps = MagnonAmplitudes([0.6, 0.8])
    with pytest.raises(ValueError):
        amps.alpha[0] = 1.0


def test_ac_phase_zero_field():
    assert ac_phase_per_link(AcFieldConfig(BOHR_MAGNETON, 0.0, 1e-6)) == 0.0


def test_ac_phase_bohr_magneton_estimate():
    expected = BOHR_MAGNETON * 1e7 * 1e-6 / (HBAR * C_LIGHT**2)
    got = ac_phase_per_link(AcFieldConfig(BOHR_MAGNETON, 1e7, 1e-6))
    assert got == pytest.approx(expected, rel=1e-9)
    assert got == pytest.approx(9.8e-6, rel=0.01)


@given(
    mu=st.floats(1e-26, 1e-20),
    e=st.floats(1.0, 1e9),
    dr=st.floats(1e-9, 1e-3),
    scale=st.floats(0.1, 10.0),
)
def test_ac_phase_linear(mu, e, dr, scale):
    base = ac_phase_per_link(AcFieldConfig(mu, e, dr))
    for field in (
        AcFieldConfig(mu * scale, e, dr),
        AcFieldConfig(mu, e * scale, dr),
        AcFieldConfig(mu, e, dr * scale),
    ):
        assert ac_phase_per_link(field) == pytest.approx(scale * base, rel=1e-12)


def test_ac_phase_geometry_agnostic():
    a = ac_phase_per_link(AcFieldConfig(1e-23, 1e7, 1e-6, "radial-field"))
    b = ac_phase_per_link(AcFieldConfig(1e-23, 1e7, 1e-6, "axial-moment"))
    assert a == b


def test_negative_magnitudes_rejected():
    with pytest.raises(ValidationError):
        AcFieldConfig(-1.0, 1.0, 1.0)


def test_dm_phi():
    assert DmConfig(0.0).phi == 0.0
    assert DmConfig(1.0).phi == pytest.approx(math.pi / 4)
    assert DmConfig(1.0).time_scale == pytest.approx(math.sqrt(2))


@pytest.mark.parametrize("dz", [math.inf, math.nan, 1e300])
def test_dm_rejects_unbounded(dz):
    with pytest.raises(ValidationError):
        DmConfig(dz)
