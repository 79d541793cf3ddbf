import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from magnon_ring.entanglement import (
    SIGMA_YY,
    TwoQubitDensity,
    concurrence_fast,
    reduce_to_pair,
    wootters_concurrence,
)
from magnon_ring.model import MagnonAmplitudes, ValidationError

BELL = np.array([0, 1, 1, 0]) / math.sqrt(2)


def concurrence_from_r(rho):
    # textbook route: sqrt of the eigenvalues of rho (sy sy) rho* (sy sy)
    r = rho @ SIGMA_YY @ rho.conj() @ SIGMA_YY
    lam = np.sqrt(np.clip(np.sort(np.linalg.eigvals(r).real)[::-1], 0, None))
    return max(0.0, lam[0] - lam[1] - lam[2] - lam[3])


def pure(psi):
    psi = np.asarray(psi, complex)
    return np.outer(psi, psi.conj())


def random_magnon(rng, n):
    v = rng.normal(size=n) + 1j * rng.normal(size=n)
    return MagnonAmplitudes(v / np.linalg.norm(v))


def test_bell_state():
    assert wootters_concurrence(pure(BELL)) == pytest.approx(1.0, abs=1e-12)


def test_product_state():
    assert wootters_concurrence(pure([0, 0, 1, 0])) == pytest.approx(0.0, abs=1e-12)
    assert wootters_concurrence(np.eye(4) / 4) == 0.0


def test_hand_example():
    amps = MagnonAmplitudes([0.6, 0.8])
    rho = reduce_to_pair(amps, 1, 2).matrix
    assert concurrence_fast(amps, 1, 2) == pytest.approx(0.96)
    assert wootters_concurrence(rho) == pytest.approx(0.96, abs=1e-12)
    assert concurrence_from_r(rho) == pytest.approx(0.96, abs=1e-10)


@pytest.mark.parametrize("p", [0.0, 0.2, 1 / 3, 0.5, 0.9, 1.0])
def test_werner_states(p):
    rho = p * pure(BELL) + (1 - p) * np.eye(4) / 4
    assert wootters_concurrence(rho) == pytest.approx(max(0.0, (3 * p - 1) / 2), abs=1e-10)


def test_reduced_state_structure():
    rng = np.random.default_rng(3)
    amps = random_magnon(rng, 6)
    rho = reduce_to_pair(amps, 2, 5).matrix
    assert rho[3, 3] == 0
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-14)
    assert rho[2, 2] == pytest.approx(abs(amps.alpha[1]) ** 2)
    assert rho[1, 1] == pytest.approx(abs(amps.alpha[4]) ** 2)


def test_random_magnon_states_agree():
    rng = np.random.default_rng(20240611)
    worst = 0.0
    for _ in range(1000):
        n = int(rng.integers(2, 12))
        amps = random_magnon(rng, n)
        l1, l2 = rng.choice(np.arange(1, n + 1), size=2, replace=False)
        fast = concurrence_fast(amps, int(l1), int(l2))
        worst = max(worst, abs(fast - wootters_concurrence(reduce_to_pair(amps, int(l1), int(l2)))))
    assert worst < 1e-10


@given(
    a=st.complex_numbers(max_magnitude=1.0),
    b=st.complex_numbers(max_magnitude=1.0),
    phase=st.floats(-math.pi, math.pi),
)
def test_global_phase_invariance(a, b, phase):
    if abs(a) ** 2 + abs(b) ** 2 > 1:
        return
    rest = math.sqrt(max(0.0, 1 - abs(a) ** 2 - abs(b) ** 2))
    amps = MagnonAmplitudes([a, b, rest])
    rotated = MagnonAmplitudes(np.exp(1j * phase) * np.array([a, b, rest]))
    c1 = wootters_concurrence(reduce_to_pair(amps, 1, 2))
    c2 = wootters_concurrence(reduce_to_pair(rotated, 1, 2))
    assert c1 == pytest.approx(c2, abs=1e-10)
    assert c1 == pytest.approx(2 * abs(a) * abs(b), abs=1e-10)


def test_isolated_selector():
    amps = MagnonAmplitudes([0.5, 0.5], alpha_isolated=1 / math.sqrt(2))
    assert concurrence_fast(amps, 0, 2) == pytest.approx(1 / math.sqrt(2))
    assert wootters_concurrence(reduce_to_pair(amps, 0, 2)) == pytest.approx(1 / math.sqrt(2), abs=1e-12)


def test_fast_is_clipped():
    # slightly super-normalised amplitudes must not report C > 1
    amps = MagnonAmplitudes([1 / math.sqrt(2) + 1e-13, 1 / math.sqrt(2) + 1e-13])
    assert concurrence_fast(amps, 1, 2) <= 1.0


def test_same_site_rejected():
    with pytest.raises(ValidationError):
        concurrence_fast(MagnonAmplitudes([1.0, 0.0]), 1, 1)


@pytest.mark.parametrize(
    "matrix",
    [
        np.eye(3) / 3,
        np.eye(4) / 2,
        np.diag([1.5, -0.5, 0, 0]),
        np.array([[0.5, 0.1, 0, 0], [0, 0.5, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]),
    ],
)
def test_density_validation(matrix):
    with pytest.raises(ValidationError):
        TwoQubitDensity(matrix)
