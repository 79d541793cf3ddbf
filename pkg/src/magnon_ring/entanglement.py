"""Pairwise concurrence: the one-magnon shortcut and the general Wootters formula."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import MagnonAmplitudes, ValidationError

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10

SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
SIGMA_YY = np.kron(SIGMA_Y, SIGMA_Y)


@dataclass(frozen=True)
class TwoQubitDensity:
    """Density matrix in the basis ``|00>, |01>, |10>, |11>`` (first qubit = first selector)."""

    matrix: np.ndarray

    def __post_init__(self):
        rho = np.array(self.matrix, dtype=complex)
        if rho.shape != (4, 4):
            raise ValidationError(f"expected a 4x4 matrix, got shape {rho.shape}")
        if np.max(np.abs(rho - rho.conj().T)) > HERMITIAN_TOL:
            raise ValidationError("density matrix is not Hermitian")
        if abs(np.trace(rho) - 1.0) > TRACE_TOL:
            raise ValidationError(f"density matrix has trace {np.trace(rho).real:.15g}")
        if np.linalg.eigvalsh(rho).min() < -PSD_TOL:
            raise ValidationError("density matrix is not positive semidefinite")
        rho.flags.writeable = False
        object.__setattr__(self, "matrix", rho)


# eigenvalues of rho below this are roundoff; keeping them would leak
# sqrt(1e-16) ~ 1e-8 into the small lambdas
EIG_FLOOR = 1e-13


def _psd_sqrt(rho: np.ndarray) -> np.ndarray:
    w, v = np.linalg.eigh(rho)
    w = np.where(w > EIG_FLOOR, w, 0.0)
    return (v * np.sqrt(w)) @ v.conj().T


def wootters_concurrence(rho) -> float:
    """``max(0, l1 - l2 - l3 - l4)`` over the square roots of the eigenvalues of
    ``R = rho (sy x sy) rho* (sy x sy)``, largest first.

    Those square roots equal the singular values of ``sqrt(rho) sqrt(rho~)``
    with ``rho~ = (sy x sy) rho* (sy x sy)``, which is how they are computed:
    real, non-negative, and without squaring the conditioning.
    """
    if not isinstance(rho, TwoQubitDensity):
        rho = TwoQubitDensity(rho)
    root = _psd_sqrt(rho.matrix)
    root_flipped = SIGMA_YY @ root.conj() @ SIGMA_YY
    lam = np.linalg.svd(root @ root_flipped, compute_uv=False)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def _check_pair(l1: int, l2: int) -> None:
    if l1 == l2:
        raise ValidationError(f"need two distinct sites, got ({l1}, {l2})")


def concurrence_fast(amps: MagnonAmplitudes, l1: int, l2: int) -> float:
    """``2 |alpha_l1| |alpha_l2|``; selector 0 is the isolated spin."""
    _check_pair(l1, l2)
    value = 2.0 * abs(amps.amplitude(l1)) * abs(amps.amplitude(l2))
    return min(value, 1.0)


def reduce_to_pair(amps: MagnonAmplitudes, l1: int, l2: int) -> TwoQubitDensity:
    """Exact two-site reduced state of a one-magnon pure state.

    Tracing out the rest leaves the coherent part ``a1|10> + a2|01>`` plus the
    weight of every other branch collapsed onto ``|00>``; ``|11>`` is empty.
    """
    _check_pair(l1, l2)
    a1 = amps.amplitude(l1)
    a2 = amps.amplitude(l2)
    p1 = abs(a1) ** 2
    p2 = abs(a2) ** 2
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = 1.0 - p1 - p2
    rho[1, 1] = p2
    rho[2, 2] = p1
    rho[2, 1] = a1 * np.conj(a2)
    rho[1, 2] = np.conj(a1) * a2
    return TwoQubitDensity(rho)
