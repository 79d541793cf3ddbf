"""One-magnon modes and dispersion relations for ring and open chains."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .model import Boundary, ChainConfig, DmConfig, ValidationError

_MODE_TOL = 1e-9


@dataclass(frozen=True)
class Spectrum:
    """Allowed modes in ascending ``n``; constant energy offsets are not included."""

    n: np.ndarray
    k: np.ndarray
    energy: np.ndarray
    boundary: Boundary

    def __post_init__(self):
        for name in ("n", "k", "energy"):
            getattr(self, name).flags.writeable = False

    def __len__(self) -> int:
        return self.n.shape[0]

    @property
    def modes(self) -> list[tuple[int, float, float]]:
        return [(int(n), float(k), float(e)) for n, k, e in zip(self.n, self.k, self.energy)]


def ring_mode_numbers(n_sites: int) -> np.ndarray:
    """Integers ``n`` with ``-N/2 < n <= N/2``."""
    return np.arange(-((n_sites - 1) // 2), n_sites // 2 + 1)


def open_mode_numbers(n_sites: int) -> np.ndarray:
    return np.arange(1, n_sites + 1)


def _require(config: ChainConfig, boundary: Boundary) -> None:
    if config.boundary is not boundary:
        raise ValidationError(
            f"expected a {boundary.value} chain, got boundary={config.boundary.value}"
        )


def ring_spectrum(config: ChainConfig) -> Spectrum:
    """``E_k = -cos(k + theta)`` with ``k = 2 pi n / N``."""
    _require(config, Boundary.RING)
    n = ring_mode_numbers(config.n_sites)
    k = 2.0 * np.pi * n / config.n_sites
    return Spectrum(n, k, -np.cos(k + config.theta), Boundary.RING)


def open_spectrum(config: ChainConfig) -> Spectrum:
    """``E_k = -cos(k)`` with ``k = pi n / (N + 1)``; theta drops out entirely."""
    _require(config, Boundary.OPEN)
    n = open_mode_numbers(config.n_sites)
    k = np.pi * n / (config.n_sites + 1)
    return Spectrum(n, k, -np.cos(k), Boundary.OPEN)


def dm_spectrum(config: ChainConfig, dm: DmConfig) -> Spectrum:
    """Ring spectrum with a z-axis DM coupling.

    The DM term turns the hopping into ``-(1/2cos phi) e^{i phi}`` with
    ``phi = atan(d_z)``, so ``E_k = -cos(k + theta + phi) / cos(phi)``.
    An AC phase already present on ``config`` simply adds to ``phi``.
    """
    _require(config, Boundary.RING)
    n = ring_mode_numbers(config.n_sites)
    k = 2.0 * np.pi * n / config.n_sites
    energy = -np.cos(k + config.theta + dm.phi) / math.cos(dm.phi)
    return Spectrum(n, k, energy, Boundary.RING)


def spectrum(config: ChainConfig, dm: Optional[DmConfig] = None) -> Spectrum:
    """Dispatch on boundary (and DM coupling, ring only)."""
    if dm is not None:
        return dm_spectrum(config, dm)
    if config.boundary is Boundary.RING:
        return ring_spectrum(config)
    return open_spectrum(config)


def _mode_index(k: float, step: float, allowed: np.ndarray, periodic: bool) -> int:
    n = round(float(k) / step)
    if abs(float(k) - n * step) > _MODE_TOL:
        raise ValidationError(f"k={k!r} is not an allowed mode")
    if periodic:
        # ring modes are defined mod 2*pi: fold n into the allowed window
        lo = int(allowed[0])
        n = (n - lo) % len(allowed) + lo
    elif n not in allowed:
        raise ValidationError(f"k={k!r} is not an allowed mode")
    return int(n)


def ring_eigenvector(config: ChainConfig, k: float) -> np.ndarray:
    """Plane wave ``e^{ikj}/sqrt(N)``, j = 1..N (unchanged by theta)."""
    _require(config, Boundary.RING)
    N = config.n_sites
    n = _mode_index(k, 2.0 * np.pi / N, ring_mode_numbers(N), periodic=True)
    j = np.arange(1, N + 1)
    return np.exp(1j * (2.0 * np.pi * n / N) * j) / math.sqrt(N)


def open_eigenvector(config: ChainConfig, k: float) -> np.ndarray:
    """Standing wave ``sqrt(2/(N+1)) e^{-ij theta} sin(kj)``."""
    _require(config, Boundary.OPEN)
    N = config.n_sites
    n = _mode_index(k, np.pi / (N + 1), open_mode_numbers(N), periodic=False)
    kk = np.pi * n / (N + 1)
    j = np.arange(1, N + 1)
    return math.sqrt(2.0 / (N + 1)) * np.exp(-1j * j * config.theta) * np.sin(kk * j)


def eigenbasis(config: ChainConfig) -> np.ndarray:
    """Columns are the eigenvectors of :func:`spectrum` in mode order."""
    if config.boundary is Boundary.RING:
        k = 2.0 * np.pi * ring_mode_numbers(config.n_sites) / config.n_sites
        return np.column_stack([ring_eigenvector(config, kk) for kk in k])
    k = np.pi * open_mode_numbers(config.n_sites) / (config.n_sites + 1)
    return np.column_stack([open_eigenvector(config, kk) for kk in k])


def obc_gauge_transform(config: ChainConfig) -> np.ndarray:
    """Diagonal of the gauge unitary ``prod_j exp[i j theta (S_j^z + 1/2)]``.

    In the one-magnon sector the unitary acts on ``S_j^+|0>`` as ``e^{ij theta}``.
    With ``U = diag(result)``, ``U H(theta) U^dagger == H(0)`` for an open chain.
    On a ring the wrap-around link keeps a leftover phase ``e^{iN theta}``, so no
    such cancellation exists and the call is rejected.
    """
    if config.boundary is not Boundary.OPEN:
        raise ValidationError("theta can only be gauged away on an open chain")
    return gauge_phases(config.n_sites, config.theta)


def gauge_phases(n_sites: int, theta: float) -> np.ndarray:
    """``e^{i j theta}`` for j = 1..N, without any boundary check."""
    return np.exp(1j * theta * np.arange(1, n_sites + 1))
