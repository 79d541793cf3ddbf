"""
Time evolution of one-magnon amplitudes by exact mode sums.

A magnon released from site ``m`` reaches site ``j`` with amplitude
``sum_k v_k(j) conj(v_k(m)) exp(-i E_k t)``. On a ring ``v_k(j) = e^{ikj}/sqrt(N)``
so this is ``(1/N) sum_k exp[ik(j-m) - i E_k t]``; the open chain uses its
standing waves instead. Every amplitude is therefore a short sum of
``coeff_k * exp(-i E_k t)`` and is evaluated that way, one site at a time if
needed.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .bessel import bessel_j
from .model import (
    Boundary,
    ChainConfig,
    DmConfig,
    InChainPair,
    IsolatedSpin,
    MagnonAmplitudes,
    Scenario,
    ValidationError,
    check_scenario,
)
from .spectrum import open_mode_numbers, ring_mode_numbers, spectrum

ISOLATED_AMPLITUDE = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class PropagatorRequest:
    config: ChainConfig
    scenario: Scenario
    time: float = 0.0

    def __post_init__(self):
        check_scenario(self.config, self.scenario)
        if not math.isfinite(self.time) or self.time < 0:
            raise ValidationError(f"time must be finite and >= 0, got {self.time!r}")


def mode_expansion(
    config: ChainConfig,
    scenario: Scenario,
    sites: Sequence[int],
    dm: Optional[DmConfig] = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Energies ``E`` (K,) and weights ``c`` (K, S) with ``alpha_s(t) = sum_k c[k,s] e^{-i E_k t}``.

    ``sites`` are chain sites (1..N); the isolated spin never appears here.
    """
    check_scenario(config, scenario)
    sites = np.array([config.check_site(s) for s in sites], dtype=float)
    sources = np.array(scenario.sites, dtype=float)
    N = config.n_sites
    if dm is not None and config.boundary is not Boundary.RING:
        raise ValidationError("the DM model is only defined on a ring")
    energies = np.asarray(spectrum(config, dm).energy)

    if config.boundary is Boundary.RING:
        k = 2.0 * np.pi * ring_mode_numbers(N) / N
        # sum over sources of e^{ik(j - m)} / N, each source weighted 1/sqrt(2)
        disp = sites[None, :, None] - sources[None, None, :]
        coeff = np.exp(1j * k[:, None, None] * disp).sum(axis=2)
        coeff *= ISOLATED_AMPLITUDE / N
    else:
        k = np.pi * open_mode_numbers(N) / (N + 1)
        norm = 2.0 / (N + 1)
        theta = config.theta
        target = np.exp(-1j * theta * sites)[None, :] * np.sin(np.outer(k, sites))
        overlap = (np.exp(1j * theta * sources)[None, :] * np.sin(np.outer(k, sources))).sum(axis=1)
        coeff = norm * ISOLATED_AMPLITUDE * target * overlap[:, None]
    return energies, coeff


def sum_modes(energies: np.ndarray, coeff: np.ndarray, times) -> np.ndarray:
    """Evaluate ``sum_k coeff[k] e^{-i E_k t}`` for every time; shape (T, S).

    Modes are accumulated in a fixed order so results do not depend on how
    callers batch their work.
    """
    times = np.atleast_1d(np.asarray(times, dtype=float))
    out = np.zeros((times.shape[0], coeff.shape[1]), dtype=complex)
    for e, c in zip(energies, coeff):
        out += np.exp(-1j * e * times)[:, None] * c[None, :]
    return out


def site_amplitudes(
    config: ChainConfig,
    scenario: Scenario,
    sites: Sequence[int],
    times,
    dm: Optional[DmConfig] = None,
) -> np.ndarray:
    """Amplitudes at selected chain sites, shape (len(times), len(sites))."""
    energies, coeff = mode_expansion(config, scenario, sites, dm)
    return sum_modes(energies, coeff, times)


def isolated_branch(time: float) -> complex:
    """Amplitude of the branch with the excitation on the isolated spin.

    Its modulus stays ``1/sqrt(2)``; the phase ``e^{it}`` is the offset between
    the zero- and one-magnon sectors of the ferromagnetic ring at ``h = 0``.
    """
    return ISOLATED_AMPLITUDE * cmath.exp(1j * time)


def evolve(request: PropagatorRequest, dm: Optional[DmConfig] = None) -> MagnonAmplitudes:
    """Full amplitude vector at ``request.time``."""
    config = request.config
    sites = range(1, config.n_sites + 1)
    alpha = site_amplitudes(config, request.scenario, sites, [request.time], dm)[0]
    isolated = isolated_branch(request.time) if isinstance(request.scenario, IsolatedSpin) else None
    return MagnonAmplitudes(alpha, isolated, float(request.time))


def concurrence_series(
    config: ChainConfig,
    scenario: Scenario,
    l1: int,
    l2: int,
    times,
    dm: Optional[DmConfig] = None,
) -> np.ndarray:
    """``2 |alpha_l1(t)| |alpha_l2(t)|`` over an array of times.

    Site 0 selects the isolated spin, whose modulus is fixed at ``1/sqrt(2)``.
    """
    if l1 == l2:
        raise ValidationError("concurrence needs two distinct sites")
    for site in (l1, l2):
        config.check_site(site, allow_isolated=True)
        if site == 0 and not isinstance(scenario, IsolatedSpin):
            raise ValidationError("site 0 only exists in the isolated-spin scenario")
    chain_sites = [s for s in (l1, l2) if s != 0]
    mags = np.abs(site_amplitudes(config, scenario, chain_sites, times, dm))
    if len(chain_sites) == 1:
        return 2.0 * ISOLATED_AMPLITUDE * mags[:, 0]
    return 2.0 * mags[:, 0] * mags[:, 1]


def asymptotic_concurrence_isolated(l: int, t: float) -> float:
    """Large-N limit ``|J_{l-1}(t)|`` between the isolated spin and site ``l``."""
    if l < 1:
        raise ValidationError(f"site index must be >= 1, got {l}")
    return abs(bessel_j(l - 1, t))


def asymptotic_concurrence_pair(
    l1: int, l2: int, m1: int, m2: int, theta: float, t: float
) -> float:
    """Large-N limit for a Bell pair started on chain sites ``m1, m2``.

    Each factor is ``|J_{l-m1}(t) + e^{-i(m1-m2)(theta-pi/2)} J_{l-m2}(t)|``;
    unlike the isolated case the relative phase keeps a theta dependence.
    """
    if m1 == m2:
        raise ValidationError("initial pair needs two distinct sites")
    if l1 == l2:
        raise ValidationError("target pair needs two distinct sites")
    phase = cmath.exp(-1j * (m1 - m2) * (theta - math.pi / 2))

    def factor(l: int) -> float:
        return abs(bessel_j(l - m1, t) + phase * bessel_j(l - m2, t))

    return factor(l1) * factor(l2)


def asymptotic_concurrence(scenario: Scenario, l1: int, l2: int, theta: float, t: float) -> float:
    """Dispatch the large-N formula on the scenario type."""
    if isinstance(scenario, IsolatedSpin):
        if 0 not in (l1, l2):
            raise ValidationError("isolated-spin limit is only defined for pairs (0, l)")
        l = l2 if l1 == 0 else l1
        return abs(bessel_j(l - scenario.m, t))
    if isinstance(scenario, InChainPair):
        return asymptotic_concurrence_pair(l1, l2, scenario.m1, scenario.m2, theta, t)
    raise ValidationError(f"unknown scenario {scenario!r}")
