"""
Brute-force reference: the full ``2^M``-dimensional spin Hamiltonian.

Everything here is deliberately naive (dense matrices, full eigendecomposition,
explicit partial traces) so that it shares no shortcuts with the mode-sum code
it is used to check.

Bit order: chain site ``j`` is bit ``j - 1`` of the basis index; the isolated
spin, when present, is the highest bit ``N``. A set bit means spin up.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from .dynamics import PropagatorRequest, evolve
from .entanglement import TwoQubitDensity, concurrence_fast, wootters_concurrence
from .model import (
    Boundary,
    CapacityError,
    ChainConfig,
    DmConfig,
    InChainPair,
    IsolatedSpin,
    MagnonAmplitudes,
    Scenario,
    ValidationError,
    check_scenario,
)

MAX_DENSE_SITES = 14


class Model(enum.Enum):
    HEISENBERG = "heisenberg"
    XY = "xy"
    DM = "dm"


@dataclass(frozen=True, eq=False)
class DenseHamiltonian:
    matrix: np.ndarray
    config: ChainConfig
    model: Model
    isolated: bool = False
    dm: Optional[DmConfig] = None

    @property
    def n_qubits(self) -> int:
        return self.config.n_sites + (1 if self.isolated else 0)

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    @cached_property
    def eigh(self) -> tuple[np.ndarray, np.ndarray]:
        return np.linalg.eigh(self.matrix)


def links(config: ChainConfig) -> list[tuple[int, int]]:
    """Nearest-neighbour bonds ``(j, j+1)``; a ring also closes ``(N, 1)``."""
    N = config.n_sites
    bonds = [(j, j + 1) for j in range(1, N)]
    if config.boundary is Boundary.RING:
        bonds.append((N, 1))
    return bonds


def _hop_coefficient(config: ChainConfig, model: Model, dm: Optional[DmConfig]) -> complex:
    """Coefficient ``c`` of ``-(1/2) c S_a^+ S_b^-`` on each bond."""
    c = complex(math.cos(config.theta), math.sin(config.theta))
    if model is Model.DM:
        if dm is None:
            raise ValidationError("the DM model needs a DmConfig")
        c *= complex(1.0, dm.d_z)
    return c


def build_hamiltonian(
    config: ChainConfig,
    model: Model = Model.HEISENBERG,
    dm: Optional[DmConfig] = None,
    isolated_spin: bool = False,
) -> DenseHamiltonian:
    """Dense Hamiltonian of the chain (times identity on the isolated spin).

    HEISENBERG::

        -sum_j [ (e^{i theta} S_j^+ S_{j+1}^- + h.c.)/2 + S_j^z S_{j+1}^z + h S_j^z ]

    XY drops the ``S^z S^z`` term. DM is the in-plane exchange plus a z-axis
    DM term, ``-(1/2) sum_j [S^+S^- + S^-S^+ + i d_z (S^+S^- - S^-S^+)]``, with
    the same field term. Any ``theta`` on ``config`` multiplies the hopping
    in every model.
    """
    model = Model(model)
    N = config.n_sites
    if N > MAX_DENSE_SITES:
        raise CapacityError(f"dense oracle is limited to N <= {MAX_DENSE_SITES}, got {N}")
    n_qubits = N + (1 if isolated_spin else 0)
    dim = 1 << n_qubits
    states = np.arange(dim)
    bit = lambda site: (states >> (site - 1)) & 1  # noqa: E731
    up = [None] + [bit(j) for j in range(1, N + 1)]
    H = np.zeros((dim, dim), dtype=complex)

    c = _hop_coefficient(config, model, dm)
    for a, b in links(config):
        ma, mb = 1 << (a - 1), 1 << (b - 1)
        # S_a^+ S_b^- : a down, b up -> a up, b down
        src = states[(up[a] == 0) & (up[b] == 1)]
        np.add.at(H, (src ^ (ma | mb), src), -0.5 * c)
        src = states[(up[a] == 1) & (up[b] == 0)]
        np.add.at(H, (src ^ (ma | mb), src), -0.5 * c.conjugate())
        if model is Model.HEISENBERG:
            sz = (up[a] - 0.5) * (up[b] - 0.5)
            H[states, states] -= sz
    if config.field_h:
        total_sz = sum(up[j] - 0.5 for j in range(1, N + 1))
        H[states, states] -= config.field_h * total_sz
    return DenseHamiltonian(H, config, model, isolated_spin, dm)


def hopping_matrix(
    config: ChainConfig, model: Model = Model.XY, dm: Optional[DmConfig] = None
) -> np.ndarray:
    """The phased nearest-neighbour hopping matrix, written down directly.

    ``H[a, b] = -c/2`` and ``H[b, a] = -conj(c)/2`` for every bond ``(a, b)``,
    with periodic wrap-around on a ring; no diagonal.
    """
    N = config.n_sites
    c = _hop_coefficient(config, Model(model), dm)
    H = np.zeros((N, N), dtype=complex)
    for a, b in links(config):
        H[a - 1, b - 1] += -0.5 * c
        H[b - 1, a - 1] += -0.5 * c.conjugate()
    return H


def sector_constant(config: ChainConfig, model: Model = Model.HEISENBERG) -> float:
    """Energy offset of the one-magnon block that the mode energies leave out."""
    N = config.n_sites
    h = config.field_h
    field_part = -h * (1.0 - N / 2.0)
    if Model(model) is not Model.HEISENBERG:
        return field_part
    if config.boundary is not Boundary.RING:
        raise ValidationError(
            "the Heisenberg one-magnon diagonal is not uniform on an open chain"
        )
    return (1.0 - N / 4.0) + field_part


def one_magnon_block(h: DenseHamiltonian) -> np.ndarray:
    """Restriction of ``h`` to ``span{S_j^+ |0...0>}`` (isolated spin down)."""
    idx = np.array([1 << (j - 1) for j in range(1, h.config.n_sites + 1)])
    return h.matrix[np.ix_(idx, idx)]


def evolve_dense(h: DenseHamiltonian, initial: np.ndarray, t: float) -> np.ndarray:
    """``exp(-i H t) |initial>`` through the full eigendecomposition of ``H``."""
    psi = np.asarray(initial, dtype=complex)
    if psi.shape != (h.dimension,):
        raise ValidationError(f"state has shape {psi.shape}, expected ({h.dimension},)")
    w, v = h.eigh
    return v @ (np.exp(-1j * w * t) * (v.conj().T @ psi))


def initial_state_vector(config: ChainConfig, scenario: Scenario) -> np.ndarray:
    """Bell pair on the scenario's sites, every other spin down."""
    check_scenario(config, scenario)
    N = config.n_sites
    isolated = isinstance(scenario, IsolatedSpin)
    psi = np.zeros(1 << (N + (1 if isolated else 0)), dtype=complex)
    amp = 1.0 / math.sqrt(2.0)
    if isolated:
        psi[1 << N] = amp
        psi[1 << (scenario.m - 1)] = amp
    else:
        psi[1 << (scenario.m1 - 1)] = amp
        psi[1 << (scenario.m2 - 1)] = amp
    return psi


def extract_amplitudes(state: np.ndarray, n_sites: int, time: float = 0.0) -> MagnonAmplitudes:
    """Read the one-magnon amplitudes back out of a full state vector."""
    state = np.asarray(state)
    isolated = _has_isolated(state, n_sites)
    alpha = np.array([state[1 << (j - 1)] for j in range(1, n_sites + 1)])
    iso = complex(state[1 << n_sites]) if isolated else None
    return MagnonAmplitudes(alpha, iso, time)


def _has_isolated(state: np.ndarray, n_sites: int) -> bool:
    if state.shape == (1 << n_sites,):
        return False
    if state.shape == (1 << (n_sites + 1),):
        return True
    raise ValidationError(f"state of shape {state.shape} does not match N={n_sites}")


def partial_trace_pair(state: np.ndarray, l1: int, l2: int, n_sites: int) -> TwoQubitDensity:
    """Reduced density matrix of two selected spins (0 = isolated spin)."""
    state = np.asarray(state, dtype=complex)
    isolated = _has_isolated(state, n_sites)
    if l1 == l2:
        raise ValidationError("need two distinct sites")
    n_qubits = n_sites + (1 if isolated else 0)

    def bit_of(site: int) -> int:
        if site == 0:
            if not isolated:
                raise ValidationError("state has no isolated spin")
            return n_sites
        if not 1 <= site <= n_sites:
            raise ValidationError(f"site {site} out of range [0, {n_sites}]")
        return site - 1

    # C-order reshape puts the most significant bit on axis 0
    axes = [n_qubits - 1 - bit_of(l1), n_qubits - 1 - bit_of(l2)]
    psi = np.moveaxis(state.reshape((2,) * n_qubits), axes, [0, 1]).reshape(4, -1)
    rho = psi @ psi.conj().T
    return TwoQubitDensity(rho)


def selectors(config: ChainConfig, scenario: Scenario) -> list[int]:
    sites = list(range(1, config.n_sites + 1))
    return ([0] + sites) if isinstance(scenario, IsolatedSpin) else sites


@dataclass
class EquivalenceCase:
    """One (N, scenario, theta, t) comparison between dense and mode-sum routes."""

    n_sites: int
    scenario: Scenario
    theta: float
    time: float
    concurrence_dev: float
    amplitude_dev: float
    worst_pair: tuple[int, int] = field(default=(0, 0))

    @property
    def label(self) -> str:
        name = "isolated" if isinstance(self.scenario, IsolatedSpin) else "pair"
        return f"N={self.n_sites} {name}{self.scenario.sites} theta={self.theta:+.4f} t={self.time:g}"

    @property
    def deviation(self) -> float:
        return max(self.concurrence_dev, self.amplitude_dev)


DEFAULT_THETAS = (0.0, 0.3, -0.3, math.pi / 2, -math.pi / 2, math.atan(1.376))
DEFAULT_TIMES = (0.0, 1.0, 5.0, 20.0, 59.05)


def compare_case(
    h: DenseHamiltonian, scenario: Scenario, t: float
) -> EquivalenceCase:
    """Dense evolution + partial trace + Wootters against mode sums + 2|a||b|."""
    config = h.config
    psi = evolve_dense(h, initial_state_vector(config, scenario), t)
    dense_amps = extract_amplitudes(psi, config.n_sites, t)
    fast = evolve(PropagatorRequest(config, scenario, t))
    amp_dev = float(np.max(np.abs(np.abs(dense_amps.alpha) - np.abs(fast.alpha))))
    worst, worst_pair = 0.0, (0, 0)
    for l1, l2 in itertools.combinations(selectors(config, scenario), 2):
        dense_c = wootters_concurrence(partial_trace_pair(psi, l1, l2, config.n_sites))
        dev = abs(dense_c - concurrence_fast(fast, l1, l2))
        if dev > worst:
            worst, worst_pair = dev, (l1, l2)
    return EquivalenceCase(config.n_sites, scenario, config.theta, t, worst, amp_dev, worst_pair)


def run_equivalence_suite(
    n_values: Iterable[int] = range(2, 11),
    thetas: Sequence[float] = DEFAULT_THETAS,
    times: Sequence[float] = DEFAULT_TIMES,
    model: Model = Model.HEISENBERG,
    field_h: float = 0.0,
) -> list[EquivalenceCase]:
    """Every (N, scenario, theta, t) combination on rings, both scenarios.

    The in-chain scenario starts from sites (1, 2); for N = 2 they are the
    whole ring.
    """
    cases = []
    for n in n_values:
        if n > MAX_DENSE_SITES:
            raise CapacityError(f"dense oracle is limited to N <= {MAX_DENSE_SITES}, got {n}")
        for scenario in (IsolatedSpin(1), InChainPair(1, 2)):
            for theta in thetas:
                config = ChainConfig(n, theta, Boundary.RING, field_h)
                h = build_hamiltonian(config, model, isolated_spin=isinstance(scenario, IsolatedSpin))
                for t in times:
                    cases.append(compare_case(h, scenario, t))
    return cases
