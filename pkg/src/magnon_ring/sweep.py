"""
Concurrence landscapes ``C(t, theta)`` and their maxima.

Rows of the landscape are evaluated independently (one theta per task) and
always with the same array shapes, so the numbers are bitwise identical no
matter how many worker threads share the work.
"""

from __future__ import annotations

import csv
import hashlib
import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, TextIO

import numpy as np

from .dynamics import asymptotic_concurrence_pair, concurrence_series
from .model import (
    ChainConfig,
    InChainPair,
    IsolatedSpin,
    Scenario,
    ValidationError,
    check_scenario,
)

REFINE_ROUNDS = 4
REFINE_POINTS = 21
REFINE_SHRINK = 10.0
# a phase-shifted maximum must beat the theta = 0 one by more than this to be reported
TIE_TOL = 1e-12


@dataclass(frozen=True)
class SweepSpec:
    config: ChainConfig
    scenario: Scenario
    target: tuple[int, int]
    t_range: tuple[float, float] = (0.0, 200.0)
    theta_range: tuple[float, float] = (-math.pi, math.pi)
    n_t: int = 4001
    n_theta: int = 1441
    refine: bool = True

    def __post_init__(self):
        check_scenario(self.config, self.scenario)
        l1, l2 = self.target
        if l1 == l2:
            raise ValidationError("target pair needs two distinct sites")
        for site in (l1, l2):
            self.config.check_site(site, allow_isolated=True)
            if site == 0 and not isinstance(self.scenario, IsolatedSpin):
                raise ValidationError("site 0 only exists in the isolated-spin scenario")
        t0, t1 = self.t_range
        if not (0.0 <= t0 < t1) or not math.isfinite(t1):
            raise ValidationError(f"bad t_range {self.t_range!r}")
        a, b = self.theta_range
        if not (math.isfinite(a) and math.isfinite(b) and a < b):
            raise ValidationError(f"bad theta_range {self.theta_range!r}")
        if self.n_t < 2 or self.n_theta < 2:
            raise ValidationError("grid sizes must be >= 2")

    @property
    def times(self) -> np.ndarray:
        return np.linspace(self.t_range[0], self.t_range[1], self.n_t)

    @property
    def thetas(self) -> np.ndarray:
        th = np.linspace(self.theta_range[0], self.theta_range[1], self.n_theta)
        # keep an exact theta = 0 column when the grid straddles it
        th[np.abs(th) < 1e-12] = 0.0
        return th


@dataclass
class SweepResult:
    spec: SweepSpec
    times: np.ndarray
    thetas: np.ndarray
    landscape: np.ndarray  # shape (n_t, n_theta)
    best: tuple[float, float, float]  # (t*, theta*, C_max)
    best_theta0: tuple[float, float]  # (t*, C_max) on the theta = 0 slice
    coarse_best: tuple[float, float, float] = field(default=(0.0, 0.0, 0.0))

    def to_csv(self) -> str:
        buf = io.StringIO()
        write_landscape_csv(self, buf)
        return buf.getvalue()

    def checksum(self) -> str:
        return hashlib.sha256(self.to_csv().encode()).hexdigest()


def _concurrence_column(spec: SweepSpec, theta: float, times: np.ndarray) -> np.ndarray:
    config = spec.config.with_theta(theta)
    l1, l2 = spec.target
    return concurrence_series(config, spec.scenario, l1, l2, times)


def _evaluate(spec: SweepSpec, times: np.ndarray, thetas: np.ndarray, threads: int = 1) -> np.ndarray:
    out = np.empty((times.shape[0], thetas.shape[0]))

    def fill(i: int) -> None:
        out[:, i] = _concurrence_column(spec, float(thetas[i]), times)

    if threads <= 1:
        for i in range(thetas.shape[0]):
            fill(i)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(fill, range(thetas.shape[0])))
    return out


def _local_axis(center: float, half: float, lo: float, hi: float) -> np.ndarray:
    return np.clip(np.linspace(center - half, center + half, REFINE_POINTS), lo, hi)


def _refine(
    spec: SweepSpec,
    start: tuple[float, float, float],
    dt: float,
    dtheta: float,
    fixed_theta: bool = False,
) -> tuple[float, float, float]:
    """Repeated grid-shrink around the incumbent; only strict improvements move it."""
    t_best, th_best, c_best = start
    t_lo, t_hi = spec.t_range
    th_lo, th_hi = spec.theta_range
    ht, hth = dt, dtheta
    for _ in range(REFINE_ROUNDS):
        ts = _local_axis(t_best, ht, t_lo, t_hi)
        ths = np.array([th_best]) if fixed_theta else _local_axis(th_best, hth, th_lo, th_hi)
        local = _evaluate(spec, ts, ths)
        i, j = np.unravel_index(np.argmax(local), local.shape)
        if local[i, j] > c_best:
            t_best, th_best, c_best = float(ts[i]), float(ths[j]), float(local[i, j])
        ht /= REFINE_SHRINK
        hth /= REFINE_SHRINK
    return t_best, th_best, c_best


def run_sweep(spec: SweepSpec, threads: int = 1) -> SweepResult:
    """Evaluate the landscape on the grid and locate its maxima.

    Ties on the grid go to the smallest t, then the smallest theta (row-major
    ``argmax``). ``best_theta0`` comes from a dedicated theta = 0 column, and
    it is also reported as ``best`` unless a shifted point wins by more than
    ``TIE_TOL``.
    """
    times = spec.times
    thetas = spec.thetas
    landscape = _evaluate(spec, times, thetas, threads)
    i, j = np.unravel_index(np.argmax(landscape), landscape.shape)
    coarse = (float(times[i]), float(thetas[j]), float(landscape[i, j]))

    zero_col = _evaluate(spec, times, np.array([0.0]))[:, 0]
    i0 = int(np.argmax(zero_col))
    best0 = (float(times[i0]), 0.0, float(zero_col[i0]))

    best = coarse
    if spec.refine:
        dt = times[1] - times[0]
        dth = thetas[1] - thetas[0]
        best = _refine(spec, coarse, dt, dth)
        best0 = _refine(spec, best0, dt, dth, fixed_theta=True)
    lo, hi = spec.theta_range
    if lo <= 0.0 <= hi and best0[2] >= best[2] - TIE_TOL:
        best = best0
    return SweepResult(spec, times, thetas, landscape, best, (best0[0], best0[2]), coarse)


def write_landscape_csv(result: SweepResult, fh: TextIO) -> None:
    """``t,theta,concurrence`` rows, t ascending then theta ascending, 12 significant digits."""
    fh.write("t,theta,concurrence\n")
    thetas = [f"{th:.12g}" for th in result.thetas]
    for t, row in zip(result.times, result.landscape):
        ts = f"{t:.12g}"
        fh.write("".join(f"{ts},{th},{c:.12g}\n" for th, c in zip(thetas, row)))


def theta_representative(theta: float, n_sites: int) -> float:
    """Fold theta into ``[0, 2 pi / N)``.

    On a ring, shifting theta by ``2 pi / N`` relabels the modes and multiplies
    the wave launched from site ``m`` by ``e^{-2 pi i (j - m) / N}``. With a
    single source (the isolated-spin scenario) that is a pure site phase, so
    the landscape is periodic with that period. Two sources pick up different
    phases and the in-chain landscape is not periodic.
    """
    period = 2.0 * math.pi / n_sites
    return math.fmod(math.fmod(theta, period) + period, period)


SCENARIOS = ("isolated", "in-chain")


@dataclass(frozen=True)
class CmaxRow:
    n_sites: int
    l: int
    scenario: str
    cmax_theta0: float
    t_star_theta0: float
    cmax: float
    t_star: float
    theta_star: float


def table_spec(n_sites: int, l: int, scenario: str, **grid) -> SweepSpec:
    """Sweep used for one bar of the C_max comparison.

    ``isolated``: Bell pair on (0, 1), concurrence between 0 and ``l``.
    ``in-chain``: Bell pair on (1, 2), concurrence between ``l`` and ``l + 1``
    (site ``N + 1`` wraps to 1).
    """
    scen, target = _target_for(scenario, l, n_sites)
    return SweepSpec(ChainConfig(n_sites), scen, target, **grid)


def cmax_table(
    n_range: Iterable[int] = range(3, 14),
    scenarios: Sequence[str] = SCENARIOS,
    threads: int = 1,
    **grid,
) -> list[CmaxRow]:
    """C_max with and without a phase shift for every ``(N, l)``, ``2 <= l <= N``."""
    rows = []
    for n in n_range:
        if not 3 <= n <= 13:
            raise ValidationError(f"N must lie in [3, 13], got {n}")
        for scenario in scenarios:
            for l in range(2, n + 1):
                res = run_sweep(table_spec(n, l, scenario, **grid), threads)
                t_star, theta_star, c = res.best
                rows.append(
                    CmaxRow(n, l, scenario, res.best_theta0[1], res.best_theta0[0], c, t_star, theta_star)
                )
    return rows


TABLE_HEADER = ["N", "l", "scenario", "cmax_theta0", "t_star_theta0", "cmax", "t_star", "theta_star"]


def write_table_csv(rows: Sequence[CmaxRow], fh: TextIO) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(TABLE_HEADER)
    for r in rows:
        writer.writerow(
            [r.n_sites, r.l, r.scenario]
            + [f"{v:.12g}" for v in (r.cmax_theta0, r.t_star_theta0, r.cmax, r.t_star, r.theta_star)]
        )


def read_table_csv(fh: TextIO) -> list[CmaxRow]:
    reader = csv.DictReader(fh)
    return [
        CmaxRow(
            int(r["N"]), int(r["l"]), r["scenario"],
            float(r["cmax_theta0"]), float(r["t_star_theta0"]),
            float(r["cmax"]), float(r["t_star"]), float(r["theta_star"]),
        )
        for r in reader
    ]


def _target_for(scenario: str, l: int, n_sites: int) -> tuple[Scenario, tuple[int, int]]:
    if scenario == "isolated":
        return IsolatedSpin(1), (0, l)
    if scenario == "in-chain":
        return InChainPair(1, 2), (l, l % n_sites + 1)
    raise ValidationError(f"unknown scenario {scenario!r}; expected one of {SCENARIOS}")


def large_n_theta_dependence(
    l: int,
    t: float,
    n_list: Sequence[int],
    scenario: str = "isolated",
    thetas: Optional[np.ndarray] = None,
) -> np.ndarray:
    """``d(N) = max_theta |C_N(t, theta) - C_N(t, 0)|`` for each ring size.

    Uses the same pairs as :func:`table_spec`. For the isolated spin ``d(N)``
    dies off as N grows; for an in-chain pair it approaches
    :func:`asymptotic_theta_dependence`.
    """
    if list(n_list) != sorted(n_list):
        raise ValidationError("n_list must be ascending")
    if thetas is None:
        thetas = np.linspace(-math.pi, math.pi, 721)
    out = []
    for n in n_list:
        scen, (l1, l2) = _target_for(scenario, l, n)
        ref = concurrence_series(ChainConfig(n, 0.0), scen, l1, l2, [t])[0]
        dev = max(
            abs(concurrence_series(ChainConfig(n, th), scen, l1, l2, [t])[0] - ref)
            for th in thetas
        )
        out.append(dev)
    return np.array(out)


def asymptotic_theta_dependence(l: int, t: float, thetas: Optional[np.ndarray] = None) -> float:
    """Infinite-ring value of :func:`large_n_theta_dependence` for the in-chain pair (1, 2)."""
    if thetas is None:
        thetas = np.linspace(-math.pi, math.pi, 721)
    ref = asymptotic_concurrence_pair(l, l + 1, 1, 2, 0.0, t)
    return max(abs(asymptotic_concurrence_pair(l, l + 1, 1, 2, th, t) - ref) for th in thetas)
