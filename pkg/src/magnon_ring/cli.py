"""Command-line front end.

Every CSV is accompanied by a JSON run manifest (subcommand, resolved
parameters, package version, SHA-256 of the CSV). For file outputs the
manifest is written next to the file as ``<output>.manifest.json``; for
standard output it goes to standard error as one JSON line.

Exit codes: 0 success, 1 usage error, 2 numerical or validation failure.
"""

from __future__ import annotations

import argparse
import hashlib
import io
import json
import math
import sys
from dataclasses import asdict, dataclass
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .dynamics import PropagatorRequest, concurrence_series, evolve
from .model import (
    AcFieldConfig,
    Boundary,
    ChainConfig,
    DmConfig,
    InChainPair,
    IsolatedSpin,
    ValidationError,
    ac_phase_per_link,
)
from .oracle import MAX_DENSE_SITES, run_equivalence_suite
from .spectrum import spectrum
from .sweep import (
    SweepSpec,
    cmax_table,
    run_sweep,
    theta_representative,
    write_table_csv,
)

ORACLE_TOL = 1e-8


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


@dataclass
class RunManifest:
    subcommand: str
    parameters: dict
    version: str
    output_checksum: str


def fmt(x: float) -> str:
    return f"{x:.12g}"


def _emit(args, text: str, output: Optional[str], extra: Optional[dict] = None) -> None:
    params = {k: v for k, v in vars(args).items() if k != "func"}
    if extra:
        params.update(extra)
    manifest = RunManifest(args.command, params, __version__, hashlib.sha256(text.encode()).hexdigest())
    payload = json.dumps(asdict(manifest), sort_keys=True, default=str)
    if output in (None, "-"):
        sys.stdout.write(text)
        sys.stderr.write(payload + "\n")
    else:
        with open(output, "w", newline="") as fh:
            fh.write(text)
        with open(output + ".manifest.json", "w") as fh:
            fh.write(payload + "\n")


def _parse_scenario(text: str):
    kind, _, rest = text.partition(":")
    try:
        if kind == "isolated":
            return IsolatedSpin(int(rest or 1))
        if kind == "pair":
            m1, m2 = (int(v) for v in rest.split(","))
            return InChainPair(m1, m2)
    except ValueError as exc:
        raise UsageError(f"bad --scenario {text!r}: {exc}") from None
    raise UsageError(f"bad --scenario {text!r}; use isolated:m or pair:m1,m2")


def _parse_pair(text: str) -> tuple[int, int]:
    try:
        l1, l2 = (int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"bad --pair {text!r}; use l1,l2") from None
    return l1, l2


def _parse_times(args) -> np.ndarray:
    if args.times:
        try:
            t0, t1, dt = (float(v) for v in args.times.split(":"))
        except ValueError:
            raise UsageError(f"bad --times {args.times!r}; use t0:t1:dt") from None
        if dt <= 0 or t1 < t0:
            raise UsageError("--times needs t0 <= t1 and dt > 0")
        count = int(math.floor((t1 - t0) / dt + 1e-9)) + 1
        return t0 + dt * np.arange(count)
    return np.array([args.t])


def _config(args) -> ChainConfig:
    return ChainConfig(args.n, args.theta, Boundary(args.boundary))


def cmd_spectrum(args) -> int:
    dm = DmConfig(args.dm_dz) if args.dm_dz is not None else None
    spec = spectrum(_config(args), dm)
    buf = io.StringIO()
    buf.write("n,k,energy\n")
    for n, k, e in spec.modes:
        buf.write(f"{n},{fmt(k)},{fmt(e)}\n")
    _emit(args, buf.getvalue(), args.output)
    return 0


def cmd_evolve(args) -> int:
    config = _config(args)
    scenario = _parse_scenario(args.scenario)
    times = _parse_times(args)
    amp_buf = io.StringIO()
    amp_buf.write("t,site,re_alpha,im_alpha,abs_alpha\n")
    for t in times:
        amps = evolve(PropagatorRequest(config, scenario, float(t)))
        if amps.alpha_isolated is not None:
            a = amps.alpha_isolated
            amp_buf.write(f"{fmt(t)},0,{fmt(a.real)},{fmt(a.imag)},{fmt(abs(a))}\n")
        for j, a in enumerate(amps.alpha, start=1):
            amp_buf.write(f"{fmt(t)},{j},{fmt(a.real)},{fmt(a.imag)},{fmt(abs(a))}\n")
    if args.pair is None:
        _emit(args, amp_buf.getvalue(), args.output)
        return 0
    l1, l2 = _parse_pair(args.pair)
    conc = concurrence_series(config, scenario, l1, l2, times)
    buf = io.StringIO()
    buf.write("t,l1,l2,concurrence\n")
    for t, c in zip(times, conc):
        buf.write(f"{fmt(t)},{l1},{l2},{fmt(c)}\n")
    _emit(args, buf.getvalue(), args.output)
    if args.amplitudes:
        _emit(args, amp_buf.getvalue(), args.amplitudes)
    return 0


def _grid(args) -> dict:
    return dict(
        t_range=(args.t_min, args.t_max),
        theta_range=(args.theta_min, args.theta_max),
        n_t=args.n_t,
        n_theta=args.n_theta,
        refine=not args.no_refine,
    )


def cmd_sweep(args) -> int:
    config = ChainConfig(args.n, 0.0, Boundary(args.boundary))
    scenario = _parse_scenario(args.scenario)
    spec = SweepSpec(config, scenario, _parse_pair(args.pair), **_grid(args))
    periodic = config.boundary is Boundary.RING and isinstance(scenario, IsolatedSpin)
    result = run_sweep(spec, threads=args.threads)
    t, th, c = result.best
    t0, c0 = result.best_theta0
    summary = (
        f"best: t={fmt(t)} theta={fmt(th)} C={fmt(c)}"
        + (f" theta_folded={fmt(theta_representative(th, args.n))}" if periodic else "")
        + f" | theta=0: t={fmt(t0)} C={fmt(c0)}\n"
    )
    if args.output:
        _emit(args, result.to_csv(), args.output)
    out = sys.stderr if args.output == "-" else sys.stdout
    out.write(summary)
    return 0


def cmd_table(args) -> int:
    rows = cmax_table(range(args.n_min, args.n_max + 1), args.scenarios, threads=args.threads, **_grid(args))
    buf = io.StringIO()
    write_table_csv(rows, buf)
    _emit(args, buf.getvalue(), args.output)
    return 0


def cmd_oracle_check(args) -> int:
    if args.max_n > MAX_DENSE_SITES:
        raise ValidationError(f"--max-n {args.max_n} exceeds the dense limit N <= {MAX_DENSE_SITES}")
    if args.min_n < 2 or args.min_n > args.max_n:
        raise UsageError("need 2 <= --min-n <= --max-n")
    cases = run_equivalence_suite(range(args.min_n, args.max_n + 1))
    failed = 0
    for case in cases:
        ok = case.deviation < ORACLE_TOL
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'} {case.label} dC={case.concurrence_dev:.3e} d|alpha|={case.amplitude_dev:.3e}")
    worst = max(cases, key=lambda c: c.deviation)
    print(f"{len(cases) - failed}/{len(cases)} cases below {ORACLE_TOL:g}; worst {worst.deviation:.3e} at {worst.label}")
    return 0 if failed == 0 else 2


def cmd_ac_phase(args) -> int:
    field = AcFieldConfig(args.mu, args.efield, args.link_length, args.geometry)
    print(fmt(ac_phase_per_link(field)))
    return 0


def _add_chain(p, theta: bool = True) -> None:
    p.add_argument("--n", type=int, required=True, help="number of chain sites")
    if theta:
        p.add_argument("--theta", type=float, default=0.0, help="phase per link (rad)")
    p.add_argument("--boundary", choices=[b.value for b in Boundary], default="ring")


def _add_grid(p) -> None:
    p.add_argument("--t-min", type=float, default=0.0)
    p.add_argument("--t-max", type=float, default=200.0)
    p.add_argument("--n-t", type=int, default=4001)
    p.add_argument("--theta-min", type=float, default=-math.pi)
    p.add_argument("--theta-max", type=float, default=math.pi)
    p.add_argument("--n-theta", type=int, default=1441)
    p.add_argument("--no-refine", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="magnon-ring", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--threads", type=int, default=1, help="worker threads for grid sweeps")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrum", help="mode numbers, wave numbers and energies")
    _add_chain(p)
    p.add_argument("--dm-dz", type=float, default=None, help="z-axis DM coupling (ring only)")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("evolve", help="one-magnon amplitudes or pair concurrence over time")
    _add_chain(p)
    p.add_argument("--scenario", default="isolated:1", help="isolated:m or pair:m1,m2")
    p.add_argument("--t", type=float, default=0.0)
    p.add_argument("--times", help="t0:t1:dt (inclusive)")
    p.add_argument("--pair", help="l1,l2 to report concurrence for (0 = isolated spin)")
    p.add_argument("--amplitudes", help="with --pair, also write amplitude rows here")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("sweep", help="concurrence landscape C(t, theta) and its maxima")
    _add_chain(p, theta=False)
    p.add_argument("--scenario", default="isolated:1")
    p.add_argument("--pair", required=True, help="target pair l1,l2")
    _add_grid(p)
    p.add_argument("--output", "-o", help="landscape CSV path ('-' for stdout)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("table", help="C_max with and without phase shift over (N, l)")
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=13)
    p.add_argument("--scenarios", nargs="+", choices=["isolated", "in-chain"], default=["isolated", "in-chain"])
    _add_grid(p)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("oracle-check", help="dense full-space cross-check of the mode-sum formulas")
    p.add_argument("--min-n", type=int, default=2)
    p.add_argument("--max-n", type=int, default=8)
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("ac-phase", help="Aharonov-Casher phase per link (rad)")
    p.add_argument("--mu", type=float, required=True, help="magnetic moment (J/T)")
    p.add_argument("--efield", type=float, required=True, help="electric field (V/m)")
    p.add_argument("--link-length", type=float, required=True, help="site spacing (m)")
    p.add_argument("--geometry", choices=["radial-field", "axial-moment"], default="radial-field")
    p.set_defaults(func=cmd_ac_phase)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"magnon-ring: error: {exc}", file=sys.stderr)
        return 1
    except ValidationError as exc:
        print(f"magnon-ring: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
