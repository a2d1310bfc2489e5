"""Command-line surface: plot-ready delimited text for every pipeline stage.

Subcommands
-----------
density        eps, n_Z, n_C and their gap on an eps grid
milne-grid     long-format Milne density grid (defaults reproduce the
               [0.1, 10] x [0.1, 10] survey)
compare-zeros  smooth counting function vs. empirical zero counts
pinney-check   Pinney trajectories seeded from the closed form, with gaps
dynamics-demo  joint canonical flow + amplitude, invariant vs pseudo-energy

All configuration is explicit flags (no environment variables); identical
invocations write byte-identical files.  Exit codes: 0 success, 1
computation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import BinaryIO, Optional, Sequence

import numpy as np

from . import __version__
from .coulomb_wave import CoulombParams
from .dynamics import (
    PhaseState,
    ermakov_lewis_invariant,
    integrate_coupled,
    oscillator_energy,
)
from .errors import MilnezetaError
from .milne import GridSpec, MilneGrid, integrate_pinney, milne_amplitude, milne_grid
from .zero_density import (
    coulomb_density,
    density_gap,
    riemann_zero_density,
    smooth_zero_count,
)
from .zeros_oracle import ZeroTable, load_zero_table, scan_zeros


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def write_grid(grid: MilneGrid, sink: BinaryIO) -> int:
    """Serialize a grid as long-format `y,eps,n_M` text; returns bytes written.

    Rows are ordered eps-major then y, so the first data line holds
    (y_min, eps_min); 12 significant digits round-trip the values.
    """
    written = sink.write(b"y,eps,n_M\n")
    for i, eps in enumerate(grid.eps_axis):
        row = grid.values[i]
        for j, y in enumerate(grid.y_axis):
            line = f"{_fmt(y)},{_fmt(eps)},{_fmt(row[j])}\n"
            written += sink.write(line.encode("ascii"))
    return written


def _positive(parser: argparse.ArgumentParser, name: str, value: float) -> float:
    if not value > 0.0:
        parser.error(f"{name} must be positive (got {value})")
    return value


def _ordered(parser: argparse.ArgumentParser, lo_name, lo, hi_name, hi) -> None:
    if not lo < hi:
        parser.error(f"expected {lo_name} < {hi_name} (got {lo} >= {hi})")


def _cmd_density(args, parser) -> int:
    _positive(parser, "--eps-min", args.eps_min)
    _ordered(parser, "--eps-min", args.eps_min, "--eps-max", args.eps_max)
    if args.steps < 2:
        parser.error("--steps must be >= 2")
    eps = np.linspace(args.eps_min, args.eps_max, args.steps)
    with open(args.out, "w", newline="") as fh:
        fh.write("eps,n_Z,n_C,gap\n")
        for e in eps:
            fh.write(
                f"{_fmt(e)},{_fmt(riemann_zero_density(e))},"
                f"{_fmt(coulomb_density(e))},{_fmt(density_gap(e))}\n"
            )
    return 0


def _cmd_milne_grid(args, parser) -> int:
    for name in ("--y-min", "--eps-min"):
        _positive(parser, name, getattr(args, name.strip("-").replace("-", "_")))
    _ordered(parser, "--y-min", args.y_min, "--y-max", args.y_max)
    _ordered(parser, "--eps-min", args.eps_min, "--eps-max", args.eps_max)
    if args.y_steps < 2 or args.eps_steps < 2:
        parser.error("grid step counts must be >= 2")
    _positive(parser, "--k", args.k)
    spec = GridSpec(
        y_min=args.y_min, y_max=args.y_max, y_count=args.y_steps,
        eps_min=args.eps_min, eps_max=args.eps_max, eps_count=args.eps_steps,
    )
    grid = milne_grid(spec, k=args.k)
    with open(args.out, "wb") as fh:
        write_grid(grid, fh)
    if grid.skipped_eps:
        print(
            "skipped degenerate-alpha rows at eps = "
            + ", ".join(_fmt(e) for e in grid.skipped_eps),
            file=sys.stderr,
        )
    return 0


def _load_table(args, parser) -> ZeroTable:
    if args.zeros is not None:
        with open(args.zeros, "rb") as fh:
            return load_zero_table(fh)
    return scan_zeros(max(args.probes), args.grid_step)


def _cmd_compare_zeros(args, parser) -> int:
    if not args.probes:
        parser.error("need at least one probe ordinate")
    for T in args.probes:
        _positive(parser, "--probes", T)
    args.probes = sorted(args.probes)
    table = _load_table(args, parser)
    with open(args.out, "w", newline="") as fh:
        fh.write("T,smooth_count,empirical_count,difference\n")
        for T in args.probes:
            smooth = smooth_zero_count(T)
            empirical = table.count_below(T)
            fh.write(
                f"{_fmt(T)},{_fmt(smooth)},{empirical},{_fmt(smooth - empirical)}\n"
            )
    return 0


def _cmd_pinney_check(args, parser) -> int:
    _positive(parser, "--k", args.k)
    _positive(parser, "--y-end", args.y_end)
    if args.samples < 2:
        parser.error("--samples must be >= 2")
    params = CoulombParams(eps=args.eps, k=args.k)
    with open(args.out, "w", newline="") as fh:
        fh.write("y0,y,rho_closed,rho_pinney,rel_gap\n")
        for y0 in args.y0:
            if not 0.0 < y0 < args.y_end:
                parser.error(f"--y0 values must lie in (0, --y-end); got {y0}")
            seed = milne_amplitude(y0, params)
            grid = np.linspace(y0, args.y_end, args.samples)
            trajectory = integrate_pinney(
                params, y0, seed.rho, seed.drho, args.y_end,
                rtol=args.rtol, y_eval=grid,
            )
            for sample in trajectory:
                closed = milne_amplitude(sample.y, params)
                gap = abs(sample.rho - closed.rho) / closed.rho
                fh.write(
                    f"{_fmt(y0)},{_fmt(sample.y)},{_fmt(closed.rho)},"
                    f"{_fmt(sample.rho)},{_fmt(gap)}\n"
                )
    return 0


def _cmd_dynamics_demo(args, parser) -> int:
    _positive(parser, "--k", args.k)
    _positive(parser, "--y0", args.y0)
    _positive(parser, "--y-end", args.y_end)
    if args.samples < 2:
        parser.error("--samples must be >= 2")
    if args.y0 >= args.y_end:
        parser.error("--y0 must be below --y-end")
    params = CoulombParams(eps=args.eps, k=args.k)
    seed = milne_amplitude(args.y0, params)
    q_const = params.k * params.k
    grid = np.linspace(args.y0, args.y_end, args.samples)
    pairs = integrate_coupled(
        PhaseState(y=args.y0, q=args.q0, p=args.p0),
        seed.rho, seed.drho, params, args.y_end,
        q_const=q_const, rtol=args.rtol, y_eval=grid,
    )
    with open(args.out, "w", newline="") as fh:
        fh.write("y,q,p,rho,drho,invariant,pseudo_energy\n")
        for state, amp in pairs:
            inv = ermakov_lewis_invariant(state, amp, q_const)
            energy = oscillator_energy(state, params)
            fh.write(
                f"{_fmt(state.y)},{_fmt(state.q)},{_fmt(state.p)},"
                f"{_fmt(amp.rho)},{_fmt(amp.drho)},{_fmt(inv)},{_fmt(energy)}\n"
            )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="milnezeta",
        description="Critical-line zero densities and Milne amplitude tools",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    d = sub.add_parser("density", help="tabulate n_Z, n_C and their gap")
    d.add_argument("--eps-min", type=float, default=0.1)
    d.add_argument("--eps-max", type=float, default=10.0)
    d.add_argument("--steps", type=int, default=100)
    d.add_argument("--out", default="density.csv")
    d.set_defaults(func=_cmd_density)

    g = sub.add_parser("milne-grid", help="emit the Milne density grid")
    g.add_argument("--y-min", type=float, default=0.1)
    g.add_argument("--y-max", type=float, default=10.0)
    g.add_argument("--y-steps", type=int, default=100)
    g.add_argument("--eps-min", type=float, default=0.1)
    g.add_argument("--eps-max", type=float, default=10.0)
    g.add_argument("--eps-steps", type=int, default=100)
    g.add_argument("--k", type=float, default=1.0)
    g.add_argument("--out", default="milne_grid.csv")
    g.set_defaults(func=_cmd_milne_grid)

    c = sub.add_parser("compare-zeros", help="smooth vs empirical zero counts")
    c.add_argument("--probes", type=float, nargs="+", default=[20.0, 50.0, 100.0])
    c.add_argument("--zeros", help="zero-table file; omitted => scan")
    c.add_argument("--grid-step", type=float, default=0.01)
    c.add_argument("--out", default="zero_report.csv")
    c.set_defaults(func=_cmd_compare_zeros)

    pc = sub.add_parser("pinney-check", help="Pinney trajectories vs closed form")
    pc.add_argument("--eps", type=float, default=2.0)
    pc.add_argument("--k", type=float, default=1.0)
    pc.add_argument("--y0", type=float, nargs="+", default=[2.0, 4.0, 8.0])
    pc.add_argument("--y-end", type=float, default=10.0)
    pc.add_argument("--samples", type=int, default=200)
    pc.add_argument("--rtol", type=float, default=1e-10)
    pc.add_argument("--out", default="pinney_check.csv")
    pc.set_defaults(func=_cmd_pinney_check)

    dd = sub.add_parser("dynamics-demo", help="joint flow + amplitude trajectory")
    dd.add_argument("--eps", type=float, default=2.0)
    dd.add_argument("--k", type=float, default=1.0)
    dd.add_argument("--q0", type=float, default=1.0)
    dd.add_argument("--p0", type=float, default=0.0)
    dd.add_argument("--y0", type=float, default=1.0)
    dd.add_argument("--y-end", type=float, default=10.0)
    dd.add_argument("--samples", type=int, default=200)
    dd.add_argument("--rtol", type=float, default=1e-10)
    dd.add_argument("--out", default="dynamics_demo.csv")
    dd.set_defaults(func=_cmd_dynamics_demo)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except MilnezetaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
