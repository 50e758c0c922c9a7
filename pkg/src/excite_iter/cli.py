"""Command-line front end.

Runs the two benchmark cases, persists ground states for reuse, and emits
the convergence summary plus the curve data (chi iterates, wave functions)
as round-trip-exact CSV.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import kernels, references, soluble
from .errors import ExciteIterError
from .excite import TrialFunction, excited_wavefunction, run
from .groundstate import (Grid, GroundState, default_x_max, load_groundstate,
                          save_groundstate, solve_groundstate_numeric,
                          soluble_groundstate)
from .potential import Quartic


@dataclass(frozen=True)
class RunConfig:
    case: str                      # "soluble" | "quartic"
    delta: float | None = None
    g: float | None = None
    anchor_x0: float = 1.0
    trial: str | None = None       # None: per-case default
    x_max: float | None = None
    n_points: int = 16001
    max_iters: int = 8
    tol: float = 1e-9
    out_dir: str = "."
    gs_cache: str | None = None

    def __post_init__(self):
        if self.case == "soluble":
            if self.delta is None or self.g is not None:
                raise ValueError("soluble case takes --delta only")
        elif self.case == "quartic":
            if self.g is None or self.delta is not None:
                raise ValueError("quartic case takes --g only")
        else:
            raise ValueError(f"unknown case {self.case!r}")


def _fmt(v: float) -> str:
    return format(v, ".17g")


def _write_csv(path: str, header: list[str], columns: list[np.ndarray]):
    with open(path, "w", newline="\n") as f:
        f.write(",".join(header) + "\n")
        for row in zip(*columns):
            f.write(",".join(_fmt(v) for v in row) + "\n")


def _obtain_groundstate(config: RunConfig) -> tuple[GroundState, bool]:
    """Returns (ground state, loaded_from_cache)."""
    cache = config.gs_cache
    if cache and os.path.exists(cache):
        return load_groundstate(cache), True
    if config.case == "soluble":
        grid = Grid(x_max=config.x_max if config.x_max else 1.0,
                    n_points=config.n_points)
        gs = soluble_groundstate(config.delta, grid)
    else:
        x_max = config.x_max if config.x_max else default_x_max(config.g)
        grid = Grid(x_max=x_max, n_points=config.n_points)
        gs = solve_groundstate_numeric(Quartic(config.g), grid)
    if cache:
        save_groundstate(gs, cache)
    return gs, False


def run_case(config: RunConfig) -> dict:
    """Execute one configured run and write all artifacts to out_dir.

    Returns the summary dict (also written as summary.json).
    """
    os.makedirs(config.out_dir, exist_ok=True)
    gs, cached = _obtain_groundstate(config)

    trial_kind = config.trial or (
        "linear" if config.case == "soluble" else "saturating")
    trial = TrialFunction(trial_kind)
    report = run(gs, trial, anchor_x0=config.anchor_x0,
                 max_iters=config.max_iters, tol=config.tol)

    summary = {
        "case": config.case,
        "delta": config.delta,
        "g": config.g,
        "anchor_x0": config.anchor_x0,
        "trial": trial_kind,
        "grid": gs.grid.to_dict(),
        "max_iters": config.max_iters,
        "tol": config.tol,
        "gs_cache": config.gs_cache,
        "kernel_backend": kernels.BACKEND,
        "e_gd": gs.e_gd,
        "eps_sequence": report.eps_sequence,
        "delta_sequence": report.delta_sequence,
        "orth_residuals": report.orth_residuals,
        "status": report.status,
        "eps": report.eps,
        "e_odd": report.e_odd,
        "e_mean": report.e_mean,
    }
    if config.case == "soluble":
        summary["eps_exact"] = soluble.exact_epsilon(config.delta)
        summary["eps_1_closed_form"] = soluble.epsilon1_closed_form(
            config.delta)
        summary["eps_series"] = {
            str(n): soluble.epsilon_series(config.delta, n)
            for n in (1, 2, 3)}
        # the exact chi column is rescaled so both curves share the anchor
        summary["chi_exact_rescaled_to_anchor"] = True
    if config.case == "quartic" and config.g == 8.0:
        summary["e_asymp"] = references.E_ASYMP_G8
        summary["eps_asymp"] = references.EPS_ASYMP_G8

    with open(os.path.join(config.out_dir, "summary.json"), "w") as f:
        json.dump(summary, f, indent=2, sort_keys=True)
        f.write("\n")

    x = gs.grid.nodes()

    # chi iterates (the curves behind the convergence figures)
    header = ["x"] + [f"chi_{s.n}" for s in report.states]
    columns = [x] + [s.chi for s in report.states]
    if config.case == "soluble":
        chi_ex = np.array([soluble.exact_chi(config.delta, xi) for xi in x])
        i0 = gs.grid.index_of(config.anchor_x0)
        chi0 = report.states[0].chi
        chi_ex *= chi0[i0] / chi_ex[i0]
        header.append("chi_exact")
        columns.append(chi_ex)
    _write_csv(os.path.join(config.out_dir, "chi_curves.csv"),
               header, columns)

    # ground and excited wave functions
    with np.errstate(under="ignore"):
        psi_gd = np.exp(-gs.s)
    psi_ex = excited_wavefunction(gs, report.states[-1].chi)
    _write_csv(os.path.join(config.out_dir, "wavefunctions.csv"),
               ["x", "psi_gd", "psi_ex"], [x, psi_gd, psi_ex])

    if not cached:
        save_groundstate(gs, os.path.join(config.out_dir, "groundstate.csv"))
    return summary


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="excite-iter",
        description="Iterative solver for the lowest excited state of "
                    "symmetric 1D Schroedinger problems")
    sub = parser.add_subparsers(dest="command", required=True)

    for case in ("soluble", "quartic"):
        p = sub.add_parser(case, help=f"run the {case} benchmark")
        if case == "soluble":
            p.add_argument("--delta", type=float, required=True,
                           help="spike parameter in (0, pi/2)")
        else:
            p.add_argument("--g", type=float, required=True,
                           help="quartic coupling, positive")
        p.add_argument("--anchor", type=float, default=1.0,
                       help="fixed point x0 for the normalization")
        p.add_argument("--trial", choices=("linear", "saturating"),
                       default=None,
                       help="seed function (default: linear for soluble, "
                            "saturating for quartic)")
        p.add_argument("--iters", type=int, default=8,
                       help="maximum number of iterations")
        p.add_argument("--tol", type=float, default=1e-9,
                       help="relative stopping tolerance on eps")
        p.add_argument("--xmax", type=float, default=None,
                       help="domain edge (default: 1 for soluble, "
                            "weight-suppression rule for quartic)")
        p.add_argument("--points", type=int, default=16001,
                       help="grid node count (odd)")
        p.add_argument("--out", default=".", help="output directory")
        p.add_argument("--gs-cache", default=None,
                       help="ground-state CSV cache path (loaded if "
                            "present, written otherwise)")

    c = sub.add_parser("compare",
                       help="gate a summary against a reference table")
    c.add_argument("--summary", required=True, help="path to summary.json")
    c.add_argument("--ref", required=True,
                   choices=sorted(references.REFERENCES),
                   help="reference table tag")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "compare":
            text, ok = references.compare_report(args.summary, args.ref)
            print(text)
            return 0 if ok else 1
        config = RunConfig(
            case=args.command,
            delta=getattr(args, "delta", None),
            g=getattr(args, "g", None),
            anchor_x0=args.anchor,
            trial=args.trial,
            x_max=args.xmax,
            n_points=args.points,
            max_iters=args.iters,
            tol=args.tol,
            out_dir=args.out,
            gs_cache=args.gs_cache,
        )
        summary = run_case(config)
    except (ExciteIterError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    eps_str = ", ".join(_fmt(e) for e in summary["eps_sequence"])
    print(f"e_gd = {_fmt(summary['e_gd'])}")
    print(f"eps sequence: {eps_str}")
    print(f"status = {summary['status']}, e_odd = {_fmt(summary['e_odd'])}, "
          f"e_mean = {_fmt(summary['e_mean'])}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
