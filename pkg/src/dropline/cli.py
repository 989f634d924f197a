"""Command-line front end: evaluate, solve, sweep, excess, compare-bc, verify.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
CSV output uses 12 significant digits with a dot decimal separator; JSON
carries full precision.  Every command is deterministic given its flags
(including --seed).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import exact, model, verify
from .model import BoundaryCondition, ModelParams


@dataclass
class RunConfig:
    command: str
    params: ModelParams | None
    bc: BoundaryCondition
    input_path: str | None
    output: str | None
    fmt: str
    grid: tuple[float, float, int] | None
    q_list: list[float]
    ell: float | None
    seed: int
    plot: str | None
    inject_perturbation: float


def _fmt12(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, str):
        return v
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return f"{float(v):.12g}"


def _csv(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt12(v) for v in row))
    return "\n".join(lines) + "\n"


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_default(v):
    if isinstance(v, (np.integer, np.floating, np.bool_)):
        return v.item()
    raise TypeError(f"not JSON serializable: {type(v)}")


def _emit_json(obj, cfg: RunConfig) -> None:
    _emit(json.dumps(obj, indent=2, default=_json_default) + "\n", cfg)


def _parse_grid(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid must look like Lmin:Lmax:steps, got {text!r}")
    lmin, lmax, steps = float(parts[0]), float(parts[1]), int(parts[2])
    if not (0 < lmin <= lmax):
        raise ValueError("grid bounds must be positive and ordered")
    if steps < 1:
        raise ValueError("grid needs at least one step")
    return lmin, lmax, steps


def cmd_energy(cfg: RunConfig) -> int:
    if not cfg.input_path:
        raise ValueError("energy requires --input FILE with an interval set")
    with open(cfg.input_path, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    E = model.interval_set_from_json(obj)
    bd = model.energy(E, cfg.params, cfg.bc)
    if cfg.fmt == "csv":
        header = ["perimeter", "self_term", "background_term", "moment_correction", "total"]
        _emit(_csv(header, [[getattr(bd, h) for h in header]]), cfg)
    else:
        _emit_json(bd.to_dict(), cfg)
    return 0


def cmd_solve(cfg: RunConfig) -> int:
    p = cfg.params
    if cfg.ell is not None and abs(cfg.ell - p.rho * p.L) > 1e-12 * p.L:
        # fixed non-neutral mass: solved through the excess-charge problem
        res = exact.excess_ground_state(p, cfg.ell - p.rho * p.L)
        _emit_json(res.to_dict(), cfg)
        return 0
    gs = exact.ground_state(p, cfg.bc)
    if cfg.fmt == "csv":
        header = ["bc", "N", "energy", "a_min", "a_max", "all_translations", "base_endpoints"]
        rows = []
        for fam in gs.families:
            eps = ";".join(f"{l:.12g}:{r:.12g}" for l, r in fam.base.endpoints())
            rows.append([gs.bc.value, fam.n_intervals, gs.energy,
                         fam.a_min, fam.a_max, fam.all_translations, eps])
        _emit(_csv(header, rows), cfg)
    else:
        _emit_json(gs.to_dict(), cfg)
    return 0


def cmd_sweep(cfg: RunConfig) -> int:
    if cfg.grid is None:
        raise ValueError("sweep requires --grid Lmin:Lmax:steps")
    p = cfg.params
    lmin, lmax, steps = cfg.grid
    Ls = np.linspace(lmin, lmax, steps)
    asym = exact.asymptotics(p)
    e, n = exact.ground_energy_batch(p.gamma, p.rho, Ls)
    rows = []
    for L, ei, ni in zip(Ls, e, n):
        per_len = ei / L
        rows.append(
            {
                "L": float(L),
                "e": float(ei),
                "e_per_L": float(per_len),
                "N": int(ni),
                "remainder": float(L * L * (per_len - asym.e_inf)),
            }
        )
    if cfg.plot:
        from . import plots

        plots.render_sweep_figure(rows, p, asym, cfg.plot)
    if cfg.fmt == "json":
        _emit_json({"params": _params_dict(p), "asymptotics": asym.to_dict(), "rows": rows}, cfg)
    else:
        header = ["L", "e", "e_per_L", "N", "remainder"]
        _emit(_csv(header, [[r[h] for h in header] for r in rows]), cfg)
    return 0


def cmd_excess(cfg: RunConfig) -> int:
    if not cfg.q_list:
        raise ValueError("excess requires at least one --Q value")
    p = cfg.params
    asym = exact.asymptotics(p)
    rows = []
    for Q in cfg.q_list:
        res = exact.excess_ground_state(p, Q)
        rows.append(
            {
                "Q": Q,
                "lower_bound": res.lower_bound,
                "exact": res.exact,
                "N": res.n_intervals,
                "limit_prediction": asym.e_inf - p.gamma * Q * Q / 4.0,
            }
        )
    if cfg.plot:
        from . import plots

        plots.render_excess_figure(rows, p, asym, cfg.plot)
    if cfg.fmt == "json":
        _emit_json({"params": _params_dict(p), "rows": rows}, cfg)
    else:
        header = ["Q", "lower_bound", "exact", "N", "limit_prediction"]
        _emit(_csv(header, [[r[h] for h in header] for r in rows]), cfg)
    return 0


def cmd_compare_bc(cfg: RunConfig) -> int:
    p = cfg.params
    energies = {}
    optimal = None
    for bc in (BoundaryCondition.NEUMANN, BoundaryCondition.DIRICHLET, BoundaryCondition.PERIODIC):
        gs = exact.ground_state(p, bc)
        optimal = list(gs.optimal_Ns)
        fam = gs.families[0]
        members = [fam.base]
        if bc is BoundaryCondition.DIRICHLET:
            members.append(fam.member(0.5 * fam.a_max))
        elif bc is BoundaryCondition.PERIODIC:
            members.append(fam.member(0.37 * p.L))
        vals = [model.energy(E, p, bc).total for E in members]
        energies[bc.value] = vals[0]
        energies.setdefault("_members", []).extend(vals)
    members = energies.pop("_members")
    ref = members[0]
    max_rel = max(abs(v - ref) / abs(ref) for v in members)
    report = {
        "params": _params_dict(p),
        "optimal_Ns": optimal,
        "energies": energies,
        "max_pairwise_rel_diff": max_rel,
    }
    if cfg.fmt == "csv":
        header = ["neumann", "dirichlet", "periodic", "max_pairwise_rel_diff"]
        _emit(_csv(header, [[energies["neumann"], energies["dirichlet"], energies["periodic"], max_rel]]), cfg)
    else:
        _emit_json(report, cfg)
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    suite_cfg = verify.SuiteConfig(seed=cfg.seed, inject_perturbation=cfg.inject_perturbation)
    summary = verify.run_suite(suite_cfg)
    for c in summary.checks:
        status = "PASS" if c.passed else "FAIL"
        print(f"{status} {c.name}: worst residual {c.worst:.3e}", file=sys.stderr)
    _emit_json(summary.to_dict(), cfg)
    return 0 if summary.all_passed else 1


def _params_dict(p: ModelParams) -> dict:
    return {"gamma": p.gamma, "rho": p.rho, "L": p.L}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dropline",
        description="Exact solver and verifier for the one-dimensional liquid drop energy.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, needs_params=True):
        if needs_params:
            sp.add_argument("--gamma", type=float, default=1.0, help="interaction strength (> 0)")
            sp.add_argument("--rho", type=float, default=0.5, help="background density in (0, 1)")
            sp.add_argument("--L", type=float, default=12.0, help="box length (> 0)")
        sp.add_argument("--bc", choices=["neumann", "dirichlet", "periodic"], default="neumann")
        sp.add_argument("--format", dest="fmt", choices=["json", "csv"], default=None)
        sp.add_argument("--out", default=None, help="write output to this file instead of stdout")
        sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("energy", help="evaluate the energy of an interval set from JSON")
    add_common(sp)
    sp.add_argument("--input", required=True, help="interval set JSON file")

    sp = sub.add_parser("solve", help="exact neutral ground state (or fixed mass via --ell)")
    add_common(sp)
    sp.add_argument("--ell", type=float, default=None, help="total mass (defaults to the neutral rho*L)")

    sp = sub.add_parser("sweep", help="ground energy over a grid of box lengths")
    add_common(sp)
    sp.add_argument("--grid", required=True, help="Lmin:Lmax:steps")
    sp.add_argument("--plot", default=None, help="also render a figure to this file")

    sp = sub.add_parser("excess", help="excess-charge ground states for a list of Q")
    add_common(sp)
    sp.add_argument("--Q", action="append", default=None, help="excess charge (repeatable, or comma separated)")
    sp.add_argument("--plot", default=None, help="also render a figure to this file")

    sp = sub.add_parser("compare-bc", help="evaluated ground energies under all three kernels")
    add_common(sp)

    sp = sub.add_parser("verify", help="run the full property and oracle suite")
    add_common(sp, needs_params=False)
    sp.add_argument(
        "--inject-perturbation",
        type=float,
        default=0.0,
        help="test harness: offset added to closed-form energies (must make verify fail)",
    )

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    params = None
    if hasattr(args, "gamma"):
        params = ModelParams(gamma=args.gamma, rho=args.rho, L=args.L)
    q_list: list[float] = []
    if getattr(args, "Q", None):
        for chunk in args.Q:
            q_list.extend(float(tok) for tok in str(chunk).split(",") if tok)
    grid = _parse_grid(args.grid) if getattr(args, "grid", None) else None
    default_fmt = "csv" if args.command in ("sweep", "excess") else "json"
    return RunConfig(
        command=args.command,
        params=params,
        bc=BoundaryCondition.parse(getattr(args, "bc", "neumann")),
        input_path=getattr(args, "input", None),
        output=args.out,
        fmt=args.fmt or default_fmt,
        grid=grid,
        q_list=q_list,
        ell=getattr(args, "ell", None),
        seed=args.seed,
        plot=getattr(args, "plot", None),
        inject_perturbation=getattr(args, "inject_perturbation", 0.0),
    )


COMMANDS = {
    "energy": cmd_energy,
    "solve": cmd_solve,
    "sweep": cmd_sweep,
    "excess": cmd_excess,
    "compare-bc": cmd_compare_bc,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        return COMMANDS[cfg.command](cfg)
    except (ValueError, OSError, exact.FitError, exact.MassError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
