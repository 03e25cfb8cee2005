"""Command-line interface.

Subcommands cover the full workflow: solve for classical and risk-averse
fractions, dump coefficient tables, evaluate exact expectation curves,
run seeded Monte Carlo experiments, and regenerate the CSV inputs behind
the standard figures.  All file output is plain CSV with dot decimals;
stdout numbers print with a configurable number of significant digits
(default 6).  Exit codes: 0 success, 2 validation/input errors, 3 when a
requested method cannot handle the instance (caps, scaling).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import coefficients as coeff
from . import io as dio
from .errors import MethodError
from .model import TradeDistribution, expectation, log_growth_rate
from .optimizer import WeightedObjective, derivative, kelly_fraction, solve_optimal_f
from .outcome_space import exact_expectation_curve
from .risk_averse import risk_averse_fraction, sweep
from .simulator import SimulationConfig, drawdown_histogram, simulate

__all__ = ["main", "build_parser"]


def _fmt(args: argparse.Namespace):
    digits = getattr(args, "precision", 6)
    return lambda x: format(float(x), f".{digits}g")


def _out_dir(args: argparse.Namespace) -> Path:
    raw = getattr(args, "out_dir", None) or os.environ.get("OPTIMALF_OUT_DIR", ".")
    path = Path(raw)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _f_grid(f_min: float, f_max: float, step: float) -> list[float]:
    if step <= 0:
        raise ValueError("f-step must be positive")
    if not 0.0 <= f_min <= f_max < 1.0:
        raise ValueError("f-grid must satisfy 0 <= min <= max < 1")
    count = int((f_max - f_min) / step + 1e-9) + 1
    return [round(f_min + i * step, 12) for i in range(count)]


def _parse_m_values(spec: str) -> list[int]:
    """Horizon lists: ``3``, ``2..15``, or comma combinations thereof."""
    out: list[int] = []
    for part in spec.split(","):
        part = part.strip()
        if ".." in part:
            lo_s, hi_s = part.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
            if lo > hi:
                raise ValueError(f"bad horizon range {part!r}")
            out.extend(range(lo, hi + 1))
        elif part:
            out.append(int(part))
    if not out or any(m < 1 for m in out):
        raise ValueError(f"bad horizon spec {spec!r}")
    return out


# ---------------------------------------------------------------- commands


def _cmd_optimal_f(args: argparse.Namespace) -> int:
    fmt = _fmt(args)
    dist = dio.load_distribution(args.dist)
    result = solve_optimal_f(WeightedObjective.from_distribution(dist), tol=args.tol)
    print(f"f_opt = {fmt(result.fraction)}")
    print(f"objective = {fmt(result.objective_value)}")
    print(f"status = {result.status}")
    print(f"expected_trade = {fmt(expectation(dist))}")
    return 0


def _cmd_kelly(args: argparse.Namespace) -> int:
    fmt = _fmt(args)
    raw = kelly_fraction(args.p, args.b)
    print(f"kelly_raw = {fmt(raw)}")
    print(f"kelly = {fmt(max(raw, 0.0))}")
    return 0


def _cmd_coefficients(args: argparse.Namespace) -> int:
    dist = dio.load_distribution(args.dist)
    cs = coeff.coefficient_set(dist, args.M, method=args.method)
    lam = cs.sum_drawdown()
    run = cs.sum_runup()
    dio.write_csv(
        sys.stdout,
        ["n", "U", "D", "sumLambda", "sumR"],
        (
            (n + 1, cs.up[n], cs.down[n], lam[n], run[n])
            for n in range(cs.n_trades)
        ),
        digits=args.digits,
    )
    if args.per_ell:
        print()
        dio.write_csv(
            sys.stdout,
            ["ell", "n", "Lambda", "R"],
            (
                (ell, n + 1, cs.drawdown[ell][n], cs.runup[ell][n])
                for ell in range(cs.m_draws + 1)
                for n in range(cs.n_trades)
            ),
            digits=args.digits,
        )
    return 0


def _exact_curve_rows(dist, m_draws, grid, with_approx):
    records = exact_expectation_curve(dist, m_draws, grid)
    header = ["f", "E_U", "E_D", "E_Dcur", "E_R", "E_Z"]
    if with_approx:
        cs = coeff.coefficient_set(dist, m_draws)
        header += ["u_approx", "d_approx", "dcur_approx", "r_approx"]
    rows = []
    for f, rec in zip(grid, records):
        row = [f, rec.up, rec.down, rec.drawdown, rec.runup, rec.log_twr]
        if with_approx:
            sm = coeff.smallf_expectations(cs, dist, f)
            row += [sm.up, sm.down, sm.drawdown, sm.runup]
        rows.append(row)
    return header, rows


def _cmd_exact_curves(args: argparse.Namespace) -> int:
    dist = dio.load_distribution(args.dist)
    grid = _f_grid(args.f_min, args.f_max, args.f_step)
    header, rows = _exact_curve_rows(dist, args.M, grid, args.with_approx)
    target = args.out if args.out else sys.stdout
    dio.write_csv(target, header, rows, digits=args.digits)
    return 0


def _cmd_risk_averse(args: argparse.Namespace) -> int:
    fmt = _fmt(args)
    dist = dio.load_distribution(args.dist)
    result = risk_averse_fraction(dist, args.M, method=args.method)
    print(f"f_risk_averse = {fmt(result.fraction)}")
    print(f"f_opt = {fmt(result.classical.fraction)}")
    print(f"status = {result.status}")
    print("q = [" + ", ".join(fmt(w) for w in result.weights) + "]")
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    fmt = _fmt(args)
    dist = dio.load_distribution(args.dist)
    m_values = _parse_m_values(args.M)
    out = sweep(dist, m_values, method=args.method)
    n = dist.n_trades
    header = ["M", "f_riskaverse", "f_opt"] + [f"q{i + 1}" for i in range(n)]
    rows = (
        [r.m_draws, r.fraction, r.classical.fraction] + [w for w in r.weights]
        for r in out.results
    )
    target = args.out if args.out else sys.stdout
    dio.write_csv(target, header, rows, digits=args.digits)
    print(
        f"minimum f_riskaverse = {fmt(out.min_fraction)} at M = {out.argmin_m}",
        file=sys.stderr,
    )
    return 0


def _write_equity_files(paths, out_dir: Path, stem: str, digits: int) -> None:
    multi = len(paths) > 1
    for path in paths:
        name = f"{stem}_r{path.run:03d}.csv" if multi else f"{stem}.csv"
        dio.write_csv(
            out_dir / name,
            ["t", "capital", "log_equity", "dd"],
            (
                (t, path.capital[t], path.log_equity[t], path.drawdown[t])
                for t in range(len(path.capital))
            ),
            digits=digits,
        )


def _write_hist_file(paths, out_path: Path, digits: int) -> None:
    edges, freq = drawdown_histogram(paths)
    dio.write_csv(
        out_path,
        ["bin", "frequency"],
        ((edges[i], freq[i]) for i in range(len(freq))),
        digits=digits,
    )


def _cmd_simulate(args: argparse.Namespace) -> int:
    fmt = _fmt(args)
    dist = dio.load_distribution(args.dist)
    config = SimulationConfig(
        dist=dist,
        fraction=args.f,
        steps=args.steps,
        starting_capital=args.capital,
        seed=args.seed,
        runs=args.runs,
    )
    paths = simulate(config)
    out_dir = _out_dir(args)
    _write_equity_files(paths, out_dir, "equity", args.digits)
    _write_hist_file(paths, out_dir / "dd_hist.csv", args.digits)
    for path in paths:
        print(
            f"run {path.run}: terminal_log_equity = {fmt(path.log_equity[-1])}, "
            f"max_drawdown = {fmt(path.max_drawdown)}"
        )
    print(f"expected_log_increment = {fmt(log_growth_rate(dist, args.f))}")
    return 0


def _cmd_figures(args: argparse.Namespace) -> int:
    fmt = _fmt(args)
    dist = dio.load_distribution(args.dist)
    out_dir = _out_dir(args)
    digits = args.digits
    grid = _f_grid(0.0, 0.99, 0.01)

    # Derivative of the growth objective; its zero is the classical f_opt.
    obj = WeightedObjective.from_distribution(dist)
    dio.write_csv(
        out_dir / "g_curve.csv",
        ["f", "g"],
        ((f, derivative(obj, f)) for f in grid),
        digits=digits,
    )

    # Exact curves at the small horizon, with the small-f approximations.
    m_small = args.M
    header, rows = _exact_curve_rows(dist, m_small, grid, with_approx=True)
    dio.write_csv(out_dir / f"curves_m{m_small}.csv", header, rows, digits=digits)

    # Combined risk-averse objective, per draw so horizons share a scale
    # (dividing by M moves no maximizer): exact at the small horizon, the
    # weight-based approximation there and at a large horizon.
    cs_small = coeff.coefficient_set(dist, m_small)
    cs_large = coeff.coefficient_set(dist, args.M_large, method="dp")
    records = exact_expectation_curve(dist, m_small, grid)
    obj_rows = []
    for f, rec in zip(grid, records):
        sm_small = coeff.smallf_expectations(cs_small, dist, f)
        sm_large = coeff.smallf_expectations(cs_large, dist, f)
        obj_rows.append(
            [
                f,
                (rec.up + rec.drawdown) / m_small,
                (sm_small.up + sm_small.drawdown) / m_small,
                (sm_large.up + sm_large.drawdown) / args.M_large,
            ]
        )
    dio.write_csv(
        out_dir / f"objective_m{m_small}_m{args.M_large}.csv",
        ["f", f"exact_m{m_small}", f"approx_m{m_small}", f"approx_m{args.M_large}"],
        obj_rows,
        digits=digits,
    )

    # One short illustration path: equity curve with peak and drawdown.
    demo = simulate(
        SimulationConfig(
            dist=dist, fraction=args.f_illustration, steps=60, seed=args.seed, runs=1
        )
    )[0]
    dio.write_csv(
        out_dir / "sample_path.csv",
        ["t", "twr", "log_twr", "running_max", "dd"],
        (
            (
                t,
                demo.capital[t] / demo.capital[0],
                demo.log_equity[t] - demo.log_equity[0],
                demo.running_max[t] / demo.capital[0],
                demo.drawdown[t],
            )
            for t in range(len(demo.capital))
        ),
        digits=digits,
    )

    # Equity/blood/histogram data at the classical vs conservative fraction.
    f_kelly = solve_optimal_f(obj).fraction
    swept = sweep(dist, _parse_m_values(args.sweep_M))
    f_defensive = round(swept.min_fraction, 2)
    print(f"f_opt = {fmt(f_kelly)}")
    print(
        f"sweep minimum = {fmt(swept.min_fraction)} at M = {swept.argmin_m}; "
        f"simulating defensive f = {fmt(f_defensive)}"
    )
    for tag, f_used in (("kelly", f_kelly), ("riskaverse", f_defensive)):
        paths = simulate(
            SimulationConfig(
                dist=dist,
                fraction=f_used,
                steps=args.steps,
                seed=args.seed,
                runs=args.runs,
            )
        )
        _write_equity_files(paths, out_dir, f"equity_{tag}", digits)
        _write_hist_file(paths, out_dir / f"dd_hist_{tag}.csv", digits)
    return 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="optimalf",
        description="Fixed-fraction position sizing: growth-optimal and "
        "drawdown-averse fractions, exact outcome evaluation, Monte Carlo.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--precision",
        type=int,
        default=6,
        help="significant digits for printed numbers (default 6)",
    )
    common.add_argument(
        "--digits",
        type=int,
        default=12,
        help="significant digits in CSV cells (default 12)",
    )

    dist_arg = argparse.ArgumentParser(add_help=False)
    dist_arg.add_argument(
        "--dist",
        required=True,
        help="trade distribution file (CSV 'trade,prob'/'trade,count' or JSON)",
    )

    p = sub.add_parser(
        "optimal-f",
        parents=[common, dist_arg],
        help="classical growth-optimal fraction",
    )
    p.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(func=_cmd_optimal_f)

    p = sub.add_parser(
        "kelly", parents=[common], help="two-outcome closed-form fraction"
    )
    p.add_argument("--p", type=float, required=True, help="win probability")
    p.add_argument("--b", type=float, required=True, help="win payout per unit staked")
    p.set_defaults(func=_cmd_kelly)

    p = sub.add_parser(
        "coefficients",
        parents=[common, dist_arg],
        help="small-f weight tables (CSV n,U,D,sumLambda,sumR)",
    )
    p.add_argument("--M", type=int, required=True, help="number of draws")
    p.add_argument(
        "--method", choices=["auto", "enumeration", "dp"], default="auto"
    )
    p.add_argument(
        "--per-ell",
        action="store_true",
        help="also print the full per-peak-position weight matrices",
    )
    p.set_defaults(func=_cmd_coefficients)

    p = sub.add_parser(
        "exact-curves",
        parents=[common, dist_arg],
        help="exact expectation curves (CSV f,E_U,E_D,E_Dcur,E_R,E_Z)",
    )
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--f-min", type=float, default=0.0)
    p.add_argument("--f-max", type=float, default=0.99)
    p.add_argument("--f-step", type=float, default=0.01)
    p.add_argument(
        "--with-approx",
        action="store_true",
        help="append the small-f approximation columns",
    )
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.set_defaults(func=_cmd_exact_curves)

    p = sub.add_parser(
        "risk-averse",
        parents=[common, dist_arg],
        help="drawdown-penalized optimal fraction at one horizon",
    )
    p.add_argument("--M", type=int, required=True)
    p.add_argument(
        "--method", choices=["auto", "enumeration", "dp"], default="auto"
    )
    p.set_defaults(func=_cmd_risk_averse)

    p = sub.add_parser(
        "sweep",
        parents=[common, dist_arg],
        help="risk-averse fractions over horizons (CSV M,f_riskaverse,f_opt,q...)",
    )
    p.add_argument("--M", required=True, help="horizons, e.g. '2..100' or '2,3,5'")
    p.add_argument(
        "--method", choices=["auto", "enumeration", "dp"], default="auto"
    )
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser(
        "simulate",
        parents=[common, dist_arg],
        help="seeded Monte Carlo equity paths (equity.csv, dd_hist.csv)",
    )
    p.add_argument("--f", type=float, required=True)
    p.add_argument("--steps", type=int, default=10_000)
    p.add_argument("--runs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--capital", type=float, default=1000.0)
    p.add_argument("--out-dir", help="output directory (default $OPTIMALF_OUT_DIR or .)")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser(
        "figures",
        parents=[common, dist_arg],
        help="regenerate the CSV data behind the standard figures",
    )
    p.add_argument("--M", type=int, default=3, help="small horizon for exact curves")
    p.add_argument("--M-large", type=int, default=100)
    p.add_argument("--sweep-M", default="2..15", help="horizon sweep for the defensive f")
    p.add_argument("--steps", type=int, default=10_000)
    p.add_argument("--runs", type=int, default=1)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument(
        "--f-illustration",
        type=float,
        default=0.25,
        help="fraction for the short sample-path illustration",
    )
    p.add_argument("--out-dir", help="output directory (default $OPTIMALF_OUT_DIR or .)")
    p.set_defaults(func=_cmd_figures)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except MethodError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
