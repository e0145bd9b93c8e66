"""Command-line interface.

Subcommands: matrix, det, singular, solve, sweep, board, serve.  JSON
goes to stdout; exit code 0 on success, 2 on usage or size errors, and 3
when a board is unsolvable or a grid is singular (handy in scripts).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import sweep as sweep_mod
from .board import Config, GridDims
from .criterion import classify
from .errors import DomainError, SizeLimitError
from .limits import check_grid
from .matrices import build_A_gf2, build_A_int
from .solver import (
    DEFAULT_COSET_CAP,
    enumerate_solutions,
    random_solvable,
    solve_full,
)
from .spectral import det_full
from .wire import (
    board_dict,
    canonical_json,
    criterion_dict,
    det_dict,
    solve_report_dict,
)

EXIT_OK = 0
EXIT_BIND = 1
EXIT_USAGE = 2
EXIT_SIGNAL = 3


def _emit(obj: dict) -> None:
    print(canonical_json(obj))


def cmd_matrix(args: argparse.Namespace) -> int:
    check_grid(args.rows, args.cols)
    if args.field == "gf2":
        a = build_A_gf2(args.rows, args.cols)
        rows = [[a.entry(i, j) for j in range(a.cols)] for i in range(a.rows)]
    else:
        rows = [list(row) for row in build_A_int(args.rows, args.cols).entries]
    if args.format == "json":
        _emit({"m": args.rows, "n": args.cols, "field": args.field, "rows": rows})
    else:
        print("\n".join(" ".join(str(v) for v in row) for row in rows))
    return EXIT_OK


def cmd_det(args: argparse.Namespace) -> int:
    check_grid(args.rows, args.cols)
    result = det_full(args.rows, args.cols)
    payload = det_dict(args.rows, args.cols, result)
    if args.format == "text":
        print(f"det A({args.rows},{args.cols}):")
        print(f"  exact zero: {payload['exact_zero']}")
        print(f"  eigenvalue product: {payload['float']!r}")
        print(f"  exact (elimination): {payload['bareiss']}")
    else:
        _emit(payload)
    return EXIT_OK


def cmd_singular(args: argparse.Namespace) -> int:
    verdict = classify(args.rows, args.cols)
    payload = criterion_dict(verdict)
    if args.format == "text":
        state = "singular" if verdict.singular else "nonsingular"
        fired = ", ".join(verdict.conditions) or "none"
        print(f"A({args.rows},{args.cols}) is {state} (conditions: {fired})")
    else:
        _emit(payload)
    return EXIT_SIGNAL if verdict.singular else EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    check_grid(args.rows, args.cols)
    dims = GridDims(args.rows, args.cols)
    config = Config.from_string(dims, args.config)
    report = solve_full(args.rows, args.cols, config, cap=args.cap)
    solutions = None
    if args.all and report.solvable:
        solutions = list(enumerate_solutions(args.rows, args.cols, config, cap=args.cap))
    payload = solve_report_dict(config, report, solutions)
    if args.format == "text":
        if report.solvable:
            assert report.minimal is not None
            print(
                f"solvable: {report.solution_count} solution(s), "
                f"minimal presses {list(report.minimal.buttons())} "
                f"(weight {report.minimal_weight}"
                + ("" if report.certified else ", not certified minimal")
                + ")"
            )
        else:
            print("unsolvable")
    else:
        _emit(payload)
    return EXIT_OK if report.solvable else EXIT_SIGNAL


def cmd_sweep(args: argparse.Namespace) -> int:
    check_grid(args.max, args.max)
    report = sweep_mod.run_sweep(args.max)
    if args.out is not None:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        sweep_mod.write_csv(report, outdir / "sweep.csv")
        sweep_mod.render_figure(report, outdir / "sweep.png")
    if args.format == "json":
        _emit(sweep_mod.report_dict(report))
    else:
        print(sweep_mod.format_text(report))
    return EXIT_OK


def cmd_board(args: argparse.Namespace) -> int:
    seed = args.seed
    if seed is None:
        import secrets

        seed = secrets.randbits(63)
    config, _ = random_solvable(args.rows, args.cols, seed)
    payload = board_dict(args.rows, args.cols, seed, config)
    if args.format == "text":
        print(config.to_string())
    else:
        _emit(payload)
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    from .server import run_server

    try:
        run_server(args.host, args.port, static_dir=args.static)
    except OSError as exc:
        print(f"error: cannot bind {args.host}:{args.port}: {exc}", file=sys.stderr)
        return EXIT_BIND
    return EXIT_OK


def _add_grid_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--rows", type=int, required=True, help="grid rows m")
    sub.add_argument("--cols", type=int, required=True, help="grid columns n")


def _add_format_arg(sub: argparse.ArgumentParser, default: str = "json") -> None:
    sub.add_argument(
        "--format", choices=("json", "text"), default=default, help="output format"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="luminous",
        description="Lights Out solver and spectral analysis toolkit",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("matrix", help="dump the game matrix A(m,n)")
    _add_grid_args(p)
    p.add_argument("--field", choices=("int", "gf2"), default="int")
    _add_format_arg(p, default="text")
    p.set_defaults(func=cmd_matrix)

    p = subs.add_parser("det", help="determinant via eigenvalues and exact elimination")
    _add_grid_args(p)
    _add_format_arg(p)
    p.set_defaults(func=cmd_det)

    p = subs.add_parser("singular", help="closed-form singularity verdict")
    _add_grid_args(p)
    _add_format_arg(p)
    p.set_defaults(func=cmd_singular)

    p = subs.add_parser("solve", help="solve a board configuration")
    _add_grid_args(p)
    p.add_argument("--config", required=True, help="row-major '0'/'1' light states")
    p.add_argument("--all", action="store_true", help="list every 0/1 solution")
    p.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_COSET_CAP,
        help="max nullity for exhaustive coset search",
    )
    _add_format_arg(p)
    p.set_defaults(func=cmd_solve)

    p = subs.add_parser("sweep", help="verdict/nullity/parity table over small grids")
    p.add_argument("--max", type=int, default=16, help="largest grid side to sweep")
    p.add_argument("--out", help="directory for sweep.csv and sweep.png")
    _add_format_arg(p, default="text")
    p.set_defaults(func=cmd_sweep)

    p = subs.add_parser("board", help="generate a reproducible solvable board")
    _add_grid_args(p)
    p.add_argument("--seed", type=int, help="64-bit seed (random if omitted)")
    _add_format_arg(p)
    p.set_defaults(func=cmd_board)

    p = subs.add_parser("serve", help="serve the web UI and JSON API")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8160)
    p.add_argument("--static", help="directory of the built web UI bundle")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, SizeLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
