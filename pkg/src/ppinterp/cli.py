"""Command-line entry point for the convergence benchmark.

Runs one resolution ladder and emits its CSV table (header
``function,mesh,method,degree,ni,l2_error,rate``) to standard output, and to
``--out PATH`` when given.  Exits nonzero with a usage message on unknown
flags or invalid combinations such as an LGL mesh with an incompatible point
count.
"""

from __future__ import annotations

import argparse
import sys

from .bench import (
    DEFAULT_LADDER,
    HIDDEN_EXTREMUM_LADDER,
    ExperimentSpec,
    rows_to_csv,
    run_experiment,
)

__all__ = ["main", "build_parser", "resolve_ladder"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits the process on errors; raise instead so main() can
    # return a status code.
    def error(self, message):
        raise _UsageError(message)


def _ni_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad point count in {text!r}") from exc
    if not values:
        raise argparse.ArgumentTypeError("empty --ni list")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="ppinterp-bench",
        description="Convergence study for bounded/positive interpolation methods.",
    )
    parser.add_argument("--function", choices=("f1", "f2", "f7", "f10"), default="f1")
    parser.add_argument("--mesh", choices=("uniform", "lgl"), default="uniform")
    parser.add_argument(
        "--method", choices=("pchip", "dbi", "ppi", "linear"), default="ppi"
    )
    parser.add_argument("--degree", type=int, default=3, metavar="D")
    parser.add_argument("--epsilon", type=float, default=0.01, metavar="E")
    parser.add_argument(
        "--ni",
        type=_ni_list,
        default=None,
        metavar="N1,N2,...",
        help="comma-separated resolution ladder "
        f"(default {','.join(map(str, DEFAULT_LADDER))}; the hidden-extremum "
        f"ladder {','.join(map(str, HIDDEN_EXTREMUM_LADDER))} when --hidden-extremum is set)",
    )
    parser.add_argument("--out", metavar="PATH", default=None, help="also write the CSV here")
    parser.add_argument("--sweep-order", choices=("xy", "yx"), default="xy")
    parser.add_argument(
        "--hidden-extremum",
        action="store_true",
        help="use the even default ladder, which keeps the origin between data points",
    )
    return parser


def resolve_ladder(args) -> tuple[int, ...]:
    """Explicit --ni wins; --hidden-extremum only switches the default."""
    if args.ni is not None:
        return args.ni
    return HIDDEN_EXTREMUM_LADDER if args.hidden_extremum else DEFAULT_LADDER


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(parser.format_usage(), file=sys.stderr, end="")
        print(f"error: {exc}", file=sys.stderr)
        return 2
    ni = resolve_ladder(args)
    spec = ExperimentSpec(
        function=args.function,
        mesh=args.mesh,
        method=args.method,
        degree=args.degree,
        epsilon=args.epsilon,
        ni_list=ni,
        sweep_order=args.sweep_order,
    )
    try:
        spec.validate()
        rows = run_experiment(spec)
    except ValueError as exc:
        print(parser.format_usage(), file=sys.stderr, end="")
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = rows_to_csv(spec, rows)
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
