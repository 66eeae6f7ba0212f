"""Command-line front end: eval, slice, verify, bench.

Exit codes: 0 success or verification pass, 1 validation error,
2 verification failure, 3 I/O error.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from .bench import bench_csv, run_bench
from .config import ConfigError, load_problem, load_slice
from .lagrangian import LagrangianNet
from .oracle import OracleConfig, verify_report
from .output import write_slice_csv, write_slice_pgm
from .simplex import EnvelopeViolationError
from .slicing import evaluate_slice

__all__ = ["main", "entry"]

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_VERIFY_FAIL = 2
EXIT_IO = 3


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # Let values like "-2,0,0" (coordinate lists starting with a negative
        # number) parse as arguments instead of being mistaken for options.
        self._negative_number_matcher = re.compile(r"^-(?=[\d.])[\d.,eE+-]*$")

    def error(self, message):  # route usage errors to the validation exit code
        raise ConfigError("usage", message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="hjeval", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_eval = sub.add_parser("eval", help="evaluate the solution at one point")
    p_eval.add_argument("--config", required=True, help="problem config path")
    p_eval.add_argument("--x", required=True, help="comma-separated point coordinates")
    p_eval.add_argument("--t", required=True, type=float, help="time (>= 0)")

    p_slice = sub.add_parser("slice", help="evaluate a slice and write CSVs")
    p_slice.add_argument("--config", required=True, help="problem config path")
    p_slice.add_argument("--slice", required=True, dest="slice_path", help="slice config path")
    p_slice.add_argument("--out", required=True, help="output path prefix")
    p_slice.add_argument("--render", action="store_true", help="also write grayscale pixmaps")

    p_verify = sub.add_parser("verify", help="run the seeded verification report")
    p_verify.add_argument("--config", required=True, help="problem config path")
    p_verify.add_argument("--samples", type=int, default=100)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--out", default="verify", help="report path prefix")
    p_verify.add_argument(
        "--residual-only",
        action="store_true",
        help="skip the oracle comparison (required above 3 dimensions)",
    )
    p_verify.add_argument("--box", type=float, default=20.0, help="oracle search halfwidth")
    p_verify.add_argument("--pts", type=int, default=40001, help="oracle grid points per axis")

    p_bench = sub.add_parser("bench", help="time single-point evaluations per dimension")
    p_bench.add_argument("--architecture", choices=("arch1", "arch2"), required=True)
    p_bench.add_argument("--dims", required=True, help="comma-separated dimensions")
    p_bench.add_argument("--m", type=int, default=8, help="branches per net (arch1 only)")
    p_bench.add_argument("--reps", type=int, default=5)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--out", default=None, help="CSV path (default: stdout)")
    return parser


def _parse_floats(field: str, text: str):
    try:
        return [float(tok) for tok in text.split(",")]
    except ValueError:
        raise ConfigError(field, f"not numbers: {text!r}") from None


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _cmd_eval(args) -> int:
    net = load_problem(args.config).build_net()
    x = _parse_floats("x", args.x)
    if len(x) != net.dimension:
        raise ConfigError("x", f"expected {net.dimension} coordinates, got {len(x)}")
    if args.t < 0:
        raise ConfigError("t", "must be nonnegative")
    if isinstance(net, LagrangianNet) and args.t == 0:
        result = net.initial_value(x)
    else:
        result = net.evaluate(x, args.t)
    print(f"value={_fmt(result.value)} argmin={result.argmin_index} gap={_fmt(result.gap)}")
    return EXIT_OK


def _cmd_slice(args) -> int:
    net = load_problem(args.config).build_net()
    spec = load_slice(args.slice_path)
    spec.validate(net.dimension)
    result = evaluate_slice(net, spec)
    paths = write_slice_csv(result, args.out)
    if args.render:
        paths += write_slice_pgm(result, args.out)
    for path in paths:
        print(path)
    return EXIT_OK


def _cmd_verify(args) -> int:
    net = load_problem(args.config).build_net()
    if net.dimension > 3 and not args.residual_only:
        raise ConfigError(
            "residual-only",
            f"oracle comparison is refused for dimension {net.dimension} > 3; "
            "pass --residual-only to check the PDE residual instead",
        )
    cfg = OracleConfig(search_box_halfwidth=args.box, pts_per_axis=args.pts)
    report = verify_report(
        net, args.samples, args.seed, cfg, residual_only=args.residual_only
    )
    out = Path(args.out)
    if out.parent != Path(""):
        out.parent.mkdir(parents=True, exist_ok=True)
    out.with_suffix(".txt").write_text(report.to_text(), encoding="utf-8")
    out.with_suffix(".kv").write_text(report.to_kv(), encoding="utf-8")
    sys.stdout.write(report.to_text())
    return EXIT_OK if report.passed else EXIT_VERIFY_FAIL


def _cmd_bench(args) -> int:
    try:
        dims = [int(tok) for tok in args.dims.split(",")]
    except ValueError:
        raise ConfigError("dims", f"not integers: {args.dims!r}") from None
    rows = run_bench(args.architecture, dims, args.m, args.reps, args.seed)
    text = bench_csv(rows)
    if args.out is None:
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
    return EXIT_OK


_COMMANDS = {
    "eval": _cmd_eval,
    "slice": _cmd_slice,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except (ConfigError, EnvelopeViolationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


def entry() -> None:
    sys.exit(main())
