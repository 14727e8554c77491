"""Command-line front end.

Exit codes: 0 ok, 2 unreadable or malformed input, 3 invariant of the wrong
shape (or outside the point-semantics fragment), 4 invalid parameters.
"""
from __future__ import annotations

import argparse
import sys

from . import kernels
from .errors import ParameterError, ParseError, ShapeError
from .filtering import TimeWindow, filter_time
from .fold import IterationPath, TimeIteration, add_area_occupied, fold_space, fold_time, owner_point_counter
from .geometry import ANONYMOUS, point_semantics
from .io import parse, serialize
from .normalize import normalize_owner_occupied, normalize_std
from .terms import OccupyBox

EXIT_OK, EXIT_PARSE, EXIT_SHAPE, EXIT_PARAM = 0, 2, 3, 4


def _read_model(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse(text)


def _ints(text: str, n: int, what: str) -> list[int]:
    try:
        vals = [int(v) for v in text.split(",")]
    except ValueError:
        vals = []
    if len(vals) != n:
        raise ParameterError(f"{what} expects {n} comma-separated integers, got {text!r}")
    return vals


def _bool(text: str) -> bool:
    low = text.lower()
    if low not in ("true", "false"):
        raise ParameterError(f"--miss expects true or false, got {text!r}")
    return low == "true"


def cmd_parse(args) -> None:
    print(serialize(_read_model(args.input), args.mode))


def cmd_normalize(args) -> None:
    model = _read_model(args.input)
    pipeline = normalize_owner_occupied if args.pipeline == "owner" else normalize_std
    print(serialize(pipeline(model), args.mode))


def cmd_filter_time(args) -> None:
    model = _read_model(args.input)
    window = TimeWindow(args.start, args.stop)
    print(serialize(filter_time(model, window, _bool(args.miss)), args.mode))


def cmd_fold_time(args) -> None:
    model = _read_model(args.input)
    if args.agg != "area":
        raise ParameterError(f"unknown time aggregator {args.agg!r}")
    iteration = TimeIteration(args.start, args.stop, args.step)
    print(fold_time(model, 0, iteration, add_area_occupied))


def cmd_fold_space(args) -> None:
    kind, _, label = args.agg.partition(":")
    if kind != "owner-points" or not label:
        raise ParameterError(f"--agg expects owner-points:LABEL, got {args.agg!r}")
    path = IterationPath(
        OccupyBox(*_ints(args.start_box, 4, "--start-box")),
        OccupyBox(*_ints(args.stop_box, 4, "--stop-box")),
        tuple(_ints(args.step, 2, "--step")),
    )
    model = normalize_owner_occupied(_read_model(args.input))
    print(fold_space(model, 0, path, owner_point_counter(label)))


def cmd_query(args) -> None:
    model = _read_model(args.input)
    grid = tuple(_ints(args.grid, 4, "--grid"))
    grid = OccupyBox(*grid).corners
    try:
        sem = point_semantics(model, args.time)
    except ShapeError:
        sem = point_semantics(normalize_std(model), args.time)
    for owner in sorted(sem):
        name = "<anonymous>" if owner == ANONYMOUS else owner
        print(f"{name}\t{kernels.count_in_box(sem[owner], grid)}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stinv", description="Filter, fold, normalize and query spatio-temporal invariants.")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--in", dest="input", default="-", metavar="PATH",
                       help="model file, or - for standard input (default)")
        p.set_defaults(func=func)
        return p

    def mode(p):
        p.add_argument("--mode", choices=("compact", "pretty"), default="compact")

    p = command("parse", cmd_parse, "validate a model and print it re-serialized")
    mode(p)

    p = command("normalize", cmd_normalize, "print the normalized model")
    p.add_argument("--pipeline", choices=("std", "owner"), default="std")
    mode(p)

    p = command("filter-time", cmd_filter_time, "keep what is relevant to [start, stop)")
    p.add_argument("--start", type=int, required=True)
    p.add_argument("--stop", type=int, required=True)
    p.add_argument("--miss", default="true", metavar="true|false")
    mode(p)

    p = command("fold-time", cmd_fold_time, "sum occupied area over time steps")
    p.add_argument("--start", type=int, required=True)
    p.add_argument("--stop", type=int, required=True)
    p.add_argument("--step", type=int, default=1)
    p.add_argument("--agg", default="area")

    p = command("fold-space", cmd_fold_space, "count owned points along a translation path")
    p.add_argument("--start-box", required=True, metavar="X1,Y1,X2,Y2")
    p.add_argument("--stop-box", required=True, metavar="X1,Y1,X2,Y2")
    p.add_argument("--step", required=True, metavar="DX,DY")
    p.add_argument("--agg", required=True, metavar="owner-points:LABEL")

    p = command("query", cmd_query, "per-owner occupied point counts at a time inside a grid")
    p.add_argument("--time", type=int, required=True)
    p.add_argument("--grid", required=True, metavar="X1,Y1,X2,Y2")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except ParseError as exc:
        print(f"stinv: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ShapeError as exc:
        print(f"stinv: shape error: {exc}", file=sys.stderr)
        return EXIT_SHAPE
    except ParameterError as exc:
        print(f"stinv: invalid parameter: {exc}", file=sys.stderr)
        return EXIT_PARAM
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
