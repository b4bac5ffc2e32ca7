"""Command-line front end.

Exit codes: 0 success, 1 domain failure (invalid decomposition, unwritable
output), 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import decomposition as dec
from .deduction import check_width_bounds, deduce
from .slope import CLOSED, MERIDIAN, SlopeError, check_torus_knot, parse_slope
from .torus_knot import classify, slope_grid
from .width import WidthError, parse_width

ATLAS_HEADER = ["p", "q", "slope", "delta", "class", "width", "filled_manifold", "filled_width"]


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


def _color(text: str, code: str) -> str:
    if os.environ.get("SLOPED_WIDTH_NO_COLOR") or not sys.stderr.isatty():
        return text
    return f"\x1b[{code}m{text}\x1b[0m"


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")


def _slope(text: str):
    try:
        return parse_slope(text)
    except SlopeError as exc:
        raise UsageError(str(exc)) from None


def _width(text: str):
    try:
        return parse_width(text)
    except WidthError as exc:
        raise UsageError(str(exc)) from None


def _torus_pair(p: int, q: int) -> None:
    try:
        check_torus_knot(p, q)
    except SlopeError as exc:
        raise UsageError(str(exc)) from None


def cmd_classify(args) -> int:
    _torus_pair(args.p, args.q)
    result = classify(args.p, args.q, _slope(args.slope))
    _emit_json(result.to_dict())
    return 0


def atlas_rows(p: int, q: int, rmax: int, smax: int) -> list[list[str]]:
    rows = []
    for slope in slope_grid(rmax, smax) + [MERIDIAN, CLOSED]:
        c = classify(p, q, slope)
        rows.append([
            str(p),
            str(q),
            str(slope),
            "" if c.delta is None else str(c.delta),
            c.kind.value,
            str(c.width),
            c.filled_manifold or "",
            "" if c.filled_width is None else str(c.filled_width),
        ])
    return rows


def cmd_atlas(args) -> int:
    _torus_pair(args.p, args.q)
    if args.rmax < 0 or args.smax < 0:
        raise UsageError("--rmax and --smax must be non-negative")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(ATLAS_HEADER)
    writer.writerows(atlas_rows(args.p, args.q, args.rmax, args.smax))
    if args.out is None:
        sys.stdout.write(buf.getvalue())
        return 0
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    except OSError as exc:
        raise DomainError(f"cannot write {args.out}: {exc.strerror or exc}") from None
    return 0


def _read_decomposition(path: str | None) -> dec.Decomposition:
    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        return dec.from_json(text)
    except dec.DecompositionError as exc:
        raise UsageError(str(exc)) from None


def cmd_decomp(args) -> int:
    d = _read_decomposition(args.file)
    if args.action == "validate":
        report = dec.validate(d, strict=args.strict)
        _emit_json(report.to_dict())
        return 0 if report.ok else 1
    try:
        if args.action == "width":
            sys.stdout.write(str(dec.width_of(d)) + "\n")
            return 0
        if args.action == "stabilize":
            if args.slope is None:
                raise UsageError("stabilize needs --slope")
            out = dec.alpha_stabilize(d, _slope(args.slope), args.index, args.component)
        elif args.action == "tube":
            out = dec.tube_to_closed(d)
        else:
            out = dec.fill(d)
    except dec.DecompositionError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(dec.to_json(out) + "\n")
    return 0


def cmd_deduce(args) -> int:
    conclusions = deduce(_width(args.width), _slope(args.slope), args.single_planar)
    _emit_json([c.to_dict() for c in conclusions])
    return 0


def cmd_bounds(args) -> int:
    closed = _width(args.closed)
    if not len(closed):
        raise UsageError("--closed must be a non-empty width")
    _emit_json(check_width_bounds(closed, _width(args.sloped)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sloped-width",
        description="Width calculus for sloped generalized Heegaard splittings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a torus-knot surgery slope")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--slope", required=True, help="r/s, n, inf or closed")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("atlas", help="CSV table of torus-knot widths over a slope grid")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--smax", type=int, required=True)
    p.add_argument("--out", help="output file (default: standard output)")
    p.set_defaults(func=cmd_atlas)

    p = sub.add_parser("decomp", help="validate or transform a decomposition given as JSON")
    p.add_argument("action", choices=["validate", "stabilize", "tube", "fill", "width"])
    p.add_argument("--file", help="JSON file (default: standard input)")
    p.add_argument("--slope", help="stabilization slope")
    p.add_argument("--index", type=int, default=1, help="1-based thick surface to stabilize")
    p.add_argument("--component", type=int, default=0, help="0-based component of that surface")
    p.add_argument("--strict", action="store_true", help="add thin-position checks to validate")
    p.set_defaults(func=cmd_decomp)

    p = sub.add_parser("deduce", help="conclusions forced by a knot-exterior width")
    p.add_argument("--width", required=True)
    p.add_argument("--slope", required=True)
    p.add_argument("--single-planar", action="store_true", help="width is realized by one planar Heegaard surface")
    p.set_defaults(func=cmd_deduce)

    p = sub.add_parser("bounds", help="check a sloped width against closed-width bounds")
    p.add_argument("--closed", required=True)
    p.add_argument("--sloped", required=True)
    p.set_defaults(func=cmd_bounds)
    return parser


_VALUE_FLAGS = {"--slope", "--p", "--q", "--rmax", "--smax", "--index", "--component"}


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "-1/6" as an option; rewrite "--slope -1/6" as "--slope=-1/6"
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else ""
        if tok in _VALUE_FLAGS and nxt[:1] == "-" and nxt[1:2].isdigit():
            out.append(f"{tok}={nxt}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_glue_negative_values(argv))
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(_color("error: ", "31") + f"{exc}\n")
        return 2
    except DomainError as exc:
        sys.stderr.write(_color("error: ", "31") + f"{exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
