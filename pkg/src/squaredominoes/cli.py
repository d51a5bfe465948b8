"""Command line entry point.

Exit status: 0 on success, 1 when a patch, rule set or scan fails its
check, 2 on usage, parse or I/O errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import catalog, reports
from .core import Placement, TileSet, validate_patch
from .formats import ParseError, dump_patch, parse_patch, parse_tileset
from .render import RenderOptions, render_svg
from .solver import (
    Boundary, InconsistentFixture, Ordering, RegionProblem, SearchConfig,
    SearchInconclusive, count_region_tilings, periodicity_scan, solve_region,
)
from .substitution import (
    BudgetExceeded, DimensionMismatch, Hole, InvalidRule, MissingRule, OverlapConflict,
    grow, load_rules, run_script, verify_fixed_point,
)
from .wang import export_wang, unfold

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        try:
            Path(path).write_text(text)
        except OSError as exc:
            raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _tileset(args) -> TileSet:
    path = args.tileset or str(catalog.default_tileset_path())
    return parse_tileset(_read(path), path)


def _rules(args, ts: TileSet):
    path = args.rules or str(catalog.data_path("a7.rules"))
    return load_rules(_read(path), ts, source=path)


def _fix(text: str) -> tuple[int, int, Placement]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"expected col,row,tile,rot, got {text!r}")
    col, row, tile, rot = parts
    try:
        return int(col), int(row), Placement(tile, int(rot))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def cmd_validate(args) -> int:
    ts = _tileset(args)
    p = parse_patch(_read(args.patch), args.patch)
    for _, cell in p.items():
        if cell is not None and cell.tile not in ts:
            raise UsageError(f"{args.patch}: unknown tile {cell.tile!r}")
    bad = validate_patch(p, ts)
    if args.json:
        sys.stdout.write(reports.to_json(reports.violations_dict(bad, ts)))
    else:
        sys.stdout.write(reports.violations_text(bad, ts))
    return FAILED if bad else OK


def cmd_solve(args) -> int:
    ts = _tileset(args)
    prob = RegionProblem(
        args.width, args.height, tuple(args.fix),
        Boundary.WRAP if args.wrap else Boundary.FREE, args.shift,
    )
    config = SearchConfig(
        Ordering.MOST_CONSTRAINED if args.most_constrained else Ordering.ROW_MAJOR,
        args.node_budget,
    )
    if args.count:
        rep = count_region_tilings(prob, ts, args.cap, config)
        if args.json:
            sys.stdout.write(reports.to_json(reports.search_dict(rep)))
        else:
            status = " (INCONCLUSIVE)" if rep.inconclusive else " (capped)" if rep.capped else ""
            print(f"{rep.solutions_found} tiling(s){status}, {rep.nodes_explored} nodes")
        return FAILED if rep.inconclusive else OK
    try:
        p = solve_region(prob, ts, config)
    except SearchInconclusive as exc:
        print(f"INCONCLUSIVE: {exc}", file=sys.stderr)
        return FAILED
    if p is None:
        print("no tiling exists", file=sys.stderr)
        return FAILED
    _write(dump_patch(p), args.output)
    return OK


def cmd_grow(args) -> int:
    ts = _tileset(args)
    rs = _rules(args, ts)
    node = grow(args.tile, args.depth, rs, args.budget, args.orientation)
    p = node.realized
    if args.crop:
        w, h = args.crop
        p = p.crop(args.at[0], args.at[1], w, h)
    bad = validate_patch(p, ts)
    _write(dump_patch(p), args.output)
    print(f"{p.width}x{p.height} patch, {len(bad)} violation(s)", file=sys.stderr)
    return FAILED if bad else OK


def cmd_compose(args) -> int:
    ts = _tileset(args)
    rs = _rules(args, ts)
    script = Path(args.script)
    result = run_script(_read(args.script), ts, rs, script.parent, args.script)
    status = OK
    for i, p in enumerate(result.compositions):
        bad = validate_patch(p, ts)
        print(f"canvas {i + 1}: {p.width}x{p.height}, {len(bad)} violation(s)", file=sys.stderr)
        if bad:
            status = FAILED
    _write(dump_patch(result.result), args.output)
    return status


def cmd_torus_scan(args) -> int:
    ts = _tileset(args)
    config = SearchConfig(node_budget=args.node_budget)
    scan = periodicity_scan(ts, args.max_p, args.max_q, args.cap, config)
    if args.json:
        doc = reports.scan_dict(scan)
        sys.stdout.write(reports.to_json(doc if args.timing else reports.strip_timing(doc)))
    else:
        sys.stdout.write(reports.scan_text(scan, args.timing))
    return FAILED if scan.nonzero() or scan.inconclusive() else OK


def cmd_wang_export(args) -> int:
    ts = _tileset(args)
    _write(export_wang(unfold(ts, quotient=not args.no_quotient)), args.output)
    return OK


def cmd_render(args) -> int:
    ts = _tileset(args)
    p = parse_patch(_read(args.patch), args.patch)
    for _, cell in p.items():
        if cell is not None and cell.tile not in ts:
            raise UsageError(f"{args.patch}: unknown tile {cell.tile!r}")
    opts = RenderOptions(cell=args.cell, labels=args.labels, show_violations=args.show_violations)
    _write(render_svg(p, ts, opts), args.output)
    return OK


def cmd_verify_rules(args) -> int:
    ts = _tileset(args)
    try:
        rs = _rules(args, ts)
    except (InvalidRule, MissingRule) as exc:
        print(f"invalid rules: {exc}", file=sys.stderr)
        return FAILED
    rep = verify_fixed_point(rs, ts)
    if args.json:
        sys.stdout.write(reports.to_json(reports.fixed_point_dict(rep)))
    else:
        sys.stdout.write(reports.fixed_point_text(rep))
    return OK if rep.ok else FAILED


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two integers like 14,22, got {text!r}") from None
    return a, b


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="squaredominoes",
        description="Tile, grow, verify and render edge-matched rotatable square tiles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, rules=False):
        sp.add_argument("--tileset", help=f"tileset file (default: ${catalog.TILESET_ENV} or the bundled A7 set)")
        if rules:
            sp.add_argument("--rules", help="rule file (default: the bundled A7 rules)")

    sp = sub.add_parser("validate", help="check a patch for mismatched edges")
    sp.add_argument("patch")
    sp.add_argument("--json", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("solve", help="find or count tilings of a rectangle or torus")
    sp.add_argument("width", type=int)
    sp.add_argument("height", type=int)
    sp.add_argument("--fix", type=_fix, action="append", default=[], metavar="COL,ROW,TILE,ROT")
    sp.add_argument("--wrap", action="store_true", help="wrap edges (torus)")
    sp.add_argument("--shift", type=int, default=0, help="horizontal shear when wrapping vertically")
    sp.add_argument("--count", action="store_true", help="count tilings instead of printing one")
    sp.add_argument("--cap", type=int, default=10**6)
    sp.add_argument("--node-budget", type=int, default=10**9)
    sp.add_argument("--most-constrained", action="store_true", help="visit most constrained cells first")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("-o", "--output")
    common(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("grow", help="iterate the substitution from one tile")
    sp.add_argument("tile")
    sp.add_argument("--depth", type=int, required=True)
    sp.add_argument("--orientation", type=int, default=0, choices=range(4))
    sp.add_argument("--budget", type=int, default=100_000, help="maximum cell count")
    sp.add_argument("--crop", type=_pair, metavar="W,H")
    sp.add_argument("--at", type=_pair, default=(0, 0), metavar="COL,ROW")
    sp.add_argument("-o", "--output")
    common(sp, rules=True)
    sp.set_defaults(func=cmd_grow)

    sp = sub.add_parser("compose", help="run an overlap composition script")
    sp.add_argument("script")
    sp.add_argument("-o", "--output")
    common(sp, rules=True)
    sp.set_defaults(func=cmd_compose)

    sp = sub.add_parser("torus-scan", help="search sheared tori for periodic tilings")
    sp.add_argument("--max-p", type=int, default=4)
    sp.add_argument("--max-q", type=int, default=4)
    sp.add_argument("--cap", type=int, default=10**6)
    sp.add_argument("--node-budget", type=int, default=10**9)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--timing", action="store_true", help="include wall times")
    common(sp)
    sp.set_defaults(func=cmd_torus_scan)

    sp = sub.add_parser("wang-export", help="print the equivalent Wang tile set")
    sp.add_argument("--no-quotient", action="store_true", help="emit all four orientations of every tile")
    sp.add_argument("-o", "--output")
    common(sp)
    sp.set_defaults(func=cmd_wang_export)

    sp = sub.add_parser("render", help="draw a patch as SVG")
    sp.add_argument("patch")
    sp.add_argument("-o", "--output", required=True)
    sp.add_argument("--cell", type=int, default=40, help="cell size in pixels (even)")
    sp.add_argument("--labels", action="store_true")
    sp.add_argument("--show-violations", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_render)

    sp = sub.add_parser("verify-rules", help="check that supertile borders preserve edge matching")
    sp.add_argument("--json", action="store_true")
    common(sp, rules=True)
    sp.set_defaults(func=cmd_verify_rules)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, InconsistentFixture, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return USAGE
    except (OverlapConflict, Hole, DimensionMismatch, InvalidRule, MissingRule) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILED
    except (BudgetExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
