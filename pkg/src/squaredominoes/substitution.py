"""Per-tile supertile rules: loading, border words, the fixed-point check,
expansion, hierarchical growth and overlap composition."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import accumulate
from pathlib import Path
from typing import Mapping, Optional, Sequence

from .core import (
    E, N, OPPOSITE, S, SIDE_NAMES, EdgeLabel, Patch, Placement, TileSet,
    edges_compatible, placement_edge, side_index, validate_patch,
)
from .formats import ParseError, dump_rule_file, parse_patch, parse_rule_file, parse_script

DEFAULT_CELL_BUDGET = 100_000


class InvalidRule(ValueError):
    pass


class MissingRule(ValueError):
    pass


class IncompletePatch(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class OverlapConflict(ValueError):
    def __init__(self, cell, first, second, pieces):
        self.cell, self.first, self.second, self.pieces = cell, first, second, pieces
        super().__init__(
            f"cell {cell}: {pieces[0]} places {first} but {pieces[1]} places {second}"
        )


class Hole(ValueError):
    def __init__(self, cells):
        self.cells = cells
        shown = ", ".join(map(str, cells[:5])) + (" ..." if len(cells) > 5 else "")
        super().__init__(f"{len(cells)} canvas cell(s) left uncovered: {shown}")


@dataclass(frozen=True)
class SubstitutionRule:
    tile_id: str
    supertile: Patch


@dataclass(frozen=True)
class RuleSet:
    rules: tuple[SubstitutionRule, ...]
    corner_tiles: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "_by_tile", {r.tile_id: r for r in self.rules})

    def rule(self, tile_id: str) -> SubstitutionRule:
        try:
            return self._by_tile[tile_id]
        except KeyError:
            raise MissingRule(f"no rule for tile {tile_id!r}") from None

    def supertile(self, p: Placement) -> Patch:
        return self.rule(p.tile).supertile.rotated(p.orientation)

    def __len__(self) -> int:
        return len(self.rules)

    def to_text(self) -> str:
        return dump_rule_file([(r.tile_id, r.supertile) for r in self.rules], self.corner_tiles)


def corners_of(p: Patch) -> list[Placement]:
    w, h = p.width, p.height
    return [p[0, 0], p[w - 1, 0], p[w - 1, h - 1], p[0, h - 1]]


def check_rule(rule: SubstitutionRule, ts: TileSet, corner_tiles: Optional[Sequence[str]] = None) -> None:
    p = rule.supertile
    if not p.is_complete:
        raise InvalidRule(f"rule for {rule.tile_id!r} has empty cells")
    for _, cell in p.items():
        if cell.tile not in ts:
            raise InvalidRule(f"rule for {rule.tile_id!r} uses unknown tile {cell.tile!r}")
    bad = validate_patch(p, ts)
    if bad:
        raise InvalidRule(f"rule for {rule.tile_id!r} is not a valid patch: {bad[0].describe(ts)}")
    if corner_tiles is not None:
        for cell in corners_of(p):
            if cell.tile not in corner_tiles:
                raise InvalidRule(
                    f"rule for {rule.tile_id!r} has corner tile {cell.tile!r}, "
                    f"expected one of {' '.join(corner_tiles)}"
                )


def build_rules(rules: Mapping[str, Patch] | Sequence[tuple[str, Patch]], ts: TileSet,
                corner_tiles: Optional[Sequence[str]] = None) -> RuleSet:
    items = list(rules.items()) if isinstance(rules, Mapping) else list(rules)
    by_tile = {}
    for tile, patch in items:
        if tile not in ts:
            raise InvalidRule(f"rule for unknown tile {tile!r}")
        if tile in by_tile:
            raise InvalidRule(f"two rules for tile {tile!r}")
        by_tile[tile] = SubstitutionRule(tile, patch)
    missing = [t for t in ts.tile_ids if t not in by_tile]
    if missing:
        raise MissingRule("no rule for tile(s) " + ", ".join(missing))
    if corner_tiles is not None:
        corner_tiles = tuple(corner_tiles)
        for t in corner_tiles:
            if t not in ts:
                raise InvalidRule(f"corner tile {t!r} not in tileset")
    ordered = tuple(by_tile[t] for t in ts.tile_ids)
    for rule in ordered:
        check_rule(rule, ts, corner_tiles)
    return RuleSet(ordered, corner_tiles)


def load_rules(text: str, ts: TileSet, corner_tiles: Optional[Sequence[str]] = None,
               source: str = "<rules>") -> RuleSet:
    """Parse and check a rule file.

    The corner check runs when ``corner_tiles`` is given or the file has a
    ``corners`` line.
    """
    raw = parse_rule_file(text, source)
    if corner_tiles is None:
        corner_tiles = raw.corners
    return build_rules([(t, p) for t, p, _ in raw.rules], ts, corner_tiles)


def identity_rules(ts: TileSet) -> RuleSet:
    return build_rules([(t, Patch(1, 1, [Placement(t, 0)])) for t in ts.tile_ids], ts)


# -- border words -----------------------------------------------------------

@dataclass(frozen=True)
class BorderWord:
    side: str
    labels: tuple[EdgeLabel, ...]

    def __len__(self) -> int:
        return len(self.labels)

    def compatible(self, other: "BorderWord") -> bool:
        """Facing words fit when lengths agree and labels match end to end."""
        n = len(self.labels)
        return n == len(other.labels) and all(
            edges_compatible(self.labels[i], other.labels[n - 1 - i]) for i in range(n)
        )


def border_cells(width: int, height: int, side: int) -> list[tuple[int, int]]:
    """Cells along ``side`` in clockwise order."""
    if side == N:
        return [(c, 0) for c in range(width)]
    if side == E:
        return [(width - 1, r) for r in range(height)]
    if side == S:
        return [(c, height - 1) for c in reversed(range(width))]
    return [(0, r) for r in reversed(range(height))]


def border_word(p: Patch, side, ts: TileSet) -> BorderWord:
    s = side_index(side)
    labels = []
    for pos in border_cells(p.width, p.height, s):
        cell = p[pos]
        if cell is None:
            raise IncompletePatch(f"border cell {pos} is empty")
        labels.append(placement_edge(ts, cell, s))
    return BorderWord(SIDE_NAMES[s], tuple(labels))


@dataclass(frozen=True)
class FixedPointFailure:
    first: Placement
    second: Placement
    side: str              # where `second` sits relative to `first`
    tiles_fit: bool
    supertiles_fit: bool

    def describe(self) -> str:
        a = "fit" if self.tiles_fit else "do not fit"
        b = "fit" if self.supertiles_fit else "do not fit"
        return f"{self.first} then {self.second} toward {self.side}: tiles {a} but supertiles {b}"


@dataclass
class FixedPointReport:
    checked: int
    failures: list[FixedPointFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_fixed_point(rs: RuleSet, ts: TileSet) -> FixedPointReport:
    """Check that supertile borders fit exactly when the tiles' edges do."""
    placements = [Placement(t, o) for t in ts.tile_ids for o in range(4)]
    words = {
        p: [border_word(rs.supertile(p), s, ts) for s in range(4)] for p in placements
    }
    report = FixedPointReport(0)
    for a in placements:
        for b in placements:
            for side in range(4):
                back = OPPOSITE[side]
                tiles_fit = edges_compatible(placement_edge(ts, a, side), placement_edge(ts, b, back))
                super_fit = words[a][side].compatible(words[b][back])
                report.checked += 1
                if tiles_fit != super_fit:
                    report.failures.append(
                        FixedPointFailure(a, b, SIDE_NAMES[side], tiles_fit, super_fit)
                    )
    return report


# -- expansion and growth ---------------------------------------------------

def _expansion_grid(p: Patch, rs: RuleSet):
    if not p.is_complete:
        raise IncompletePatch("cannot expand a patch with empty cells")
    blocks = [[rs.supertile(cell) for cell in row] for row in p.rows()]
    widths = [blocks[0][c].width for c in range(p.width)]
    heights = [blocks[r][0].height for r in range(p.height)]
    for r, row in enumerate(blocks):
        for c, b in enumerate(row):
            if b.width != widths[c]:
                raise DimensionMismatch(
                    f"column {c}: supertile of {p[c, r]} is {b.width} wide, expected {widths[c]}"
                )
            if b.height != heights[r]:
                raise DimensionMismatch(
                    f"row {r}: supertile of {p[c, r]} is {b.height} high, expected {heights[r]}"
                )
    return blocks, widths, heights


def expand(p: Patch, rs: RuleSet) -> Patch:
    """Replace every placement by its rotated supertile."""
    return _expand(p, rs)[0]


def _expand(p: Patch, rs: RuleSet):
    blocks, widths, heights = _expansion_grid(p, rs)
    xs = [0, *accumulate(widths)]
    ys = [0, *accumulate(heights)]
    total_w, total_h = xs[-1], ys[-1]
    cells = [None] * (total_w * total_h)
    for r, row in enumerate(blocks):
        for c, b in enumerate(row):
            x0, y0 = xs[c], ys[r]
            for br in range(b.height):
                base = (y0 + br) * total_w + x0
                cells[base:base + b.width] = b.cells[br * b.width:(br + 1) * b.width]
    return Patch(total_w, total_h, cells), xs, ys


def expanded_size(p: Patch, rs: RuleSet) -> tuple[int, int]:
    _, widths, heights = _expansion_grid(p, rs)
    return sum(widths), sum(heights)


@dataclass
class HierarchyNode:
    """A grown tiling and the supertile boundaries at every level.

    ``levels[k]`` is the patch after ``k`` expansions (``levels[0]`` is the
    seed).  ``grid_lines[k]`` holds the column and row offsets, in ``realized``
    coordinates, of the boundaries between level-``k`` cells.
    """
    depth: int
    levels: list[Patch]
    grid_lines: list[tuple[tuple[int, ...], tuple[int, ...]]]

    @property
    def realized(self) -> Patch:
        return self.levels[-1]

    @property
    def layout(self) -> Patch:
        return self.levels[0]

    def supertiles(self, level: int) -> list[tuple[Placement, tuple[int, int, int, int]]]:
        """(placement, (col, row, width, height)) of every cell of ``levels[level]``."""
        xs, ys = self.grid_lines[level]
        top = self.levels[level]
        out = []
        for (c, r), cell in top.items():
            out.append((cell, (xs[c], ys[r], xs[c + 1] - xs[c], ys[r + 1] - ys[r])))
        return out


def grow(seed_tile: str, depth: int, rs: RuleSet, budget: int = DEFAULT_CELL_BUDGET,
         orientation: int = 0) -> HierarchyNode:
    if depth < 0:
        raise ValueError("depth must be non-negative")
    rs.rule(seed_tile)
    p = Patch(1, 1, [Placement(seed_tile, orientation)])
    levels = [p]
    lines = [((0, 1), (0, 1))]
    for _ in range(depth):
        w, h = expanded_size(p, rs)
        if w * h > budget:
            raise BudgetExceeded(
                f"depth {depth} from {seed_tile!r} needs {w}x{h} = {w * h} cells, budget is {budget}"
            )
        p, xs, ys = _expand(p, rs)
        lines = [(tuple(xs[x] for x in lx), tuple(ys[y] for y in ly)) for lx, ly in lines]
        levels.append(p)
        lines.append((tuple(range(p.width + 1)), tuple(range(p.height + 1))))
    # lines[k] currently belongs to levels[k]
    return HierarchyNode(depth, levels, lines)


def max_depth(seed_tile: str, rs: RuleSet, budget: int = DEFAULT_CELL_BUDGET) -> int:
    """Deepest growth from ``seed_tile`` that fits the cell budget."""
    p = Patch(1, 1, [Placement(seed_tile, 0)])
    depth = 0
    flat = 0   # consecutive steps that did not grow the patch
    while True:
        w, h = expanded_size(p, rs)
        if w * h > budget:
            return depth
        flat = flat + 1 if (w, h) == (p.width, p.height) else 0
        if flat > len(rs):
            # the patch never grows again: the rules cycle without enlarging it
            return depth
        p = expand(p, rs)
        depth += 1


# -- overlap composition ----------------------------------------------------

@dataclass(frozen=True)
class OverlapComposition:
    canvas: tuple[int, int]
    pieces: tuple[tuple[str, tuple[int, int]], ...]


def compose_overlap(comp: OverlapComposition, library: Mapping[str, Patch]) -> Patch:
    """Lay pieces on the canvas; shared cells must agree and none may stay empty."""
    cw, ch = comp.canvas
    cells: list[Optional[Placement]] = [None] * (cw * ch)
    owner: list[Optional[str]] = [None] * (cw * ch)
    for name, (col, row) in comp.pieces:
        if name not in library:
            raise KeyError(f"unknown piece {name!r}")
        piece = library[name]
        if col < 0 or row < 0 or col + piece.width > cw or row + piece.height > ch:
            raise ValueError(
                f"piece {name!r} ({piece.width}x{piece.height} at {col},{row}) "
                f"leaves the {cw}x{ch} canvas"
            )
        label = f"{name}@{col},{row}"
        for (c, r), cell in piece.items():
            if cell is None:
                continue
            i = (row + r) * cw + col + c
            if cells[i] is None:
                cells[i], owner[i] = cell, label
            elif cells[i] != cell:
                raise OverlapConflict((col + c, row + r), cells[i], cell, (owner[i], label))
    holes = [(i % cw, i // cw) for i, cell in enumerate(cells) if cell is None]
    if holes:
        raise Hole(holes)
    return Patch(cw, ch, cells)


@dataclass
class ScriptResult:
    library: dict[str, Patch]
    compositions: list[Patch]

    @property
    def result(self) -> Patch:
        return self.compositions[-1]


def run_script(text: str, ts: TileSet, rs: Optional[RuleSet] = None,
               base: Path = Path("."), source: str = "<script>",
               budget: int = DEFAULT_CELL_BUDGET) -> ScriptResult:
    """Execute a composition script; every ``canvas`` block yields one patch."""
    steps = parse_script(text, source)
    library: dict[str, Patch] = {}
    done: list[Patch] = []
    canvas = None
    pieces: list[tuple[str, tuple[int, int]]] = []

    def flush():
        if canvas is not None:
            done.append(compose_overlap(OverlapComposition(canvas, tuple(pieces)), library))

    for step in steps:
        try:
            if step.op == "load":
                name, path = step.args
                path = Path(path)
                if not path.is_absolute():
                    path = base / path
                library[name] = parse_patch(path.read_text(), str(path))
            elif step.op == "grow":
                if rs is None:
                    raise ValueError("'grow' needs a rule set")
                name, tile, depth = step.args
                library[name] = grow(tile, depth, rs, budget).realized
            elif step.op == "crop":
                name, src, col, row, w, h = step.args
                library[name] = library[src].crop(col, row, w, h)
            elif step.op == "canvas":
                flush()
                canvas, pieces = step.args, []
            else:
                name, col, row = step.args
                if name not in library:
                    raise KeyError(f"unknown piece {name!r}")
                pieces.append((name, (col, row)))
        except (KeyError, ValueError) as exc:
            if isinstance(exc, (ParseError, OverlapConflict, Hole)):
                raise
            raise ParseError(str(exc).strip("'\""), step.line, 1, source) from exc
    flush()
    if not done:
        raise ParseError("script has no 'canvas'", 0, 0, source)
    return ScriptResult(library, done)


__all__ = [
    "InvalidRule", "MissingRule", "IncompletePatch", "DimensionMismatch", "BudgetExceeded",
    "OverlapConflict", "Hole", "SubstitutionRule", "RuleSet", "BorderWord",
    "FixedPointFailure", "FixedPointReport", "HierarchyNode", "OverlapComposition",
    "ScriptResult", "load_rules", "build_rules", "identity_rules", "check_rule", "corners_of",
    "border_cells", "border_word", "verify_fixed_point", "expand", "expanded_size", "grow",
    "max_depth", "compose_overlap", "run_script", "DEFAULT_CELL_BUDGET",
]
