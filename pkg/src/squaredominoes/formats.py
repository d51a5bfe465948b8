"""Line-oriented text formats for tilesets, patches, rule files and
composition scripts.

Blank lines and ``#`` comments are ignored everywhere.  Parsers report
1-based line and column numbers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .core import EdgeLabel, Patch, Placement, TileDef, TileSet, TileSetError

NAME = re.compile(r"^[A-Za-z0-9_][A-Za-z0-9_.\-]*$")
EDGE = re.compile(r"^([NESW])=([^,\s]+),([^,\s]+)$")


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0, source: str = "<text>"):
        self.message, self.line, self.column, self.source = message, line, column, source
        where = f"{source}:{line}:{column}: " if line else f"{source}: "
        super().__init__(where + message)


def _lines(text: str) -> Iterator[tuple[int, str, list[tuple[int, str]]]]:
    """Yield (line number, raw line, [(column, token), ...]) for non-blank lines."""
    for num, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        tokens = [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", body)]
        if tokens:
            yield num, raw, tokens


def _int(tok: tuple[int, str], num: int, what: str, source: str, minimum: int = 0) -> int:
    col, s = tok
    try:
        value = int(s)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {s!r}", num, col, source) from None
    if value < minimum:
        raise ParseError(f"{what} must be at least {minimum}, got {value}", num, col, source)
    return value


# -- tilesets ---------------------------------------------------------------

def parse_tileset(text: str, source: str = "<tileset>") -> TileSet:
    name = None
    palette: Optional[list[str]] = None
    color_ids: dict[str, int] = {}
    tiles: list[TileDef] = []
    seen: dict[str, int] = {}
    for num, _, toks in _lines(text):
        head = toks[0][1]
        if head == "tileset":
            if name is not None:
                raise ParseError("second 'tileset' header", num, toks[0][0], source)
            if len(toks) != 2:
                raise ParseError("expected 'tileset <name>'", num, toks[0][0], source)
            name = toks[1][1]
        elif head == "colors":
            if name is None:
                raise ParseError("'colors' before 'tileset' header", num, 1, source)
            if palette is not None:
                raise ParseError("second 'colors' line", num, toks[0][0], source)
            palette = []
            for col, c in toks[1:]:
                if not NAME.match(c):
                    raise ParseError(f"bad color name {c!r}", num, col, source)
                if c in color_ids:
                    raise ParseError(f"color {c!r} declared twice", num, col, source)
                color_ids[c] = len(palette)
                palette.append(c)
        elif head == "tile":
            if palette is None:
                raise ParseError("'tile' before 'colors' line", num, 1, source)
            if len(toks) != 6:
                raise ParseError("expected 'tile <id> N=a,b E=a,b S=a,b W=a,b'", num, toks[0][0], source)
            tcol, tid = toks[1]
            if not NAME.match(tid):
                raise ParseError(f"bad tile id {tid!r}", num, tcol, source)
            if tid in seen:
                raise ParseError(f"duplicate tile id {tid!r} (first on line {seen[tid]})", num, tcol, source)
            seen[tid] = num
            edges = {}
            for col, tok in toks[2:]:
                m = EDGE.match(tok)
                if not m:
                    raise ParseError(f"bad edge {tok!r}", num, col, source)
                side, a, b = m.groups()
                if side in edges:
                    raise ParseError(f"side {side} given twice", num, col, source)
                for c in (a, b):
                    if c not in color_ids:
                        raise ParseError(f"undeclared color {c!r}", num, col, source)
                edges[side] = EdgeLabel(color_ids[a], color_ids[b])
            tiles.append(TileDef(tid, edges["N"], edges["E"], edges["S"], edges["W"]))
        else:
            raise ParseError(f"unknown directive {head!r}", num, toks[0][0], source)
    if name is None:
        raise ParseError("missing 'tileset' header", 0, 0, source)
    if palette is None:
        raise ParseError("missing 'colors' line", 0, 0, source)
    try:
        return TileSet(name, tuple(palette), tuple(tiles))
    except TileSetError as exc:  # pragma: no cover - the parser checks the same things
        raise ParseError(str(exc), 0, 0, source) from None


def dump_tileset(ts: TileSet) -> str:
    out = [f"tileset {ts.name}", "colors " + " ".join(ts.palette)]
    for t in ts.tiles:
        edges = " ".join(
            f"{side}={ts.palette[lab.first]},{ts.palette[lab.second]}"
            for side, lab in zip("NESW", t.edges)
        )
        out.append(f"tile {t.tile_id} {edges}")
    return "\n".join(out) + "\n"


# -- patches ----------------------------------------------------------------

def _cell(tok: tuple[int, str], num: int, source: str) -> Optional[Placement]:
    col, s = tok
    if s == ".":
        return None
    tile, sep, rot = s.rpartition(":")
    if not sep or not tile or rot not in ("0", "1", "2", "3"):
        raise ParseError(f"bad cell {s!r}, expected <tile>:<0-3> or '.'", num, col, source)
    return Placement(tile, int(rot))


def _rows(lines, start: int, width: int, height: int, source: str):
    rows = []
    i = start
    for _ in range(height):
        if i >= len(lines):
            last = lines[-1][0] if lines else 0
            raise ParseError(f"expected {height} rows, got {len(rows)}", last, 1, source)
        num, _, toks = lines[i]
        if len(toks) != width:
            raise ParseError(f"expected {width} cells, got {len(toks)}", num, 1, source)
        rows.append([_cell(t, num, source) for t in toks])
        i += 1
    return rows, i


def parse_patch(text: str, source: str = "<patch>") -> Patch:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty patch file", 0, 0, source)
    num, _, toks = lines[0]
    if toks[0][1] != "patch" or len(toks) != 3:
        raise ParseError("expected 'patch <width> <height>'", num, 1, source)
    w = _int(toks[1], num, "width", source, 1)
    h = _int(toks[2], num, "height", source, 1)
    rows, end = _rows(lines, 1, w, h, source)
    if end != len(lines):
        raise ParseError("trailing content after patch rows", lines[end][0], 1, source)
    return Patch.from_rows(rows)


def patch_rows(p: Patch) -> list[str]:
    return [" ".join("." if c is None else str(c) for c in row) for row in p.rows()]


def dump_patch(p: Patch) -> str:
    return "\n".join([f"patch {p.width} {p.height}"] + patch_rows(p)) + "\n"


# -- rule files -------------------------------------------------------------

@dataclass
class RuleFile:
    """Raw contents of a rule file, before any tileset checks."""
    rules: list[tuple[str, Patch, int]] = field(default_factory=list)  # (tile, patch, line)
    corners: Optional[tuple[str, ...]] = None


def parse_rule_file(text: str, source: str = "<rules>") -> RuleFile:
    lines = list(_lines(text))
    out = RuleFile()
    i = 0
    while i < len(lines):
        num, _, toks = lines[i]
        head = toks[0][1]
        if head == "corners":
            if out.corners is not None:
                raise ParseError("second 'corners' line", num, 1, source)
            if len(toks) < 2:
                raise ParseError("expected 'corners <tile> ...'", num, 1, source)
            out.corners = tuple(t for _, t in toks[1:])
            i += 1
        elif head == "rule":
            if len(toks) != 4:
                raise ParseError("expected 'rule <tile> <width> <height>'", num, 1, source)
            tile = toks[1][1]
            w = _int(toks[2], num, "width", source, 1)
            h = _int(toks[3], num, "height", source, 1)
            rows, i = _rows(lines, i + 1, w, h, source)
            out.rules.append((tile, Patch.from_rows(rows), num))
        else:
            raise ParseError(f"unknown directive {head!r}", num, toks[0][0], source)
    return out


def dump_rule_file(rules: Sequence[tuple[str, Patch]], corners: Optional[Sequence[str]] = None) -> str:
    out = []
    if corners:
        out.append("corners " + " ".join(corners))
    for tile, p in rules:
        out.append(f"rule {tile} {p.width} {p.height}")
        out.extend(patch_rows(p))
    return "\n".join(out) + "\n"


# -- composition scripts ----------------------------------------------------

@dataclass(frozen=True)
class ScriptStep:
    op: str          # load, grow, crop, canvas, place
    args: tuple
    line: int


def parse_script(text: str, source: str = "<script>") -> list[ScriptStep]:
    """Composition script grammar, one directive per line::

        load <name> <patch-file>
        grow <name> <tile> <depth>
        crop <name> <source> <col> <row> <width> <height>
        canvas <width> <height>
        place <name> <col> <row>

    ``place`` lines refer to the most recent ``canvas``.
    """
    arity = {"load": 2, "grow": 3, "crop": 6, "canvas": 2, "place": 3}
    steps = []
    canvas_seen = False
    for num, _, toks in _lines(text):
        op = toks[0][1]
        if op not in arity:
            raise ParseError(f"unknown directive {op!r}", num, toks[0][0], source)
        if len(toks) - 1 != arity[op]:
            raise ParseError(f"'{op}' takes {arity[op]} arguments", num, toks[0][0], source)
        a = toks[1:]
        if op == "load":
            args = (a[0][1], a[1][1])
        elif op == "grow":
            args = (a[0][1], a[1][1], _int(a[2], num, "depth", source))
        elif op == "crop":
            args = (a[0][1], a[1][1]) + tuple(
                _int(t, num, what, source, lo)
                for t, what, lo in zip(a[2:], ("col", "row", "width", "height"), (0, 0, 1, 1))
            )
        elif op == "canvas":
            args = (_int(a[0], num, "width", source, 1), _int(a[1], num, "height", source, 1))
            canvas_seen = True
        else:
            if not canvas_seen:
                raise ParseError("'place' before any 'canvas'", num, 1, source)
            args = (a[0][1], _int(a[1], num, "col", source), _int(a[2], num, "row", source))
        steps.append(ScriptStep(op, args, num))
    return steps
