"""Tiles, orientations, patches and the edge-matching predicate.

Conventions used throughout the package:

* sides are indexed ``N=0, E=1, S=2, W=3``;
* an :class:`EdgeLabel` holds the two half-edge colors read *clockwise*
  around the tile that owns the edge;
* an orientation is a number of clockwise quarter-turns in ``0..3``;
* patches are stored row-major with row 0 at the top.

Because labels are read clockwise, rotating a tile only permutes its sides,
and two facing edges match when one is the reverse of the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

N, E, S, W = 0, 1, 2, 3
SIDE_NAMES = "NESW"
OPPOSITE = (S, W, N, E)
# (dcol, drow) for each side
STEP = ((0, -1), (1, 0), (0, 1), (-1, 0))


def side_index(side) -> int:
    if isinstance(side, str):
        return SIDE_NAMES.index(side.upper())
    if side not in (0, 1, 2, 3):
        raise ValueError(f"invalid side {side!r}")
    return side


def rotate_side(side: int, quarter_turns: int = 1) -> int:
    """Side that ``side`` faces after rotating clockwise."""
    return (side + quarter_turns) % 4


@dataclass(frozen=True, order=True)
class EdgeLabel:
    first: int
    second: int

    def reversed(self) -> "EdgeLabel":
        return EdgeLabel(self.second, self.first)

    @property
    def palindromic(self) -> bool:
        return self.first == self.second


@dataclass(frozen=True)
class TileDef:
    tile_id: str
    north: EdgeLabel
    east: EdgeLabel
    south: EdgeLabel
    west: EdgeLabel

    @property
    def edges(self) -> tuple[EdgeLabel, EdgeLabel, EdgeLabel, EdgeLabel]:
        return (self.north, self.east, self.south, self.west)


class TileSetError(ValueError):
    pass


@dataclass(frozen=True)
class TileSet:
    name: str
    palette: tuple[str, ...]
    tiles: tuple[TileDef, ...]

    def __post_init__(self):
        object.__setattr__(self, "palette", tuple(self.palette))
        object.__setattr__(self, "tiles", tuple(self.tiles))
        seen = set()
        for tile in self.tiles:
            if tile.tile_id in seen:
                raise TileSetError(f"duplicate tile id {tile.tile_id!r}")
            seen.add(tile.tile_id)
            for label in tile.edges:
                for color in (label.first, label.second):
                    if not 0 <= color < len(self.palette):
                        raise TileSetError(
                            f"tile {tile.tile_id!r}: color index {color} outside palette"
                        )
        object.__setattr__(self, "_index", {t.tile_id: i for i, t in enumerate(self.tiles)})

    def __len__(self) -> int:
        return len(self.tiles)

    def __iter__(self) -> Iterator[TileDef]:
        return iter(self.tiles)

    def __contains__(self, tile_id) -> bool:
        return tile_id in self._index

    def index(self, tile_id: str) -> int:
        try:
            return self._index[tile_id]
        except KeyError:
            raise KeyError(f"tile {tile_id!r} not in tileset {self.name!r}") from None

    def tile(self, tile_id: str) -> TileDef:
        return self.tiles[self.index(tile_id)]

    @property
    def tile_ids(self) -> tuple[str, ...]:
        return tuple(t.tile_id for t in self.tiles)

    def color_name(self, color: int) -> str:
        return self.palette[color]


@dataclass(frozen=True, order=True)
class Placement:
    tile: str
    orientation: int = 0

    def __post_init__(self):
        if self.orientation not in (0, 1, 2, 3):
            raise ValueError(f"orientation must be in 0..3, got {self.orientation!r}")

    def rotated(self, quarter_turns: int = 1) -> "Placement":
        return Placement(self.tile, (self.orientation + quarter_turns) % 4)

    def __str__(self) -> str:
        return f"{self.tile}:{self.orientation}"


@dataclass(frozen=True)
class Violation:
    cell_a: tuple[int, int]
    cell_b: tuple[int, int]
    side: str
    detail: tuple[EdgeLabel, EdgeLabel]

    def describe(self, ts: Optional[TileSet] = None) -> str:
        def fmt(label):
            if ts is None:
                return f"({label.first},{label.second})"
            return f"({ts.palette[label.first]},{ts.palette[label.second]})"

        a, b = self.detail
        return (
            f"cell {self.cell_a} {self.side} / cell {self.cell_b}: "
            f"{fmt(a)} does not match {fmt(b)}"
        )


def oriented_edge(tile: TileDef, orientation: int, side) -> EdgeLabel:
    """Edge label shown on ``side`` after turning ``tile`` clockwise."""
    return tile.edges[(side_index(side) - orientation) % 4]


def edges_compatible(a: EdgeLabel, b: EdgeLabel) -> bool:
    return a.first == b.second and a.second == b.first


def tile_symmetries(tile: TileDef) -> frozenset[int]:
    edges = tile.edges
    return frozenset(
        r for r in range(4) if all(edges[(s - r) % 4] == edges[s] for s in range(4))
    )


def canonical_orientations(tile: TileDef) -> tuple[int, ...]:
    """Smallest orientation of each coset of the tile's symmetry group."""
    return tuple(range(4 // len(tile_symmetries(tile))))


def canonical_placement(p: Placement, ts: TileSet) -> Placement:
    period = 4 // len(tile_symmetries(ts.tile(p.tile)))
    return Placement(p.tile, p.orientation % period)


class Patch:
    """Rectangular grid of optional placements (row-major, row 0 on top)."""

    __slots__ = ("width", "height", "cells")

    def __init__(self, width: int, height: int, cells: Optional[Sequence[Optional[Placement]]] = None):
        if width <= 0 or height <= 0:
            raise ValueError(f"patch dimensions must be positive, got {width}x{height}")
        if cells is None:
            cells = (None,) * (width * height)
        cells = tuple(cells)
        if len(cells) != width * height:
            raise ValueError(f"expected {width * height} cells, got {len(cells)}")
        object.__setattr__(self, "width", width)
        object.__setattr__(self, "height", height)
        object.__setattr__(self, "cells", cells)

    def __setattr__(self, name, value):
        raise AttributeError("Patch is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Optional[Placement]]]) -> "Patch":
        height = len(rows)
        width = len(rows[0]) if height else 0
        if any(len(row) != width for row in rows):
            raise ValueError("ragged rows")
        return cls(width, height, [c for row in rows for c in row])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Patch):
            return NotImplemented
        return (self.width, self.height, self.cells) == (other.width, other.height, other.cells)

    def __hash__(self) -> int:
        return hash((self.width, self.height, self.cells))

    def __repr__(self) -> str:
        return f"Patch({self.width}x{self.height}, {sum(c is not None for c in self.cells)} placed)"

    def __getitem__(self, pos: tuple[int, int]) -> Optional[Placement]:
        col, row = pos
        if not (0 <= col < self.width and 0 <= row < self.height):
            raise IndexError(f"cell {pos} outside {self.width}x{self.height} patch")
        return self.cells[row * self.width + col]

    def rows(self) -> list[tuple[Optional[Placement], ...]]:
        w = self.width
        return [self.cells[r * w:(r + 1) * w] for r in range(self.height)]

    def items(self) -> Iterator[tuple[tuple[int, int], Optional[Placement]]]:
        for i, cell in enumerate(self.cells):
            yield (i % self.width, i // self.width), cell

    @property
    def size(self) -> tuple[int, int]:
        return self.width, self.height

    @property
    def is_complete(self) -> bool:
        return all(c is not None for c in self.cells)

    def with_cells(self, updates: Iterable[tuple[tuple[int, int], Optional[Placement]]]) -> "Patch":
        cells = list(self.cells)
        for (col, row), placement in updates:
            if not (0 <= col < self.width and 0 <= row < self.height):
                raise IndexError(f"cell {(col, row)} outside patch")
            cells[row * self.width + col] = placement
        return Patch(self.width, self.height, cells)

    def crop(self, col: int, row: int, width: int, height: int) -> "Patch":
        if col < 0 or row < 0 or col + width > self.width or row + height > self.height:
            raise ValueError(
                f"crop {width}x{height}+{col}+{row} exceeds {self.width}x{self.height} patch"
            )
        w = self.width
        return Patch(width, height, [
            self.cells[(row + r) * w + col + c] for r in range(height) for c in range(width)
        ])

    def rotated(self, quarter_turns: int = 1) -> "Patch":
        """Rotate positions and placements clockwise."""
        p = self
        for _ in range(quarter_turns % 4):
            w, h = p.width, p.height
            cells = [None] * (w * h)
            # (c, r) -> (h-1-r, c) in a h-wide grid
            for r in range(h):
                for c in range(w):
                    cell = p.cells[r * w + c]
                    cells[c * h + (h - 1 - r)] = None if cell is None else cell.rotated(1)
            p = Patch(h, w, cells)
        return p


def rotate_patch(p: Patch, quarter_turns: int = 1) -> Patch:
    return p.rotated(quarter_turns)


def placement_edge(ts: TileSet, p: Placement, side: int) -> EdgeLabel:
    return oriented_edge(ts.tile(p.tile), p.orientation, side)


def validate_patch(p: Patch, ts: TileSet) -> list[Violation]:
    """Mismatched shared borders, one per pair, scanning E then S neighbours."""
    edge_cache: dict[Placement, tuple[EdgeLabel, ...]] = {}

    def edges(pl: Placement):
        got = edge_cache.get(pl)
        if got is None:
            tile = ts.tile(pl.tile)
            got = tuple(oriented_edge(tile, pl.orientation, s) for s in range(4))
            edge_cache[pl] = got
        return got

    out = []
    w, h, cells = p.width, p.height, p.cells
    for r in range(h):
        for c in range(w):
            here = cells[r * w + c]
            if here is None:
                continue
            if c + 1 < w:
                right = cells[r * w + c + 1]
                if right is not None:
                    a, b = edges(here)[E], edges(right)[W]
                    if not edges_compatible(a, b):
                        out.append(Violation((c, r), (c + 1, r), "E", (a, b)))
            if r + 1 < h:
                below = cells[(r + 1) * w + c]
                if below is not None:
                    a, b = edges(here)[S], edges(below)[N]
                    if not edges_compatible(a, b):
                        out.append(Violation((c, r), (c, r + 1), "S", (a, b)))
    return out
