"""Unfolding rotatable tiles into fixed-orientation Wang tiles.

Each side of an oriented tile becomes a directed symbol: horizontal edges
(north, south) are read west to east and vertical edges (east, west) north
to south.  With the clockwise label convention this means the north and east
labels are kept as they are while south and west labels are reversed.  Two
Wang tiles then abut exactly when the facing symbols are equal.

The enumerators here are deliberately naive and share nothing with the
solver, so they can serve as an oracle for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

from .core import (
    E, N, S, W, Patch, Placement, TileSet, canonical_orientations,
    edges_compatible, oriented_edge,
)


class WangEdgeSymbol(NamedTuple):
    first: int
    second: int


@dataclass(frozen=True)
class WangTile:
    tile: str
    orientation: int
    north: WangEdgeSymbol
    east: WangEdgeSymbol
    south: WangEdgeSymbol
    west: WangEdgeSymbol

    @property
    def placement(self) -> Placement:
        return Placement(self.tile, self.orientation)


@dataclass(frozen=True)
class WangTileSet:
    tiles: tuple[WangTile, ...]
    provenance: str
    palette: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.tiles)


def wang_tile(ts: TileSet, tile_id: str, orientation: int) -> WangTile:
    t = ts.tile(tile_id)
    n, e, s, w = (oriented_edge(t, orientation, side) for side in (N, E, S, W))
    return WangTile(
        tile_id, orientation,
        WangEdgeSymbol(n.first, n.second),
        WangEdgeSymbol(e.first, e.second),
        WangEdgeSymbol(s.second, s.first),
        WangEdgeSymbol(w.second, w.first),
    )


def unfold(ts: TileSet, quotient: bool = True) -> WangTileSet:
    """One Wang tile per orientation; with ``quotient`` only canonical ones."""
    tiles = []
    for t in ts.tiles:
        orients = canonical_orientations(t) if quotient else range(4)
        tiles.extend(wang_tile(ts, t.tile_id, o) for o in orients)
    return WangTileSet(tuple(tiles), ts.name, ts.palette)


def export_wang(wts: WangTileSet) -> str:
    order = {}
    for wt in wts.tiles:
        order.setdefault(wt.tile, len(order))
    ranked = sorted(wts.tiles, key=lambda wt: (order[wt.tile], wt.orientation))

    def sym(s: WangEdgeSymbol) -> str:
        return f"{wts.palette[s.first]},{wts.palette[s.second]}"

    out = [f"# wang tiles from {wts.provenance}: {len(ranked)} tiles",
           "# id N E S W  (horizontal edges read west to east, vertical edges north to south)"]
    for wt in ranked:
        out.append(f"{wt.tile}:{wt.orientation} {sym(wt.north)} {sym(wt.east)} {sym(wt.south)} {sym(wt.west)}")
    return "\n".join(out) + "\n"


# -- naive enumerators --------------------------------------------------------

def _wang_patches(wts: WangTileSet, w: int, h: int) -> Iterator[tuple[WangTile, ...]]:
    grid: list[Optional[WangTile]] = [None] * (w * h)

    def place(i):
        if i == w * h:
            yield tuple(grid)
            return
        c, r = i % w, i // w
        for wt in wts.tiles:
            if c > 0 and grid[i - 1].east != wt.west:
                continue
            if r > 0 and grid[i - w].south != wt.north:
                continue
            grid[i] = wt
            yield from place(i + 1)
        grid[i] = None

    yield from place(0)


def _rotatable_patches(ts: TileSet, w: int, h: int) -> Iterator[tuple[Placement, ...]]:
    options = [(t, o) for t in ts.tiles for o in canonical_orientations(t)]
    grid: list = [None] * (w * h)

    def place(i):
        if i == w * h:
            yield tuple(Placement(t.tile_id, o) for t, o in grid)
            return
        c, r = i % w, i // w
        for t, o in options:
            if c > 0:
                lt, lo = grid[i - 1]
                if not edges_compatible(oriented_edge(lt, lo, E), oriented_edge(t, o, W)):
                    continue
            if r > 0:
                ut, uo = grid[i - w]
                if not edges_compatible(oriented_edge(ut, uo, S), oriented_edge(t, o, N)):
                    continue
            grid[i] = (t, o)
            yield from place(i + 1)
        grid[i] = None

    yield from place(0)


def verify_equivalence(ts: TileSet, w: int, h: int) -> bool:
    """Valid w x h patches agree on both sides of the unfolding bijection."""
    wts = unfold(ts)
    wang_side = {tuple(wt.placement for wt in p) for p in _wang_patches(wts, w, h)}
    rot_side = set(_rotatable_patches(ts, w, h))
    return wang_side == rot_side


def wang_torus_count(wts: WangTileSet, p: int, q: int, shift: int = 0) -> int:
    """Count tilings of the sheared p x q torus by brute-force recursion."""
    n = p * q

    def below(i):
        c, r = i % p, i // p
        return (r + 1) * p + c if r + 1 < q else (c + shift) % p

    right = [(i // p) * p + (i % p + 1) % p for i in range(n)]
    down = [below(i) for i in range(n)]
    grid: list[Optional[WangTile]] = [None] * n

    def fits(i, wt):
        # every constraint is checked once both of its cells are placed
        for j in range(i + 1):
            here = wt if j == i else grid[j]
            if right[j] <= i:
                other = wt if right[j] == i else grid[right[j]]
                if (j == i or right[j] == i) and here.east != other.west:
                    return False
            if down[j] <= i:
                other = wt if down[j] == i else grid[down[j]]
                if (j == i or down[j] == i) and here.south != other.north:
                    return False
        return True

    def place(i):
        if i == n:
            return 1
        total = 0
        for wt in wts.tiles:
            if fits(i, wt):
                grid[i] = wt
                total += place(i + 1)
        grid[i] = None
        return total

    return place(0)


def wang_region_count(wts: WangTileSet, w: int, h: int) -> int:
    return sum(1 for _ in _wang_patches(wts, w, h))


def patch_to_wang(p: Patch, ts: TileSet) -> list[list[WangTile]]:
    return [[wang_tile(ts, c.tile, c.orientation) for c in row] for row in p.rows()]


__all__ = [
    "WangEdgeSymbol", "WangTile", "WangTileSet", "wang_tile", "unfold", "export_wang",
    "verify_equivalence", "wang_torus_count", "wang_region_count", "patch_to_wang",
]
