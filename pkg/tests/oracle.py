"""Brute-force reference enumerators used as test oracles.

Written against the raw tile data only: no imports from the solver or the
Wang module, and no pruning.
"""

from itertools import product


def _edges(tile):
    return [(e.first, e.second) for e in (tile.north, tile.east, tile.south, tile.west)]


def _turned(tile, o):
    e = _edges(tile)
    return [e[(side - o) % 4] for side in range(4)]


def canonical(tileset):
    out = []
    for tile in tileset.tiles:
        seen = []
        for o in range(4):
            sides = _turned(tile, o)
            if sides in seen:
                break
            seen.append(sides)
            out.append((tile.tile_id, o, sides))
    return out


def _fits(a, b):
    return a[0] == b[1] and a[1] == b[0]


def count_rectangles(tileset, width, height):
    options = canonical(tileset)
    total = 0
    for combo in product(options, repeat=width * height):
        ok = True
        for r in range(height):
            for c in range(width):
                here = combo[r * width + c][2]
                if c + 1 < width and not _fits(here[1], combo[r * width + c + 1][2][3]):
                    ok = False
                    break
                if r + 1 < height and not _fits(here[2], combo[(r + 1) * width + c][2][0]):
                    ok = False
                    break
            if not ok:
                break
        total += ok
    return total


def count_torus(tileset, p, q, shift):
    options = canonical(tileset)
    total = 0
    for combo in product(options, repeat=p * q):
        def at(c, r):
            return combo[r * p + c][2]
        ok = all(
            _fits(at(c, r)[1], at((c + 1) % p, r)[3])
            and _fits(at(c, r)[2], at(c, r + 1)[0] if r + 1 < q else at((c + shift) % p, 0)[0])
            for r in range(q) for c in range(p)
        )
        total += ok
    return total


def count_rectangles_transfer(tileset, width, height):
    """Exact count by brute-forcing the short side and chaining along the long one.

    Every stack of ``min(width, height)`` cells is enumerated without pruning;
    stacks are then joined side by side with a transfer matrix.  Feasible for
    any region whose short side is at most 2 or 3 cells.
    """
    options = canonical(tileset)
    short, long_ = min(width, height), max(width, height)
    along_x = height <= width   # stacks are columns, chained left to right
    inner, outer = (2, 0) if along_x else (1, 3)   # sides joining cells within a stack / across stacks
    across_a, across_b = (1, 3) if along_x else (2, 0)
    stacks = [
        s for s in product(options, repeat=short)
        if all(_fits(s[i][2][inner], s[i + 1][2][outer]) for i in range(short - 1))
    ]
    counts = [1] * len(stacks)
    for _ in range(long_ - 1):
        counts = [
            sum(
                n for n, prev in zip(counts, stacks)
                if all(_fits(prev[i][2][across_a], nxt[i][2][across_b]) for i in range(short))
            )
            for nxt in stacks
        ]
    return sum(counts)
