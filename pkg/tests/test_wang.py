import itertools

import pytest
from hypothesis import given, settings, strategies as st

from squaredominoes import (
    E, N, S, W, Placement, TorusSpec, canonical_orientations, edges_compatible,
    enumerate_torus_tilings, export_wang, oriented_edge, patch_to_wang, tile_symmetries,
    unfold, verify_equivalence, wang_region_count, wang_tile, wang_torus_count,
)

import oracle
from conftest import tilesets


def test_cardinality(a7):
    wts = unfold(a7)
    assert len(wts) == sum(4 // len(tile_symmetries(t)) for t in a7.tiles)
    assert len(unfold(a7, quotient=False)) == 4 * len(a7)


def test_quotient_keeps_canonical_orientations(a7):
    for wt in unfold(a7).tiles:
        assert wt.orientation in canonical_orientations(a7.tile(wt.tile))


def _pairs(ts):
    for a, b in itertools.product(ts.tile_ids, repeat=2):
        for oa, ob in itertools.product(range(4), repeat=2):
            yield Placement(a, oa), Placement(b, ob)


def test_matching_transport(a7):
    # facing edges fit exactly when the Wang symbols are equal
    for pa, pb in _pairs(a7):
        wa = wang_tile(a7, pa.tile, pa.orientation)
        wb = wang_tile(a7, pb.tile, pb.orientation)
        ta, tb = a7.tile(pa.tile), a7.tile(pb.tile)
        horiz = edges_compatible(oriented_edge(ta, pa.orientation, E), oriented_edge(tb, pb.orientation, W))
        vert = edges_compatible(oriented_edge(ta, pa.orientation, S), oriented_edge(tb, pb.orientation, N))
        assert horiz == (wa.east == wb.west)
        assert vert == (wa.south == wb.north)


@pytest.mark.parametrize("w,h", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_patch_equivalence(a7, w, h):
    assert verify_equivalence(a7, w, h)


@settings(max_examples=30, deadline=None)
@given(tilesets(), st.integers(1, 3), st.integers(1, 2))
def test_region_counts_agree(ts, w, h):
    assert wang_region_count(unfold(ts), w, h) == oracle.count_rectangles(ts, w, h)


@pytest.mark.parametrize("p,q", [(p, q) for p in range(1, 4) for q in range(1, 4)])
def test_torus_counts_agree(a7, p, q):
    wts = unfold(a7)
    for shift in range(p):
        got = enumerate_torus_tilings(TorusSpec(p, q, shift), a7).solutions_found
        assert wang_torus_count(wts, p, q, shift) == got


@settings(max_examples=25, deadline=None)
@given(tilesets(max_tiles=2, max_colors=2), st.integers(1, 3), st.integers(1, 2), st.data())
def test_torus_counts_agree_random(ts, p, q, data):
    shift = data.draw(st.integers(0, p - 1))
    expect = oracle.count_torus(ts, p, q, shift)
    assert wang_torus_count(unfold(ts), p, q, shift) == expect
    assert enumerate_torus_tilings(TorusSpec(p, q, shift), ts).solutions_found == expect


def test_export_format(a7):
    text = export_wang(unfold(a7))
    lines = text.splitlines()
    assert lines[0].startswith("#") and lines[1].startswith("#")
    body = lines[2:]
    assert len(body) == len(unfold(a7))
    for line in body:
        ident, *syms = line.split()
        tile, o = ident.split(":")
        assert tile in a7 and o in "0123"
        assert len(syms) == 4 and all(len(s.split(",")) == 2 for s in syms)
    assert export_wang(unfold(a7)) == text


def test_patch_to_wang(a7, rules):
    p = rules.supertile(Placement(a7.tiles[0].tile_id, 0))
    grid = patch_to_wang(p, a7)
    for r, row in enumerate(grid):
        for c, wt in enumerate(row):
            if c + 1 < len(row):
                assert wt.east == row[c + 1].west
            if r + 1 < len(grid):
                assert wt.south == grid[r + 1][c].north
