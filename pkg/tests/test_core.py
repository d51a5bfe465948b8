import random

import pytest
from hypothesis import given, strategies as st

from squaredominoes import (
    E, N, S, W, EdgeLabel, Patch, Placement, TileDef, TileSet, TileSetError,
    canonical_orientations, edges_compatible, oriented_edge, tile_symmetries, validate_patch,
)
from squaredominoes.core import OPPOSITE, rotate_side

from conftest import mismatching_pair, tilesets

X, Y = 0, 1
labels = st.builds(EdgeLabel, st.integers(0, 3), st.integers(0, 3))
tiles = st.builds(lambda n, e, s, w: TileDef("t", n, e, s, w), labels, labels, labels, labels)


def generic_tile():
    return TileDef("g", EdgeLabel(0, 1), EdgeLabel(1, 2), EdgeLabel(2, 3), EdgeLabel(3, 0))


def test_oriented_edge_examples():
    t = generic_tile()
    assert oriented_edge(t, 0, N) == t.north
    assert oriented_edge(t, 1, E) == t.north
    assert oriented_edge(t, 2, N) == t.south
    assert oriented_edge(t, 3, "w") == t.north


def test_compatibility_examples():
    assert edges_compatible(EdgeLabel(X, Y), EdgeLabel(Y, X))
    assert not edges_compatible(EdgeLabel(X, Y), EdgeLabel(X, Y))
    assert edges_compatible(EdgeLabel(X, X), EdgeLabel(X, X))


@given(tiles, st.integers(0, 3), st.integers(0, 3))
def test_rotation_coherence(t, o, side):
    assert oriented_edge(t, (o + 1) % 4, rotate_side(side)) == oriented_edge(t, o, side)


@given(labels, labels)
def test_compatibility_is_symmetric(a, b):
    assert edges_compatible(a, b) == edges_compatible(b, a)


@given(tiles)
def test_symmetries_form_subgroup(t):
    sym = tile_symmetries(t)
    assert 0 in sym
    assert len(sym) in (1, 2, 4)
    assert all((a + b) % 4 in sym for a in sym for b in sym)
    assert len(canonical_orientations(t)) == 4 // len(sym)


def test_symmetry_examples():
    lab = EdgeLabel(X, X)
    assert tile_symmetries(TileDef("m", lab, lab, lab, lab)) == {0, 1, 2, 3}
    assert tile_symmetries(generic_tile()) == {0}
    a, b = EdgeLabel(0, 1), EdgeLabel(1, 1)
    assert tile_symmetries(TileDef("h", a, b, a, b)) == {0, 2}


def test_a7_symmetries_match_brute_force(a7):
    for t in a7.tiles:
        expect = {r for r in range(4) if all(t.edges[(s - r) % 4] == t.edges[s] for s in range(4))}
        assert tile_symmetries(t) == expect


def test_tileset_rejects_duplicates_and_bad_colors():
    lab = EdgeLabel(0, 0)
    t = TileDef("a", lab, lab, lab, lab)
    with pytest.raises(TileSetError):
        TileSet("x", ("c",), (t, t))
    with pytest.raises(TileSetError):
        TileSet("x", ("c",), (TileDef("b", EdgeLabel(0, 1), lab, lab, lab),))


def test_placement_orientation_range():
    with pytest.raises(ValueError):
        Placement("A", 4)
    assert str(Placement("A", 3)) == "A:3"


def test_validate_trivial_cases(a7):
    assert validate_patch(Patch(3, 3), a7) == []
    for t in a7.tile_ids:
        for o in range(4):
            assert validate_patch(Patch(1, 1, [Placement(t, o)]), a7) == []


def test_one_violation_for_mismatched_pair(a7):
    pa, pb = mismatching_pair(a7)
    v = validate_patch(Patch(2, 1, [pa, pb]), a7)
    assert len(v) == 1
    assert (v[0].cell_a, v[0].cell_b, v[0].side) == ((0, 0), (1, 0), "E")


def test_empty_cells_impose_nothing(a7):
    pa, pb = mismatching_pair(a7)
    assert validate_patch(Patch(3, 1, [pa, None, pb]), a7) == []


def _random_patch(ts, w, h, rng):
    return Patch(w, h, [Placement(rng.choice(ts.tile_ids), rng.randrange(4)) for _ in range(w * h)])


def _violation_set_by_brute_force(p, ts):
    found = set()
    for (c, r), cell in p.items():
        for side in range(4):
            dc, dr = ((0, -1), (1, 0), (0, 1), (-1, 0))[side]
            c2, r2 = c + dc, r + dr
            if not (0 <= c2 < p.width and 0 <= r2 < p.height):
                continue
            other = p[c2, r2]
            a = oriented_edge(ts.tile(cell.tile), cell.orientation, side)
            b = oriented_edge(ts.tile(other.tile), other.orientation, OPPOSITE[side])
            if not edges_compatible(a, b):
                found.add(frozenset([(c, r), (c2, r2)]))
    return found


@given(tilesets(), st.integers(1, 4), st.integers(1, 4), st.integers(0, 10**6))
def test_validate_matches_all_direction_scan(ts, w, h, seed):
    p = _random_patch(ts, w, h, random.Random(seed))
    got = {frozenset([v.cell_a, v.cell_b]) for v in validate_patch(p, ts)}
    assert got == _violation_set_by_brute_force(p, ts)
    assert len(validate_patch(p, ts)) == len(got)


def test_rotating_valid_patch_stays_valid(rules, a7):
    from squaredominoes import grow
    p = grow("A", 2, rules).realized
    assert validate_patch(p, a7) == []
    q = p
    for _ in range(4):
        q = q.rotated()
        assert validate_patch(q, a7) == []
    assert q == p


def test_patch_basics():
    p = Patch(2, 3)
    assert p.size == (2, 3) and not p.is_complete
    q = p.with_cells([((1, 2), Placement("A", 1))])
    assert q[1, 2] == Placement("A", 1) and p[1, 2] is None
    with pytest.raises(IndexError):
        q[2, 0]
    with pytest.raises(AttributeError):
        q.width = 5
    r = q.rotated()
    assert r.size == (3, 2) and r[0, 1] == Placement("A", 2)
    assert q.crop(1, 1, 1, 2).cells == (None, Placement("A", 1))
