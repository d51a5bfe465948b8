import sys

import pytest
from hypothesis import strategies as st

from squaredominoes import (
    E, W, EdgeLabel, Placement, TileDef, TileSet, a7_rules, a7_tileset, edges_compatible,
    oriented_edge,
)


@pytest.fixture(scope="session")
def a7():
    return a7_tileset()


@pytest.fixture(scope="session")
def rules(a7):
    return a7_rules(a7)


def mono_tileset():
    lab = EdgeLabel(0, 0)
    return TileSet("mono", ("gray",), (TileDef("M", lab, lab, lab, lab),))


@pytest.fixture
def mono():
    return mono_tileset()


@st.composite
def tilesets(draw, max_tiles=3, max_colors=3):
    ncol = draw(st.integers(1, max_colors))
    color = st.integers(0, ncol - 1)
    label = st.builds(EdgeLabel, color, color)
    n = draw(st.integers(1, max_tiles))
    tiles = tuple(
        TileDef(f"t{i}", draw(label), draw(label), draw(label), draw(label)) for i in range(n)
    )
    return TileSet("random", tuple(f"c{i}" for i in range(ncol)), tiles)


def mismatching_pair(ts):
    for a in ts.tile_ids:
        for oa in range(4):
            for b in ts.tile_ids:
                for ob in range(4):
                    pa, pb = Placement(a, oa), Placement(b, ob)
                    ea = oriented_edge(ts.tile(a), oa, E)
                    eb = oriented_edge(ts.tile(b), ob, W)
                    if not edges_compatible(ea, eb):
                        return pa, pb
    raise AssertionError("no mismatching pair")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
