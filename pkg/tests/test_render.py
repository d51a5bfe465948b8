import re

import pytest

from squaredominoes import Patch, Placement, RenderOptions, render_svg
from squaredominoes.render import color_for

from conftest import mismatching_pair


def test_single_cell_draws_eight_triangles(a7):
    tile = a7.tiles[0].tile_id
    svg = render_svg(Patch.from_rows([[Placement(tile, 0)]]), a7)
    assert svg.count('<g class="cell"') == 1
    assert svg.count("<polygon") == 8
    assert 'width="40" height="40"' in svg


def test_empty_cells_show_background(a7):
    svg = render_svg(Patch.from_rows([[None, None]]), a7, RenderOptions(background="#abcdef"))
    assert "<polygon" not in svg
    assert 'fill="#abcdef"' in svg


def test_rendering_is_deterministic(a7, rules):
    p = rules.supertile(Placement(a7.tiles[0].tile_id, 1))
    assert render_svg(p, a7) == render_svg(p, a7)


def test_coordinates_are_integers(a7, rules):
    p = rules.supertile(Placement(a7.tiles[0].tile_id, 0))
    svg = render_svg(p, a7, RenderOptions(cell=10))
    for pts in re.findall(r'points="([^"]*)"', svg):
        assert all(re.fullmatch(r"\d+,\d+", pair) for pair in pts.split())


def test_matching_halves_share_colors(a7, rules):
    # across a matched border the triangles on either side carry the same fills
    p = rules.supertile(Placement(a7.tiles[0].tile_id, 0))
    svg = render_svg(p, a7, RenderOptions(cell=2, outline=False))
    cells = re.findall(r'<g class="cell" data-cell="(\d+),(\d+)"[^>]*>\n((?:<polygon[^\n]*\n){8})', svg)
    fills = {
        (int(c), int(r)): re.findall(r'fill="([^"]*)"', body) for c, r, body in cells
    }
    for (c, r), f in fills.items():
        if (c + 1, r) in fills:
            east = f[2:4]
            west = fills[c + 1, r][6:8]
            assert east == west[::-1]


def test_violations_are_marked(a7):
    bad = Patch.from_rows([list(mismatching_pair(a7))])
    svg = render_svg(bad, a7, RenderOptions(show_violations=True))
    assert svg.count('class="violation"') == 1
    assert 'class="violation"' not in render_svg(bad, a7)


def test_labels_and_odd_cell_size(a7):
    p = Patch.from_rows([[Placement(a7.tiles[0].tile_id, 0)]])
    assert "<text" in render_svg(p, a7, RenderOptions(labels=True))
    with pytest.raises(ValueError):
        render_svg(p, a7, RenderOptions(cell=7))


def test_color_fallback_is_stable():
    assert color_for("red") == "#d62728"
    assert color_for("RED") == color_for("red")
    assert color_for("chartreuse-ish") == color_for("chartreuse-ish")
    assert color_for("x1") != color_for("x2")
