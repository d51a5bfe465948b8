"""Edge-matched rotatable square tiles: search, substitution, Wang unfolding
and rendering."""

from .core import (
    E, N, S, W, EdgeLabel, Patch, Placement, TileDef, TileSet, TileSetError, Violation,
    canonical_orientations, edges_compatible, oriented_edge, rotate_patch,
    tile_symmetries, validate_patch,
)
from .formats import (
    ParseError, dump_patch, dump_tileset, parse_patch, parse_rule_file, parse_script,
    parse_tileset,
)
from .solver import (
    Boundary, InconsistentFixture, Ordering, RegionProblem, ScanReport, SearchConfig,
    SearchInconclusive, SearchReport, TorusSpec, count_region_tilings,
    enumerate_torus_tilings, periodic_patch, periodicity_scan, solve_region,
)
from .substitution import (
    BorderWord, BudgetExceeded, DimensionMismatch, FixedPointReport, HierarchyNode, Hole,
    IncompletePatch, InvalidRule, MissingRule, OverlapComposition, OverlapConflict, RuleSet,
    SubstitutionRule, border_word, build_rules, compose_overlap, expand, grow,
    identity_rules, load_rules, run_script, verify_fixed_point,
)
from .wang import (
    WangEdgeSymbol, WangTile, WangTileSet, export_wang, patch_to_wang, unfold,
    verify_equivalence, wang_region_count, wang_tile, wang_torus_count,
)
from .render import RenderOptions, render_svg
from .catalog import a7_rules, a7_tileset

__version__ = "0.1.0"
