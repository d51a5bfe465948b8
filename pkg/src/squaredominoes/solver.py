"""Backtracking search over rectangles and sheared tori."""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from . import _kernels
from .core import (
    E, OPPOSITE, S, SIDE_NAMES, W, Patch, Placement, TileSet,
    canonical_orientations, edges_compatible, placement_edge,
)

DEFAULT_CAP = 10**6
DEFAULT_NODE_BUDGET = 10**9


class Boundary(enum.Enum):
    FREE = "free"
    WRAP = "wrap"


class Ordering(enum.Enum):
    ROW_MAJOR = "row-major"
    MOST_CONSTRAINED = "most-constrained"


class InconsistentFixture(ValueError):
    """Fixed placements already violate the matching rule."""


class SearchInconclusive(RuntimeError):
    """The node budget ran out before the search could decide."""


@dataclass(frozen=True)
class RegionProblem:
    width: int
    height: int
    fixed: tuple[tuple[int, int, Placement], ...] = ()
    boundary: Boundary = Boundary.FREE
    shift: int = 0

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError(f"region must be non-empty, got {self.width}x{self.height}")
        fixed = tuple((int(c), int(r), p) for c, r, p in self.fixed)
        object.__setattr__(self, "fixed", fixed)
        seen = set()
        for c, r, _ in fixed:
            if not (0 <= c < self.width and 0 <= r < self.height):
                raise ValueError(f"fixed cell {(c, r)} outside {self.width}x{self.height} region")
            if (c, r) in seen:
                raise ValueError(f"cell {(c, r)} fixed twice")
            seen.add((c, r))
        if not 0 <= self.shift < self.width:
            raise ValueError(f"shift must be in [0, {self.width}), got {self.shift}")
        if self.shift and self.boundary is Boundary.FREE:
            raise ValueError("shift only applies to wrapped regions")


@dataclass(frozen=True)
class TorusSpec:
    p: int
    q: int
    shift: int = 0

    def __post_init__(self):
        if self.p <= 0 or self.q <= 0:
            raise ValueError(f"torus periods must be positive, got {self.p}x{self.q}")
        if not 0 <= self.shift < self.p:
            raise ValueError(f"shift must be in [0, {self.p}), got {self.shift}")

    def problem(self) -> RegionProblem:
        return RegionProblem(self.p, self.q, boundary=Boundary.WRAP, shift=self.shift)


@dataclass(frozen=True)
class SearchConfig:
    ordering: Ordering = Ordering.ROW_MAJOR
    node_budget: int = DEFAULT_NODE_BUDGET


@dataclass
class SearchReport:
    solutions_found: int
    nodes_explored: int
    wall_time: float
    first_solution: Optional[Patch] = None
    capped: bool = False
    inconclusive: bool = False

    def same_outcome(self, other: "SearchReport") -> bool:
        """Equality ignoring wall time."""
        return (
            self.solutions_found, self.nodes_explored, self.first_solution,
            self.capped, self.inconclusive,
        ) == (
            other.solutions_found, other.nodes_explored, other.first_solution,
            other.capped, other.inconclusive,
        )


class CompiledTileSet:
    """Integer edge keys for every (tile, orientation) of a tileset.

    Row ``4*i + o`` holds tile ``i`` turned by ``o``.  Each side gets the key of
    its label read west-to-east or north-to-south, so facing sides fit exactly
    when their keys are equal.
    """

    def __init__(self, ts: TileSet):
        self.tileset = ts
        self.placements = [Placement(t.tile_id, o) for t in ts.tiles for o in range(4)]
        ncol = max(len(ts.palette), 1)
        keys = np.zeros((len(self.placements), 4), np.int64)
        for k, pl in enumerate(self.placements):
            for side in range(4):
                lab = placement_edge(ts, pl, side)
                a, b = lab.first, lab.second
                if side in (S, W):  # south and west read against the clockwise order
                    a, b = b, a
                keys[k, side] = a * ncol + b
        self.keys = keys
        self.canonical = np.array(
            [4 * i + o for i, t in enumerate(ts.tiles) for o in canonical_orientations(t)],
            np.int64,
        )

    def index(self, p: Placement) -> int:
        return 4 * self.tileset.index(p.tile) + p.orientation


def _neighbours(prob: RegionProblem) -> np.ndarray:
    return _kernels.grid_neighbours(
        prob.width, prob.height, prob.boundary is Boundary.WRAP, prob.shift
    )


def _check_fixture(prob: RegionProblem, ts: TileSet, nbr: np.ndarray) -> None:
    w = prob.width
    fixed = {r * w + c: p for c, r, p in prob.fixed}
    for p in fixed.values():
        ts.index(p.tile)
    for cell, here in fixed.items():
        for side in (E, S):
            other = nbr[cell, side]
            if other < 0 or other not in fixed:
                continue
            a = placement_edge(ts, here, side)
            b = placement_edge(ts, fixed[other], OPPOSITE[side])
            if not edges_compatible(a, b):
                raise InconsistentFixture(
                    f"fixed {here} at {(cell % w, cell // w)} and {fixed[other]} at "
                    f"{(other % w, other // w)} clash across side {SIDE_NAMES[side]}"
                )


def _order(prob: RegionProblem, nbr: np.ndarray, ordering: Ordering) -> np.ndarray:
    n = prob.width * prob.height
    if ordering is Ordering.ROW_MAJOR:
        return np.arange(n, dtype=np.int64)
    # static most-constrained-first: fixed cells, then whichever free cell
    # touches the most already ordered cells (row-major on ties)
    fixed = sorted(r * prob.width + c for c, r, _ in prob.fixed)
    placed = set(fixed)
    order = list(fixed)
    score = np.zeros(n, np.int64)
    for cell in fixed:
        for other in nbr[cell]:
            if other >= 0:
                score[other] += 1
    while len(order) < n:
        best = max((c for c in range(n) if c not in placed), key=lambda c: (score[c], -c))
        order.append(best)
        placed.add(best)
        for other in nbr[best]:
            if other >= 0:
                score[other] += 1
    return np.array(order, np.int64)


def _domains(prob: RegionProblem, ct: CompiledTileSet):
    n = prob.width * prob.height
    fixed = {r * prob.width + c: ct.index(p) for c, r, p in prob.fixed}
    ptr = np.zeros(n + 1, np.int64)
    parts = []
    for cell in range(n):
        part = np.array([fixed[cell]], np.int64) if cell in fixed else ct.canonical
        parts.append(part)
        ptr[cell + 1] = ptr[cell] + len(part)
    dom = np.concatenate(parts) if parts else np.zeros(0, np.int64)
    return ptr, dom


def _run(prob: RegionProblem, ts: TileSet, cap: int, config: SearchConfig,
         compiled: Optional[CompiledTileSet] = None) -> SearchReport:
    if cap <= 0:
        raise ValueError("cap must be positive")
    start = time.perf_counter()
    ct = compiled or CompiledTileSet(ts)
    nbr = _neighbours(prob)
    _check_fixture(prob, ts, nbr)
    order = _order(prob, nbr, config.ordering)
    ptr, dom = _domains(prob, ct)
    first = np.full(prob.width * prob.height, -1, np.int64)
    count, nodes, status = _kernels.backtrack(
        ct.keys, nbr, order, ptr, dom, int(cap), int(config.node_budget), first
    )
    patch = None
    if count:
        patch = Patch(prob.width, prob.height, [ct.placements[k] for k in first])
    return SearchReport(
        solutions_found=int(count),
        nodes_explored=int(nodes),
        wall_time=time.perf_counter() - start,
        first_solution=patch,
        capped=status == _kernels.CAPPED,
        inconclusive=status == _kernels.OUT_OF_BUDGET,
    )


def solve_region(prob: RegionProblem, ts: TileSet,
                 config: SearchConfig = SearchConfig()) -> Optional[Patch]:
    """First valid completion in search order, or None when none exists."""
    report = _run(prob, ts, 1, config)
    if report.inconclusive:
        raise SearchInconclusive(
            f"node budget {config.node_budget} exhausted on {prob.width}x{prob.height} region"
        )
    return report.first_solution


def count_region_tilings(prob: RegionProblem, ts: TileSet, cap: int = DEFAULT_CAP,
                         config: SearchConfig = SearchConfig()) -> SearchReport:
    """Count completions; symmetric orientations of a free cell count once."""
    return _run(prob, ts, cap, config)


def enumerate_torus_tilings(spec: TorusSpec, ts: TileSet, cap: int = DEFAULT_CAP,
                            config: SearchConfig = SearchConfig(),
                            compiled: Optional[CompiledTileSet] = None) -> SearchReport:
    return _run(spec.problem(), ts, cap, config, compiled)


@dataclass
class ScanReport:
    tileset: str
    max_p: int
    max_q: int
    entries: dict[tuple[int, int, int], SearchReport] = field(default_factory=dict)

    def nonzero(self) -> list[tuple[int, int, int]]:
        return [k for k, r in self.entries.items() if r.solutions_found]

    def inconclusive(self) -> list[tuple[int, int, int]]:
        return [k for k, r in self.entries.items() if r.inconclusive]

    @property
    def wall_time(self) -> float:
        return sum(r.wall_time for r in self.entries.values())


def torus_specs(max_p: int, max_q: int) -> Iterable[TorusSpec]:
    for p in range(1, max_p + 1):
        for q in range(1, max_q + 1):
            for shift in range(p):
                yield TorusSpec(p, q, shift)


def periodicity_scan(ts: TileSet, max_p: int, max_q: int, cap: int = DEFAULT_CAP,
                     config: SearchConfig = SearchConfig(), progress=None) -> ScanReport:
    if max_p < 1 or max_q < 1:
        raise ValueError("max_p and max_q must be at least 1")
    ct = CompiledTileSet(ts)
    report = ScanReport(ts.name, max_p, max_q)
    for spec in torus_specs(max_p, max_q):
        entry = enumerate_torus_tilings(spec, ts, cap, config, ct)
        report.entries[(spec.p, spec.q, spec.shift)] = entry
        if progress is not None:
            progress(spec, entry)
    return report


def periodic_patch(witness: Patch, shift: int, reps_x: int = 3, reps_y: int = 3) -> Patch:
    """Unroll a torus witness into a plane patch of ``reps_x`` by ``reps_y`` copies."""
    p, q = witness.width, witness.height
    cells = [
        witness[((col + shift * (row // q)) % p, row % q)]
        for row in range(reps_y * q) for col in range(reps_x * p)
    ]
    return Patch(reps_x * p, reps_y * q, cells)


def placements_in_order(ts: TileSet) -> Sequence[Placement]:
    """Canonical placements in tie-break order (tileset order, then orientation)."""
    return [Placement(t.tile_id, o) for t in ts.tiles for o in canonical_orientations(t)]


__all__ = [
    "Boundary", "Ordering", "InconsistentFixture", "SearchInconclusive", "RegionProblem",
    "TorusSpec", "SearchConfig", "SearchReport", "ScanReport", "CompiledTileSet",
    "solve_region", "count_region_tilings", "enumerate_torus_tilings",
    "periodicity_scan", "periodic_patch", "torus_specs", "placements_in_order",
    "DEFAULT_CAP", "DEFAULT_NODE_BUDGET",
]
