"""Text tables and JSON documents for search, scan and verification results.

JSON documents carry a ``schema`` field; timing lives only under keys named
``wall_time`` so that reports can be compared with those keys removed.
"""

from __future__ import annotations

import json

from .core import TileSet, Violation
from .formats import dump_patch
from .solver import ScanReport, SearchReport
from .substitution import FixedPointReport


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def strip_timing(doc):
    if isinstance(doc, dict):
        return {k: strip_timing(v) for k, v in doc.items() if k != "wall_time"}
    if isinstance(doc, list):
        return [strip_timing(v) for v in doc]
    return doc


def search_dict(r: SearchReport) -> dict:
    return {
        "solutions_found": r.solutions_found,
        "nodes_explored": r.nodes_explored,
        "capped": r.capped,
        "inconclusive": r.inconclusive,
        "wall_time": round(r.wall_time, 6),
        "first_solution": None if r.first_solution is None else dump_patch(r.first_solution),
    }


def scan_dict(scan: ScanReport) -> dict:
    entries = []
    for (p, q, shift), r in sorted(scan.entries.items()):
        entries.append({
            "p": p, "q": q, "shift": shift,
            "count": r.solutions_found,
            "nodes": r.nodes_explored,
            "capped": r.capped,
            "inconclusive": r.inconclusive,
            "wall_time": round(r.wall_time, 6),
        })
    return {
        "schema": "squaredominoes.torus-scan/1",
        "tileset": scan.tileset,
        "max_p": scan.max_p,
        "max_q": scan.max_q,
        "nonzero": [list(k) for k in sorted(scan.nonzero())],
        "inconclusive": [list(k) for k in sorted(scan.inconclusive())],
        "entries": entries,
        "wall_time": round(scan.wall_time, 6),
    }


def scan_text(scan: ScanReport, timing: bool = False) -> str:
    head = f"{'p':>3} {'q':>3} {'shift':>5} {'count':>10} {'nodes':>14}  status"
    lines = [f"torus scan of {scan.tileset}, p <= {scan.max_p}, q <= {scan.max_q}", head]
    for (p, q, shift), r in sorted(scan.entries.items()):
        if r.inconclusive:
            status = "INCONCLUSIVE"
        elif r.solutions_found:
            status = "PERIODIC" + (" (capped)" if r.capped else "")
        else:
            status = "none"
        row = f"{p:>3} {q:>3} {shift:>5} {r.solutions_found:>10} {r.nodes_explored:>14}  {status}"
        if timing:
            row += f"  {r.wall_time:.3f}s"
        lines.append(row)
    nz, inc = scan.nonzero(), scan.inconclusive()
    lines.append(
        f"{len(scan.entries)} tori, {len(nz)} with periodic tilings, {len(inc)} inconclusive"
    )
    if nz:
        lines.append("!! PERIODIC TILINGS FOUND: " + " ".join(f"{p}x{q}/{s}" for p, q, s in sorted(nz)))
    return "\n".join(lines) + "\n"


def violations_dict(violations: list[Violation], ts: TileSet) -> dict:
    return {
        "schema": "squaredominoes.violations/1",
        "count": len(violations),
        "violations": [
            {
                "cell_a": list(v.cell_a), "cell_b": list(v.cell_b), "side": v.side,
                "labels": [[ts.palette[x.first], ts.palette[x.second]] for x in v.detail],
            }
            for v in violations
        ],
    }


def violations_text(violations: list[Violation], ts: TileSet) -> str:
    lines = [v.describe(ts) for v in violations]
    lines.append(f"{len(violations)} violation(s)")
    return "\n".join(lines) + "\n"


def fixed_point_dict(rep: FixedPointReport) -> dict:
    return {
        "schema": "squaredominoes.fixed-point/1",
        "checked": rep.checked,
        "failures": [
            {
                "first": str(f.first), "second": str(f.second), "side": f.side,
                "tiles_fit": f.tiles_fit, "supertiles_fit": f.supertiles_fit,
            }
            for f in rep.failures
        ],
    }


def fixed_point_text(rep: FixedPointReport) -> str:
    lines = [f.describe() for f in rep.failures]
    lines.append(f"{rep.checked} placement pairs checked, {len(rep.failures)} failure(s)")
    return "\n".join(lines) + "\n"
