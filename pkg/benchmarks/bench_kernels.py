"""Compare the compiled search kernel with the pure-Python fallback.

Each mode runs in its own interpreter because the acceleration flag is read
at import time.  Usage::

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, time
from squaredominoes import RegionProblem, TorusSpec, a7_tileset, count_region_tilings, enumerate_torus_tilings
from squaredominoes._accel import ENABLED

ts = a7_tileset()
jobs = [
    ("count 3x3 region", lambda: count_region_tilings(RegionProblem(3, 3), ts, cap=10**7)),
    ("count 5x2 region", lambda: count_region_tilings(RegionProblem(5, 2), ts, cap=10**6)),
    ("torus 3x3 shift 1", lambda: enumerate_torus_tilings(TorusSpec(3, 3, 1), ts)),
]
jobs[0][1]()  # warm up (compilation or cache load)
out = {"compiled": ENABLED, "jobs": []}
for name, job in jobs:
    best = None
    for _ in range(REPEAT):
        t0 = time.perf_counter()
        rep = job()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    out["jobs"].append({"name": name, "seconds": best, "nodes": rep.nodes_explored,
                        "solutions": rep.solutions_found})
print(json.dumps(out))
"""


def run(disabled: bool, repeat: int) -> dict:
    env = dict(os.environ, SQUAREDOMINOES_NO_NUMBA="1" if disabled else "0")
    code = f"REPEAT = {repeat}\n" + WORKLOAD
    proc = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    fast = run(False, args.repeat)
    slow = run(True, args.repeat)
    print(f"{'workload':<20} {'nodes':>10} {'numba s':>10} {'python s':>10} {'speedup':>8}")
    for a, b in zip(fast["jobs"], slow["jobs"]):
        assert (a["nodes"], a["solutions"]) == (b["nodes"], b["solutions"]), "modes disagree"
        print(f"{a['name']:<20} {a['nodes']:>10} {a['seconds']:>10.4f} {b['seconds']:>10.4f} "
              f"{b['seconds'] / max(a['seconds'], 1e-9):>7.1f}x")
    if not fast["compiled"]:
        print("note: numba was not importable, both columns ran the fallback")


if __name__ == "__main__":
    main()
