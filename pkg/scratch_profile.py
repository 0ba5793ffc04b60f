import time

from rvlab.formulas import CnfFormula, validate_3occ
from rvlab.reductions.cubic import build_cubic
from rvlab.graph import bfs_distances
from rvlab.solvers import _mask_reach, is_strongly_rainbow_vertex_connected

art = build_cubic(validate_3occ(CnfFormula(1, [(1, -1, 1)])))
cg = art.colored_graph
n = cg.graph.vertex_count
print("n =", n, "colors =", cg.color_count, flush=True)

t0 = time.time()
worst = 0.0
worst_s = -1
for s in range(n):
    t1 = time.time()
    store = _mask_reach(cg, s, strong=False, stop_when_all=True)
    dt = time.time() - t1
    if dt > worst:
        worst, worst_s = dt, s
    if dt > 1.0:
        sizes = sorted((len(m) for m in store), reverse=True)[:5]
        reached = sum(1 for m in store if m)
        print(f"s={s} dt={dt:.2f}s reached={reached}/{n} top antichains={sizes}",
              flush=True)
print(f"weak all sources: {time.time()-t0:.1f}s worst={worst:.2f}s at s={worst_s}",
      flush=True)

t0 = time.time()
v = is_strongly_rainbow_vertex_connected(cg, witnesses=False)
print("strong:", v.connected, v.failing_pair, f"{time.time()-t0:.1f}s", flush=True)
