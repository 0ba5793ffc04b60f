import time

from rvlab.formulas import CnfFormula, validate_3occ
from rvlab.reductions.cubic import build_cubic
from rvlab.graph import bfs_distances
from rvlab.solvers import _brute_pair, is_rainbow_vertex_connected

art = build_cubic(validate_3occ(CnfFormula(2, [(1, 1), (-1, 2), (-2, -2)])))
cg = art.colored_graph
n = cg.graph.vertex_count
print("n =", n, flush=True)

v = is_rainbow_vertex_connected(cg, witnesses=False)
print("generic rvc:", v.connected, v.failing_pair, flush=True)

dist = [bfs_distances(cg.graph, s).dist for s in range(n)]
t_all = time.time()
for s in range(n):
    for t in range(s + 1, n):
        if dist[s][t] <= 2:
            continue
        t0 = time.time()
        ok, _ = _brute_pair(cg, s, t, False, True, dist[s], dist[t])
        dt = time.time() - t0
        if dt > 1.0:
            print(f"slow pair ({s},{t}) ok={ok} {dt:.1f}s", flush=True)
        if not ok:
            print("first failing pair:", (s, t), f"total {time.time()-t_all:.1f}s",
                  flush=True)
            raise SystemExit
    if time.time() - t_all > 240:
        print(f"aborting at s={s} after {time.time()-t_all:.0f}s", flush=True)
        raise SystemExit
print("all pairs done", time.time() - t_all, flush=True)
