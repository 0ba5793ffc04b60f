import faulthandler
import sys
import time

faulthandler.dump_traceback_later(20, exit=True)

from rvlab.formulas import CnfFormula, validate_3occ
from rvlab.reductions.bipartite_planar import build_bipartite_planar
from rvlab.solvers import brute_force_rainbow_check, _brute_pair, is_rainbow_vertex_connected
from rvlab.graph import bfs_distances

sat_inst = validate_3occ(CnfFormula(3, [(1, 2, -3), (-2, 3)]))
art = build_bipartite_planar(sat_inst)
cg = art.colored_graph
n = cg.graph.vertex_count
print("n =", n, flush=True)

t0 = time.time()
verdict = is_rainbow_vertex_connected(cg, witnesses=False)
print("generic rvc:", verdict.connected, verdict.failing_pair,
      f"{time.time()-t0:.2f}s", flush=True)

t0 = time.time()
dist = [bfs_distances(cg.graph, s).dist for s in range(n)]
done = 0
for s in range(n):
    for t in range(s + 1, n):
        ok, _ = _brute_pair(cg, s, t, False, True, dist[s], dist[t])
        done += 1
        if time.time() - t0 > 10:
            print("slow at pair", (s, t), "after", done, flush=True)
            sys.exit(1)
print("all pairs brute ok", f"{time.time()-t0:.2f}s", flush=True)
