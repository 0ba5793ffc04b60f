import time

from rvlab.formulas import CnfFormula, validate_3occ, sat_brute_force
from rvlab.reductions.regular import build_k_regular
from rvlab.recognizers import is_k_regular
from rvlab.graph import bfs_distances
from rvlab.solvers import is_rainbow_vertex_connected

CASES = [
    ('1v-1c3-sat', CnfFormula(1, [(1, -1, 1)])),
    ('2v-1c2-sat', CnfFormula(2, [(1, 2)])),
    ('2v-unsat', CnfFormula(2, [(1, 1), (-1, 2), (-2, -2)])),
    ('2v-2c-sat', CnfFormula(2, [(1, 2), (-1, -2)])),
]

for k in (4, 5):
    for name, f in CASES:
        sat = sat_brute_force(f) is not None
        t0 = time.time()
        art = build_k_regular(validate_3occ(f), k)
        t_build = time.time() - t0
        g = art.graph
        reg = is_k_regular(g, k)
        d_ab = bfs_distances(g, art.roles['a_1']).dist[art.roles['b_1']]
        t0 = time.time()
        rvc = is_rainbow_vertex_connected(art.colored_graph, witnesses=False)
        t_solve = time.time() - t0
        ok = reg.member and d_ab == 13 and rvc.connected == sat
        print(f"{'OK ' if ok else 'PROBLEM'} k={k} {name:11s} n={g.vertex_count:4d} "
              f"regular={reg.member} d_ab={d_ab} sat={sat} rvc={rvc.connected} "
              f"fail={rvc.failing_pair} build={t_build:.1f}s solve={t_solve:.1f}s",
              flush=True)
        if not reg.member:
            print("   degree witness:", reg.witness, flush=True)
