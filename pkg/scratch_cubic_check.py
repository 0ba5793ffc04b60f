import time

from rvlab.formulas import CnfFormula, validate_3occ, sat_brute_force
from rvlab.reductions.cubic import build_cubic
from rvlab.recognizers import is_k_regular, is_triangle_free
from rvlab.graph import bfs_distances
from rvlab.solvers import (
    brute_force_rainbow_check,
    is_rainbow_vertex_connected,
    is_strongly_rainbow_vertex_connected,
)

CASES = [
    ('1v-1c3', CnfFormula(1, [(1, -1, 1)])),
    ('2v-1c2', CnfFormula(2, [(1, 2)])),
    ('2v-unsat', CnfFormula(2, [(1, 1), (-1, 2), (-2, -2)])),
    ('2v-2c-sat', CnfFormula(2, [(1, 2), (-1, -2)])),
    ('3v-2c-sat', CnfFormula(3, [(1, 2, -3), (-2, 3)])),
]

for name, f in CASES:
    sat = sat_brute_force(f) is not None
    art = build_cubic(validate_3occ(f))
    g = art.graph
    cg = art.colored_graph
    reg = is_k_regular(g, 3).member
    tf = is_triangle_free(g).member
    d_ab = bfs_distances(g, art.roles['a_1']).dist[art.roles['b_1']]
    d_pq = bfs_distances(g, art.roles['p_1']).dist[art.roles['qp_1']]
    t0 = time.time()
    rvc = is_rainbow_vertex_connected(cg, witnesses=False)
    srvc = is_strongly_rainbow_vertex_connected(cg, witnesses=False)
    t_gen = time.time() - t0
    t0 = time.time()
    b_rvc = brute_force_rainbow_check(cg, 'rvc', cap=600)
    b_srvc = brute_force_rainbow_check(cg, 'srvc', cap=600)
    t_brute = time.time() - t0
    ok = (rvc.connected == sat == srvc.connected == b_rvc.connected
          == b_srvc.connected and reg and tf and d_ab == 13)
    print(f"{'OK ' if ok else 'PROBLEM'} {name:10s} n={g.vertex_count:3d} "
          f"cubic={reg} tf={tf} d_ab={d_ab} d_pq={d_pq} sat={sat} "
          f"rvc={rvc.connected} srvc={srvc.connected} "
          f"brute=({b_rvc.connected},{b_srvc.connected}) "
          f"gen={t_gen:.1f}s brute={t_brute:.1f}s "
          f"fail={rvc.failing_pair or srvc.failing_pair}", flush=True)
