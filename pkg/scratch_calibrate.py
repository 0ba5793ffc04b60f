import random
import sys
import time

from rvlab.formulas import CnfFormula, random_3occ_formula, validate_3occ, sat_brute_force
from rvlab.reductions.bipartite_planar import build_bipartite_planar
from rvlab.reductions.interval import build_interval, build_proper_interval
from rvlab.reductions.cubic import build_cubic
from rvlab.solvers import brute_force_rainbow_check

rng = random.Random(0)
unsat = None
for trial in range(100000):
    n = rng.randint(2, 3)
    m = rng.randint(2, (3 * n) // 2)
    f = random_3occ_formula(rng, n, m)
    if sat_brute_force(f) is None:
        unsat = f
        break
print("UNSAT:", unsat.variable_count, "vars", unsat.clauses, flush=True)
ui = validate_3occ(unsat)
sat_inst = validate_3occ(CnfFormula(3, [(1, 2, -3), (-2, 3)]))

budget = float(sys.argv[1]) if len(sys.argv) > 1 else 30.0

for name, builder, variants in [
    ("bip", build_bipartite_planar, ("rvc", "srvc")),
    ("interval", build_interval, ("rvc",)),
    ("proper", build_proper_interval, ("rvc", "srvc")),
    ("cubic", build_cubic, ("rvc", "srvc")),
]:
    for label, inst, expect in (("SAT", sat_inst, True), ("UNSAT", ui, False)):
        art = builder(inst)
        ncnt = art.graph.vertex_count
        for var in variants:
            t0 = time.time()
            v = brute_force_rainbow_check(art.colored_graph, var, cap=500)
            dt = time.time() - t0
            status = "OK " if v.connected == expect else "MISMATCH"
            print(f"{status} {name:9s} {label:5s} n={ncnt:4d} {var:4s} -> "
                  f"{v.connected} fail={v.failing_pair} {dt:.2f}s", flush=True)
            if dt > budget:
                print(f"  (over budget; skipping rest of {name})", flush=True)
                break
