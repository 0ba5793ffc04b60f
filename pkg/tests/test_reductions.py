import random

import pytest

from rvlab.formulas import (
    CnfFormula,
    random_3occ_formula,
    sat_brute_force,
    validate_3occ,
)
from rvlab.graph import bfs_distances
from rvlab.recognizers import (
    clique_number,
    is_bipartite,
    is_claw_free,
    is_interval,
    is_k_regular,
    is_planar,
    is_proper_interval,
    is_triangle_free,
    max_degree,
)
from rvlab.reductions import (
    ReductionCheckError,
    build_bipartite_planar,
    build_cubic,
    build_interval,
    build_k_regular,
    build_proper_interval,
    verify_reduction,
)
from rvlab.solvers import (
    brute_force_rainbow_check,
    is_rainbow_vertex_connected,
    is_strongly_rainbow_vertex_connected,
)

from conftest import record_strong_weak

FIG_FORMULA = CnfFormula(3, [(1, 2, -3), (-2, 3)])      # satisfiable
UNSAT_FORMULA = CnfFormula(2, [(1, 1), (-1, 2), (-2, -2)])
ALL3_FORMULA = CnfFormula(3, [(1, 2, 3), (-1, -2, -3)])  # all clauses size 3


def inst(formula):
    return validate_3occ(formula)


def color_multiplicities(artifact):
    counts = {}
    for c in artifact.colored_graph.colors:
        counts[c] = counts.get(c, 0) + 1
    return counts


class TestBipartitePlanar:
    def test_vertex_count_formula_all_3_literals(self):
        # 8n ring + n connectors + 15m gadget + (m-1) joints + 2 + (m+1) path
        art = build_bipartite_planar(inst(ALL3_FORMULA))
        n, m = 3, 2
        assert art.graph.vertex_count == 9 * n + 17 * m + 2

    def test_structure(self):
        art = build_bipartite_planar(inst(FIG_FORMULA))
        g = art.graph
        assert is_bipartite(g).member
        assert is_planar(g).member
        assert max_degree(g) <= 3

    def test_literal_vertex_coloring_table(self):
        # second clause (-2, 3): -2 is the second occurrence of variable 2,
        # so w_2_1 takes the second positive-arc color of variable 2
        art = build_bipartite_planar(inst(FIG_FORMULA))
        colors = art.colored_graph.colors
        assert colors[art.roles["w_2_1"]] == colors[art.roles["v_2"]]
        # 3 is the second occurrence of variable 3 and positive, so w_2_2
        # takes the second negative-arc color
        assert colors[art.roles["w_2_2"]] == colors[art.roles["vbar_3"]]
        # first clause literal 1 is positive, first occurrence of variable 1
        assert colors[art.roles["w_1_1"]] == colors[art.roles["ubar_1"]]

    def test_fresh_ledger(self):
        art = build_bipartite_planar(inst(FIG_FORMULA))
        counts = color_multiplicities(art)
        for v in art.fresh_vertices:
            assert counts[art.colored_graph.colors[v]] == 1
        for name in ("a_1", "b_1", "d_1", "s_0", "t", "p_1", "qp_1", "x_1"):
            assert art.roles[name] in art.fresh_vertices

    def test_equivalence_small(self):
        art = build_bipartite_planar(inst(FIG_FORMULA))
        assert brute_force_rainbow_check(art.colored_graph, "rvc", cap=100).connected
        assert brute_force_rainbow_check(art.colored_graph, "srvc", cap=100).connected
        art = build_bipartite_planar(inst(UNSAT_FORMULA))
        verdict = brute_force_rainbow_check(art.colored_graph, "rvc", cap=100)
        assert not verdict.connected
        s0, t = art.roles["s_0"], art.roles["t"]
        assert set(verdict.failing_pair) == {min(s0, t), max(s0, t)}


class TestInterval:
    def test_variable_gadget_edge_count(self):
        art = build_interval(inst(CnfFormula(1, [(1, -1)])))
        g = art.graph
        ring = [art.roles["a_1"], art.roles["b_1"]] + [
            art.roles[f"X1.v{p}"] for p in range(2, 21) if p != 11
        ]
        members = set(ring)
        inner_edges = [e for e in g.edges() if e[0] in members and e[1] in members]
        assert len(ring) == 20
        assert len(inner_edges) == 39  # 20 ring edges + 19 chords

    def test_gadget_color_pairs_appear_twice(self):
        art = build_interval(inst(CnfFormula(1, [(1, -1)])))
        colors = art.colored_graph.colors
        pair_positions = [(2, 16), (3, 14), (4, 12), (20, 6), (19, 8), (18, 10)]
        for pa, pb in pair_positions:
            assert colors[art.roles[f"X1.v{pa}"]] == colors[art.roles[f"X1.v{pb}"]]

    def test_is_interval_and_clique_number(self):
        art = build_interval(inst(FIG_FORMULA))
        assert is_interval(art.graph).member
        assert clique_number(art.graph) == 4

    def test_equivalence_small(self):
        sat_art = build_interval(inst(CnfFormula(2, [(1, 2)])))
        assert brute_force_rainbow_check(sat_art.colored_graph, "rvc",
                                         cap=100).connected
        unsat_art = build_interval(inst(UNSAT_FORMULA))
        assert not is_rainbow_vertex_connected(unsat_art.colored_graph,
                                               witnesses=False).connected


class TestProperInterval:
    def test_chord_swap_relative_to_interval(self):
        base = build_interval(inst(CnfFormula(1, [(1, -1)])))
        proper = build_proper_interval(inst(CnfFormula(1, [(1, -1)])))

        def gadget_edges(art):
            ring = {art.roles["a_1"], art.roles["b_1"]} | {
                art.roles[f"X1.v{p}"] for p in range(2, 21) if p != 11
            }
            return {e for e in art.graph.edges() if e[0] in ring and e[1] in ring}

        assert len(gadget_edges(base)) == len(gadget_edges(proper)) == 39

        def chord(art, pa, pb):
            def vid(p):
                if p == 1:
                    return art.roles["a_1"]
                if p == 11:
                    return art.roles["b_1"]
                return art.roles[f"X1.v{p}"]
            u, v = vid(pa), vid(pb)
            return art.graph.has_edge(u, v)

        for dropped in [(6, 18), (8, 16), (10, 14)]:
            assert chord(base, *dropped) and not chord(proper, *dropped)
        for added in [(5, 17), (7, 15), (9, 13)]:
            assert chord(proper, *added) and not chord(base, *added)

    def test_span_and_claw_freeness(self):
        art = build_proper_interval(inst(FIG_FORMULA))
        d = bfs_distances(art.graph, art.roles["a_1"]).dist[art.roles["b_1"]]
        assert d == 10
        assert is_claw_free(art.graph).member
        assert is_proper_interval(art.graph).member

    def test_strong_traversal_uses_exactly_one_side(self):
        art = build_proper_interval(inst(CnfFormula(1, [(1, -1)])))
        cg = art.colored_graph
        verdict = is_strongly_rainbow_vertex_connected(cg)
        assert verdict.connected
        a, b = art.roles["a_1"], art.roles["b_1"]
        path = verdict.witness_paths[(min(a, b), max(a, b))]
        positives = {art.roles[f"X1.v{p}"] for p in (5, 7, 9)}
        negatives = {art.roles[f"X1.v{p}"] for p in (17, 15, 13)}
        internals = set(path[1:-1])
        assert internals >= positives or internals >= negatives
        assert not (internals & positives and internals & negatives)

    def test_equivalence_small(self):
        art = build_proper_interval(inst(CnfFormula(2, [(1, 2)])))
        assert brute_force_rainbow_check(art.colored_graph, "srvc",
                                         cap=100).connected
        unsat = build_proper_interval(inst(UNSAT_FORMULA))
        strong = is_strongly_rainbow_vertex_connected(unsat.colored_graph,
                                                      witnesses=False)
        weak = is_rainbow_vertex_connected(unsat.colored_graph, witnesses=False)
        record_strong_weak("proper-unsat", strong.connected, weak.connected)
        assert not strong.connected

    def test_weak_variant_dodges_the_relaxed_gadget(self):
        # the swapped chords bind only shortest paths: longer walks can skip
        # one arc color, so the weak variant stays connected even when the
        # formula is unsatisfiable; only the strong variant is decided
        unsat = build_proper_interval(inst(UNSAT_FORMULA))
        assert is_rainbow_vertex_connected(unsat.colored_graph,
                                           witnesses=False).connected
        assert not is_strongly_rainbow_vertex_connected(
            unsat.colored_graph, witnesses=False).connected


class TestCubic:
    def test_structure_and_spans(self):
        art = build_cubic(inst(FIG_FORMULA))
        g = art.graph
        assert is_k_regular(g, 3).member
        assert is_triangle_free(g).member
        for i in (1, 2, 3):
            d = bfs_distances(g, art.roles[f"a_{i}"]).dist[art.roles[f"b_{i}"]]
            assert d == 13
        d1 = bfs_distances(g, art.roles["p_1"]).dist[art.roles["qp_1"]]
        d2 = bfs_distances(g, art.roles["p_2"]).dist[art.roles["qp_2"]]
        assert (d1, d2) == (9, 7)  # 3-literal and 2-literal clause gadgets

    def test_tail_consumes_every_clause_color(self):
        art = build_cubic(inst(FIG_FORMULA))
        colors = art.colored_graph.colors
        tail_slots = [colors[art.roles[f"tail.s{j}"]] for j in (1, 2)]
        guard_colors = [colors[art.roles["C1.A5"]], colors[art.roles["C2.A3"]]]
        assert tail_slots == guard_colors

    def test_equivalence_small(self):
        sat_art = build_cubic(inst(CnfFormula(1, [(1, -1, 1)])))
        assert brute_force_rainbow_check(sat_art.colored_graph, "rvc",
                                         cap=150).connected
        assert brute_force_rainbow_check(sat_art.colored_graph, "srvc",
                                         cap=150).connected
        unsat = build_cubic(inst(UNSAT_FORMULA))
        strong = is_strongly_rainbow_vertex_connected(unsat.colored_graph,
                                                      witnesses=False)
        weak = is_rainbow_vertex_connected(unsat.colored_graph, witnesses=False)
        record_strong_weak("cubic-unsat", strong.connected, weak.connected)
        assert not strong.connected and not weak.connected


class TestRegular:
    @pytest.mark.parametrize("k", [4, 5])
    def test_regularity_and_span(self, k):
        art = build_k_regular(inst(CnfFormula(1, [(1, -1, 1)])), k)
        assert is_k_regular(art.graph, k).member
        d = bfs_distances(art.graph, art.roles["a_1"]).dist[art.roles["b_1"]]
        assert d == 13
        colors = art.colored_graph.colors
        assert colors[art.roles["astar_1"]] == colors[art.roles["bstar_1"]]

    def test_k_below_4_rejected(self):
        with pytest.raises(ValueError):
            build_k_regular(inst(FIG_FORMULA), 3)

    def test_equivalence_small(self):
        art = build_k_regular(inst(CnfFormula(1, [(1, -1, 1)])), 4)
        assert is_rainbow_vertex_connected(art.colored_graph,
                                           witnesses=False).connected
        unsat = build_k_regular(inst(UNSAT_FORMULA), 4)
        assert not is_rainbow_vertex_connected(unsat.colored_graph,
                                               witnesses=False).connected


class TestVerifyReduction:
    def test_certificate_for_satisfiable_formula(self):
        cert = verify_reduction(inst(FIG_FORMULA), "bip-planar")
        assert cert.satisfiable and cert.rainbow_vertex_connected
        assert cert.strongly_rainbow_vertex_connected
        assert cert.equivalent and cert.fresh_ledger_ok
        assert all(cert.class_checks.values())
        assert cert.engine == "brute"

    def test_certificate_for_unsat_formula(self):
        cert = verify_reduction(inst(UNSAT_FORMULA), "bip-planar")
        assert not cert.satisfiable and not cert.rainbow_vertex_connected
        assert cert.equivalent

    def test_interval_family_checks_weak_only(self):
        cert = verify_reduction(inst(FIG_FORMULA), "interval", engine="generic")
        assert cert.strongly_rainbow_vertex_connected is None
        assert cert.class_checks["clique_number_4"]

    def test_regular_family(self):
        cert = verify_reduction(inst(CnfFormula(1, [(1, -1, 1)])), "regular",
                                k=4, engine="generic")
        assert cert.class_checks["4-regular"]
        assert cert.equivalent

    def test_tampered_instance_is_refuted(self, monkeypatch):
        # force a wrong satisfiability answer to prove the check bites
        import rvlab.reductions.verify as verify_mod

        monkeypatch.setattr(verify_mod, "sat_brute_force", lambda f: None)
        with pytest.raises(ReductionCheckError, match="equivalence violated"):
            verify_reduction(inst(FIG_FORMULA), "bip-planar")


class TestRandomizedEquivalence:
    def test_bip_planar_random_formulas(self):
        rng = random.Random(97)
        done = 0
        while done < 12:
            n = rng.randint(1, 3)
            m = rng.randint(1, max(1, 3 * n // 2 - 1))
            formula = random_3occ_formula(rng, n, m)
            art = build_bipartite_planar(inst(formula))
            sat = sat_brute_force(formula) is not None
            verdict = brute_force_rainbow_check(art.colored_graph, "rvc", cap=150)
            assert verdict.connected == sat, formula.clauses
            done += 1
