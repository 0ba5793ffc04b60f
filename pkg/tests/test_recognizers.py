import random
from itertools import combinations

import pytest

from rvlab.generators import random_block_graph, random_cactus, random_connected_graph
from rvlab.graph import Graph, count_shortest_paths
from rvlab.recognizers import (
    clique_number,
    find_chordless_cycle,
    is_bipartite,
    is_block_graph,
    is_cactus,
    is_chordal,
    is_claw_free,
    is_geodetic,
    is_interval,
    is_k_regular,
    is_planar,
    is_proper_interval,
    is_split,
    is_triangle_free,
    max_clique,
    max_degree,
    smooth_degree_two,
)


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


# ---------------------------------------------------------------------------
# independent oracles


def is_interval_bruteforce(g: Graph) -> bool:
    """Backtracking search for a right-endpoint ordering (suffix property)."""
    n = g.vertex_count
    adjacency = [set(g.neighbors(v)) for v in range(n)]
    order: list[int] = []
    used = [False] * n

    def can_append(w):
        seen_neighbor = False
        for u in order:
            if w in adjacency[u]:
                seen_neighbor = True
            elif seen_neighbor:
                return False
        return True

    def backtrack():
        if len(order) == n:
            return True
        for w in range(n):
            if not used[w] and can_append(w):
                used[w] = True
                order.append(w)
                if backtrack():
                    return True
                order.pop()
                used[w] = False
        return False

    return backtrack()


def _routes_exist(g, branch, demands, used):
    """Route internally-disjoint paths for each demanded branch pair."""
    if not demands:
        return True
    (s, t), rest = demands[0], demands[1:]

    def dfs(u, interior):
        if t in g.neighbors(u):
            if _routes_exist(g, branch, rest, used | interior):
                return True
        for v in g.neighbors(u):
            if v not in used and v not in interior and v != t:
                if dfs(v, interior | {v}):
                    return True
        return False

    return dfs(s, frozenset())


def contains_k5_subdivision(g):
    for branch in combinations(range(g.vertex_count), 5):
        demands = [(branch[i], branch[j]) for i in range(5) for j in range(i + 1, 5)]
        if _routes_exist(g, branch, demands, frozenset(branch)):
            return True
    return False


def contains_k33_subdivision(g):
    n = g.vertex_count
    for six in combinations(range(n), 6):
        for left in combinations(six, 3):
            right = tuple(v for v in six if v not in left)
            if left[0] > right[0]:
                continue  # halves are symmetric
            demands = [(a, b) for a in left for b in right]
            if _routes_exist(g, six, demands, frozenset(six)):
                return True
    return False


def is_planar_bruteforce(g):
    return not (contains_k5_subdivision(g) or contains_k33_subdivision(g))


# ---------------------------------------------------------------------------
# witness validators


def validate_witness(g: Graph, witness):
    kind, payload = witness
    adjacency = [set(g.neighbors(v)) for v in range(g.vertex_count)]
    if kind == "odd_cycle":
        cyc = payload
        assert len(cyc) % 2 == 1 and len(cyc) >= 3
        assert len(set(cyc)) == len(cyc)
        assert all(cyc[(i + 1) % len(cyc)] in adjacency[cyc[i]] for i in range(len(cyc)))
    elif kind == "triangle":
        u, v, w = payload
        assert v in adjacency[u] and w in adjacency[u] and w in adjacency[v]
    elif kind == "claw":
        center, a, b, c = payload
        assert all(x in adjacency[center] for x in (a, b, c))
        assert b not in adjacency[a] and c not in adjacency[a] and c not in adjacency[b]
    elif kind == "chordless_cycle":
        cyc = payload
        assert len(cyc) >= 4 and len(set(cyc)) == len(cyc)
        for i, u in enumerate(cyc):
            assert cyc[(i + 1) % len(cyc)] in adjacency[u]
            for j in range(i + 2, len(cyc)):
                if (i, j) != (0, len(cyc) - 1):
                    assert cyc[j] not in adjacency[u], "cycle has a chord"
    elif kind == "asteroidal_triple":
        x, y, z = payload
        from rvlab.recognizers import _component_labels_avoiding_closed_nbhd as comp

        assert y not in adjacency[x] and z not in adjacency[x] and z not in adjacency[y]
        assert comp(g, z)[x] == comp(g, z)[y] != -1
        assert comp(g, y)[x] == comp(g, y)[z] != -1
        assert comp(g, x)[y] == comp(g, x)[z] != -1
    elif kind == "non_cycle_block":
        vertices = payload
        inner = [(u, v) for u, v in g.edges() if u in set(vertices) and v in set(vertices)]
        assert len(inner) > len(vertices)
    elif kind == "non_clique_block":
        vertices = payload
        assert any(v not in adjacency[u] for u, v in combinations(vertices, 2))
    elif kind == "two_k2":
        a, b, c, d = payload
        assert b in adjacency[a] and d in adjacency[c]
        assert len({a, b, c, d}) == 4
        assert not ({c, d} & adjacency[a]) and not ({c, d} & adjacency[b])
    elif kind == "degree_outlier":
        v, deg = payload
        assert g.degree(v) == deg
    elif kind == "kuratowski_subdivision":
        for u, v in payload:
            assert g.has_edge(u, v)
        core = smooth_degree_two(payload)
        degs = {}
        for u, v in core:
            degs[u] = degs.get(u, 0) + 1
            degs[v] = degs.get(v, 0) + 1
        if len(degs) == 5:
            assert sorted(degs.values()) == [4] * 5 and len(core) == 10
        else:
            assert len(degs) == 6 and sorted(degs.values()) == [3] * 6 and len(core) == 9
            sub = {}
            for u, v in core:
                sub.setdefault(u, set()).add(v)
                sub.setdefault(v, set()).add(u)
            part = [x for x in degs if x in sub[min(degs)]]
            assert all(sub[x] == sub[min(degs)] or x in sub[min(degs)] for x in degs)
            assert len(part) == 3
    elif kind == "pair_with_multiple_shortest_paths":
        s, t, paths = payload
        assert count_shortest_paths(g, s, t) == paths and paths >= 2
    else:
        raise AssertionError(f"unknown witness kind {kind}")


# ---------------------------------------------------------------------------
# individual recognizers


class TestBipartite:
    def test_even_cycle(self):
        assert is_bipartite(cycle_graph(8)).member

    def test_odd_cycle_with_witness(self):
        rep = is_bipartite(cycle_graph(5))
        assert not rep.member
        validate_witness(cycle_graph(5), rep.witness)
        assert len(rep.witness[1]) == 5


class TestDegrees:
    def test_cycle_is_2_regular(self):
        assert is_k_regular(cycle_graph(6), 2).member

    def test_outlier_witnessed(self):
        rep = is_k_regular(path_graph(3), 2)
        assert not rep.member
        validate_witness(path_graph(3), rep.witness)

    def test_max_degree(self):
        assert max_degree(Graph(4, [(0, 1), (0, 2), (0, 3)])) == 3

    def test_triangle_free_cycle(self):
        assert is_triangle_free(cycle_graph(5)).member

    def test_triangle_witnessed(self):
        g = complete_graph(4)
        rep = is_triangle_free(g)
        assert not rep.member
        validate_witness(g, rep.witness)


class TestChordal:
    def test_tree(self):
        assert is_chordal(path_graph(6)).member

    def test_c4_not_chordal(self):
        rep = is_chordal(cycle_graph(4))
        assert not rep.member
        validate_witness(cycle_graph(4), rep.witness)

    def test_chordless_cycle_finder_on_c6_plus_chord(self):
        g = cycle_graph(6)
        g.add_edge(0, 2)
        cyc = find_chordless_cycle(g)
        validate_witness(g, ("chordless_cycle", cyc))

    def test_random_chordal_by_construction(self):
        rng = random.Random(3)
        for _ in range(20):
            g = random_block_graph(rng, rng.randint(2, 12))
            assert is_chordal(g).member  # block graphs are chordal


class TestInterval:
    def test_path(self):
        assert is_interval(path_graph(7)).member

    def test_spider_has_asteroidal_triple(self):
        # claw with each edge subdivided once
        g = Graph(7, [(0, 1), (1, 4), (0, 2), (2, 5), (0, 3), (3, 6)])
        rep = is_interval(g)
        assert not rep.member
        assert rep.witness[0] == "asteroidal_triple"
        validate_witness(g, rep.witness)

    def test_agrees_with_bruteforce_small(self):
        rng = random.Random(17)
        for _ in range(120):
            n = rng.randint(1, 7)
            g = random_connected_graph(rng, n, rng.randint(0, 8))
            assert is_interval(g).member == is_interval_bruteforce(g), g.edges()

    def test_agrees_with_bruteforce_eight_vertices(self):
        rng = random.Random(18)
        for _ in range(25):
            g = random_connected_graph(rng, 8, rng.randint(0, 9))
            assert is_interval(g).member == is_interval_bruteforce(g), g.edges()


class TestClawFreeProperInterval:
    def test_cycle_claw_free(self):
        assert is_claw_free(cycle_graph(9)).member

    def test_claw_itself(self):
        g = Graph(4, [(0, 1), (0, 2), (0, 3)])
        rep = is_claw_free(g)
        assert not rep.member
        validate_witness(g, rep.witness)

    def test_path_is_proper_interval(self):
        assert is_proper_interval(path_graph(5)).member

    def test_claw_is_interval_but_not_proper(self):
        g = Graph(4, [(0, 1), (0, 2), (0, 3)])
        assert is_interval(g).member
        assert not is_proper_interval(g).member


class TestCactusBlockSplit:
    def test_tree_is_cactus_and_block(self):
        t = path_graph(6)
        assert is_cactus(t).member and is_block_graph(t).member

    def test_k4_minus_edge_not_cactus(self):
        g = complete_graph(4)
        g.remove_edge(0, 1)
        rep = is_cactus(g)
        assert not rep.member
        validate_witness(g, rep.witness)

    def test_cycle_is_cactus_not_block(self):
        c = cycle_graph(5)
        assert is_cactus(c).member
        rep = is_block_graph(c)
        assert not rep.member
        validate_witness(c, rep.witness)

    def test_generated_cacti(self):
        rng = random.Random(5)
        for _ in range(30):
            assert is_cactus(random_cactus(rng, rng.randint(1, 15))).member

    def test_generated_block_graphs(self):
        rng = random.Random(6)
        for _ in range(30):
            assert is_block_graph(random_block_graph(rng, rng.randint(1, 15))).member

    def test_split_triangle_with_pendants(self):
        # K3 on {0,1,2} plus two pendant leaves on vertex 0
        g = Graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (0, 4)])
        assert is_split(g).member

    def test_two_k2_not_split(self):
        g = Graph(4, [(0, 1), (2, 3)])
        rep = is_split(g)
        assert not rep.member
        validate_witness(g, rep.witness)

    def test_c4_c5_not_split(self):
        for n in (4, 5):
            rep = is_split(cycle_graph(n))
            assert not rep.member
            validate_witness(cycle_graph(n), rep.witness)


class TestPlanar:
    def test_k4(self):
        assert is_planar(complete_graph(4)).member

    def test_k5_with_witness(self):
        rep = is_planar(complete_graph(5))
        assert not rep.member
        validate_witness(complete_graph(5), rep.witness)

    def test_k33_with_witness(self):
        g = Graph(6, [(a, b) for a in (0, 1, 2) for b in (3, 4, 5)])
        rep = is_planar(g)
        assert not rep.member
        validate_witness(g, rep.witness)

    def test_subdivided_k5_detected(self):
        g = complete_graph(5)
        from rvlab.graph import subdivide_edge

        subdivide_edge(g, 0, 1)
        subdivide_edge(g, 2, 3)
        rep = is_planar(g)
        assert not rep.member
        validate_witness(g, rep.witness)

    def test_agrees_with_bruteforce_small(self):
        rng = random.Random(29)
        for _ in range(60):
            n = rng.randint(3, 7)
            g = random_connected_graph(rng, n, rng.randint(0, 12))
            assert is_planar(g).member == is_planar_bruteforce(g), g.edges()

    def test_agrees_with_bruteforce_eight_vertices(self):
        rng = random.Random(31)
        for _ in range(15):
            g = random_connected_graph(rng, 8, rng.randint(4, 14))
            assert is_planar(g).member == is_planar_bruteforce(g), g.edges()

    def test_edge_bound_rejection(self):
        # any graph with m > 3n-6 is non-planar; K6 has 15 > 12
        assert not is_planar(complete_graph(6)).member


class TestGeodetic:
    def test_random_block_graph_is_geodetic(self):
        g = random_block_graph(random.Random(9), 20)
        assert is_geodetic(g).member

    def test_c4_not_geodetic(self):
        rep = is_geodetic(cycle_graph(4))
        assert not rep.member
        validate_witness(cycle_graph(4), rep.witness)

    def test_odd_cycle_geodetic(self):
        assert is_geodetic(cycle_graph(5)).member

    def test_disconnected_raises(self):
        with pytest.raises(ValueError):
            is_geodetic(Graph(3, [(0, 1)]))


class TestCliques:
    def test_complete_graph(self):
        assert clique_number(complete_graph(5)) == 5

    def test_cycle(self):
        assert clique_number(cycle_graph(6)) == 2

    def test_matches_bruteforce(self):
        rng = random.Random(41)
        for _ in range(40):
            n = rng.randint(1, 8)
            g = random_connected_graph(rng, n, rng.randint(0, 12))
            best = max(
                (len(sub) for r in range(1, n + 1)
                 for sub in combinations(range(n), r)
                 if all(g.has_edge(a, b) for a, b in combinations(sub, 2))),
                default=0,
            )
            clique = max_clique(g)
            assert len(clique) == best
            assert all(g.has_edge(a, b) for a, b in combinations(clique, 2))
