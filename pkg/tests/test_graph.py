import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rvlab.graph import (
    INF,
    ColoredGraph,
    Graph,
    bfs_distances,
    blocks_and_cuts,
    count_shortest_paths,
    diameter,
    disjoint_union,
    induced_subgraph,
    subdivide_edge,
)
from rvlab.generators import random_connected_graph

from helpers import enumerate_simple_paths


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


class TestGraphBasics:
    def test_add_edge_rejects_self_loop(self):
        g = Graph(2)
        with pytest.raises(ValueError):
            g.add_edge(1, 1)

    def test_add_edge_rejects_duplicate(self):
        g = Graph(2, [(0, 1)])
        with pytest.raises(ValueError):
            g.add_edge(1, 0)

    def test_adjacency_sorted_and_symmetric(self):
        g = Graph(4, [(2, 0), (3, 0), (1, 0)])
        assert g.neighbors(0) == [1, 2, 3]
        g.validate()

    def test_edges_canonical(self):
        g = Graph(3, [(2, 1), (1, 0)])
        assert g.edges() == [(0, 1), (1, 2)]


class TestBfs:
    def test_path_graph_distance(self):
        g = path_graph(3)
        assert bfs_distances(g, 0)[2] == 2

    def test_single_vertex(self):
        g = Graph(1)
        assert bfs_distances(g, 0)[0] == 0

    def test_unreachable_is_inf(self):
        g = Graph(3, [(0, 1)])
        assert bfs_distances(g, 0)[2] == INF

    @settings(max_examples=60, deadline=None)
    @given(st.integers(2, 9), st.integers(0, 8), st.randoms())
    def test_triangle_property_on_edges(self, n, extra, rnd):
        g = random_connected_graph(random.Random(rnd.randint(0, 10**9)), n, extra)
        dist = bfs_distances(g, 0).dist
        for u, v in g.edges():
            assert dist[v] <= dist[u] + 1
            assert dist[u] <= dist[v] + 1


class TestDiameter:
    def test_complete_graph(self):
        assert diameter(complete_graph(4)) == 1

    def test_even_cycle(self):
        assert diameter(cycle_graph(8)) == 4

    def test_disconnected_raises(self):
        with pytest.raises(ValueError, match="not connected"):
            diameter(Graph(3, [(0, 1)]))


class TestCountShortestPaths:
    def test_tree_unique(self):
        g = Graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
        for t in range(1, 5):
            assert count_shortest_paths(g, 0, t) == 1

    def test_c4_opposite_corners(self):
        assert count_shortest_paths(cycle_graph(4), 0, 2) == 2

    def test_k23_between_degree3_vertices(self):
        # parts {0,1} and {2,3,4}; count verified by brute enumeration below
        g = Graph(5, [(u, v) for u in (0, 1) for v in (2, 3, 4)])
        assert count_shortest_paths(g, 0, 1) == 3

    @settings(max_examples=40, deadline=None)
    @given(st.integers(2, 8), st.integers(0, 10), st.randoms())
    def test_matches_exhaustive_enumeration(self, n, extra, rnd):
        g = random_connected_graph(random.Random(rnd.randint(0, 10**9)), n, extra)
        dist = bfs_distances(g, 0).dist
        for t in range(1, n):
            expected = sum(
                1 for _ in enumerate_simple_paths(g, 0, t, max_len=int(dist[t]))
            )
            assert count_shortest_paths(g, 0, t) == expected


class TestSubdivide:
    def test_k2_becomes_p3(self):
        g = Graph(2, [(0, 1)])
        w = subdivide_edge(g, 0, 1)
        assert w == 2
        assert not g.has_edge(0, 1)
        assert g.has_edge(0, 2) and g.has_edge(2, 1)

    def test_c3_becomes_c4(self):
        g = cycle_graph(3)
        subdivide_edge(g, 0, 1)
        assert g.vertex_count == 4 and g.edge_count == 4
        assert diameter(g) == 2

    def test_non_edge_raises(self):
        g = path_graph(3)
        with pytest.raises(ValueError):
            subdivide_edge(g, 0, 2)

    def test_clause_cycle_chord_subdivision(self):
        # 12-cycle with a chord between ring positions 1 and 9; subdividing
        # the chord leaves a degree-2 vertex attached to both ends.
        g = cycle_graph(12)
        g.add_edge(1, 9)
        w = subdivide_edge(g, 1, 9)
        assert g.degree(w) == 2
        assert g.has_edge(1, w) and g.has_edge(w, 9)
        assert g.degree(1) == 3 and g.degree(9) == 3


class TestDisjointUnion:
    def test_two_singletons(self):
        a = ColoredGraph(Graph(1), [0])
        b = ColoredGraph(Graph(1), [0])
        u = disjoint_union(a, b)
        assert u.graph.vertex_count == 2 and u.graph.edge_count == 0

    def test_offset_zero_keeps_colors(self):
        a = ColoredGraph(Graph(2, [(0, 1)]), [0, 1])
        b = ColoredGraph(Graph(2, [(0, 1)]), [1, 0])
        u = disjoint_union(a, b, color_offset=0)
        assert u.colors == [0, 1, 1, 0]

    def test_offset_separates_palettes(self):
        a = ColoredGraph(Graph(1), [0])
        b = ColoredGraph(Graph(1), [0])
        u = disjoint_union(a, b, color_offset=1)
        assert u.colors == [0, 1]

    def test_chained_variable_gadgets_match_hand_built_fragment(self):
        # two 8-rings joined through a connector: 17 vertices total
        ring = [(i, (i + 1) % 8) for i in range(8)]
        a = ColoredGraph(Graph(8, ring), [0, 1, 2, 3, 4, 5, 6, 7])
        b = ColoredGraph(Graph(8, ring), [0, 1, 2, 3, 4, 5, 6, 7])
        u = disjoint_union(a, b, color_offset=8)
        connector = u.graph.add_vertex()
        u.colors.append(16)
        u.graph.add_edge(4, connector)       # exit of first ring
        u.graph.add_edge(connector, 8)       # entry of second ring
        assert u.graph.vertex_count == 17
        expected = Graph(17)
        for off in (0, 8):
            for i in range(8):
                expected.add_edge(off + i, off + (i + 1) % 8)
        expected.add_edge(4, 16)
        expected.add_edge(16, 8)
        assert u.graph.edges() == expected.edges()


class TestBlocksAndCuts:
    def test_path_blocks_are_edges(self):
        cuts, blocks = blocks_and_cuts(path_graph(4))
        assert cuts == {1, 2}
        assert sorted(len(b) for b in blocks) == [1, 1, 1]

    def test_cycle_is_one_block_no_cuts(self):
        cuts, blocks = blocks_and_cuts(cycle_graph(5))
        assert cuts == set()
        assert len(blocks) == 1 and len(blocks[0]) == 5

    def test_two_triangles_sharing_a_vertex(self):
        g = Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
        cuts, blocks = blocks_and_cuts(g)
        assert cuts == {2}
        assert sorted(len(b) for b in blocks) == [3, 3]


class TestInducedSubgraph:
    def test_keeps_internal_edges_only(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        sub, new_to_old = induced_subgraph(g, [0, 1, 2])
        assert new_to_old == [0, 1, 2]
        assert sub.edges() == [(0, 1), (1, 2)]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 9), st.integers(0, 10), st.randoms())
def test_generated_graphs_validate(n, extra, rnd):
    g = random_connected_graph(random.Random(rnd.randint(0, 10**9)), n, extra)
    g.validate()
