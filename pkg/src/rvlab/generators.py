"""Seeded random instance generators used by the bench command and tests."""

from __future__ import annotations

import random

from rvlab.graph import ColoredGraph, EdgeColoredGraph, Graph, edge_key


def random_connected_graph(rng: random.Random, n: int, extra_edges: int = 0) -> Graph:
    """Random spanning tree plus `extra_edges` distinct random chords."""
    if n <= 0:
        raise ValueError("need at least one vertex")
    g = Graph(n)
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        g.add_edge(order[i], rng.choice(order[:i]))
    max_extra = n * (n - 1) // 2 - (n - 1)
    budget = min(extra_edges, max_extra)
    while budget > 0:
        u, v = rng.sample(range(n), 2)
        if not g.has_edge(u, v):
            g.add_edge(u, v)
            budget -= 1
    return g


def random_vertex_coloring(rng: random.Random, g: Graph, color_count: int) -> ColoredGraph:
    colors = [rng.randrange(color_count) for _ in range(g.vertex_count)]
    # keep the palette dense so color_count reflects reality
    used = sorted(set(colors))
    remap = {c: i for i, c in enumerate(used)}
    return ColoredGraph(g, [remap[c] for c in colors])


def random_edge_coloring(rng: random.Random, g: Graph, color_count: int) -> EdgeColoredGraph:
    edges = g.edges()
    colors = {edge_key(u, v): rng.randrange(color_count) for u, v in edges}
    used = sorted(set(colors.values()))
    remap = {c: i for i, c in enumerate(used)}
    return EdgeColoredGraph(g, {e: remap[c] for e, c in colors.items()})


def random_block_graph(rng: random.Random, n_target: int) -> Graph:
    """Grow a block graph by gluing random cliques at random vertices."""
    g = Graph(1)
    while g.vertex_count < n_target:
        attach = rng.randrange(g.vertex_count)
        size = rng.randint(2, min(4, 1 + n_target - g.vertex_count))
        fresh = g.add_vertices(size - 1)
        members = [attach] + fresh
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                g.add_edge(u, v)
    return g


def random_cactus(rng: random.Random, n_target: int) -> Graph:
    """Grow a cactus by attaching pendant edges and vertex-glued cycles."""
    g = Graph(1)
    while g.vertex_count < n_target:
        attach = rng.randrange(g.vertex_count)
        room = n_target - g.vertex_count
        if room >= 2 and rng.random() < 0.6:
            cycle_new = rng.randint(2, min(5, room))
            fresh = g.add_vertices(cycle_new)
            ring = [attach] + fresh
            for i in range(len(ring)):
                g.add_edge(ring[i], ring[(i + 1) % len(ring)])
        else:
            g.add_edge(attach, g.add_vertex())
    return g


def random_split_graph(rng: random.Random, clique_size: int, independent_size: int) -> Graph:
    """Clique plus independent set, every independent vertex wired into the clique."""
    if clique_size < 1:
        raise ValueError("clique must be non-empty")
    g = Graph(clique_size + independent_size)
    for u in range(clique_size):
        for v in range(u + 1, clique_size):
            g.add_edge(u, v)
    for w in range(clique_size, clique_size + independent_size):
        picks = rng.sample(range(clique_size), rng.randint(1, clique_size))
        for u in picks:
            g.add_edge(w, u)
    return g
