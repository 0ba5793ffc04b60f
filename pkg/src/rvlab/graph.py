"""Undirected simple graphs, vertex/edge colorings, and shared primitives.

Vertex ids are dense integers 0..n-1 and color ids are dense small integers,
so downstream algorithms can use array tables and bitmasks. Unordered edges
are canonicalized as (min, max) pairs. Distances use a float infinity
sentinel so saturating comparisons like d(s,w) + d(w,t) never wrap.
"""

from __future__ import annotations

from bisect import bisect_left, insort
from collections import deque
from dataclasses import dataclass, field

INF = float("inf")


def edge_key(u: int, v: int) -> tuple[int, int]:
    """Canonical unordered-edge key."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph with sorted adjacency lists.

    Mutating methods (add_vertex, add_edge, ...) are meant for single-owner
    builders; queries never mutate and are safe to share.
    """

    __slots__ = ("_adj",)

    def __init__(self, vertex_count: int = 0, edges: "tuple | list" = ()):
        self._adj: list[list[int]] = [[] for _ in range(vertex_count)]
        for u, v in edges:
            self.add_edge(u, v)

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def add_vertex(self) -> int:
        self._adj.append([])
        return len(self._adj) - 1

    def add_vertices(self, count: int) -> list[int]:
        first = len(self._adj)
        for _ in range(count):
            self._adj.append([])
        return list(range(first, first + count))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < len(self._adj):
            raise ValueError(f"vertex {v} out of range 0..{len(self._adj) - 1}")

    def add_edge(self, u: int, v: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if self.has_edge(u, v):
            raise ValueError(f"duplicate edge ({u}, {v})")
        insort(self._adj[u], v)
        insort(self._adj[v], u)

    def remove_edge(self, u: int, v: int) -> None:
        if not self.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        self._adj[u].remove(v)
        self._adj[v].remove(u)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        a = self._adj[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def neighbors(self, v: int) -> list[int]:
        """Sorted neighbor list. Treat as read-only."""
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as canonical (u, v) pairs, lexicographically sorted."""
        return [(u, v) for u in range(len(self._adj)) for v in self._adj[u] if u < v]

    def copy(self) -> "Graph":
        g = Graph()
        g._adj = [list(a) for a in self._adj]
        return g

    def validate(self) -> None:
        """Structural validator: simplicity and adjacency symmetry."""
        for u, a in enumerate(self._adj):
            if any(a[i] >= a[i + 1] for i in range(len(a) - 1)):
                raise AssertionError(f"adjacency of {u} not strictly sorted")
            for v in a:
                if v == u:
                    raise AssertionError(f"self-loop at {u}")
                if not 0 <= v < len(self._adj):
                    raise AssertionError(f"neighbor {v} of {u} out of range")
                b = self._adj[v]
                i = bisect_left(b, u)
                if i >= len(b) or b[i] != u:
                    raise AssertionError(f"asymmetric edge ({u}, {v})")

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


@dataclass
class ColoredGraph:
    """Graph plus a total vertex-color assignment (colors may repeat)."""

    graph: Graph
    colors: list[int]

    def __post_init__(self) -> None:
        if len(self.colors) != self.graph.vertex_count:
            raise ValueError("coloring must assign a color to every vertex")
        if any(c < 0 for c in self.colors):
            raise ValueError("color ids must be non-negative")

    @property
    def color_count(self) -> int:
        return max(self.colors) + 1 if self.colors else 0

    def copy(self) -> "ColoredGraph":
        return ColoredGraph(self.graph.copy(), list(self.colors))


@dataclass
class EdgeColoredGraph:
    """Graph plus a total edge-color assignment keyed by canonical edges."""

    graph: Graph
    edge_colors: dict[tuple[int, int], int]

    def __post_init__(self) -> None:
        edges = self.graph.edges()
        if set(self.edge_colors) != set(edges):
            raise ValueError("edge coloring must cover exactly the edge set")
        if any(c < 0 for c in self.edge_colors.values()):
            raise ValueError("color ids must be non-negative")

    @property
    def color_count(self) -> int:
        return max(self.edge_colors.values()) + 1 if self.edge_colors else 0

    def color_of(self, u: int, v: int) -> int:
        return self.edge_colors[edge_key(u, v)]


@dataclass
class DistanceTable:
    """Hop counts from one source; unreachable vertices hold INF."""

    source: int
    dist: list[float] = field(repr=False)

    def __getitem__(self, v: int) -> float:
        return self.dist[v]


def bfs_distances(g: Graph, s: int) -> DistanceTable:
    """Exact unweighted shortest-path distances from s."""
    g._check_vertex(s)
    dist: list[float] = [INF] * g.vertex_count
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in g.neighbors(u):
            if du < dist[v]:
                dist[v] = du
                queue.append(v)
    return DistanceTable(s, dist)


def is_connected(g: Graph) -> bool:
    if g.vertex_count == 0:
        return True
    return all(d < INF for d in bfs_distances(g, 0).dist)


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.vertex_count
    comps = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(comp)
    return comps


def diameter(g: Graph) -> int:
    """Longest shortest path; raises on disconnected input."""
    if g.vertex_count == 0:
        raise ValueError("graph not connected")
    best = 0
    for s in range(g.vertex_count):
        dist = bfs_distances(g, s).dist
        worst = max(dist)
        if worst == INF:
            raise ValueError("graph not connected")
        best = max(best, int(worst))
    return best


def count_shortest_paths(g: Graph, s: int, t: int) -> int:
    """Number of distinct shortest s-t paths via DP over the BFS DAG."""
    dist = bfs_distances(g, s).dist
    if dist[t] == INF:
        return 0
    order = sorted((v for v in range(g.vertex_count) if dist[v] <= dist[t]),
                   key=lambda v: dist[v])
    count = [0] * g.vertex_count
    count[s] = 1
    for v in order:
        if v == s:
            continue
        count[v] = sum(count[u] for u in g.neighbors(v) if dist[u] == dist[v] - 1)
    return count[t]


def subdivide_edge(g: Graph, u: int, v: int) -> int:
    """Replace edge (u, v) by a path u-w-v; returns the new vertex w."""
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    g.remove_edge(u, v)
    w = g.add_vertex()
    g.add_edge(u, w)
    g.add_edge(w, v)
    return w


def disjoint_union(a: ColoredGraph, b: ColoredGraph, color_offset: int = 0) -> ColoredGraph:
    """Disjoint union; vertex ids of b shift by |V(a)|, its colors by color_offset.

    Offset 0 keeps a shared palette; pass a's color count for fresh-color
    separation.
    """
    if color_offset < 0:
        raise ValueError("color_offset must be non-negative")
    g = a.graph.copy()
    shift = g.vertex_count
    g.add_vertices(b.graph.vertex_count)
    for u, v in b.graph.edges():
        g.add_edge(u + shift, v + shift)
    return ColoredGraph(g, list(a.colors) + [c + color_offset for c in b.colors])


def induced_subgraph(g: Graph, keep: list[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on `keep`; returns (subgraph, new-id -> old-id map)."""
    new_to_old = sorted(set(keep))
    old_to_new = {old: new for new, old in enumerate(new_to_old)}
    sub = Graph(len(new_to_old))
    for new, old in enumerate(new_to_old):
        for w in g.neighbors(old):
            if w in old_to_new and old < w:
                sub.add_edge(new, old_to_new[w])
    return sub, new_to_old


def induced_colored_subgraph(cg: ColoredGraph, keep: list[int]) -> tuple[ColoredGraph, list[int]]:
    sub, new_to_old = induced_subgraph(cg.graph, keep)
    return ColoredGraph(sub, [cg.colors[old] for old in new_to_old]), new_to_old


def articulation_points(g: Graph) -> set[int]:
    cuts, _ = blocks_and_cuts(g)
    return cuts


def biconnected_components(g: Graph) -> list[list[tuple[int, int]]]:
    _, blocks = blocks_and_cuts(g)
    return blocks


def blocks_and_cuts(g: Graph) -> tuple[set[int], list[list[tuple[int, int]]]]:
    """Articulation points and biconnected components (as edge lists).

    Iterative Hopcroft-Tarjan; isolated vertices yield no block.
    """
    n = g.vertex_count
    disc = [-1] * n
    low = [0] * n
    cuts: set[int] = set()
    blocks: list[list[tuple[int, int]]] = []
    edge_stack: list[tuple[int, int]] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        root_children = 0
        # stack frames: (vertex, parent, neighbor index)
        stack = [(root, -1, 0)]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            u, parent, i = stack.pop()
            adj = g.neighbors(u)
            advanced = False
            while i < len(adj):
                v = adj[i]
                i += 1
                if disc[v] == -1:
                    edge_stack.append((u, v))
                    stack.append((u, parent, i))
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, u, 0))
                    if u == root:
                        root_children += 1
                    advanced = True
                    break
                elif v != parent and disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    low[u] = min(low[u], disc[v])
            if advanced:
                continue
            # u is finished; fold its low into the parent frame
            if parent != -1:
                low[parent] = min(low[parent], low[u])
                if low[u] >= disc[parent]:
                    if parent != root or root_children > 1:
                        cuts.add(parent)
                    block = []
                    while edge_stack:
                        e = edge_stack.pop()
                        block.append(e)
                        if e == (parent, u):
                            break
                    blocks.append(block)
    return cuts, blocks


def path_is_valid(g: Graph, path: list[int]) -> bool:
    """True if `path` is a simple path: distinct vertices, consecutive edges."""
    if len(path) != len(set(path)):
        return False
    return all(g.has_edge(path[i], path[i + 1]) for i in range(len(path) - 1))
