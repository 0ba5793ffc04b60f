"""Generic deciders for the four rainbow connectivity variants.

The work-horse is a breadth-first search over (vertex, color-mask) states,
where the mask is an integer bitset of colors already consumed (internal
vertex colors for the vertex variants, edge colors for the edge variants).
States are pruned under mask domination: a state is dropped when the same
vertex already holds a subset mask, which is exact for existence questions
because any continuation available to the bigger mask is available to the
smaller one, and the smaller one was discovered no later. First-discovery
parent chains therefore reconstruct simple rainbow paths.

A separate exhaustive simple-path enumerator serves as the ground-truth
oracle; it shares no machinery with the mask search.
"""

from __future__ import annotations

from dataclasses import dataclass

from rvlab.graph import (
    ColoredGraph,
    EdgeColoredGraph,
    INF,
    bfs_distances,
    edge_key,
    is_connected,
)

MASK_CAPACITY = 20
DEFAULT_BRUTE_CAP = 64

VERTEX_VARIANTS = ("rvc", "srvc")
EDGE_VARIANTS = ("rc", "src")
ALL_VARIANTS = VERTEX_VARIANTS + EDGE_VARIANTS


@dataclass
class ConnectivityVerdict:
    connected: bool
    failing_pair: tuple[int, int] | None = None
    witness_paths: dict[tuple[int, int], list[int]] | None = None

    def __bool__(self) -> bool:
        return self.connected


# ---------------------------------------------------------------------------
# mask-search engine


def _search_tables(colored):
    """Per-graph tables shared by every source: adjacency and mask bits.

    Colors of global multiplicity 1 can never repeat on a walk, so they
    never need a mask bit; dropping them keeps the search exact while
    collapsing the state space on instances full of unique colors.
    """
    g = colored.graph
    n = g.vertex_count
    adj = [g.neighbors(v) for v in range(n)]
    if isinstance(colored, ColoredGraph):
        multiplicity: dict[int, int] = {}
        for c in colored.colors:
            multiplicity[c] = multiplicity.get(c, 0) + 1
        color_bit = [(1 << c) if multiplicity[c] > 1 else 0
                     for c in colored.colors]
        return adj, color_bit, None
    multiplicity = {}
    for c in colored.edge_colors.values():
        multiplicity[c] = multiplicity.get(c, 0) + 1
    edge_bit: dict[tuple[int, int], int] = {}
    for e, c in colored.edge_colors.items():
        edge_bit[e] = (1 << c) if multiplicity[c] > 1 else 0
    return adj, None, edge_bit


def _mask_reach(colored, s, *, strong=False, bound=None, target=None,
                parents_out=None, stop_when_all=False, tables=None):
    """Reachability by rainbow walk from s; returns the per-vertex mask store.

    Vertex-colored inputs track internal-vertex colors; edge-colored inputs
    track edge colors. With strong=True the search is restricted to the
    shortest-path DAG out of s, so reached vertices are exactly those with a
    rainbow shortest path. `parents_out`, when given, collects state parent
    links for witness reconstruction. Stops early once `target` is reached
    or (with stop_when_all) once every vertex has been reached.
    """
    g = colored.graph
    n = g.vertex_count
    adj, color_bit, edge_bit = tables if tables is not None else _search_tables(colored)
    vertex_mode = color_bit is not None
    dag = bfs_distances(g, s).dist if strong else None

    store: list[list[int]] = [[] for _ in range(n)]
    store[s] = [0]
    if parents_out is not None:
        parents_out[(s, 0)] = None
    reached = 1
    frontier = [(s, 0)]
    length = 0
    while frontier and (bound is None or length < bound):
        if target is not None and store[target]:
            break
        if stop_when_all and reached == n:
            break
        length += 1
        nxt = []
        for u, mask in frontier:
            if vertex_mode:
                if u != s:
                    bit = color_bit[u]
                    if mask & bit:
                        continue
                    carry = mask | bit
                else:
                    carry = mask
            neighbors = adj[u]
            if dag is not None:
                level = dag[u] + 1
                neighbors = [v for v in neighbors if dag[v] == level]
            for v in neighbors:
                if vertex_mode:
                    new_mask = carry
                else:
                    bit = edge_bit[edge_key(u, v)]
                    if mask & bit:
                        continue
                    new_mask = mask | bit
                kept = store[v]
                dominated = False
                for m in kept:
                    if m & new_mask == m:
                        dominated = True
                        break
                if dominated:
                    continue
                if not kept:
                    reached += 1
                    store[v] = [new_mask]
                else:
                    store[v] = [m for m in kept if m & new_mask != new_mask]
                    store[v].append(new_mask)
                if parents_out is not None:
                    parents_out[(v, new_mask)] = (u, mask)
                nxt.append((v, new_mask))
        frontier = nxt
    return store


def _reconstruct(parents, state) -> list[int]:
    path = []
    while state is not None:
        path.append(state[0])
        state = parents[state]
    return list(reversed(path))


def _pair_search(colored, s, t, strong):
    if s == t:
        raise ValueError("endpoints must differ")
    parents: dict = {}
    store = _mask_reach(colored, s, strong=strong, target=t, parents_out=parents)
    if not store[t]:
        return False, None
    path = _reconstruct(parents, (t, store[t][0]))
    return True, path


def rainbow_vertex_path_exists(cg: ColoredGraph, s: int, t: int):
    """Some s-t path whose internal vertices have pairwise-distinct colors."""
    return _pair_search(cg, s, t, strong=False)


def strong_rainbow_vertex_path_exists(cg: ColoredGraph, s: int, t: int):
    """Some shortest s-t path whose internal vertices have distinct colors."""
    return _pair_search(cg, s, t, strong=True)


def rainbow_path_exists(ecg: EdgeColoredGraph, s: int, t: int):
    """Some s-t path with pairwise-distinct edge colors."""
    return _pair_search(ecg, s, t, strong=False)


def strong_rainbow_path_exists(ecg: EdgeColoredGraph, s: int, t: int):
    """Some shortest s-t path with pairwise-distinct edge colors."""
    return _pair_search(ecg, s, t, strong=True)


def _all_pairs(colored, strong, witnesses):
    g = colored.graph
    n = g.vertex_count
    if n == 0 or not is_connected(g):
        raise ValueError("graph not connected")
    tables = _search_tables(colored)
    witness_paths: dict[tuple[int, int], list[int]] | None = {} if witnesses else None
    for s in range(n):
        parents: dict | None = {} if witnesses else None
        store = _mask_reach(colored, s, strong=strong, parents_out=parents,
                            stop_when_all=True, tables=tables)
        for t in range(s + 1, n):
            if not store[t]:
                return ConnectivityVerdict(False, (s, t), witness_paths)
            if witnesses:
                witness_paths[(s, t)] = _reconstruct(parents, (t, store[t][0]))
    return ConnectivityVerdict(True, None, witness_paths)


def _worker_scan(payload):
    colored, strong, sources = payload
    tables = _search_tables(colored)
    n = colored.graph.vertex_count
    failing = None
    witness_paths = {}
    for s in sources:
        parents: dict = {}
        store = _mask_reach(colored, s, strong=strong, parents_out=parents,
                            stop_when_all=True, tables=tables)
        for t in range(s + 1, n):
            if not store[t]:
                failing = (s, t)
                return failing, witness_paths
            witness_paths[(s, t)] = _reconstruct(parents, (t, store[t][0]))
    return failing, witness_paths


def parallel_connectivity(colored, variant: str, workers: int) -> ConnectivityVerdict:
    """All-pairs decision with sources distributed over worker processes.

    The merge is associative: not-connected dominates and the smallest
    failing pair is reported, so the outcome matches the sequential scan.
    """
    import multiprocessing

    _require_variant_match(colored, variant)
    strong = variant in ("srvc", "src")
    g = colored.graph
    n = g.vertex_count
    if n == 0 or not is_connected(g):
        raise ValueError("graph not connected")
    if workers <= 1:
        return _all_pairs(colored, strong=strong, witnesses=True)
    chunks = [(colored, strong, list(range(w, n, workers)))
              for w in range(workers)]
    with multiprocessing.Pool(workers) as pool:
        results = pool.map(_worker_scan, chunks)
    failing = min((f for f, _ in results if f is not None), default=None)
    if failing is not None:
        return ConnectivityVerdict(False, failing, None)
    witness_paths: dict = {}
    for _, paths in results:
        witness_paths.update(paths)
    return ConnectivityVerdict(True, None, witness_paths)


def is_rainbow_vertex_connected(cg: ColoredGraph, witnesses: bool = True) -> ConnectivityVerdict:
    return _all_pairs(cg, strong=False, witnesses=witnesses)


def is_strongly_rainbow_vertex_connected(cg: ColoredGraph, witnesses: bool = True) -> ConnectivityVerdict:
    return _all_pairs(cg, strong=True, witnesses=witnesses)


def is_rainbow_connected(ecg: EdgeColoredGraph, witnesses: bool = True) -> ConnectivityVerdict:
    return _all_pairs(ecg, strong=False, witnesses=witnesses)


def is_strongly_rainbow_connected(ecg: EdgeColoredGraph, witnesses: bool = True) -> ConnectivityVerdict:
    return _all_pairs(ecg, strong=True, witnesses=witnesses)


# ---------------------------------------------------------------------------
# color-subset DP with explicit capacity (FPT engine)


def _check_capacity(colored, capacity):
    k = colored.color_count
    if k > capacity:
        raise ValueError(
            f"too many colors for subset DP: {k} > capacity {capacity}"
        )
    return k


def fpt_reachability(cg: ColoredGraph, s: int, bound: int,
                     capacity: int = MASK_CAPACITY) -> set[int]:
    """Vertices reachable from s by a rainbow walk of length <= bound.

    Any rainbow walk has at most k distinct internal colors, hence length at
    most k+1, so bound=k+1 yields exact rainbow-vertex reachability.
    """
    _check_capacity(cg, capacity)
    store = _mask_reach(cg, s, bound=bound, stop_when_all=True)
    return {v for v in range(cg.graph.vertex_count) if store[v]}


def fpt_connectivity(colored, variant: str,
                     capacity: int = MASK_CAPACITY) -> ConnectivityVerdict:
    """Full-graph decision through the bounded-walk subset DP."""
    _require_variant_match(colored, variant)
    k = _check_capacity(colored, capacity)
    g = colored.graph
    n = g.vertex_count
    if n == 0 or not is_connected(g):
        raise ValueError("graph not connected")
    strong = variant in ("srvc", "src")
    bound = None if strong else (k + 1 if variant == "rvc" else k)
    tables = _search_tables(colored)
    for s in range(n):
        store = _mask_reach(colored, s, strong=strong, bound=bound,
                            stop_when_all=True, tables=tables)
        for t in range(s + 1, n):
            if not store[t]:
                return ConnectivityVerdict(False, (s, t))
    return ConnectivityVerdict(True)


# ---------------------------------------------------------------------------
# exhaustive oracle


def _require_variant_match(colored, variant):
    if variant not in ALL_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if variant in VERTEX_VARIANTS and not isinstance(colored, ColoredGraph):
        raise ValueError(f"variant {variant} needs a vertex-colored graph")
    if variant in EDGE_VARIANTS and not isinstance(colored, EdgeColoredGraph):
        raise ValueError(f"variant {variant} needs an edge-colored graph")


def _brute_pair(colored, s, t, strong, vertex_mode, dist_s=None, dist_t=None):
    """Depth-first enumeration of simple s-t paths with rainbow pruning.

    Prefixes whose consumed colors already repeat can never extend to a
    rainbow path, so pruning them keeps the search exhaustive. For strong
    variants the walk is confined to the s-t shortest-path DAG, which
    enumerates exactly the shortest s-t paths. Neighbors are tried nearest
    to t first, which only reorders the enumeration.
    """
    g = colored.graph
    if dist_t is None:
        dist_t = bfs_distances(g, t).dist
    if dist_s is None:
        dist_s = bfs_distances(g, s).dist
    adj = [sorted(g.neighbors(v), key=lambda w: dist_t[w])
           for v in range(g.vertex_count)]
    if vertex_mode:
        colors = colored.colors
    else:
        edge_colors = colored.edge_colors
    if strong:
        if dist_s[t] == INF:
            return False, None
    used: set[int] = set()
    on_path = [False] * g.vertex_count
    on_path[s] = True
    path = [s]
    stack = [0]  # next-neighbor index per frame
    while stack:
        u = path[-1]
        i = stack[-1]
        moved = False
        while i < len(adj[u]):
            v = adj[u][i]
            i += 1
            if strong and not (dist_s[v] == dist_s[u] + 1
                               and dist_t[v] == dist_t[u] - 1):
                continue
            if vertex_mode:
                if v == t:
                    stack[-1] = i
                    path.append(t)
                    return True, list(path)
                if on_path[v] or colors[v] in used:
                    continue
                used.add(colors[v])
            else:
                c = edge_colors[edge_key(u, v)]
                if c in used:
                    continue
                if v == t:
                    stack[-1] = i
                    path.append(t)
                    return True, list(path)
                if on_path[v]:
                    continue
                used.add(c)
            stack[-1] = i
            path.append(v)
            on_path[v] = True
            stack.append(0)
            moved = True
            break
        if moved:
            continue
        # backtrack
        stack.pop()
        leaving = path.pop()
        on_path[leaving] = False
        if stack:
            if vertex_mode:
                used.discard(colors[leaving])
            else:
                used.discard(edge_colors[edge_key(path[-1], leaving)])
    return False, None


def brute_force_rainbow_check(colored, variant: str, cap: int = DEFAULT_BRUTE_CAP,
                              witnesses: bool = False,
                              use_distance_shortcut: bool = True) -> ConnectivityVerdict:
    """Ground-truth all-pairs verdict by exhaustive path enumeration."""
    _require_variant_match(colored, variant)
    g = colored.graph
    n = g.vertex_count
    if n > cap:
        raise ValueError(f"brute-force cap exceeded: {n} vertices > cap {cap}")
    if n == 0 or not is_connected(g):
        raise ValueError("graph not connected")
    vertex_mode = variant in VERTEX_VARIANTS
    strong = variant in ("srvc", "src")
    dist = [bfs_distances(g, s).dist for s in range(n)]
    witness_paths: dict | None = {} if witnesses else None
    for s in range(n):
        for t in range(s + 1, n):
            if use_distance_shortcut and vertex_mode and dist[s][t] <= 2:
                if witnesses:
                    witness_paths[(s, t)] = _short_path(g, dist, s, t)
                continue
            ok, path = _brute_pair(colored, s, t, strong, vertex_mode,
                                   dist_s=dist[s], dist_t=dist[t])
            if not ok:
                return ConnectivityVerdict(False, (s, t), witness_paths)
            if witnesses:
                witness_paths[(s, t)] = path
    return ConnectivityVerdict(True, None, witness_paths)


def _short_path(g, dist, s, t):
    if dist[s][t] <= 1:
        return [s, t]
    mid = next(v for v in g.neighbors(s) if dist[t][v] == 1)
    return [s, mid, t]


# ---------------------------------------------------------------------------
# witness validation


def is_vertex_rainbow_path(cg: ColoredGraph, path: list[int],
                           strong: bool = False) -> bool:
    """Validate a witness: simple path, adjacency, distinct internal colors,
    and exact shortest length when strong."""
    g = cg.graph
    if len(path) < 2 or len(path) != len(set(path)):
        return False
    if not all(g.has_edge(path[i], path[i + 1]) for i in range(len(path) - 1)):
        return False
    internal = [cg.colors[v] for v in path[1:-1]]
    if len(internal) != len(set(internal)):
        return False
    if strong:
        if len(path) - 1 != bfs_distances(g, path[0]).dist[path[-1]]:
            return False
    return True


def is_edge_rainbow_path(ecg: EdgeColoredGraph, path: list[int],
                         strong: bool = False) -> bool:
    g = ecg.graph
    if len(path) < 2 or len(path) != len(set(path)):
        return False
    if not all(g.has_edge(path[i], path[i + 1]) for i in range(len(path) - 1)):
        return False
    used = [ecg.edge_colors[edge_key(path[i], path[i + 1])]
            for i in range(len(path) - 1)]
    if len(used) != len(set(used)):
        return False
    if strong:
        if len(path) - 1 != bfs_distances(g, path[0]).dist[path[-1]]:
            return False
    return True
