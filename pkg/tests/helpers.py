"""Independent test-side oracles: exhaustive path enumeration and friends.

These deliberately avoid the package's search machinery so differential
tests compare two unrelated implementations.
"""

from __future__ import annotations

from rvlab.graph import ColoredGraph, EdgeColoredGraph, Graph, bfs_distances, edge_key


def enumerate_simple_paths(g: Graph, s: int, t: int, max_len: int | None = None):
    """Yield every simple s-t path (vertex lists) up to max_len edges."""
    path = [s]
    on_path = {s}

    def extend(u):
        if u == t:
            yield list(path)
            return
        if max_len is not None and len(path) - 1 >= max_len:
            return
        for v in g.neighbors(u):
            if v not in on_path:
                path.append(v)
                on_path.add(v)
                yield from extend(v)
                on_path.discard(v)
                path.pop()

    yield from extend(s)


def vertex_rainbow(cg: ColoredGraph, path: list[int]) -> bool:
    internal = [cg.colors[v] for v in path[1:-1]]
    return len(internal) == len(set(internal))


def edge_rainbow(ecg: EdgeColoredGraph, path: list[int]) -> bool:
    colors = [ecg.edge_colors[edge_key(path[i], path[i + 1])] for i in range(len(path) - 1)]
    return len(colors) == len(set(colors))


def exists_rainbow_path_by_enumeration(cg: ColoredGraph, s: int, t: int, strong: bool = False) -> bool:
    if s == t:
        return True
    dist = bfs_distances(cg.graph, s).dist
    limit = int(dist[t]) if strong else None
    if strong and dist[t] == float("inf"):
        return False
    for path in enumerate_simple_paths(cg.graph, s, t, max_len=limit):
        if vertex_rainbow(cg, path):
            return True
    return False


def exists_edge_rainbow_path_by_enumeration(ecg: EdgeColoredGraph, s: int, t: int, strong: bool = False) -> bool:
    if s == t:
        return True
    dist = bfs_distances(ecg.graph, s).dist
    limit = int(dist[t]) if strong else None
    if strong and dist[t] == float("inf"):
        return False
    for path in enumerate_simple_paths(ecg.graph, s, t, max_len=limit):
        if edge_rainbow(ecg, path):
            return True
    return False


def all_pairs_by_enumeration(colored, variant: str) -> bool:
    """Exhaustive all-pairs rainbow connectivity for tiny instances."""
    n = colored.graph.vertex_count
    for s in range(n):
        for t in range(s + 1, n):
            if variant == "rvc":
                ok = exists_rainbow_path_by_enumeration(colored, s, t)
            elif variant == "srvc":
                ok = exists_rainbow_path_by_enumeration(colored, s, t, strong=True)
            elif variant == "rc":
                ok = exists_edge_rainbow_path_by_enumeration(colored, s, t)
            elif variant == "src":
                ok = exists_edge_rainbow_path_by_enumeration(colored, s, t, strong=True)
            else:
                raise ValueError(variant)
            if not ok:
                return False
    return True
