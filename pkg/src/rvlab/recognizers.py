"""Graph-class recognizers with independently checkable witnesses.

Every negative report carries a witness a reviewer can re-validate without
trusting the recognizer: an odd cycle, a claw, an asteroidal triple, a
chordless cycle, a non-cycle or non-clique block, a degree outlier, or a
forbidden-subgraph certificate. Recognition favors verifiable polynomial
algorithms over asymptotically optimal ones.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from rvlab.graph import (
    Graph,
    blocks_and_cuts,
    count_shortest_paths,
    induced_subgraph,
    is_connected,
)


@dataclass
class ClassReport:
    class_name: str
    member: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.member


# ---------------------------------------------------------------------------
# degree-based checks


def max_degree(g: Graph) -> int:
    return max((g.degree(v) for v in range(g.vertex_count)), default=0)


def is_k_regular(g: Graph, k: int) -> ClassReport:
    for v in range(g.vertex_count):
        if g.degree(v) != k:
            return ClassReport(f"{k}-regular", False, ("degree_outlier", (v, g.degree(v))))
    return ClassReport(f"{k}-regular", True)


def is_triangle_free(g: Graph) -> ClassReport:
    for u, v in g.edges():
        common = set(g.neighbors(u)).intersection(g.neighbors(v))
        if common:
            w = min(common)
            return ClassReport("triangle-free", False, ("triangle", (u, v, w)))
    return ClassReport("triangle-free", True)


# ---------------------------------------------------------------------------
# bipartite


def is_bipartite(g: Graph) -> ClassReport:
    side = [-1] * g.vertex_count
    parent = [-1] * g.vertex_count
    for root in range(g.vertex_count):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if side[v] == -1:
                    side[v] = 1 - side[u]
                    parent[v] = u
                    queue.append(v)
                elif side[v] == side[u]:
                    return ClassReport("bipartite", False,
                                       ("odd_cycle", _cycle_through(parent, u, v)))
    return ClassReport("bipartite", True)


def _cycle_through(parent: list[int], u: int, v: int) -> list[int]:
    """Cycle formed by the u->root and v->root parent chains plus edge (u, v)."""
    seen = {}
    x = u
    while x != -1:
        seen[x] = True
        x = parent[x]
    x = v
    while x not in seen:
        x = parent[x]
    meet = x
    left = []
    x = u
    while x != meet:
        left.append(x)
        x = parent[x]
    right = []
    x = v
    while x != meet:
        right.append(x)
        x = parent[x]
    return left + [meet] + list(reversed(right))


# ---------------------------------------------------------------------------
# chordal / interval / proper interval


def _mcs_elimination_order(g: Graph) -> list[int]:
    n = g.vertex_count
    weight = [0] * n
    visited = [False] * n
    visit_order = []
    for _ in range(n):
        best, best_w = -1, -1
        for v in range(n):
            if not visited[v] and weight[v] > best_w:
                best, best_w = v, weight[v]
        visited[best] = True
        visit_order.append(best)
        for w in g.neighbors(best):
            if not visited[w]:
                weight[w] += 1
    return list(reversed(visit_order))


def is_chordal(g: Graph) -> ClassReport:
    order = _mcs_elimination_order(g)
    pos = {v: i for i, v in enumerate(order)}
    adjacency = [set(g.neighbors(v)) for v in range(g.vertex_count)]
    for v in order:
        later = [w for w in adjacency[v] if pos[w] > pos[v]]
        if not later:
            continue
        anchor = min(later, key=pos.__getitem__)
        missing = [w for w in later if w != anchor and w not in adjacency[anchor]]
        if missing:
            return ClassReport("chordal", False,
                               ("chordless_cycle", find_chordless_cycle(g)))
    return ClassReport("chordal", True)


def find_chordless_cycle(g: Graph) -> list[int]:
    """Some induced cycle of length >= 4; raises if the graph is chordal.

    For any vertex v with non-adjacent neighbors x, y, a shortest x-y path
    avoiding the rest of N[v] is induced, so v plus the path is chordless.
    """
    adjacency = [set(g.neighbors(v)) for v in range(g.vertex_count)]
    for v in range(g.vertex_count):
        nbrs = g.neighbors(v)
        for i, x in enumerate(nbrs):
            for y in nbrs[i + 1:]:
                if y in adjacency[x]:
                    continue
                banned = (adjacency[v] | {v}) - {x, y}
                path = _shortest_path_avoiding(g, x, y, banned)
                if path is not None:
                    return [v] + path
    raise ValueError("graph is chordal: no chordless cycle of length >= 4")


def _shortest_path_avoiding(g: Graph, s: int, t: int, banned: set[int]) -> list[int] | None:
    if s in banned or t in banned:
        return None
    parent = {s: -1}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        if u == t:
            path = []
            while u != -1:
                path.append(u)
                u = parent[u]
            return list(reversed(path))
        for v in g.neighbors(u):
            if v not in parent and v not in banned:
                parent[v] = u
                queue.append(v)
    return None


def _component_labels_avoiding_closed_nbhd(g: Graph, z: int) -> list[int]:
    """Component label per vertex in G - N[z]; -1 inside N[z]."""
    banned = set(g.neighbors(z)) | {z}
    label = [-1] * g.vertex_count
    current = 0
    for s in range(g.vertex_count):
        if s in banned or label[s] != -1:
            continue
        label[s] = current
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if v not in banned and label[v] == -1:
                    label[v] = current
                    queue.append(v)
        current += 1
    return label


def find_asteroidal_triple(g: Graph) -> tuple[int, int, int] | None:
    """Three pairwise non-adjacent vertices, each pair joined by a path
    avoiding the closed neighborhood of the third."""
    n = g.vertex_count
    labels = [_component_labels_avoiding_closed_nbhd(g, z) for z in range(n)]
    adjacency = [set(g.neighbors(v)) for v in range(n)]
    for x in range(n):
        for y in range(x + 1, n):
            if y in adjacency[x]:
                continue
            for z in range(y + 1, n):
                if z in adjacency[x] or z in adjacency[y]:
                    continue
                if (labels[z][x] == labels[z][y] != -1
                        and labels[y][x] == labels[y][z] != -1
                        and labels[x][y] == labels[x][z] != -1):
                    return (x, y, z)
    return None


def is_interval(g: Graph) -> ClassReport:
    chordal = is_chordal(g)
    if not chordal.member:
        return ClassReport("interval", False, chordal.witness)
    at = find_asteroidal_triple(g)
    if at is not None:
        return ClassReport("interval", False, ("asteroidal_triple", at))
    return ClassReport("interval", True)


def is_claw_free(g: Graph) -> ClassReport:
    adjacency = [set(g.neighbors(v)) for v in range(g.vertex_count)]
    for center in range(g.vertex_count):
        nbrs = g.neighbors(center)
        for a, b, c in combinations(nbrs, 3):
            if b not in adjacency[a] and c not in adjacency[a] and c not in adjacency[b]:
                return ClassReport("claw-free", False, ("claw", (center, a, b, c)))
    return ClassReport("claw-free", True)


def is_proper_interval(g: Graph) -> ClassReport:
    interval = is_interval(g)
    if not interval.member:
        return ClassReport("proper-interval", False, interval.witness)
    claw = is_claw_free(g)
    if not claw.member:
        return ClassReport("proper-interval", False, claw.witness)
    return ClassReport("proper-interval", True)


# ---------------------------------------------------------------------------
# cactus / block / split


def is_cactus(g: Graph) -> ClassReport:
    for block in blocks_and_cuts(g)[1]:
        vertices = {v for e in block for v in e}
        if len(block) > len(vertices):
            return ClassReport("cactus", False,
                               ("non_cycle_block", sorted(vertices)))
    return ClassReport("cactus", True)


def is_block_graph(g: Graph) -> ClassReport:
    for block in blocks_and_cuts(g)[1]:
        vertices = sorted({v for e in block for v in e})
        expected = len(vertices) * (len(vertices) - 1) // 2
        if len(block) != expected:
            return ClassReport("block", False, ("non_clique_block", vertices))
    return ClassReport("block", True)


def is_split(g: Graph) -> ClassReport:
    """Degree-sequence splittance criterion."""
    n = g.vertex_count
    degrees = sorted((g.degree(v) for v in range(n)), reverse=True)
    h = 0
    for i, d in enumerate(degrees, start=1):
        if d >= i - 1:
            h = i
    lhs = sum(degrees[:h])
    rhs = h * (h - 1) + sum(degrees[h:])
    if lhs == rhs:
        return ClassReport("split", True)
    return ClassReport("split", False, _split_witness(g))


def _split_witness(g: Graph) -> tuple:
    """Forbidden induced subgraph for split graphs: 2K2, C4, or C5."""
    adjacency = [set(g.neighbors(v)) for v in range(g.vertex_count)]
    edges = g.edges()
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1:]:
            if len({a, b, c, d}) < 4:
                continue
            if (c not in adjacency[a] and d not in adjacency[a]
                    and c not in adjacency[b] and d not in adjacency[b]):
                return ("two_k2", (a, b, c, d))
    cycle = find_chordless_cycle(g)
    return ("chordless_cycle", cycle)


# ---------------------------------------------------------------------------
# planarity (incremental face embedding on biconnected blocks)


def _find_cycle_in_block(g: Graph) -> list[int]:
    """Any cycle in a connected graph that has one (BFS tree + non-tree edge)."""
    parent = [-1] * g.vertex_count
    seen = [False] * g.vertex_count
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                queue.append(v)
    for u, v in g.edges():
        if parent[u] != v and parent[v] != u:
            return _cycle_through(parent, u, v)
    raise ValueError("acyclic block")


def _fragments(g: Graph, embedded_v: set[int], embedded_e: set[tuple[int, int]]):
    """Demoucron fragments of g relative to the embedded subgraph."""
    frags = []
    for u, v in g.edges():
        if (u, v) not in embedded_e and u in embedded_v and v in embedded_v:
            frags.append(({u, v}, None))
    seen = set(embedded_v)
    for s in range(g.vertex_count):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        attachments = set()
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y in embedded_v:
                    attachments.add(y)
                elif y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        frags.append((attachments, comp))
    return frags


def _path_through_fragment(g: Graph, frag) -> list[int]:
    """Path between two attachment vertices whose interior lies in the fragment."""
    attachments, comp = frag
    if comp is None:
        a, b = sorted(attachments)
        return [a, b]
    comp_set = set(comp)
    a = min(attachments)
    parent = {a: -1}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if v in parent:
                continue
            if v in comp_set:
                parent[v] = u
                queue.append(v)
            elif u != a and v in attachments:
                path = [v, u]
                x = parent[u]
                while x != -1:
                    path.append(x)
                    x = parent[x]
                return list(reversed(path))
    raise AssertionError("fragment has fewer than two attachments")


def _embed_path(faces: list[list[int]], face_index: int, path: list[int]) -> None:
    face = faces[face_index]
    a, b = path[0], path[-1]
    ia, ib = face.index(a), face.index(b)
    if ia < ib:
        seg1 = face[ia:ib + 1]
        seg2 = face[ib:] + face[:ia + 1]
    else:
        seg1 = face[ia:] + face[:ib + 1]
        seg2 = face[ib:ia + 1]
    interior = path[1:-1]
    faces[face_index] = seg1 + list(reversed(interior))
    faces.append(seg2 + interior)


def _planar_block(g: Graph) -> bool:
    """Demoucron-style incremental embedding; g must be biconnected."""
    n, m = g.vertex_count, g.edge_count
    if n < 5:
        return True
    if m > 3 * n - 6:
        return False
    cycle = _find_cycle_in_block(g)
    faces = [list(cycle), list(reversed(cycle))]
    embedded_v = set(cycle)
    embedded_e = set()
    for i in range(len(cycle)):
        u, v = cycle[i], cycle[(i + 1) % len(cycle)]
        embedded_e.add((min(u, v), max(u, v)))
    while True:
        frags = _fragments(g, embedded_v, embedded_e)
        if not frags:
            return True
        chosen = None
        for frag in frags:
            attachments = frag[0]
            admissible = [i for i, f in enumerate(faces) if attachments <= set(f)]
            if not admissible:
                return False
            if len(admissible) == 1:
                chosen = (frag, admissible[0])
                break
            if chosen is None:
                chosen = (frag, admissible[0])
        frag, face_index = chosen
        path = _path_through_fragment(g, frag)
        _embed_path(faces, face_index, path)
        embedded_v.update(path)
        for i in range(len(path) - 1):
            u, v = path[i], path[i + 1]
            embedded_e.add((min(u, v), max(u, v)))


def _planar_decision(g: Graph) -> bool:
    n, m = g.vertex_count, g.edge_count
    if n >= 3:
        if m > 3 * n - 6:
            return False
        if is_bipartite(g).member and m > 2 * n - 4:
            return False
    for block in blocks_and_cuts(g)[1]:
        vertices = sorted({v for e in block for v in e})
        if len(block) <= 3:
            continue
        sub, _ = induced_subgraph(g, vertices)
        if not _planar_block(sub):
            return False
    return True


def is_planar(g: Graph) -> ClassReport:
    if _planar_decision(g):
        return ClassReport("planar", True)
    return ClassReport("planar", False,
                       ("kuratowski_subdivision", _kuratowski_witness(g)))


def _kuratowski_witness(g: Graph) -> list[tuple[int, int]]:
    """Edge-minimal non-planar subgraph = a K5 or K3,3 subdivision."""
    h = g.copy()
    shrinking = True
    while shrinking:
        shrinking = False
        for u, v in h.edges():
            h.remove_edge(u, v)
            if _planar_decision(h):
                h.add_edge(u, v)
            else:
                shrinking = True
    return h.edges()


def smooth_degree_two(edges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Suppress degree-2 vertices of the subgraph given by `edges`.

    Used to validate Kuratowski witnesses: after smoothing, a subdivision of
    K5 (resp. K3,3) becomes exactly K5 (resp. K3,3).
    """
    adjacency: dict[int, list[int]] = {}
    for u, v in edges:
        adjacency.setdefault(u, []).append(v)
        adjacency.setdefault(v, []).append(u)
    changed = True
    while changed:
        changed = False
        for x, nbrs in list(adjacency.items()):
            if len(nbrs) == 2 and nbrs[0] != nbrs[1]:
                a, b = nbrs
                if a in adjacency.get(b, []):
                    continue  # smoothing would create a parallel edge
                adjacency[a] = [w for w in adjacency[a] if w != x] + [b]
                adjacency[b] = [w for w in adjacency[b] if w != x] + [a]
                del adjacency[x]
                changed = True
                break
    out = set()
    for u, nbrs in adjacency.items():
        for v in nbrs:
            out.add((min(u, v), max(u, v)))
    return sorted(out)


# ---------------------------------------------------------------------------
# geodetic


def is_geodetic(g: Graph) -> ClassReport:
    if not is_connected(g):
        raise ValueError("geodetic check requires a connected graph")
    for s in range(g.vertex_count):
        for t in range(s + 1, g.vertex_count):
            paths = count_shortest_paths(g, s, t)
            if paths != 1:
                return ClassReport("geodetic", False,
                                   ("pair_with_multiple_shortest_paths", (s, t, paths)))
    return ClassReport("geodetic", True)


# ---------------------------------------------------------------------------
# cliques


def max_clique(g: Graph) -> list[int]:
    """A maximum clique via Bron-Kerbosch with pivoting (desk scale)."""
    adjacency = [set(g.neighbors(v)) for v in range(g.vertex_count)]
    best: list[int] = []

    def expand(r: list[int], p: set[int], x: set[int]) -> None:
        nonlocal best
        if not p and not x:
            if len(r) > len(best):
                best = list(r)
            return
        if len(r) + len(p) <= len(best):
            return
        pivot = max(p | x, key=lambda u: len(adjacency[u] & p))
        for v in sorted(p - adjacency[pivot]):
            expand(r + [v], p & adjacency[v], x & adjacency[v])
            p.remove(v)
            x.add(v)

    expand([], set(range(g.vertex_count)), set())
    return sorted(best)


def clique_number(g: Graph) -> int:
    return len(max_clique(g))
