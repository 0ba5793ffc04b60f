"""Polynomial-time deciders for block, cactus, and split graphs.

The cactus st-decider reduces path choice to 2-SAT: an s-t simple path in a
cactus is exactly the forced corridor vertices plus one arc choice per cycle
block on the block path, so color conflicts are pairwise constraints over
arc variables. The strong all-pairs cactus decider first deletes every
vertex w with d(s,w) + d(w,t) != d(s,t); in the pruned graph every s-t
simple path is a shortest s-t path of the original graph, so the weak
st-decider answers the strong question.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from rvlab.graph import (
    ColoredGraph,
    Graph,
    INF,
    bfs_distances,
    blocks_and_cuts,
    induced_colored_subgraph,
    is_connected,
)
from rvlab.recognizers import is_block_graph, is_cactus, is_split
from rvlab.solvers import ConnectivityVerdict


# ---------------------------------------------------------------------------
# 2-SAT (implication graph + strongly connected components)

POS, NEG = 0, 1


def literal(var: int, negated: bool = False) -> int:
    return 2 * var + (1 if negated else 0)


def negate(lit: int) -> int:
    return lit ^ 1


@dataclass
class TwoSatInstance:
    variable_count: int
    clauses: list[tuple[int, int]] = field(default_factory=list)

    def add_clause(self, a: int, b: int) -> None:
        for lit in (a, b):
            if not 0 <= lit < 2 * self.variable_count:
                raise ValueError(f"literal {lit} out of range")
        self.clauses.append((a, b))

    def add_unit(self, a: int) -> None:
        self.add_clause(a, a)


def two_sat_solve(inst: TwoSatInstance) -> list[bool] | None:
    """Satisfying assignment or None; Tarjan SCC over the implication graph."""
    n_lit = 2 * inst.variable_count
    succ: list[list[int]] = [[] for _ in range(n_lit)]
    for a, b in inst.clauses:
        if not (0 <= a < n_lit and 0 <= b < n_lit):
            raise ValueError("clause references undeclared variable")
        succ[negate(a)].append(b)
        succ[negate(b)].append(a)

    index = [-1] * n_lit
    low = [0] * n_lit
    comp = [-1] * n_lit
    on_stack = [False] * n_lit
    scc_stack: list[int] = []
    counter = [0]
    comp_count = [0]

    for root in range(n_lit):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter[0]
                counter[0] += 1
                scc_stack.append(v)
                on_stack[v] = True
            advanced = False
            while i < len(succ[v]):
                w = succ[v][i]
                i += 1
                if index[w] == -1:
                    work.append((v, i))
                    work.append((w, 0))
                    advanced = True
                    break
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            if low[v] == index[v]:
                while True:
                    w = scc_stack.pop()
                    on_stack[w] = False
                    comp[w] = comp_count[0]
                    if w == v:
                        break
                comp_count[0] += 1
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])

    assignment = []
    for var in range(inst.variable_count):
        pos, neg = comp[2 * var], comp[2 * var + 1]
        if pos == neg:
            return None
        # Tarjan numbers components in reverse topological order, so the
        # smaller component id is the one later in implication order.
        assignment.append(pos < neg)
    return assignment


# ---------------------------------------------------------------------------
# block path decomposition of a cactus corridor


@dataclass
class BlockStep:
    """One block traversed by every s-t simple path."""

    kind: str  # "bridge" or "cycle"
    entry: int
    exit: int
    arcs: tuple[list[int], list[int]] | None = None  # internal vertices per arc


@dataclass
class BlockPathDecomposition:
    steps: list[BlockStep]
    forced: list[int]  # internal vertices shared by every s-t simple path


def _block_cut_tree_path(g: Graph, s: int, t: int):
    """Ordered blocks (vertex sets) and junction cut vertices from s to t."""
    cuts, blocks = blocks_and_cuts(g)
    block_vertices = [sorted({v for e in b for v in e}) for b in blocks]
    touching: dict[int, list[int]] = {}
    for i, vs in enumerate(block_vertices):
        for v in vs:
            touching.setdefault(v, []).append(i)

    def node_of(v):
        if v in cuts:
            return ("cut", v)
        owners = touching.get(v)
        if not owners:
            return None
        return ("block", owners[0])

    adjacency: dict[tuple, list[tuple]] = {}
    for i, vs in enumerate(block_vertices):
        for v in vs:
            if v in cuts:
                adjacency.setdefault(("block", i), []).append(("cut", v))
                adjacency.setdefault(("cut", v), []).append(("block", i))

    start, goal = node_of(s), node_of(t)
    if start is None or goal is None:
        return None
    if start == goal:
        path = [start]
    else:
        parent = {start: None}
        queue = deque([start])
        path = None
        while queue:
            x = queue.popleft()
            if x == goal:
                path = []
                while x is not None:
                    path.append(x)
                    x = parent[x]
                path.reverse()
                break
            for y in adjacency.get(x, ()):
                if y not in parent:
                    parent[y] = x
                    queue.append(y)
        if path is None:
            return None
    block_seq = [node[1] for node in path if node[0] == "block"]
    junctions = [node[1] for node in path if node[0] == "cut"]
    # drop junction entries that are s or t themselves (path may start/end
    # at a cut node); interior junctions remain in order.
    interior = [v for v in junctions if v not in (s, t)]
    return [block_vertices[i] for i in block_seq], interior


def _cycle_arcs(g: Graph, block: list[int], entry: int, exit_: int):
    """The two entry->exit internal-vertex sequences around a cycle block."""
    members = set(block)
    first_two = [w for w in g.neighbors(entry) if w in members]
    arcs = []
    for begin in first_two:
        arc = []
        prev, cur = entry, begin
        while cur != exit_:
            arc.append(cur)
            nxt = [w for w in g.neighbors(cur) if w in members and w != prev]
            assert len(nxt) == 1, "cycle block vertex of degree != 2"
            prev, cur = cur, nxt[0]
        arcs.append(arc)
    assert len(arcs) == 2
    return arcs[0], arcs[1]


def block_path_decomposition(g: Graph, s: int, t: int) -> BlockPathDecomposition | None:
    """Corridor of blocks every s-t simple path must traverse; None if t
    is unreachable from s."""
    tree_path = _block_cut_tree_path(g, s, t)
    if tree_path is None:
        return None
    block_seq, junctions = tree_path
    steps = []
    entry = s
    junction_iter = iter(junctions + [t])
    for block in block_seq:
        exit_ = next(junction_iter)
        members = set(block)
        if len(block) == 2:
            steps.append(BlockStep("bridge", entry, exit_))
        else:
            arcs = _cycle_arcs(g, block, entry, exit_)
            steps.append(BlockStep("cycle", entry, exit_, arcs))
        assert entry in members and exit_ in members
        entry = exit_
    return BlockPathDecomposition(steps, junctions)


# ---------------------------------------------------------------------------
# cactus deciders


def solve_cactus_rvc_st(cg: ColoredGraph, s: int, t: int,
                        precheck: bool = True):
    """Is there a vertex-rainbow simple s-t path in a cactus?

    Returns (bool, witness path or None).
    """
    if precheck and not is_cactus(cg.graph).member:
        raise ValueError("input is not a cactus")
    if s == t:
        raise ValueError("endpoints must differ")
    decomposition = block_path_decomposition(cg.graph, s, t)
    if decomposition is None:
        return False, None
    colors = cg.colors
    forced = decomposition.forced
    forced_colors = [colors[v] for v in forced]
    if len(set(forced_colors)) != len(forced_colors):
        return False, None
    forced_set = set(forced_colors)

    cycle_steps = [st_ for st_ in decomposition.steps if st_.kind == "cycle"]
    inst = TwoSatInstance(len(cycle_steps))

    def arc_usable(arc: list[int]) -> bool:
        arc_colors = [colors[v] for v in arc]
        if len(set(arc_colors)) != len(arc_colors):
            return False
        return not any(c in forced_set for c in arc_colors)

    arc_lit = {}  # (step index, arc index) -> literal meaning "this arc taken"
    for i, step in enumerate(cycle_steps):
        arc_lit[(i, 0)] = literal(i, negated=False)
        arc_lit[(i, 1)] = literal(i, negated=True)
        for a in (0, 1):
            if not arc_usable(step.arcs[a]):
                inst.add_unit(negate(arc_lit[(i, a)]))

    color_sites: dict[int, list[tuple[int, int]]] = {}
    for i, step in enumerate(cycle_steps):
        for a in (0, 1):
            for v in step.arcs[a]:
                color_sites.setdefault(colors[v], []).append((i, a))
    for sites in color_sites.values():
        for x in range(len(sites)):
            for y in range(x + 1, len(sites)):
                (i, a), (j, b) = sites[x], sites[y]
                if i != j:
                    inst.add_clause(negate(arc_lit[(i, a)]),
                                    negate(arc_lit[(j, b)]))
                # same cycle, opposite arcs: compatible, only one arc taken;
                # same arc: already rejected by arc_usable

    assignment = two_sat_solve(inst)
    if assignment is None:
        return False, None
    path = [s]
    cycle_index = 0
    for step in decomposition.steps:
        if step.kind == "bridge":
            path.append(step.exit)
        else:
            arc = step.arcs[0] if assignment[cycle_index] else step.arcs[1]
            path.extend(arc)
            path.append(step.exit)
            cycle_index += 1
    return True, path


def cactus_prune_to_shortest(cg: ColoredGraph, s: int, t: int,
                             precheck: bool = True):
    """Induced subgraph on vertices lying on some shortest s-t path.

    Returns (pruned colored graph, new-id -> old-id map). The output is a
    cactus in which exactly the even cycles survive as cycles.
    """
    if precheck and not is_cactus(cg.graph).member:
        raise ValueError("input is not a cactus")
    if s == t:
        raise ValueError("endpoints must differ")
    dist_s = bfs_distances(cg.graph, s).dist
    dist_t = bfs_distances(cg.graph, t).dist
    total = dist_s[t]
    if total == INF:
        raise ValueError("endpoints are disconnected")
    keep = [v for v in range(cg.graph.vertex_count)
            if dist_s[v] + dist_t[v] == total]
    return induced_colored_subgraph(cg, keep)


def solve_cactus_srvc(cg: ColoredGraph, witnesses: bool = True) -> ConnectivityVerdict:
    """Strong rainbow vertex connectivity of a cactus, via pruning + st-decider."""
    if not is_cactus(cg.graph).member:
        raise ValueError("input is not a cactus")
    n = cg.graph.vertex_count
    if n == 0 or not is_connected(cg.graph):
        raise ValueError("graph not connected")
    witness_paths: dict | None = {} if witnesses else None
    for s in range(n):
        for t in range(s + 1, n):
            pruned, new_to_old = cactus_prune_to_shortest(cg, s, t, precheck=False)
            old_to_new = {old: new for new, old in enumerate(new_to_old)}
            ok, path = solve_cactus_rvc_st(pruned, old_to_new[s], old_to_new[t],
                                           precheck=False)
            if not ok:
                return ConnectivityVerdict(False, (s, t), witness_paths)
            if witnesses:
                witness_paths[(s, t)] = [new_to_old[v] for v in path]
    return ConnectivityVerdict(True, None, witness_paths)


def solve_cactus_rvc(cg: ColoredGraph, witnesses: bool = True) -> ConnectivityVerdict:
    """Weak rainbow vertex connectivity of a cactus (all-pairs st-decider)."""
    if not is_cactus(cg.graph).member:
        raise ValueError("input is not a cactus")
    n = cg.graph.vertex_count
    if n == 0 or not is_connected(cg.graph):
        raise ValueError("graph not connected")
    witness_paths: dict | None = {} if witnesses else None
    for s in range(n):
        for t in range(s + 1, n):
            ok, path = solve_cactus_rvc_st(cg, s, t, precheck=False)
            if not ok:
                return ConnectivityVerdict(False, (s, t), witness_paths)
            if witnesses:
                witness_paths[(s, t)] = path
    return ConnectivityVerdict(True, None, witness_paths)


# ---------------------------------------------------------------------------
# block graphs


def solve_block_rvc(cg: ColoredGraph, witnesses: bool = True) -> ConnectivityVerdict:
    """Both rainbow and strong rainbow vertex connectivity of a block graph.

    In a block graph the shortest path between any pair is unique and its
    internal vertices are exactly the cut vertices every s-t path crosses,
    so the pair is connected iff those internal colors are pairwise
    distinct; the weak and strong verdicts coincide.
    """
    if not is_block_graph(cg.graph).member:
        raise ValueError("input is not a block graph")
    g = cg.graph
    n = g.vertex_count
    if n == 0 or not is_connected(g):
        raise ValueError("graph not connected")
    witness_paths: dict | None = {} if witnesses else None
    for s in range(n):
        dist = [INF] * n
        parent = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if dist[v] == INF:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
        for t in range(s + 1, n):
            path = [t]
            x = t
            while x != s:
                x = parent[x]
                path.append(x)
            path.reverse()
            internal = [cg.colors[v] for v in path[1:-1]]
            if len(internal) != len(set(internal)):
                return ConnectivityVerdict(False, (s, t), witness_paths)
            if witnesses:
                witness_paths[(s, t)] = path
    return ConnectivityVerdict(True, None, witness_paths)


# ---------------------------------------------------------------------------
# split graphs


def solve_split_srvc(cg: ColoredGraph, witnesses: bool = True) -> ConnectivityVerdict:
    """Strong rainbow vertex connectivity of a split graph.

    Split graphs have diameter at most 3: pairs at distance <= 2 are always
    connected; a distance-3 pair needs adjacent middle vertices of distinct
    colors. Distance above 3 signals a recognizer bug and raises.
    """
    if not is_split(cg.graph).member:
        raise ValueError("input is not a split graph")
    g = cg.graph
    n = g.vertex_count
    if n == 0 or not is_connected(g):
        raise ValueError("graph not connected")
    dist = [bfs_distances(g, s).dist for s in range(n)]
    witness_paths: dict | None = {} if witnesses else None
    for s in range(n):
        for t in range(s + 1, n):
            d = dist[s][t]
            if d > 3:
                raise ValueError(
                    f"split graph with d({s},{t}) = {d} > 3; recognizer bug")
            if d <= 2:
                if witnesses:
                    if d == 1:
                        witness_paths[(s, t)] = [s, t]
                    else:
                        mid = next(v for v in g.neighbors(s) if dist[t][v] == 1)
                        witness_paths[(s, t)] = [s, mid, t]
                continue
            found = None
            for u in g.neighbors(s):
                for w in g.neighbors(t):
                    if u != w and cg.colors[u] != cg.colors[w] and g.has_edge(u, w):
                        found = [s, u, w, t]
                        break
                if found:
                    break
            if found is None:
                return ConnectivityVerdict(False, (s, t), witness_paths)
            if witnesses:
                witness_paths[(s, t)] = found
    return ConnectivityVerdict(True, None, witness_paths)
