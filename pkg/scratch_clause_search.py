"""Search a cubic triangle-free clause gadget:

ring p, A1..A_L, q', B_L..B1 (both sides length L+1, d(p,q') = L+1 = 9 or 7),
literal vertices w subdividing rungs (A_i, B_{i+2}), an A-side guard (clause
color) and a B-side guard (connector color), remaining degrees closed by
chords and at most one hub vertex. Requirements:

  SEP: {A-guard, B-guard, w...} separates p from q'.
  LIT: for each rung, deleting guards and the other w's leaves d(p,q') = L+1.
  CUBIC/TF: all internals degree 3, no triangles.
  HEALTH: with context chains (one p-side vertex sharing the A-guard color,
  the connector vertex sharing the B-guard color), weak and strong rainbow
  connectivity hold for every pair.
"""
import random
import sys
from itertools import combinations

from rvlab.graph import ColoredGraph, Graph, bfs_distances, INF
from rvlab.recognizers import is_triangle_free
from rvlab.solvers import (
    is_rainbow_vertex_connected,
    is_strongly_rainbow_vertex_connected,
)


def try_candidate(side_len, rung_is, a_guard, b_guard, pairing, hub):
    """Build and check one candidate; returns description dict or None."""
    L = side_len  # internals per side; d(p,q') = L + 1
    g = Graph()
    p = g.add_vertex()
    q = g.add_vertex()
    A = {i: g.add_vertex() for i in range(1, L + 1)}
    B = {i: g.add_vertex() for i in range(1, L + 1)}
    for chain in (A, B):
        g.add_edge(p, chain[1])
        for i in range(1, L):
            g.add_edge(chain[i], chain[i + 1])
        g.add_edge(chain[L], q)
    w = {}
    for i in rung_is:
        w[i] = g.add_vertex()
        g.add_edge(A[i], w[i])
        g.add_edge(w[i], B[i + 2])
    name = {}
    for i in range(1, L + 1):
        name[A[i]] = f"A{i}"
        name[B[i]] = f"B{i}"
    for i in rung_is:
        name[w[i]] = f"w@{i}"
    name[p] = "p"
    name[q] = "q"

    def vid(token):
        if token.startswith("A"):
            return A[int(token[1:])]
        if token.startswith("B"):
            return B[int(token[1:])]
        if token.startswith("w"):
            return w[int(token[2:])]
        raise ValueError(token)

    try:
        for x, y in pairing:
            g.add_edge(vid(x), vid(y))
        hub_v = None
        if hub:
            hub_v = g.add_vertex()
            name[hub_v] = "hub"
            for tok in hub:
                g.add_edge(hub_v, vid(tok))
    except ValueError:
        return None
    # context: p side gets a 3-chain with a hot A-guard color; q side gets
    # the connector (hot B-guard color) plus a 2-chain
    gp = [g.add_vertex() for _ in range(3)]
    g.add_edge(p, gp[0])
    g.add_edge(gp[0], gp[1])
    g.add_edge(gp[1], gp[2])
    fq = g.add_vertex()
    hq = [g.add_vertex() for _ in range(2)]
    g.add_edge(q, fq)
    g.add_edge(fq, hq[0])
    g.add_edge(hq[0], hq[1])

    # degree check (context ends may be degree 1)
    internals = list(A.values()) + list(B.values()) + list(w.values())
    if hub_v is not None:
        internals.append(hub_v)
    if any(g.degree(v) != 3 for v in internals):
        return None
    if g.degree(p) != 3 or g.degree(q) != 3:
        return None
    if not is_triangle_free(g).member:
        return None

    dist_p = bfs_distances(g, p).dist
    if dist_p[q] != L + 1:
        return None

    # SEP: guards + w's separate p from q
    blocked = {vid(a_guard), vid(b_guard)} | set(w.values())
    seen = {p}
    stack = [p]
    while stack:
        u = stack.pop()
        for v in g.neighbors(u):
            if v not in blocked and v not in seen:
                seen.add(v)
                stack.append(v)
    if q in seen:
        return None

    # LIT: per-literal shortest route of length L+1 avoiding guards and
    # the other w's
    for i in rung_is:
        banned = {vid(a_guard), vid(b_guard)} | {w[j] for j in rung_is if j != i}
        dist = _dist_avoiding(g, p, banned)
        if dist[q] != L + 1:
            return None

    # HEALTH: colors
    colors = [0] * g.vertex_count
    nxt = [0]

    def fresh():
        nxt[0] += 1
        return nxt[0] - 1

    for v in range(g.vertex_count):
        colors[v] = fresh()
    cj = fresh()
    cpj = fresh()
    colors[vid(a_guard)] = cj
    colors[gp[1]] = cj
    colors[vid(b_guard)] = cpj
    colors[fq] = cpj
    cg = ColoredGraph(g, colors)
    if not is_rainbow_vertex_connected(cg, witnesses=False).connected:
        return None
    strong = is_strongly_rainbow_vertex_connected(cg, witnesses=False)
    if not strong.connected:
        return None
    # the k-regular rebuild needs a perfect matching of internals over edges
    match = _perfect_matching(g, internals)
    if match is None:
        return None
    return dict(side_len=L, rungs=list(rung_is), a_guard=a_guard,
                b_guard=b_guard, pairing=pairing, hub=hub,
                matching=[(name[a], name[b]) for a, b in match])


def _perfect_matching(g, internals):
    todo = sorted(internals)
    inset = set(internals)

    def solve(remaining):
        if not remaining:
            return []
        x = remaining[0]
        rest = remaining[1:]
        for y in g.neighbors(x):
            if y in inset and y in rest:
                sub = solve([z for z in rest if z != y])
                if sub is not None:
                    return [(x, y)] + sub
        return None

    return solve(todo)


def _dist_avoiding(g, s, banned):
    from collections import deque

    dist = [INF] * g.vertex_count
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if v in banned:
                continue
            if dist[u] + 1 < dist[v]:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def level_of(token, side_len):
    if token.startswith("A") or token.startswith("B"):
        return int(token[1:])
    return int(token[2:]) + 1  # w@i sits at level i+1


def search(side_len, rung_count, seed=0, tries=2_000_000):
    rng = random.Random(seed)
    L = side_len
    rung_options = [c for c in combinations(range(1, L - 1), rung_count)]
    found = []
    for t in range(tries):
        rung_is = rng.choice(rung_options)
        runged_a = {f"A{i}" for i in rung_is}
        runged_b = {f"B{i + 2}" for i in rung_is}
        free = ([f"A{i}" for i in range(1, L + 1) if f"A{i}" not in runged_a]
                + [f"B{i}" for i in range(1, L + 1) if f"B{i}" not in runged_b])
        a_guard_opts = [tok for tok in free if tok.startswith("A")
                        and int(tok[1:]) > max(rung_is)]
        b_guard_opts = [tok for tok in free if tok.startswith("B")
                        and int(tok[1:]) < min(rung_is) + 2]
        if not a_guard_opts or not b_guard_opts:
            continue
        a_guard = rng.choice(a_guard_opts)
        b_guard = rng.choice(b_guard_opts)
        todo = free + [f"w@{i}" for i in rung_is]
        rng.shuffle(todo)
        use_hub = len(todo) % 2 == 1
        hub = None
        if use_hub:
            cands = [c for c in combinations(sorted(todo), 3)
                     if max(level_of(x, L) for x in c)
                     - min(level_of(x, L) for x in c) <= 2]
            if not cands:
                continue
            hub = list(rng.choice(cands))
            todo = [tok for tok in todo if tok not in hub]
        rng.shuffle(todo)
        pairing = []
        ok = True
        while todo:
            x = todo.pop()
            partners = [y for y in todo
                        if abs(level_of(x, L) - level_of(y, L)) <= 1]
            if not partners:
                ok = False
                break
            y = rng.choice(partners)
            todo.remove(y)
            pairing.append((x, y))
        if not ok:
            continue
        res = try_candidate(L, rung_is, a_guard, b_guard, pairing, hub)
        if res:
            print("WINNER", res, flush=True)
            found.append(res)
            if len(found) >= 3:
                return found
    return found


if __name__ == "__main__":
    L = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    count = int(sys.argv[2]) if len(sys.argv) > 2 else 3
    tries = int(sys.argv[3]) if len(sys.argv) > 3 else 200000
    got = search(L, count, tries=tries)
    print("found:", len(got))
