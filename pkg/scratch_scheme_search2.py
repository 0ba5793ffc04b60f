"""Wider search: chord wiring variants x blocking matchings, uniform per level."""
import itertools
import sys

from rvlab.graph import ColoredGraph, Graph
from rvlab.solvers import (
    is_rainbow_vertex_connected,
    is_strongly_rainbow_vertex_connected,
)

POSITIONS = ["A1", "A3", "A4", "B1", "B3", "B4"]

# candidate per-level chord sets (pairs of (A-pos, B-pos)); must keep every
# internal vertex at exactly one chord and |posA - posB| <= 1
CHORD_SETS = {
    "swap12_swap34": [(1, 2), (2, 1), (3, 4), (4, 3)],
    "swap12_vert34": [(1, 2), (2, 1), (3, 3), (4, 4)],
    "vert12_swap34": [(1, 1), (2, 2), (3, 4), (4, 3)],
    "vert_all": [(1, 1), (2, 2), (3, 3), (4, 4)],
    "swap23_vert14": [(1, 1), (2, 3), (3, 2), (4, 4)],

}



def build(k, chords, matching, extra_pendants=True):
    g = Graph()
    vs = g.add_vertex()
    vt = g.add_vertex()
    A = {}
    B = {}
    for l in range(1, k + 1):
        for q in range(1, 5):
            A[(l, q)] = g.add_vertex()
            B[(l, q)] = g.add_vertex()
    chain_a = [A[(l, q)] for l in range(1, k + 1) for q in range(1, 5)]
    chain_b = [B[(l, q)] for l in range(1, k + 1) for q in range(1, 5)]
    for chain in (chain_a, chain_b):
        g.add_edge(vs, chain[0])
        for u, v in zip(chain, chain[1:]):
            g.add_edge(u, v)
        g.add_edge(chain[-1], vt)
    for l in range(1, k + 1):
        for pa, pb in chords:
            if l == 1 and pa == 1 and pb == 1:
                return None  # triangle with vs
            if l == k and pa == 4 and pb == 4:
                return None  # triangle with vt
            g.add_edge(A[(l, pa)], B[(l, pb)])
    colors = [0] * g.vertex_count
    nxt = [0]

    def fresh():
        nxt[0] += 1
        return nxt[0] - 1

    colors[vs] = fresh()
    colors[vt] = fresh()
    side = {"A": A, "B": B}
    for l in range(1, k + 1):
        for pa, pb in matching:
            c = fresh()
            for token in (pa, pb):
                s, q = token[0], int(token[1])
                colors[side[s][(l, q)]] = c
        colors[A[(l, 2)]] = fresh()
        colors[B[(l, 2)]] = fresh()
    if extra_pendants:
        for anchor in (vs, vt):
            p = g.add_vertex()
            colors.append(fresh())
            g.add_edge(anchor, p)
    return g, colors, vs, vt, A, B


def crossing_free(k, chords, matching):
    built = build(k, chords, matching, extra_pendants=False)
    if built is None:
        return False
    g, colors, vs, vt, A, B = built
    a_set = set(A.values())
    cg = ColoredGraph(g, colors)
    ok = [True]
    both = [False, False]
    path = [vs]
    on_path = {vs}
    used = set()

    def dfs(u):
        if not ok[0]:
            return
        if u == vt:
            ta = any(v in a_set for v in path[1:-1])
            tb = any(v not in a_set for v in path[1:-1])
            if ta and tb:
                ok[0] = False
            elif ta:
                both[0] = True
            else:
                both[1] = True
            return
        for w in g.neighbors(u):
            if w in on_path:
                continue
            if w != vt and colors[w] in used:
                continue
            path.append(w)
            on_path.add(w)
            if w != vt:
                used.add(colors[w])
            dfs(w)
            if w != vt:
                used.discard(colors[w])
            on_path.discard(w)
            path.pop()

    sys.setrecursionlimit(10000)
    dfs(vs)
    return ok[0] and both[0] and both[1]


def healthy(k, chords, matching):
    built = build(k, chords, matching, extra_pendants=True)
    if built is None:
        return False
    g, colors, *_ = built
    cg = ColoredGraph(g, colors)
    return (is_strongly_rainbow_vertex_connected(cg, witnesses=False).connected
            and is_rainbow_vertex_connected(cg, witnesses=False).connected)


def matchings(items):
    if not items:
        yield []
        return
    first = items[0]
    for i in range(1, len(items)):
        pair = (first, items[i])
        rest = items[1:i] + items[i + 1:]
        for sub in matchings(rest):
            yield [pair] + sub


for chord_name, chords in CHORD_SETS.items():
    for matching in matchings(POSITIONS):
        if all(crossing_free(k, chords, matching) for k in (1, 2, 3)) and \
           all(healthy(k, chords, matching) for k in (1, 2, 3, 4)):
            print("WINNER:", chord_name, matching, flush=True)
print("done")
