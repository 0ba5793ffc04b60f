"""Search for a per-level blocking-pair matching of the ring gadget that
(a) forbids side-crossing rainbow end-to-end paths and
(b) keeps the gadget (plus pendant continuations) strongly rainbow connected.
"""
import itertools
import sys

from rvlab.graph import ColoredGraph, Graph
from rvlab.solvers import (
    is_rainbow_vertex_connected,
    is_strongly_rainbow_vertex_connected,
)

K = 3
POSITIONS = ["A1", "A3", "A4", "B1", "B3", "B4"]  # A2/B2 are caller slots


def build(k, matching, slot_colors="distinct"):
    """T_k ring + chords; colors per `matching` applied at every level."""
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
        g.add_edge(A[(l, 1)], B[(l, 2)])
        g.add_edge(A[(l, 2)], B[(l, 1)])
        g.add_edge(A[(l, 3)], B[(l, 4)])
        g.add_edge(A[(l, 4)], B[(l, 3)])
    colors = [0] * g.vertex_count
    next_color = 0

    def fresh():
        nonlocal next_color
        next_color += 1
        return next_color - 1

    colors[vs] = fresh()
    colors[vt] = fresh()
    side = {"A": A, "B": B}
    for l in range(1, k + 1):
        for pa, pb in matching:
            c = fresh()
            for token in (pa, pb):
                s, q = token[0], int(token[1])
                colors[side[s][(l, q)]] = c
        for smap in (A, B):
            colors[smap[(l, 2)]] = fresh()
    return g, colors, vs, vt, A, B


def crossing_free(k, matching):
    g, colors, vs, vt, A, B = build(k, matching)
    cg = ColoredGraph(g, colors)
    a_set = {v for v in A.values()}
    b_set = {v for v in B.values()}
    # exhaustive rainbow path enumeration vs -> vt
    sys.setrecursionlimit(10000)
    found_sides = []
    path = [vs]
    on_path = {vs}
    used = set()
    ok = [True]

    def dfs(u):
        if not ok[0]:
            return
        if u == vt:
            touched_a = any(v in a_set for v in path[1:-1])
            touched_b = any(v in b_set for v in path[1:-1])
            if touched_a and touched_b:
                ok[0] = False
            else:
                found_sides.append("A" if touched_a else "B")
            return
        for w in cg.graph.neighbors(u):
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

    dfs(vs)
    return ok[0] and "A" in found_sides and "B" in found_sides


def srvc_healthy(k, matching):
    g, colors, vs, vt, A, B = build(k, matching)
    # pendant continuations emulate the assembled corridor
    for anchor in (vs, vt):
        p = g.add_vertex()
        colors.append(max(colors) + 1)
        g.add_edge(anchor, p)
    cg = ColoredGraph(g, colors)
    strong = is_strongly_rainbow_vertex_connected(cg, witnesses=False)
    weak = is_rainbow_vertex_connected(cg, witnesses=False)
    return strong.connected and weak.connected


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


winners = []
for matching in matchings(POSITIONS):
    if crossing_free(3, matching) and srvc_healthy(3, matching):
        if all(crossing_free(kk, matching) and srvc_healthy(kk, matching)
               for kk in (1, 2, 4)):
            winners.append(matching)
            print("WINNER:", matching, flush=True)
print("total winners:", len(winners))
