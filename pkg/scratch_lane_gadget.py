"""Validate the two-lane + ported-widget variable gadget design:
cubic, triangle-free, d(a,b)=13, only side-pure rainbow a->b traversals,
and strong/weak rainbow health inside a corridor context.
"""
from rvlab.graph import ColoredGraph, Graph, bfs_distances
from rvlab.recognizers import is_k_regular, is_triangle_free
from rvlab.solvers import (
    is_rainbow_vertex_connected,
    is_strongly_rainbow_vertex_connected,
)

def build_lane_gadget(slot_positions=(2, 6, 10), lane_len=12):
    g = Graph()
    colors = []
    nxt = [0]

    def fresh():
        nxt[0] += 1
        return nxt[0] - 1

    def vert(color=None):
        v = g.add_vertex()
        colors.append(fresh() if color is None else color)
        return v

    a = vert()
    b = vert()
    lanes = []
    slot_ids = {"P": [], "N": []}
    for lane_name in ("P", "N"):
        lane = [vert() for _ in range(lane_len)]
        for i, v in enumerate(lane, start=1):
            if i in slot_positions:
                slot_ids[lane_name].append(v)
        g.add_edge(a, lane[0])
        for u, v in zip(lane, lane[1:]):
            g.add_edge(u, v)
        g.add_edge(lane[-1], b)
        lanes.append(lane)
    # widgets over consecutive quadruples of each lane
    for lane in lanes:
        for base in range(0, lane_len, 4):
            u1, u2, u3, u4 = lane[base:base + 4]
            port_color = fresh()
            a1 = vert(port_color)
            b1 = vert(port_color)
            a2 = vert(port_color)
            b2 = vert(port_color)
            a3 = vert()
            b3 = vert()
            # K3,3 on {a1,a2,a3} x {b1,b2,b3} minus (a1,b1) and (a2,b2)
            for x, y in ((a1, b2), (a1, b3), (a2, b1), (a2, b3),
                         (a3, b1), (a3, b2), (a3, b3)):
                g.add_edge(x, y)
            g.add_edge(a1, u1)
            g.add_edge(b1, u2)
            g.add_edge(a2, u3)
            g.add_edge(b2, u4)
    return g, colors, a, b, lanes, slot_ids


g, colors, a, b, lanes, slots = build_lane_gadget()
# emulate corridor continuation with pendants
for anchor in (a, b):
    p = g.add_vertex()
    colors.append(max(colors) + 1)
    g.add_edge(anchor, p)

print("n =", g.vertex_count, "m =", g.edge_count)
deg_bad = [v for v in range(g.vertex_count) if g.degree(v) != 3]
print("non-degree-3 (expect the two pendants):", deg_bad)
print("triangle-free:", is_triangle_free(g).member)
print("d(a,b) =", bfs_distances(g, a).dist[b])

cg = ColoredGraph(g, colors)
print("weak all-pairs:", is_rainbow_vertex_connected(cg, witnesses=False).connected)
strong = is_strongly_rainbow_vertex_connected(cg, witnesses=False)
print("strong all-pairs:", strong.connected, strong.failing_pair)

# side purity: every rainbow a->b path stays on one lane (slots included)
lane_sets = [set(lanes[0]), set(lanes[1])]
import sys
sys.setrecursionlimit(10000)
ok = [True]
classes = set()
path = [a]
on_path = {a}
used = set()

def dfs(u):
    if not ok[0]:
        return
    if u == b:
        in_p = [v for v in path[1:-1] if v in lane_sets[0]]
        in_n = [v for v in path[1:-1] if v in lane_sets[1]]
        if in_p and in_n:
            ok[0] = False
            print("MIXED PATH:", path)
        else:
            lane = lanes[0] if in_p else lanes[1]
            if set(lane) <= set(path):
                classes.add("P-full" if in_p else "N-full")
            else:
                ok[0] = False
                print("PARTIAL LANE PATH:", path)
        return
    for w in g.neighbors(u):
        if w in on_path:
            continue
        if w != b and colors[w] in used:
            continue
        path.append(w)
        on_path.add(w)
        if w != b:
            used.add(colors[w])
        dfs(w)
        if w != b:
            used.discard(colors[w])
        on_path.discard(w)
        path.pop()

dfs(a)
print("side purity:", ok[0], "classes:", sorted(classes))
