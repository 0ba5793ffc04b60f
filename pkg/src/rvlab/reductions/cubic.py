"""Triangle-free cubic hard instances.

A variable gadget is two vertex-disjoint lanes of length 13 between its
endpoints; one lane carries the positive arc colors, the other the
negative ones. Lane interiors reach degree 3 through 6-vertex bipartite
widgets whose four ports share one color, so no rainbow path can pass
through a widget: the only end-to-end traversals are the two full lanes,
and every interior pair still has a rainbow shortest path. The tail gadget
is the same shape with d = 4m+1 and one shared slot color per clause on
both lanes, playing the start-path role.

A clause gadget is an even ring with one subdivided rung per literal plus
two guard vertices, one colored like the clause's tail slot and one like
its exit connector. Paths between unrelated vertices can cross the gadget
on guard routes, but the decisive start-to-end traversal has already
consumed both guard colors and must use a literal rung; each rung offers a
one-literal shortest route (d(p, q') = 9 for three literals, 7 for two).
Dummy gadgets close every remaining degree-2 vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from rvlab.formulas import OccSatInstance
from rvlab.reductions.artifact import Construction, ReductionArtifact
from rvlab.reductions.bipartite_planar import _variable_palette, literal_vertex_color
from rvlab.reductions.gadgets import add_dummy_gadget


@dataclass
class TridentInfo:
    """Handles into one clause gadget, kept for the regular-degree rebuild."""

    p: int
    q: int
    size: int
    pairs: list[tuple[int, int]] = field(default_factory=list)
    exit_neighbors: tuple[int, int] = (0, 0)  # the two in-gadget neighbors of q


@dataclass
class LaneGadgetInfo:
    """Handles into a two-lane gadget (variable or tail)."""

    entry: int
    exit: int
    pairs: list[tuple[int, int]] = field(default_factory=list)
    exit_neighbors: tuple[int, int] = (0, 0)  # lane vertices adjacent to exit


@dataclass
class CubicCore:
    construction: Construction
    variables: list[LaneGadgetInfo]
    clauses: list[TridentInfo]
    head: TridentInfo | None
    tail: LaneGadgetInfo
    dummy_pairs: list[tuple[int, int]]
    connector: tuple[int, int] | None  # (q'_m, head entry) edge, regular only


def _add_port_widget(c: Construction, anchors: list[int]) -> list[tuple[int, int]]:
    """Degree-filling widget over four lane vertices.

    Eight vertices, bipartite and triangle-free: four degree-2 ports wired
    to the anchors and four degree-3 interiors. All ports share one color,
    so any path entering and leaving the widget repeats it and no traversal
    can bypass lane vertices. Interiors are fresh, and the increment pairs
    match every port with a fresh interior, so the clique clusters grown on
    them in the regular family stay mutually reachable.
    """
    port_color = c.alloc_color()
    a1 = c.add_vertex(color=port_color)
    a2 = c.add_vertex(color=port_color)
    b1 = c.add_vertex(color=port_color)
    b2 = c.add_vertex(color=port_color)
    a3, a4, b3, b4 = (c.add_vertex() for _ in range(4))
    for v in (a3, a4, b3, b4):
        c.paint_fresh(v)
    for x, y in ((a1, b3), (a1, b4), (a2, b3), (a2, b4),
                 (b1, a3), (b1, a4), (b2, a3), (b2, a4),
                 (a3, b3), (a4, b4)):
        c.edge(x, y)
    for port, anchor in zip((a1, b1, a2, b2), anchors):
        c.edge(port, anchor)
    return [(a1, b3), (b1, a3), (a2, b4), (b2, a4)]


def _add_path_tail(c: Construction, m: int,
                   clause_color: dict[int, int]) -> LaneGadgetInfo:
    """Start-path gadget: one path of 4m vertices consuming every clause
    color, widget-filled to degree 3.

    The free end plays the decisive start terminal; widgets cannot be
    crossed, so every traversal out of the tail passes all m slot colors.
    """
    vs = c.fresh_vertex("vs")
    path = [vs]
    for i in range(1, 4 * m):
        level, offset = divmod(i, 4)
        if offset == 2:
            v = c.add_vertex(f"tail.s{level + 1}", clause_color[level + 1])
        else:
            v = c.fresh_vertex(f"tail.t{i}")
        path.append(v)
    for u, v in zip(path, path[1:]):
        c.edge(u, v)
    pairs = [(path[i], path[i + 1]) for i in range(0, 4 * m, 2)]
    for base in range(0, 4 * m, 4):
        pairs.extend(_add_port_widget(c, path[base:base + 4]))
    return LaneGadgetInfo(vs, path[-1], pairs, (path[-2], path[-1]))


def _add_lane_gadget(c: Construction, prefix: str, entry_role: str,
                     exit_role: str, levels: int,
                     slot_colors: tuple[list[int], list[int]],
                     slot_roles: tuple[list[str], list[str]] | None = None
                     ) -> LaneGadgetInfo:
    """Two disjoint lanes of 4*levels interior vertices each (d = 4*levels+1).

    slot_colors gives per lane the colors of its `levels` slot vertices,
    placed at the second position of each quadruple. Everything else is
    fresh; widgets fill interior degrees.
    """
    lane_len = 4 * levels
    entry = c.fresh_vertex(entry_role)
    exit_ = c.fresh_vertex(exit_role)
    pairs: list[tuple[int, int]] = []
    last_per_lane = []
    for lane_index, tag in enumerate(("P", "N")):
        colors = slot_colors[lane_index]
        roles = slot_roles[lane_index] if slot_roles else None
        lane = []
        for pos in range(1, lane_len + 1):
            level, offset = divmod(pos - 1, 4)
            if offset == 1:
                role = roles[level] if roles else f"{prefix}{tag}{pos}"
                v = c.add_vertex(role, colors[level])
            else:
                v = c.fresh_vertex(f"{prefix}{tag}{pos}")
            lane.append(v)
        c.edge(entry, lane[0])
        for u, v in zip(lane, lane[1:]):
            c.edge(u, v)
        c.edge(lane[-1], exit_)
        last_per_lane.append(lane[-1])
        for i in range(0, lane_len, 2):
            pairs.append((lane[i], lane[i + 1]))
        for base in range(0, lane_len, 4):
            pairs.extend(_add_port_widget(c, lane[base:base + 4]))
    return LaneGadgetInfo(entry, exit_, pairs, tuple(last_per_lane))


# clause-gadget wiring found by search over ring layouts: for each literal a
# rung (A_i, w, B_{i+2}) gives a one-literal shortest route; the ring-side
# guards carry the clause color and the connector color, so the decisive
# traversal cannot bypass the literal vertices, while every other pair can.
_CLAUSE_LAYOUTS = {
    3: dict(
        side=8,
        rungs=[(1, "B3"), (2, "B4"), (4, "B6")],
        chords=[("A5", "B5"), ("A7", "B8"), ("W3", "A6"), ("B2", "A3"),
                ("B7", "A8")],
        hub=("B1", "W1", "W2"),
        ring_guard="A5", entry_guard="B2",
        pairs=[("A1", "A2"), ("A3", "A4"), ("A5", "A6"), ("A7", "A8"),
               ("B1", "B2"), ("B3", "W1"), ("B4", "B5"), ("B6", "W3"),
               ("B7", "B8"), ("W2", "HUB")],
        exit_neighbors=("A8", "B8"),
    ),
    2: dict(
        side=6,
        rungs=[(1, "B3"), (2, "B4")],
        chords=[("B1", "W1"), ("W2", "A4"), ("B5", "A6"), ("B2", "A3"),
                ("A5", "B6")],
        hub=None,
        ring_guard="A3", entry_guard="B2",
        pairs=[("A1", "A2"), ("A3", "A4"), ("A5", "A6"), ("B1", "B2"),
               ("B3", "W1"), ("B4", "W2"), ("B5", "B6")],
        exit_neighbors=("A6", "B6"),
    ),
}


def _add_clause_gadget(c: Construction, prefix: str, w_colors: list[int],
                       p_role: str, q_role: str, w_roles: list[str] | None,
                       ring_guard_color: int, entry_guard_color: int,
                       entry_color: int | None = None) -> TridentInfo:
    """Ring clause gadget with one subdivided rung per literal.

    Both ring sides have length side+1, so d(p, q) is 9 for three literals
    and 7 for two. The rung midpoints are the literal vertices; one ring
    vertex carries the clause color and another the connector color, and
    with those plus the literal vertices removed, p and q fall apart.
    """
    size = len(w_colors)
    layout = _CLAUSE_LAYOUTS[size]
    side = layout["side"]
    p = c.add_vertex(p_role)
    if entry_color is None:
        c.paint_fresh(p)
    else:
        c.paint(p, entry_color)
    q = c.fresh_vertex(q_role)
    vertex: dict[str, int] = {}
    guard_tokens = {layout["ring_guard"]: ring_guard_color,
                    layout["entry_guard"]: entry_guard_color}
    for tag in ("A", "B"):
        for i in range(1, side + 1):
            token = f"{tag}{i}"
            if token in guard_tokens:
                vertex[token] = c.add_vertex(f"{prefix}{token}",
                                             guard_tokens[token])
            else:
                vertex[token] = c.fresh_vertex(f"{prefix}{token}")
        c.edge(p, vertex[f"{tag}1"])
        for i in range(1, side):
            c.edge(vertex[f"{tag}{i}"], vertex[f"{tag}{i + 1}"])
        c.edge(vertex[f"{tag}{side}"], q)
    for idx, (a_pos, b_token) in enumerate(layout["rungs"]):
        role = w_roles[idx] if w_roles else f"{prefix}w{idx + 1}"
        w = c.add_vertex(role, w_colors[idx])
        vertex[f"W{idx + 1}"] = w
        c.edge(vertex[f"A{a_pos}"], w)
        c.edge(w, vertex[b_token])
    if layout["hub"]:
        hub = c.fresh_vertex(f"{prefix}hub")
        vertex["HUB"] = hub
        for token in layout["hub"]:
            c.edge(hub, vertex[token])
    for x, y in layout["chords"]:
        c.edge(vertex[x], vertex[y])
    pairs = [(vertex[x], vertex[y]) for x, y in layout["pairs"]]
    exit_neighbors = tuple(vertex[t] for t in layout["exit_neighbors"])
    return TridentInfo(p, q, size, pairs, exit_neighbors)


def assemble_cubic_core(inst: OccSatInstance, head_style: str) -> CubicCore:
    """Shared assembly for the cubic and regular families.

    head_style "dummy" closes the construction with a dummy gadget at the
    last clause exit and another at the tail's free end (the cubic family);
    "clause" instead appends a freshly-colored clause-shaped gadget whose
    entry keeps the last connector color, leaving the tail free end and the
    appended gadget's exit at degree 2 for the caller to finish.
    """
    f = inst.formula
    n = f.variable_count
    m = len(f.clauses)
    if n < 1 or m < 1:
        raise ValueError("need at least one variable and one clause")
    c = Construction()
    palette = _variable_palette(c, n)
    clause_color = {j: c.alloc_color() for j in range(1, m + 1)}
    clause_exit_color = {j: c.alloc_color() for j in range(1, m + 1)}

    variables = []
    for i in range(1, n + 1):
        pos, neg = palette[i]
        variables.append(_add_lane_gadget(
            c, f"X{i}.", f"a_{i}", f"b_{i}", 3, (pos, neg)))

    clauses = []
    dummy_pairs: list[tuple[int, int]] = []
    for j, clause in enumerate(f.clauses, start=1):
        w_colors = [
            literal_vertex_color(c, palette, clause[l],
                                 inst.literal_ordinals[(j - 1, l)])
            for l in range(len(clause))
        ]
        info = _add_clause_gadget(
            c, f"C{j}.", w_colors, f"p_{j}", f"qp_{j}",
            [f"w_{j}_{l + 1}" for l in range(len(clause))],
            ring_guard_color=clause_color[j],
            entry_guard_color=clause_exit_color[j])
        clauses.append(info)

    for i in range(n - 1):
        c.edge(variables[i].exit, variables[i + 1].entry)
    c.edge(variables[-1].exit, clauses[0].p)
    for j in range(1, m):
        fj = c.add_vertex(f"f_{j}", clause_exit_color[j])
        c.edge(clauses[j - 1].q, fj)
        c.edge(fj, clauses[j].p)
        h = add_dummy_gadget(c, fj, f"F{j}.")
        dummy_pairs.extend([(fj, h[0]), (h[1], h[2]), (h[3], h[4]), (h[5], h[6])])

    tail = _add_path_tail(c, m, clause_color)
    c.edge(tail.exit, variables[0].entry)

    head = None
    connector = None
    if head_style == "dummy":
        h = add_dummy_gadget(c, clauses[-1].q, "head.",
                             entry_color=clause_exit_color[m])
        dummy_pairs.extend([(clauses[-1].q, h[0]), (h[1], h[2]),
                            (h[3], h[4]), (h[5], h[6])])
        hc = add_dummy_gadget(c, tail.entry, "tailend.")
        dummy_pairs.extend([(tail.entry, hc[0]), (hc[1], hc[2]),
                            (hc[3], hc[4]), (hc[5], hc[6])])
    elif head_style == "clause":
        head_w = [c.alloc_color() for _ in range(3)]
        head = _add_clause_gadget(
            c, "H.", head_w, "p_head", "qp_head", None,
            ring_guard_color=c.alloc_color(),
            entry_guard_color=c.alloc_color(),
            entry_color=clause_exit_color[m])
        for name in ("H.w1", "H.w2", "H.w3",
                     f"H.{_CLAUSE_LAYOUTS[3]['ring_guard']}",
                     f"H.{_CLAUSE_LAYOUTS[3]['entry_guard']}"):
            c.fresh_vertices.add(c.roles[name])
        c.edge(clauses[-1].q, head.p)
        connector = (clauses[-1].q, head.p)
    else:
        raise ValueError(f"unknown head style {head_style!r}")

    return CubicCore(c, variables, clauses, head, tail, dummy_pairs, connector)


def build_cubic(inst: OccSatInstance) -> ReductionArtifact:
    core = assemble_cubic_core(inst, head_style="dummy")
    return core.construction.finish("cubic")
