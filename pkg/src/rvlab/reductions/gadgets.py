"""Reusable gadget constructions shared by the hard-instance families.

The parametric ring gadget is an even cycle of length 8k+2 with four cross
chords per level and duplicated "blocking" colors placed so that any
traversal switching sides must repeat a color; 2k slot vertices stay
uncolored for the caller. The detour gadget is a chain of clique blocks
with the two ends sharing one color, which fixes vertex degrees without
shortening distances and is impassable for rainbow paths. The degree
increment glues cliques onto an adjacent degree-3 pair, raising both ends
and every new vertex to degree d+3.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from rvlab.graph import ColoredGraph, Graph
from rvlab.reductions.artifact import Construction


@dataclass
class GadgetSpec:
    """Validated parameters for a reusable gadget."""

    kind: str  # "parametric" | "dummy" | "tail" | "head" | "detour"
    k: int | None = None
    d: int | None = None
    length: int | None = None

    def __post_init__(self) -> None:
        if self.kind in ("parametric", "tail"):
            if self.k is None or self.k < 1:
                raise ValueError("parametric gadget needs k >= 1")
        elif self.kind == "detour":
            if self.d is None or self.d < 3:
                raise ValueError("detour gadget needs d >= 3")
            if self.length is None or self.length < 5 or self.length % 3 != 2:
                raise ValueError("detour length must be 2 + 3p for p >= 1")
        elif self.kind not in ("dummy", "head"):
            raise ValueError(f"unknown gadget kind {self.kind!r}")


@dataclass
class ParametricPorts:
    """Handles into an embedded parametric gadget."""

    vs: int
    vt: int
    side_a: dict[tuple[int, int], int]   # (level, 1..4) -> vertex
    side_b: dict[tuple[int, int], int]
    slots_a: list[int] = field(default_factory=list)  # uncolored v_{l,2}
    slots_b: list[int] = field(default_factory=list)  # uncolored v'_{l,2}


def add_parametric_gadget(c: Construction, k: int, prefix: str,
                          vs_role: str, vt_role: str) -> ParametricPorts:
    """Ring of length 8k+2 with level chords and blocking colors.

    Endpoints get fresh colors; per level the blocking pairs are
    (pos1, opp4), (pos3, opp1), (pos4, opp3); the two position-2 vertices of
    each level are left uncolored for the caller.
    """
    GadgetSpec("parametric", k=k)
    vs = c.fresh_vertex(vs_role)
    vt = c.fresh_vertex(vt_role)
    side_a: dict[tuple[int, int], int] = {}
    side_b: dict[tuple[int, int], int] = {}
    for level in range(1, k + 1):
        for q in range(1, 5):
            side_a[(level, q)] = c.add_vertex(f"{prefix}v{level}_{q}")
            side_b[(level, q)] = c.add_vertex(f"{prefix}vp{level}_{q}")
    ring_a = [side_a[(l, q)] for l in range(1, k + 1) for q in range(1, 5)]
    ring_b = [side_b[(l, q)] for l in range(1, k + 1) for q in range(1, 5)]
    for chain in (ring_a, ring_b):
        c.edge(vs, chain[0])
        for u, v in zip(chain, chain[1:]):
            c.edge(u, v)
        c.edge(chain[-1], vt)
    ports = ParametricPorts(vs, vt, side_a, side_b)
    for level in range(1, k + 1):
        a, b = side_a, side_b
        c.edge(a[(level, 1)], b[(level, 2)])
        c.edge(a[(level, 2)], b[(level, 1)])
        c.edge(a[(level, 3)], b[(level, 4)])
        c.edge(a[(level, 4)], b[(level, 3)])
        block1 = c.alloc_color()
        block2 = c.alloc_color()
        block3 = c.alloc_color()
        c.paint(a[(level, 1)], block1)
        c.paint(b[(level, 4)], block1)
        c.paint(a[(level, 3)], block2)
        c.paint(b[(level, 1)], block2)
        c.paint(a[(level, 4)], block3)
        c.paint(b[(level, 3)], block3)
        ports.slots_a.append(a[(level, 2)])
        ports.slots_b.append(b[(level, 2)])
    return ports


@dataclass
class ParametricGadget:
    """Standalone parametric gadget with its slots still uncolored."""

    graph: Graph
    coloring: dict[int, int]
    uncolored: list[int]
    roles: dict[str, int]

    def standard_colored(self) -> ColoredGraph:
        """Fill the slot vertices with fresh distinct colors."""
        colors = dict(self.coloring)
        next_color = max(colors.values()) + 1
        for v in self.uncolored:
            colors[v] = next_color
            next_color += 1
        return ColoredGraph(self.graph, [colors[v] for v in range(self.graph.vertex_count)])


def build_parametric_gadget(k: int) -> ParametricGadget:
    """Standalone ring gadget; exactly 2k vertices are left uncolored."""
    c = Construction()
    ports = add_parametric_gadget(c, k, prefix="", vs_role="vs", vt_role="vt")
    uncolored = ports.slots_a + ports.slots_b
    coloring = {v: col for v, col in enumerate(c.colors) if col != -1}
    return ParametricGadget(c.graph, coloring, uncolored, dict(c.roles))


def add_dummy_gadget(c: Construction, attach_to: int, prefix: str,
                     entry_color: int | None = None) -> list[int]:
    """Degree-filling dead end: a 5-ring plus two hubs, hung off one edge.

    All seven vertices end at degree 3 once attached. Returns [h1..h7].
    """
    h = [c.add_vertex(f"{prefix}h{q}") for q in range(1, 8)]
    ring = h[:5]
    for i in range(5):
        c.edge(ring[i], ring[(i + 1) % 5])
    c.edge(h[1], h[5])
    c.edge(h[2], h[6])
    c.edge(h[3], h[5])
    c.edge(h[4], h[6])
    c.edge(h[5], h[6])
    c.edge(attach_to, h[0])
    if entry_color is None:
        c.paint_fresh(h[0])
    else:
        c.paint(h[0], entry_color)
    for v in h[1:]:
        c.paint_fresh(v)
    return h


def _detour_blocks(c: Construction, d: int, length: int) -> tuple[int, int]:
    """Chain of (d+1)-vertex clique blocks; returns the two degree-(d-1) ends."""
    GadgetSpec("detour", d=d, length=length)
    block_count = (length + 1) // 3
    shared = c.alloc_color()
    end_a = end_b = None
    prev_exit = None
    for r in range(block_count):
        entry = c.add_vertex()
        exit_ = c.add_vertex()
        mids = [c.add_vertex() for _ in range(d - 1)]
        for i, u in enumerate(mids):
            c.paint_fresh(u)
            c.edge(entry, u)
            c.edge(exit_, u)
            for w in mids[i + 1:]:
                c.edge(u, w)
        if r == 0:
            end_a = entry
            c.paint(entry, shared)
        else:
            c.paint_fresh(entry)
            c.edge(prev_exit, entry)
        if r == block_count - 1:
            end_b = exit_
            c.paint(exit_, shared)
        else:
            c.paint_fresh(exit_)
        prev_exit = exit_
    return end_a, end_b


def add_detour_gadget(c: Construction, x: int, y: int, d: int, length: int,
                      role_a: str, role_b: str) -> tuple[int, int]:
    """Clique-block chain of diameter `length` joining x and y.

    End vertices (degree d-1 inside the gadget) share one new color, so no
    rainbow path can cross the gadget; everything else is fresh. Adds the
    edges (x, end_a) and (y, end_b) and returns (end_a, end_b).
    """
    end_a, end_b = _detour_blocks(c, d, length)
    c.set_role(role_a, end_a)
    c.set_role(role_b, end_b)
    c.edge(x, end_a)
    c.edge(y, end_b)
    return end_a, end_b


def build_detour_gadget(d: int, length: int) -> tuple[ColoredGraph, dict[str, int]]:
    """Standalone detour gadget; roles expose the two degree-(d-1) ends."""
    c = Construction()
    end_a, end_b = _detour_blocks(c, d, length)
    c.set_role("astar", end_a)
    c.set_role("bstar", end_b)
    colored = ColoredGraph(c.graph, list(c.colors))
    return colored, dict(c.roles)


@dataclass
class IncrementReport:
    hub_vertices: list[int]          # the clique glued onto (u, v)
    satellite_vertices: list[int]    # the near-clique hanging off each hub


def degree_increment(cg: ColoredGraph, u: int, v: int, d: int,
                     fresh_color=None) -> IncrementReport:
    """Raise adjacent degree-3 vertices u, v (and all new vertices) to d+3.

    {u, v} plus d hubs form a clique; each hub additionally carries a
    (d+4)-clique with one edge removed. New vertices get fresh colors from
    `fresh_color` (defaults to a counter above the current palette).
    """
    g = cg.graph
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    if g.degree(u) != 3 or g.degree(v) != 3:
        raise ValueError("degree increment requires two degree-3 endpoints")
    if d < 1:
        raise ValueError("d must be at least 1")
    if fresh_color is None:
        counter = iter(range(max(cg.colors, default=-1) + 1, 10 ** 9))
        fresh_color = lambda: next(counter)  # noqa: E731
    hubs = []
    satellites = []
    for _ in range(d):
        x = g.add_vertex()
        cg.colors.append(fresh_color())
        g.add_edge(u, x)
        g.add_edge(v, x)
        for other in hubs:
            g.add_edge(x, other)
        hubs.append(x)
    for x in hubs:
        ws = []
        for _ in range(d + 4):
            w = g.add_vertex()
            cg.colors.append(fresh_color())
            ws.append(w)
        for i, a in enumerate(ws):
            for b in ws[i + 1:]:
                if (a, b) != (ws[0], ws[1]):
                    g.add_edge(a, b)
        g.add_edge(x, ws[0])
        g.add_edge(x, ws[1])
        satellites.extend(ws)
    return IncrementReport(hubs, satellites)
