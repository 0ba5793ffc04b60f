"""k-regular hard instances for k >= 4, grown out of the cubic assembly.

Every cubic-degree vertex is raised to degree k by clique increments on an
adjacent-pair cover; gadget terminals instead receive k-3 parallel detour
gadgets whose length exactly matches the terminal distance, so no distance
shrinks and no rainbow path can cross a detour. The dummy head is replaced
by a freshly colored clause-shaped gadget whose entry keeps the last
connector color; three-literal clause exits are lengthened by one triangle
so the detour length 2+3p fits, and the final detour closes the two
remaining deficient vertices (the tail's free end and the appended
gadget's exit), with dummy subdivisions on the last connector fixing the
length congruence.
"""

from __future__ import annotations

from rvlab.formulas import OccSatInstance
from rvlab.graph import ColoredGraph, bfs_distances
from rvlab.reductions.artifact import Construction, ReductionArtifact
from rvlab.reductions.cubic import TridentInfo, assemble_cubic_core
from rvlab.reductions.gadgets import (
    add_detour_gadget,
    add_dummy_gadget,
    degree_increment,
)

VARIABLE_SPAN = 13  # d(a_i, b_i), preserved by construction


def _extend_exit_by_triangle(c: Construction, info: TridentInfo,
                             prefix: str) -> tuple[int, int]:
    """Insert two fresh vertices forming a triangle with the gadget exit.

    Rewires the exit's two in-gadget edges through the new pair, which
    lengthens every entry-to-exit route by exactly one and breaks
    triangle-freeness (only the regular family does this).
    """
    left, right = info.exit_neighbors
    q = info.q
    c.graph.remove_edge(left, q)
    c.graph.remove_edge(right, q)
    x = c.fresh_vertex(f"{prefix}ext_a")
    y = c.fresh_vertex(f"{prefix}ext_b")
    c.edge(left, x)
    c.edge(right, y)
    c.edge(x, q)
    c.edge(y, q)
    c.edge(x, y)
    info.pairs.append((x, y))
    info.exit_neighbors = (x, y)
    return x, y


def build_k_regular(inst: OccSatInstance, k: int) -> ReductionArtifact:
    if k < 4:
        raise ValueError("regular construction needs k >= 4")
    core = assemble_cubic_core(inst, head_style="clause")
    c = core.construction
    head = core.head
    assert head is not None and core.connector is not None

    # lengthen 3-literal clause exits (and the head) so the detour length
    # d(p, q') - 2 has the required 2 + 3p form
    for j, info in enumerate(core.clauses, start=1):
        if info.size == 3:
            _extend_exit_by_triangle(c, info, f"C{j}.")
    _extend_exit_by_triangle(c, head, "H.")

    # fix d(vs, head exit) = 1 (mod 3) by subdividing the last connector
    # with dummy-backed vertices, +1 per insertion
    q_last, head_entry = core.connector
    dummy_pairs = list(core.dummy_pairs)
    inserted = 0
    while True:
        span = bfs_distances(c.graph, core.tail.entry).dist[head.q]
        if span % 3 == 1:
            break
        if inserted >= 3:
            raise AssertionError("connector congruence did not converge")
        c.graph.remove_edge(q_last, head_entry)
        filler = c.fresh_vertex(f"pad{inserted}.f")
        c.edge(q_last, filler)
        c.edge(filler, head_entry)
        h = add_dummy_gadget(c, filler, f"pad{inserted}.")
        dummy_pairs.extend([(filler, h[0]), (h[1], h[2]), (h[3], h[4]),
                            (h[5], h[6])])
        q_last = filler  # keep subdividing the segment nearest the head
        inserted += 1

    # parallel detours on every terminal pair: k-3 copies each
    detour_jobs = []
    for i, var in enumerate(core.variables, start=1):
        for r in range(k - 3):
            names = ((f"astar_{i}", f"bstar_{i}") if r == 0
                     else (f"X{i}.D{r}.astar", f"X{i}.D{r}.bstar"))
            detour_jobs.append((var.entry, var.exit, VARIABLE_SPAN - 2, names))
    for j, info in enumerate(core.clauses, start=1):
        span = 10 if info.size == 3 else 7
        for r in range(k - 3):
            names = (f"C{j}.D{r}.astar", f"C{j}.D{r}.bstar")
            detour_jobs.append((info.p, info.q, span - 2, names))
    for r in range(k - 3):
        detour_jobs.append((head.p, head.q, 8,
                            (f"H.D{r}.astar", f"H.D{r}.bstar")))
    final_span = bfs_distances(c.graph, core.tail.entry).dist[head.q]
    detour_jobs.append((core.tail.entry, head.q, int(final_span) - 2,
                        ("final.astar", "final.bstar")))
    for x, y, length, (role_a, role_b) in detour_jobs:
        add_detour_gadget(c, x, y, k, length, role_a, role_b)

    # raise every cubic-degree vertex to k through clique increments
    all_pairs = list(core.tail.pairs) + dummy_pairs
    for var in core.variables:
        all_pairs.extend(var.pairs)
    for info in core.clauses:
        all_pairs.extend(info.pairs)
    all_pairs.extend(head.pairs)
    view = ColoredGraph(c.graph, c.colors)
    for u, v in all_pairs:
        report = degree_increment(view, u, v, k - 3, fresh_color=c.alloc_color)
        for w in report.hub_vertices + report.satellite_vertices:
            c.fresh_vertices.add(w)

    return c.finish("regular", k=k)
