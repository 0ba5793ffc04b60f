"""Bipartite planar max-degree-3 hard instances.

Each variable becomes an 8-ring whose two arcs carry the positive and
negative arc colors; each clause becomes a 12-ring (10-ring for two-literal
clauses) with one subdivided chord per literal. Satisfiability of the
formula is equivalent to (strong) rainbow vertex connectivity of the
output; the decisive pair is the free end of the tail path and the final
pendant vertex.
"""

from __future__ import annotations

from rvlab.formulas import OccSatInstance
from rvlab.reductions.artifact import Construction, ReductionArtifact


def literal_vertex_color(c: Construction, palette, lit: int, ordinal: int) -> int:
    """Color for a literal vertex: the opposite arc's color of that variable.

    A positive literal gets the negative-arc color of its occurrence
    ordinal and vice versa, so using the vertex on a path conflicts exactly
    with the arc that falsifies the literal.
    """
    positive_colors, negative_colors = palette[abs(lit)]
    return negative_colors[ordinal - 1] if lit > 0 else positive_colors[ordinal - 1]


def _variable_palette(c: Construction, n: int):
    """Per variable: three positive-arc colors and three negative-arc colors."""
    return {
        i: ([c.alloc_color() for _ in range(3)], [c.alloc_color() for _ in range(3)])
        for i in range(1, n + 1)
    }


def build_bipartite_planar(inst: OccSatInstance) -> ReductionArtifact:
    f = inst.formula
    n = f.variable_count
    m = len(f.clauses)
    if n < 1 or m < 1:
        raise ValueError("need at least one variable and one clause")
    c = Construction()
    palette = _variable_palette(c, n)
    clause_color = {j: c.alloc_color() for j in range(1, m + 1)}
    clause_exit_color = {j: c.alloc_color() for j in range(1, m + 1)}

    # variable gadgets: 8-rings a-u-v-w-b-wbar-vbar-ubar
    a = {}
    b = {}
    for i in range(1, n + 1):
        pos, neg = palette[i]
        a[i] = c.fresh_vertex(f"a_{i}")
        u = c.add_vertex(f"u_{i}", pos[0])
        v = c.add_vertex(f"v_{i}", pos[1])
        w = c.add_vertex(f"w_{i}", pos[2])
        b[i] = c.fresh_vertex(f"b_{i}")
        wbar = c.add_vertex(f"wbar_{i}", neg[2])
        vbar = c.add_vertex(f"vbar_{i}", neg[1])
        ubar = c.add_vertex(f"ubar_{i}", neg[0])
        ring = [a[i], u, v, w, b[i], wbar, vbar, ubar]
        for x, y in zip(ring, ring[1:] + ring[:1]):
            c.edge(x, y)

    # clause gadgets: even rings with one subdivided chord per literal
    p = {}
    q = {}
    for j, clause in enumerate(f.clauses, start=1):
        size = len(clause)
        p[j] = c.fresh_vertex(f"p_{j}")
        r = [c.fresh_vertex(f"r_{j}_{l}") for l in range(1, size + 1)]
        x = c.fresh_vertex(f"x_{j}")
        y = c.add_vertex(f"y_{j}", clause_color[j])
        q[j] = c.fresh_vertex(f"qp_{j}")
        rp = [c.fresh_vertex(f"rp_{j}_{l}") for l in range(1, size + 1)]
        pp = c.fresh_vertex(f"pp_{j}")
        hp = c.add_vertex(f"hp_{j}", clause_exit_color[j])
        ring = [p[j]] + r + [x, y, q[j]] + list(reversed(rp)) + [pp, hp]
        for u_, v_ in zip(ring, ring[1:] + ring[:1]):
            c.edge(u_, v_)
        for l in range(1, size + 1):
            lit = clause[l - 1]
            ordinal = inst.literal_ordinals[(j - 1, l - 1)]
            w_vertex = c.add_vertex(
                f"w_{j}_{l}", literal_vertex_color(c, palette, lit, ordinal))
            c.edge(r[l - 1], w_vertex)
            c.edge(w_vertex, rp[l - 1])

    # connectors between consecutive variable gadgets and into the clauses
    for i in range(1, n):
        d = c.fresh_vertex(f"d_{i}")
        c.edge(b[i], d)
        c.edge(d, a[i + 1])
    d = c.fresh_vertex(f"d_{n}")
    c.edge(b[n], d)
    c.edge(d, p[1])
    for j in range(1, m):
        fj = c.add_vertex(f"f_{j}", clause_exit_color[j])
        c.edge(q[j], fj)
        c.edge(fj, p[j + 1])

    # pendant tail after the last clause
    t_prime = c.add_vertex("tp", clause_exit_color[m])
    c.edge(q[m], t_prime)
    t = c.fresh_vertex("t")
    c.edge(t_prime, t)

    # start path s_0 .. s_m feeding the first variable gadget
    s_prev = c.fresh_vertex("s_0")
    for j in range(1, m + 1):
        s_j = c.add_vertex(f"s_{j}", clause_color[j])
        c.edge(s_prev, s_j)
        s_prev = s_j
    c.edge(s_prev, a[1])

    return c.finish("bip-planar")
