"""Interval and proper-interval hard instances.

Variable gadgets are 20-rings filled with a fixed chord ladder; the six
ladder colors appear twice each (mirrored), forcing any admissible
traversal to commit to the full positive or full negative side. Clause
gadgets reuse the even-ring-with-literal-chords shape plus a chord ladder
whose four (three, for two-literal clauses) paired colors block every
literal-free crossing. The proper-interval variant swaps three variable
chords, which makes the gadget claw-free and pins d(a_i, b_i) to 10.
"""

from __future__ import annotations

from rvlab.formulas import OccSatInstance
from rvlab.reductions.artifact import Construction, ReductionArtifact
from rvlab.reductions.bipartite_planar import _variable_palette, literal_vertex_color

# chord ladder of the 20-ring variable gadget, by ring position (1-based)
VARIABLE_CHORDS = [
    (2, 19), (2, 20), (3, 18), (3, 19), (3, 20), (4, 18), (4, 19),
    (5, 18), (6, 16), (6, 17), (6, 18), (7, 16), (8, 14), (8, 15),
    (8, 16), (9, 14), (10, 14), (10, 13), (10, 12),
]
# proper-interval modification: for 0 <= k <= 2 drop (6+2k, 18-2k), add (5+2k, 17-2k)
PROPER_DROPPED = [(6, 18), (8, 16), (10, 14)]
PROPER_ADDED = [(5, 17), (7, 15), (9, 13)]

# mirrored color pairs of the variable gadget, by ring position
VARIABLE_COLOR_PAIRS = [(2, 16), (3, 14), (4, 12), (20, 6), (19, 8), (18, 10)]
# positive side positions 5, 7, 9; negative side positions 17, 15, 13
POSITIVE_POSITIONS = (5, 7, 9)
NEGATIVE_POSITIONS = (17, 15, 13)


def _add_variable_gadget(c: Construction, i: int, palette, proper: bool):
    ring = {}
    pos_colors, neg_colors = palette[i]
    pair_colors = [c.alloc_color() for _ in range(6)]
    position_color = {}
    for (pa, pb), col in zip(VARIABLE_COLOR_PAIRS, pair_colors):
        position_color[pa] = col
        position_color[pb] = col
    for slot, col in zip(POSITIVE_POSITIONS, pos_colors):
        position_color[slot] = col
    for slot, col in zip(NEGATIVE_POSITIONS, neg_colors):
        position_color[slot] = col
    for pos in range(1, 21):
        if pos == 1:
            ring[pos] = c.fresh_vertex(f"a_{i}")
        elif pos == 11:
            ring[pos] = c.fresh_vertex(f"b_{i}")
        else:
            ring[pos] = c.add_vertex(f"X{i}.v{pos}", position_color[pos])
    for pos in range(1, 21):
        c.edge(ring[pos], ring[pos % 20 + 1])
    chords = list(VARIABLE_CHORDS)
    if proper:
        chords = [ch for ch in chords if ch not in PROPER_DROPPED] + PROPER_ADDED
    for pa, pb in chords:
        c.edge(ring[pa], ring[pb])
    return ring[1], ring[11]


def _add_clause_gadget(c: Construction, j: int, clause, inst, palette,
                       clause_color, clause_exit_color):
    size = len(clause)
    pair_colors = [c.alloc_color() for _ in range(size + 1)]
    p = c.fresh_vertex(f"p_{j}")
    r = [c.add_vertex(f"r_{j}_{l + 1}") for l in range(size)]
    x = c.add_vertex(f"x_{j}")
    y = c.add_vertex(f"y_{j}", clause_color[j])
    q = c.fresh_vertex(f"qp_{j}")
    rp = [c.add_vertex(f"rp_{j}_{l + 1}") for l in range(size)]
    pp = c.add_vertex(f"pp_{j}")
    hp = c.add_vertex(f"hp_{j}", clause_exit_color[j])
    ring = [p] + r + [x, y, q] + list(reversed(rp)) + [pp, hp]
    for u_, v_ in zip(ring, ring[1:] + ring[:1]):
        c.edge(u_, v_)
    w = []
    for l in range(size):
        lit = clause[l]
        ordinal = inst.literal_ordinals[(j - 1, l)]
        wv = c.add_vertex(f"w_{j}_{l + 1}",
                          literal_vertex_color(c, palette, lit, ordinal))
        c.edge(r[l], wv)
        c.edge(wv, rp[l])
        w.append(wv)
    # paired colors down the ladder: (r1, p'), (r2, r'1), ..., (last, r'last)
    ladder_left = r + [x]
    ladder_right = [pp] + rp
    for col, left, right in zip(pair_colors, ladder_left, ladder_right):
        c.paint(left, col)
        c.paint(right, col)
    # chord ladder: each left rail vertex reaches two steps down the right rail
    c.edge(r[0], hp)
    c.edge(r[0], pp)
    for idx in range(1, size + 1):
        left = ladder_left[idx]
        c.edge(left, ladder_right[idx - 1])
        c.edge(left, w[idx - 1])
        c.edge(left, ladder_right[idx])
    c.edge(y, rp[size - 1])
    c.edge(pp, w[0])
    for idx in range(1, size):
        c.edge(rp[idx - 1], w[idx])
    return p, q


def _build(inst: OccSatInstance, proper: bool) -> ReductionArtifact:
    f = inst.formula
    n = f.variable_count
    m = len(f.clauses)
    if n < 1 or m < 1:
        raise ValueError("need at least one variable and one clause")
    c = Construction()
    palette = _variable_palette(c, n)
    clause_color = {j: c.alloc_color() for j in range(1, m + 1)}
    clause_exit_color = {j: c.alloc_color() for j in range(1, m + 1)}
    a = {}
    b = {}
    for i in range(1, n + 1):
        a[i], b[i] = _add_variable_gadget(c, i, palette, proper)
    p = {}
    q = {}
    for j, clause in enumerate(f.clauses, start=1):
        p[j], q[j] = _add_clause_gadget(c, j, clause, inst, palette,
                                        clause_color, clause_exit_color)
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
    t_prime = c.add_vertex("tp", clause_exit_color[m])
    c.edge(q[m], t_prime)
    t = c.fresh_vertex("t")
    c.edge(t_prime, t)
    s_prev = c.fresh_vertex("s_0")
    for j in range(1, m + 1):
        s_j = c.add_vertex(f"s_{j}", clause_color[j])
        c.edge(s_prev, s_j)
        s_prev = s_j
    c.edge(s_prev, a[1])
    return c.finish("proper-interval" if proper else "interval")


def build_interval(inst: OccSatInstance) -> ReductionArtifact:
    return _build(inst, proper=False)


def build_proper_interval(inst: OccSatInstance) -> ReductionArtifact:
    return _build(inst, proper=True)
