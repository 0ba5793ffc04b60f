"""End-to-end certification of a reduction instance.

Builds the requested family, checks the structural class claims and the
fresh-color ledger, computes satisfiability with the truth-table oracle and
the connectivity verdict with an exhaustive or exact engine, and asserts
the equivalence both ways. Any mismatch raises ReductionCheckError naming
the violated property.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from rvlab.formulas import OccSatInstance, sat_brute_force
from rvlab.graph import bfs_distances
from rvlab.recognizers import (
    clique_number,
    is_bipartite,
    is_interval,
    is_k_regular,
    is_planar,
    is_proper_interval,
    is_triangle_free,
    max_degree,
)
from rvlab.reductions.artifact import ReductionArtifact
from rvlab.reductions.bipartite_planar import build_bipartite_planar
from rvlab.reductions.cubic import build_cubic
from rvlab.reductions.interval import build_interval, build_proper_interval
from rvlab.reductions.regular import build_k_regular
from rvlab.solvers import (
    brute_force_rainbow_check,
    is_rainbow_vertex_connected,
    is_strongly_rainbow_vertex_connected,
)


class ReductionCheckError(AssertionError):
    """A certified property of a built instance failed."""


#: connectivity variants each construction provably decides. The
#: proper-interval family binds only shortest paths (longer paths can dodge
#: one arc color), and the regular family is certified for the weak variant.
FAMILY_VARIANTS = {
    "bip-planar": ("rvc", "srvc"),
    "interval": ("rvc",),
    "proper-interval": ("srvc",),
    "cubic": ("rvc", "srvc"),
    "regular": ("rvc",),
}

BUILDERS = {
    "bip-planar": lambda inst, k: build_bipartite_planar(inst),
    "interval": lambda inst, k: build_interval(inst),
    "proper-interval": lambda inst, k: build_proper_interval(inst),
    "cubic": lambda inst, k: build_cubic(inst),
    "regular": build_k_regular,
}


@dataclass
class ReductionCertificate:
    family: str
    k: int | None
    variable_count: int
    clause_count: int
    vertex_count: int
    edge_count: int
    satisfiable: bool
    rainbow_vertex_connected: bool | None
    strongly_rainbow_vertex_connected: bool | None
    engine: str
    class_checks: dict[str, bool] = field(default_factory=dict)
    fresh_ledger_ok: bool = True
    equivalent: bool = True

    def to_dict(self) -> dict:
        return asdict(self)


def _class_certification(artifact: ReductionArtifact) -> dict[str, bool]:
    g = artifact.graph
    family = artifact.family
    checks: dict[str, bool] = {}
    if family == "bip-planar":
        checks["bipartite"] = is_bipartite(g).member
        checks["planar"] = is_planar(g).member
        checks["max_degree_3"] = max_degree(g) <= 3
    elif family == "interval":
        checks["interval"] = is_interval(g).member
        checks["clique_number_4"] = clique_number(g) == 4
    elif family == "proper-interval":
        checks["proper_interval"] = is_proper_interval(g).member
    elif family == "cubic":
        checks["cubic"] = is_k_regular(g, 3).member
        checks["triangle_free"] = is_triangle_free(g).member
    elif family == "regular":
        checks[f"{artifact.k}-regular"] = is_k_regular(g, artifact.k).member
    return checks


def _fresh_ledger_ok(artifact: ReductionArtifact) -> bool:
    counts: dict[int, int] = {}
    for c in artifact.colored_graph.colors:
        counts[c] = counts.get(c, 0) + 1
    return all(counts[artifact.colored_graph.colors[v]] == 1
               for v in artifact.fresh_vertices)


def _distance_pins(artifact: ReductionArtifact, clause_sizes: list[int]) -> None:
    roles = artifact.roles
    g = artifact.graph
    family = artifact.family
    if family in ("cubic", "regular"):
        i = 1
        while f"a_{i}" in roles:
            d = bfs_distances(g, roles[f"a_{i}"]).dist[roles[f"b_{i}"]]
            if d != 13:
                raise ReductionCheckError(
                    f"variable-gadget span broken: d(a_{i},b_{i}) = {d} != 13")
            i += 1
    if family == "cubic":
        for j, size in enumerate(clause_sizes, start=1):
            d = bfs_distances(g, roles[f"p_{j}"]).dist[roles[f"qp_{j}"]]
            expected = 9 if size == 3 else 7
            if d != expected:
                raise ReductionCheckError(
                    f"clause-gadget span broken: d(p_{j},q'_{j}) = {d} != {expected}")
    if family == "proper-interval":
        i = 1
        while f"a_{i}" in roles:
            d = bfs_distances(g, roles[f"a_{i}"]).dist[roles[f"b_{i}"]]
            if d != 10:
                raise ReductionCheckError(
                    f"variable-gadget span broken: d(a_{i},b_{i}) = {d} != 10")
            i += 1


def verify_reduction(inst: OccSatInstance, family: str, k: int | None = None,
                     engine: str = "auto",
                     brute_cap: int = 220) -> ReductionCertificate:
    """Build, certify, and test the satisfiability-connectivity equivalence.

    engine "auto" uses exhaustive path enumeration when the graph fits under
    brute_cap and the exact subset search otherwise; "brute" and "generic"
    force one of the two.
    """
    if family not in BUILDERS:
        raise ValueError(f"unknown family {family!r}")
    if family == "regular" and (k is None or k < 4):
        raise ValueError("regular family needs k >= 4")
    artifact = BUILDERS[family](inst, k)
    n = artifact.graph.vertex_count

    class_checks = _class_certification(artifact)
    if not all(class_checks.values()):
        bad = [name for name, ok in class_checks.items() if not ok]
        raise ReductionCheckError(
            f"gadget class certification failed for {family}: {bad}")
    ledger_ok = _fresh_ledger_ok(artifact)
    if not ledger_ok:
        raise ReductionCheckError("fresh-color ledger violated")
    _distance_pins(artifact, [len(cl) for cl in inst.formula.clauses])

    satisfiable = sat_brute_force(inst.formula) is not None
    if engine == "auto":
        engine = "brute" if n <= brute_cap else "generic"
    cg = artifact.colored_graph
    variants = FAMILY_VARIANTS[family]
    results: dict[str, bool] = {}
    for variant in variants:
        if engine == "brute":
            results[variant] = brute_force_rainbow_check(
                cg, variant, cap=max(n, brute_cap)).connected
        elif engine == "generic":
            decide = (is_rainbow_vertex_connected if variant == "rvc"
                      else is_strongly_rainbow_vertex_connected)
            results[variant] = decide(cg, witnesses=False).connected
        else:
            raise ValueError(f"unknown engine {engine!r}")

    cert = ReductionCertificate(
        family=family, k=k,
        variable_count=inst.formula.variable_count,
        clause_count=len(inst.formula.clauses),
        vertex_count=n, edge_count=artifact.graph.edge_count,
        satisfiable=satisfiable,
        rainbow_vertex_connected=results.get("rvc"),
        strongly_rainbow_vertex_connected=results.get("srvc"),
        engine=engine,
        class_checks=class_checks,
        fresh_ledger_ok=ledger_ok,
    )
    for variant, connected in results.items():
        if connected != satisfiable:
            cert.equivalent = False
            raise ReductionCheckError(
                "satisfiability-connectivity equivalence violated "
                f"({variant}): sat={satisfiable}, connected={connected}")
    return cert
