"""Shared builder state for reduction constructions.

A Construction accumulates a graph, a partial coloring (-1 means not yet
colored), a role map from structural names to vertex ids, and the ledger of
vertices that received a globally unique color. finish() checks totality,
role injectivity, and the uniqueness promise, then freezes everything into
a ReductionArtifact.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from rvlab.graph import ColoredGraph, Graph

FAMILIES = ("bip-planar", "interval", "proper-interval", "cubic", "regular")

UNCOLORED = -1


@dataclass
class ReductionArtifact:
    colored_graph: ColoredGraph
    roles: dict[str, int]
    fresh_vertices: set[int]
    family: str
    k: int | None = None

    @property
    def graph(self) -> Graph:
        return self.colored_graph.graph

    def role_vertex(self, name: str) -> int:
        return self.roles[name]


class Construction:
    def __init__(self) -> None:
        self.graph = Graph()
        self.colors: list[int] = []
        self.roles: dict[str, int] = {}
        self.fresh_vertices: set[int] = set()
        self._next_color = 0

    # -- vertices and edges

    def add_vertex(self, role: str | None = None, color: int | None = None) -> int:
        v = self.graph.add_vertex()
        self.colors.append(UNCOLORED if color is None else color)
        if role is not None:
            self.set_role(role, v)
        return v

    def edge(self, u: int, v: int) -> None:
        self.graph.add_edge(u, v)

    def set_role(self, name: str, v: int) -> None:
        if name in self.roles:
            raise ValueError(f"duplicate role {name!r}")
        self.roles[name] = v

    # -- colors

    def alloc_color(self) -> int:
        c = self._next_color
        self._next_color += 1
        return c

    def paint(self, v: int, color: int) -> None:
        if self.colors[v] != UNCOLORED:
            raise ValueError(f"vertex {v} already colored")
        self.colors[v] = color

    def paint_fresh(self, v: int) -> int:
        """Give v a brand-new color and record the uniqueness promise."""
        c = self.alloc_color()
        self.paint(v, c)
        self.fresh_vertices.add(v)
        return c

    def fresh_vertex(self, role: str | None = None) -> int:
        v = self.add_vertex(role)
        self.paint_fresh(v)
        return v

    # -- finalization

    def finish(self, family: str, k: int | None = None) -> ReductionArtifact:
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}")
        missing = [v for v, c in enumerate(self.colors) if c == UNCOLORED]
        if missing:
            raise AssertionError(f"vertices left uncolored: {missing[:10]}")
        multiplicity: dict[int, int] = {}
        for c in self.colors:
            multiplicity[c] = multiplicity.get(c, 0) + 1
        for v in self.fresh_vertices:
            if multiplicity[self.colors[v]] != 1:
                raise AssertionError(
                    f"vertex {v} promised a unique color but multiplicity is "
                    f"{multiplicity[self.colors[v]]}")
        self.graph.validate()
        return ReductionArtifact(
            ColoredGraph(self.graph, list(self.colors)),
            dict(self.roles),
            set(self.fresh_vertices),
            family,
            k,
        )
