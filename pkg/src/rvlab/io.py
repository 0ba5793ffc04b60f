"""Colored-graph text format.

One graph per file:

    rvgraph <n> <m> <k> <vertex|edge>
    v <id> <color>          (vertex-colored files)
    v <id>                  (edge-colored files)
    e <u> <v>               (vertex-colored files)
    e <u> <v> <color>       (edge-colored files)
    % role <name> <id>
    # comment

Writing is canonical (vertices ascending, edges in canonical order, roles
sorted by name), so write -> read -> write round-trips bit-exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from rvlab.graph import ColoredGraph, EdgeColoredGraph, Graph, edge_key


class GraphFormatError(ValueError):
    """Malformed rvgraph text."""


@dataclass
class GraphFile:
    """Parsed rvgraph file: exactly one of the two colorings is set."""

    vertex_colored: ColoredGraph | None = None
    edge_colored: EdgeColoredGraph | None = None
    roles: dict[str, int] = field(default_factory=dict)

    @property
    def graph(self) -> Graph:
        owner = self.vertex_colored or self.edge_colored
        assert owner is not None
        return owner.graph

    @property
    def kind(self) -> str:
        return "vertex" if self.vertex_colored is not None else "edge"


def dumps(colored: ColoredGraph | EdgeColoredGraph, roles: dict[str, int] | None = None) -> str:
    g = colored.graph
    lines = []
    if isinstance(colored, ColoredGraph):
        k = colored.color_count
        lines.append(f"rvgraph {g.vertex_count} {g.edge_count} {k} vertex")
        for v in range(g.vertex_count):
            lines.append(f"v {v} {colored.colors[v]}")
        for u, v in g.edges():
            lines.append(f"e {u} {v}")
    elif isinstance(colored, EdgeColoredGraph):
        k = colored.color_count
        lines.append(f"rvgraph {g.vertex_count} {g.edge_count} {k} edge")
        for v in range(g.vertex_count):
            lines.append(f"v {v}")
        for u, v in g.edges():
            lines.append(f"e {u} {v} {colored.edge_colors[(u, v)]}")
    else:
        raise TypeError(f"cannot serialize {type(colored).__name__}")
    for name in sorted(roles or {}):
        if any(ch.isspace() for ch in name):
            raise GraphFormatError(f"role name {name!r} contains whitespace")
        lines.append(f"% role {name} {roles[name]}")
    return "\n".join(lines) + "\n"


def loads(text: str) -> GraphFile:
    header = None
    vertex_lines: list[tuple[int, int | None]] = []
    edge_lines: list[tuple[int, int, int | None]] = []
    roles: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "rvgraph":
            if header is not None:
                raise GraphFormatError(f"line {lineno}: duplicate header")
            if len(parts) != 5 or parts[4] not in ("vertex", "edge"):
                raise GraphFormatError(f"line {lineno}: bad header {line!r}")
            header = (int(parts[1]), int(parts[2]), int(parts[3]), parts[4])
        elif parts[0] == "v":
            if header is None:
                raise GraphFormatError(f"line {lineno}: vertex before header")
            if header[3] == "vertex":
                if len(parts) != 3:
                    raise GraphFormatError(f"line {lineno}: expected 'v <id> <color>'")
                vertex_lines.append((int(parts[1]), int(parts[2])))
            else:
                if len(parts) != 2:
                    raise GraphFormatError(f"line {lineno}: expected 'v <id>'")
                vertex_lines.append((int(parts[1]), None))
        elif parts[0] == "e":
            if header is None:
                raise GraphFormatError(f"line {lineno}: edge before header")
            if header[3] == "vertex":
                if len(parts) != 3:
                    raise GraphFormatError(f"line {lineno}: expected 'e <u> <v>'")
                edge_lines.append((int(parts[1]), int(parts[2]), None))
            else:
                if len(parts) != 4:
                    raise GraphFormatError(f"line {lineno}: expected 'e <u> <v> <color>'")
                edge_lines.append((int(parts[1]), int(parts[2]), int(parts[3])))
        elif parts[0] == "%":
            if len(parts) != 4 or parts[1] != "role":
                raise GraphFormatError(f"line {lineno}: expected '% role <name> <id>'")
            name = parts[2]
            if name in roles:
                raise GraphFormatError(f"line {lineno}: duplicate role {name!r}")
            roles[name] = int(parts[3])
        else:
            raise GraphFormatError(f"line {lineno}: unrecognized line {line!r}")
    if header is None:
        raise GraphFormatError("missing rvgraph header")
    n, m, _, kind = header
    if sorted(v for v, _ in vertex_lines) != list(range(n)):
        raise GraphFormatError(f"expected one v-line per vertex 0..{n - 1}")
    g = Graph(n)
    for u, v, _ in edge_lines:
        try:
            g.add_edge(u, v)
        except ValueError as exc:
            raise GraphFormatError(str(exc)) from exc
    if g.edge_count != m:
        raise GraphFormatError(f"header claims {m} edges, file has {g.edge_count}")
    for name, v in roles.items():
        if not 0 <= v < n:
            raise GraphFormatError(f"role {name!r} points at missing vertex {v}")
    if kind == "vertex":
        colors = [0] * n
        for v, c in vertex_lines:
            assert c is not None
            colors[v] = c
        return GraphFile(vertex_colored=ColoredGraph(g, colors), roles=roles)
    edge_colors = {}
    for u, v, c in edge_lines:
        assert c is not None
        edge_colors[edge_key(u, v)] = c
    return GraphFile(edge_colored=EdgeColoredGraph(g, edge_colors), roles=roles)


def write_rvgraph(path, colored, roles=None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(colored, roles))


def read_rvgraph(path) -> GraphFile:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())
