"""rvlab: rainbow vertex connectivity toolkit.

Deciders for the four rainbow connectivity variants, graph-class
recognizers, polynomial class-specific solvers, and generators for
satisfiability-reduction instances on restricted graph classes.
"""

from rvlab.graph import (
    ColoredGraph,
    DistanceTable,
    EdgeColoredGraph,
    Graph,
    INF,
    bfs_distances,
    count_shortest_paths,
    diameter,
    disjoint_union,
    subdivide_edge,
)

__version__ = "0.1.0"

__all__ = [
    "ColoredGraph",
    "DistanceTable",
    "EdgeColoredGraph",
    "Graph",
    "INF",
    "bfs_distances",
    "count_shortest_paths",
    "diameter",
    "disjoint_union",
    "subdivide_edge",
    "__version__",
]
