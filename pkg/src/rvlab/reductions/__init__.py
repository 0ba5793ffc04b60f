from rvlab.reductions.artifact import Construction, ReductionArtifact
from rvlab.reductions.bipartite_planar import build_bipartite_planar
from rvlab.reductions.cubic import build_cubic
from rvlab.reductions.gadgets import (
    GadgetSpec,
    ParametricGadget,
    build_detour_gadget,
    build_parametric_gadget,
    degree_increment,
)
from rvlab.reductions.interval import build_interval, build_proper_interval
from rvlab.reductions.regular import build_k_regular
from rvlab.reductions.verify import (
    ReductionCertificate,
    ReductionCheckError,
    verify_reduction,
)

__all__ = [
    "Construction",
    "ReductionArtifact",
    "GadgetSpec",
    "ParametricGadget",
    "build_bipartite_planar",
    "build_cubic",
    "build_detour_gadget",
    "build_interval",
    "build_k_regular",
    "build_parametric_gadget",
    "build_proper_interval",
    "degree_increment",
    "ReductionCertificate",
    "ReductionCheckError",
    "verify_reduction",
]
