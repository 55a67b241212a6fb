"""theta-Gallai-Edmonds decomposition, D-graph operators and Tutte sets."""

from .classify import (
    c_theta,
    classify_vertices,
    decomposition,
    is_theta_critical,
    vertex_class,
    vertex_kind,
)
from .models import (
    DGraphBundle,
    NiceMatchingResult,
    SubsetCertificate,
    ThetaDecomposition,
    VertexClass,
    VertexKind,
)
from .operators import (
    c3b_multiplicity,
    d_graph,
    d_graph_bundle,
    d_graph_closed_form,
    d_r_closed_form_on_S,
    d_r_graph,
    s_c6_multiplicity,
    s_graph,
    same_gallai_edmonds,
)
from .tutte_sets import (
    embed_check,
    heilmann_lieb_check,
    is_extreme,
    is_nice,
    is_tutte,
    maximal_extreme_sets_bruteforce,
    maximal_nice_sets,
    maximal_tutte_sets_bruteforce,
    nice_matching,
    path_criterion,
)

__all__ = [
    "DGraphBundle",
    "NiceMatchingResult",
    "SubsetCertificate",
    "ThetaDecomposition",
    "VertexClass",
    "VertexKind",
    "c3b_multiplicity",
    "c_theta",
    "classify_vertices",
    "d_graph",
    "d_graph_bundle",
    "d_graph_closed_form",
    "d_r_closed_form_on_S",
    "d_r_graph",
    "decomposition",
    "embed_check",
    "heilmann_lieb_check",
    "is_extreme",
    "is_nice",
    "is_theta_critical",
    "is_tutte",
    "maximal_extreme_sets_bruteforce",
    "maximal_nice_sets",
    "maximal_tutte_sets_bruteforce",
    "nice_matching",
    "path_criterion",
    "s_c6_multiplicity",
    "s_graph",
    "same_gallai_edmonds",
    "vertex_class",
]
