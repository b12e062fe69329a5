"""Distance spectral radius of k-uniform hypergraphs."""

from .enumeration import (
    CanonicalForm,
    OrbitPartition,
    are_isomorphic,
    automorphism_orbits,
    canonical_form,
    generate_hypertrees,
)
from .families import (
    FamilySpec,
    attach_pendant_path,
    broom,
    double_broom,
    f_graph,
    g_es,
    hyperstar,
    loose_path,
)
from .hypergraph import (
    ComponentPartition,
    Hypergraph,
    build,
    components,
    degree,
    delete_edge,
    delete_vertex,
    has_cycle,
    induced,
    is_connected,
    is_hypertree,
)
from .spectral import (
    DistanceMatrix,
    SpectralResult,
    diameter,
    distance_matrix,
    distances_from,
    eigenequation_check,
    rayleigh,
    sigma,
    spectral_radius,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm",
    "ComponentPartition",
    "DistanceMatrix",
    "FamilySpec",
    "Hypergraph",
    "OrbitPartition",
    "SpectralResult",
    "are_isomorphic",
    "attach_pendant_path",
    "automorphism_orbits",
    "broom",
    "build",
    "canonical_form",
    "components",
    "degree",
    "delete_edge",
    "delete_vertex",
    "diameter",
    "distance_matrix",
    "distances_from",
    "double_broom",
    "eigenequation_check",
    "f_graph",
    "g_es",
    "generate_hypertrees",
    "has_cycle",
    "hyperstar",
    "induced",
    "is_connected",
    "is_hypertree",
    "loose_path",
    "rayleigh",
    "sigma",
    "spectral_radius",
]
