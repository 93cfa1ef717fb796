"""Tagged-edge combinatorics of the once-punctured polygon."""

from .geometry import (
    InvalidEdgeError,
    Position,
    TaggedEdge,
    ccw_neighbor,
    delta_len,
    edge_sort_key,
    elementary_moves,
    enumerate_tagged_edges,
    pos,
    pos_inv,
    tau,
    tau_inv,
    tau_power,
)
from .crossing import (
    CrossingTable,
    LiftChord,
    compatible,
    crossing_matrix,
    crossing_number,
    lift,
)
from .mesh import (
    MeshVertex,
    MeshWindow,
    Morphism,
    MorphismSpace,
    PathClass,
    build_window,
    compose,
    hom_dim_closed_form,
    hom_dim_cluster,
    hom_dim_mesh,
    hom_dim_mesh_by_rank,
    identity_morphism,
    morphism_space,
    move_morphism,
)
from .clusterops import ArTriangle, TheoremReport, ar_triangle, ext1_dim, verify_theorem2
from .triangulation import (
    ExchangeData,
    ExchangeError,
    QuiverPresentation,
    Triangulation,
    enumerate_triangulations,
    exchange_sides,
    fan_triangulation,
    flip,
    is_triangulation,
    maximal_noncrossing_sets,
    quiver_of_triangulation,
)
from .tilted import (
    CategoryQuiver,
    DimensionVector,
    ModuleCategoryQuiver,
    VanishingReport,
    ar_quiver_of_category,
    ar_quiver_of_tilted,
    dimension_vector,
    loewy_string,
    vanishing_paths_report,
)

__version__ = "0.1.0"
