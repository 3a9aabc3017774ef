"""Simplicial complexes, their incidence/intersection graphs, discrete
homotopy, exact topological invariants, and capacity certificates."""

from .capacity import (
    CapacityCertificate,
    ConnectionLaplacian,
    UmbrellaRep,
    capacity_certificate,
    capacity_ring_check,
    connection_laplacian,
    independence_number,
    lovasz_umbrella,
    phi_capacity_1d,
    shannon_lower,
    signature_check,
    spectrum_product_check,
    strong_power,
    unimodularity_check,
)
from .complexes import (
    Complex,
    FVector,
    barycentric_refine,
    euler_characteristic,
    f_vector,
    from_facets,
    product_cells,
    validate,
)
from .graphs import (
    Graph,
    canonical_code,
    complement,
    disjoint_union,
    graph_from_edges,
    induced,
    is_isomorphic,
    phi,
    phi_product,
    psi,
    psi_product,
    strong_product,
    unit_sphere,
    whitney_complex,
    zykov_join,
)
from .homotopy import (
    Contract,
    EdgeRefine,
    EdgeRemove,
    Expand,
    HomotopyTrace,
    apply_move,
    barycentric_trace,
    homotopy_reduce,
    is_contractible,
    is_sphere,
    move_is_legal,
    product_extension_trace,
    psi_to_phi_trace,
    refinement_graph,
    trace_from_moves,
)
from .invariants import (
    BoundaryOperators,
    InvariantReport,
    betti,
    boundary_operators,
    curvature,
    gauss_bonnet_check,
    genus,
    graph_betti,
    graph_euler,
    is_platonic_sphere,
    poincare_hopf,
)
from .reconstruct import (
    DegreeProfile,
    PermutationGroup,
    automorphism_group,
    complex_automorphisms,
    reconstruct_complex,
    zero_dim_vertices,
)

__version__ = "0.1.0"
