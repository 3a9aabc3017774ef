import random

import pytest

from scx import (
    Graph,
    canonical_code,
    complement,
    disjoint_union,
    from_facets,
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
from scx.catalog import (
    complete_graph,
    cycle_graph,
    figure1_complex,
    interval_complex,
    octahedron_graph,
    path_graph,
    star_graph,
    triangle_boundary,
    wheel_graph,
)
from scx.errors import SizeLimit, UnknownVertex
from scx.invariants import graph_euler
from helpers import catalog_complexes, random_complex


def test_phi_of_triangle_boundary_is_c6():
    assert is_isomorphic(phi(triangle_boundary()), cycle_graph(6))


def test_phi_of_simplex_is_wheel():
    W = phi(from_facets([[1, 2, 3]]))
    assert W.n == 7
    assert is_isomorphic(W, wheel_graph(6))


def test_psi_star_clique_number():
    # every set containing the hub meets every other such set
    G = from_facets([[1, k] for k in range(2, 7)])
    A = psi(G)
    hub_sets = [i for i, s in enumerate(G.sets) if 1 in s]
    for a in hub_sets:
        for b in hub_sets:
            if a != b:
                assert A.has_edge(a, b)


def test_phi_subgraph_of_psi():
    rng = random.Random(1)
    samples = [random_complex(rng, max_vertices=8) for _ in range(20)]
    samples += [C for _, C in catalog_complexes()]
    for G in samples:
        P, Q = phi(G), psi(G)
        assert P.labels == Q.labels
        for v in range(P.n):
            assert P.adj[v] & ~Q.adj[v] == 0


def test_unit_sphere_octahedron():
    o = octahedron_graph()
    for v in range(6):
        assert is_isomorphic(unit_sphere(o, v), cycle_graph(4))


def test_unit_sphere_trivial_cases():
    assert unit_sphere(complete_graph(1), 0).n == 0
    s = unit_sphere(cycle_graph(6), 0)
    assert s.n == 2 and s.edge_count() == 0
    with pytest.raises(UnknownVertex):
        unit_sphere(cycle_graph(4), 9)


def test_induced_keeps_labels():
    A = psi(triangle_boundary())
    B = induced(A, [0, 3, 4])
    assert B.labels == (A.labels[0], A.labels[3], A.labels[4])


def test_strong_product_unit():
    A = cycle_graph(5)
    P = strong_product(A, complete_graph(1))
    assert P.adj == A.adj


def test_strong_product_commutative_associative():
    A, B, C = cycle_graph(4), path_graph(3), complete_graph(2)
    assert is_isomorphic(strong_product(A, B), strong_product(B, A))
    # row-major pair ids make associativity an identity, not just isomorphism
    left = strong_product(strong_product(A, B), C)
    right = strong_product(A, strong_product(B, C))
    assert left.adj == right.adj


def test_psi_product_identical_to_strong_product():
    for G, H in [
        (interval_complex(), interval_complex()),
        (from_facets([[1]]), from_facets([[1]])),
        (triangle_boundary(), interval_complex()),
    ]:
        direct = psi_product(G, H)
        viaprod = strong_product(psi(G), psi(H))
        assert direct.adj == viaprod.adj
        assert direct.labels == viaprod.labels
        assert direct.n == len(G) * len(H)


def test_phi_product_euler_multiplicative():
    G, H = triangle_boundary(), interval_complex()
    P = phi_product(G, H)
    assert graph_euler(P) == G.euler_characteristic() * H.euler_characteristic()


def test_phi_product_trivial():
    P = phi_product(from_facets([[1]]), from_facets([[1]]))
    assert P.n == 1


def test_zykov_join_spheres():
    s0 = graph_from_edges(2, [])
    c4 = zykov_join(s0, s0)
    assert is_isomorphic(c4, cycle_graph(4))
    octa = zykov_join(c4, s0)
    assert is_isomorphic(octa, octahedron_graph())


def test_complement_involution_and_duality():
    rng = random.Random(2)
    for _ in range(15):
        n = rng.randint(1, 8)
        edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.4]
        A = graph_from_edges(n, edges)
        assert complement(complement(A)).adj == A.adj
    A, B = cycle_graph(4), path_graph(3)
    left = complement(zykov_join(A, B))
    right = disjoint_union(complement(A), complement(B))
    assert left.adj == right.adj


def test_disjoint_union_unit():
    A = cycle_graph(5)
    E = Graph(())
    assert disjoint_union(A, E).adj == A.adj
    assert disjoint_union(E, A).adj == A.adj


def test_canonical_code_distinguishes_and_identifies():
    c5 = cycle_graph(5)
    relabeled = graph_from_edges(5, [(2, 0), (0, 3), (3, 1), (1, 4), (4, 2)])
    assert canonical_code(c5) == canonical_code(relabeled)
    assert canonical_code(c5) != canonical_code(path_graph(5))


def test_canonical_code_octahedron_constructions():
    # complete tripartite K_{2,2,2}, built directly from its parts
    parts = [(0, 1), (2, 3), (4, 5)]
    edges = [
        (a, b)
        for i, p in enumerate(parts)
        for q in parts[i + 1 :]
        for a in p
        for b in q
    ]
    tripartite = graph_from_edges(6, edges)
    assert canonical_code(tripartite) == canonical_code(octahedron_graph())
    via_join = zykov_join(zykov_join(graph_from_edges(2, []), graph_from_edges(2, [])),
                          graph_from_edges(2, []))
    assert canonical_code(via_join) == canonical_code(octahedron_graph())


def test_canonical_code_cap():
    with pytest.raises(SizeLimit):
        canonical_code(graph_from_edges(70, []), cap=64)


def test_whitney_of_phi_matches_refinement_on_catalog():
    from scx import barycentric_refine

    for _, G in catalog_complexes(max_sets=30):
        assert whitney_complex(phi(G)) == barycentric_refine(G)


def test_star_and_wheel_shapes():
    s = star_graph(5)
    assert s.n == 6 and s.edge_count() == 5
    w = wheel_graph(6)
    assert w.n == 7 and w.edge_count() == 12
