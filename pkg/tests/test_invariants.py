import random
from fractions import Fraction

import pytest

from scx import (
    Graph,
    barycentric_refine,
    betti,
    boundary_operators,
    curvature,
    from_facets,
    gauss_bonnet_check,
    genus,
    graph_betti,
    graph_euler,
    is_platonic_sphere,
    phi,
    poincare_hopf,
    psi,
    whitney_complex,
    zykov_join,
)
from scx.catalog import (
    complex_by_name,
    cross_polytope,
    cycle_graph,
    dunce_hat_complex,
    figure8_complex,
    icosahedron_graph,
    octahedron_graph,
    triangle_boundary,
    wheel_graph,
)
from scx.errors import NonInjective
from helpers import catalog_complexes, random_complex


def test_boundary_squares_to_zero_everywhere():
    rng = random.Random(23)
    for _ in range(20):
        boundary_operators(random_complex(rng, max_vertices=7))
    boundary_operators(complex_by_name("octahedron"))


def test_boundary_matrix_shape():
    ops = boundary_operators(triangle_boundary())
    assert ops.shapes == ((3, 3),)
    M = ops.matrix(1)
    assert sorted(sum(abs(x) for x in row) for row in M) == [2, 2, 2]


def test_betti_spheres_and_wedges():
    assert betti(complex_by_name("octahedron")) == (1, 0, 1)
    assert betti(figure8_complex()) == (1, 2)
    assert betti(from_facets([[1, 2, 3]])) == (1,)
    assert betti(complex_by_name("icosahedron")) == (1, 0, 1)


def test_betti_connection_graph_of_octahedron():
    Q = psi(complex_by_name("octahedron"))
    assert graph_betti(Q) == (1, 0, 0, 1)


def test_betti_connection_graph_of_refined_octahedron():
    Q = psi(barycentric_refine(complex_by_name("octahedron")))
    assert graph_betti(Q) == (1, 0, 1)


def test_euler_poincare_identity():
    rng = random.Random(31)
    for _ in range(25):
        G = random_complex(rng, max_vertices=7, max_dim=3)
        assert sum((-1) ** k * b for k, b in enumerate(betti(G))) == G.euler_characteristic()


def test_dunce_hat_complex_contractible_homology():
    D = dunce_hat_complex()
    assert D.euler_characteristic() == 1
    assert betti(D) == (1,)


def test_graph_euler_values():
    assert graph_euler(octahedron_graph()) == 2
    assert graph_euler(cycle_graph(6)) == 0
    assert graph_euler(psi(triangle_boundary())) == 1
    assert graph_euler(phi(triangle_boundary())) == 0


def test_curvature_regular_cases():
    ic = icosahedron_graph()
    assert set(curvature(ic).values()) == {Fraction(1, 6)}
    assert sum(curvature(ic).values()) == 2
    assert set(curvature(cycle_graph(9)).values()) == {Fraction(0)}


def test_gauss_bonnet_catalog_and_random():
    for g in [octahedron_graph(), icosahedron_graph(), wheel_graph(6),
              psi(figure8_complex()), phi(figure8_complex())]:
        assert gauss_bonnet_check(g)
    rng = random.Random(41)
    for _ in range(15):
        G = random_complex(rng, max_vertices=8)
        assert gauss_bonnet_check(psi(G))


def test_figure8_intersection_graph_total_curvature():
    # the intersection graph of this one-dimensional complex keeps its Euler
    # characteristic, so the curvatures sum to -1
    Q = psi(figure8_complex())
    assert graph_euler(Q) == -1
    assert sum(curvature(Q).values()) == -1


def test_poincare_hopf_sums_to_euler():
    o = octahedron_graph()
    rng = random.Random(13)
    for _ in range(20):
        f = rng.sample(range(100), o.n)
        indices, ok = poincare_hopf(o, f)
        assert ok
        assert sum(indices.values()) == 2


def test_poincare_hopf_trivial_and_errors():
    indices, ok = poincare_hopf(Graph((0,)), [5])
    assert indices == {0: 1} and ok
    with pytest.raises(NonInjective):
        poincare_hopf(cycle_graph(4), [1, 1, 2, 3])


def test_poincare_hopf_cycle_with_single_descent():
    # increasing around the cycle except the wrap-around
    indices, ok = poincare_hopf(cycle_graph(6), [0, 1, 2, 3, 4, 5])
    assert ok and sum(indices.values()) == 0


def test_genus_multiplicative_under_join():
    c4 = cycle_graph(4)
    joined = zykov_join(c4, c4)
    assert genus(c4) * genus(c4) == genus(joined) == 1
    assert genus(Graph(())) == 1
    assert genus(octahedron_graph()) == -1


def test_platonic_spheres():
    for n in range(4, 9):
        ok, _ = is_platonic_sphere(cycle_graph(n))
        assert ok
    for g in [octahedron_graph(), icosahedron_graph(), cross_polytope(3), cross_polytope(4)]:
        ok, chain = is_platonic_sphere(g)
        assert ok


def test_platonic_rejects_irregular_sphere():
    from scx import EdgeRefine, apply_move

    irregular, _ = apply_move(cross_polytope(3), EdgeRefine(0, 2))
    ok, _ = is_platonic_sphere(irregular)
    assert not ok
    ok, _ = is_platonic_sphere(Graph((0,)))  # K_1 is contractible, not a sphere
    assert not ok


def test_cross_polytope_4_f_vector():
    f = tuple(whitney_complex(cross_polytope(4)).f_vector())
    assert f == (10, 40, 80, 80, 32)
