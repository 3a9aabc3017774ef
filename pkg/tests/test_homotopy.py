import random

import pytest

from scx import (
    Contract,
    EdgeRefine,
    EdgeRemove,
    Expand,
    Graph,
    apply_move,
    barycentric_refine,
    barycentric_trace,
    from_facets,
    graph_from_edges,
    homotopy_reduce,
    is_contractible,
    is_isomorphic,
    is_sphere,
    move_is_legal,
    phi,
    product_extension_trace,
    psi,
    psi_to_phi_trace,
    refinement_graph,
    trace_from_moves,
    zykov_join,
)
from scx.catalog import (
    complete_graph,
    cross_polytope,
    cycle_graph,
    dunce_hat_graph,
    figure8_complex,
    figure8_graph,
    icosahedron_graph,
    interval_complex,
    octahedron_graph,
    path_graph,
    point_complex,
    simplex_complex,
    star_graph,
    triangle_boundary,
    wheel_graph,
)
from scx.errors import CertificateFailure, IllegalMove, IntersectionNotContractible
from scx.invariants import graph_betti, graph_euler


# -- contractibility ---------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 7))
def test_complete_graphs_contractible(n):
    assert is_contractible(complete_graph(n))


@pytest.mark.parametrize("n", range(4, 9))
def test_cycles_not_contractible(n):
    assert not is_contractible(cycle_graph(n))


def test_trees_and_cones_contractible(subtests=None):
    assert is_contractible(path_graph(8))
    assert is_contractible(star_graph(6))
    assert is_contractible(wheel_graph(5))


def test_empty_graph_not_contractible():
    assert not is_contractible(Graph(()))


def test_dunce_hat_not_contractible_but_unit_characteristic():
    d = dunce_hat_graph()
    assert not is_contractible(d)
    assert graph_euler(d) == 1


# -- spheres -------------------------------------------------------------


def test_sphere_dimensions():
    assert is_sphere(Graph(())) == -1
    assert is_sphere(graph_from_edges(2, [])) == 0
    assert is_sphere(cycle_graph(6)) == 1
    assert is_sphere(octahedron_graph()) == 2
    assert is_sphere(icosahedron_graph()) == 2
    assert is_sphere(cross_polytope(3)) == 3
    assert is_sphere(cross_polytope(4)) == 4


def test_non_spheres():
    assert is_sphere(complete_graph(3)) is None
    assert is_sphere(complete_graph(1)) is None
    assert is_sphere(path_graph(4)) is None


def test_euler_gem_for_every_sphere_built():
    for g in [cycle_graph(5), octahedron_graph(), icosahedron_graph(),
              cross_polytope(1), cross_polytope(3), cross_polytope(4)]:
        d = is_sphere(g)
        assert d is not None
        assert graph_euler(g) == 1 + (-1) ** d


def test_join_lemmas():
    # contractible + anything = contractible
    assert is_contractible(zykov_join(complete_graph(1), cycle_graph(5)))
    assert is_contractible(zykov_join(path_graph(3), cycle_graph(4)))
    # sphere + sphere = sphere of summed dimension plus one
    s0 = graph_from_edges(2, [])
    assert is_sphere(zykov_join(s0, cycle_graph(4))) == 2
    assert is_sphere(zykov_join(cycle_graph(4), cycle_graph(5))) == 3


# -- moves -------------------------------------------------------------------


def test_contract_k2():
    B, cert = apply_move(complete_graph(2), Contract(1))
    assert B.n == 1
    assert cert["sphere"] == (0,)


def test_contract_illegal_on_cycle():
    with pytest.raises(IllegalMove):
        apply_move(cycle_graph(6), Contract(3))


def test_expand_requires_contractible_attachment():
    c6 = cycle_graph(6)
    B, _ = apply_move(c6, Expand((0, 1, 2)))  # induced path
    assert B.n == 7
    assert graph_euler(B) == graph_euler(c6) == 0
    with pytest.raises(IllegalMove):
        apply_move(c6, Expand((0, 3)))  # two non-adjacent vertices


def test_edge_refine_preserves_euler():
    k3 = complete_graph(3)
    B, cert = apply_move(k3, EdgeRefine(0, 1))
    assert B.n == 4
    assert graph_euler(B) == 1
    assert set(cert["attach"]) == {0, 1, 2}
    c5 = cycle_graph(5)
    B, _ = apply_move(c5, EdgeRefine(0, 1))
    assert is_isomorphic(B, cycle_graph(6))


def test_edge_remove_certificates():
    # on a cone the removal certificate holds
    w = wheel_graph(5)
    B, cert = apply_move(w, EdgeRemove(1, 2))
    assert cert["kind"] == "EdgeRemove"
    assert graph_euler(B) == 1
    with pytest.raises(IllegalMove):
        apply_move(cycle_graph(5), EdgeRemove(0, 1))


def test_vertex_ids_shift_down_after_contract():
    g = path_graph(4)  # 0-1-2-3
    B, _ = apply_move(g, Contract(0))
    # vertices 1,2,3 become 0,1,2
    assert B.edges() == [(0, 1), (1, 2)]


# -- traces --------------------------------------------------------------


def test_trace_replay_and_forgery_rejection():
    tr = trace_from_moves(complete_graph(3), [Contract(2), Contract(1)])
    assert tr.replay().n == 1
    forged_steps = list(tr.steps)
    from scx.homotopy import TraceStep

    forged_steps[0] = TraceStep(forged_steps[0].move, {"kind": "Contract", "sphere": (0,)})
    forged = type(tr)(tr.start, tuple(forged_steps), tr.end)
    with pytest.raises(CertificateFailure):
        forged.replay()


def test_three_move_cycle_growth():
    """The scripted deformation growing a 5-cycle into a 6-cycle."""
    tr = trace_from_moves(cycle_graph(5), [Expand((4, 0)), Expand((3, 4, 5)), Contract(4)])
    assert is_isomorphic(tr.end, cycle_graph(6))
    chis = [graph_euler(g) for g in tr.intermediates()]
    assert set(chis) == {0}


@pytest.mark.parametrize(
    "builder",
    [point_complex, interval_complex, triangle_boundary,
     lambda: simplex_complex(3), figure8_complex],
)
def test_psi_to_phi_on_refinements(builder):
    B = barycentric_refine(builder())
    tr = psi_to_phi_trace(B)
    assert tr.replay().adj == phi(B).adj
    chis = {graph_euler(g) for g in tr.intermediates()}
    assert len(chis) == 1


def test_psi_to_phi_violation_on_unrefined_cycle():
    with pytest.raises(IntersectionNotContractible):
        psi_to_phi_trace(triangle_boundary())


def test_barycentric_trace_small_graphs():
    tr = barycentric_trace(complete_graph(3))
    assert is_isomorphic(tr.end, wheel_graph(6))
    assert len(barycentric_trace(complete_graph(1))) == 0
    tr = barycentric_trace(cycle_graph(5))
    assert is_isomorphic(tr.end, cycle_graph(10))
    chis = {graph_euler(g) for g in tr.intermediates()}
    assert chis == {0}


def test_barycentric_trace_matches_refinement_graph():
    for g in [complete_graph(4), figure8_graph(), path_graph(4), star_graph(3)]:
        tr = barycentric_trace(g)
        assert is_isomorphic(tr.end, refinement_graph(g))
        tr.replay()


def test_barycentric_trace_rejects_closed_surfaces():
    with pytest.raises(IllegalMove):
        barycentric_trace(octahedron_graph())


def test_product_extension_traces():
    tr = product_extension_trace(cycle_graph(5), (0, 1), complete_graph(2))
    assert len(tr) == 2
    tr.replay()
    tr = product_extension_trace(path_graph(2), (1,), cycle_graph(4))
    assert len(tr) == 4
    chis = {graph_euler(g) for g in tr.intermediates()}
    assert len(chis) == 1
    tr = product_extension_trace(cycle_graph(5), (0, 1), complete_graph(1))
    assert len(tr) == 1


def test_product_extension_rejects_bad_attachment():
    with pytest.raises(IllegalMove):
        product_extension_trace(cycle_graph(5), (0, 2), complete_graph(2))


# -- reduction -----------------------------------------------------------


def test_reduce_trees_to_point():
    for g in [path_graph(9), star_graph(5), complete_graph(5)]:
        res = homotopy_reduce(g)
        assert res.status == "point"
        assert res.graph.n == 1
        res.trace.replay()


def test_reduce_stuck_on_circle_and_dunce_hat():
    res = homotopy_reduce(cycle_graph(7))
    assert res.status == "unknown"
    assert res.graph.n == 7
    res = homotopy_reduce(dunce_hat_graph(), max_expansions=5)
    assert res.status == "unknown"


def test_reduce_with_expansions_budget_runs():
    res = homotopy_reduce(cycle_graph(4), max_expansions=8)
    assert res.status in ("point", "unknown")
    res.trace.replay()


def test_random_legal_move_sequences_preserve_euler():
    """Fuzz the move system: any sequence of server-legal moves keeps the
    Euler characteristic and replays cleanly."""
    from scx.server import legal_moves
    from scx.io import move_from_json

    rng = random.Random(2024)
    for trial in range(12):
        start = [cycle_graph(5), complete_graph(4), path_graph(5),
                 octahedron_graph()][trial % 4]
        cur = Graph(start.adj)
        moves = []
        for _ in range(5):
            options = legal_moves(cur)
            if not options:
                break
            move = move_from_json(rng.choice(options))
            if cur.n > 16 and not isinstance(move, Contract):
                continue  # keep the fuzz bounded
            cur, _ = apply_move(cur, move)
            moves.append(move)
        tr = trace_from_moves(Graph(start.adj), moves)
        tr.replay()
        chis = {graph_euler(g) for g in tr.intermediates()}
        assert len(chis) == 1


def test_betti_invariant_along_traces():
    rng = random.Random(9)
    traces = [
        trace_from_moves(cycle_graph(5), [Expand((4, 0)), Expand((3, 4, 5)), Contract(4)]),
        barycentric_trace(complete_graph(3)),
        product_extension_trace(path_graph(2), (1,), cycle_graph(4)),
    ]
    for tr in traces:
        values = {graph_betti(g) for g in tr.intermediates() if g.n <= 30}
        assert len(values) == 1
