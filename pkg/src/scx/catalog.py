"""Built-in graphs and complexes addressable by name.

Graph names accept parameters in the form ``C_6``, ``K_4``, ``P_5``,
``star_5``, ``wheel_6``, ``cross_polytope_3``, ``bouquet_3``; the remaining
names are fixed instances.
"""

from __future__ import annotations

from .complexes import Complex, from_facets
from .errors import InvalidInput
from .graphs import Graph, graph_from_edges, whitney_complex, zykov_join

# 8-vertex triangulation of the dunce hat: a triangulated disk (9-gon rim,
# inner pentagon 4..8) with its rim glued onto the loop 1-2-3-1 three times.
# 24 edges, 17 triangles; the loop edges 12, 13, 23 each lie in 3 triangles,
# every other edge in 2, so the complex has no boundary.
DUNCE_HAT_8_FACETS = (
    (1, 2, 4), (1, 2, 6), (1, 2, 8), (1, 3, 4), (1, 3, 6), (1, 3, 7),
    (1, 7, 8), (2, 3, 5), (2, 3, 7), (2, 3, 8), (2, 4, 5), (2, 6, 7),
    (3, 4, 8), (3, 5, 6), (4, 5, 6), (4, 6, 7), (4, 7, 8),
)

# Icosahedron as a gyroelongated pentagonal bipyramid: hubs 0 and 11 over the
# upper ring 1..5 and lower ring 6..10 of a pentagonal antiprism.
_ICOSA_EDGES = (
    [(0, k) for k in range(1, 6)]
    + [(11, k) for k in range(6, 11)]
    + [(1 + i, 1 + (i + 1) % 5) for i in range(5)]
    + [(6 + i, 6 + (i + 1) % 5) for i in range(5)]
    + [(1 + i, 6 + i) for i in range(5)]
    + [(1 + i, 6 + (i + 4) % 5) for i in range(5)]
)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidInput("cycles need at least 3 vertices")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """Hub 0 joined to n leaves."""
    return graph_from_edges(n + 1, [(0, k) for k in range(1, n + 1)])


def wheel_graph(n: int) -> Graph:
    """Hub 0 over an n-cycle 1..n."""
    rim = [(k, k % n + 1) for k in range(1, n + 1)]
    return graph_from_edges(n + 1, rim + [(0, k) for k in range(1, n + 1)])


def cross_polytope(d: int) -> Graph:
    """Join of d+1 vertex pairs: complete (2d+2)-graph minus a perfect
    matching.  A d-dimensional sphere; d=2 is the octahedron."""
    if d < 0:
        raise InvalidInput("dimension must be non-negative")
    g = graph_from_edges(2, [])
    for _ in range(d):
        g = zykov_join(g, graph_from_edges(2, []))
    return g


def octahedron_graph() -> Graph:
    return cross_polytope(2)


def icosahedron_graph() -> Graph:
    return graph_from_edges(12, _ICOSA_EDGES)


def bouquet_graph(k: int) -> Graph:
    """k square cycles glued at a common vertex 0; 3k+1 vertices, 4k edges."""
    if k < 1:
        raise InvalidInput("need at least one loop")
    edges = []
    for i in range(k):
        a, b, c = 3 * i + 1, 3 * i + 2, 3 * i + 3
        edges += [(0, a), (a, b), (b, c), (c, 0)]
    return graph_from_edges(3 * k + 1, edges)


def figure8_graph() -> Graph:
    """Two squares sharing one corner, with the labels used throughout the
    test complexes (shared corner is vertex 4)."""
    return graph_from_edges(
        8,
        [(1, 2), (2, 3), (3, 4), (4, 1), (4, 5), (5, 6), (6, 7), (7, 4)],
    )


def dunce_hat_complex() -> Complex:
    return from_facets(DUNCE_HAT_8_FACETS)


def dunce_hat_graph() -> Graph:
    """Incidence graph of the 8-vertex dunce hat triangulation.

    The triangulation's own 1-skeleton is too dense to be a clique complex
    (it has empty triangles), so the graph catalog carries the subdivision:
    its clique complex is the refined dunce hat, with the same homotopy type.
    """
    from .graphs import phi

    return phi(dunce_hat_complex())


_FIXED_GRAPHS = {
    "octahedron": octahedron_graph,
    "icosahedron": icosahedron_graph,
    "figure8": figure8_graph,
    "dunce_hat_8": dunce_hat_graph,
}


def graph_by_name(name: str) -> Graph:
    if name in _FIXED_GRAPHS:
        return _FIXED_GRAPHS[name]()
    head, _, tail = name.partition("_")
    if tail:
        try:
            k = int(tail)
        except ValueError:
            raise InvalidInput(f"unknown graph {name!r}")
        if head == "C":
            return cycle_graph(k)
        if head == "K":
            return complete_graph(k)
        if head == "P":
            return path_graph(k)
        if head == "star":
            return star_graph(k)
        if head == "wheel":
            return wheel_graph(k)
        if head == "bouquet":
            return bouquet_graph(k)
    if name.startswith("cross_polytope_"):
        return cross_polytope(int(name.rsplit("_", 1)[1]))
    raise InvalidInput(f"unknown graph {name!r}")


def graph_names() -> list[str]:
    return sorted(_FIXED_GRAPHS) + [
        "C_n", "K_n", "P_n", "star_n", "wheel_n", "bouquet_k", "cross_polytope_d",
    ]


# ---------------------------------------------------------------------------
# Complexes


def point_complex() -> Complex:
    return from_facets([[1]])


def interval_complex() -> Complex:
    return from_facets([[1, 2]])


def triangle_boundary() -> Complex:
    return from_facets([[1, 2], [2, 3], [3, 1]])


def square_boundary() -> Complex:
    return from_facets([[1, 2], [2, 3], [3, 4], [4, 1]])


def figure1_complex() -> Complex:
    """Square with a pendant edge: five base vertices, five edges."""
    return from_facets([[1, 2], [2, 3], [3, 4], [4, 1], [4, 5]])


def figure8_complex() -> Complex:
    return from_facets([(1, 2), (2, 3), (3, 4), (4, 1), (4, 5), (5, 6), (6, 7), (7, 4)])


def bouquet_complex(k: int) -> Complex:
    return whitney_complex(bouquet_graph(k))


def simplex_complex(n: int) -> Complex:
    """Full simplex on n vertices (all non-empty subsets of 1..n).

    Deliberately not a member of the named catalog: its incidence graph has
    extra symmetries that swap dimensions, which makes it a useful edge-case
    fixture rather than a representative instance.
    """
    return from_facets([list(range(1, n + 1))])


def complex_by_name(name: str) -> Complex:
    if name in COMPLEXES:
        return COMPLEXES[name]()
    raise InvalidInput(f"unknown complex {name!r}")


COMPLEXES = {
    "point": point_complex,
    "interval": interval_complex,
    "triangle_boundary": triangle_boundary,
    "square_boundary": square_boundary,
    "figure1": figure1_complex,
    "figure8": figure8_complex,
    "bouquet_3": lambda: bouquet_complex(3),
    "bouquet_4": lambda: bouquet_complex(4),
    "path_3": lambda: whitney_complex(path_graph(3)),
    "star_4": lambda: whitney_complex(star_graph(4)),
    "cycle_5": lambda: whitney_complex(cycle_graph(5)),
    "octahedron": lambda: whitney_complex(octahedron_graph()),
    "icosahedron": lambda: whitney_complex(icosahedron_graph()),
    "cross_polytope_1": lambda: whitney_complex(cross_polytope(1)),
    "cross_polytope_3": lambda: whitney_complex(cross_polytope(3)),
    "dunce_hat_8": dunce_hat_complex,
}
