"""Independence numbers, capacity certificates for intersection graphs, and
the spectral facts about their unimodular Laplacians.

Everything that enters a certificate (independence numbers, the umbrella
bound, determinants) is exact; floating point appears only in the eigenvalue
comparison of the product check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import numpy as np

from .complexes import Complex
from .errors import NotOneDimensional, SizeLimit
from .graphs import (
    Graph,
    _bits,
    complement,
    disjoint_union,
    psi,
    psi_product,
    strong_product,
)

#: Exact independence search cap (vertices), adjustable per call.
INDEPENDENCE_CAP = 260


# ---------------------------------------------------------------------------
# Exact independence via branch and bound on complement cliques


def _max_clique(adj: list[int], n: int) -> tuple[int, int]:
    """Maximum clique (size, vertex mask), exact.

    Deterministic branch and bound: the greedy coloring of the candidate set
    bounds every clique inside it, and candidates are expanded in color
    order."""
    best_size = 0
    best_mask = 0

    def color_bound(cand: int) -> list[tuple[int, int]]:
        # (vertex, color) pairs, colors increasing; same-colored vertices are
        # pairwise non-adjacent, so size + color bounds any clique in cand
        out = []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                out.append((v, color))
                rest &= ~(1 << v)
                avail &= ~(1 << v)
                avail &= ~adj[v]
        return out

    def expand(cand: int, size: int, mask: int):
        nonlocal best_size, best_mask
        colored = color_bound(cand)
        for v, c in reversed(colored):
            if size + c <= best_size:
                return
            nv = 1 << v
            if size + 1 > best_size:
                best_size = size + 1
                best_mask = mask | nv
            nxt = cand & adj[v]
            if nxt:
                expand(nxt, size + 1, mask | nv)
            cand &= ~nv

    expand((1 << n) - 1, 0, 0)
    return best_size, best_mask


def independence_number(A: Graph, cap: int = INDEPENDENCE_CAP) -> tuple[int, tuple[int, ...]]:
    """Exact maximum independent set size and one witness."""
    if A.n > cap:
        raise SizeLimit(f"independence search capped at {cap} vertices, got {A.n}")
    if A.n == 0:
        return 0, ()
    comp = complement(A)
    size, mask = _max_clique(list(comp.adj), A.n)
    return size, tuple(_bits(mask))


def strong_power(A: Graph, n: int) -> Graph:
    if n < 1:
        raise SizeLimit("power must be at least 1")
    out = Graph(A.adj)
    for _ in range(n - 1):
        out = strong_product(out, Graph(A.adj))
    return out


@dataclass(frozen=True)
class PowerBound:
    """Certified lower bound ``independence(A^n)^(1/n)`` on the capacity."""

    power: int
    independence: int
    witness: tuple[int, ...]

    @property
    def value(self) -> float:
        return self.independence ** (1.0 / self.power)


def shannon_lower(A: Graph, n: int, cap: int = INDEPENDENCE_CAP) -> PowerBound:
    """Independence of the n-th strong power, as a capacity lower bound."""
    P = strong_power(A, n)
    if P.n > cap:
        raise SizeLimit(f"power graph has {P.n} vertices, cap {cap}")
    size, witness = independence_number(P, cap)
    return PowerBound(n, size, witness)


# ---------------------------------------------------------------------------
# The explicit umbrella certificate


@dataclass(frozen=True)
class UmbrellaRep:
    """Orthonormal-style labeling of an intersection graph inside R^(f0).

    Vertex x gets the indicator of its set scaled to unit length; the stick
    is the all-ones direction.  Squared projections are rational, so the
    bound is exact: max over x of (u(x).c)^-2 = f0, attained at base points.
    """

    sets: tuple[tuple[int, ...], ...]
    coords: tuple[int, ...]  # the base-point axis labels, in order
    bound: int

    def vector(self, i: int) -> tuple[Fraction, ...]:
        """Unnormalized indicator of set i (exact); its squared norm is the
        set's cardinality."""
        s = set(self.sets[i])
        return tuple(Fraction(1 if c in s else 0) for c in self.coords)

    @property
    def stick(self) -> tuple[Fraction, ...]:
        """Unnormalized central direction (all ones); squared norm is the
        base-point count, so the unit stick divides by its square root."""
        return tuple(Fraction(1) for _ in self.coords)

    def dot_squared_sign(self, i: int, j: int) -> int:
        """Sign of the inner product of the unit vectors (0 or positive)."""
        return len(set(self.sets[i]) & set(self.sets[j]))

    def projection_squared(self, i: int) -> Fraction:
        """(u(x).c)^2 for the unit vector of set i against the stick."""
        s = self.sets[i]
        return Fraction(len(s), len(self.coords))


def lovasz_umbrella(G: Complex) -> UmbrellaRep:
    """Build the umbrella, verify orthogonality against the intersection
    graph, and return the exact bound (always the base-point count)."""
    coords = G.vertices
    f0 = len(coords)
    sets = G.sets
    A = psi(G)
    # non-adjacent vertices of the intersection graph must get orthogonal
    # vectors; the dot product of two indicators is the overlap size
    for i in range(len(sets)):
        si = set(sets[i])
        for j in range(i + 1, len(sets)):
            dot = len(si & set(sets[j]))
            adjacent = bool(A.adj[i] & (1 << j))
            if not adjacent and dot != 0:
                raise AssertionError("umbrella vectors not orthogonal on a non-edge")
    # (u(x).c)^-2 = f0/|x|, maximal at the base points
    bound = max(Fraction(f0, len(s)) for s in sets)
    if bound != f0:
        raise AssertionError("umbrella bound must equal the base-point count")
    return UmbrellaRep(sets, coords, f0)


@dataclass(frozen=True)
class CapacityCertificate:
    f0: int
    independence: int
    witness: tuple[int, ...]
    umbrella_bound: int

    @property
    def certified_theta(self) -> int | None:
        """The capacity itself whenever lower and upper bound pinch."""
        return self.independence if self.independence == self.umbrella_bound else None


def capacity_certificate(G: Complex, cap: int = INDEPENDENCE_CAP) -> CapacityCertificate:
    """Pinch the capacity of the intersection graph between the exact
    independence number and the umbrella bound."""
    A = psi(G)
    size, witness = independence_number(Graph(A.adj), cap)
    rep = lovasz_umbrella(G)
    return CapacityCertificate(len(G.vertices), size, witness, rep.bound)


def phi_capacity_1d(G: Complex) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """For a complex of dimension at most one, the larger of point count and
    edge count, with the corresponding independent set of the incidence graph
    as witness."""
    if G.dim() > 1:
        raise NotOneDimensional(f"dimension {G.dim()} exceeds 1")
    points = tuple(s for s in G.sets if len(s) == 1)
    edges = tuple(s for s in G.sets if len(s) == 2)
    witness = points if len(points) >= len(edges) else edges
    return max(len(points), len(edges)), witness


# ---------------------------------------------------------------------------
# The Laplacian of an intersection graph


def _bareiss_det(M: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    n = len(M)
    if n == 0:
        return 1
    M = [row[:] for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


@dataclass(frozen=True)
class ConnectionLaplacian:
    """Identity plus the adjacency matrix of the intersection graph."""

    matrix: np.ndarray  # integer, symmetric, unit diagonal
    even_sets: int  # number of sets of even dimension

    @property
    def order(self) -> int:
        return self.matrix.shape[0]

    def determinant(self) -> int:
        return _bareiss_det(self.matrix.astype(object).tolist())

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.matrix.astype(float))

    def positive_count(self) -> int:
        return int((self.eigenvalues() > 0).sum())


def connection_laplacian(G: Complex, cap: int = 400) -> ConnectionLaplacian:
    if len(G) > cap:
        raise SizeLimit(f"Laplacian capped at {cap} sets, got {len(G)}")
    A = psi(G)
    n = A.n
    M = np.zeros((n, n), dtype=np.int64)
    for v in range(n):
        M[v, v] = 1
        for u in _bits(A.adj[v]):
            M[v, u] = 1
    even = sum(1 for s in G.sets if (len(s) - 1) % 2 == 0)
    return ConnectionLaplacian(M, even)


def unimodularity_check(G: Complex) -> bool:
    """The determinant of the Laplacian is +1 or -1, exactly."""
    return connection_laplacian(G).determinant() in (1, -1)


def signature_check(G: Complex) -> bool:
    """The number of positive eigenvalues equals the number of sets of even
    dimension (no zero eigenvalues exist by unimodularity)."""
    L = connection_laplacian(G)
    return L.positive_count() == L.even_sets


def spectrum_product_check(G: Complex, H: Complex, tol: float = 1e-9) -> bool:
    """The Laplacian of the product is the tensor product of the factor
    Laplacians, entrywise under row-major vertex order, and consequently the
    eigenvalue multiset is the pairwise-product multiset within ``tol``."""
    LG = connection_laplacian(G).matrix
    LH = connection_laplacian(H).matrix
    P = psi_product(G, H)
    n = P.n
    LP = np.zeros((n, n), dtype=np.int64)
    for v in range(n):
        LP[v, v] = 1
        for u in _bits(P.adj[v]):
            LP[v, u] = 1
    if not np.array_equal(LP, np.kron(LG, LH)):
        return False
    ev_p = np.sort(np.linalg.eigvalsh(LP.astype(float)))
    ev_prod = np.sort(np.outer(np.linalg.eigvalsh(LG.astype(float)),
                               np.linalg.eigvalsh(LH.astype(float))).ravel())
    return bool(np.allclose(ev_p, ev_prod, atol=tol, rtol=0))


@dataclass(frozen=True)
class RingCheckReport:
    sum_independence: int
    sum_expected: int
    product_independence: int
    product_expected: int

    @property
    def ok(self) -> bool:
        return (
            self.sum_independence == self.sum_expected
            and self.product_independence == self.product_expected
        )


def capacity_ring_check(G: Complex, H: Complex, cap: int = INDEPENDENCE_CAP) -> RingCheckReport:
    """Addition and multiplication of certified capacities: disjoint union
    adds base points, the strong product multiplies them."""
    AG, AH = psi(G), psi(H)
    f0g, f0h = len(G.vertices), len(H.vertices)
    s, _ = independence_number(disjoint_union(Graph(AG.adj), Graph(AH.adj)), cap)
    p, _ = independence_number(strong_product(Graph(AG.adj), Graph(AH.adj)), cap)
    return RingCheckReport(s, f0g + f0h, p, f0g * f0h)
