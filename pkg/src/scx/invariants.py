"""Exact topological invariants.

Betti numbers come from ranks of integer boundary matrices computed with
exact rational elimination; curvature and the combinatorial Gauss-Bonnet and
index-sum identities use rational arithmetic throughout.  Nothing in this
module depends on floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .complexes import Complex
from .errors import NonInjective, SizeLimit
from .graphs import (
    Graph,
    _bits,
    canonical_code,
    clique_counts,
    cliques,
    induced_mask,
    unit_sphere,
    whitney_complex,
)
from .homotopy import _greedy_moves, is_sphere

#: Default cap on the number of sets fed to the exact rank computation.
BETTI_CAP = 2000


# ---------------------------------------------------------------------------
# Boundary operators and exact ranks


@dataclass(frozen=True)
class BoundaryOperators:
    """Integer boundary matrices of a complex, one per dimension k >= 1.

    ``columns[k][j]`` maps row indices (faces of dimension k-1) to the signed
    incidence coefficient of the j-th k-simplex.  The composition of
    consecutive operators is verified to vanish on construction.
    """

    shapes: tuple[tuple[int, int], ...]
    columns: tuple[tuple[dict[int, int], ...], ...]

    def matrix(self, k: int) -> list[list[int]]:
        """Dense copy of the k-th operator (rows x columns)."""
        rows, cols = self.shapes[k - 1]
        out = [[0] * cols for _ in range(rows)]
        for j, col in enumerate(self.columns[k - 1]):
            for i, c in col.items():
                out[i][j] = c
        return out


def boundary_operators(G: Complex) -> BoundaryOperators:
    by_dim: list[list[tuple[int, ...]]] = [[] for _ in range(G.dim() + 1)]
    for s in G.sets:
        by_dim[len(s) - 1].append(s)
    index = [{s: i for i, s in enumerate(level)} for level in by_dim]

    shapes = []
    columns = []
    for k in range(1, G.dim() + 1):
        cols = []
        for s in by_dim[k]:
            col: dict[int, int] = {}
            for p in range(len(s)):
                face = s[:p] + s[p + 1 :]
                col[index[k - 1][face]] = -1 if p % 2 else 1
            cols.append(col)
        shapes.append((len(by_dim[k - 1]), len(by_dim[k])))
        columns.append(tuple(cols))

    ops = BoundaryOperators(tuple(shapes), tuple(columns))
    for k in range(2, G.dim() + 1):
        lower = ops.columns[k - 2]
        for col in ops.columns[k - 1]:
            acc: dict[int, int] = {}
            for i, c in col.items():
                for r, d in lower[i].items():
                    acc[r] = acc.get(r, 0) + c * d
            if any(acc.values()):
                raise AssertionError("boundary of boundary is not zero")
    return ops


def _rank_exact(columns: Sequence[Mapping[int, int]]) -> int:
    """Rank over the rationals of a sparse integer matrix given by columns."""
    rows: dict[int, dict[int, Fraction]] = {}
    for j, col in enumerate(columns):
        for i, c in col.items():
            rows.setdefault(i, {})[j] = Fraction(c)
    rank = 0
    while rows:
        # cheapest pivot row, preferring short rows with a unit entry
        def key(item):
            i, row = item
            unit = any(abs(v) == 1 for v in row.values())
            return (not unit, len(row), i)

        i, row = min(rows.items(), key=key)
        del rows[i]
        if not row:
            continue
        rank += 1
        j, pv = min(row.items(), key=lambda kv: (abs(kv[1]) != 1, kv[0]))
        for i2 in list(rows):
            row2 = rows[i2]
            if j not in row2:
                continue
            factor = row2[j] / pv
            for jj, v in row.items():
                nv = row2.get(jj, Fraction(0)) - factor * v
                if nv:
                    row2[jj] = nv
                else:
                    row2.pop(jj, None)
            if not row2:
                del rows[i2]
    return rank


def betti(G: Complex, cap: int = BETTI_CAP) -> tuple[int, ...]:
    """Rational Betti numbers, trailing zeros dropped.

    ``b_k = f_k - rank d_k - rank d_(k+1)`` with exact arithmetic; the
    alternating sum always equals the Euler characteristic.
    """
    if len(G) > cap:
        raise SizeLimit(f"betti computation capped at {cap} sets, got {len(G)}")
    ops = boundary_operators(G)
    f = list(G.f_vector())
    ranks = [0] * (len(f) + 1)
    for k in range(1, len(f)):
        ranks[k] = _rank_exact(ops.columns[k - 1])
    bs = [f[k] - ranks[k] - ranks[k + 1] for k in range(len(f))]
    while len(bs) > 1 and bs[-1] == 0:
        bs.pop()
    return tuple(bs)


# ---------------------------------------------------------------------------
# Graph-level invariants (always about the clique complex)


def graph_euler(A: Graph, cap: int = 10**6) -> int:
    """Alternating sum of clique counts."""
    total = 0
    count = 0
    for c in cliques(A):
        total += (-1) ** (len(c) - 1)
        count += 1
        if count > cap:
            raise SizeLimit("clique complex too large for Euler characteristic")
    return total


def graph_betti(A: Graph, cap: int = BETTI_CAP) -> tuple[int, ...]:
    """Betti numbers of the clique complex.

    Graphs whose clique complex would overflow the exact-rank cap are first
    shrunk by certificate-checked contractions, which preserve every Betti
    number; the ranks are then taken on the reduced clique complex.
    """
    reduced, _ = _greedy_moves(Graph(A.adj))
    sets = 0
    for _ in cliques(reduced):
        sets += 1
        if sets > cap:
            raise SizeLimit("clique complex too large even after reduction")
    return betti(whitney_complex(reduced), cap)


def curvature(A: Graph) -> dict[int, Fraction]:
    """Vertex curvature: alternating sum over clique sizes through each
    vertex of f_k(x)/(k+1)."""
    acc = {v: Fraction(0) for v in range(A.n)}
    for c in cliques(A):
        k = len(c) - 1
        w = Fraction((-1) ** k, k + 1)
        for v in c:
            acc[v] += w
    return acc


def gauss_bonnet_check(A: Graph) -> bool:
    """Total curvature equals the Euler characteristic, exactly."""
    return sum(curvature(A).values(), Fraction(0)) == graph_euler(A)


def poincare_hopf(
    A: Graph, f: Sequence[float] | Mapping[int, float]
) -> tuple[dict[int, int], bool]:
    """Indices ``1 - chi(S_f(x))`` of an injective vertex function, where
    ``S_f(x)`` is the part of the unit sphere with smaller function value.
    Returns the index map and whether the indices sum to the Euler
    characteristic (they always should)."""
    values = [f[v] for v in range(A.n)]
    if len(set(values)) != A.n:
        raise NonInjective("vertex function must be injective")
    indices = {}
    for v in range(A.n):
        mask = 0
        for u in _bits(A.adj[v]):
            if values[u] < values[v]:
                mask |= 1 << u
        indices[v] = 1 - graph_euler(induced_mask(A, mask))
    return indices, sum(indices.values()) == graph_euler(A)


def genus(A: Graph) -> int:
    """``1 - chi``; multiplicative under the join."""
    return 1 - graph_euler(A)


def is_platonic_sphere(A: Graph) -> tuple[bool, tuple[bytes, ...]]:
    """A sphere all of whose unit spheres are isomorphic and themselves
    Platonic.  The witness is the chain of common unit-sphere codes, one per
    dimension going down."""
    d = is_sphere(A)
    if d is None:
        return False, ()
    if d <= 0:
        return True, ()
    spheres = [unit_sphere(A, v) for v in range(A.n)]
    codes = {canonical_code(s) for s in spheres}
    if len(codes) != 1:
        return False, ()
    ok, chain = is_platonic_sphere(spheres[0])
    if not ok:
        return False, ()
    return True, (codes.pop(),) + chain


@dataclass(frozen=True)
class InvariantReport:
    f_vector: tuple[int, ...]
    chi: int
    betti: tuple[int, ...] | None
    curvature: tuple[str, ...] | None
    sphere_dim: int | None

    @staticmethod
    def for_graph(A: Graph, with_betti: bool = True) -> "InvariantReport":
        f = tuple(clique_counts(A))
        chi = sum((-1) ** k * c for k, c in enumerate(f))
        bs = None
        if with_betti:
            try:
                bs = graph_betti(A)
            except SizeLimit:
                bs = None
        curv = tuple(str(curvature(A)[v]) for v in range(A.n))
        sd = is_sphere(A) if A.n <= 64 else None
        return InvariantReport(f, chi, bs, curv, sd)
