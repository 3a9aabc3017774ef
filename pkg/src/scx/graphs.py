"""Finite simple graphs and the functors/operations connecting them to
simplicial complexes.

Vertices are dense ids ``0..n-1``; adjacency is kept as one Python-int bitmask
per vertex, which makes induced-subgraph and neighborhood arithmetic cheap.
Graphs produced from a complex carry the originating sets as ``labels`` so
that reconstructions can be compared against ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Sequence

from .complexes import Complex, _sort_key
from .errors import InvalidInput, SizeLimit, UnknownVertex

#: Canonical labeling is exact (refinement + backtracking); cap the size so a
#: pathological input cannot hang a cache lookup.
CANONICAL_CAP = 64


def _popcount(m: int) -> int:
    return bin(m).count("1")


def _bits(m: int) -> Iterator[int]:
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``adj[v]`` is the neighbor bitmask of vertex ``v``; ``labels`` optionally
    maps each vertex to an arbitrary hashable payload (for graphs built from a
    complex, the originating set).
    """

    adj: tuple[int, ...]
    labels: tuple[Hashable, ...] | None = None

    def __post_init__(self):
        n = len(self.adj)
        if self.labels is not None and len(self.labels) != n:
            raise InvalidInput("labels length must match vertex count")
        for v, m in enumerate(self.adj):
            if m >> n:
                raise InvalidInput("adjacency mask references unknown vertex")
            if m & (1 << v):
                raise InvalidInput(f"self-loop at vertex {v}")
        for v in range(n):
            for u in _bits(self.adj[v]):
                if not self.adj[u] & (1 << v):
                    raise InvalidInput("adjacency must be symmetric")

    @property
    def n(self) -> int:
        return len(self.adj)

    def degree(self, v: int) -> int:
        return _popcount(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return tuple(_bits(self.adj[v]))

    def has_edge(self, a: int, b: int) -> bool:
        self._check(a)
        self._check(b)
        return bool(self.adj[a] & (1 << b))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            m = self.adj[v] >> (v + 1)
            for u in _bits(m << (v + 1)):
                out.append((v, u))
        return out

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def label(self, v: int):
        return None if self.labels is None else self.labels[v]

    def _check(self, v: int):
        if not 0 <= v < self.n:
            raise UnknownVertex(f"vertex {v} not in graph of order {self.n}")

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"


def graph_from_edges(
    n: int, edges: Iterable[tuple[int, int]], labels: Sequence[Hashable] | None = None
) -> Graph:
    adj = [0] * n
    for a, b in edges:
        if a == b:
            raise InvalidInput(f"self-loop at vertex {a}")
        if not (0 <= a < n and 0 <= b < n):
            raise UnknownVertex(f"edge ({a},{b}) outside 0..{n - 1}")
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return Graph(tuple(adj), None if labels is None else tuple(labels))


def empty_graph(n: int = 0) -> Graph:
    return Graph((0,) * n)


def induced(A: Graph, W: Iterable[int]) -> Graph:
    """Subgraph induced on ``W``; vertices are renumbered in increasing id
    order and labels follow along."""
    keep = sorted(set(W))
    for v in keep:
        A._check(v)
    pos = {v: i for i, v in enumerate(keep)}
    mask = 0
    for v in keep:
        mask |= 1 << v
    adj = []
    for v in keep:
        m = A.adj[v] & mask
        out = 0
        for u in _bits(m):
            out |= 1 << pos[u]
        adj.append(out)
    labels = None if A.labels is None else tuple(A.labels[v] for v in keep)
    return Graph(tuple(adj), labels)


def induced_mask(A: Graph, mask: int) -> Graph:
    return induced(A, _bits(mask))


def unit_sphere(A: Graph, v: int) -> Graph:
    """Subgraph induced on the neighbors of ``v``."""
    A._check(v)
    return induced_mask(A, A.adj[v])


# ---------------------------------------------------------------------------
# Functors from complexes to graphs


def phi(G: Complex) -> Graph:
    """Incidence graph: one vertex per set, an edge when one set contains the
    other.  Vertex ``i`` is the ``i``-th set in canonical order."""
    sets = [frozenset(s) for s in G.sets]
    n = len(sets)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if sets[i] <= sets[j] or sets[j] <= sets[i]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(tuple(adj), tuple(G.sets))


def psi(G: Complex) -> Graph:
    """Intersection graph: one vertex per set, an edge when two sets overlap.
    The incidence graph is a subgraph of this one."""
    sets = [frozenset(s) for s in G.sets]
    n = len(sets)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if sets[i] & sets[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(tuple(adj), tuple(G.sets))


# ---------------------------------------------------------------------------
# Cliques and the Whitney complex


def cliques(A: Graph, max_size: int | None = None) -> Iterator[tuple[int, ...]]:
    """All non-empty cliques, emitted as sorted vertex tuples."""
    n = A.n
    limit = n if max_size is None else max_size

    def grow(path: list[int], cand: int):
        if len(path) >= limit:
            return
        for v in _bits(cand):
            path.append(v)
            yield tuple(path)
            yield from grow(path, cand & A.adj[v] & ~((1 << (v + 1)) - 1))
            path.pop()

    full = (1 << n) - 1
    yield from grow([], full)


def clique_counts(A: Graph, max_size: int | None = None) -> list[int]:
    """Number of cliques of each size; index k counts cliques of size k+1."""
    counts: list[int] = []
    for c in cliques(A, max_size):
        k = len(c) - 1
        while len(counts) <= k:
            counts.append(0)
        counts[k] += 1
    return counts


def whitney_complex(A: Graph) -> Complex:
    """The complex of all cliques of ``A`` (vertex labels are the graph's
    vertex ids)."""
    return Complex(tuple(sorted(cliques(A), key=_sort_key)))


# ---------------------------------------------------------------------------
# Ring operations


def strong_product(A: Graph, B: Graph) -> Graph:
    """Vertices are row-major pairs ``(i, j) -> i * B.n + j``; two distinct
    pairs are adjacent when each coordinate is equal or adjacent."""
    na, nb = A.n, B.n
    n = na * nb
    adj = [0] * n
    for i in range(na):
        ai = A.adj[i] | (1 << i)
        for j in range(nb):
            v = i * nb + j
            bj = B.adj[j] | (1 << j)
            m = 0
            for k in _bits(ai):
                row = bj << (k * nb)
                m |= row
            m &= ~(1 << v)
            adj[v] = m
    labels = None
    if A.labels is not None and B.labels is not None:
        labels = tuple((A.labels[i], B.labels[j]) for i in range(na) for j in range(nb))
    return Graph(tuple(adj), labels)


def psi_product(G: Complex, H: Complex) -> Graph:
    """Intersection graph of the pair family: ``(a,b) ~ (c,d)`` when both
    ``a∩c`` and ``b∩d`` are non-empty.  Vertex-for-vertex identical to
    ``strong_product(psi(G), psi(H))``."""
    gs = [frozenset(s) for s in G.sets]
    hs = [frozenset(s) for s in H.sets]
    na, nb = len(gs), len(hs)
    n = na * nb
    adj = [0] * n
    for i in range(na):
        for j in range(nb):
            v = i * nb + j
            for k in range(na):
                if k != i and not (gs[i] & gs[k]):
                    continue
                for l in range(nb):
                    w = k * nb + l
                    if w == v:
                        continue
                    if l != j and not (hs[j] & hs[l]):
                        continue
                    adj[v] |= 1 << w
    labels = tuple((G.sets[i], H.sets[j]) for i in range(na) for j in range(nb))
    return Graph(tuple(adj), labels)


def phi_product(G: Complex, H: Complex) -> Graph:
    """Divisibility graph of the pair family: ``(a,b) ~ (c,d)`` when the
    containments hold componentwise in one direction."""
    gs = [frozenset(s) for s in G.sets]
    hs = [frozenset(s) for s in H.sets]
    na, nb = len(gs), len(hs)
    n = na * nb
    adj = [0] * n
    for i in range(na):
        for j in range(nb):
            v = i * nb + j
            for k in range(na):
                for l in range(nb):
                    w = k * nb + l
                    if w <= v:
                        continue
                    if (gs[i] <= gs[k] and hs[j] <= hs[l]) or (
                        gs[k] <= gs[i] and hs[l] <= hs[j]
                    ):
                        adj[v] |= 1 << w
                        adj[w] |= 1 << v
    labels = tuple((G.sets[i], H.sets[j]) for i in range(na) for j in range(nb))
    return Graph(tuple(adj), labels)


def disjoint_union(A: Graph, B: Graph) -> Graph:
    na = A.n
    adj = list(A.adj) + [m << na for m in B.adj]
    labels = None
    if A.labels is not None and B.labels is not None:
        labels = A.labels + B.labels
    return Graph(tuple(adj), labels)


def complement(A: Graph) -> Graph:
    full = (1 << A.n) - 1
    adj = tuple((full & ~A.adj[v]) & ~(1 << v) for v in range(A.n))
    return Graph(adj, A.labels)


def zykov_join(A: Graph, B: Graph) -> Graph:
    """Disjoint union plus all cross edges; dual to the strong ring under
    complement."""
    na, nb = A.n, B.n
    bmask_all = ((1 << nb) - 1) << na
    amask_all = (1 << na) - 1
    adj = [A.adj[v] | bmask_all for v in range(na)]
    adj += [(B.adj[v] << na) | amask_all for v in range(nb)]
    labels = None
    if A.labels is not None and B.labels is not None:
        labels = A.labels + B.labels
    return Graph(tuple(adj), labels)


# ---------------------------------------------------------------------------
# Canonical labeling (exact, refinement + backtracking)


def _refine(adj: Sequence[int], colors: list[int]) -> list[int]:
    n = len(adj)
    while True:
        sig = []
        for v in range(n):
            nb = sorted(colors[u] for u in _bits(adj[v]))
            sig.append((colors[v], tuple(nb)))
        order = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [order[s] for s in sig]
        if new == colors:
            return colors
        colors = new


def _code_for(adj: Sequence[int], perm: Sequence[int]) -> bytes:
    # perm[i] = original vertex placed at position i
    n = len(adj)
    pos = [0] * n
    for i, v in enumerate(perm):
        pos[v] = i
    bits = []
    for i in range(n):
        row = adj[perm[i]]
        for j in range(i + 1, n):
            bits.append("1" if row & (1 << perm[j]) else "0")
    packed = int("1" + "".join(bits), 2) if bits else 1
    return bytes([n]) + packed.to_bytes((packed.bit_length() + 7) // 8, "big")


def canonical_code(A: Graph, cap: int = CANONICAL_CAP) -> bytes:
    """A byte string equal for two graphs exactly when they are isomorphic."""
    n = A.n
    if n > cap:
        raise SizeLimit(f"canonical labeling capped at {cap} vertices, got {n}")
    if n == 0:
        return b"\x00"
    full = (1 << n) - 1
    if all(A.adj[v] == (full & ~(1 << v)) for v in range(n)) or all(
        m == 0 for m in A.adj
    ):
        return _code_for(A.adj, list(range(n)))  # complete or empty
    best: list[bytes | None] = [None]

    def search(colors: list[int]):
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                if target is None or len(cells[c]) < len(cells[target]):
                    target = c
        if target is None:
            perm = sorted(range(n), key=lambda v: colors[v])
            code = _code_for(A.adj, perm)
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        for v in cells[target]:
            nxt = [2 * c + 1 for c in colors]
            nxt[v] = 0
            search(_refine(A.adj, nxt))

    search(_refine(A.adj, [0] * n))
    assert best[0] is not None
    return best[0]


def is_isomorphic(A: Graph, B: Graph, cap: int = CANONICAL_CAP) -> bool:
    if A.n != B.n or A.edge_count() != B.edge_count():
        return False
    return canonical_code(A, cap) == canonical_code(B, cap)
