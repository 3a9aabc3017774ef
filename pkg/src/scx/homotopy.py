"""Discrete homotopy calculus on graphs.

A homotopy step either deletes a vertex whose unit sphere is contractible or
attaches a new vertex to a contractible induced subgraph.  Contractibility is
the recursive notion: K_1 is contractible, and a graph is contractible when
some vertex has a contractible unit sphere and a contractible complement.
On top of the two elementary moves sit two macros: refining an edge into a
new vertex, and deleting an edge whose endpoint spheres certify the deletion.

Every generated trace records, per move, the contractible subgraph witnessing
legality; replaying a trace re-checks all certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterator

from .complexes import Complex, _sort_key
from .errors import (
    CertificateFailure,
    IllegalMove,
    IntersectionNotContractible,
    InvalidInput,
    SizeLimit,
)
from .graphs import (
    CANONICAL_CAP,
    Graph,
    _bits,
    _popcount,
    canonical_code,
    cliques,
    phi,
    psi,
    strong_product,
)

#: Above this many vertices in a unit sphere, the greedy reducer only applies
#: the cheap cone test instead of the exact recursion.
GREEDY_EXACT_LIMIT = 24

_contractible_cache: dict[bytes, bool] = {}
_sphere_cache: dict[bytes, int | None] = {}


def _connected(adj, mask: int) -> bool:
    if mask == 0:
        return False
    start = (mask & -mask).bit_length() - 1
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v] & mask
        frontier = nxt & ~seen
        seen |= nxt
    return seen & mask == mask


def _cone_apex(adj, mask: int) -> int | None:
    """A vertex adjacent to every other vertex of the mask, if one exists."""
    for v in _bits(mask):
        if (adj[v] & mask) | (1 << v) == mask:
            return v
    return None


def _contractible(adj, mask: int, memo: dict[int, bool]) -> bool:
    k = _popcount(mask)
    if k == 0:
        return False
    if k == 1:
        return True
    cached = memo.get(mask)
    if cached is not None:
        return cached
    if _cone_apex(adj, mask) is not None:
        memo[mask] = True
        return True
    if not _connected(adj, mask):
        memo[mask] = False
        return False
    result = False
    order = sorted(_bits(mask), key=lambda v: _popcount(adj[v] & mask))
    for v in order:
        sphere = adj[v] & mask
        if _contractible(adj, sphere, memo) and _contractible(adj, mask & ~(1 << v), memo):
            result = True
            break
    memo[mask] = result
    return result


def is_contractible(A: Graph) -> bool:
    """Exact recursive contractibility; the empty graph is not contractible."""
    if A.n == 0:
        return False
    full = (1 << A.n) - 1
    # cheap decisions before any canonical-code work
    if A.n <= 2:
        return A.n == 1 or A.adj[0] != 0
    if _cone_apex(A.adj, full) is not None:
        return True
    if not _connected(A.adj, full):
        return False
    if A.n <= GREEDY_EXACT_LIMIT:
        try:
            key = canonical_code(A)
        except SizeLimit:
            key = None
        if key is not None and key in _contractible_cache:
            return _contractible_cache[key]
        value = _contractible(A.adj, full, {})
        if key is not None:
            _contractible_cache[key] = value
        return value
    return _contractible(A.adj, full, {})


def _sphere_dim(adj, mask: int, memo: dict[int, int | None], cmemo: dict[int, bool]):
    if mask == 0:
        return -1
    if mask in memo:
        return memo[mask]
    memo[mask] = None  # cut accidental cycles; masks only shrink, so this is safe
    d = None
    ok = True
    for v in _bits(mask):
        sd = _sphere_dim(adj, adj[v] & mask, memo, cmemo)
        if sd is None:
            ok = False
            break
        if d is None:
            d = sd + 1
        elif sd + 1 != d:
            ok = False
            break
    result = None
    if ok:
        for v in _bits(mask):
            if _contractible(adj, mask & ~(1 << v), cmemo):
                result = d
                break
    memo[mask] = result
    return result


def is_sphere(A: Graph) -> int | None:
    """Sphere dimension of the graph, or None.  The empty graph has
    dimension -1; a graph is a d-sphere when every unit sphere is a
    (d-1)-sphere and deleting some vertex leaves a contractible graph."""
    if A.n == 0:
        return -1
    key = None
    if A.n <= CANONICAL_CAP:
        key = canonical_code(A)
        if key in _sphere_cache:
            return _sphere_cache[key]
    value = _sphere_dim(A.adj, (1 << A.n) - 1, {}, {})
    if key is not None:
        _sphere_cache[key] = value
    return value


# ---------------------------------------------------------------------------
# Moves


@dataclass(frozen=True)
class Contract:
    """Delete vertex ``v``; legal when its unit sphere is contractible.
    Vertices above ``v`` shift down by one."""

    v: int


@dataclass(frozen=True)
class Expand:
    """Add a vertex joined to ``attach``; legal when the induced subgraph on
    ``attach`` is contractible.  The new vertex receives id ``n``."""

    attach: tuple[int, ...]
    label: Hashable = None


@dataclass(frozen=True)
class EdgeRefine:
    """Replace edge (a, b) by a new vertex joined to a, b and their common
    neighbors, then drop the edge.  Legal for every edge."""

    a: int
    b: int
    label: Hashable = None


@dataclass(frozen=True)
class EdgeRemove:
    """Delete edge (a, b); legal when for one endpoint ``x`` both ``S(x)``
    and ``S(x)`` minus the other endpoint are contractible."""

    a: int
    b: int


Move = Contract | Expand | EdgeRefine | EdgeRemove


def _delete_vertex(A: Graph, v: int) -> Graph:
    keep = [u for u in range(A.n) if u != v]
    low = (1 << v) - 1
    adj = []
    for u in keep:
        m = A.adj[u] & ~(1 << v)
        adj.append((m & low) | ((m & ~low & ~(1 << v)) >> 1))
    labels = None if A.labels is None else tuple(A.labels[u] for u in keep)
    return Graph(tuple(adj), labels)


def _add_vertex(A: Graph, attach: tuple[int, ...], label: Hashable) -> Graph:
    n = A.n
    mask = 0
    for u in attach:
        A._check(u)
        mask |= 1 << u
    adj = [A.adj[u] | (1 << n) if mask & (1 << u) else A.adj[u] for u in range(n)]
    adj.append(mask)
    labels = None
    if A.labels is not None:
        labels = A.labels + (label,)
    return Graph(tuple(adj), labels)


def _drop_edge(A: Graph, a: int, b: int) -> Graph:
    adj = list(A.adj)
    adj[a] &= ~(1 << b)
    adj[b] &= ~(1 << a)
    return Graph(tuple(adj), A.labels)


def _sphere_vertices(A: Graph, v: int) -> tuple[int, ...]:
    return tuple(_bits(A.adj[v]))


def apply_move(A: Graph, move: Move) -> tuple[Graph, dict]:
    """Apply a move after validating its legality certificate.

    Returns the new graph and the certificate that was checked; raises
    :class:`IllegalMove` when the certificate fails.
    """
    if isinstance(move, Contract):
        A._check(move.v)
        sphere = A.adj[move.v]
        if not _contractible(A.adj, sphere, {}):
            raise IllegalMove(f"unit sphere of vertex {move.v} is not contractible")
        return _delete_vertex(A, move.v), {
            "kind": "Contract",
            "sphere": tuple(_bits(sphere)),
        }
    if isinstance(move, Expand):
        mask = 0
        for u in move.attach:
            A._check(u)
            mask |= 1 << u
        if not _contractible(A.adj, mask, {}):
            raise IllegalMove(f"attachment set {move.attach} is not contractible")
        return _add_vertex(A, tuple(move.attach), move.label), {
            "kind": "Expand",
            "attach": tuple(sorted(move.attach)),
        }
    if isinstance(move, EdgeRefine):
        a, b = move.a, move.b
        if not A.has_edge(a, b):
            raise IllegalMove(f"({a},{b}) is not an edge")
        common = A.adj[a] & A.adj[b]
        attach = tuple(sorted({a, b} | set(_bits(common))))
        mask = 0
        for u in attach:
            mask |= 1 << u
        if not _contractible(A.adj, mask, {}):  # cone over a; cannot fail
            raise IllegalMove("refinement ball is not contractible")
        B = _add_vertex(A, attach, move.label)
        return _drop_edge(B, a, b), {"kind": "EdgeRefine", "attach": attach}
    if isinstance(move, EdgeRemove):
        a, b = move.a, move.b
        if not A.has_edge(a, b):
            raise IllegalMove(f"({a},{b}) is not an edge")
        for x, y in ((a, b), (b, a)):
            sphere = A.adj[x]
            if _contractible(A.adj, sphere, {}) and _contractible(
                A.adj, sphere & ~(1 << y), {}
            ):
                return _drop_edge(A, a, b), {
                    "kind": "EdgeRemove",
                    "endpoint": x,
                    "sphere": tuple(_bits(sphere)),
                }
        raise IllegalMove(
            f"neither endpoint of ({a},{b}) certifies the deletion"
        )
    raise InvalidInput(f"unknown move {move!r}")


def move_is_legal(A: Graph, move: Move) -> bool:
    try:
        apply_move(A, move)
        return True
    except IllegalMove:
        return False


@dataclass(frozen=True)
class TraceStep:
    move: Move
    certificate: dict


@dataclass(frozen=True)
class HomotopyTrace:
    """A validated move sequence between two graphs."""

    start: Graph
    steps: tuple[TraceStep, ...]
    end: Graph

    def __len__(self) -> int:
        return len(self.steps)

    def intermediates(self) -> Iterator[Graph]:
        """Yield every graph along the trace, re-validating certificates."""
        cur = self.start
        yield cur
        for step in self.steps:
            cur, cert = apply_move(cur, step.move)
            if cert != step.certificate:
                raise CertificateFailure(
                    self.steps.index(step), "recorded certificate does not match"
                )
            yield cur

    def replay(self) -> Graph:
        """Re-apply all moves with certificate checks; verify the endpoint."""
        for cur in self.intermediates():
            pass
        if cur.adj != self.end.adj:
            raise CertificateFailure(len(self.steps), "trace does not land on its end graph")
        return cur


def _run(start: Graph, moves: list[Move]) -> tuple[Graph, tuple[TraceStep, ...]]:
    cur = start
    steps = []
    for m in moves:
        cur, cert = apply_move(cur, m)
        steps.append(TraceStep(m, cert))
    return cur, tuple(steps)


def trace_from_moves(start: Graph, moves: list[Move]) -> HomotopyTrace:
    end, steps = _run(start, moves)
    return HomotopyTrace(start, steps, end)


# ---------------------------------------------------------------------------
# The intersection-to-incidence deformation


def nonnested_pairs(G: Complex) -> list[tuple[int, int]]:
    """Index pairs of sets that overlap without being nested, in canonical
    order."""
    sets = [frozenset(s) for s in G.sets]
    out = []
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if sets[i] & sets[j] and not (sets[i] <= sets[j] or sets[j] <= sets[i]):
                out.append((i, j))
    return out


def psi_to_phi_trace(G: Complex) -> HomotopyTrace:
    """Deform the intersection graph of ``G`` into its incidence graph.

    Every overlapping non-nested pair is handled by an edge refinement
    followed by contracting the auxiliary vertex; the contraction certificate
    holds exactly when the pair's common link is contractible, which is what
    refined complexes guarantee.  A failing certificate raises
    :class:`IntersectionNotContractible` and identifies the offending pair.
    """
    start = psi(G)
    target = phi(G)
    cur = start
    steps: list[TraceStep] = []
    for i, j in nonnested_pairs(G):
        cur, cert = apply_move(cur, EdgeRefine(i, j))
        steps.append(TraceStep(EdgeRefine(i, j), cert))
        w = cur.n - 1
        try:
            cur, cert = apply_move(cur, Contract(w))
        except IllegalMove:
            raise IntersectionNotContractible(G.sets[i], G.sets[j]) from None
        steps.append(TraceStep(Contract(w), cert))
    if cur.adj != target.adj:
        raise CertificateFailure(len(steps), "deformation did not reach the incidence graph")
    return HomotopyTrace(start, tuple(steps), cur)


# ---------------------------------------------------------------------------
# Refinement of a graph as a trace


def refinement_graph(A: Graph) -> Graph:
    """Graph with one vertex per clique of ``A`` and edges for strict
    containment (the refinement of ``A``); labels are the cliques."""
    cl = sorted(cliques(A), key=_sort_key)
    sets = [frozenset(c) for c in cl]
    n = len(cl)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if sets[i] < sets[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(tuple(adj), tuple(cl))


def barycentric_trace(A: Graph, cap: int = 40) -> HomotopyTrace:
    """Trace from ``A`` to its refinement graph.

    Original edges are refined first; larger cliques then receive hub vertices
    attached to the representatives of their proper subcliques; finally the
    spurious adjacencies left behind by refinement are removed edge by edge.

    The edge-removal certificates require contractible endpoint spheres, which
    exist on trees, simplices, cycles, wedges and disk-like graphs but never
    on a closed surface (every sphere there is a circle).  Inputs whose
    cleanup gets stuck raise :class:`IllegalMove`.
    """
    if A.n > cap:
        raise SizeLimit(f"refinement trace capped at {cap} vertices, got {A.n}")
    all_cliques = sorted(cliques(A), key=_sort_key)
    start = Graph(A.adj, tuple((v,) for v in range(A.n)))
    cur = start
    steps: list[TraceStep] = []
    rep: dict[tuple[int, ...], int] = {(v,): v for v in range(A.n)}

    def push(move: Move):
        nonlocal cur
        cur2, cert = apply_move(cur, move)
        steps.append(TraceStep(move, cert))
        cur = cur2

    for K in all_cliques:
        if len(K) == 2:
            push(EdgeRefine(rep[(K[0],)], rep[(K[1],)], label=K))
            rep[K] = cur.n - 1
        elif len(K) > 2:
            attach = tuple(
                sorted(
                    rep[sub]
                    for sub in rep
                    if len(sub) < len(K) and set(sub) < set(K)
                )
            )
            push(Expand(attach, label=K))
            rep[K] = cur.n - 1

    # Remove adjacencies that do not correspond to nested cliques.  An edge
    # may only become removable after its neighborhood has been thinned, so
    # keep sweeping until the queue empties.
    def extra_edges() -> list[tuple[int, int]]:
        bad = []
        for a, b in cur.edges():
            sa, sb = set(cur.labels[a]), set(cur.labels[b])
            if not (sa < sb or sb < sa):
                bad.append((a, b))
        return sorted(bad, key=lambda e: (cur.labels[e[0]], cur.labels[e[1]]))

    queue = extra_edges()
    while queue:
        progress = False
        deferred = []
        for a, b in queue:
            try:
                push(EdgeRemove(a, b))
                progress = True
            except IllegalMove:
                deferred.append((a, b))
        if not progress:
            raise IllegalMove(
                "refinement cleanup is stuck: no endpoint sphere certifies any "
                "remaining deletion (closed-surface inputs are not supported)"
            )
        queue = deferred

    # The end graph must match the refinement graph once vertices are put in
    # canonical clique order.
    target = refinement_graph(A)
    order = sorted(range(cur.n), key=lambda v: _sort_key(cur.labels[v]))
    pos = {v: i for i, v in enumerate(order)}
    perm_adj = [0] * cur.n
    for v in range(cur.n):
        m = 0
        for u in _bits(cur.adj[v]):
            m |= 1 << pos[u]
        perm_adj[pos[v]] = m
    if tuple(perm_adj) != target.adj:
        raise CertificateFailure(len(steps), "refinement trace missed its target")
    return HomotopyTrace(start, tuple(steps), cur)


# ---------------------------------------------------------------------------
# Product extension (homotopy compatibility of the strong product)


def product_extension_trace(A: Graph, attach: tuple[int, ...], B: Graph) -> HomotopyTrace:
    """Extend ``strong_product(A, B)`` to ``strong_product(A + x, B)`` where
    the new vertex ``x`` is glued to the contractible subgraph ``attach``.

    One expansion per vertex of ``B``; the k-th attachment set must be
    contractible, otherwise :class:`CertificateFailure` carries ``k``.
    """
    mask = 0
    for u in attach:
        A._check(u)
        mask |= 1 << u
    if not _contractible(A.adj, mask, {}):
        raise IllegalMove(f"attachment set {attach} is not contractible in the factor")
    plainA = Graph(A.adj)
    plainB = Graph(B.adj)
    A2 = _add_vertex(plainA, tuple(attach), None)
    start = strong_product(plainA, plainB)
    target = strong_product(A2, plainB)
    m = B.n
    cur = start
    steps: list[TraceStep] = []
    for k in range(m):
        closed = {k} | set(_bits(B.adj[k]))
        U = sorted(
            {c * m + y for c in attach for y in closed}
            | {A.n * m + j for j in _bits(B.adj[k]) if j < k}
        )
        try:
            cur, cert = apply_move(cur, Expand(tuple(U)))
        except IllegalMove as exc:
            raise CertificateFailure(k, str(exc)) from None
        steps.append(TraceStep(Expand(tuple(U)), cert))
    if cur.adj != target.adj:
        raise CertificateFailure(m, "product extension missed its target")
    return HomotopyTrace(start, tuple(steps), cur)


# ---------------------------------------------------------------------------
# Greedy reduction


@dataclass(frozen=True)
class ReduceResult:
    graph: Graph
    trace: HomotopyTrace
    status: str  # "point" or "unknown"


def _greedy_moves(A: Graph) -> tuple[Graph, list[Move]]:
    cur = A
    moves: list[Move] = []
    while True:
        pick = None
        for v in sorted(range(cur.n), key=lambda v: (cur.degree(v), v)):
            sphere = cur.adj[v]
            if sphere == 0:
                continue
            if _popcount(sphere) > GREEDY_EXACT_LIMIT:
                if _cone_apex(cur.adj, sphere) is None:
                    continue
            elif not _contractible(cur.adj, sphere, {}):
                continue
            pick = v
            break
        if pick is None or cur.n == 1:
            return cur, moves
        moves.append(Contract(pick))
        cur = _delete_vertex(cur, pick)


def _expansion_candidates(A: Graph) -> Iterator[tuple[int, ...]]:
    """Contractible attachment sets of up to four vertices.

    Connected induced subgraphs on at most three vertices are automatically
    contractible; four-vertex candidates are filtered by the exact check
    (a hollow 4-cycle is connected but not contractible)."""
    for v in range(A.n):
        yield (v,)
    for a, b in A.edges():
        yield (a, b)
    triples = set()
    for a, b in A.edges():
        for c in _bits(A.adj[a] | A.adj[b]):
            key = tuple(sorted({a, b, c}))
            if len(key) == 3 and key not in triples:
                triples.add(key)
                yield key
    seen4 = set()
    for t in sorted(triples):
        reach = A.adj[t[0]] | A.adj[t[1]] | A.adj[t[2]]
        for d in _bits(reach):
            key = tuple(sorted({*t, d}))
            if len(key) != 4 or key in seen4:
                continue
            seen4.add(key)
            mask = 0
            for u in key:
                mask |= 1 << u
            if _contractible(A.adj, mask, {}):
                yield key


def homotopy_reduce(
    A: Graph, max_expansions: int = 0, cap: int = CANONICAL_CAP
) -> ReduceResult:
    """Greedy contraction to a local minimum, optionally followed by a
    bounded expansion search.

    The result is ``"point"`` when K_1 is reached (a machine-checkable proof
    that the input deforms to a point) and ``"unknown"`` otherwise; failure to
    reduce proves nothing.
    """
    base = Graph(A.adj)
    cur, moves = _greedy_moves(base)
    if max_expansions > 0 and cur.n > 1:
        seen = set()
        budget = max_expansions
        while budget > 0 and cur.n > 1:
            improved = False
            for W in _expansion_candidates(cur):
                if budget <= 0:
                    break
                budget -= 1
                probe = _add_vertex(cur, W, None)
                after, extra = _greedy_moves(probe)
                if after.n < cur.n:
                    moves.append(Expand(W))
                    moves += extra
                    cur = after
                    improved = True
                    break
                if after.n <= cap:
                    code = canonical_code(after)
                    if code in seen:
                        continue
                    seen.add(code)
            if not improved:
                break
    end, steps = _run(base, moves)
    trace = HomotopyTrace(base, steps, end)
    status = "point" if end.n == 1 else "unknown"
    return ReduceResult(end, trace, status)
