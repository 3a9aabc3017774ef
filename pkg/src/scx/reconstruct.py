"""Recovering a complex from its intersection or incidence graph, and exact
automorphism groups.

The intersection graph gives the base points away through degrees alone:
a vertex is a base point exactly when its degree is a strict local minimum.
Incidence graphs carry no such local signal (a comparability graph can be
oriented in several ways), so that direction enumerates the consistent
transitive orientations instead and validates each candidate by regenerating
the input graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product
from math import inf
from typing import Sequence

from .complexes import Complex, validate
from .errors import NotAConnectionGraph, ScxError, SizeLimit
from .graphs import Graph, _bits, _popcount, phi, psi

#: Orientation enumeration explores one sign per forcing class; complexes at
#: desk scale have only a handful of classes.
MAX_ORIENTATION_CLASSES = 16

#: Default vertex cap for the exact automorphism search.
AUT_CAP = 40


@dataclass(frozen=True)
class DegreeProfile:
    """Vertex degrees together with the minimum degree among each vertex's
    neighbors (infinity for isolated vertices)."""

    d: tuple[int, ...]
    delta: tuple[float, ...]

    @staticmethod
    def of(A: Graph) -> "DegreeProfile":
        d = tuple(A.degree(v) for v in range(A.n))
        delta = tuple(
            min((d[u] for u in _bits(A.adj[v])), default=inf) for v in range(A.n)
        )
        return DegreeProfile(d, delta)


def zero_dim_vertices(A: Graph) -> tuple[int, ...]:
    """Vertices whose degree is strictly below every neighbor's degree.

    On an intersection graph these are exactly the base points of the
    underlying complex; isolated vertices count (their threshold is
    infinite)."""
    prof = DegreeProfile.of(A)
    return tuple(v for v in range(A.n) if prof.d[v] < prof.delta[v])


def _family_from_atoms(A: Graph, atoms: tuple[int, ...]) -> list[tuple[int, ...]] | None:
    """Assign to every vertex the set of atoms in its closed neighborhood;
    None when the assignment is not injective or misses a vertex."""
    atom_set = set(atoms)
    fam = []
    seen = set()
    for v in range(A.n):
        s = tuple(sorted(a for a in atoms if a == v or A.adj[v] & (1 << a)))
        if not s or s in seen:
            return None
        seen.add(s)
        fam.append(s)
    return fam


def _regenerates(A: Graph, fam: list[tuple[int, ...]], mode: str) -> bool:
    sets = [frozenset(s) for s in fam]
    for v in range(A.n):
        for u in range(v + 1, A.n):
            if mode == "psi":
                expected = bool(sets[v] & sets[u])
            else:
                expected = sets[v] < sets[u] or sets[u] < sets[v]
            if expected != bool(A.adj[v] & (1 << u)):
                return False
    return True


def _try_family(A: Graph, atoms: tuple[int, ...], mode: str) -> Complex | None:
    fam = _family_from_atoms(A, atoms)
    if fam is None:
        return None
    if not _regenerates(A, fam, mode):
        return None
    try:
        return validate(fam)
    except ScxError:
        return None


# -- transitive orientations of an incidence graph ---------------------------


def _forcing_classes(A: Graph) -> list[list[tuple[int, int]]]:
    """Edge classes under the rule that two edges leaving one vertex toward
    non-adjacent endpoints must be oriented the same way at that vertex.

    Each directed edge (a, b) is a node of the forcing structure; (a, b) is
    tied to (a, c) when b and c are non-adjacent, and always to the reverse
    orientation of (b, a).  Classes come back as lists of directed edges that
    point "down" together."""
    edges = A.edges()
    eid = {}
    for k, (a, b) in enumerate(edges):
        eid[(a, b)] = 2 * k  # orientation a -> b
        eid[(b, a)] = 2 * k + 1

    parent = list(range(2 * len(edges)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for v in range(A.n):
        nbrs = list(_bits(A.adj[v]))
        for i, b in enumerate(nbrs):
            for c in nbrs[i + 1 :]:
                if not A.adj[b] & (1 << c):
                    # v -> b forced equal to v -> c
                    union(eid[(v, b)], eid[(v, c)])
                    union(eid[(b, v)], eid[(c, v)])

    groups: dict[int, list[tuple[int, int]]] = {}
    for a, b in edges:
        groups.setdefault(find(eid[(a, b)]), []).append((a, b))
    # merge classes that are each other's reverses to avoid double counting
    out = []
    seen_roots = set()
    for a, b in edges:
        r = find(eid[(a, b)])
        rr = find(eid[(b, a)])
        if r in seen_roots or rr in seen_roots:
            continue
        seen_roots.add(r)
        out.append(groups[r])
    return out


def _orient_candidates(A: Graph):
    """Yield, in a fixed deterministic order, the atom sets of every
    transitive orientation of ``A`` (sources of the order), smallest first."""
    classes = _forcing_classes(A)
    if len(classes) > MAX_ORIENTATION_CLASSES:
        raise SizeLimit(
            f"{len(classes)} orientation classes exceed cap {MAX_ORIENTATION_CLASSES}"
        )
    results = []
    for signs in iter_product((0, 1), repeat=len(classes)):
        down = [0] * A.n  # down[v] bitmask of vertices directly below v
        for cls, s in zip(classes, signs):
            for a, b in cls:
                if s:
                    a, b = b, a
                down[a] |= 1 << b  # a above b
        ok = True
        for v in range(A.n):
            for u in _bits(down[v]):
                if down[u] & ~down[v]:
                    ok = False  # transitivity: below-u must be below-v
                    break
            if not ok:
                break
        if not ok:
            continue
        atoms = tuple(v for v in range(A.n) if not down[v])
        results.append(atoms)
    results.sort()
    return results


def reconstruct_complex(A: Graph) -> Complex:
    """Invert the intersection- or incidence-graph construction.

    The result is verified by regenerating the input graph vertex-for-vertex;
    if no candidate survives, the input is not such a graph and
    :class:`NotAConnectionGraph` is raised.  Base points are labeled by their
    vertex ids."""
    # Intersection-graph route: degrees identify the base points.
    atoms = zero_dim_vertices(A)
    if atoms:
        for mode in ("psi", "phi"):
            result = _try_family(A, atoms, mode)
            if result is not None:
                return result
    # Incidence-graph route: enumerate transitive orientations; take the
    # first valid candidate (by sorted atom ids) for determinism.
    try:
        candidates = _orient_candidates(A)
    except SizeLimit:
        candidates = []
    for cand in candidates:
        result = _try_family(A, cand, "phi")
        if result is not None:
            return result
    raise NotAConnectionGraph(
        "graph is not the intersection or incidence graph of a complex"
    )


# ---------------------------------------------------------------------------
# Automorphisms


@dataclass(frozen=True)
class PermutationGroup:
    """All automorphisms, listed lexicographically."""

    elements: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def generators(self) -> tuple[tuple[int, ...], ...]:
        """A small (greedy) generating set."""
        n = len(self.elements[0]) if self.elements else 0
        identity = tuple(range(n))
        have = {identity}
        gens: list[tuple[int, ...]] = []
        for g in self.elements:
            if g in have:
                continue
            gens.append(g)
            frontier = list(have)
            have = set(have)
            queue = [g]
            while queue:
                x = queue.pop()
                if x in have:
                    continue
                have.add(x)
                for h in gens:
                    queue.append(tuple(x[h[i]] for i in range(n)))
                    queue.append(tuple(h[x[i]] for i in range(n)))
            if len(have) == len(self.elements):
                break
        return tuple(gens)

    def __contains__(self, perm) -> bool:
        return tuple(perm) in set(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _equitable_colors(A: Graph) -> list[int]:
    colors = [0] * A.n
    while True:
        sig = []
        for v in range(A.n):
            sig.append((colors[v], tuple(sorted(colors[u] for u in _bits(A.adj[v])))))
        order = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [order[s] for s in sig]
        if new == colors:
            return colors
        colors = new


def _constrained_order(n: int, adjacency: Sequence[int], colors: list[int]) -> list[int]:
    """Vertex order for the mapping search: smallest color class first, then
    always a vertex with as many already-placed neighbors as possible, so the
    candidate masks prune early."""
    placed: list[int] = []
    placed_mask = 0
    class_size = {c: colors.count(c) for c in set(colors)}
    remaining = set(range(n))
    while remaining:
        best = min(
            remaining,
            key=lambda v: (-_popcount(adjacency[v] & placed_mask), class_size[colors[v]], v),
        )
        placed.append(best)
        placed_mask |= 1 << best
        remaining.remove(best)
    return placed


def _relation_automorphisms(
    n: int, relations: Sequence[Sequence[int]], colors: list[int]
) -> list[tuple[int, ...]]:
    """All permutations preserving each bitmask relation and the coloring."""
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)
    order = _constrained_order(n, relations[0] if relations else [0] * n, colors)

    perms: list[tuple[int, ...]] = []
    image = [-1] * n
    used = [False] * n
    placed_mask = 0
    image_mask = 0

    def backtrack(k: int):
        nonlocal placed_mask, image_mask
        if k == n:
            perms.append(tuple(image))
            return
        v = order[k]
        required = []
        for rel in relations:
            req = 0
            for u in _bits(rel[v] & placed_mask):
                req |= 1 << image[u]
            required.append(req)
        for w in by_color[colors[v]]:
            if used[w]:
                continue
            if any(rel[w] & image_mask != req for rel, req in zip(relations, required)):
                continue
            image[v] = w
            used[w] = True
            placed_mask |= 1 << v
            image_mask |= 1 << w
            backtrack(k + 1)
            placed_mask &= ~(1 << v)
            image_mask &= ~(1 << w)
            used[w] = False
            image[v] = -1

    backtrack(0)
    perms.sort()
    return perms


def automorphism_group(A: Graph, cap: int = AUT_CAP) -> PermutationGroup:
    """Exact adjacency-preserving permutations via backtracking with color
    refinement pruning."""
    n = A.n
    if n > cap:
        raise SizeLimit(f"automorphism search capped at {cap} vertices, got {n}")
    if n == 0:
        return PermutationGroup(((),))
    colors = _equitable_colors(A)
    return PermutationGroup(tuple(_relation_automorphisms(n, [A.adj], colors)))


def complex_automorphisms(G: Complex, cap: int = AUT_CAP) -> PermutationGroup:
    """Permutations of the sets preserving containment both ways.

    Found by backtracking over set indices; candidates are restricted to sets
    of equal cardinality with matching up/down contact counts."""
    n = len(G)
    if n > cap:
        raise SizeLimit(f"automorphism search capped at {cap} sets, got {n}")
    sets = [frozenset(s) for s in G.sets]
    below = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and sets[j] < sets[i]:
                below[i] |= 1 << j
    above = [0] * n
    for i in range(n):
        for j in _bits(below[i]):
            above[j] |= 1 << i

    key = [(len(G.sets[i]), _popcount(below[i]), _popcount(above[i])) for i in range(n)]
    order = {k: i for i, k in enumerate(sorted(set(key)))}
    colors = [order[k] for k in key]
    comparable = [below[i] | above[i] for i in range(n)]
    perms = _relation_automorphisms(n, [comparable, below, above], colors)
    return PermutationGroup(tuple(perms))
