"""Finite abstract simplicial complexes with canonical storage.

A complex is a finite family of non-empty integer sets closed under taking
non-empty subsets.  Sets are stored as sorted tuples and the family is sorted
by (cardinality, lexicographic), so two complexes are equal exactly when their
stored tuples are equal.  All values are immutable; operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import Duplicate, EmptySet, InvalidInput, MissingFace, SizeLimit

#: Largest allowed set cardinality.  Keeps subset closure, chain enumeration
#: and clique search tractable at desk scale.
MAX_CARDINALITY = 16


def _normalize(s: Iterable[int]) -> tuple[int, ...]:
    t = tuple(sorted(set(s)))
    if not t:
        raise EmptySet("complexes may not contain the empty set")
    for v in t:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise InvalidInput(f"vertex labels must be non-negative integers, got {v!r}")
    if len(t) > MAX_CARDINALITY:
        raise SizeLimit(f"set of cardinality {len(t)} exceeds cap {MAX_CARDINALITY}")
    return t


def _sort_key(s: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    return (len(s), s)


@dataclass(frozen=True)
class FVector:
    """Simplex counts by dimension: ``counts[k]`` is the number of sets of
    cardinality ``k + 1``."""

    counts: tuple[int, ...]

    def __post_init__(self):
        if self.counts and self.counts[-1] == 0:
            raise InvalidInput("trailing f-vector entries must be nonzero")

    def euler(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.counts))

    def __iter__(self):
        return iter(self.counts)

    def __getitem__(self, k: int) -> int:
        return self.counts[k]

    def __len__(self) -> int:
        return len(self.counts)


@dataclass(frozen=True)
class Complex:
    """A downward-closed family of non-empty vertex sets.

    Construct through :func:`validate` or :func:`from_facets`; the raw
    constructor trusts its argument.
    """

    sets: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, s) -> bool:
        return tuple(sorted(s)) in self._index

    @cached_property
    def _index(self) -> dict[tuple[int, ...], int]:
        return {s: i for i, s in enumerate(self.sets)}

    def index(self, s) -> int:
        """Position of a set in canonical order."""
        return self._index[tuple(sorted(s))]

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        seen: set[int] = set()
        for s in self.sets:
            seen.update(s)
        return tuple(sorted(seen))

    def dim(self) -> int:
        """Largest set cardinality minus one; -1 for the empty complex."""
        return max((len(s) for s in self.sets), default=0) - 1

    def f_vector(self) -> FVector:
        counts = [0] * (self.dim() + 1)
        for s in self.sets:
            counts[len(s) - 1] += 1
        return FVector(tuple(counts))

    def euler_characteristic(self) -> int:
        return sum((-1) ** (len(s) - 1) for s in self.sets)

    def relabel(self, mapping: dict[int, int]) -> "Complex":
        """Apply a vertex relabeling; the result is re-canonicalized."""
        out = [tuple(sorted(mapping[v] for v in s)) for s in self.sets]
        return validate(out)


def validate(sets: Iterable[Iterable[int]]) -> Complex:
    """Check a family for the complex axioms and return it canonically stored.

    Raises :class:`EmptySet`, :class:`Duplicate` or :class:`MissingFace`; the
    missing face reported is the first in canonical order.
    """
    normed = [_normalize(s) for s in sets]
    ordered = sorted(normed, key=_sort_key)
    for a, b in zip(ordered, ordered[1:]):
        if a == b:
            raise Duplicate(f"set {a} appears more than once")
    present = set(ordered)
    worst = None  # canonically smallest missing face, for stable diagnostics
    for s in ordered:
        for k in range(1, len(s)):
            for sub in combinations(s, k):
                if sub not in present and (worst is None or _sort_key(sub) < _sort_key(worst[1])):
                    worst = (s, sub)
    if worst is not None:
        raise MissingFace(*worst)
    return Complex(tuple(ordered))


def from_facets(facets: Iterable[Iterable[int]]) -> Complex:
    """Downward closure of the given facets."""
    facets = list(facets)
    if not facets:
        raise InvalidInput("need at least one facet")
    closure: set[tuple[int, ...]] = set()
    for f in facets:
        top = _normalize(f)
        for k in range(1, len(top) + 1):
            closure.update(combinations(top, k))
    return Complex(tuple(sorted(closure, key=_sort_key)))


def f_vector(G: Complex) -> FVector:
    return G.f_vector()


def euler_characteristic(G: Complex) -> int:
    return G.euler_characteristic()


def barycentric_refine(G: Complex) -> Complex:
    """Complex of all non-empty chains x_1 < x_2 < ... of sets of ``G``.

    Vertices of the output are the indices of the sets of ``G`` in canonical
    order, so the output has exactly ``len(G)`` base vertices.
    """
    n = len(G)
    # above[i] = indices of strict supersets of set i; canonical order makes
    # every chain an increasing index tuple.
    above: list[list[int]] = [[] for _ in range(n)]
    as_sets = [frozenset(s) for s in G.sets]
    for i in range(n):
        for j in range(i + 1, n):
            if len(as_sets[i]) < len(as_sets[j]) and as_sets[i] < as_sets[j]:
                above[i].append(j)

    chains: list[tuple[int, ...]] = []

    def extend(path: list[int]):
        chains.append(tuple(path))
        for j in above[path[-1]]:
            path.append(j)
            extend(path)
            path.pop()

    for i in range(n):
        extend([i])
    return Complex(tuple(sorted(chains, key=_sort_key)))


def product_cells(G: Complex, H: Complex) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Ordered pairs of sets, row-major in the canonical orders.

    The pair family is not itself a simplicial complex; it serves as the
    shared vertex set of the product graphs.
    """
    return [(x, y) for x in G.sets for y in H.sets]
