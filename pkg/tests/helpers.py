"""Shared test utilities."""

import random

from scx import Complex, from_facets
from scx.catalog import COMPLEXES


def random_complex(rng: random.Random, max_vertices: int = 10, max_dim: int = 3,
                   max_facets: int = 6) -> Complex:
    """A complex from a random facet family."""
    nv = rng.randint(1, max_vertices)
    facets = []
    for _ in range(rng.randint(1, max_facets)):
        k = min(rng.randint(1, max_dim + 1), nv)
        facets.append(rng.sample(range(nv), k))
    return from_facets(facets)


def catalog_complexes(max_sets: int | None = None):
    """(name, complex) pairs from the named catalog."""
    out = []
    for name in sorted(COMPLEXES):
        C = COMPLEXES[name]()
        if max_sets is None or len(C) <= max_sets:
            out.append((name, C))
    return out
