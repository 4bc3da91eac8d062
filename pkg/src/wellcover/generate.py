"""Instance generators for property tests and the CLI's ``--seed`` mode.

Random instances come from a ``random.Random`` seeded by the caller, so a
seed reproduces an instance exactly:

* :func:`random_complex` draws ``n`` in ``[1, max_vertices]`` and ``q`` in
  ``[1, max_facets]``, then ``q`` random vertex subsets of ``x1..xn`` whose
  sizes lean small (the smaller of two uniform draws in ``[1, n]``), and
  keeps the inclusion-maximal ones.
* :func:`random_forest` redraws :func:`random_complex` until it is a forest.
* :func:`random_graph` draws ``n`` in ``[2, max_vertices]`` and up to
  ``max_edges`` distinct edges on ``v1..vn``.

:func:`complexes_up_to_isomorphism` enumerates every complex with few facets
exactly once per isomorphism class.
"""

from __future__ import annotations

import itertools
import random

from .complex import SimplicialComplex, is_forest
from .graphs import Graph


def random_complex(rng: random.Random, max_facets: int = 5, max_vertices: int = 8) -> SimplicialComplex:
    n = rng.randint(1, max_vertices)
    q = rng.randint(1, max_facets)
    names = [f"x{i + 1}" for i in range(n)]
    raw = []
    for _ in range(q):
        size = min(rng.randint(1, n), rng.randint(1, n))
        raw.append(sorted(rng.sample(range(n), size)))
    return SimplicialComplex.from_facets([[names[i] for i in f] for f in raw])


def random_forest(rng: random.Random, max_facets: int = 5, max_vertices: int = 8) -> SimplicialComplex:
    while True:
        cx = random_complex(rng, max_facets, max_vertices)
        if is_forest(cx):
            return cx


def random_graph(rng: random.Random, max_edges: int = 8, max_vertices: int = 8) -> Graph:
    n = rng.randint(2, max_vertices)
    pairs = list(itertools.combinations(range(n), 2))
    m = rng.randint(1, min(max_edges, len(pairs)))
    chosen = rng.sample(pairs, m)
    return Graph.from_edges([(f"v{a + 1}", f"v{b + 1}") for a, b in chosen])


def _count_vectors(length: int, budget: int):
    """Nonnegative integer vectors of ``length`` with sum at most ``budget``."""
    if length == 0:
        yield ()
        return
    for first in range(budget + 1):
        for rest in _count_vectors(length - 1, budget - first):
            yield (first,) + rest


def complexes_up_to_isomorphism(max_facets: int, max_vertices: int):
    """One complex per isomorphism class with at most the given sizes.

    A complex on ``q`` facets without isolated vertices is determined, up to
    renaming vertices, by how many vertices lie in exactly each nonempty set
    of facets. Facet permutations act on those counts; only the
    lexicographically least count vector of each orbit is kept.
    """
    for q in range(1, max_facets + 1):
        types = list(range(1, 1 << q))
        slot = {t: n for n, t in enumerate(types)}
        perm_slots = []
        for p in itertools.permutations(range(q)):
            image = []
            for t in types:
                u = 0
                for j in range(q):
                    if t >> j & 1:
                        u |= 1 << p[j]
                image.append(slot[u])
            perm_slots.append(image)
        # facet j contains type t iff bit j is set
        holds = [[n for n, t in enumerate(types) if t >> j & 1] for j in range(q)]
        escapes = {
            (j, k): [n for n, t in enumerate(types) if t >> j & 1 and not t >> k & 1]
            for j in range(q)
            for k in range(q)
            if j != k
        }
        for counts in _count_vectors(len(types), max_vertices):
            if not all(any(counts[n] for n in h) for h in holds):
                continue
            if not all(any(counts[n] for n in e) for e in escapes.values()):
                continue
            canonical = True
            for image in perm_slots:
                moved = [0] * len(types)
                for n, c in enumerate(counts):
                    moved[image[n]] = c
                if tuple(moved) < counts:
                    canonical = False
                    break
            if not canonical:
                continue
            facets = [[] for _ in range(q)]
            v = 0
            for n, t in enumerate(types):
                for _ in range(counts[n]):
                    v += 1
                    for j in range(q):
                        if t >> j & 1:
                            facets[j].append(f"x{v}")
            yield SimplicialComplex.from_facets(facets)


def forests_up_to_isomorphism(max_facets: int, max_vertices: int):
    for cx in complexes_up_to_isomorphism(max_facets, max_vertices):
        if is_forest(cx):
            yield cx
