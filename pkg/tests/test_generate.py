import itertools
import random

from wellcover import is_forest
from wellcover.generate import (
    complexes_up_to_isomorphism,
    forests_up_to_isomorphism,
    random_complex,
    random_forest,
    random_graph,
)


def canonical(facets, n):
    """Least relabelling of a facet family over all vertex permutations."""
    best = None
    for p in itertools.permutations(range(n)):
        form = tuple(sorted(tuple(sorted(p[v] for v in f)) for f in facets))
        if best is None or form < best:
            best = form
    return best


def brute_classes(max_facets, n):
    nonempty = [frozenset(s) for r in range(1, n + 1) for s in itertools.combinations(range(n), r)]
    classes = set()
    for q in range(1, max_facets + 1):
        for fam in itertools.combinations(nonempty, q):
            if any(a < b or b < a for a, b in itertools.combinations(fam, 2)):
                continue
            classes.add(canonical(fam, n))
    return classes


def as_ints(cx):
    pos = {v: n for n, v in enumerate(cx.vertices)}
    return [frozenset(pos[v] for v in f) for f in cx.facets]


def test_enumeration_is_exactly_one_per_class():
    n = 4
    produced = [canonical(as_ints(cx), n) for cx in complexes_up_to_isomorphism(3, n)]
    assert len(produced) == len(set(produced))
    assert set(produced) == brute_classes(3, n)


def test_forests_are_forests():
    fs = list(forests_up_to_isomorphism(3, 5))
    assert fs and all(is_forest(cx) for cx in fs)


def test_generators_reproducible():
    for gen in (random_complex, random_forest, random_graph):
        assert gen(random.Random(11)) == gen(random.Random(11))
    cx = random_complex(random.Random(1), 5, 8)
    assert 1 <= len(cx) <= 5 and len(cx.vertices) <= 8
    g = random_graph(random.Random(2), 8, 8)
    assert 1 <= len(g.edges) <= 8
