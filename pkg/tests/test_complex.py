import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import brute
from wellcover import (
    UNIT_IDEAL,
    ComplexError,
    SimplicialComplex,
    connected_components,
    induced_subcollection,
    is_forest,
    is_leaf,
    leaves,
    localize,
    localize_at,
)
from wellcover.complex import ONLY_FACET, normalize_complex
from wellcover.errors import CapExceeded
from wellcover.generate import random_complex

S = SimplicialComplex.from_facets


def facet_sets(cx):
    return [frozenset(f) for f in cx.facets]


def test_normalize_example(example):
    assert len(example) == 4
    assert example.vertices == ("x1", "x2", "x3", "x4", "x5", "x6")


def test_normalize_duplicates_and_maximality():
    cx, dropped = normalize_complex([["x", "y"], ["y", "x"]])
    assert facet_sets(cx) == [frozenset("xy")] and dropped == [(1, 0)]
    cx, dropped = normalize_complex([["x", "y"], ["x", "y", "z"]])
    assert facet_sets(cx) == [frozenset("xyz")] and dropped == [(0, 1)]


def test_normalize_rejects_empty():
    with pytest.raises(ComplexError):
        normalize_complex([])
    with pytest.raises(ComplexError):
        normalize_complex([["a"], []])


def test_natural_vertex_order():
    assert S(["x10 x2", "x1"]).vertices == ("x1", "x2", "x10")


def test_induced_subcollection(example):
    sub = induced_subcollection(example, ["x3", "x4", "x5", "x6"])
    assert facet_sets(sub) == [frozenset({"x3", "x4", "x5"}), frozenset({"x3", "x5", "x6"})]
    assert induced_subcollection(example, example.vertices) == example
    assert induced_subcollection(example, ["x1", "x2"]).is_empty
    with pytest.raises(ComplexError):
        induced_subcollection(example, ["x9"])


def test_components(example):
    assert len(connected_components(example)) == 1
    assert len(connected_components(S(["a b", "c d"]))) == 2
    comps = connected_components(S(["a b", "b c", "d"]))
    assert [facet_sets(c) for c in comps] == [[frozenset("ab"), frozenset("bc")], [frozenset("d")]]


def test_is_leaf(example):
    check = is_leaf(example, 2)
    assert check and check.witness == 3 and check.free_vertices == ("x2",)
    assert not is_leaf(example, 0)
    assert is_leaf(S(["a b"]), 0).witness == ONLY_FACET
    assert is_leaf(example, ["x1", "x2", "x3"])  # by vertex set
    with pytest.raises(ComplexError):
        is_leaf(example, ["x1", "x2"])


def test_leaves_match_brute(example):
    fs = facet_sets(example)
    assert leaves(example) == [f for f in range(4) if brute.is_leaf(fs, f)]


def test_is_forest(example, triangle):
    assert is_forest(example)
    check = is_forest(triangle)
    assert not check and check.counterexample == (0, 1, 2)
    assert is_forest(S(["a b c"]))


def test_forest_cap():
    big = S([f"v{i} w{i}" for i in range(6)])
    with pytest.raises(CapExceeded):
        is_forest(big, cap=5)


def test_localize(example):
    # leaf F2 = x3x5x6: G minus F2 gives x4, x1x2, x1x4; the last is not minimal
    delta = localize(example, 1)
    assert facet_sets(delta) == [frozenset({"x4"}), frozenset({"x1", "x2"})]
    assert facet_sets(localize(S(["a b", "c d"]), 0)) == [frozenset("cd")]
    # prime P1 = (x1, x3, x5)
    at = localize_at(example, ["x1", "x3", "x5"])
    assert sorted(map(sorted, facet_sets(at))) == [["x1", "x3"], ["x3", "x5"]]


def test_localize_unit_ideal():
    # removing a facet never empties another maximal facet, but dropping
    # variables at a prime can
    assert localize_at(S(["a b", "c d"]), ["a", "b"]) is UNIT_IDEAL
    with pytest.raises(ComplexError):
        localize(S(["a b"]), 0)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**9))
def test_forest_and_leaves_agree_with_brute(seed):
    cx = random_complex(random.Random(seed), 5, 7)
    fs = facet_sets(cx)
    assert bool(is_forest(cx)) == brute.is_forest(fs)
    assert leaves(cx) == [f for f in range(len(fs)) if brute.is_leaf(fs, f)]
    check = is_forest(cx)
    if not check:
        coll = [fs[i] for i in check.counterexample]
        assert not any(brute.is_leaf(coll, j) for j in range(len(coll)))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9))
def test_forests_are_hereditary_and_localize_to_forests(seed):
    cx = random_complex(random.Random(seed), 5, 7)
    if not is_forest(cx) or len(cx) < 2:
        return
    for f in leaves(cx):
        assert is_forest(cx.sub([i for i in range(len(cx)) if i != f]))
        delta = localize(cx, f)
        assert delta is not UNIT_IDEAL
        assert is_forest(delta)
