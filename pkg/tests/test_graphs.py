import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import brute
from wellcover import (
    BouquetSet,
    ComplexError,
    Graph,
    betti_oracle,
    bouquet_decomposition,
    bouquets_from_wofc,
    is_strongly_disjoint,
    is_well_ordered,
    wofc_from_bouquets,
)
from wellcover.covers import minimal_cover_indices
from wellcover.generate import random_graph
from wellcover.graphs import Bouquet, minimal_edge_covers, strongly_disjoint_designations, well_ordered_edge_order

G = Graph.from_edges


@pytest.fixture
def star():
    return G([("r", "z1"), ("r", "z2"), ("r", "z3")])


@pytest.fixture
def path4():
    return G([("a", "b"), ("b", "c"), ("c", "d")])


def test_graph_validation():
    with pytest.raises(ComplexError):
        G([("a", "a")])
    with pytest.raises(ComplexError):
        G([("a", "b", "c")])
    assert len(G([("a", "b"), ("b", "a")]).edges) == 1


def test_decomposition(star, path4):
    B = bouquet_decomposition(star, [0, 1, 2])
    assert B.bouquets == (Bouquet("r", ("z1", "z2", "z3")),)
    B = bouquet_decomposition(path4, [0, 2])
    assert B.bouquets == (Bouquet("a", ("b",)), Bouquet("c", ("d",)))
    B = bouquet_decomposition(G([("u", "v")]), [0])
    assert B.bouquets == (Bouquet("u", ("v",)),)
    with pytest.raises(ComplexError, match="misses"):
        bouquet_decomposition(path4, [0, 1])
    with pytest.raises(ComplexError, match="minimal"):
        bouquet_decomposition(path4, [0, 1, 2])


def test_strongly_disjoint(star, path4):
    B = bouquet_decomposition(path4, [0, 2])
    assert not is_strongly_disjoint(path4, B, [("a", "b"), ("c", "d")])
    assert list(strongly_disjoint_designations(path4, B)) == []
    Bs = bouquet_decomposition(star, [0, 1, 2])
    for e in star.edges:
        assert is_strongly_disjoint(star, Bs, [e])
    two = G([("a", "b"), ("c", "d")])
    assert is_strongly_disjoint(two, bouquet_decomposition(two, [0, 1]), [("a", "b"), ("c", "d")])
    with pytest.raises(ComplexError):
        is_strongly_disjoint(path4, B, [("b", "c"), ("c", "d")])


def test_wofc_from_bouquets(star):
    B = bouquet_decomposition(star, [0, 1, 2])
    seq = wofc_from_bouquets(star, B, [("r", "z1")])
    assert seq == (1, 2, 0)
    assert is_well_ordered(star.complex, seq)
    two = G([("a", "b"), ("c", "d")])
    assert wofc_from_bouquets(two, bouquet_decomposition(two, [0, 1]), [("a", "b"), ("c", "d")]) == (0, 1)


def test_wofc_from_bouquets_tree():
    # a tree on six vertices: stars at a (leaves b, c) and d (leaves e, f), joined by c-e
    T = G([("a", "b"), ("a", "c"), ("d", "e"), ("d", "f"), ("c", "e")])
    B = BouquetSet((Bouquet("a", ("b", "c")), Bouquet("d", ("e", "f"))))
    seq = wofc_from_bouquets(T, B, [("a", "b"), ("d", "f")])
    assert brute.well_ordered([frozenset(e) for e in T.edges], seq)
    with pytest.raises(ComplexError, match="induced matching"):
        wofc_from_bouquets(T, B, [("a", "c"), ("d", "e")])


def test_wofc_from_bouquets_rejections(path4):
    B = BouquetSet((Bouquet("a", ("b",)),))
    with pytest.raises(ComplexError, match="miss"):
        wofc_from_bouquets(path4, B, [("a", "b")])
    B = BouquetSet((Bouquet("a", ("d",)),))
    with pytest.raises(ComplexError, match="not an edge"):
        wofc_from_bouquets(path4, B, [("a", "d")])


def test_bouquets_from_wofc(star):
    B = bouquets_from_wofc(star, (1, 2, 0))
    assert len(B.bouquets) == 1 and B.designated == (frozenset({"r", "z1"}),)
    two = G([("a", "b"), ("c", "d")])
    B = bouquets_from_wofc(two, (0, 1))
    assert B.designated == (frozenset("ab"), frozenset("cd"))


def test_path_has_no_wofc(path4):
    assert minimal_edge_covers(path4) == [(0, 2)]
    assert well_ordered_edge_order(path4, [(("a", "b")), ("c", "d")]) is None
    with pytest.raises(ComplexError):
        bouquets_from_wofc(path4, (0, 2))


def test_bouquet_json(star):
    data = bouquets_from_wofc(star, (1, 2, 0)).to_json()
    assert data["bouquets"][0]["root"] == "r"
    assert data["bouquets"][0]["designated"] == ["r", "z1"]


def round_trip(graph):
    """Both conversion directions on every minimal edge cover; returns how many covers had an order."""
    n = 0
    for cover in minimal_edge_covers(graph):
        seq = well_ordered_edge_order(graph, cover)
        B = bouquet_decomposition(graph, cover)
        designations = list(strongly_disjoint_designations(graph, B))
        assert (seq is not None) == bool(designations)
        if seq is None:
            continue
        n += 1
        Bw = bouquets_from_wofc(graph, seq)
        assert Bw.edges == B.edges
        back = wofc_from_bouquets(graph, Bw)
        assert set(back) == set(seq) and is_well_ordered(graph.complex, back)
        for d in designations:
            s = wofc_from_bouquets(graph, B, d)
            assert bouquets_from_wofc(graph, s).edges == B.edges
    return n


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**9))
def test_round_trip_random(seed):
    round_trip(random_graph(random.Random(seed), 8, 8))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_strongly_disjoint_bouquets_give_betti_numbers(seed):
    # a strongly disjoint bouquet set covering W with k edges forces b_{k,W}(S/I) != 0
    graph = random_graph(random.Random(seed), 6, 7)
    oracle = betti_oracle(graph.complex)
    edges = [frozenset(e) for e in graph.edges]
    for W in brute.lattice(edges):
        sub_edges = [e for e in edges if e <= W]
        H = G([sorted(e) for e in sub_edges])
        for cover in minimal_cover_indices(H.complex.masks, H.complex.full_mask):
            B = bouquet_decomposition(H, cover)
            if next(strongly_disjoint_designations(H, B), None) is not None:
                assert oracle.get(len(cover), W) >= 1
