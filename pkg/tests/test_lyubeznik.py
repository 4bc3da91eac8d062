import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wellcover import (
    ComplexError,
    SimplicialComplex,
    barile_witnesses,
    betti_oracle,
    boundary_matrices,
    chain_condition_holds,
    find_well_ordered_covers,
    lyubeznik_complex,
    order_from_wofc,
)
from wellcover.generate import random_complex
from wellcover.lyubeznik import compose, is_rooted, min_generator

S = SimplicialComplex.from_facets


def test_min_generator(example, triangle):
    order = (0, 1, 2, 3)
    m = ["x1", "x3", "x4", "x5", "x6"]  # lcm(F2, F4)
    assert min_generator(example, order, m) == 0
    assert min_generator(example, order, ["x1", "x2", "x3"]) == 2
    assert min_generator(triangle, (0, 1, 2), ["x", "y", "z"]) == 0
    with pytest.raises(ComplexError):
        min_generator(example, order, ["x1"])


def test_example_lyubeznik(example):
    lam = lyubeznik_complex(example, (0, 1, 2, 3))
    assert set(lam.facets) == {(0, 1, 2), (0, 2, 3)}
    assert (1, 3) not in lam
    assert not is_rooted(example.masks, (0, 1, 2, 3), (1, 3))
    ws = barile_witnesses(example, (0, 1, 2, 3))
    top = [w for w in ws if w.face == (0, 1, 2)]
    assert top and top[0].index == 3 and top[0].degree == example.full_mask


def test_single_generator():
    cx = S(["a b"])
    lam = lyubeznik_complex(cx)
    assert lam.faces == ((0,),) and lam.facets == ((0,),)
    ws = barile_witnesses(cx)
    assert [(w.face, w.index) for w in ws] == [((0,), 1)]
    (d1,) = boundary_matrices(lam)
    assert d1.entries == {(0, 0): (1, cx.full_mask)}


def test_triangle_lyubeznik(triangle):
    lam = lyubeznik_complex(triangle, (0, 1, 2))
    assert set(lam.faces) == {(0,), (1,), (2,), (0, 1), (0, 2)}
    assert set(lam.facets) == {(0, 1), (0, 2)}
    ws = barile_witnesses(triangle, (0, 1, 2))
    assert {w.face for w in ws} == {(0, 1), (0, 2)}
    assert all(w.index == 2 and w.degree == triangle.full_mask for w in ws)


def test_order_from_wofc(example, matching, triangle):
    assert order_from_wofc(example, (0, 1, 2)) == (0, 1, 2, 3)
    assert (0, 1, 2) in lyubeznik_complex(example, (0, 1, 2, 3)).facets
    assert lyubeznik_complex(matching, order_from_wofc(matching, (1, 0))).facets == ((1, 0),)
    order = order_from_wofc(triangle, (0, 2))
    assert order == (0, 2, 1)
    assert (0, 2) in lyubeznik_complex(triangle, order).facets
    with pytest.raises(ComplexError):
        order_from_wofc(S(["a b", "b c", "c d"]), (0, 2))


def test_matching_boundary(matching):
    lam = lyubeznik_complex(matching)
    d1, d2 = boundary_matrices(lam)
    ab, cd = matching.masks
    # d_2(e_{12}) = cd * e_1 ... with the sign convention (-1)^j for removing position j
    assert d2.rows == ((0,), (1,))
    assert d2.entries == {(1, 0): (1, ab), (0, 0): (-1, cd)}
    assert not compose(d1, d2)


def test_example_boundaries(example):
    mats = boundary_matrices(lyubeznik_complex(example))
    d3 = mats[2]
    assert len(d3.cols) == 2
    for (r, c), (sign, q) in d3.entries.items():
        face, sub = d3.cols[c], d3.rows[r]
        j = next(j for j in range(3) if face[:j] + face[j + 1 :] == sub)
        lcm_face = lcm_sub = 0
        for g in face:
            lcm_face |= example.masks[g]
        for g in sub:
            lcm_sub |= example.masks[g]
        assert sign == (-1) ** j and q == lcm_face & ~lcm_sub
    assert chain_condition_holds(mats)


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 10**9), st.randoms(use_true_random=False))
def test_random_orders(seed, rnd):
    cx = random_complex(random.Random(seed), 5, 7)
    order = list(range(len(cx)))
    rnd.shuffle(order)
    lam = lyubeznik_complex(cx, order)
    # rootedness straight from the definition, on every subset
    from itertools import combinations

    for r in range(1, len(cx) + 1):
        for face in combinations(range(len(cx)), r):
            assert (face in lam) == is_rooted(cx.masks, order, face)
    assert chain_condition_holds(boundary_matrices(lam))
    oracle = betti_oracle(cx)
    for w in barile_witnesses(cx, lam=lam):
        assert oracle.get(w.index, cx.names_of(w.degree)) >= 1
    for _, seq in find_well_ordered_covers(cx):
        o = order_from_wofc(cx, seq)
        assert tuple(seq) in lyubeznik_complex(cx, o).facets
