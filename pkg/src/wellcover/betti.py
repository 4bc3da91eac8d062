"""Betti numbers, projective dimension and regularity of simplicial forests.

For a forest ``Γ`` the multigraded Betti number ``b_{i,m}(S/F(Γ))`` is 1
exactly when the induced subcollection ``Γ_m`` has a well ordered facet
cover of cardinality ``i``, and 0 otherwise. Only multidegrees in the lcm
lattice (unions of facets) are visited, which makes ``Γ_m`` span all of
``m``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import limits
from .complex import (
    UNIT_IDEAL,
    SimplicialComplex,
    component_indices,
    induced_indices,
    is_forest,
    leaf_witness,
    localize,
    popcount,
)
from .covers import max_induced_matching_weight, well_ordered_covers_of
from .errors import ComplexError, NotAForest
from .oracle import lcm_lattice
from .table import IDEAL, QUOTIENT, BettiDiagram, BettiTable


def _require_forest(cx: SimplicialComplex, cap: int | None) -> None:
    if cx.is_empty:
        raise ComplexError("the empty complex has no facet ideal to resolve")
    check = is_forest(cx, cap)
    if not check:
        raise NotAForest(check.counterexample)


def _lattice_covers(cx: SimplicialComplex):
    """Yield ``(degree_mask, facet_indices, [(cardinality, sequence), ...])``."""
    masks = cx.masks
    for m in lcm_lattice(masks):
        idx = induced_indices(masks, m)
        found = well_ordered_covers_of([masks[i] for i in idx])
        yield m, idx, [(k, tuple(idx[j] for j in seq)) for k, seq in found]


def multigraded_betti(
    cx: SimplicialComplex, cap: int | None = None, convention: str = QUOTIENT
) -> BettiTable:
    """Multigraded Betti table of ``S/F(Γ)`` for a forest, read off its covers.

    Raises :class:`NotAForest` otherwise. Every entry is 1 and no
    multidegree carries two homological indices; both are asserted.
    """
    _require_forest(cx, cap)
    table = BettiTable(cx.vertices)
    for m, _, found in _lattice_covers(cx):
        cards = [k for k, _ in found]
        assert len(cards) <= 1, f"forest law violated at {cx.names_of(m)}: cardinalities {cards}"
        for k in cards:
            table.add(cx.names_of(m), k)
    return table.in_convention(convention)


def graded_betti(cx: SimplicialComplex, cap: int | None = None) -> BettiDiagram:
    return BettiDiagram.from_table(multigraded_betti(cx, cap))


def pd_reg(cx: SimplicialComplex, cap: int | None = None) -> tuple[int, int]:
    """``(pd(S/F(Γ)), reg(S/F(Γ)))`` for a forest.

    ``pd`` is the largest well ordered cover of an induced subcollection;
    ``reg`` is the largest ``|V(Γ_m)| - s`` over such covers.
    """
    _require_forest(cx, cap)
    pd = reg = 0
    for m, _, found in _lattice_covers(cx):
        for k, _ in found:
            pd = max(pd, k)
            reg = max(reg, popcount(m) - k)
    return pd, reg


# -- top-degree recursion -----------------------------------------------------


def _top_index(cx: SimplicialComplex, leaf: int | None = None) -> int | None:
    """Quotient-convention index ``i`` with ``b_{i, V}(S/F(cx)) = 1``, or None if zero.

    Components add their indices. Inside a tree with a leaf ``F``,
    ``b_{i,n}(S/I) = b_{i-1, n-|F|}(S/F(Δ))`` with ``Δ`` the localization
    away from ``F``; it vanishes unless ``Δ`` keeps all ``n-|F|`` vertices.
    """
    if cx.is_empty:
        return None
    comps = component_indices(cx.masks)
    if len(comps) > 1:
        total = 0
        for comp in comps:
            sub_leaf = comp.index(leaf) if leaf in comp else None
            i = _top_index(cx.sub(comp), sub_leaf)
            if i is None:
                return None
            total += i
        return total
    if len(cx) == 1:
        return 1
    if leaf is None:
        leaf = next(f for f in range(len(cx)) if leaf_witness(cx.masks, f) is not None)
    elif leaf_witness(cx.masks, leaf) is None:
        raise ComplexError(f"F{leaf + 1} is not a leaf")
    delta = localize(cx, leaf)
    if delta is UNIT_IDEAL:
        return None
    if len(delta.vertices) < len(cx.vertices) - len(cx.facets[leaf]):
        return None
    i = _top_index(delta)
    return None if i is None else i + 1


def top_betti_recursive(
    cx: SimplicialComplex, leaf=None, cap: int | None = None, convention: str = QUOTIENT
) -> tuple[int | None, int]:
    """Top multidegree Betti number of a forest by leaf localization.

    Returns ``(i, 1)`` when ``b_{i, V(Γ)}`` is nonzero and ``(None, 0)``
    otherwise. ``leaf`` picks the facet removed first (index or vertex
    set); deeper steps take the first leaf in facet order.
    """
    _require_forest(cx, cap)
    f = None if leaf is None else cx.facet_index(leaf)
    i = _top_index(cx, f)
    if i is None:
        return None, 0
    return (i - 1 if convention == IDEAL else i), 1


# -- bounds for arbitrary complexes ------------------------------------------


@dataclass(frozen=True)
class RegularityBounds:
    wofc_bound: int
    induced_matching_bound: int
    wofc_witness: tuple[int, ...]
    matching_witness: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "wofc_bound": self.wofc_bound,
            "induced_matching_bound": self.induced_matching_bound,
            "wofc_witness": list(self.wofc_witness),
            "matching_witness": list(self.matching_witness),
        }


def nonvanishing_certificates(cx: SimplicialComplex, cap: int | None = None):
    """``[(degree_mask, i, sequence)]``: every lattice degree with a well ordered cover.

    Each entry certifies ``b_{i, degree}(S/F(Γ)) != 0`` for any complex.
    """
    limits.check("facets", len(cx), cap, "facet count")
    out = []
    for m, _, found in _lattice_covers(cx):
        out.extend((m, k, seq) for k, seq in found)
    return out


def regularity_lower_bounds(cx: SimplicialComplex, cap: int | None = None) -> RegularityBounds:
    """Lower bounds for ``reg(S/F(Γ))`` from well ordered covers and induced matchings.

    The first always dominates the second, since an induced matching is a
    well ordered cover (in any order) of the subcollection it induces.
    """
    limits.check("facets", len(cx), cap, "facet count")
    if cx.is_empty:
        raise ComplexError("the empty complex has no facet ideal")
    best, witness = None, ()
    for m, k, seq in nonvanishing_certificates(cx, cap):
        value = popcount(m) - k
        if best is None or value > best:
            best, witness = value, seq
    im_value, im_witness = max_induced_matching_weight(cx, cap)
    assert best >= im_value, "well ordered cover bound fell below the matching bound"
    return RegularityBounds(best, im_value, witness, im_witness)
