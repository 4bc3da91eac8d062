"""Facet covers, vertex covers, induced matchings and well ordered facet covers.

A sequence ``F1, ..., Fk`` of facets is a *well ordered facet cover* when
``{F1, ..., Fk}`` is a minimal facet cover and every facet ``H`` outside it
has a position ``i <= k-1`` with ``Fi <= H | F(i+1) | ... | Fk``.

Positions in certificates are 0-based (so the last usable one is ``k-2``);
facets are referred to by their index in the host complex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from . import limits
from .complex import (
    SimplicialComplex,
    bits,
    induced_indices,
    label,
    popcount,
    union,
)
from .errors import ComplexError


# -- facet covers -------------------------------------------------------------


def is_minimal_cover(masks: Sequence[int], members: Sequence[int], target: int) -> bool:
    if union(masks[i] for i in members) != target:
        return False
    for i in members:
        if union(masks[j] for j in members if j != i) == target:
            return False
    return True


def minimal_cover_indices(masks: Sequence[int], target: int | None = None) -> list[tuple[int, ...]]:
    """All minimal facet covers of ``target`` (default: all vertices), size then lex."""
    if target is None:
        target = union(masks)
    out = []
    q = len(masks)
    for size in range(1, q + 1):
        for members in itertools.combinations(range(q), size):
            if is_minimal_cover(masks, members, target):
                out.append(members)
    return out


def minimal_facet_covers(cx: SimplicialComplex, cap: int | None = None) -> list[tuple[int, ...]]:
    """Every minimal facet cover of ``cx`` as a tuple of facet indices.

    Ordered by cardinality, then lexicographically on the indices.
    """
    limits.check("facets", len(cx), cap, "facet count")
    if cx.is_empty:
        return []
    return minimal_cover_indices(cx.masks, cx.full_mask)


# -- well ordered covers ------------------------------------------------------


@dataclass(frozen=True)
class WellOrderedCheck:
    """Outcome of :func:`is_well_ordered`.

    ``witnesses`` maps each outside facet to the first position that works.
    On failure ``reason`` is ``"coverage"``, ``"minimality"`` or
    ``"witness"``; ``failing`` is then the uncovered vertex mask, the
    redundant facet, or the outside facet lacking a witness respectively.
    """

    ok: bool
    order: tuple[int, ...]
    witnesses: dict[int, int] = field(default_factory=dict)
    reason: str | None = None
    failing: int | None = None

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {
            "cover": sorted(self.order),
            "order": list(self.order),
            "witnesses": {str(h): i for h, i in sorted(self.witnesses.items())},
        }

    def describe(self, cx: SimplicialComplex) -> str:
        seq = ", ".join(label(i) for i in self.order)
        if self.ok:
            return f"{seq} is a well ordered facet cover"
        if self.reason == "coverage":
            missing = " ".join(cx.names_of(self.failing))
            return f"{seq} does not cover vertices {missing}"
        if self.reason == "minimality":
            return f"{seq} is not minimal: {label(self.failing)} is redundant"
        return f"{seq} is not well ordered: {label(self.failing)} has no witness position"


def witness_positions(masks: Sequence[int], order: Sequence[int], outside: Sequence[int]):
    """Map each outside facet to its first witness position.

    Returns ``(witnesses, first_failure)``; ``first_failure`` is ``None``
    when every outside facet has a witness.
    """
    k = len(order)
    suffix = [0] * (k + 1)
    for p in range(k - 1, -1, -1):
        suffix[p] = suffix[p + 1] | masks[order[p]]
    witnesses = {}
    for h in outside:
        H = masks[h]
        for p in range(k - 1):
            if masks[order[p]] & ~(H | suffix[p + 1]) == 0:
                witnesses[h] = p
                break
        else:
            return witnesses, h
    return witnesses, None


def _check_order(masks, order, target) -> WellOrderedCheck:
    order = tuple(order)
    covered = union(masks[i] for i in order)
    if covered != target:
        return WellOrderedCheck(False, order, reason="coverage", failing=target & ~covered)
    for i in order:
        if union(masks[j] for j in order if j != i) == target:
            return WellOrderedCheck(False, order, reason="minimality", failing=i)
    members = set(order)
    outside = [h for h in range(len(masks)) if h not in members]
    witnesses, bad = witness_positions(masks, order, outside)
    if bad is not None:
        return WellOrderedCheck(False, order, witnesses, "witness", bad)
    return WellOrderedCheck(True, order, witnesses)


def is_well_ordered(cx: SimplicialComplex, seq) -> WellOrderedCheck:
    """Check whether ``seq`` (facet indices or vertex sets) is a well ordered cover."""
    order = tuple(cx.facet_index(f) for f in seq)
    if len(set(order)) != len(order):
        raise ComplexError("a facet cover sequence cannot repeat a facet")
    return _check_order(cx.masks, order, cx.full_mask)


def _by_permutations(masks, cover, outside):
    for perm in itertools.permutations(sorted(cover)):
        if witness_positions(masks, perm, outside)[1] is None:
            return perm
    return None


def _by_search(masks, cover, outside):
    """Depth-first search filling positions front to back in index order.

    The facets placed after position ``p`` are exactly those not yet
    placed, so each placement settles the outside facets it witnesses.
    A branch dies when some unsettled ``H`` has no remaining facet ``R``
    (other than the last one) with ``R <= H | rest``.
    """
    cover = sorted(cover)
    dead: set[tuple[frozenset, frozenset]] = set()

    def viable(remaining, pending):
        if len(remaining) < 2:
            return not pending
        for h in pending:
            H = masks[h]
            if not any(
                masks[r] & ~(H | union(masks[s] for s in remaining if s != r)) == 0
                for r in remaining
            ):
                return False
        return True

    def go(prefix, remaining, pending):
        if not pending:
            return tuple(prefix) + tuple(sorted(remaining))
        key = (remaining, pending)
        if key in dead or not viable(remaining, pending):
            return None
        for f in sorted(remaining):
            rest_after = remaining - {f}
            if not rest_after:
                continue
            suffix = union(masks[r] for r in rest_after)
            settled = {h for h in pending if masks[f] & ~(masks[h] | suffix) == 0}
            found = go(prefix + [f], rest_after, pending - settled)
            if found is not None:
                return found
        dead.add(key)
        return None

    return go([], frozenset(cover), frozenset(outside))


def well_ordered_order(
    masks: Sequence[int], cover: Sequence[int], threshold: int | None = None
) -> tuple[int, ...] | None:
    """Lexicographically least well ordered arrangement of ``cover``, if any.

    ``cover`` must already be a minimal cover of the union of ``masks``.
    """
    if threshold is None:
        threshold = limits.PERMUTATION_THRESHOLD
    members = set(cover)
    outside = [h for h in range(len(masks)) if h not in members]
    if len(cover) <= threshold:
        return _by_permutations(masks, cover, outside)
    return _by_search(masks, cover, outside)


def well_ordered_covers_of(masks: Sequence[int], threshold: int | None = None):
    """``[(cardinality, lex-least sequence)]`` over all minimal covers of ``masks``."""
    best: dict[int, tuple[int, ...]] = {}
    for cover in minimal_cover_indices(masks):
        seq = well_ordered_order(masks, cover, threshold)
        if seq is None:
            continue
        k = len(seq)
        if k not in best or seq < best[k]:
            best[k] = seq
    return sorted(best.items())


def find_well_ordered_covers(
    cx: SimplicialComplex, cap: int | None = None, threshold: int | None = None
) -> list[tuple[int, tuple[int, ...]]]:
    """Every cardinality admitting a well ordered facet cover, with one witness.

    The witness for each cardinality is the lexicographically least
    sequence of facet indices. An empty list means there is none.
    """
    limits.check("facets", len(cx), cap, "facet count")
    if cx.is_empty:
        return []
    return well_ordered_covers_of(cx.masks, threshold)


# -- vertex covers ------------------------------------------------------------


def minimal_vertex_covers(cx: SimplicialComplex, cap: int | None = None) -> list[frozenset[str]]:
    """All inclusion-minimal vertex covers, by size then vertex order."""
    limits.check("vertices", len(cx.vertices), cap, "vertex count")
    masks = cx.masks
    found: set[int] = set()

    def grow(chosen):
        for F in masks:
            if not F & chosen:
                for v in bits(F):
                    grow(chosen | (1 << v))
                return
        found.add(chosen)

    if masks:
        grow(0)

    def minimal(C):
        return all(any(F & C == 1 << v for F in masks) for v in bits(C))

    covers = sorted((c for c in found if minimal(c)), key=lambda c: (popcount(c), bits(c)))
    return [frozenset(cx.names_of(c)) for c in covers]


# -- matchings ----------------------------------------------------------------


def is_induced_matching_masks(masks: Sequence[int], members: Sequence[int]) -> bool:
    seen = 0
    for i in members:
        if masks[i] & seen:
            return False
        seen |= masks[i]
    return sorted(induced_indices(masks, seen)) == sorted(members)


def is_matching(cx: SimplicialComplex, facets) -> bool:
    idx = [cx.facet_index(f) for f in facets]
    return all(not cx.masks[a] & cx.masks[b] for a, b in itertools.combinations(idx, 2))


def is_induced_matching(cx: SimplicialComplex, facets) -> bool:
    idx = [cx.facet_index(f) for f in facets]
    return len(set(idx)) == len(idx) and is_induced_matching_masks(cx.masks, idx)


def induced_matchings(masks: Sequence[int]) -> list[tuple[int, ...]]:
    """All nonempty induced matchings, by size then lex."""
    out = []

    def grow(members, seen, start):
        for i in range(start, len(masks)):
            if masks[i] & seen:
                continue
            nxt = members + (i,)
            # a stray facet inside the union stays inside when the union grows
            if is_induced_matching_masks(masks, nxt):
                out.append(nxt)
                grow(nxt, seen | masks[i], i + 1)

    grow((), 0, 0)
    out.sort(key=lambda m: (len(m), m))
    return out


def max_induced_matching_weight(
    cx: SimplicialComplex, cap: int | None = None
) -> tuple[int, tuple[int, ...]]:
    """Maximize ``|F1 | ... | Fs| - s`` over induced matchings with ``s >= 1``."""
    limits.check("facets", len(cx), cap, "facet count")
    if cx.is_empty:
        raise ComplexError("the empty complex has no induced matching")
    masks = cx.masks
    best_value, best = None, ()
    for m in induced_matchings(masks):
        value = popcount(union(masks[i] for i in m)) - len(m)
        if best_value is None or value > best_value:
            best_value, best = value, m
    return best_value, best
