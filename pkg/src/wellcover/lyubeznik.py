"""Lyubeznik complexes of a facet ideal under a total order on its generators.

Generators are the facets of a :class:`SimplicialComplex`; an order is a
permutation of facet indices listed from smallest to largest. Faces are
stored as tuples of generator indices sorted by that order, so position
``j`` in a face tuple is the ``t_j`` of the differential's sign
``(-1)^(j+1)``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from . import limits
from .complex import SimplicialComplex, bits, union
from .covers import is_well_ordered
from .errors import ComplexError


def check_order(order: Sequence[int], s: int) -> tuple[int, ...]:
    order = tuple(int(i) for i in order)
    if sorted(order) != list(range(s)):
        raise ComplexError(f"order must be a permutation of 0..{s - 1}, got {list(order)}")
    return order


def _min_gen(masks: Sequence[int], order: Sequence[int], m: int) -> int | None:
    for g in order:
        if masks[g] & ~m == 0:
            return g
    return None


def min_generator(cx: SimplicialComplex, order: Sequence[int], m) -> int:
    """Index of the least generator (under ``order``) dividing the monomial ``m``.

    ``m`` is a vertex collection or a vertex mask of ``cx``.
    """
    order = check_order(order, len(cx))
    mask = m if isinstance(m, int) else cx.mask_of(m)
    g = _min_gen(cx.masks, order, mask)
    if g is None:
        raise ComplexError(f"no generator divides {' '.join(cx.names_of(mask)) or '1'}")
    return g


def is_rooted(masks: Sequence[int], order: Sequence[int], face: Sequence[int]) -> bool:
    """Every nonempty subset ``G`` of ``face`` contains ``min(lcm(G))``."""
    for size in range(1, len(face) + 1):
        for G in itertools.combinations(face, size):
            if _min_gen(masks, order, union(masks[g] for g in G)) not in G:
                return False
    return True


@dataclass(frozen=True)
class LyubeznikComplex:
    order: tuple[int, ...]
    faces: tuple[tuple[int, ...], ...]
    facets: tuple[tuple[int, ...], ...]
    lcm: dict[tuple[int, ...], int]
    generator_masks: tuple[int, ...]

    def faces_of_size(self, size: int) -> list[tuple[int, ...]]:
        if size == 0:
            return [()]
        return [f for f in self.faces if len(f) == size]

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.faces) - 1

    def __contains__(self, face) -> bool:
        return self._key(face) in self.lcm

    def _key(self, face) -> tuple[int, ...]:
        rank = {g: r for r, g in enumerate(self.order)}
        return tuple(sorted(face, key=rank.__getitem__))

    def to_json(self) -> dict:
        return {
            "order": list(self.order),
            "faces": [list(f) for f in self.faces],
            "facets": [list(f) for f in self.facets],
        }


def lyubeznik_complex(
    cx: SimplicialComplex, order: Sequence[int] | None = None, cap: int | None = None
) -> LyubeznikComplex:
    """All rooted faces of the Taylor simplex of ``cx``'s facet ideal.

    A candidate of size ``t+1`` is only examined when each of its ``t``-subsets
    is already rooted; then only the candidate itself needs the root test.
    """
    s = len(cx)
    limits.check("generators", s, cap, "generator count")
    if s == 0:
        raise ComplexError("the zero ideal has no Lyubeznik complex")
    order = check_order(range(s) if order is None else order, s)
    masks = cx.masks
    rank = {g: r for r, g in enumerate(order)}

    level = [(g,) for g in order if _min_gen(masks, order, masks[g]) == g]
    lcm = {f: masks[f[0]] for f in level}
    faces = list(level)
    facets = []
    while level:
        present = set(level)
        nxt = []
        extended = set()
        for face in level:
            for g in order[rank[face[-1]] + 1 :]:
                cand = face + (g,)
                if any(cand[:j] + cand[j + 1 :] not in present for j in range(len(cand))):
                    continue
                m = lcm[face] | masks[g]
                if _min_gen(masks, order, m) not in cand:
                    continue
                nxt.append(cand)
                lcm[cand] = m
                for j in range(len(cand)):
                    extended.add(cand[:j] + cand[j + 1 :])
        facets.extend(f for f in level if f not in extended)
        faces.extend(nxt)
        level = nxt
    return LyubeznikComplex(order, tuple(faces), tuple(facets), lcm, tuple(masks))


@dataclass(frozen=True)
class BarileWitness:
    face: tuple[int, ...]
    degree: int  # vertex mask of lcm(face)
    index: int  # homological index i in b_{i, degree}(S/I)


def barile_witnesses(
    cx: SimplicialComplex, order: Sequence[int] | None = None, lam: LyubeznikComplex | None = None
) -> list[BarileWitness]:
    """Facets of the Lyubeznik complex whose lcm drops when any member is removed.

    Each one certifies ``b_{|F|, lcm(F)}(S/I) != 0``.
    """
    if lam is None:
        lam = lyubeznik_complex(cx, order)
    masks = lam.generator_masks
    out = []
    for face in lam.facets:
        full = lam.lcm[face]
        if all(union(masks[g] for g in face if g != t) != full for t in face):
            out.append(BarileWitness(face, full, len(face)))
    return out


def order_from_wofc(cx: SimplicialComplex, seq) -> tuple[int, ...]:
    """Order ``F1 < ... < Fk < (other facets by index)`` for a well ordered cover.

    Under it ``{F1, ..., Fk}`` is a facet of the Lyubeznik complex; this is
    re-verified here: the cover is rooted and no outside facet extends it.
    """
    check = is_well_ordered(cx, seq)
    if not check:
        raise ComplexError(check.describe(cx))
    head = check.order
    order = head + tuple(i for i in range(len(cx)) if i not in head)
    masks = cx.masks
    assert is_rooted(masks, order, head), "cover is not rooted"
    for h in order[len(head) :]:
        assert not is_rooted(masks, order, head + (h,)), f"cover extends by F{h + 1}"
    return order


# -- boundary maps ------------------------------------------------------------


@dataclass(frozen=True)
class BoundaryMatrix:
    """``d_i`` of the Lyubeznik resolution, stored sparsely.

    ``entries[(r, c)] = (sign, quotient_mask)`` where column ``c`` is a face of
    size ``i`` and row ``r`` a face of size ``i-1``; the coefficient is
    ``sign * lcm(col) / lcm(row)``, a squarefree monomial.
    """

    i: int
    rows: tuple[tuple[int, ...], ...]
    cols: tuple[tuple[int, ...], ...]
    entries: dict[tuple[int, int], tuple[int, int]]


def boundary_matrices(lam: LyubeznikComplex) -> list[BoundaryMatrix]:
    """``[d_1, ..., d_p]`` with ``d_i`` mapping size-``i`` faces to size ``i-1``."""
    lcm = dict(lam.lcm)
    lcm[()] = 0
    out = []
    for i in range(1, lam.dimension + 2):
        cols = lam.faces_of_size(i)
        rows = lam.faces_of_size(i - 1)
        row_at = {f: r for r, f in enumerate(rows)}
        entries = {}
        for c, face in enumerate(cols):
            for j in range(i):
                sub = face[:j] + face[j + 1 :]
                quotient = lcm[face] & ~lcm[sub]
                entries[(row_at[sub], c)] = (1 if j % 2 == 0 else -1, quotient)
        out.append(BoundaryMatrix(i, tuple(rows), tuple(cols), entries))
    return out


def compose(lower: BoundaryMatrix, upper: BoundaryMatrix) -> dict[tuple[int, int], Counter]:
    """Symbolic ``lower @ upper`` as signed sums of monomials.

    Each result entry is a ``Counter`` from a monomial (a sorted tuple of
    vertex indices, repeats allowed) to its integer coefficient; zero
    coefficients are dropped.
    """
    if lower.cols != upper.rows:
        raise ValueError("matrices are not composable")
    by_col: dict[int, list[tuple[int, tuple[int, int]]]] = {}
    for (r, c), e in lower.entries.items():
        by_col.setdefault(c, []).append((r, e))
    out: dict[tuple[int, int], Counter] = {}
    for (mid, c), (s1, m1) in upper.entries.items():
        for r, (s2, m2) in by_col.get(mid, []):
            mono = tuple(sorted(bits(m1) + bits(m2)))
            acc = out.setdefault((r, c), Counter())
            acc[mono] += s1 * s2
    return {k: Counter({m: v for m, v in acc.items() if v}) for k, acc in out.items() if any(acc.values())}


def chain_condition_holds(mats: Sequence[BoundaryMatrix]) -> bool:
    """``d_(i-1) o d_i == 0`` symbolically for every consecutive pair."""
    return all(not compose(lo, hi) for lo, hi in zip(mats, mats[1:]))
