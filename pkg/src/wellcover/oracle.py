"""Ground-truth Betti numbers from the homology of lower Taylor complexes.

For a squarefree monomial ideal ``I`` with generators ``m_1..m_q`` and a
multidegree ``m`` in its lcm lattice,

    b_{i,m}(I) = dim H~_{i-1}(Taylor(I)_{<m})

where ``Taylor(I)_{<m}`` is the set of generator subsets whose lcm strictly
divides ``m``. Homology is reduced, over the rationals, computed from exact
integer ranks. Nothing here looks at facet covers, leaves or orders.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from . import limits
from .complex import SimplicialComplex, bits
from .table import QUOTIENT, BettiTable


def exact_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix by fraction-free (Bareiss) elimination.

    Every intermediate entry is a minor of the input, so the division by the
    previous pivot is exact and nothing leaves the integers.
    """
    rows = [[int(x) for x in r] for r in matrix]
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank, prev = 0, 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        top = rows[rank]
        for r in range(rank + 1, len(rows)):
            a = rows[r][col]
            row = rows[r]
            rows[r] = [(p * row[c] - a * top[c]) // prev for c in range(ncols)]
        prev = p
        rank += 1
        if rank == len(rows):
            break
    return rank


@dataclass(frozen=True)
class AbstractComplex:
    """A downward closed family of finite sets, kept by its maximal faces.

    ``maximal == ()`` is the void complex (no faces at all);
    ``maximal == (frozenset(),)`` is ``{∅}``, the complex with only the
    empty face.
    """

    maximal: tuple[frozenset[int], ...]

    @classmethod
    def from_faces(cls, faces) -> AbstractComplex:
        faces = {frozenset(f) for f in faces}
        top = [f for f in faces if not any(f < g for g in faces)]
        return cls(tuple(sorted(top, key=lambda f: (len(f), sorted(f)))))

    @property
    def is_void(self) -> bool:
        return not self.maximal

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        """All faces (empty face included) as sorted tuples, by size then lex."""
        seen: set[tuple[int, ...]] = set()
        for top in self.maximal:
            members = sorted(top)
            for k in range(len(members) + 1):
                seen.update(itertools.combinations(members, k))
        return tuple(sorted(seen, key=lambda f: (len(f), f)))

    def faces_of_dim(self, d: int) -> list[tuple[int, ...]]:
        return [f for f in self.faces if len(f) == d + 1]

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.maximal), default=0) - 1

    def boundary(self, d: int) -> tuple[list[list[int]], list[tuple], list[tuple]]:
        """Augmented boundary ``∂_d : C_d -> C_(d-1)`` as a dense integer matrix.

        Rows are the ``(d-1)``-faces and columns the ``d``-faces;
        ``∂_0`` sends every vertex to the empty face.
        """
        cols = self.faces_of_dim(d)
        rows = self.faces_of_dim(d - 1)
        at = {f: r for r, f in enumerate(rows)}
        mat = [[0] * len(cols) for _ in rows]
        for c, face in enumerate(cols):
            for j in range(len(face)):
                mat[at[face[:j] + face[j + 1 :]]][c] = -1 if j % 2 else 1
        return mat, rows, cols


def taylor_lower(cx: SimplicialComplex, m, cap: int | None = None) -> AbstractComplex:
    """``Taylor(I)_{<m}``: generator subsets whose lcm is a proper divisor of ``m``.

    ``m`` is a vertex collection or vertex mask of ``cx``. The empty face is
    in the complex whenever ``m != 1``.
    """
    mask = m if isinstance(m, int) else cx.mask_of(m)
    limit = limits.get("faces") if cap is None else cap
    dividing = [g for g, gm in enumerate(cx.masks) if gm & ~mask == 0]
    gm = [cx.masks[g] for g in dividing]
    n = len(dividing)
    lcm = [0] * (1 << n)
    faces = []
    for s in range(1 << n):
        if s:
            low = (s & -s).bit_length() - 1
            lcm[s] = lcm[s & (s - 1)] | gm[low]
        if lcm[s] != mask and lcm[s] & ~mask == 0:
            faces.append(tuple(dividing[i] for i in bits(s)))
            if len(faces) > limit:
                limits.check("faces", len(faces), limit, "lower Taylor face count")
    return AbstractComplex.from_faces(faces)


def reduced_homology_dims(K: AbstractComplex, cap: int | None = None) -> dict[int, int]:
    """``{d: dim H~_d(K; Q)}`` for ``d = -1 .. dim K``; empty dict for the void complex.

    ``dim H~_d = #d-faces - rank ∂_d - rank ∂_(d+1)`` on the augmented chain
    complex, so ``{∅}`` has ``H~_(-1) = Q``.
    """
    if K.is_void:
        return {}
    limits.check("faces", len(K.faces), cap, "face count")
    top = K.dimension
    ranks = {d: exact_rank(K.boundary(d)[0]) for d in range(0, top + 1)}
    ranks[-1] = 0
    ranks[top + 1] = 0
    return {d: len(K.faces_of_dim(d)) - ranks[d] - ranks[d + 1] for d in range(-1, top + 1)}


def lcm_lattice(masks: Sequence[int]) -> list[int]:
    """Distinct lcms of nonempty generator subsets, by degree then vertex order."""
    seen = set()
    frontier = set(masks)
    while frontier:
        seen |= frontier
        frontier = {a | b for a in frontier for b in masks} - seen
    return sorted(seen, key=lambda m: (bin(m).count("1"), bits(m)))


def betti_oracle(
    cx: SimplicialComplex, cap: int | None = None, convention: str = QUOTIENT
) -> BettiTable:
    """All nonzero multigraded Betti numbers of ``cx``'s facet ideal."""
    limits.check("oracle", len(cx), cap, "generator count")
    table = BettiTable(cx.vertices, convention="ideal")
    for m in lcm_lattice(cx.masks):
        for d, rank in reduced_homology_dims(taylor_lower(cx, m)).items():
            table.add(cx.names_of(m), d + 1, rank)
    return table.in_convention(convention)
