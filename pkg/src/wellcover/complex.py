"""Simplicial complexes stored by their facets.

A complex doubles as the squarefree monomial ideal generated by its facets
(its facet ideal): facet ``i`` is the generator whose support is that facet.
Facets keep the order they were given in, which is also the default total
order on generators everywhere else in the package.

Internally a facet is an ``int`` bitmask over the complex's vertex order;
the mask helpers in this module work on plain lists of such masks so the
search code in other modules can stay allocation-light.
"""

from __future__ import annotations

import itertools
import logging
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import limits
from .errors import ComplexError

log = logging.getLogger(__name__)

ONLY_FACET = "only facet"


class _UnitIdeal:
    """Marker for a localization that produced the unit ideal."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNIT_IDEAL"

    def __reduce__(self):
        return (_UnitIdeal, ())


UNIT_IDEAL = _UnitIdeal()


def label(i: int) -> str:
    return f"F{i + 1}"


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def union(masks: Iterable[int]) -> int:
    acc = 0
    for m in masks:
        acc |= m
    return acc


def _tokens(raw) -> list[str]:
    if isinstance(raw, str):
        return raw.split()
    if isinstance(raw, (set, frozenset)):
        return sorted(str(v) for v in raw)
    return [str(v) for v in raw]


def _as_vertex_set(raw) -> frozenset[str]:
    return frozenset(_tokens(raw))


def minimal_sets(sets: Sequence[frozenset]) -> list[frozenset]:
    """Inclusion-minimal members of ``sets``, deduplicated, first occurrence order."""
    out: list[frozenset] = []
    for s in sets:
        if s in out:
            continue
        if any(t < s for t in sets):
            continue
        out.append(s)
    return out


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by pairwise incomparable facets.

    Use :meth:`from_facets` (or :func:`normalize_complex`) to build one from
    arbitrary input; the constructor itself only validates.
    """

    facets: tuple[frozenset[str], ...]
    vertices: tuple[str, ...]

    def __post_init__(self):
        if any(not f for f in self.facets):
            raise ComplexError("facets must be nonempty")
        if set().union(*self.facets) != set(self.vertices) or len(set(self.vertices)) != len(
            self.vertices
        ):
            raise ComplexError("vertex universe must be exactly the union of the facets")
        for a, b in itertools.permutations(self.facets, 2):
            if a <= b:
                raise ComplexError(f"facet {sorted(a)} is contained in {sorted(b)}")

    @classmethod
    def from_facets(cls, raw_facets) -> SimplicialComplex:
        cx, dropped = normalize_complex(raw_facets)
        for i, j in dropped:
            log.debug("input facet %d dropped: contained in input facet %d", i + 1, j + 1)
        return cx

    @classmethod
    def empty(cls) -> SimplicialComplex:
        return cls((), ())

    # -- views -------------------------------------------------------------

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(self.mask_of(f) for f in self.facets)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.vertices)) - 1

    @property
    def is_empty(self) -> bool:
        return not self.facets

    def __len__(self) -> int:
        return len(self.facets)

    def mask_of(self, vertices: Iterable[str]) -> int:
        m = 0
        for v in vertices:
            try:
                m |= 1 << self.index[v]
            except KeyError:
                raise ComplexError(f"unknown vertex {v!r}") from None
        return m

    def names_of(self, mask: int) -> tuple[str, ...]:
        """Vertex names of ``mask`` in the complex's vertex order."""
        return tuple(self.vertices[i] for i in bits(mask))

    def facet_names(self, i: int) -> tuple[str, ...]:
        return self.names_of(self.masks[i])

    @property
    def generators(self) -> tuple[str, ...]:
        """The facet ideal's minimal generators as monomial strings."""
        return tuple(monomial(self.facet_names(i)) for i in range(len(self.facets)))

    def facet_index(self, facet) -> int:
        """Resolve a facet given as an index or as a collection of vertices."""
        if isinstance(facet, int):
            if not 0 <= facet < len(self.facets):
                raise ComplexError(f"facet index {facet} out of range")
            return facet
        target = _as_vertex_set(facet)
        try:
            return self.facets.index(target)
        except ValueError:
            raise ComplexError(f"{sorted(target)} is not a facet of the complex") from None

    def sub(self, indices: Iterable[int]) -> SimplicialComplex:
        """The subcollection generated by the facets at ``indices`` (kept in order)."""
        idx = sorted(set(indices))
        facets = tuple(self.facets[i] for i in idx)
        covered = set().union(*facets) if facets else set()
        return SimplicialComplex(facets, tuple(v for v in self.vertices if v in covered))

    def __str__(self):
        inner = ", ".join(monomial(self.facet_names(i)) for i in range(len(self.facets)))
        return f"<{inner}>"


def natural_key(name: str):
    """Sort key that orders ``x2`` before ``x10``."""
    return [(0, int(t), "") if t.isdigit() else (1, 0, t) for t in re.split(r"(\d+)", name) if t]


def monomial(names: Iterable[str]) -> str:
    s = "".join(names)
    return s or "1"


def normalize_complex(raw_facets) -> tuple[SimplicialComplex, list[tuple[int, int]]]:
    """Keep the inclusion-maximal members of ``raw_facets``.

    Returns the complex and a list of ``(dropped, absorbed_by)`` input
    positions. Duplicates keep their first occurrence. The vertex universe is
    the union of the kept facets in :func:`natural_key` order.
    """
    raw_facets = list(raw_facets)
    sets = [_as_vertex_set(f) for f in raw_facets]
    if not sets:
        raise ComplexError("a complex needs at least one facet")
    for i, s in enumerate(sets):
        if not s:
            raise ComplexError(f"input facet {i + 1} is empty")
    kept: list[frozenset[str]] = []
    dropped: list[tuple[int, int]] = []
    for i, s in enumerate(sets):
        absorber = next(
            (j for j, t in enumerate(sets) if s < t or (s == t and j < i)),
            None,
        )
        if absorber is None:
            kept.append(s)
        else:
            dropped.append((i, absorber))
    order = sorted(set().union(*kept), key=natural_key)
    return SimplicialComplex(tuple(kept), tuple(order)), dropped


# -- mask-level helpers -------------------------------------------------------


def induced_indices(masks: Sequence[int], allowed: int) -> list[int]:
    """Indices of the facets whose mask lies inside ``allowed``."""
    return [i for i, m in enumerate(masks) if m & ~allowed == 0]


def leaf_witness(masks: Sequence[int], f: int, members: Sequence[int] | None = None):
    """Leaf test of facet ``f`` inside the subcollection ``members``.

    Returns ``ONLY_FACET``, the index of a witness facet, or ``None``.
    """
    if members is None:
        members = range(len(masks))
    others = [h for h in members if h != f]
    if not others:
        return ONLY_FACET
    F = masks[f]
    need = union(F & masks[h] for h in others)
    for g in others:
        if need & ~masks[g] == 0:
            return g
    return None


def has_leaf(masks: Sequence[int], members: Sequence[int]) -> bool:
    return any(leaf_witness(masks, f, members) is not None for f in members)


def free_mask(masks: Sequence[int], f: int, members: Sequence[int] | None = None) -> int:
    if members is None:
        members = range(len(masks))
    return masks[f] & ~union(masks[h] for h in members if h != f)


# -- operations ---------------------------------------------------------------


def induced_subcollection(cx: SimplicialComplex, A: Iterable[str]) -> SimplicialComplex:
    """``<F in Facets(cx) | F subset of A>``; the empty complex if nothing fits."""
    allowed = cx.mask_of(_as_vertex_set(A))
    return cx.sub(induced_indices(cx.masks, allowed))


def connected_components(cx: SimplicialComplex) -> list[SimplicialComplex]:
    return [cx.sub(c) for c in component_indices(cx.masks)]


def component_indices(masks: Sequence[int]) -> list[list[int]]:
    """Facet indices of each connected component, ordered by least index."""
    parent = list(range(len(masks)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a, b in itertools.combinations(range(len(masks)), 2):
        if masks[a] & masks[b]:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for i in range(len(masks)):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


@dataclass(frozen=True)
class LeafCheck:
    is_leaf: bool
    witness: int | str | None
    free_vertices: tuple[str, ...]

    def __bool__(self):
        return self.is_leaf


def is_leaf(cx: SimplicialComplex, facet) -> LeafCheck:
    """Is ``facet`` a leaf of ``cx``?

    The witness is the first facet ``G`` (in facet order) with
    ``F & H <= G`` for every other facet ``H``, or :data:`ONLY_FACET`.
    """
    f = cx.facet_index(facet)
    w = leaf_witness(cx.masks, f)
    free = cx.names_of(free_mask(cx.masks, f))
    return LeafCheck(w is not None, w, free)


def leaves(cx: SimplicialComplex) -> list[int]:
    members = range(len(cx.masks))
    return [f for f in members if leaf_witness(cx.masks, f, members) is not None]


@dataclass(frozen=True)
class ForestCheck:
    is_forest: bool
    counterexample: tuple[int, ...] | None = None

    def __bool__(self):
        return self.is_forest


def is_forest(cx: SimplicialComplex, cap: int | None = None) -> ForestCheck:
    """Exhaustive forest test: every nonempty subcollection must have a leaf.

    On failure the counterexample is the first leafless subcollection in
    size-then-lexicographic order, so it is also a smallest one.
    """
    q = len(cx.facets)
    limits.check("facets", q, cap, "facet count")
    masks = cx.masks
    # a single facet is always a leaf
    for size in range(2, q + 1):
        for members in itertools.combinations(range(q), size):
            if not has_leaf(masks, members):
                return ForestCheck(False, members)
    return ForestCheck(True)


def localize_at(cx: SimplicialComplex, keep: Iterable[str], drop: int | None = None):
    """Localize the facet ideal at the prime generated by the variables ``keep``.

    Every other variable becomes a unit, so each generator shrinks to its
    intersection with ``keep``; the minimal survivors generate the result.
    Variable names are those of ``cx``. ``drop`` optionally removes one
    facet first. Returns :data:`UNIT_IDEAL` when some generator becomes 1.
    """
    kmask = cx.mask_of(keep)
    pieces = []
    for i, m in enumerate(cx.masks):
        if i == drop:
            continue
        r = m & kmask
        if r == 0:
            return UNIT_IDEAL
        pieces.append(frozenset(cx.names_of(r)))
    if not pieces:
        return SimplicialComplex.empty()
    kept = minimal_sets(pieces)
    covered = set().union(*kept)
    return SimplicialComplex(tuple(kept), tuple(v for v in cx.vertices if v in covered))


def localize(cx: SimplicialComplex, facet):
    """Remove ``facet`` and localize at the variables outside it.

    This is the complex ``Delta`` in the top-degree recursion
    ``b_{i,n}(I) = b_{i-1, n-|F|}(F(Delta))`` for a leaf ``F``.
    """
    f = cx.facet_index(facet)
    if len(cx.facets) < 2:
        raise ComplexError("localizing away the only facet leaves the zero ideal")
    outside = [v for v in cx.vertices if v not in cx.facets[f]]
    return localize_at(cx, outside, drop=f)
