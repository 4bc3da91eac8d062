"""Bouquets and well ordered edge covers of simple graphs.

A graph is read as the 1-dimensional complex of its edges, so an edge cover
is a facet cover and a well ordered edge cover is a well ordered facet cover
of that complex. A sequence of edges can be arranged into a well ordered
edge cover exactly when the edges form a set of strongly disjoint bouquets
covering every vertex; this module converts in both directions and checks
each conversion.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .complex import SimplicialComplex, natural_key
from .covers import (
    is_minimal_cover,
    is_induced_matching_masks,
    is_well_ordered,
    minimal_cover_indices,
    well_ordered_order,
)
from .errors import ComplexError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[frozenset[str], ...]

    def __post_init__(self):
        for e in self.edges:
            if len(e) != 2:
                raise ComplexError(f"not an edge of a simple graph: {sorted(e)}")
        if len(set(self.edges)) != len(self.edges):
            raise ComplexError("repeated edge")
        if set().union(*self.edges) != set(self.vertices):
            raise ComplexError("vertex set must be the union of the edges")

    @classmethod
    def from_edges(cls, pairs) -> Graph:
        """Build from vertex pairs; loops are rejected, repeated edges dropped."""
        edges: list[frozenset[str]] = []
        for n, pair in enumerate(pairs):
            pair = [str(v) for v in pair]
            if len(pair) != 2:
                raise ComplexError(f"edge {n + 1} needs exactly two vertices, got {pair}")
            e = frozenset(pair)
            if len(e) != 2:
                raise ComplexError(f"edge {n + 1} is a loop at {pair[0]}")
            if e in edges:
                log.debug("edge %d repeats edge %d; dropped", n + 1, edges.index(e) + 1)
                continue
            edges.append(e)
        if not edges:
            raise ComplexError("a graph needs at least one edge")
        return cls(tuple(sorted(set().union(*edges), key=natural_key)), tuple(edges))

    @cached_property
    def complex(self) -> SimplicialComplex:
        return SimplicialComplex(self.edges, self.vertices)

    def edge_index(self, edge) -> int:
        return self.complex.facet_index(edge)

    def edge_names(self, i: int) -> tuple[str, str]:
        return tuple(sorted(self.edges[i]))


@dataclass(frozen=True)
class Bouquet:
    """A star: ``root`` joined to each of ``leaves`` (at least one)."""

    root: str
    leaves: tuple[str, ...]

    def __post_init__(self):
        if not self.leaves or self.root in self.leaves or len(set(self.leaves)) != len(self.leaves):
            raise ComplexError(f"malformed bouquet at {self.root!r}")

    @property
    def edges(self) -> tuple[frozenset[str], ...]:
        return tuple(frozenset((self.root, z)) for z in self.leaves)

    @property
    def vertices(self) -> frozenset[str]:
        return frozenset((self.root, *self.leaves))


@dataclass(frozen=True)
class BouquetSet:
    bouquets: tuple[Bouquet, ...]
    designated: tuple[frozenset[str], ...] | None = None

    @property
    def edges(self) -> frozenset[frozenset[str]]:
        return frozenset(e for b in self.bouquets for e in b.edges)

    @property
    def vertices(self) -> frozenset[str]:
        return frozenset().union(*(b.vertices for b in self.bouquets))

    def to_json(self) -> dict:
        out = []
        for n, b in enumerate(self.bouquets):
            item = {"root": b.root, "leaves": list(b.leaves), "edges": [sorted(e) for e in b.edges]}
            if self.designated is not None:
                item["designated"] = sorted(self.designated[n])
            out.append(item)
        return {"bouquets": out}


def _edge_indices(G: Graph, edges) -> list[int]:
    idx = [G.edge_index(e) for e in edges]
    if len(set(idx)) != len(idx):
        raise ComplexError("an edge is listed twice")
    return idx


def bouquet_decomposition(G: Graph, cover) -> BouquetSet:
    """Split a minimal edge cover into vertex-disjoint bouquets.

    Each connected piece of a minimal edge cover is a star. Its root is the
    center, or the alphabetically smaller end of a lone edge; bouquets come
    out sorted by root.
    """
    idx = _edge_indices(G, cover)
    masks = G.complex.masks
    full = G.complex.full_mask
    covered = 0
    for i in idx:
        covered |= masks[i]
    if covered != full:
        missing = " ".join(G.complex.names_of(full & ~covered))
        raise ComplexError(f"not an edge cover: misses {missing}")
    if not is_minimal_cover(masks, idx, full):
        raise ComplexError("not a minimal edge cover")

    groups: list[list[frozenset[str]]] = []
    for i in idx:
        e = G.edges[i]
        hit = [g for g in groups if any(e & f for f in g)]
        merged = [e] + [f for g in hit for f in g]
        groups = [g for g in groups if g not in hit] + [merged]

    bouquets = []
    for g in groups:
        if len(g) == 1:
            root = min(g[0])
        else:
            root = next(v for v in sorted(g[0]) if all(v in f for f in g))
        leaves = tuple(sorted(v for f in g for v in f if v != root))
        bouquets.append(Bouquet(root, leaves))
    bouquets.sort(key=lambda b: b.root)
    return BouquetSet(tuple(bouquets))


def _check_designated(B: BouquetSet, designated) -> tuple[frozenset[str], ...]:
    designated = tuple(frozenset(str(v) for v in e) for e in designated)
    if len(designated) != len(B.bouquets):
        raise ComplexError("need exactly one designated edge per bouquet")
    for b, s in zip(B.bouquets, designated):
        if s not in b.edges:
            raise ComplexError(f"designated edge {sorted(s)} is not in the bouquet rooted at {b.root}")
    return designated


def _disjoint(B: BouquetSet) -> bool:
    return all(not (a.vertices & b.vertices) for a, b in itertools.combinations(B.bouquets, 2))


def is_strongly_disjoint(G: Graph, B: BouquetSet, designated=None) -> bool:
    """Are the bouquets disjoint with designated edges forming an induced matching of ``G``?"""
    designated = _check_designated(B, B.designated if designated is None else designated)
    if not _disjoint(B):
        return False
    idx = [G.edge_index(e) for e in designated]
    return is_induced_matching_masks(G.complex.masks, idx)


def strongly_disjoint_designations(G: Graph, B: BouquetSet):
    """Every choice of one edge per bouquet that makes ``B`` strongly disjoint."""
    if not _disjoint(B):
        return
    for choice in itertools.product(*(b.edges for b in B.bouquets)):
        if is_strongly_disjoint(G, B, choice):
            yield choice


def wofc_from_bouquets(G: Graph, B: BouquetSet, designated=None) -> tuple[int, ...]:
    """Well ordered edge cover from strongly disjoint bouquets covering ``V(G)``.

    The non-designated edges come first in graph edge order, then the
    designated edges bouquet by bouquet. The result is verified before it
    is returned.
    """
    designated = _check_designated(B, B.designated if designated is None else designated)
    for e in B.edges:
        if e not in G.edges:
            raise ComplexError(f"bouquet edge {sorted(e)} is not an edge of the graph")
    if not _disjoint(B):
        raise ComplexError("bouquets are not vertex-disjoint")
    if not is_strongly_disjoint(G, B, designated):
        raise ComplexError("designated edges are not an induced matching")
    missing = set(G.vertices) - B.vertices
    if missing:
        raise ComplexError(f"bouquets miss vertices {' '.join(sorted(missing))}")
    special = {G.edge_index(s) for s in designated}
    rest = sorted(G.edge_index(e) for e in B.edges if G.edge_index(e) not in special)
    seq = tuple(rest) + tuple(G.edge_index(s) for s in designated)
    check = is_well_ordered(G.complex, seq)
    assert check, check.describe(G.complex)
    return seq


def bouquets_from_wofc(G: Graph, seq) -> BouquetSet:
    """Strongly disjoint bouquets from a well ordered edge cover.

    Each bouquet designates its edge that comes last in ``seq``; those edges
    are asserted to form an induced matching.
    """
    idx = _edge_indices(G, seq)
    check = is_well_ordered(G.complex, idx)
    if not check:
        raise ComplexError(check.describe(G.complex))
    B = bouquet_decomposition(G, idx)
    pos = {G.edges[i]: p for p, i in enumerate(idx)}
    designated = tuple(max(b.edges, key=pos.__getitem__) for b in B.bouquets)
    out = BouquetSet(B.bouquets, designated)
    assert is_strongly_disjoint(G, out), "last edges of the bouquets are not an induced matching"
    return out


def well_ordered_edge_order(G: Graph, edges: Sequence) -> tuple[int, ...] | None:
    """A permutation of ``edges`` that is a well ordered edge cover, if one exists."""
    idx = _edge_indices(G, edges)
    masks = G.complex.masks
    if not is_minimal_cover(masks, idx, G.complex.full_mask):
        return None
    return well_ordered_order(masks, idx)


def minimal_edge_covers(G: Graph) -> list[tuple[int, ...]]:
    return minimal_cover_indices(G.complex.masks, G.complex.full_mask)
