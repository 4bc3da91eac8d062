"""Input parsing, JSON schemas and text rendering for the command line.

Complex files: one facet per line as whitespace-separated vertex names;
``#`` starts a comment. Line order is the facet (generator) order.
Graph files: one edge per line, exactly two vertex names.
"""

from __future__ import annotations

import re
import sys
from pathlib import Path

from .complex import SimplicialComplex, label, monomial, normalize_complex
from .errors import ComplexError
from .graphs import Graph
from .table import BettiTable

TOKEN = re.compile(r"[A-Za-z0-9_.'\[\]{}^-]+")


class ParseError(ComplexError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def _lines(text: str):
    """``(line_number, tokens)`` for each non-blank, non-comment line."""
    for n, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = body.split()
        for t in tokens:
            if not TOKEN.fullmatch(t):
                raise ParseError(f"bad vertex name {t!r}", n)
        yield n, tokens


def parse_complex(text: str) -> tuple[SimplicialComplex, list[str]]:
    """Parse complex text; returns the normalized complex and warnings."""
    rows = list(_lines(text))
    if not rows:
        raise ParseError("no facets in input")
    cx, dropped = normalize_complex([tokens for _, tokens in rows])
    warnings = []
    for i, j in dropped:
        li, lj = rows[i][0], rows[j][0]
        what = "repeats" if frozenset(rows[i][1]) == frozenset(rows[j][1]) else "is contained in"
        warnings.append(f"line {li} dropped: facet {' '.join(rows[i][1])} {what} line {lj}")
    return cx, warnings


def parse_graph(text: str) -> tuple[Graph, list[str]]:
    rows = list(_lines(text))
    if not rows:
        raise ParseError("no edges in input")
    warnings = []
    seen: dict[frozenset, int] = {}
    pairs = []
    for n, tokens in rows:
        if len(tokens) != 2:
            raise ParseError(f"an edge needs exactly two vertices, got {len(tokens)}", n)
        e = frozenset(tokens)
        if len(e) == 1:
            raise ParseError(f"loop at {tokens[0]}", n)
        if e in seen:
            warnings.append(f"line {n} dropped: repeats the edge on line {seen[e]}")
            continue
        seen[e] = n
        pairs.append(tokens)
    return Graph.from_edges(pairs), warnings


def read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ComplexError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise ComplexError(f"{path} is not UTF-8 text") from None


def format_complex(cx: SimplicialComplex) -> str:
    """Complex in the input file format (round-trips through :func:`parse_complex`)."""
    return "".join(" ".join(cx.facet_names(i)) + "\n" for i in range(len(cx)))


def format_table(table: BettiTable) -> str:
    kind = "S/I" if table.convention == "quotient" else "I"
    lines = [f"b_{{{i},{monomial(table.degree_names(d))}}}({kind}) = {rank}" for d, i, rank in table.items()]
    return "\n".join(lines) + ("\n" if lines else "")


def format_sequence(seq) -> str:
    return ", ".join(label(i) for i in seq)


# -- JSON schemas -------------------------------------------------------------

_INDEX_LIST = {"type": "array", "items": {"type": "integer", "minimum": 0}}

BETTI_TABLE_SCHEMA = {
    "type": "object",
    "required": ["convention", "entries"],
    "properties": {
        "convention": {"enum": ["quotient", "ideal"]},
        "vertices": {"type": "array", "items": {"type": "string"}},
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["degree", "i"],
                "properties": {
                    "degree": {"type": "array", "items": {"type": "string"}},
                    "i": {"type": "integer", "minimum": 0},
                    "rank": {"type": "integer", "minimum": 1},
                },
            },
        },
    },
}

WOFC_CERTIFICATE_SCHEMA = {
    "type": "object",
    "required": ["cover", "order", "witnesses"],
    "properties": {
        "cover": _INDEX_LIST,
        "order": _INDEX_LIST,
        "witnesses": {
            "type": "object",
            "patternProperties": {"^[0-9]+$": {"type": "integer", "minimum": 0}},
            "additionalProperties": False,
        },
    },
}

LYUBEZNIK_SCHEMA = {
    "type": "object",
    "required": ["order", "faces", "facets"],
    "properties": {
        "order": _INDEX_LIST,
        "faces": {"type": "array", "items": _INDEX_LIST},
        "facets": {"type": "array", "items": _INDEX_LIST},
    },
}

_EDGE = {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2}

BOUQUETS_SCHEMA = {
    "type": "object",
    "required": ["bouquets"],
    "properties": {
        "bouquets": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["root", "leaves", "edges"],
                "properties": {
                    "root": {"type": "string"},
                    "leaves": {"type": "array", "items": {"type": "string"}, "minItems": 1},
                    "edges": {"type": "array", "items": _EDGE},
                    "designated": _EDGE,
                },
            },
        }
    },
}
