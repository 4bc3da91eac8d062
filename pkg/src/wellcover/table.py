"""Multigraded Betti tables and their graded diagrams."""

from __future__ import annotations

from dataclasses import dataclass, field

QUOTIENT = "quotient"  # b_{i,m}(S/I)
IDEAL = "ideal"  # b_{i,m}(I) = b_{i+1,m}(S/I)
CONVENTIONS = (QUOTIENT, IDEAL)


@dataclass
class BettiTable:
    """Nonzero multigraded Betti numbers indexed by squarefree multidegree.

    A multidegree is the frozenset of its variables. ``vertices`` fixes the
    variable order used for sorting and printing. In the quotient convention
    the entry ``b_{0,1}(S/I) = 1`` is implicit and never stored.
    """

    vertices: tuple[str, ...]
    entries: dict[frozenset[str], dict[int, int]] = field(default_factory=dict)
    convention: str = QUOTIENT

    def __post_init__(self):
        if self.convention not in CONVENTIONS:
            raise ValueError(f"unknown convention {self.convention!r}")

    def add(self, degree, i: int, rank: int = 1) -> None:
        if rank <= 0:
            return
        row = self.entries.setdefault(frozenset(degree), {})
        row[i] = row.get(i, 0) + rank

    def get(self, i: int, degree) -> int:
        return self.entries.get(frozenset(degree), {}).get(i, 0)

    def _key(self, degree):
        pos = {v: n for n, v in enumerate(self.vertices)}
        return (len(degree), sorted(pos.get(v, len(pos)) for v in degree), sorted(degree))

    def degree_names(self, degree) -> list[str]:
        pos = {v: n for n, v in enumerate(self.vertices)}
        return sorted(degree, key=lambda v: (pos.get(v, len(pos)), v))

    def items(self):
        """``(degree, i, rank)`` triples sorted by multidegree then index."""
        for degree in sorted(self.entries, key=self._key):
            for i, rank in sorted(self.entries[degree].items()):
                yield degree, i, rank

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.convention == other.convention and self.entries == other.entries

    def in_convention(self, convention: str) -> BettiTable:
        if convention == self.convention:
            return self
        shift = 1 if convention == QUOTIENT else -1
        out = BettiTable(self.vertices, convention=convention)
        for degree, i, rank in self.items():
            out.add(degree, i + shift, rank)
        return out

    def graded(self) -> dict[tuple[int, int], int]:
        """``{(i, j): b_{i,j}}`` summed over multidegrees of total degree ``j``."""
        out: dict[tuple[int, int], int] = {}
        for degree, i, rank in self.items():
            key = (i, len(degree))
            out[key] = out.get(key, 0) + rank
        return out

    def projective_dimension(self) -> int:
        q = self.in_convention(QUOTIENT)
        return max((i for _, i, _ in q.items()), default=0)

    def regularity(self) -> int:
        q = self.in_convention(QUOTIENT)
        return max((len(d) - i for d, i, _ in q.items()), default=0)

    def diff(self, other: BettiTable) -> list[tuple[list[str], int, int, int]]:
        """Entries where the two tables disagree: ``(degree, i, mine, theirs)``."""
        other = other.in_convention(self.convention)
        out = []
        degrees = set(self.entries) | set(other.entries)
        for degree in sorted(degrees, key=self._key):
            mine = self.entries.get(degree, {})
            theirs = other.entries.get(degree, {})
            for i in sorted(set(mine) | set(theirs)):
                a, b = mine.get(i, 0), theirs.get(i, 0)
                if a != b:
                    out.append((self.degree_names(degree), i, a, b))
        return out

    def to_json(self) -> dict:
        return {
            "convention": self.convention,
            "vertices": list(self.vertices),
            "entries": [
                {"degree": self.degree_names(d), "i": i, "rank": rank} for d, i, rank in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> BettiTable:
        out = cls(tuple(data.get("vertices", ())), convention=data["convention"])
        for e in data["entries"]:
            out.add(e["degree"], e["i"], e.get("rank", 1))
        return out


@dataclass(frozen=True)
class BettiDiagram:
    """Graded Betti numbers of ``S/I`` laid out by column ``i`` and row ``j``.

    Cell ``(i, j)`` holds ``b_{i, i+j}(S/I)``; ``b_{0,0} = 1`` is included.
    """

    cells: dict[tuple[int, int], int]

    @classmethod
    def from_table(cls, table: BettiTable) -> BettiDiagram:
        cells = {(0, 0): 1}
        for (i, j), n in table.in_convention(QUOTIENT).graded().items():
            cells[(i, j - i)] = cells.get((i, j - i), 0) + n
        return cls(cells)

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.cells)

    @property
    def reg(self) -> int:
        return max(j for _, j in self.cells)

    def betti(self, i: int, j: int) -> int:
        """Graded ``b_{i,j}(S/I)`` (``j`` is the total degree, not the row)."""
        return self.cells.get((i, j - i), 0)

    def totals(self) -> list[int]:
        return [sum(n for (c, _), n in self.cells.items() if c == i) for i in range(self.pd + 1)]

    def render(self) -> str:
        cols = range(self.pd + 1)
        body = [[str(self.cells[(i, j)]) if (i, j) in self.cells else "--" for i in cols]
                for j in range(self.reg + 1)]
        total = [str(t) for t in self.totals()]
        header = [str(i) for i in cols]
        w = max(len(c) for row in body + [total, header] for c in row)
        lw = max(len("Total"), len(str(self.reg)))

        def line(name, cells):
            return f"{name:>{lw}} | " + " ".join(c.rjust(w) for c in cells)

        rule = "-" * (lw + 1) + "+" + "-" * (len(cols) * (w + 1))
        lines = [line("", header), rule, line("Total", total), rule]
        lines += [line(str(j), row) for j, row in enumerate(body)]
        return "\n".join(s.rstrip() for s in lines) + "\n"
