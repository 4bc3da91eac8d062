"""Command line interface: ``wellcover <verb> [FILE] [options]``.

Exit codes: 0 success, 1 usage or input error, 2 a size cap refused the
computation, 3 ``compare`` found a disagreement.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field

from . import limits
from .betti import multigraded_betti, nonvanishing_certificates, pd_reg, regularity_lower_bounds, top_betti_recursive
from .complex import (
    UNIT_IDEAL,
    component_indices,
    is_forest,
    is_leaf,
    label,
    localize,
    localize_at,
    monomial,
)
from .covers import (
    find_well_ordered_covers,
    is_well_ordered,
    max_induced_matching_weight,
    minimal_facet_covers,
    minimal_vertex_covers,
)
from .errors import CapExceeded, WellcoverError
from .generate import random_complex, random_graph
from .graphs import bouquets_from_wofc, minimal_edge_covers, well_ordered_edge_order, wofc_from_bouquets
from .lyubeznik import barile_witnesses, boundary_matrices, chain_condition_holds, lyubeznik_complex, order_from_wofc
from .oracle import betti_oracle
from .table import BettiDiagram, BettiTable
from .textio import format_complex, format_sequence, format_table, parse_complex, parse_graph, read_text

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_MISMATCH = 0, 1, 2, 3

VERBS = (
    "betti",
    "oracle",
    "compare",
    "is-forest",
    "covers",
    "wofc",
    "lyubeznik",
    "localize",
    "bounds",
    "graph-bouquets",
)


class UsageError(WellcoverError):
    pass


# -- compare ------------------------------------------------------------------


@dataclass
class CompareReport:
    forest: bool
    degrees: int = 0
    mismatches: list = field(default_factory=list)
    confirmed: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    uncertified: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.violations

    def lines(self) -> list[str]:
        if self.forest:
            if self.ok:
                return [f"MATCH ({self.degrees} multidegrees)"]
            out = [f"MISMATCH ({len(self.mismatches)} of {self.degrees} multidegrees)"]
            for degree, i, mine, theirs in self.mismatches:
                out.append(f"  b_{{{i},{monomial(degree)}}}: covers {mine}, oracle {theirs}")
            return out
        out = ["not a forest: checking that every well ordered cover is confirmed by the oracle"]
        for degree, i, seq, rank in self.confirmed:
            note = f" (oracle rank {rank})" if rank > 1 else ""
            out.append(f"  confirmed b_{{{i},{monomial(degree)}}} >= 1 via {format_sequence(seq)}{note}")
        for degree, i, seq, rank in self.violations:
            out.append(f"  VIOLATION b_{{{i},{monomial(degree)}}} = 0 despite {format_sequence(seq)}")
        for degree, i, rank in self.uncertified:
            out.append(f"  oracle b_{{{i},{monomial(degree)}}} = {rank} has no certificate (expected for non-forests)")
        verdict = "SUFFICIENT" if self.ok else "VIOLATED"
        out.append(f"{verdict} ({len(self.confirmed)} confirmed, {len(self.violations)} violations)")
        return out

    def to_json(self) -> dict:
        return {
            "forest": self.forest,
            "ok": self.ok,
            "degrees": self.degrees,
            "mismatches": [{"degree": d, "i": i, "covers": a, "oracle": b} for d, i, a, b in self.mismatches],
            "confirmed": [{"degree": d, "i": i, "order": list(s), "oracle": r} for d, i, s, r in self.confirmed],
            "violations": [{"degree": d, "i": i, "order": list(s)} for d, i, s, _ in self.violations],
            "uncertified": [{"degree": d, "i": i, "oracle": r} for d, i, r in self.uncertified],
        }


def run_compare(cx) -> CompareReport:
    """Cross-check the cover-based Betti numbers against the homology oracle.

    Forests must agree exactly. For other complexes only the direction
    "well ordered cover of cardinality i at m implies b_{i,m} >= 1" is
    checked; oracle entries without a certificate are listed, not flagged.
    """
    oracle = betti_oracle(cx)
    if is_forest(cx):
        table = multigraded_betti(cx)
        return CompareReport(True, len(oracle), mismatches=table.diff(oracle))
    report = CompareReport(False, len(oracle))
    certified = set()
    for m, i, seq in nonvanishing_certificates(cx):
        names = cx.names_of(m)
        rank = oracle.get(i, names)
        certified.add((frozenset(names), i))
        (report.confirmed if rank >= 1 else report.violations).append((list(names), i, seq, rank))
    for degree, i, rank in oracle.items():
        if (degree, i) not in certified:
            report.uncertified.append((oracle.degree_names(degree), i, rank))
    return report


# -- argument handling --------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _facet_ref(token: str, q: int) -> int:
    t = token.strip()
    if t[:1] in ("F", "f"):
        t = t[1:]
    try:
        n = int(t)
    except ValueError:
        raise UsageError(f"bad facet reference {token!r}; use F1..F{q} or 1..{q}") from None
    if not 1 <= n <= q:
        raise UsageError(f"facet {token} out of range 1..{q}")
    return n - 1


def _facet_list(text: str, q: int) -> list[int]:
    return [_facet_ref(t, q) for t in text.replace(",", " ").split()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", help="input file ('-' or omitted: standard input)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument(
        "--seed", type=int, help="ignore INPUT and use a random instance drawn with this seed"
    )
    common.add_argument("--random-facets", type=int, default=5, help="facet (edge) bound for --seed")
    common.add_argument("--random-vertices", type=int, default=8, help="vertex bound for --seed")
    caps = common.add_argument_group("caps (also WELLCOVER_<NAME>_CAP in the environment)")
    for name in limits.DEFAULTS:
        caps.add_argument(f"--max-{name}", type=int, metavar="N", help=f"default {limits.DEFAULTS[name]}")

    parser = _Parser(
        prog="wellcover",
        description="Betti numbers of squarefree monomial ideals via well ordered facet covers.",
        epilog="Facets are numbered F1, F2, ... in input order (after dropping non-maximal lines).",
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB", parser_class=_Parser)

    p = sub.add_parser("betti", parents=[common], help="Betti table and diagram of a forest")
    p.add_argument("--convention", choices=("quotient", "ideal"), default="quotient")

    p = sub.add_parser("oracle", parents=[common], help="Betti table of any complex by Taylor homology")
    p.add_argument("--convention", choices=("quotient", "ideal"), default="quotient")

    sub.add_parser("compare", parents=[common], help="cross-check covers against the oracle")

    p = sub.add_parser("is-forest", parents=[common], help="forest test, or leaf test with --facet")
    p.add_argument("--facet", help="report whether this facet is a leaf")

    sub.add_parser("covers", parents=[common], help="minimal facet/vertex covers, induced matchings")

    p = sub.add_parser("wofc", parents=[common], help="find or check well ordered facet covers")
    p.add_argument("--order", help="check this facet sequence, e.g. F1,F2,F3")

    p = sub.add_parser("lyubeznik", parents=[common], help="Lyubeznik complex and Barile witnesses")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--order", help="generator order, smallest first (default: input order)")
    g.add_argument("--from-wofc", metavar="SEQ", help="use the order induced by this well ordered cover")

    p = sub.add_parser("localize", parents=[common], help="localize away from a facet or at a prime")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--facet", help="remove this facet and invert the variables outside it")
    g.add_argument("--at", metavar="VARS", help="keep only these variables (a vertex cover prime)")

    sub.add_parser("bounds", parents=[common], help="regularity lower bounds for any complex")

    p = sub.add_parser("graph-bouquets", parents=[common], help="well ordered edge covers <-> bouquets")
    p.add_argument("--order", help="convert this edge sequence (edge numbers E1.. or 1..)")
    return parser


def _apply_caps(args) -> None:
    for name in limits.DEFAULTS:
        value = getattr(args, f"max_{name}", None)
        if value is not None:
            if value < 1:
                raise UsageError(f"--max-{name} must be positive")
            limits.override(name, value)


def _load(args, graph: bool = False):
    if args.seed is not None:
        rng = random.Random(args.seed)
        if graph:
            return random_graph(rng, args.random_facets, args.random_vertices), []
        return random_complex(rng, args.random_facets, args.random_vertices), []
    text = read_text(args.input)
    return parse_graph(text) if graph else parse_complex(text)


# -- verbs --------------------------------------------------------------------


def _emit(args, payload, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _table_output(args, table: BettiTable) -> None:
    diagram = BettiDiagram.from_table(table)
    payload = table.to_json()
    payload.update(pd=diagram.pd, reg=diagram.reg, totals=diagram.totals())
    _emit(args, payload, diagram.render() + "\n" + format_table(table))


def cmd_betti(args, cx):
    _table_output(args, multigraded_betti(cx, convention=args.convention))


def cmd_oracle(args, cx):
    _table_output(args, betti_oracle(cx, convention=args.convention))


def cmd_compare(args, cx):
    report = run_compare(cx)
    _emit(args, report.to_json(), "\n".join(report.lines()))
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_is_forest(args, cx):
    if args.facet:
        f = _facet_ref(args.facet, len(cx))
        check = is_leaf(cx, f)
        w = check.witness
        payload = {
            "facet": f,
            "leaf": check.is_leaf,
            "witness": w,
            "free_vertices": list(check.free_vertices),
        }
        if check:
            via = "it is the only facet" if isinstance(w, str) else f"witness {label(w)}"
            text = f"{label(f)} is a leaf ({via}); free vertices: {' '.join(check.free_vertices)}"
        else:
            text = f"{label(f)} is not a leaf"
        _emit(args, payload, text)
        return
    check = is_forest(cx)
    payload = {"forest": check.is_forest, "counterexample": list(check.counterexample or [])}
    if check:
        text = "forest" + (" (tree)" if len(component_indices(cx.masks)) == 1 else "")
    else:
        text = f"not a forest: {format_sequence(check.counterexample)} has no leaf"
    _emit(args, payload, text)


def cmd_covers(args, cx):
    fcs = minimal_facet_covers(cx)
    vcs = minimal_vertex_covers(cx)
    value, matching = max_induced_matching_weight(cx)
    payload = {
        "facet_covers": [list(c) for c in fcs],
        "vertex_covers": [sorted(c, key=cx.vertices.index) for c in vcs],
        "induced_matching": {"value": value, "facets": list(matching)},
    }
    lines = ["minimal facet covers:"]
    lines += [f"  {{{format_sequence(c)}}}" for c in fcs]
    lines.append("minimal vertex covers:")
    lines += ["  {" + " ".join(sorted(c, key=cx.vertices.index)) + "}" for c in vcs]
    lines.append(f"best induced matching: {{{format_sequence(matching)}}} with (vertices - facets) = {value}")
    _emit(args, payload, "\n".join(lines))


def _certificate_lines(cx, check) -> list[str]:
    out = []
    for h, p in sorted(check.witnesses.items()):
        rest = [label(h)] + [label(i) for i in check.order[p + 1 :]]
        out.append(f"  {label(h)}: position {p + 1}, {label(check.order[p])} ⊆ {' ∪ '.join(rest)}")
    return out


def cmd_wofc(args, cx):
    if args.order:
        check = is_well_ordered(cx, _facet_list(args.order, len(cx)))
        payload = dict(check.to_json(), well_ordered=check.ok, reason=check.reason)
        lines = [check.describe(cx)] + (_certificate_lines(cx, check) if check else [])
        _emit(args, payload, "\n".join(lines))
        return
    found = find_well_ordered_covers(cx)
    results = []
    lines = []
    for k, seq in found:
        check = is_well_ordered(cx, seq)
        results.append(dict(check.to_json(), cardinality=k))
        lines.append(f"cardinality {k}: {format_sequence(seq)}")
        lines += _certificate_lines(cx, check)
    if not found:
        lines.append("no well ordered facet cover")
    _emit(args, {"covers": results}, "\n".join(lines))


def cmd_lyubeznik(args, cx):
    if args.from_wofc:
        order = order_from_wofc(cx, _facet_list(args.from_wofc, len(cx)))
    elif args.order:
        order = _facet_list(args.order, len(cx))
    else:
        order = None
    lam = lyubeznik_complex(cx, order)
    witnesses = barile_witnesses(cx, lam=lam)
    chain_ok = chain_condition_holds(boundary_matrices(lam))
    payload = lam.to_json()
    payload["barile"] = [
        {"face": list(w.face), "degree": list(cx.names_of(w.degree)), "i": w.index} for w in witnesses
    ]
    payload["d_squared_zero"] = chain_ok
    lines = [
        "order: " + " < ".join(label(i) for i in lam.order),
        f"faces: {len(lam.faces)}",
        "facets:",
    ]
    lines += [f"  {{{format_sequence(f)}}}" for f in lam.facets]
    lines.append("Barile witnesses:")
    lines += [
        f"  {{{format_sequence(w.face)}}} certifies b_{{{w.index},{monomial(cx.names_of(w.degree))}}}(S/I) != 0"
        for w in witnesses
    ]
    lines.append(f"d o d = 0: {'yes' if chain_ok else 'NO'}")
    _emit(args, payload, "\n".join(lines))


def cmd_localize(args, cx):
    if args.facet:
        result = localize(cx, _facet_ref(args.facet, len(cx)))
    else:
        result = localize_at(cx, args.at.replace(",", " ").split())
    if result is UNIT_IDEAL:
        _emit(args, {"unit_ideal": True, "facets": []}, "# unit ideal")
        return
    payload = {"unit_ideal": False, "facets": [list(result.facet_names(i)) for i in range(len(result))]}
    _emit(args, payload, format_complex(result) or "# zero ideal")


def cmd_bounds(args, cx):
    b = regularity_lower_bounds(cx)
    payload = b.to_json()
    lines = [
        f"well ordered cover bound: {b.wofc_bound} via {format_sequence(b.wofc_witness)}",
        f"induced matching bound:   {b.induced_matching_bound} via {{{format_sequence(b.matching_witness)}}}",
    ]
    if is_forest(cx):
        pd, reg = pd_reg(cx)
        i, _ = top_betti_recursive(cx)
        payload.update(forest=True, pd=pd, reg=reg, top_index=i)
        lines.append(f"forest: pd = {pd}, reg = {reg} (exact)")
    else:
        payload["forest"] = False
    _emit(args, payload, "\n".join(lines))


def _edge_list(G, text: str) -> list[int]:
    out = []
    for t in text.replace(",", " ").split():
        u = t[1:] if t[:1] in ("E", "e") else t
        try:
            n = int(u)
        except ValueError:
            raise UsageError(f"bad edge reference {t!r}") from None
        if not 1 <= n <= len(G.edges):
            raise UsageError(f"edge {t} out of range 1..{len(G.edges)}")
        out.append(n - 1)
    return out


def cmd_graph_bouquets(args, G):
    def describe(seq):
        B = bouquets_from_wofc(G, seq)
        back = wofc_from_bouquets(G, B)
        lines = [f"order: {', '.join('E%d' % (i + 1) for i in seq)}"]
        for b, s in zip(B.bouquets, B.designated):
            lines.append(
                f"  bouquet root {b.root}, leaves {' '.join(b.leaves)}; designated {'-'.join(sorted(s))}"
            )
        lines.append(f"  rebuilt order: {', '.join('E%d' % (i + 1) for i in back)}")
        item = dict(B.to_json(), order=list(seq), rebuilt=list(back))
        return item, lines

    if args.order:
        seq = _edge_list(G, args.order)
        check = is_well_ordered(G.complex, seq)
        if not check:
            _emit(args, {"well_ordered": False, "reason": check.reason}, "not a well ordered edge cover")
            return
        item, lines = describe(seq)
        _emit(args, item, "\n".join(lines))
        return
    items, lines = [], []
    for cover in minimal_edge_covers(G):
        seq = well_ordered_edge_order(G, cover)
        if seq is None:
            continue
        item, more = describe(seq)
        items.append(item)
        lines += more
    if not items:
        lines.append("no well ordered edge cover (no strongly disjoint bouquets cover the graph)")
    _emit(args, {"results": items}, "\n".join(lines))


COMMANDS = {
    "betti": cmd_betti,
    "oracle": cmd_oracle,
    "compare": cmd_compare,
    "is-forest": cmd_is_forest,
    "covers": cmd_covers,
    "wofc": cmd_wofc,
    "lyubeznik": cmd_lyubeznik,
    "localize": cmd_localize,
    "bounds": cmd_bounds,
    "graph-bouquets": cmd_graph_bouquets,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_caps(args)
        obj, warnings = _load(args, graph=args.verb == "graph-bouquets")
        for w in warnings:
            print(f"warning: {w}", file=sys.stderr)
        if args.seed is not None:
            body = (
                "\n".join(" ".join(sorted(e)) for e in obj.edges)
                if args.verb == "graph-bouquets"
                else format_complex(obj).rstrip("\n")
            )
            print(f"# seed {args.seed}:\n" + "\n".join("#   " + ln for ln in body.splitlines()), file=sys.stderr)
        code = COMMANDS[args.verb](args, obj)
        return EXIT_OK if code is None else code
    except CapExceeded as exc:
        print(f"wellcover: refused: {exc}", file=sys.stderr)
        return EXIT_CAP
    except WellcoverError as exc:
        print(f"wellcover: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        for name in limits.DEFAULTS:
            limits.override(name, None)


if __name__ == "__main__":
    sys.exit(main())
