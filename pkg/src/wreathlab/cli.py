"""Command-line front end.

Factor specs are ``family:size`` (complete, path, cycle), ``paw`` or
``file:PATH`` (edge-list format).  Vertex labels in printed output are
1-based; edge-list files keep the 0-based ids of the file format.

Exit codes: 0 ok, 1 verification mismatch, 2 usage or graph error,
3 size budget exceeded, 4 I/O failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import invariants as inv
from .errors import BudgetExceededError, GraphError
from .graph import Graph, connected_components, family, is_connected, paw
from .metric import antipodal, antipodal_of_wreath, hamiltonian_antipodal, require_factors
from .products import (
    WreathCodec,
    check_budget,
    cartesian_product,
    direct_product,
    wreath_product,
)
from .report import GROUPS, INVARIANTS, METHODS, InvariantReport, graph_report, verify_pair, wreath_report
from .serialize import parse, serialize, to_dot
from .tsp import members, rho_closed_form, rho_matrix

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET, EXIT_IO = 0, 1, 2, 3, 4

CORPUS_BASES = ("complete:2", "complete:3", "path:3", "cycle:3", "cycle:4")
CORPUS_COLOURS = ("complete:2", "complete:3", "path:3", "cycle:3", "paw")
METHOD_ALIASES = {
    "bruteforce": ("bruteforce",),
    "formula": ("formula",),
    "closed": ("complete_closed", "path_closed"),
    "all": METHODS,
}


@dataclass(frozen=True)
class Factor:
    spec: str
    graph: Graph
    kind: str | None = None  # family name when built from one


def parse_factor(spec: str) -> Factor:
    if spec == "paw":
        return Factor(spec, paw())
    if spec.startswith("file:"):
        path = spec[5:]
        with open(path, encoding="utf-8") as fh:
            return Factor(spec, parse(fh.read()))
    kind, sep, size = spec.partition(":")
    if not sep:
        raise GraphError(f"factor spec {spec!r} is not family:size, paw or file:PATH")
    try:
        n = int(size)
    except ValueError:
        raise GraphError(f"bad size in factor spec {spec!r}") from None
    return Factor(spec, family(kind, n), kind)


def parse_set(text: str, n: int) -> int:
    """Comma-separated 1-based labels, ``all`` or ``none`` to a bitmask."""
    text = text.strip()
    if text == "all":
        return (1 << n) - 1
    if text in ("", "none"):
        return 0
    mask = 0
    for tok in text.split(","):
        try:
            label = int(tok)
        except ValueError:
            raise GraphError(f"bad vertex label {tok!r}") from None
        if not 1 <= label <= n:
            raise GraphError(f"vertex label {label} outside 1..{n}")
        mask |= 1 << (label - 1)
    return mask


def _split_list(text: str, choices: dict[str, tuple[str, ...]], what: str) -> tuple[str, ...]:
    out: list[str] = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok not in choices:
            raise GraphError(f"unknown {what} {tok!r}; choose from {', '.join(choices)}")
        out.extend(x for x in choices[tok] if x not in out)
    return tuple(out)


INVARIANT_CHOICES = {**GROUPS, **{k: (k,) for k in INVARIANTS}}


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _product(args: argparse.Namespace) -> tuple[Graph, list[str]]:
    g = parse_factor(args.g).graph
    h = parse_factor(args.h).graph
    kind = args.product
    if kind == "wreath":
        w = wreath_product(g, h, budget=args.budget)
        codec = WreathCodec(g.n, h.n)
        return w, [str(codec.decode(i)) for i in range(w.n)]
    check_budget(g.n * h.n, args.budget)
    w = cartesian_product(g, h) if kind == "cartesian" else direct_product(g, h)
    return w, [f"({u + 1},{v + 1})" for u in range(g.n) for v in range(h.n)]


def cmd_build(args: argparse.Namespace) -> int:
    w, labels = _product(args)
    _emit(args, to_dot(w, args.product, labels) if args.dot else serialize(w))
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    if args.h is None:
        g = parse_factor(args.g).graph
        _emit(args, to_dot(g, "G", [str(i + 1) for i in range(g.n)]))
        return EXIT_OK
    w, labels = _product(args)
    _emit(args, to_dot(w, args.product, labels))
    return EXIT_OK


def cmd_index(args: argparse.Namespace) -> int:
    wanted = _split_list(args.invariant, INVARIANT_CHOICES, "invariant")
    fg = parse_factor(args.g)
    if args.h is None:
        report = graph_report(fg.graph, wanted, fg.spec)
    else:
        fh = parse_factor(args.h)
        methods = _split_list(args.method, METHOD_ALIASES, "method")
        report = wreath_report(fg.graph, fh.graph, wanted, methods, (fg.spec, fh.spec), args.budget)
    _emit(args, report.render(args.format, args.canonical))
    return EXIT_OK


def _corpus_pairs(args: argparse.Namespace) -> list[tuple[str, str]]:
    if args.g is not None or args.h is not None:
        if args.g is None or args.h is None:
            raise GraphError("verify needs both --g and --h, or neither for the default corpus")
        return [(args.g, args.h)]
    return [(b, c) for b in CORPUS_BASES for c in CORPUS_COLOURS]


def cmd_verify(args: argparse.Namespace) -> int:
    wanted = _split_list(args.invariant, INVARIANT_CHOICES, "invariant")
    reports: list[InvariantReport] = []
    for gs, hs in _corpus_pairs(args):
        fg, fh = parse_factor(gs), parse_factor(hs)
        reports.append(verify_pair(fg.graph, fh.graph, wanted, (gs, hs), args.budget, args.distance_limit))
    ok = all(r.consistent for r in reports)
    if args.format == "json":
        docs = [json.loads(r.to_json(args.canonical)) for r in reports]
        text = json.dumps({"pairs": docs, "consistent": ok}, indent=2, sort_keys=True) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["g", "h", "invariant", "method", "value"])
        for r in reports:
            for name, method, value in r.rows():
                writer.writerow([r.factors["g"], r.factors["h"], name, method, str(value)])
            for k, passed in sorted(r.checks.items()):
                writer.writerow([r.factors["g"], r.factors["h"], k, "check", "pass" if passed else "FAIL"])
        text = buf.getvalue()
    else:
        blocks = []
        for r in reports:
            head = f"== {r.factors['g']} wr {r.factors['h']}: {'ok' if r.consistent else 'MISMATCH'}"
            body = r.to_kv(args.canonical) if args.format == "kv" else r.to_table(args.canonical)
            blocks.append(head + "\n" + body)
        blocks.append(f"{sum(r.consistent for r in reports)}/{len(reports)} pairs consistent\n")
        text = "\n".join(blocks)
    _emit(args, text)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_antipodal(args: argparse.Namespace) -> int:
    g = parse_factor(args.g).graph
    labels = None
    if args.h is not None:
        h = parse_factor(args.h).graph
        require_factors(g, h)
        if args.via == "formula":
            a = antipodal_of_wreath(g, h)
        else:
            a = antipodal(wreath_product(g, h, budget=args.budget))
        codec = WreathCodec(g.n, h.n)
        labels = [str(codec.decode(i)) for i in range(a.n)]
    elif args.kind == "hamiltonian":
        a = hamiltonian_antipodal(g)
    else:
        if not is_connected(g):
            raise GraphError("antipodal graph needs a connected graph")
        a = antipodal(g)
    if labels is None:
        labels = [str(i + 1) for i in range(a.n)]
    comps = len(connected_components(a))
    if args.dot:
        _emit(args, to_dot(a, "A", labels))
    else:
        _emit(args, f"# components: {comps}\n" + serialize(a))
    return EXIT_OK


def _rho_rows(mat: np.ndarray) -> list[list[int]]:
    return [[int(x) for x in row] for row in mat]


def cmd_rho(args: argparse.Namespace) -> int:
    fg = parse_factor(args.g)
    g = fg.graph
    if not is_connected(g):
        raise GraphError("rho needs a connected graph")
    mask = parse_set(args.set, g.n)
    labels = [i + 1 for i in members(mask)]
    if args.method == "closed":
        if fg.kind not in ("complete", "path") or not labels:
            raise GraphError("closed forms cover complete:N and path:N with a nonempty set")
        n = g.n
        mat = np.array([[rho_closed_form(fg.kind, n, labels, u, v) for v in range(1, n + 1)] for u in range(1, n + 1)])
    else:
        mat = rho_matrix(g, mask)
    rows = _rho_rows(mat)
    if args.format == "json":
        text = json.dumps({"graph": fg.spec, "set": labels, "method": args.method, "matrix": rows}, sort_keys=True) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([""] + list(range(1, g.n + 1)))
        for i, row in enumerate(rows, 1):
            writer.writerow([i] + row)
        text = buf.getvalue()
    else:
        width = max(len(str(g.n)), max(len(str(x)) for row in rows for x in row))
        lines = [" " * (width + 1) + " ".join(f"{j:>{width}}" for j in range(1, g.n + 1))]
        for i, row in enumerate(rows, 1):
            lines.append(f"{i:>{width}} " + " ".join(f"{x:>{width}}" for x in row))
        text = "\n".join(lines) + "\n"
    _emit(args, text)
    return EXIT_OK


def _vector_str(vec: list[Fraction]) -> str:
    return "(" + ",".join(str(x) for x in vec) + ")"


def cmd_search(args: argparse.Namespace) -> int:
    import networkx as nx

    groups: dict[tuple[int, tuple[Fraction, ...]], list[tuple[int, Graph]]] = {}
    for idx, nxg in enumerate(nx.graph_atlas_g()):
        n = nxg.number_of_nodes()
        if n < args.min_n or n > args.max_n or not nx.is_connected(nxg):
            continue
        g = Graph(n, tuple(tuple(sorted(nxg.adj[u])) for u in range(n)))
        groups.setdefault((n, tuple(inv.wiener_vector(g))), []).append((idx, g))
    pairs = []
    for (n, vec), members_ in sorted(groups.items(), key=lambda kv: (kv[0][0], kv[1][0][0])):
        for i in range(len(members_)):
            for j in range(i + 1, len(members_)):
                (ia, ga), (ib, gb) = members_[i], members_[j]
                pairs.append((n, vec, ia, ga, ib, gb))
    if args.format == "json":
        doc = [
            {
                "n": n,
                "vector": [str(x) for x in vec],
                "atlas": [ia, ib],
                "edges": [[[u + 1, v + 1] for u, v in ga.edges()], [[u + 1, v + 1] for u, v in gb.edges()]],
            }
            for n, vec, ia, ga, ib, gb in pairs
        ]
        text = json.dumps({"pairs": doc, "count": len(doc)}, indent=2, sort_keys=True) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "vector", "atlas_a", "atlas_b", "edges_a", "edges_b"])
        for n, vec, ia, ga, ib, gb in pairs:
            writer.writerow([n, _vector_str(list(vec)), ia, ib, _edge_str(ga), _edge_str(gb)])
        text = buf.getvalue()
    else:
        lines = [f"{len(pairs)} pairs with equal Wiener vectors (n in {args.min_n}..{args.max_n})"]
        for n, vec, ia, ga, ib, gb in pairs:
            lines.append(f"n={n} {_vector_str(list(vec))}")
            lines.append(f"  atlas {ia}: {_edge_str(ga)}")
            lines.append(f"  atlas {ib}: {_edge_str(gb)}")
        text = "\n".join(lines) + "\n"
    _emit(args, text)
    return EXIT_OK


def _edge_str(g: Graph) -> str:
    return " ".join(f"{u + 1}-{v + 1}" for u, v in g.edges())


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "kv", "json", "csv"), default="table")
    common.add_argument("--canonical", action="store_true", help="omit timings so output is reproducible")
    common.add_argument("--out", metavar="FILE", help="write to FILE instead of stdout")
    common.add_argument("--budget", type=int, default=None, help="max vertices of a materialised product")

    parser = argparse.ArgumentParser(prog="wreathlab", description="Wreath products of graphs and their indices.")
    sub = parser.add_subparsers(dest="command", required=True)

    def pair(p: argparse.ArgumentParser, need_h: bool) -> None:
        p.add_argument("--g", required=True, help="base graph G (family:size, paw, file:PATH)")
        p.add_argument("--h", required=need_h, help="colour graph H")

    p = sub.add_parser("build", parents=[common], help="materialise a product and print its edge list")
    pair(p, True)
    p.add_argument("--product", choices=("wreath", "cartesian", "direct"), default="wreath")
    p.add_argument("--dot", action="store_true", help="print DOT instead of the edge list")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("index", parents=[common], help="topological indices of G or of G wr H")
    pair(p, False)
    p.add_argument("--invariant", default="all", help="comma list of " + ", ".join(INVARIANT_CHOICES))
    p.add_argument("--method", default="bruteforce,formula", help="comma list of " + ", ".join(METHOD_ALIASES))
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("verify", parents=[common], help="check formulas against brute force")
    p.add_argument("--g", help="base graph; omit --g and --h for the default corpus")
    p.add_argument("--h", help="colour graph")
    p.add_argument("--invariant", default="all")
    p.add_argument("--distance-limit", type=int, default=200, help="largest product whose distances are checked")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("antipodal", parents=[common], help="antipodal graphs")
    pair(p, False)
    p.add_argument("--kind", choices=("plain", "hamiltonian"), default="plain", help="for a single graph")
    p.add_argument("--via", choices=("formula", "bruteforce"), default="formula", help="for G wr H")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_antipodal)

    p = sub.add_parser("rho", parents=[common], help="shortest covering-walk matrix rho_A")
    p.add_argument("--g", required=True)
    p.add_argument("--set", default="all", help="1-based labels like 3,5,6, or all, or none")
    p.add_argument("--method", choices=("dp", "closed"), default="dp")
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("export", parents=[common], help="DOT export of a graph or a product")
    pair(p, False)
    p.add_argument("--product", choices=("wreath", "cartesian", "direct"), default="wreath")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("search-wiener-vector", parents=[common], help="small graphs sharing a Wiener vector")
    p.add_argument("--min-n", type=int, default=2)
    p.add_argument("--max-n", type=int, default=7, choices=range(2, 8), metavar="N")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"wreathlab: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except GraphError as exc:
        print(f"wreathlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"wreathlab: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
