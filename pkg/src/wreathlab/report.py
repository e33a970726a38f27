"""Invariant reports: computing them for a factor pair and rendering them."""
from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import invariants as inv
from .graph import (
    Graph,
    adjacency_matrix,
    all_pairs_distances,
    connected_components,
    diameter,
    is_complete_graph,
    is_path_graph,
    require_connected,
)
from .metric import (
    antipodal,
    antipodal_of_wreath,
    antipodal_of_wreath_connected,
    require_factors,
    wreath_diameter,
    wreath_distance_matrix,
)
from .products import KRONECKER_LIMIT, wreath_adjacency_kronecker, wreath_product

DISTANCE_CHECK_LIMIT = 200

INVARIANTS = ("M1", "M2", "W", "Sz", "diam")
GROUPS = {
    "zagreb": ("M1", "M2"),
    "wiener": ("W",),
    "szeged": ("Sz",),
    "diameter": ("diam",),
    "all": INVARIANTS,
}
METHODS = ("bruteforce", "formula", "complete_closed", "path_closed")


def _fmt(value: int | Fraction) -> str:
    return str(value)


@dataclass
class InvariantReport:
    """Exact invariant values keyed by ``(invariant, method)``."""

    factors: dict[str, str] = field(default_factory=dict)
    values: dict[tuple[str, str], int | Fraction] = field(default_factory=dict)
    timings: dict[tuple[str, str], float] = field(default_factory=dict)
    checks: dict[str, bool] = field(default_factory=dict)

    def add(self, name: str, method: str, value: int | Fraction, seconds: float | None = None) -> None:
        self.values[name, method] = value
        if seconds is not None:
            self.timings[name, method] = seconds

    def get(self, name: str, method: str) -> int | Fraction:
        return self.values[name, method]

    def rows(self) -> list[tuple[str, str, int | Fraction]]:
        order = {k: i for i, k in enumerate(INVARIANTS)}
        morder = {k: i for i, k in enumerate(METHODS)}
        keys = sorted(self.values, key=lambda k: (order.get(k[0], 99), k[0], morder.get(k[1], 99), k[1]))
        return [(name, method, self.values[name, method]) for name, method in keys]

    def mismatches(self) -> list[str]:
        """Invariants whose methods disagree."""
        seen: dict[str, set] = {}
        for (name, _), value in self.values.items():
            seen.setdefault(name, set()).add(value)
        return sorted(name for name, vals in seen.items() if len(vals) > 1)

    def failed_checks(self) -> list[str]:
        return sorted(k for k, ok in self.checks.items() if not ok)

    @property
    def consistent(self) -> bool:
        return not self.mismatches() and not self.failed_checks()

    def to_kv(self, canonical: bool = False) -> str:
        lines = [f"factor.{k}={v}" for k, v in self.factors.items()]
        for name, method, value in self.rows():
            lines.append(f"{name}.{method}={_fmt(value)}")
            if not canonical and (name, method) in self.timings:
                lines.append(f"{name}.{method}.seconds={self.timings[name, method]:.6f}")
        lines.extend(f"check.{k}={'pass' if ok else 'FAIL'}" for k, ok in sorted(self.checks.items()))
        lines.append(f"consistent={'yes' if self.consistent else 'no'}")
        return "\n".join(lines) + "\n"

    def to_json(self, canonical: bool = False) -> str:
        results = []
        for name, method, value in self.rows():
            entry = {"invariant": name, "method": method, "value": _fmt(value)}
            if not canonical and (name, method) in self.timings:
                entry["seconds"] = round(self.timings[name, method], 6)
            results.append(entry)
        doc = {
            "factors": self.factors,
            "results": results,
            "checks": dict(sorted(self.checks.items())),
            "consistent": self.consistent,
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def to_csv(self, canonical: bool = False) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        header = ["invariant", "method", "value"] + ([] if canonical else ["seconds"])
        writer.writerow(header)
        for name, method, value in self.rows():
            row = [name, method, _fmt(value)]
            if not canonical:
                t = self.timings.get((name, method))
                row.append("" if t is None else f"{t:.6f}")
            writer.writerow(row)
        return buf.getvalue()

    def to_table(self, canonical: bool = False) -> str:
        rows = [(n, m, _fmt(v)) for n, m, v in self.rows()]
        head = ("invariant", "method", "value")
        widths = [max(len(r[i]) for r in rows + [head]) for i in range(3)]
        out = [" ".join(f"{c:<{w}}" for c, w in zip(head, widths)).rstrip()]
        for r in rows:
            out.append(" ".join(f"{c:<{w}}" for c, w in zip(r, widths)).rstrip())
        for k, ok in sorted(self.checks.items()):
            out.append(f"check {k}: {'pass' if ok else 'FAIL'}")
        return "\n".join(out) + "\n"

    def render(self, fmt: str, canonical: bool = False) -> str:
        return {
            "table": self.to_table,
            "kv": self.to_kv,
            "json": self.to_json,
            "csv": self.to_csv,
        }[fmt](canonical)


def _timed(report: InvariantReport, names: tuple[str, ...], method: str, fn) -> None:
    t0 = time.perf_counter()
    values = fn()
    dt = time.perf_counter() - t0
    for name, value in zip(names, values):
        report.add(name, method, value, dt)


def graph_report(g: Graph, wanted: tuple[str, ...], label: str = "g") -> InvariantReport:
    """Brute-force indices of a single graph."""
    require_connected(g)
    report = InvariantReport(factors={"g": label})
    if "M1" in wanted or "M2" in wanted:
        _timed(report, ("M1", "M2"), "bruteforce", lambda: inv.zagreb(g))
    if "W" in wanted:
        _timed(report, ("W",), "bruteforce", lambda: (inv.wiener(g),))
    if "Sz" in wanted:
        _timed(report, ("Sz",), "bruteforce", lambda: (inv.szeged(g),))
    if "diam" in wanted:
        _timed(report, ("diam",), "bruteforce", lambda: (diameter(g),))
    return _filter(report, wanted)


def wreath_report(
    g: Graph,
    h: Graph,
    wanted: tuple[str, ...] = INVARIANTS,
    methods: tuple[str, ...] = ("bruteforce", "formula"),
    labels: tuple[str, str] = ("g", "h"),
    budget: int | None = None,
    product: Graph | None = None,
) -> InvariantReport:
    """Indices of ``g`` wr ``h`` by every requested computation path.

    ``bruteforce`` materialises the product; ``formula`` uses the general
    factor formulas; ``complete_closed`` / ``path_closed`` apply only when
    the base graph is complete / a path and are skipped otherwise.
    """
    require_factors(g, h)
    report = InvariantReport(factors={"g": labels[0], "h": labels[1]})
    zag = "M1" in wanted or "M2" in wanted
    if "bruteforce" in methods:
        t0 = time.perf_counter()
        w = product if product is not None else wreath_product(g, h, budget=budget)
        build = time.perf_counter() - t0
        if zag:
            _timed(report, ("M1", "M2"), "bruteforce", lambda: inv.zagreb(w))
        if "W" in wanted:
            _timed(report, ("W",), "bruteforce", lambda: (inv.wiener(w),))
        if "Sz" in wanted:
            _timed(report, ("Sz",), "bruteforce", lambda: (inv.szeged(w),))
        if "diam" in wanted:
            _timed(report, ("diam",), "bruteforce", lambda: (diameter(w),))
        for key in [k for k in report.timings if k[1] == "bruteforce"]:
            report.timings[key] += build
    if "formula" in methods:
        if zag:
            _timed(report, ("M1", "M2"), "formula", lambda: inv.zagreb_wreath_formula(g, h))
        if "W" in wanted:
            _timed(report, ("W",), "formula", lambda: (inv.wiener_wreath(g, h, "vector"),))
        if "Sz" in wanted:
            _timed(report, ("Sz",), "formula", lambda: (inv.szeged_wreath(g, h, "general"),))
        if "diam" in wanted:
            _timed(report, ("diam",), "formula", lambda: (wreath_diameter(g, h),))
    if "complete_closed" in methods and is_complete_graph(g):
        if "W" in wanted:
            _timed(report, ("W",), "complete_closed", lambda: (inv.wiener_wreath(g, h, "complete_closed"),))
        if "Sz" in wanted:
            _timed(report, ("Sz",), "complete_closed", lambda: (inv.szeged_wreath(g, h, "complete_closed"),))
    if "path_closed" in methods and is_path_graph(g) and g.n > 2 and "W" in wanted:
        _timed(report, ("W",), "path_closed", lambda: (inv.wiener_wreath(g, h, "path_closed"),))
    return _filter(report, wanted)


def _filter(report: InvariantReport, wanted: tuple[str, ...]) -> InvariantReport:
    report.values = {k: v for k, v in report.values.items() if k[0] in wanted}
    report.timings = {k: v for k, v in report.timings.items() if k[0] in wanted}
    return report


def verify_pair(
    g: Graph,
    h: Graph,
    wanted: tuple[str, ...] = INVARIANTS,
    labels: tuple[str, str] = ("g", "h"),
    budget: int | None = None,
    distance_limit: int = DISTANCE_CHECK_LIMIT,
) -> InvariantReport:
    """Every formula path against the materialised product.

    Besides the invariant values, records structural checks: factor-only
    distances against BFS (products up to ``distance_limit`` vertices), the
    Kronecker adjacency formula, and the antipodal graph with its
    connectivity verdict.
    """
    require_factors(g, h)
    w = wreath_product(g, h, budget=budget)
    report = wreath_report(g, h, wanted, METHODS, labels, budget, product=w)
    if w.n <= distance_limit:
        report.checks["distance_vs_bfs"] = bool(
            np.array_equal(wreath_distance_matrix(g, h), all_pairs_distances(w))
        )
    if w.n <= KRONECKER_LIMIT:
        report.checks["kronecker_adjacency"] = bool(
            np.array_equal(wreath_adjacency_kronecker(g, h), adjacency_matrix(w))
        )
    a_brute = antipodal(w)
    report.checks["antipodal"] = a_brute == antipodal_of_wreath(g, h)
    report.checks["antipodal_connectivity"] = (
        len(connected_components(a_brute)) == 1
    ) == antipodal_of_wreath_connected(g, h)
    return report
