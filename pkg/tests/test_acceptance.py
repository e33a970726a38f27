"""Acceptance criteria of the build, one check per criterion.

Run with ``pytest tests/test_acceptance.py -v`` (a summary section lists one
PASS/FAIL line per criterion) or directly with ``python3 tests/test_acceptance.py``.
"""
from __future__ import annotations

import itertools
import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from known_values import (  # noqa: E402
    DIAMETER_K2_WR_C3,
    RHO_K6_A12,
    RHO_P9_A356,
    SZEGED_K2_WR_C4,
    WIENER_VECTOR_C4,
    WIENER_VECTOR_PAW,
)
from wreathlab.graph import (  # noqa: E402
    Graph,
    adjacency_matrix,
    all_pairs_distances,
    connected_components,
    diameter,
    family,
    from_edge_list,
    paw,
)
from wreathlab.invariants import (  # noqa: E402
    szeged,
    szeged_wreath,
    wiener,
    wiener_vector,
    wiener_wreath,
    zagreb,
    zagreb_wreath_formula,
)
from wreathlab.metric import antipodal, antipodal_of_wreath, wreath_diameter, wreath_distance_matrix  # noqa: E402
from wreathlab.products import (  # noqa: E402
    config_major_order,
    direct_product,
    wreath_adjacency_kronecker,
    wreath_product,
)
from wreathlab.tsp import (  # noqa: E402
    BRUTEFORCE_MAX_SET,
    hamiltonicity,
    members,
    rho_bruteforce,
    rho_closed_form,
    rho_matrix,
)

K2, K3, P3 = family("complete", 2), family("complete", 3), family("path", 3)
C3, C4 = family("cycle", 3), family("cycle", 4)


def criterion_1() -> tuple[bool, str]:
    t0 = time.perf_counter()
    brute = szeged(wreath_product(K2, C4))
    general = szeged_wreath(K2, C4, "general")
    closed = szeged_wreath(K2, C4, "complete_closed")
    dt = time.perf_counter() - t0
    ok = brute == general == closed == SZEGED_K2_WR_C4 and dt < 1.0
    return ok, f"Sz(K2 wr C4): brute={brute} general={general} closed={closed} in {dt:.3f}s"


def criterion_2() -> tuple[bool, str]:
    formula = wreath_diameter(K2, C3)
    bfs = diameter(wreath_product(K2, C3))
    return formula == bfs == DIAMETER_K2_WR_C3, f"diam(K2 wr C3): formula={formula} bfs={bfs}"


def criterion_3() -> tuple[bool, str]:
    c4 = tuple(wiener_vector(C4))
    pw = tuple(wiener_vector(paw()))
    ok = c4 == WIENER_VECTOR_C4 and pw == WIENER_VECTOR_PAW
    return ok, f"W_rho(C4)={tuple(map(str, c4))} W_rho(paw)={tuple(map(str, pw))}"


def criterion_4() -> tuple[bool, str]:
    k6_dp = rho_matrix(family("complete", 6), [0, 1]).tolist()
    p9_dp = rho_matrix(family("path", 9), [2, 4, 5]).tolist()
    k6_cf = [[rho_closed_form("complete", 6, {1, 2}, u, v) for v in range(1, 7)] for u in range(1, 7)]
    p9_cf = [[rho_closed_form("path", 9, {3, 5, 6}, u, v) for v in range(1, 10)] for u in range(1, 10)]
    checks = [k6_dp == RHO_K6_A12, k6_cf == RHO_K6_A12, p9_dp == RHO_P9_A356, p9_cf == RHO_P9_A356]
    return all(checks), f"K6 dp/closed, P9 dp/closed: {checks}"


def criterion_5() -> tuple[bool, str]:
    g, h = K2, C3
    brute = antipodal(wreath_product(g, h))
    # C3 x C3 x O2 in product layout, moved into the wreath codec
    built = direct_product(direct_product(C3, C3), family("loops_only", 2))
    p = config_major_order(g.n, h.n)
    inverse = np.empty_like(p)
    inverse[p] = np.arange(len(p))
    relabelled = {tuple(sorted((int(inverse[u]), int(inverse[v])))) for u, v in built.edges()}
    same_built = relabelled == set(brute.edges())
    same_theorem = antipodal_of_wreath(g, h) == brute
    comps = len(connected_components(brute))
    ok = same_built and same_theorem and comps == 2
    return ok, f"edge sets equal: built={same_built} construction={same_theorem}; components={comps}"


def criterion_6() -> tuple[bool, str]:
    bases = {"K2": K2, "K3": K3, "P3": P3, "C3": C3, "C4": C4}
    colours = {"K2": K2, "K3": K3, "P3": P3, "C3": C3, "paw": paw()}
    t0 = time.perf_counter()
    pairs = checked = dist_pairs = 0
    failures = []
    for (gn, g), (hn, h) in itertools.product(bases.items(), colours.items()):
        size = g.n * h.n**g.n
        if size > 2500:
            continue
        pairs += 1
        w = wreath_product(g, h)
        brute = (*zagreb(w), wiener(w), szeged(w))
        formula = (*zagreb_wreath_formula(g, h), wiener_wreath(g, h, "vector"), szeged_wreath(g, h, "general"))
        checked += 4
        if brute != formula:
            failures.append(f"{gn} wr {hn}: {brute} != {formula}")
        if size <= 200:
            dist_pairs += 1
            if not np.array_equal(wreath_distance_matrix(g, h), all_pairs_distances(w)):
                failures.append(f"{gn} wr {hn}: distances")
    dt = time.perf_counter() - t0
    ok = not failures and dt < 120 and pairs == 25
    detail = f"{pairs} pairs, {checked} index values, {dist_pairs} distance matrices, {dt:.2f}s"
    return ok, detail + (f"; failures: {failures}" if failures else "")


def _random_connected(rng: np.random.Generator, n: int) -> Graph:
    edges = {(int(rng.integers(0, v)), v) for v in range(1, n)}
    p = rng.random()
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < p:
            edges.add((u, v))
    return from_edge_list(n, sorted(edges))


def _random_tree(rng: np.random.Generator, n: int) -> Graph:
    return from_edge_list(n, [(int(rng.integers(0, v)), v) for v in range(1, n)])


def criterion_7(cases: int = 500, seed: int = 20240601) -> tuple[bool, str]:
    rng = np.random.default_rng(seed)
    violations: list[str] = []
    diam2 = 0
    for case in range(cases):
        n = int(rng.integers(1, 10))
        g = _random_connected(rng, n)
        full = (1 << n) - 1
        a = int(rng.integers(0, full + 1))
        b = int(rng.integers(0, full + 1))
        u, v, w = (int(x) for x in rng.integers(0, n, size=3))
        d = all_pairs_distances(g)
        ra, rb, rab, rsub = rho_matrix(g, a), rho_matrix(g, b), rho_matrix(g, a | b), rho_matrix(g, a & b)
        k = len(members(a))
        if not np.array_equal(ra, ra.T):
            violations.append(f"case {case}: symmetry")
        if np.any(rsub > ra):
            violations.append(f"case {case}: monotonicity")
        if rab[u, v] > ra[u, w] + rb[w, v]:
            violations.append(f"case {case}: triangle")
        if np.any(ra < np.maximum(d, k - 1)) or np.any(ra > diameter(g) * (k + 1)):
            violations.append(f"case {case}: bounds")
        oracle_set = a
        while len(members(oracle_set)) > BRUTEFORCE_MAX_SET:
            oracle_set &= oracle_set - 1
        if rho_matrix(g, oracle_set)[u, v] != rho_bruteforce(g, oracle_set, u, v):
            violations.append(f"case {case}: dp vs permutations")
        vec = wiener_vector(g)
        if vec[1] != 2 * n * wiener(g):
            violations.append(f"case {case}: W_rho_1")
        t = _random_tree(rng, int(rng.integers(1, 13)))
        if szeged(t) != wiener(t):
            violations.append(f"case {case}: tree Szeged")
        if n > 1 and diameter(g) <= 2:
            diam2 += 1
            if wiener(g) != n * (n - 1) - g.num_edges:
                violations.append(f"case {case}: diameter-2 Wiener")
    ok = not violations
    detail = f"{cases} cases, {diam2} with diameter <= 2, {len(violations)} violations"
    return ok, detail + (f": {violations[:5]}" if violations else "")


def criterion_8() -> tuple[bool, str]:
    wrong = []
    for n in range(2, 9):
        if hamiltonicity(family("complete", n)) != (True, True):
            wrong.append(f"K{n}")
        if n > 3 and hamiltonicity(family("cycle", n)) != (True, False):
            wrong.append(f"C{n}")
        if n > 2 and hamiltonicity(family("path", n)) != (False, False):
            wrong.append(f"P{n}")
    return not wrong, "K2..K8, C4..C8, P3..P8 classified" + (f"; wrong: {wrong}" if wrong else "")


def criterion_9() -> tuple[bool, str]:
    results = {}
    for name, g, h in (("K2,K2", K2, K2), ("K2,C3", K2, C3), ("P3,K2", P3, K2)):
        results[name] = bool(np.array_equal(wreath_adjacency_kronecker(g, h), adjacency_matrix(wreath_product(g, h))))
    return all(results.values()), f"Kronecker == constructed: {results}"


CRITERIA = {
    1: ("Szeged of K2 wr C4, three ways, under 1 s", criterion_1),
    2: ("diameter of K2 wr C3 by formula and BFS", criterion_2),
    3: ("Wiener vectors of C4 and paw", criterion_3),
    4: ("rho matrices of K6 and P9 by DP and closed forms", criterion_4),
    5: ("antipodal graph of K2 wr C3", criterion_5),
    6: ("formula vs brute force on the factor corpus, under 2 min", criterion_6),
    7: ("random property suite, 500 cases", criterion_7),
    8: ("Hamiltonicity classification up to n = 8", criterion_8),
    9: ("Kronecker adjacency formula", criterion_9),
}


def _line(number: int, ok: bool, detail: str) -> str:
    title = CRITERIA[number][0]
    return f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} -- {detail}"


@pytest.mark.acceptance
@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    from conftest import ACCEPTANCE_LINES

    ok, detail = CRITERIA[number][1]()
    line = _line(number, ok, detail)
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    failed = 0
    for number, (_, fn) in sorted(CRITERIA.items()):
        ok, detail = fn()
        failed += not ok
        print(_line(number, ok, detail), flush=True)
    sys.exit(1 if failed else 0)
