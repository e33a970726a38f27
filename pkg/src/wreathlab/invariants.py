"""Zagreb, Wiener and Szeged indices, by brute force and by closed forms.

All values are exact Python integers.  The only exception is the family of
``W_rho`` quantities: their defining half-sum includes the diagonal
``rho_A(u, u)``, which can be odd, so they are returned as
:class:`fractions.Fraction` (the integer case compares equal to ``int``).
"""
from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction
from math import comb

import numpy as np

from .errors import BudgetExceededError, GraphError
from .graph import (
    Graph,
    connected_distances,
    is_complete_graph,
    is_path_graph,
    require_connected,
)
from .metric import require_factors
from .tsp import iter_rho_all_subsets, members, rho_matrix

DEFAULT_MAX_VECTOR_N = 16
DEFAULT_MAX_SZEGED_N = 8


def _simple_connected(g: Graph, what: str) -> None:
    g.require_simple(what)
    require_connected(g, what)


# -- Zagreb -----------------------------------------------------------------

def zagreb(g: Graph) -> tuple[int, int]:
    """First and second Zagreb indices ``(M1, M2)``."""
    g.require_simple("Zagreb index")
    deg = g.degrees()
    m1 = sum(d * d for d in deg)
    m2 = sum(deg[u] * deg[v] for u, v in g.edges())
    return m1, m2


def zagreb_wreath_formula(g: Graph, h: Graph) -> tuple[int, int]:
    """Zagreb indices of ``g`` wr ``h`` from those of the factors."""
    require_factors(g, h)
    n, m = g.n, h.n
    eg, eh = g.num_edges, h.num_edges
    m1g, m2g = zagreb(g)
    m1h, m2h = zagreb(h)
    m1 = m ** (n - 1) * (m * m1g + n * m1h + 8 * eg * eh)
    m2 = (
        3 * m ** (n - 1) * eh * m1g
        + 2 * eg * m ** (n - 1) * m1h
        + m**n * m2g
        + n * m ** (n - 1) * m2h
        + 4 * m ** (n - 2) * eg * eh * eh
    )
    return m1, m2


def zagreb_wreath_regular(g: Graph, h: Graph) -> tuple[int, int]:
    """Regular-factor specialisation; both factors must be regular."""
    require_factors(g, h)
    rg, rh = g.regular_degree(), h.regular_degree()
    if rg is None or rh is None:
        raise GraphError("regular formula needs regular factors")
    size = g.n * h.n**g.n
    r = rg + rh
    return size * r * r, size * r**3 // 2


# -- Wiener -----------------------------------------------------------------

def wiener(g: Graph) -> int:
    _simple_connected(g, "Wiener index")
    return int(connected_distances(g).sum(dtype=np.int64)) // 2


def wiener_from_distances(d: np.ndarray) -> int:
    return int(d.sum(dtype=np.int64)) // 2


def wiener_cartesian_power(h: Graph, n: int) -> int:
    """Wiener index of the ``n``-th Cartesian power of ``h``."""
    if n < 1:
        raise GraphError("power needs n >= 1")
    return n * h.n ** (2 * (n - 1)) * wiener(h)


def wiener_rho(g: Graph, A: int | Iterable[int]) -> Fraction:
    """Half of the sum of ``rho_A(u, v)`` over all ordered pairs, diagonal included."""
    _simple_connected(g, "rho-Wiener index")
    return Fraction(int(rho_matrix(g, A).sum(dtype=np.int64)), 2)


def wiener_vector(g: Graph, *, max_n: int = DEFAULT_MAX_VECTOR_N) -> list[Fraction]:
    """``(W_rho_0, ..., W_rho_n)``: rho-Wiener indices summed by subset size."""
    _simple_connected(g, "Wiener vector")
    totals = [0] * (g.n + 1)
    for mask, mat in iter_rho_all_subsets(g, max_n=max_n):
        totals[mask.bit_count()] += int(mat.sum(dtype=np.int64))
    return [Fraction(t, 2) for t in totals]


def wiener_rho_complete(n: int, k: int) -> Fraction:
    """``W_rho_A(K_n)`` for any ``A`` with ``|A| = k``."""
    if not 0 <= k <= n:
        raise GraphError("need 0 <= k <= n")
    if k == 0:
        return Fraction(n * (n - 1), 2)
    if k == 1:
        return Fraction(n * (n - 1))
    return Fraction(k * n * n - 2 * k * n + k + n * n, 2)


def wiener_vector_complete(n: int) -> list[Fraction]:
    if n < 2:
        raise GraphError("complete-graph vector needs n >= 2")
    vec = [Fraction(n * (n - 1), 2), Fraction(n * n * (n - 1))]
    vec += [comb(n, k) * wiener_rho_complete(n, k) for k in range(2, n + 1)]
    return vec


def wiener_rho_path(n: int, A: Iterable[int]) -> Fraction:
    """``W_rho_A(P_n)`` for nonempty ``A`` given in 1-based labels, ``n > 2``."""
    if n <= 2:
        raise GraphError("path formula is stated for n > 2")
    a_set = set(A)
    if not a_set or not all(1 <= x <= n for x in a_set):
        raise GraphError(f"A must be a nonempty subset of 1..{n}")
    a = min(a_set) - 1
    b = max(a_set) - min(a_set) + 1
    tri = b * (2 * b - 1) * (b - 1)
    assert tri % 3 == 0
    return Fraction(n**3 - n * n + tri // 3 - 2 * a * (n - b - a) * (n + b - 1), 2)


def wiener_vector_path(n: int) -> list[Fraction]:
    """Closed-form Wiener vector of ``P_n``, ``n > 2``."""
    if n <= 2:
        raise GraphError("path formula is stated for n > 2")
    out = []
    for k in range(n + 1):
        poly = (
            5 * k**3 * n * n + k**3 * n + 18 * k * k * n * n - 18 * k * k * n - 12 * k * k
            + 19 * k * n * n - 25 * k * n + 12 * k + 6 * n * n - 6 * n
        )
        num = comb(n + 1, k + 1) * poly
        den = 6 * (k + 2) * (k + 3)
        if num % den:
            raise ArithmeticError(f"path vector term k={k}, n={n} is not integral")
        out.append(Fraction(num // den))
    return out


def wiener_wreath_from_vector(vector: list[Fraction], m: int, wiener_h: int) -> int:
    n = len(vector) - 1
    total = n**3 * m ** (2 * (n - 1)) * wiener_h + m**n * sum(
        (m - 1) ** k * w for k, w in enumerate(vector)
    )
    if total.denominator != 1:
        raise ArithmeticError("wreath Wiener index came out non-integral")
    return int(total)


def wiener_wreath_complete(n: int, m: int, wiener_h: int) -> int:
    """Closed form for ``K_n`` wr ``H`` with ``|V_H| = m``."""
    inner = (
        n * n * m**n - n * n * m ** (n - 1) - m**n * n + 2 * m ** (n - 1) * n - m + m**n - m ** (n - 1)
    )
    num = n * m**n * inner
    if num % 2:
        raise ArithmeticError("complete-graph Wiener closed form is not integral")
    return n**3 * m ** (2 * n - 2) * wiener_h + num // 2


WIENER_METHODS = ("vector", "complete_closed", "path_closed")


def wiener_wreath(g: Graph, h: Graph, method: str = "vector", *, max_n: int = DEFAULT_MAX_VECTOR_N) -> int:
    """Wiener index of ``g`` wr ``h`` without building the product."""
    require_factors(g, h)
    wh = wiener(h)
    if method == "vector":
        return wiener_wreath_from_vector(wiener_vector(g, max_n=max_n), h.n, wh)
    if method == "complete_closed":
        if not is_complete_graph(g):
            raise GraphError("complete_closed needs a complete base graph")
        return wiener_wreath_complete(g.n, h.n, wh)
    if method == "path_closed":
        if not is_path_graph(g) or g.n <= 2:
            raise GraphError("path_closed needs a path base graph with n > 2")
        return wiener_wreath_from_vector(wiener_vector_path(g.n), h.n, wh)
    raise GraphError(f"unknown Wiener method {method!r}; expected one of {WIENER_METHODS}")


# -- Szeged -----------------------------------------------------------------

def _edge_arrays(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    e = g.edges()
    us = np.array([u for u, _ in e], dtype=np.int64)
    vs = np.array([v for _, v in e], dtype=np.int64)
    return us, vs


def szeged_edge_counts(d: np.ndarray, us: np.ndarray, vs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per edge, the number of vertices strictly closer to each endpoint under ``d``."""
    du, dv = d[:, us], d[:, vs]
    return (du < dv).sum(axis=0), (dv < du).sum(axis=0)


def szeged(g: Graph) -> int:
    _simple_connected(g, "Szeged index")
    us, vs = _edge_arrays(g)
    nu, nv = szeged_edge_counts(connected_distances(g), us, vs)
    return sum(int(a) * int(b) for a, b in zip(nu, nv))


def szeged_rho_counts(g: Graph, A: int | Iterable[int], e: tuple[int, int]) -> tuple[int, int]:
    """Vertices strictly closer to each end of ``e = (x_j, x_k)`` under ``rho_A``."""
    _simple_connected(g, "Szeged counts")
    j, k = e
    if not g.has_edge(j, k):
        raise GraphError(f"({j}, {k}) is not an edge")
    r = rho_matrix(g, A)
    return int((r[:, j] < r[:, k]).sum()), int((r[:, k] < r[:, j]).sum())


def szeged_ab(g: Graph, A: int | Iterable[int], B: int | Iterable[int]) -> int:
    """Generalised Szeged sum with the first end of each edge judged by ``rho_A`` and the second by ``rho_B``.

    Edges are oriented ``(x_j, x_k)`` with ``j < k``.
    """
    _simple_connected(g, "generalised Szeged index")
    us, vs = _edge_arrays(g)
    nj, _ = szeged_edge_counts(rho_matrix(g, A), us, vs)
    _, nk = szeged_edge_counts(rho_matrix(g, B), us, vs)
    return sum(int(a) * int(b) for a, b in zip(nj, nk))


def type2_edge_counts(g: Graph, m: int, *, max_n: int = DEFAULT_MAX_SZEGED_N) -> list[tuple[int, int]]:
    """For each edge ``(x_j, x_k)`` of ``g``, the Szeged counts of any lamplighter move along it.

    The pair is ``(sum_A (m-1)^|A| n_j(e, rho_A), sum_A (m-1)^|A| n_k(e, rho_A))``,
    which does not depend on the lamp configuration.  One rho matrix per
    subset serves every edge and both endpoints.
    """
    _simple_connected(g, "type-II Szeged counts")
    if g.n > max_n:
        raise BudgetExceededError(f"general Szeged method limited to n <= {max_n}, got {g.n}")
    us, vs = _edge_arrays(g)
    by_size_j = np.zeros((g.n + 1, len(us)), dtype=np.int64)
    by_size_k = np.zeros_like(by_size_j)
    for mask, mat in iter_rho_all_subsets(g, max_n=max_n):
        nj, nk = szeged_edge_counts(mat, us, vs)
        c = mask.bit_count()
        by_size_j[c] += nj
        by_size_k[c] += nk
    weights = [(m - 1) ** c for c in range(g.n + 1)]
    out = []
    for e in range(len(us)):
        out.append((
            sum(w * int(x) for w, x in zip(weights, by_size_j[:, e])),
            sum(w * int(x) for w, x in zip(weights, by_size_k[:, e])),
        ))
    return out


def szeged_type2_double_sum(g: Graph, m: int) -> int:
    """``sum over A, B of (m-1)^(|A|+|B|) Sz(G, A, B)`` evaluated literally (4^n terms)."""
    _simple_connected(g, "generalised Szeged index")
    us, vs = _edge_arrays(g)
    counts = {}
    for mask, mat in iter_rho_all_subsets(g):
        counts[mask] = szeged_edge_counts(mat, us, vs)
    total = 0
    for a, (nj, _) in counts.items():
        for b, (_, nk) in counts.items():
            sz = sum(int(x) * int(y) for x, y in zip(nj, nk))
            total += (m - 1) ** (a.bit_count() + b.bit_count()) * sz
    return total


def szeged_wreath_type1(g: Graph, h: Graph) -> int:
    n, m = g.n, h.n
    return n**3 * m ** (3 * n - 3) * szeged(h)


def szeged_wreath_complete(n: int, m: int, szeged_h: int) -> int:
    """Closed form for ``K_n`` wr ``H`` with ``|V_H| = m``."""
    if n < 2:
        raise GraphError("complete-graph closed form needs n >= 2")
    per_edge = m + m ** (n - 2) * (m * m + m * n - 3 * m - n + 2)
    num = m**n * n * (n - 1) * per_edge * per_edge
    return n**3 * m ** (3 * n - 3) * szeged_h + num // 2


SZEGED_METHODS = ("general", "complete_closed")


def szeged_wreath(
    g: Graph,
    h: Graph,
    method: str = "general",
    *,
    edge_transitive: bool = False,
    max_n: int = DEFAULT_MAX_SZEGED_N,
) -> int:
    """Szeged index of ``g`` wr ``h`` split into lamp-switch and move edges.

    With ``edge_transitive=True`` the caller vouches that ``g`` is
    edge-transitive, and a single base edge stands in for all of them.
    """
    require_factors(g, h)
    n, m = g.n, h.n
    if method == "complete_closed":
        if not is_complete_graph(g):
            raise GraphError("complete_closed needs a complete base graph")
        return szeged_wreath_complete(n, m, szeged(h))
    if method != "general":
        raise GraphError(f"unknown Szeged method {method!r}; expected one of {SZEGED_METHODS}")
    counts = type2_edge_counts(g, m, max_n=max_n)
    if edge_transitive:
        nj, nk = counts[0]
        type2 = m**n * g.num_edges * nj * nk
    else:
        type2 = m**n * sum(nj * nk for nj, nk in counts)
    return szeged_wreath_type1(g, h) + type2


def subset_label(mask: int) -> str:
    """1-based set notation for a bitmask, e.g. ``{1,3}``."""
    return "{" + ",".join(str(v + 1) for v in members(mask)) + "}"


__all__ = [
    "zagreb",
    "zagreb_wreath_formula",
    "zagreb_wreath_regular",
    "wiener",
    "wiener_cartesian_power",
    "wiener_rho",
    "wiener_vector",
    "wiener_rho_complete",
    "wiener_vector_complete",
    "wiener_rho_path",
    "wiener_vector_path",
    "wiener_wreath",
    "wiener_wreath_complete",
    "szeged",
    "szeged_rho_counts",
    "szeged_ab",
    "type2_edge_counts",
    "szeged_type2_double_sum",
    "szeged_wreath",
    "szeged_wreath_complete",
]
