"""Shortest walks through a mandatory vertex set.

``rho(g, A, u, v)`` is the length of a shortest walk from ``u`` to ``v`` that
visits every vertex of ``A`` (vertices may repeat).  With ``A`` empty it is
the geodesic distance; with ``A = V`` it is the Hamiltonian distance ``d_Ha``.

Two exact solvers share the same recurrence on top of all-pairs distances:
the last mandatory vertex reached for the first time splits any admissible
walk, so ``rho_S(u, v) = min_{a in S} rho_{S - a}(u, a) + d(a, v)``.

* :func:`rho_matrix` runs a Held-Karp layer DP over subsets of one set ``A``
  with state ``(subset, last mandatory vertex)``, vectorised over start
  vertices.
* :func:`iter_rho_all_subsets` applies the recurrence to every subset of
  ``V_G`` at once, one cardinality layer at a time, yielding full matrices.

:func:`rho_bruteforce` enumerates visiting orders and is kept independent of
both, as a test oracle.

Vertex subsets are Python ints used as bitmasks (bit ``i`` is vertex ``i``),
or any iterable of vertex ids.
"""
from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Iterator
from typing import NamedTuple

import numpy as np

from .errors import BudgetExceededError, GraphError
from .graph import Graph, connected_distances, diameter

DEFAULT_MAX_SET = 22
DEFAULT_MAX_ALL_SUBSETS = 16
BRUTEFORCE_MAX_SET = 8

_INF = np.int32(2**30)
# entries per DP layer before start vertices are split into chunks
_LAYER_CELLS = 1 << 25

Subset = int | Iterable[int]


def to_mask(A: Subset, n: int) -> int:
    """Normalise a subset given as a bitmask or as vertex ids."""
    if isinstance(A, (int, np.integer)):
        mask = int(A)
        if mask < 0 or mask >> n:
            raise GraphError(f"mask {mask:#x} has bits outside [0, {n})")
        return mask
    mask = 0
    for a in A:
        if not 0 <= a < n:
            raise GraphError(f"vertex {a} outside [0, {n})")
        mask |= 1 << a
    return mask


def members(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _layers(k: int) -> tuple[list[np.ndarray], np.ndarray]:
    """Masks over ``k`` bits grouped by popcount (each group ascending) and each mask's rank in its group."""
    masks = np.arange(1 << k, dtype=np.int64)
    pop = np.zeros(1 << k, dtype=np.int64)
    for i in range(k):
        pop += (masks >> i) & 1
    order = np.argsort(pop, kind="stable")
    counts = np.bincount(pop, minlength=k + 1)
    bounds = np.concatenate(([0], np.cumsum(counts)))
    layers = [masks[order[bounds[c]:bounds[c + 1]]] for c in range(k + 1)]
    rank = np.empty(1 << k, dtype=np.int64)
    for layer in layers:
        rank[layer] = np.arange(len(layer))
    return layers, rank


def _cover_costs(start: np.ndarray, dk: np.ndarray) -> np.ndarray:
    """Held-Karp over all of ``A``.

    ``start[a, s]`` is the distance from start vertex ``s`` to mandatory
    vertex ``a``; ``dk`` holds distances among mandatory vertices.  Returns
    ``cost[a, s]``: shortest walk from ``s`` visiting all of ``A`` whose last
    newly visited mandatory vertex is ``a``.
    """
    k, u = start.shape
    layers, rank = _layers(k)
    prev = np.full((k, k, u), _INF, dtype=np.int32)
    prev[np.arange(k), np.arange(k), :] = start
    for c in range(2, k + 1):
        layer = layers[c]
        cur = np.full((len(layer), k, u), _INF, dtype=np.int32)
        for a in range(k):
            sel = np.nonzero((layer >> a) & 1)[0]
            p = prev[rank[layer[sel] ^ (1 << a)]]
            cur[sel, a, :] = (p + dk[:, a][None, :, None]).min(axis=1)
        prev = cur
    return prev[0]


def rho_matrix(g: Graph, A: Subset, *, max_set: int = DEFAULT_MAX_SET) -> np.ndarray:
    """``rho_A(u, v)`` for all vertex pairs as an ``n x n`` int64 matrix."""
    d = connected_distances(g)
    mandatory = members(to_mask(A, g.n))
    k = len(mandatory)
    if k > max_set:
        raise BudgetExceededError(f"|A| = {k} exceeds the DP budget of {max_set}")
    if k == 0:
        return d.copy()
    da = d[mandatory].astype(np.int32)
    dk = da[:, mandatory]
    chunk = max(1, _LAYER_CELLS // (math.comb(k, k // 2) * k))
    out = np.empty((g.n, g.n), dtype=np.int64)
    for lo in range(0, g.n, chunk):
        starts = np.arange(lo, min(g.n, lo + chunk))
        cost = _cover_costs(da[:, starts], dk)
        out[starts] = (cost[:, :, None] + da[:, None, :]).min(axis=0)
    return out


def rho(g: Graph, A: Subset, u: int, v: int, *, max_set: int = DEFAULT_MAX_SET) -> int:
    """Length of a shortest ``u``-``v`` walk visiting every vertex of ``A``."""
    d = connected_distances(g)
    mandatory = members(to_mask(A, g.n))
    k = len(mandatory)
    if k > max_set:
        raise BudgetExceededError(f"|A| = {k} exceeds the DP budget of {max_set}")
    if k == 0:
        return int(d[u, v])
    da = d[mandatory].astype(np.int32)
    cost = _cover_costs(da[:, [u]], da[:, mandatory])
    return int((cost[:, 0] + da[:, v]).min())


def rho_bruteforce(g: Graph, A: Subset, u: int, v: int) -> int:
    """Minimum over visiting orders of ``A`` of the chained geodesic lengths."""
    d = connected_distances(g)
    mandatory = members(to_mask(A, g.n))
    if len(mandatory) > BRUTEFORCE_MAX_SET:
        raise BudgetExceededError(f"permutation oracle limited to |A| <= {BRUTEFORCE_MAX_SET}")
    if not mandatory:
        return int(d[u, v])
    best = None
    for order in itertools.permutations(mandatory):
        length = d[u, order[0]] + d[order[-1], v]
        for a, b in zip(order, order[1:]):
            length += d[a, b]
        if best is None or length < best:
            best = length
    return int(best)


def iter_rho_all_subsets(g: Graph, *, max_n: int = DEFAULT_MAX_ALL_SUBSETS) -> Iterator[tuple[int, np.ndarray]]:
    """Yield ``(mask, rho_mask matrix)`` for every subset of ``V_G``.

    Order is cardinality-major, then ascending mask.  Only two layers are held
    in memory at a time.  Yielded matrices are int32 views into the layer
    buffer and must be copied if kept.
    """
    n = g.n
    if n > max_n:
        raise BudgetExceededError(f"all-subset enumeration limited to n <= {max_n}, got {n}")
    d = connected_distances(g).astype(np.int32)
    yield 0, d
    layers, rank = _layers(n)
    prev = d[None]
    for c in range(1, n + 1):
        layer = layers[c]
        cur = np.full((len(layer), n, n), _INF, dtype=np.int32)
        for a in range(n):
            sel = np.nonzero((layer >> a) & 1)[0]
            col = prev[rank[layer[sel] ^ (1 << a)], :, a]
            cur[sel] = np.minimum(cur[sel], col[:, :, None] + d[a][None, None, :])
        for mask, mat in zip(layer.tolist(), cur):
            yield mask, mat
        prev = cur


def d_ha(g: Graph, *, max_set: int = DEFAULT_MAX_SET) -> np.ndarray:
    """Hamiltonian distance matrix ``rho_{V_G}``."""
    return rho_matrix(g, (1 << g.n) - 1, max_set=max_set)


def hamiltonian_eccentricity_and_diameter(g: Graph) -> tuple[list[int], int]:
    ecc = d_ha(g).max(axis=1)
    return [int(e) for e in ecc], int(ecc.max())


class Hamiltonicity(NamedTuple):
    is_hamiltonian: bool
    is_hamilton_connected: bool


def hamiltonicity(g: Graph) -> Hamiltonicity:
    """Classify ``g`` from its Hamiltonian distances.

    Hamiltonian iff some closed covering walk has length ``n``; Hamilton-connected
    iff every off-diagonal entry is ``n - 1`` and every diagonal entry ``n``.
    """
    if g.n < 2:
        raise GraphError("hamiltonicity needs at least 2 vertices")
    h = d_ha(g)
    n = g.n
    diag = np.diagonal(h)
    off = h[~np.eye(n, dtype=bool)]
    return Hamiltonicity(bool((diag == n).any()), bool((diag == n).all() and (off == n - 1).all()))


def rho_closed_form(kind: str, n: int, A: Iterable[int], u: int, v: int) -> int:
    """Case formulas for ``rho_A`` on K_n and P_n.

    Labels are 1-based (``1..n``), as in the path labelling ``1 ~ 2 ~ ... ~ n``.
    ``A`` must be nonempty.
    """
    a = set(A)
    if not a:
        raise GraphError("closed forms need a nonempty set")
    if not all(1 <= x <= n for x in a | {u, v}):
        raise GraphError(f"labels must lie in 1..{n}")
    k = len(a)
    if kind == "complete":
        if u == v and u in a:
            return k if k > 1 else 0
        inside = (u in a) + (v in a)
        return {0: k + 1, 1: k, 2: k - 1}[inside]
    if kind == "path":
        lo, hi = min(a), max(a)
        u, v = min(u, v), max(u, v)
        if u < lo and v > hi:
            return v - u
        if u < lo:
            return 2 * hi - (u + v)
        if v > hi:
            return (u + v) - 2 * lo
        return 2 * (hi - lo) - (v - u)
    raise GraphError(f"no closed form for {kind!r}")


def dha_cycle_closed_form(n: int, u: int, v: int) -> int:
    """Hamiltonian distance on the cycle C_n, ``n > 2``."""
    if n <= 2:
        raise GraphError("cycle closed form needs n > 2")
    if u == v:
        return n
    step = abs(u - v) % n
    return n - 2 + min(step, n - step)


def rho_upper_bound(g: Graph, size: int) -> int:
    return diameter(g) * (size + 1)
