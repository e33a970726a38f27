"""Cartesian, direct and wreath products.

Wreath-product vertices use one fixed codec.  For a base graph G on ``n``
vertices and a colour graph H on ``m`` vertices, the vertex with lamp
configuration ``(y_0, ..., y_{n-1})`` and lamplighter position ``x`` has index::

    x * m**n + sum(y_i * m**(n - 1 - i))

so the position is the most significant digit and ``y_0`` the most
significant configuration digit.  Products built by :func:`cartesian_product`
and :func:`direct_product` index ``(u, v)`` as ``u * |V_H| + v``; iterated
powers therefore put the first factor first.  :func:`config_major_order`
translates between the wreath codec and the ``H^n * G`` product layout.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceededError, GraphError
from .graph import Graph, adjacency_matrix, from_adjacency_sets

DEFAULT_VERTEX_BUDGET = 2_000_000
KRONECKER_LIMIT = 4096


def vertex_budget() -> int:
    """Largest product that may be materialised (``WREATHLAB_BUDGET`` overrides)."""
    raw = os.environ.get("WREATHLAB_BUDGET")
    if raw is None:
        return DEFAULT_VERTEX_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise GraphError(f"WREATHLAB_BUDGET must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class WreathVertex:
    config: tuple[int, ...]
    position: int

    def __str__(self) -> str:
        # 1-based position to match the x_1, ..., x_n naming
        return "(" + "".join(map(str, self.config)) + f")x{self.position + 1}"


@dataclass(frozen=True)
class WreathCodec:
    """Bijection between :class:`WreathVertex` and ``range(n * m**n)``."""

    n: int
    m: int

    @property
    def configs(self) -> int:
        return self.m**self.n

    @property
    def size(self) -> int:
        return self.n * self.m**self.n

    def encode(self, v: WreathVertex) -> int:
        if len(v.config) != self.n or not 0 <= v.position < self.n:
            raise GraphError(f"{v} does not fit codec n={self.n}, m={self.m}")
        c = 0
        for y in v.config:
            if not 0 <= y < self.m:
                raise GraphError(f"colour {y} out of range [0, {self.m})")
            c = c * self.m + y
        return v.position * self.configs + c

    def decode(self, index: int) -> WreathVertex:
        if not 0 <= index < self.size:
            raise GraphError(f"index {index} out of range [0, {self.size})")
        x, c = divmod(index, self.configs)
        return WreathVertex(self.config_digits(c), x)

    def config_digits(self, c: int) -> tuple[int, ...]:
        digits = [0] * self.n
        for i in range(self.n - 1, -1, -1):
            c, digits[i] = divmod(c, self.m)
        return tuple(digits)

    def digit_table(self) -> np.ndarray:
        """``(m**n, n)`` array: row ``c`` holds the digits of configuration ``c``."""
        c = np.arange(self.configs, dtype=np.int64)
        powers = self.m ** np.arange(self.n - 1, -1, -1, dtype=np.int64)
        return (c[:, None] // powers[None, :]) % self.m


def check_budget(size: int, budget: int | None) -> None:
    limit = vertex_budget() if budget is None else budget
    if size > limit:
        raise BudgetExceededError(f"product has {size} vertices, budget is {limit}")


def cartesian_product(g: Graph, h: Graph) -> Graph:
    g.require_simple("cartesian product")
    h.require_simple("cartesian product")
    m = h.n
    nbrs = []
    for u in range(g.n):
        for v in range(m):
            nbrs.append([w * m + v for w in g.adj[u]] + [u * m + w for w in h.adj[v]])
    return from_adjacency_sets(g.n * m, nbrs)


def direct_product(g: Graph, h: Graph) -> Graph:
    """Tensor product; a loop at ``u`` combines with every edge of ``h``."""
    m = h.n
    nbrs = []
    for u in range(g.n):
        for v in range(m):
            nbrs.append([w * m + z for w in g.adj[u] for z in h.adj[v]])
    loops = any(i in a for i, a in enumerate(nbrs))
    return from_adjacency_sets(g.n * m, nbrs, loops)


def power(g: Graph, n: int, kind: str) -> Graph:
    """``n``-fold iterated product, associated to the left."""
    if n < 1:
        raise GraphError("power needs n >= 1")
    op = {"cartesian": cartesian_product, "direct": direct_product}.get(kind)
    if op is None:
        raise GraphError(f"unknown product kind {kind!r}")
    out = g
    for _ in range(n - 1):
        out = op(out, g)
    return out


def wreath_product(g: Graph, h: Graph, budget: int | None = None) -> Graph:
    """Lamplighter graph with base ``g`` and colour graph ``h``, under :class:`WreathCodec`."""
    g.require_simple("wreath product")
    h.require_simple("wreath product")
    n, m = g.n, h.n
    codec = WreathCodec(n, m)
    check_budget(codec.size, budget)
    big = codec.configs
    powers = [m ** (n - 1 - i) for i in range(n)]
    adj = []
    for x in range(n):
        p = powers[x]
        moves = [xp * big for xp in g.adj[x]]
        here = x * big
        for c in range(big):
            d = (c // p) % m
            base = here + c - d * p
            nb = [base + e * p for e in h.adj[d]]
            nb.extend(off + c for off in moves)
            nb.sort()
            adj.append(tuple(nb))
    return Graph(codec.size, tuple(adj))


def config_major_order(n: int, m: int) -> np.ndarray:
    """Permutation ``p`` with ``p[codec index] = c * n + x``.

    ``c * n + x`` is the index of the same vertex in ``H^n x G`` built with
    :func:`power` and :func:`cartesian_product` / :func:`direct_product`, and
    also the row order of the Kronecker formula for the adjacency matrix.
    """
    big = m**n
    idx = np.arange(n * big, dtype=np.int64)
    x, c = np.divmod(idx, big)
    return c * n + x


def wreath_adjacency_kronecker(g: Graph, h: Graph, order: str = "codec") -> np.ndarray:
    """Adjacency matrix of ``g`` wr ``h`` from the Kronecker-sum formula.

    ``I_m^{(x)n} (x) A + sum_i I_m^{(x)(i-1)} (x) B (x) I_m^{(x)(n-i)} (x) D_i``
    with ``A``, ``B`` the adjacency matrices of ``g``, ``h`` and ``D_i`` the unit
    diagonal matrix at position ``i``.  The formula's natural order is
    configuration-major (``order="kronecker"``); by default rows are permuted
    into the wreath codec so the result can be compared entrywise with
    :func:`wreath_product`.
    """
    n, m = g.n, h.n
    size = n * m**n
    if size > KRONECKER_LIMIT:
        raise BudgetExceededError(f"dense Kronecker check limited to {KRONECKER_LIMIT} rows, need {size}")
    a = adjacency_matrix(g)
    b = adjacency_matrix(h)
    total = np.kron(np.eye(m**n, dtype=np.int64), a)
    for i in range(n):
        d = np.zeros((n, n), dtype=np.int64)
        d[i, i] = 1
        left = np.eye(m**i, dtype=np.int64)
        right = np.eye(m ** (n - 1 - i), dtype=np.int64)
        total = total + np.kron(np.kron(np.kron(left, b), right), d)
    if order == "kronecker":
        return total
    if order != "codec":
        raise GraphError(f"unknown order {order!r}")
    p = config_major_order(n, m)
    return total[np.ix_(p, p)]
