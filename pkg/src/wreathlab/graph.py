"""Core graph type, standard families and traversal.

Vertices are the dense integers ``0..n-1``.  A :class:`Graph` stores one
strictly sorted neighbour tuple per vertex, so two graphs compare equal
exactly when their edge sets coincide under the same labelling.  Products in
:mod:`wreathlab.products` rely on this to replace isomorphism tests by plain
equality.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import DisconnectedGraphError, GraphError

#: Distance recorded for pairs with no connecting path.  Never used in arithmetic.
INFINITY = int(np.iinfo(np.int64).max)

FAMILIES = ("complete", "cycle", "path", "loops_only")


@dataclass(frozen=True, eq=True)
class Graph:
    """Finite undirected graph without multi-edges.

    ``adj[u]`` is the strictly increasing tuple of neighbours of ``u``.  A loop
    is recorded once, as ``u in adj[u]``, and only if ``allows_loops`` is set.
    The constructor trusts its input; use :func:`from_edge_list` for
    validated construction or call :meth:`check`.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    allows_loops: bool = False
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __repr__(self) -> str:
        loops = ", loops" if self.allows_loops else ""
        return f"Graph(n={self.n}, edges={self.num_edges}{loops})"

    @cached_property
    def num_edges(self) -> int:
        loops = sum(1 for u in range(self.n) if u in self.adj[u])
        return (sum(len(a) for a in self.adj) - loops) // 2 + loops

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u <= v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u <= v]

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        i = _bisect(a, v)
        return i < len(a) and a[i] == v

    def degree(self, u: int) -> int:
        # a loop counts twice
        return len(self.adj[u]) + (1 if u in self.adj[u] else 0)

    def degrees(self) -> list[int]:
        return [self.degree(u) for u in range(self.n)]

    @property
    def has_loops(self) -> bool:
        return any(u in self.adj[u] for u in range(self.n))

    @property
    def is_simple(self) -> bool:
        return not self.has_loops

    def regular_degree(self) -> int | None:
        """Common degree if the graph is regular, else ``None``."""
        degs = set(self.degrees())
        return degs.pop() if len(degs) == 1 else None

    def check(self) -> None:
        """Raise :class:`GraphError` if any structural invariant fails."""
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} neighbour lists, got {len(self.adj)}")
        for u, nbrs in enumerate(self.adj):
            for a, b in zip(nbrs, nbrs[1:]):
                if a >= b:
                    raise GraphError(f"neighbours of {u} are not strictly sorted")
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise GraphError(f"neighbour {v} of {u} out of range")
                if v == u and not self.allows_loops:
                    raise GraphError(f"loop at {u} but loops are not allowed")
                if not self.has_edge(v, u):
                    raise GraphError(f"edge {u}-{v} is not symmetric")

    def require_simple(self, what: str = "operation") -> None:
        if self.has_loops:
            raise GraphError(f"{what} requires a simple graph")


def _bisect(a: Sequence[int], x: int) -> int:
    lo, hi = 0, len(a)
    while lo < hi:
        mid = (lo + hi) // 2
        if a[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo


def from_adjacency_sets(n: int, nbrs: Sequence[Iterable[int]], allow_loops: bool = False) -> Graph:
    """Trusted builder from per-vertex neighbour collections."""
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs), allow_loops)


def from_edge_list(n: int, edges: Iterable[tuple[int, int]], allow_loops: bool = False) -> Graph:
    """Build a validated graph on ``0..n-1`` from unordered vertex pairs."""
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v and not allow_loops:
            raise GraphError(f"loop at {u} but loops are not allowed")
        if v in nbrs[u]:
            raise GraphError(f"duplicate edge ({u}, {v})")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return from_adjacency_sets(n, nbrs, allow_loops)


def family(kind: str, n: int) -> Graph:
    """Standard graphs: ``complete`` K_n, ``cycle`` C_n, ``path`` P_n, ``loops_only`` O_n.

    The path is labelled ``0 ~ 1 ~ ... ~ n-1``; internal vertex ``i`` is vertex
    ``i + 1`` in 1-based notation.  The cycle follows the same order and closes
    with ``n-1 ~ 0``.
    """
    if n < 1:
        raise GraphError("family graphs need n >= 1")
    if kind == "complete":
        return Graph(n, tuple(tuple(v for v in range(n) if v != u) for u in range(n)))
    if kind == "path":
        return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        if n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "loops_only":
        return Graph(n, tuple((u,) for u in range(n)), True)
    raise GraphError(f"unknown family {kind!r}; expected one of {FAMILIES}")


def paw() -> Graph:
    """The paw: a triangle a, b, c with a pendant vertex d attached to c."""
    return from_edge_list(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


def empty_graph(n: int) -> Graph:
    return Graph(n, tuple(() for _ in range(n)))


def add_loops(g: Graph) -> Graph:
    """Return ``g`` with a loop added at every vertex."""
    if g.has_loops:
        raise GraphError("graph already has loops")
    return from_adjacency_sets(g.n, [set(a) | {u} for u, a in enumerate(g.adj)], True)


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    """Concatenate vertex blocks in argument order."""
    adj: list[tuple[int, ...]] = []
    offset = 0
    loops = False
    for g in gs:
        adj.extend(tuple(v + offset for v in a) for a in g.adj)
        offset += g.n
        loops = loops or g.allows_loops
    return Graph(offset, tuple(adj), loops)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on ``vertices``; vertex ``vertices[i]`` becomes ``i``."""
    index = {v: i for i, v in enumerate(vertices)}
    nbrs = [[index[w] for w in g.adj[v] if w in index] for v in vertices]
    loops = any(i in a for i, a in enumerate(nbrs))
    return from_adjacency_sets(len(vertices), nbrs, loops)


def adjacency_matrix(g: Graph) -> np.ndarray:
    """Dense 0/1 matrix; a loop puts a 1 on the diagonal."""
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, nbrs in enumerate(g.adj):
        a[u, list(nbrs)] = 1
    return a


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Geodesic distances from ``source``; ``-1`` marks unreachable vertices."""
    adj = g.adj
    dist = [-1] * g.n
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def all_pairs_distances(g: Graph) -> np.ndarray:
    """All-pairs geodesic distance matrix (int64), :data:`INFINITY` for disconnected pairs.

    The result is cached on the graph and returned read-only.
    """
    cached = g._cache.get("apsp")
    if cached is not None:
        return cached
    d = np.array([bfs_distances(g, s) for s in range(g.n)], dtype=np.int64).reshape(g.n, g.n)
    d[d < 0] = INFINITY
    d.setflags(write=False)
    g._cache["apsp"] = d
    return d


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def require_connected(g: Graph, what: str = "operation") -> None:
    if not is_connected(g):
        raise DisconnectedGraphError(f"{what} requires a connected graph")


def connected_distances(g: Graph) -> np.ndarray:
    """Distance matrix of a graph that must be connected."""
    require_connected(g)
    return all_pairs_distances(g)


def eccentricity_and_diameter(g: Graph) -> tuple[list[int], int]:
    d = connected_distances(g)
    ecc = d.max(axis=1)
    return [int(e) for e in ecc], int(ecc.max())


def diameter(g: Graph) -> int:
    return eccentricity_and_diameter(g)[1]


def is_bipartite(g: Graph) -> bool:
    """Two-colourability by BFS; any loop makes the graph non-bipartite."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def is_path_graph(g: Graph) -> bool:
    """True if ``g`` is isomorphic to P_n (n >= 2)."""
    return (
        g.n >= 2
        and g.is_simple
        and g.num_edges == g.n - 1
        and max(g.degrees()) <= 2
        and is_connected(g)
    )


def is_complete_graph(g: Graph) -> bool:
    return g.is_simple and g.num_edges == g.n * (g.n - 1) // 2
