from __future__ import annotations

import networkx as nx
import numpy as np
from hypothesis import strategies as st

from wreathlab.graph import Graph, from_edge_list

ACCEPTANCE_LINES: list[str] = []


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 9) -> Graph:
    """Random connected simple graph: a random tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    others = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    if others:
        extra = draw(st.lists(st.sampled_from(others), unique=True, max_size=len(others)))
        edges.update(extra)
    return from_edge_list(n, sorted(edges))


@st.composite
def trees(draw, min_n: int = 1, max_n: int = 12) -> Graph:
    n = draw(st.integers(min_n, max_n))
    return from_edge_list(n, [(draw(st.integers(0, v - 1)), v) for v in range(1, n)])


@st.composite
def any_graphs(draw, max_n: int = 8, loops: bool = False) -> Graph:
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u if loops else u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return from_edge_list(n, chosen, allow_loops=loops)


@st.composite
def graph_with_subset(draw, min_n: int = 1, max_n: int = 9):
    g = draw(connected_graphs(min_n, max_n))
    mask = draw(st.integers(0, (1 << g.n) - 1))
    return g, mask


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def nx_distances(g: Graph) -> np.ndarray:
    """All-pairs distances computed by networkx, ``-1`` when unreachable."""
    d = np.full((g.n, g.n), -1, dtype=np.int64)
    for u, row in nx.all_pairs_shortest_path_length(to_nx(g)):
        for v, k in row.items():
            d[u, v] = k
    return d


def edge_set(g: Graph) -> set[tuple[int, int]]:
    return set(g.edges())


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
