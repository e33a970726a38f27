"""Distances, eccentricities and antipodal graphs of wreath products.

The distance between ``(y)x`` and ``(y')x'`` is the Cartesian-power distance
``sum_i d_H(y_i, y'_i)`` plus ``rho_delta(x, x')``, where ``delta`` is the set
of base vertices whose lamps differ.  Nothing here materialises the product.
"""
from __future__ import annotations

import numpy as np

from .errors import GraphError
from .graph import (
    Graph,
    connected_components,
    connected_distances,
    eccentricity_and_diameter,
    from_adjacency_sets,
    is_bipartite,
    require_connected,
)
from .products import WreathCodec, WreathVertex, config_major_order, direct_product, power
from .tsp import d_ha, hamiltonian_eccentricity_and_diameter, iter_rho_all_subsets, rho


def require_factors(g: Graph, h: Graph) -> None:
    """Both factors simple, connected, with more than one vertex."""
    for name, f in (("base", g), ("colour", h)):
        f.require_simple(f"{name} factor")
        if f.n < 2:
            raise GraphError(f"{name} factor needs at least 2 vertices")
        require_connected(f, f"{name} factor")


def _as_vertex(codec: WreathCodec, u: WreathVertex | int) -> WreathVertex:
    return codec.decode(u) if isinstance(u, (int, np.integer)) else u


def delta(y: tuple[int, ...], z: tuple[int, ...]) -> int:
    """Bitmask of base positions where two configurations differ."""
    mask = 0
    for i, (a, b) in enumerate(zip(y, z)):
        if a != b:
            mask |= 1 << i
    return mask


def wreath_distance(g: Graph, h: Graph, u: WreathVertex | int, v: WreathVertex | int) -> int:
    require_factors(g, h)
    codec = WreathCodec(g.n, h.n)
    u, v = _as_vertex(codec, u), _as_vertex(codec, v)
    dh = connected_distances(h)
    lamps = sum(int(dh[a, b]) for a, b in zip(u.config, v.config))
    return lamps + rho(g, delta(u.config, v.config), u.position, v.position)


def wreath_distance_matrix(g: Graph, h: Graph) -> np.ndarray:
    """All-pairs distances of ``g`` wr ``h`` in codec order, from the factors only."""
    require_factors(g, h)
    n, m = g.n, h.n
    codec = WreathCodec(n, m)
    rhos = np.empty((1 << n, n, n), dtype=np.int64)
    for mask, mat in iter_rho_all_subsets(g):
        rhos[mask] = mat
    digits = codec.digit_table()
    dh = connected_distances(h)
    lamps = np.zeros((codec.configs, codec.configs), dtype=np.int64)
    diff = np.zeros((codec.configs, codec.configs), dtype=np.int64)
    for i in range(n):
        col = digits[:, i]
        lamps += dh[np.ix_(col, col)]
        diff |= (col[:, None] != col[None, :]).astype(np.int64) << i
    # block[c, c', x, x'] -> matrix[x * M + c, x' * M + c']
    block = lamps[:, :, None, None] + rhos[diff]
    return block.transpose(2, 0, 3, 1).reshape(codec.size, codec.size)


def wreath_eccentricity(g: Graph, h: Graph, u: WreathVertex | int) -> int:
    require_factors(g, h)
    u = _as_vertex(WreathCodec(g.n, h.n), u)
    ecc_h, _ = eccentricity_and_diameter(h)
    ecc_g, _ = hamiltonian_eccentricity_and_diameter(g)
    return sum(ecc_h[y] for y in u.config) + ecc_g[u.position]


def wreath_diameter(g: Graph, h: Graph) -> int:
    require_factors(g, h)
    _, diam_h = eccentricity_and_diameter(h)
    _, diam_ha = hamiltonian_eccentricity_and_diameter(g)
    return g.n * diam_h + diam_ha


def _threshold_graph(values: np.ndarray, target: int, loops: bool) -> Graph:
    n = values.shape[0]
    hit = values == target
    if not loops:
        np.fill_diagonal(hit, False)
    nbrs = [np.nonzero(hit[u])[0].tolist() for u in range(n)]
    return from_adjacency_sets(n, nbrs, bool(np.diagonal(hit).any()))


def antipodal(g: Graph) -> Graph:
    """Vertices adjacent when their distance equals the diameter (never loops)."""
    d = connected_distances(g)
    return _threshold_graph(d, int(d.max()), loops=False)


def hamiltonian_antipodal(g: Graph) -> Graph:
    """Vertices adjacent when their Hamiltonian distance equals the Hamiltonian diameter.

    ``u`` carries a loop when its closed covering walks realise the diameter.
    """
    require_connected(g)
    h = d_ha(g)
    return _threshold_graph(h, int(h.max()), loops=True)


def antipodal_of_wreath(g: Graph, h: Graph) -> Graph:
    """``A(H)^{x n} x A_Ha(G)``, relabelled into the wreath codec."""
    require_factors(g, h)
    prod = direct_product(power(antipodal(h), g.n, "direct"), hamiltonian_antipodal(g))
    p = config_major_order(g.n, h.n)
    inverse = np.empty_like(p)
    inverse[p] = np.arange(len(p))
    nbrs = [inverse[list(prod.adj[p[i]])].tolist() for i in range(len(p))]
    return from_adjacency_sets(len(p), nbrs, prod.has_loops)


def antipodal_of_wreath_connected(g: Graph, h: Graph) -> bool:
    """Connectivity of ``A(G wr H)`` predicted from the factors alone.

    Connected iff ``A(H)`` and ``A_Ha(G)`` are connected and ``A(H)`` is not bipartite.
    """
    require_factors(g, h)
    ah = antipodal(h)
    aha = hamiltonian_antipodal(g)
    return (
        len(connected_components(ah)) == 1
        and len(connected_components(aha)) == 1
        and not is_bipartite(ah)
    )
