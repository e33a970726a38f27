"""Wreath products of graphs: construction, distances and topological indices."""
from __future__ import annotations

from .errors import BudgetExceededError, DisconnectedGraphError, GraphError, ParseError, WreathLabError
from .graph import (
    Graph,
    all_pairs_distances,
    connected_components,
    diameter,
    family,
    from_edge_list,
    is_bipartite,
    is_connected,
    paw,
)
from .invariants import (
    szeged,
    szeged_ab,
    szeged_wreath,
    wiener,
    wiener_rho,
    wiener_vector,
    wiener_wreath,
    zagreb,
    zagreb_wreath_formula,
)
from .metric import (
    antipodal,
    antipodal_of_wreath,
    antipodal_of_wreath_connected,
    hamiltonian_antipodal,
    wreath_diameter,
    wreath_distance,
    wreath_distance_matrix,
)
from .products import (
    WreathCodec,
    WreathVertex,
    cartesian_product,
    direct_product,
    power,
    wreath_adjacency_kronecker,
    wreath_product,
)
from .report import InvariantReport, verify_pair, wreath_report
from .serialize import parse, serialize, to_dot
from .tsp import d_ha, hamiltonicity, rho, rho_bruteforce, rho_matrix

__version__ = "0.1.0"
