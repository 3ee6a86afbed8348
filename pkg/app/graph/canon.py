"""
Canonical labelling and isomorphism.

nauty computes the canonical labelling; networkx answers pairwise
isomorphism queries.
"""
from typing import Dict, List

import networkx as nx
import pynauty

from app.graph.bits import iter_vertices
from app.graph.core import Graph, relabel
from app.graph.graph6 import emit_graph6


def to_pynauty(g: Graph) -> pynauty.Graph:
    adjacency: Dict[int, List[int]] = {v: list(iter_vertices(g.adj[v])) for v in range(g.n)}
    return pynauty.Graph(number_of_vertices=g.n, directed=False, adjacency_dict=adjacency)


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def canonical_order(g: Graph) -> List[int]:
    """Vertex order whose relabelling is canonical: ``order[i]`` becomes vertex ``i``."""
    if g.n == 0:
        return []
    return list(pynauty.canon_label(to_pynauty(g)))


def canonical_graph(g: Graph) -> Graph:
    order = canonical_order(g)
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return relabel(g, perm)


def canonical_graph6(g: Graph) -> str:
    """Isomorphism-invariant key: graph6 of the canonical relabelling."""
    return emit_graph6(canonical_graph(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    return nx.is_isomorphic(to_networkx(g), to_networkx(h))
