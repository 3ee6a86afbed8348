from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple
import logging

from app.core.exceptions import GraphConstructionError, InvalidGraphError, VertexOutOfRangeError
from app.graph.bits import VertexSet, bit, full_set, iter_vertices, size

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Graph:
    """
    Immutable simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is the neighbour bit vector of ``v``. Adjacency is symmetric
    and irreflexive; every constructor in this module guarantees both.
    """

    n: int
    adj: Tuple[int, ...]

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def from_rows(cls, rows: Sequence[int], validate: bool = True) -> "Graph":
        """Build from neighbour bit vectors, optionally checking symmetry."""
        n = len(rows)
        rows = tuple(rows)
        if validate:
            limit = full_set(n)
            for v, row in enumerate(rows):
                if row & ~limit:
                    raise GraphConstructionError((v, row.bit_length() - 1), "endpoint out of range")
                if row >> v & 1:
                    raise GraphConstructionError((v, v), "self-loop")
                for u in iter_vertices(row):
                    if not rows[u] >> v & 1:
                        raise GraphConstructionError((v, u), "adjacency is not symmetric")
        return cls(n, rows)

    @property
    def vertices(self) -> VertexSet:
        return full_set(self.n)

    def neighbors(self, v: int) -> VertexSet:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (u, v) with u < v, in lexicographic order."""
        result = []
        for u, row in enumerate(self.adj):
            for v in iter_vertices(row >> (u + 1)):
                result.append((u, u + 1 + v))
        return result

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self.adj]

    def is_clique(self, mask: VertexSet) -> bool:
        for v in iter_vertices(mask):
            if mask & ~self.adj[v] & ~(1 << v):
                return False
        return True

    def is_independent(self, mask: VertexSet) -> bool:
        for v in iter_vertices(mask):
            if self.adj[v] & mask:
                return False
        return True

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True, slots=True)
class ComponentPartition:
    """Maximal connected vertex sets covering V(G), in order of lowest member."""

    components: Tuple[VertexSet, ...]

    @property
    def big_flags(self) -> Tuple[bool, ...]:
        return tuple(size(c) >= 2 for c in self.components)

    @property
    def big_components(self) -> Tuple[VertexSet, ...]:
        return tuple(c for c in self.components if size(c) >= 2)

    def __len__(self) -> int:
        return len(self.components)


def from_edge_list(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """
    Build a graph from vertex pairs.

    Duplicate pairs collapse to a single edge; out-of-range endpoints and
    self-loops are rejected with the offending pair named.
    """
    if n < 0:
        raise GraphConstructionError((n, n), "negative vertex count")
    rows = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphConstructionError((u, v), f"endpoint out of range 0..{n - 1}")
        if u == v:
            raise GraphConstructionError((u, v), "self-loop")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complete_graph(n: int) -> Graph:
    everyone = full_set(n)
    return Graph(n, tuple(everyone & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def disjoint_union(*graphs: Graph) -> Graph:
    rows: List[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, tuple(rows))


def complement(g: Graph) -> Graph:
    everyone = g.vertices
    return Graph(g.n, tuple(everyone & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel so that old vertex ``v`` becomes ``perm[v]``."""
    rows = [0] * g.n
    for u in range(g.n):
        row = 0
        for v in iter_vertices(g.adj[u]):
            row |= 1 << perm[v]
        rows[perm[u]] = row
    return Graph(g.n, tuple(rows))


def add_vertex(g: Graph, neighbors: VertexSet) -> Graph:
    """Append vertex ``n`` adjacent to ``neighbors``."""
    new = g.n
    rows = [row | (1 << new) if neighbors >> v & 1 else row for v, row in enumerate(g.adj)]
    rows.append(neighbors)
    return Graph(g.n + 1, tuple(rows))


def check_vertex_set(g: Graph, s: VertexSet) -> None:
    if s < 0 or s >> g.n:
        raise VertexOutOfRangeError(s.bit_length() - 1 if s > 0 else -1, g.n)


def induced_subgraph(g: Graph, s: VertexSet) -> Tuple[Graph, Dict[int, int]]:
    """Subgraph induced by ``s`` plus the old-to-new index map (ascending order kept)."""
    check_vertex_set(g, s)
    index = {old: new for new, old in enumerate(iter_vertices(s))}
    rows = []
    for old in index:
        row = 0
        for v in iter_vertices(g.adj[old] & s):
            row |= 1 << index[v]
        rows.append(row)
    return Graph(len(index), tuple(rows)), index


def components_within(g: Graph, within: VertexSet) -> List[VertexSet]:
    """Connected components of G[within], ordered by lowest member."""
    remaining = within
    result = []
    adj = g.adj
    while remaining:
        comp = remaining & -remaining
        frontier = comp
        while frontier:
            reach = 0
            for v in iter_vertices(frontier):
                reach |= adj[v]
            frontier = reach & remaining & ~comp
            comp |= frontier
        result.append(comp)
        remaining &= ~comp
    return result


def components(g: Graph) -> ComponentPartition:
    return ComponentPartition(tuple(components_within(g, g.vertices)))


def is_connected(g: Graph, within: Optional[VertexSet] = None) -> bool:
    mask = g.vertices if within is None else within
    return len(components_within(g, mask)) <= 1


def are_twins(g: Graph, x: int, y: int) -> bool:
    """True iff every other vertex adjacent to one of x, y is adjacent to both."""
    if x == y:
        raise InvalidGraphError("are_twins", f"needs two distinct vertices, got {x} twice")
    pair = bit(x) | bit(y)
    return g.adj[x] & ~pair == g.adj[y] & ~pair


def is_simplicial(g: Graph, v: int) -> bool:
    return g.is_clique(g.adj[v])


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
