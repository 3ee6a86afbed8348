from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple
import logging

from app.core.exceptions import InvalidOrderingError, NotChordalError, NotPeoError
from app.graph.bits import VertexSet, bit, iter_vertices, lowest
from app.graph.coloring import Coloring
from app.graph.core import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class EliminationOrdering:
    """``order[i]`` is the i-th vertex eliminated."""

    order: Tuple[int, ...]

    def positions(self) -> List[int]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos


@dataclass(frozen=True, slots=True)
class PeoCheck:
    is_peo: bool
    vertex: Optional[int] = None
    pair: Optional[Tuple[int, int]] = None


@dataclass(frozen=True, slots=True)
class ChordalityCertificate:
    """Either a perfect elimination ordering or a hole, never both."""

    ordering: Optional[EliminationOrdering] = None
    hole: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if (self.ordering is None) == (self.hole is None):
            raise ValueError("Exactly one of ordering / hole must be set")

    @property
    def is_chordal(self) -> bool:
        return self.ordering is not None


def lexbfs_visit_order(g: Graph) -> List[int]:
    """Lexicographic BFS visit order; ties go to the lowest vertex index."""
    n = g.n
    labels: List[List[int]] = [[] for _ in range(n)]
    unvisited = g.vertices
    order = []
    for step in range(n):
        best = -1
        for v in iter_vertices(unvisited):
            if best < 0 or labels[v] > labels[best]:
                best = v
        order.append(best)
        unvisited &= ~bit(best)
        for w in iter_vertices(g.adj[best] & unvisited):
            labels[w].append(n - step)
    return order


def lexbfs_order(g: Graph) -> EliminationOrdering:
    """Reverse LexBFS order; a perfect elimination ordering whenever g is chordal."""
    return EliminationOrdering(tuple(reversed(lexbfs_visit_order(g))))


def _check_permutation(g: Graph, ordering: EliminationOrdering) -> None:
    if len(ordering.order) != g.n or sorted(ordering.order) != list(range(g.n)):
        raise InvalidOrderingError(f"{list(ordering.order)} is not a permutation of 0..{g.n - 1}")


def is_peo(g: Graph, ordering: EliminationOrdering) -> PeoCheck:
    """Check that every vertex's later neighbours form a clique; report the earliest violation."""
    _check_permutation(g, ordering)
    later = g.vertices
    for v in ordering.order:
        later &= ~bit(v)
        forward = g.adj[v] & later
        for a in iter_vertices(forward):
            missing = forward & ~g.adj[a] & ~bit(a)
            if missing:
                return PeoCheck(False, v, (a, lowest(missing)))
    return PeoCheck(True)


def validate_hole(g: Graph, cycle: Sequence[int]) -> bool:
    """Chordless cycle of length >= 4 on distinct vertices."""
    length = len(cycle)
    if length < 4 or len(set(cycle)) != length:
        return False
    for i in range(length):
        for j in range(i + 1, length):
            consecutive = j == i + 1 or (i == 0 and j == length - 1)
            if g.has_edge(cycle[i], cycle[j]) != consecutive:
                return False
    return True


def _chordless_path(g: Graph, allowed: VertexSet, a: int, b: int) -> Optional[List[int]]:
    """Shortest a-b path inside G[allowed] (hence induced), by BFS."""
    parent = {a: a}
    frontier = [a]
    seen = bit(a)
    while frontier:
        nxt = []
        for u in frontier:
            for w in iter_vertices(g.adj[u] & allowed & ~seen):
                seen |= bit(w)
                parent[w] = u
                if w == b:
                    path = [b]
                    while path[-1] != a:
                        path.append(parent[path[-1]])
                    return path[::-1]
                nxt.append(w)
        frontier = nxt
    return None


def hole_through(g: Graph, v: int, a: int, b: int) -> Optional[Tuple[int, ...]]:
    """Hole v-a-...-b-v avoiding N[v] apart from a and b, if one exists."""
    allowed = (g.vertices & ~(g.adj[v] | bit(v))) | bit(a) | bit(b)
    path = _chordless_path(g, allowed, a, b)
    if path is None:
        return None
    return (v, *path)


def find_hole(g: Graph) -> Optional[Tuple[int, ...]]:
    """Exhaustive hole search over every vertex and pair of non-adjacent neighbours."""
    for v in range(g.n):
        nbrs = g.adj[v]
        for a in iter_vertices(nbrs):
            for b in iter_vertices(nbrs & ~g.adj[a] & ~((bit(a) << 1) - 1)):
                hole = hole_through(g, v, a, b)
                if hole is not None:
                    return hole
    return None


def is_chordal(g: Graph) -> ChordalityCertificate:
    ordering = lexbfs_order(g)
    check = is_peo(g, ordering)
    if check.is_peo:
        return ChordalityCertificate(ordering=ordering)

    hole = hole_through(g, check.vertex, *check.pair)
    if hole is None:
        logger.debug(f"No hole through PEO violation at {check.vertex}; running full search")
        hole = find_hole(g)
    if hole is None or not validate_hole(g, hole):
        raise RuntimeError(f"Hole extraction failed for {g!r}")
    return ChordalityCertificate(hole=hole)


def omega_chordal(
    g: Graph,
    certificate: Optional[ChordalityCertificate] = None
) -> Tuple[int, VertexSet]:
    """
    Clique number of a chordal graph with a witness clique.

    The largest set {v} + later neighbours of v along a PEO is a maximum clique.
    """
    certificate = certificate or is_chordal(g)
    if not certificate.is_chordal:
        raise NotChordalError(certificate.hole)
    best_size, best_clique = 0, 0
    later = g.vertices
    for v in certificate.ordering.order:
        later &= ~bit(v)
        clique = bit(v) | (g.adj[v] & later)
        if clique.bit_count() > best_size:
            best_size, best_clique = clique.bit_count(), clique
    return best_size, best_clique


def greedy_color_peo(g: Graph, ordering: EliminationOrdering) -> Coloring:
    """Optimal coloring of a chordal graph: greedy along the reversed PEO."""
    check = is_peo(g, ordering)
    if not check.is_peo:
        raise NotPeoError(check.vertex, check.pair)
    colors = [0] * g.n
    for v in reversed(ordering.order):
        used = 0
        for u in iter_vertices(g.adj[v]):
            if colors[u]:
                used |= 1 << colors[u]
        color = 1
        while used >> color & 1:
            color += 1
        colors[v] = color
    return Coloring(tuple(colors))
