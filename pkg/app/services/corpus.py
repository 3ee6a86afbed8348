from typing import Callable, Iterable, Iterator, List, Optional
import logging
import random

from app.core.config import settings
from app.core.exceptions import BudgetExceededError, InvalidGraphError
from app.graph.bits import VertexSet, bit, full_set, iter_vertices, to_list
from app.graph.canon import canonical_graph6
from app.graph.chordal import is_chordal
from app.graph.core import Graph, add_vertex, cycle_graph, from_edge_list
from app.schemas.campaign import CorpusSource
from app.services.pattern_catalog import pattern_catalog
from app.utils.parsers import graph_file_parser

logger = logging.getLogger(__name__)

# Share of (1 - edge_prob) with which a random simplicial vertex starts a new component
ISOLATED_SHARE = 0.25

# Largest clique joined to the whole cycle in random C5 hosts
C5_HOST_MAX_ATTACHED = 3


def all_neighborhoods(g: Graph) -> Iterable[VertexSet]:
    return range(1 << g.n)


def cliques(g: Graph) -> Iterator[VertexSet]:
    """Every clique of g, the empty set first."""
    def grow(clique: VertexSet, candidates: VertexSet) -> Iterator[VertexSet]:
        yield clique
        for v in iter_vertices(candidates):
            yield from grow(clique | bit(v), candidates & g.adj[v] & ~((bit(v) << 1) - 1))

    yield from grow(0, g.vertices)


def extend_level(
    level: List[Graph],
    neighborhoods: Callable[[Graph], Iterable[VertexSet]] = all_neighborhoods
) -> List[Graph]:
    """
    Isomorphism classes on n + 1 vertices from the classes on n vertices.

    Every graph on n + 1 vertices is some n-vertex graph plus one vertex, so
    adding a vertex with every possible neighbourhood and keeping one
    representative per canonical form covers each class exactly once.
    Restricting ``neighborhoods`` restricts the classes reached.
    """
    seen = set()
    result = []
    for g in level:
        for neighbors in neighborhoods(g):
            h = add_vertex(g, neighbors)
            key = canonical_graph6(h)
            if key not in seen:
                seen.add(key)
                result.append(h)
    return result


def _enumerate(
    operation: str,
    max_n: int,
    budget: int,
    neighborhoods: Callable[[Graph], Iterable[VertexSet]]
) -> Iterator[Graph]:
    if max_n > budget:
        raise BudgetExceededError(operation, max_n, budget)
    if max_n < 1:
        return
    level = [Graph.empty(1)]
    for n in range(1, max_n + 1):
        if n > 1:
            level = extend_level(level, neighborhoods)
        logger.debug(f"{operation}: {len(level)} classes on {n} vertices")
        yield from level


def enumerate_graphs(max_n: int) -> Iterator[Graph]:
    """One graph per isomorphism class for n = 1..max_n, ascending n."""
    return _enumerate("enumerate_graphs", max_n, settings.BPERF_MAX_BUILTIN_N, all_neighborhoods)


def enumerate_chordal_graphs(max_n: int) -> Iterator[Graph]:
    """
    One chordal graph per isomorphism class for n = 1..max_n.

    A chordal graph minus a simplicial vertex is chordal, so joining a new
    vertex to each clique (the empty one included) of each smaller class
    reaches every chordal class and nothing else.
    """
    return _enumerate("enumerate_chordal_graphs", max_n, settings.BPERF_MAX_CHORDAL_N, cliques)


def random_graph(n: int, edge_prob: float, rng: random.Random) -> Graph:
    edges = [(u, v) for v in range(n) for u in range(v) if rng.random() < edge_prob]
    return from_edge_list(n, edges)


def _random_clique(g: Graph, allowed: VertexSet, edge_prob: float, rng: random.Random) -> VertexSet:
    """
    Empty with probability ``(1 - edge_prob) * ISOLATED_SHARE``; otherwise a
    clique of ``allowed`` grown from a random vertex, keeping each compatible
    neighbour with probability ``edge_prob``.
    """
    if not allowed or rng.random() < (1 - edge_prob) * ISOLATED_SHARE:
        return 0
    start = rng.choice(to_list(allowed))
    clique = bit(start)
    candidates = list(iter_vertices(g.adj[start] & allowed))
    rng.shuffle(candidates)
    for w in candidates:
        if g.adj[w] & clique == clique and rng.random() < edge_prob:
            clique |= bit(w)
    return clique


def random_chordal_graph(n: int, edge_prob: float, rng: random.Random) -> Graph:
    """Chordal graph by simplicial extension; new vertices may start new components."""
    g = Graph.empty(min(n, 1))
    for _ in range(1, n):
        g = add_vertex(g, _random_clique(g, g.vertices, edge_prob, rng))
    return g


def random_c5_host(n: int, edge_prob: float, rng: random.Random) -> Graph:
    """
    C4-free graph whose vertices 0..4 induce a C5.

    A clique X of up to three vertices is joined to the whole cycle; every
    later vertex is simplicial and joined to a clique of earlier non-cycle
    vertices, so the vertices seeing the cycle are exactly X.
    """
    if n < 5:
        raise InvalidGraphError("random_c5_host", f"needs at least 5 vertices, got {n}")
    g = cycle_graph(5)
    cycle = full_set(5)
    outside = 0
    for _ in range(rng.randint(0, min(C5_HOST_MAX_ATTACHED, n - 5))):
        g = add_vertex(g, cycle | outside)
        outside |= bit(g.n - 1)
    while g.n < n:
        g = add_vertex(g, _random_clique(g, outside, edge_prob, rng))
        outside |= bit(g.n - 1)
    return g


def passes_filter(g: Graph, name: Optional[str]) -> bool:
    if name is None:
        return True
    if name == "chordal":
        return is_chordal(g).is_chordal
    if name == "c4free":
        return pattern_catalog.find_induced(g, pattern_catalog.get("C4")) is None
    if name == "c5host":
        return (
            pattern_catalog.find_induced(g, pattern_catalog.get("C5")) is not None
            and passes_filter(g, "c4free")
            and pattern_catalog.scan_family(g, full_scan=True) is None
        )
    raise ValueError(f"Unknown corpus filter: {name}")


class CorpusService:
    """Turns a CorpusSource into a reproducible stream of graphs."""

    def __init__(self):
        self.max_attempts = settings.BPERF_MAX_RANDOM_ATTEMPTS

    def iter_graphs(self, source: CorpusSource) -> Iterator[Graph]:
        if source.kind == "file":
            if not source.path:
                raise ValueError("A file corpus needs a path")
            yield from graph_file_parser.parse_file(source.path, source.fmt)
        elif source.kind == "builtin":
            yield from self.iter_builtin(source)
        elif source.kind == "random":
            yield from self.iter_random(source)
        else:
            raise ValueError(f"Unsupported corpus kind: {source.kind}")

    def iter_builtin(self, source: CorpusSource) -> Iterator[Graph]:
        """Isomorph-free enumeration; the chordal filter enumerates chordal classes directly."""
        if source.filter == "chordal":
            yield from enumerate_chordal_graphs(source.max_n)
            return
        for g in enumerate_graphs(source.max_n):
            if passes_filter(g, source.filter):
                yield g

    def iter_random(self, source: CorpusSource) -> Iterator[Graph]:
        """
        Random hosts reproducible from the seed. The chordal filter samples
        chordal graphs directly; the c5host filter samples structured C5
        hosts and keeps the F-free ones.
        """
        rng = random.Random(source.seed)
        sample = random_c5_host if source.filter == "c5host" else random_graph
        for index in range(source.count):
            if source.filter == "chordal":
                yield random_chordal_graph(source.order, source.edge_prob, rng)
                continue
            for _ in range(self.max_attempts):
                g = sample(source.order, source.edge_prob, rng)
                if passes_filter(g, source.filter):
                    yield g
                    break
            else:
                logger.warning(
                    f"No {source.filter} graph after {self.max_attempts} attempts "
                    f"(graph {index}, n={source.order}, p={source.edge_prob})"
                )


corpus_service = CorpusService()
