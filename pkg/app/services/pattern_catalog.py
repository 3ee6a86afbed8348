from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple
import logging

from app.core.config import settings
from app.core.exceptions import CatalogDefectError, UnknownPatternError
from app.graph.bits import VertexSet, bit, iter_vertices
from app.graph.chordal import is_chordal
from app.graph.core import (
    Graph,
    are_twins,
    components,
    cycle_graph,
    disjoint_union,
    from_edge_list,
    path_graph,
)
from app.schemas.catalog import CatalogCheck, CatalogReport, PatternRecord

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Pattern:
    name: str
    graph: Graph
    expected_chi: int
    expected_b: int
    contains_hole: bool
    in_family: bool = True

    @property
    def n(self) -> int:
        return self.graph.n


@dataclass(frozen=True, slots=True)
class Embedding:
    """``mapping[i]`` is the host vertex playing pattern vertex ``i``."""

    pattern_name: str
    mapping: Tuple[int, ...]

    @property
    def vertex_set(self) -> VertexSet:
        mask = 0
        for v in self.mapping:
            mask |= bit(v)
        return mask

    def is_valid(self, host: Graph, pattern: Graph) -> bool:
        """Injective and preserving both adjacency and non-adjacency."""
        if len(self.mapping) != pattern.n or len(set(self.mapping)) != pattern.n:
            return False
        if any(not 0 <= v < host.n for v in self.mapping):
            return False
        for i, j in combinations(range(pattern.n), 2):
            if pattern.has_edge(i, j) != host.has_edge(self.mapping[i], self.mapping[j]):
                return False
        return True


def _named(names: str, pairs: str) -> Graph:
    """Graph from space-separated vertex names and dash-joined edges, e.g. ``"x-a y-a"``."""
    index = {name: i for i, name in enumerate(names.split())}
    edges = []
    for pair in pairs.split():
        u, v = pair.split("-")
        edges.append((index[u], index[v]))
    return from_edge_list(len(index), edges)


F4_NAMES = "x1 x2 y1 y2 z1 z2"
F4_EDGES = "x1-x2 y1-z1 y2-z2 x1-y1 x1-y2 x1-z2 x2-y1 x2-z1 x2-y2"
F5_NAMES = "x y a b z1 z2 z3"
F5_EDGES = "x-a x-b y-a y-b a-b a-z1 a-z2 z1-z2 z1-z3 z2-z3"
F6_NAMES = "x y a b z1 z2 z3 z4"
F6_EDGES = "x-a x-b y-a y-b a-b z1-z2 z1-z3 z1-z4 z2-z3 z2-z4"
F16_NAMES = "p q s m r t"
F16_EDGES = "p-q q-s s-m m-r r-p m-t t-s t-r"
F20_NAMES = "p q u v r w s t"
F20_EDGES = "p-q u-v q-s p-r u-q t-s p-v r-t r-w w-s u-r v-s u-w v-t"
PATHS_8 = "b0-b1 b1-b2 b2-b3 t0-t1 t1-t2 t2-t3"

# (name, graph, chi, b)
_FAMILY_SOURCES = [
    ("F1", lambda: path_graph(5), 2, 3),
    ("F2", lambda: disjoint_union(path_graph(4), path_graph(3)), 2, 3),
    ("F3", lambda: disjoint_union(path_graph(3), path_graph(3), path_graph(3)), 2, 3),
    ("F4", lambda: _named(F4_NAMES, F4_EDGES), 3, 4),
    ("F5", lambda: _named(F5_NAMES, F5_EDGES), 3, 4),
    ("F6", lambda: _named(F6_NAMES, F6_EDGES), 3, 4),
    ("F7", lambda: _named(F6_NAMES, F6_EDGES + " a-z1"), 3, 4),
    ("F8", lambda: _named(
        "z z1 z2 z3 z4 a x y",
        "z1-z2 z2-z3 z3-z4 z-z1 z-z2 z-z3 z-z4 z-a a-x a-y x-y",
    ), 3, 4),
    ("F9", lambda: _named(
        "x y a b z1 z2 z3 z4 z5 z6",
        "x-a x-b y-a y-b a-b a-z1 z1-z2 z1-z3 z2-z3 z4-z5 z5-z6 a-z4 a-z5 a-z6",
    ), 3, 4),
    ("F10", lambda: _named(F4_NAMES, F4_EDGES + " z1-z2"), 3, 4),
    ("F11", lambda: _named(F5_NAMES, F5_EDGES + " z3-x z3-y"), 3, 4),
    ("F12", lambda: _named(
        "b0 b1 b2 b3 t0 t1 t2 t3",
        PATHS_8 + " b1-t1 b2-t2 b0-t1 b1-t0 b2-t3 b3-t2",
    ), 3, 4),
    ("F13", lambda: _named(
        "b0 b1 b2 b3 t0 t1 t2 t3",
        PATHS_8 + " b0-t0 b3-t3 b0-t1 b1-t2 b2-t3 b1-t0 b2-t1 b3-t2",
    ), 3, 4),
    ("F14", lambda: _named(
        "b0 b1 b2 b3 m1 m2 t0 t3",
        "b0-b1 b1-b2 b2-b3 t0-t3 m1-m2 b0-t0 b3-t3 b0-m1 b2-m1 b1-m2 b3-m2 "
        "m1-t0 m2-t3 b1-t0 b2-t3",
    ), 3, 4),
    ("F15", lambda: _named(
        "p q a b c d r s",
        "p-q r-s a-b c-d p-r q-s a-d b-c p-c b-s a-r q-d p-a d-s c-r q-b",
    ), 3, 4),
    ("F16", lambda: _named(F16_NAMES, F16_EDGES), 3, 4),
    ("F17", lambda: _named(F16_NAMES, F16_EDGES + " m-q"), 3, 4),
    ("F18", lambda: _named(
        "p q u v r w s t",
        "p-q q-s p-r t-s t-r p-u q-v u-s v-r u-w v-w u-r v-s",
    ), 3, 4),
    ("F19", lambda: _named(
        "p q u v r s w t",
        "p-q u-v p-u q-v p-r q-s u-w v-w u-t v-t r-w s-w r-t s-t",
    ), 3, 4),
    ("F20", lambda: _named(F20_NAMES, F20_EDGES), 3, 4),
    ("F21", lambda: _named(F20_NAMES, F20_EDGES + " p-w"), 3, 4),
    ("F22", lambda: _named(
        "p q r w1 w2 s m t",
        "p-q r-w1 w1-w2 w2-s m-t q-s p-r t-s t-r p-w2 q-w1 p-m q-m w1-t w2-t",
    ), 3, 4),
]

_AUXILIARY_SOURCES = [
    ("P3", lambda: path_graph(3), 2, 2),
    ("P4", lambda: path_graph(4), 2, 2),
    ("P5", lambda: path_graph(5), 2, 3),
    ("TwoP3", lambda: disjoint_union(path_graph(3), path_graph(3)), 2, 2),
    ("ThreeP3", lambda: disjoint_union(path_graph(3), path_graph(3), path_graph(3)), 2, 3),
    ("TwoK2", lambda: disjoint_union(path_graph(2), path_graph(2)), 2, 2),
    ("C4", lambda: cycle_graph(4), 2, 2),
    ("C5", lambda: cycle_graph(5), 3, 3),
]

CHORDAL_FAMILY = tuple(f"F{i}" for i in range(1, 10))
HOLED_FAMILY = tuple(f"F{i}" for i in range(10, 23))
FAMILY = CHORDAL_FAMILY + HOLED_FAMILY
# Component counts of the disconnected patterns; all others are connected
COMPONENT_COUNTS = {"F2": 2, "F3": 3, "F6": 2, "TwoP3": 2, "ThreeP3": 3, "TwoK2": 2}
# F1-F3 each have exactly three vertices of degree 2
DEGREE_WITNESS_PATTERNS = ("F1", "F2", "F3")
NO_TWIN_PATTERNS = ("F1", "F4", "F8")
ONE_TWIN_ORBIT_PATTERNS = ("F2", "F3", "F5", "F6", "F7", "F9")


def _search_order(p: Graph) -> List[int]:
    """Most already-placed neighbours first, then highest degree, then lowest index."""
    order: List[int] = []
    placed = 0
    remaining = p.vertices
    while remaining:
        v = max(
            iter_vertices(remaining),
            key=lambda x: ((p.adj[x] & placed).bit_count(), p.degree(x), -x),
        )
        order.append(v)
        placed |= bit(v)
        remaining &= ~bit(v)
    return order


def iter_induced_graph(host: Graph, p: Graph) -> Iterator[Tuple[int, ...]]:
    """Yield every induced embedding of p into host as a pattern-indexed tuple."""
    if p.n > host.n:
        return
    order = _search_order(p)
    mapping = [-1] * p.n
    host_degrees = host.degrees()

    def extend(depth: int, used: VertexSet) -> Iterator[Tuple[int, ...]]:
        if depth == len(order):
            yield tuple(mapping)
            return
        pv = order[depth]
        candidates = host.vertices & ~used
        for earlier in order[:depth]:
            image = host.adj[mapping[earlier]]
            if p.has_edge(pv, earlier):
                candidates &= image
            else:
                candidates &= ~image
            if not candidates:
                return
        needed = p.degree(pv)
        for hv in iter_vertices(candidates):
            if host_degrees[hv] < needed:
                continue
            mapping[pv] = hv
            yield from extend(depth + 1, used | bit(hv))
        mapping[pv] = -1

    yield from extend(0, 0)


class PatternCatalog:
    """The 22 minimally b-imperfect patterns plus auxiliary patterns, with induced search."""

    def __init__(self):
        self._patterns: Optional[Dict[str, Pattern]] = None

    def _ensure_initialized(self):
        """Build and structurally validate the compiled-in patterns on first use."""
        if self._patterns is None:
            logger.info("Loading pattern catalog...")
            patterns = {}
            for sources, in_family in ((_FAMILY_SOURCES, True), (_AUXILIARY_SOURCES, False)):
                for name, build, chi, b in sources:
                    graph = build()
                    hole = not is_chordal(graph).is_chordal
                    pattern = Pattern(name, graph, chi, b, hole, in_family)
                    self._check_structure(pattern)
                    patterns[name] = pattern
            self._patterns = patterns
            logger.info(f"Pattern catalog loaded: {len(patterns)} patterns")

    @staticmethod
    def _check_structure(pattern: Pattern) -> None:
        name = pattern.name
        if name in CHORDAL_FAMILY and pattern.contains_hole:
            raise CatalogDefectError(name, "expected a chordal graph")
        if name in HOLED_FAMILY:
            if not any(
                next(iter_induced_graph(pattern.graph, cycle_graph(length)), None) is not None
                for length in (4, 5)
            ):
                raise CatalogDefectError(name, "expected an induced C4 or C5")
        expected_components = COMPONENT_COUNTS.get(name, 1)
        found = len(components(pattern.graph))
        if found != expected_components:
            raise CatalogDefectError(name, f"expected {expected_components} components, found {found}")

    def catalog(self) -> List[Pattern]:
        self._ensure_initialized()
        return list(self._patterns.values())

    def get(self, name: str) -> Pattern:
        self._ensure_initialized()
        if name not in self._patterns:
            raise UnknownPatternError(name)
        return self._patterns[name]

    def family(self) -> List[Pattern]:
        return [self.get(name) for name in FAMILY]

    def iter_induced(self, host: Graph, pattern: Pattern) -> Iterator[Embedding]:
        for mapping in iter_induced_graph(host, pattern.graph):
            yield Embedding(pattern.name, mapping)

    def find_induced(self, host: Graph, pattern: Pattern) -> Optional[Embedding]:
        return next(self.iter_induced(host, pattern), None)

    def _scan_order(self, names: Iterable[str]) -> List[Pattern]:
        patterns = [self.get(name) for name in names]
        position = {name: i for i, name in enumerate(self._patterns)}
        return sorted(patterns, key=lambda p: (p.n, position[p.name]))

    def scan_family(
        self,
        host: Graph,
        family: Optional[Sequence[str]] = None,
        full_scan: Optional[bool] = None,
        chordal: Optional[bool] = None
    ) -> Optional[Tuple[str, Embedding]]:
        """
        First induced pattern found, scanning ascending by pattern size.

        With the whole family requested on a chordal host, only F1-F9 are
        scanned unless ``full_scan`` (or BPERF_FULL_SCAN) forces all 22.
        """
        names = list(FAMILY if family is None else family)
        if full_scan is None:
            full_scan = settings.BPERF_FULL_SCAN
        if not full_scan and set(names) == set(FAMILY):
            if chordal is None:
                chordal = is_chordal(host).is_chordal
            if chordal:
                names = list(CHORDAL_FAMILY)
        for pattern in self._scan_order(names):
            embedding = self.find_induced(host, pattern)
            if embedding is not None:
                logger.debug(f"Found induced {pattern.name} at {list(embedding.mapping)}")
                return pattern.name, embedding
        return None

    def automorphisms(self, pattern: Pattern) -> List[Tuple[int, ...]]:
        return list(iter_induced_graph(pattern.graph, pattern.graph))

    def non_adjacent_twin_orbits(self, pattern: Pattern) -> List[Set[Tuple[int, int]]]:
        """Non-adjacent twin pairs grouped into orbits under the automorphism group."""
        g = pattern.graph
        pairs = [
            (x, y) for x, y in combinations(range(g.n), 2)
            if not g.has_edge(x, y) and are_twins(g, x, y)
        ]
        autos = self.automorphisms(pattern)
        orbits: List[Set[Tuple[int, int]]] = []
        for pair in pairs:
            if any(pair in orbit for orbit in orbits):
                continue
            orbits.append({tuple(sorted((sigma[pair[0]], sigma[pair[1]]))) for sigma in autos})
        return orbits

    @staticmethod
    def pairwise_twin_triples(g: Graph) -> List[Tuple[int, int, int]]:
        return [
            (x, y, z) for x, y, z in combinations(range(g.n), 3)
            if are_twins(g, x, y) and are_twins(g, x, z) and are_twins(g, y, z)
        ]

    def validate_catalog(self, names: Optional[Sequence[str]] = None) -> CatalogReport:
        """
        Check every family member against its expected chi and b, minimal
        b-imperfection, the degree-2 b-vertex witness of F1-F3, and its twin
        structure; also check that no pattern of the family or C4 has three
        pairwise twins.
        """
        from app.services.color_solver import color_solver
        from app.services.recognizer import recognizer

        self._ensure_initialized()
        report = CatalogReport()
        for pattern in [self.get(name) for name in (names or FAMILY)]:
            g = pattern.graph
            name = pattern.name
            logger.info(f"Validating {name}")

            chi, _ = color_solver.chi_exact(g)
            report.checks.append(CatalogCheck(
                pattern=name, check="chi", passed=chi == pattern.expected_chi,
                detail=f"chi={chi}, expected {pattern.expected_chi}",
            ))
            b, _ = color_solver.b_chromatic(g)
            report.checks.append(CatalogCheck(
                pattern=name, check="b", passed=b == pattern.expected_b,
                detail=f"b={b}, expected {pattern.expected_b}",
            ))

            witness = recognizer.imperfect_subset(g, proper_only=True)
            report.checks.append(CatalogCheck(
                pattern=name, check="minimality", passed=witness is None,
                detail=None if witness is None else f"proper subgraph {list(iter_vertices(witness))} has b > chi",
            ))

            if name in DEGREE_WITNESS_PATTERNS:
                system = [v for v in range(g.n) if g.degree(v) == 2]
                coloring = None
                if len(system) == 3:
                    coloring = color_solver.extend_b_vertex_system(g, system)
                report.checks.append(CatalogCheck(
                    pattern=name, check="degree_witness", passed=coloring is not None,
                    detail=f"degree-2 vertices {system}",
                ))

            if name in NO_TWIN_PATTERNS or name in ONE_TWIN_ORBIT_PATTERNS:
                orbits = self.non_adjacent_twin_orbits(pattern)
                expected = 0 if name in NO_TWIN_PATTERNS else 1
                report.checks.append(CatalogCheck(
                    pattern=name, check="twins", passed=len(orbits) == expected,
                    detail=f"{len(orbits)} orbit(s) of non-adjacent twins, expected {expected}",
                ))

            triples = self.pairwise_twin_triples(g)
            report.checks.append(CatalogCheck(
                pattern=name, check="twin_triples", passed=not triples,
                detail=f"pairwise twins {list(triples[0])}" if triples else None,
            ))

        c4_triples = self.pairwise_twin_triples(self.get("C4").graph)
        report.checks.append(CatalogCheck(pattern="C4", check="twin_triples", passed=not c4_triples))

        failed = report.failures()
        if failed:
            logger.warning(f"Catalog validation found {len(failed)} failing check(s)")
        else:
            logger.info(f"Catalog validation passed {len(report.checks)} checks")
        return report

    def records(self) -> List[PatternRecord]:
        return [
            PatternRecord(
                name=p.name,
                n=p.n,
                edges=p.graph.edges(),
                expected_chi=p.expected_chi,
                expected_b=p.expected_b,
                contains_hole=p.contains_hole,
            )
            for p in self.catalog()
        ]

    def dump_catalog(self) -> List[str]:
        """One JSON object per pattern: name, n, edge list, expected chi and b."""
        return [record.model_dump_json() for record in self.records()]


pattern_catalog = PatternCatalog()
