"""
C5 elimination on F-free C4-free graphs.

Every vertex outside an induced C5 Z that sees Z sees all of it, and those
vertices form a clique X. Replacing Z by l new vertices a_1..a_l joined to
exactly X (pairwise adjacent when l = 3, independent when l is 4 or 5), where
l is the number of colors a b-coloring uses on Z, keeps the b-coloring, does
not raise the chromatic number and removes at least one C5.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple
import logging

from app.core.exceptions import (
    ImproperColoringError,
    NonCliqueAttachmentError,
    PartialAttachmentError,
    ReductionPreconditionError,
    StaleStructureError,
)
from app.graph.bits import VertexSet, bit, from_vertices, iter_vertices, to_list
from app.graph.coloring import Coloring, validate_coloring
from app.graph.core import Graph, cycle_graph, from_edge_list, induced_subgraph, is_simplicial
from app.schemas.reduction import ReductionCheck, ReductionReport
from app.services.color_solver import color_solver
from app.services.pattern_catalog import iter_induced_graph, pattern_catalog

logger = logging.getLogger(__name__)

# Tried in this order on Z + x when x sees only part of Z
PARTIAL_WITNESSES = ("P5", "C4", "F16")


@dataclass(frozen=True, slots=True)
class C5Site:
    """``z`` is the cycle in cyclic order; ``x`` the outside vertices seeing it."""

    z: Tuple[int, ...]
    x: VertexSet

    @property
    def z_mask(self) -> VertexSet:
        return from_vertices(self.z)


@dataclass(frozen=True, slots=True)
class ReductionResult:
    g_prime: Graph
    new_vertices: Tuple[int, ...]
    ell: int
    k: int
    renaming: Dict[int, int]
    survivors: Dict[int, int]
    lifted_b_coloring: Coloring
    recolored_chi: Coloring


def count_and_find_c5(g: Graph) -> Tuple[int, List[VertexSet]]:
    """All induced 5-cycles as vertex sets, ascending."""
    found = set()
    for mapping in iter_induced_graph(g, cycle_graph(5)):
        found.add(from_vertices(mapping))
    cycles = sorted(found)
    return len(cycles), cycles


def cycle_order(g: Graph, z: VertexSet) -> Tuple[int, ...]:
    """Walk an induced C5 from its lowest vertex towards its lower-indexed neighbour."""
    members = to_list(z)
    sub, _ = induced_subgraph(g, z)
    if len(members) != 5 or sub.edge_count != 5 or any(d != 2 for d in sub.degrees()):
        raise StaleStructureError(f"{members} does not induce a C5")
    order = [members[0]]
    previous = -1
    current = members[0]
    for _ in range(4):
        step = min(v for v in iter_vertices(g.adj[current] & z) if v != previous)
        previous, current = current, step
        order.append(current)
    return tuple(order)


def _attached(g: Graph, z_mask: VertexSet) -> VertexSet:
    reach = 0
    for v in iter_vertices(z_mask):
        reach |= g.adj[v]
    return reach & ~z_mask


def extract_site(g: Graph, z: Sequence[int]) -> C5Site:
    """
    Validate the attachment structure around an induced C5.

    Raises PartialAttachmentError carrying an induced P5, C4 or F16 when a
    vertex sees only part of the cycle, and NonCliqueAttachmentError carrying
    a C4 when two attached vertices are non-adjacent.
    """
    z_mask = from_vertices(z)
    cycle = cycle_order(g, z_mask)
    x_mask = _attached(g, z_mask)

    for x in iter_vertices(x_mask):
        if g.adj[x] & z_mask == z_mask:
            continue
        local, index = induced_subgraph(g, z_mask | bit(x))
        back = {new: old for old, new in index.items()}
        for name in PARTIAL_WITNESSES:
            embedding = pattern_catalog.find_induced(local, pattern_catalog.get(name))
            if embedding is not None:
                witness = tuple(back[v] for v in embedding.mapping)
                raise PartialAttachmentError(
                    f"Vertex {x} sees {to_list(g.adj[x] & z_mask)} of the C5 {list(cycle)}",
                    name,
                    witness,
                )
        raise PartialAttachmentError(f"Vertex {x} sees part of the C5 {list(cycle)}", "none", ())

    for x, y in combinations(to_list(x_mask), 2):
        if not g.has_edge(x, y):
            raise NonCliqueAttachmentError(
                f"Attached vertices {x} and {y} are non-adjacent",
                "C4",
                (x, cycle[0], y, cycle[2]),
            )
    return C5Site(cycle, x_mask)


def _check_site(g: Graph, site: C5Site) -> None:
    if len(site.z) != 5 or max(site.z, default=-1) >= g.n:
        raise StaleStructureError(f"cycle {list(site.z)} is not a C5 of this graph")
    for i in range(5):
        for j in range(i + 1, 5):
            consecutive = j == i + 1 or (i == 0 and j == 4)
            if g.has_edge(site.z[i], site.z[j]) != consecutive:
                raise StaleStructureError(f"{list(site.z)} no longer induces a C5 in this order")
    if _attached(g, site.z_mask) != site.x:
        raise StaleStructureError(f"attached set {to_list(site.x)} no longer matches the graph")


def _color_renaming(c: Coloring, z: Sequence[int]) -> Dict[int, int]:
    """Colors on Z become 1..l by first appearance along the cycle; the rest follow ascending."""
    renaming: Dict[int, int] = {}
    for v in z:
        renaming.setdefault(c.colors[v], len(renaming) + 1)
    for color in range(1, c.k + 1):
        renaming.setdefault(color, len(renaming) + 1)
    return renaming


def reduce(
    g: Graph,
    site: C5Site,
    c: Coloring,
    chi_coloring: Optional[Coloring] = None
) -> ReductionResult:
    """
    Replace the cycle of ``site`` by simplicial vertices a_1..a_l and carry
    both the b-coloring ``c`` and a chromatic coloring over to the new graph.

    ``chi_coloring`` defaults to an optimal coloring from the solver.
    """
    _check_site(g, site)
    try:
        analysis = validate_coloring(g, c)
    except ImproperColoringError as e:
        raise ReductionPreconditionError(e.detail)
    if not analysis.is_b_coloring:
        raise ReductionPreconditionError(
            f"colors {analysis.colors_without_b_vertex()} have no b-vertex"
        )

    renaming = _color_renaming(c, site.z)
    ell = len({c.colors[v] for v in site.z})
    renamed = c.relabeled(renaming)

    z_mask = site.z_mask
    rest, survivors = induced_subgraph(g, g.vertices & ~z_mask)
    base = rest.n
    new_vertices = tuple(range(base, base + ell))
    edges = list(rest.edges())
    for a in new_vertices:
        edges.extend((survivors[x], a) for x in iter_vertices(site.x))
    if ell == 3:
        edges.extend(combinations(new_vertices, 2))
    g_prime = from_edge_list(base + ell, edges)

    lifted = [0] * g_prime.n
    for old, new in survivors.items():
        lifted[new] = renamed.colors[old]
    for i, a in enumerate(new_vertices, start=1):
        lifted[a] = i

    if chi_coloring is None:
        _, chi_coloring = color_solver.chi_exact(g)
    cycle_colors = list(dict.fromkeys(chi_coloring.colors[v] for v in site.z))
    recolored = [0] * g_prime.n
    for old, new in survivors.items():
        recolored[new] = chi_coloring.colors[old]
    for i, a in enumerate(new_vertices):
        recolored[a] = cycle_colors[i] if ell == 3 else cycle_colors[0]

    logger.debug(f"Reduced C5 {list(site.z)} with l={ell}; {len(to_list(site.x))} attached vertices")
    return ReductionResult(
        g_prime=g_prime,
        new_vertices=new_vertices,
        ell=ell,
        k=c.k,
        renaming=renaming,
        survivors=survivors,
        lifted_b_coloring=Coloring(tuple(lifted)),
        recolored_chi=Coloring.from_labels(recolored),
    )


def verify_reduction(g: Graph, site: C5Site, result: ReductionResult) -> ReductionReport:
    """Run the five post-conditions of a reduction round, in order."""
    report = ReductionReport()
    g_prime = result.g_prime

    try:
        analysis = validate_coloring(g_prime, result.lifted_b_coloring)
        ok = analysis.is_b_coloring and result.lifted_b_coloring.k == result.k
        detail = None if ok else (
            f"k={result.lifted_b_coloring.k} (expected {result.k}); "
            f"colors without b-vertex {analysis.colors_without_b_vertex()}"
        )
    except ImproperColoringError as e:
        ok, detail = False, e.detail
    report.checks.append(ReductionCheck(name="lifted_b_coloring", passed=ok, detail=detail))

    chi, _ = color_solver.chi_exact(g)
    try:
        validate_coloring(g_prime, result.recolored_chi)
        ok = result.recolored_chi.k <= chi
        detail = None if ok else f"{result.recolored_chi.k} colors, chi(G)={chi}"
    except ImproperColoringError as e:
        ok, detail = False, e.detail
    report.checks.append(ReductionCheck(name="recolored_chi", passed=ok, detail=detail))

    found = pattern_catalog.scan_family(g_prime, full_scan=True)
    c4 = pattern_catalog.find_induced(g_prime, pattern_catalog.get("C4"))
    detail = None
    if found is not None:
        detail = f"induced {found[0]} at {list(found[1].mapping)}"
    elif c4 is not None:
        detail = f"induced C4 at {list(c4.mapping)}"
    report.checks.append(ReductionCheck(name="f_free_c4_free", passed=detail is None, detail=detail))

    before, _ = count_and_find_c5(g)
    after, _ = count_and_find_c5(g_prime)
    report.checks.append(ReductionCheck(
        name="fewer_c5", passed=after < before, detail=f"{before} -> {after}",
    ))

    bad = [a for a in result.new_vertices if not is_simplicial(g_prime, a)]
    report.checks.append(ReductionCheck(
        name="new_vertices_simplicial",
        passed=not bad,
        detail=f"not simplicial: {bad}" if bad else None,
    ))

    if not report.passed:
        logger.warning(f"Reduction of C5 {list(site.z)} failed: {[c.name for c in report.failures()]}")
    return report
