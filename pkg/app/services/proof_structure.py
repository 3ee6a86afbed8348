from dataclasses import dataclass, replace
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple
import logging
import random

from app.core.config import settings
from app.core.exceptions import BudgetExceededError, InvalidSeedError, StaleStructureError
from app.graph.bits import VertexSet, bit, from_vertices, iter_vertices, lowest, size, to_list
from app.graph.chordal import is_chordal
from app.graph.core import Graph, components_within
from app.schemas.claims import ClaimResult, ClaimsReport
from app.services.pattern_catalog import pattern_catalog

logger = logging.getLogger(__name__)

TwoK2 = Tuple[Tuple[int, int], Tuple[int, int]]


@dataclass(frozen=True, slots=True)
class Decomposition:
    """Inclusion-maximal S with at least two big components, R = V - S, and optionally Z."""

    s: VertexSet
    r: VertexSet
    big_components: Tuple[VertexSet, ...]
    z: Optional[VertexSet] = None

    @property
    def t(self) -> Optional[VertexSet]:
        return None if self.z is None else self.s & ~self.z


def find_2K2(g: Graph) -> Optional[TwoK2]:
    """First pair of edges, lexicographically, inducing exactly two disjoint edges."""
    edges = g.edges()
    for (a, b), (c, d) in combinations(edges, 2):
        if len({a, b, c, d}) < 4:
            continue
        if (g.adj[a] | g.adj[b]) & (bit(c) | bit(d)):
            continue
        return (a, b), (c, d)
    return None


def big_components(g: Graph, s: VertexSet) -> List[VertexSet]:
    return [c for c in components_within(g, s) if size(c) >= 2]


def _has_two_big(g: Graph, s: VertexSet) -> bool:
    return len(big_components(g, s)) >= 2


def _is_maximal(g: Graph, s: VertexSet) -> bool:
    return not any(_has_two_big(g, s | bit(v)) for v in iter_vertices(g.vertices & ~s))


def grow_maximal_S(g: Graph, seed: TwoK2) -> Decomposition:
    """
    Grow S from a 2K2 seed by ascending single-vertex additions that keep
    two big components, repeating passes until none applies.
    """
    (a, b), (c, d) = seed
    vertices = {a, b, c, d}
    if (
        len(vertices) != 4
        or max(vertices) >= g.n
        or min(vertices) < 0
        or not g.has_edge(a, b)
        or not g.has_edge(c, d)
        or (g.adj[a] | g.adj[b]) & (bit(c) | bit(d))
    ):
        raise InvalidSeedError([a, b, c, d])

    s = from_vertices(vertices)
    grown = True
    while grown:
        grown = False
        for v in iter_vertices(g.vertices & ~s):
            if _has_two_big(g, s | bit(v)):
                s |= bit(v)
                grown = True
    return Decomposition(s, g.vertices & ~s, tuple(big_components(g, s)))


def all_maximal_decompositions(g: Graph) -> List[Decomposition]:
    """Every inclusion-maximal S with at least two big components (small hosts only)."""
    budget = settings.BPERF_MAX_BUILTIN_N
    if g.n > budget:
        raise BudgetExceededError("all_maximal_decompositions", g.n, budget)
    result = []
    for s in range(1 << g.n):
        if _has_two_big(g, s) and _is_maximal(g, s):
            result.append(Decomposition(s, g.vertices & ~s, tuple(big_components(g, s))))
    return result


def _connected_subsets(
    g: Graph,
    within: VertexSet,
    max_size: Optional[int] = None
) -> Iterator[VertexSet]:
    """Every non-empty connected subset of ``within``, optionally capped in size."""
    seen = set()
    stack = [bit(v) for v in iter_vertices(within)]
    while stack:
        current = stack.pop()
        if current in seen:
            continue
        seen.add(current)
        yield current
        if max_size is not None and size(current) >= max_size:
            continue
        frontier = 0
        for v in iter_vertices(current):
            frontier |= g.adj[v]
        for w in iter_vertices(frontier & within & ~current):
            grown = current | bit(w)
            if grown not in seen:
                stack.append(grown)


def _random_connected_subset(
    g: Graph,
    within: VertexSet,
    target: int,
    rng: random.Random
) -> VertexSet:
    current = bit(rng.choice(to_list(within)))
    while size(current) < target:
        frontier = 0
        for v in iter_vertices(current):
            frontier |= g.adj[v]
        frontier &= within & ~current
        if not frontier:
            break
        current |= bit(rng.choice(to_list(frontier)))
    return current


class ClaimChecker:
    """Checks the coloring-free structural claims on a maximal decomposition."""

    def __init__(self):
        self.exhaustive_n = settings.BPERF_CLAIM6_EXHAUSTIVE_N
        self.max_small_y = settings.BPERF_CLAIM6_MAX_SMALL_Y
        self.random_y = settings.BPERF_CLAIM6_RANDOM_Y

    @staticmethod
    def _check_fresh(g: Graph, d: Decomposition) -> None:
        if d.s | d.r != g.vertices or d.s & d.r:
            raise StaleStructureError("S and R do not partition the vertex set")
        if tuple(big_components(g, d.s)) != d.big_components:
            raise StaleStructureError("big components of S changed")
        if len(d.big_components) < 2:
            raise StaleStructureError("S has fewer than two big components")

    def claim3(self, g: Graph, d: Decomposition) -> ClaimResult:
        """Every vertex of R has a neighbour in every big component of S."""
        for r in iter_vertices(d.r):
            for comp in d.big_components:
                if not g.adj[r] & comp:
                    return ClaimResult(
                        claim="claim3", passed=False, witness=[r, *to_list(comp)],
                        detail=f"{r} has no neighbour in {to_list(comp)}",
                    )
        return ClaimResult(claim="claim3", passed=True)

    def claim4(self, g: Graph, d: Decomposition) -> ClaimResult:
        """R is a clique."""
        for x, y in combinations(to_list(d.r), 2):
            if not g.has_edge(x, y):
                return ClaimResult(claim="claim4", passed=False, witness=[x, y])
        return ClaimResult(claim="claim4", passed=True)

    def claim5(self, g: Graph, d: Decomposition) -> Tuple[ClaimResult, Optional[VertexSet]]:
        """Some big component Z such that R sees all of every other big component."""
        first_miss = None
        for z in d.big_components:
            miss = None
            for r in iter_vertices(d.r):
                for comp in d.big_components:
                    if comp != z and comp & ~g.adj[r]:
                        miss = (r, lowest(comp & ~g.adj[r]))
                        break
                if miss:
                    break
            if miss is None:
                return ClaimResult(claim="claim5", passed=True, witness=to_list(z)), z
            first_miss = first_miss or miss
        return ClaimResult(
            claim="claim5", passed=False, witness=list(first_miss),
            detail=f"no big component works as Z; with the first, {first_miss[0]} misses {first_miss[1]}",
        ), None

    def _claim6_sets(self, g: Graph, free: VertexSet, rng: random.Random) -> Iterator[VertexSet]:
        if g.n <= self.exhaustive_n:
            yield from _connected_subsets(g, free)
            return
        yield from _connected_subsets(g, free, self.max_small_y)
        if size(free) > self.max_small_y:
            for _ in range(self.random_y):
                target = rng.randint(self.max_small_y + 1, size(free))
                yield _random_connected_subset(g, free, target, rng)

    def claim6(self, g: Graph, d: Decomposition, rng: random.Random) -> ClaimResult:
        """
        For a in R and connected Y inside Z avoiding N(a), some vertex of Z
        is adjacent to all of Y and to a.
        """
        if d.z is None:
            return ClaimResult(claim="claim6", passed=None, detail="no Z designated")
        checked = 0
        for a in iter_vertices(d.r):
            free = d.z & ~g.adj[a]
            if not free:
                continue
            for y in self._claim6_sets(g, free, rng):
                checked += 1
                common = d.z & g.adj[a]
                for v in iter_vertices(y):
                    common &= g.adj[v]
                if not common:
                    return ClaimResult(
                        claim="claim6", passed=False, witness=[a, *to_list(y)],
                        detail=f"no vertex of Z sees {a} and all of {to_list(y)}",
                    )
        return ClaimResult(claim="claim6", passed=True, detail=f"{checked} (a, Y) pairs")

    def clique_extension(self, g: Graph, d: Decomposition) -> ClaimResult:
        """R plus any edge of a big component of T is a clique."""
        if d.z is None:
            return ClaimResult(claim="clique_extension", passed=None, detail="no Z designated")
        for comp in d.big_components:
            if comp == d.z:
                continue
            for a in iter_vertices(comp):
                for b in iter_vertices(g.adj[a] & comp & ~((bit(a) << 1) - 1)):
                    if not g.is_clique(d.r | bit(a) | bit(b)):
                        return ClaimResult(claim="clique_extension", passed=False, witness=[a, b])
        return ClaimResult(claim="clique_extension", passed=True)

    def check_claims(
        self,
        g: Graph,
        d: Decomposition,
        seed: Optional[int] = None
    ) -> Tuple[ClaimsReport, Decomposition]:
        """Run every claim; returns the report and ``d`` with Z designated when Claim 5 holds."""
        self._check_fresh(g, d)
        rng = random.Random(settings.BPERF_SEED if seed is None else seed)
        chordal = is_chordal(g).is_chordal
        f_free = pattern_catalog.scan_family(g, chordal=chordal) is None

        result5, z = self.claim5(g, d)
        designated = replace(d, z=z)
        results = [
            self.claim3(g, d),
            self.claim4(g, d),
            result5,
            self.claim6(g, designated, rng),
            self.clique_extension(g, designated),
        ]
        failed = [result.claim for result in results if result.passed is False]
        if failed and chordal and f_free:
            logger.warning(f"Claims {failed} failed on a chordal F-free host")
        report = ClaimsReport(
            s=to_list(d.s),
            r=to_list(d.r),
            big_components=[to_list(c) for c in d.big_components],
            z=None if z is None else to_list(z),
            chordal=chordal,
            f_free=f_free,
            results=results,
        )
        return report, designated


def seed_vertices(seed: TwoK2) -> List[int]:
    (a, b), (c, d) = seed
    return [a, b, c, d]


def decompositions_for(g: Graph, exhaustive: bool = False) -> Tuple[Optional[TwoK2], List[Decomposition]]:
    """The greedy decomposition from the first 2K2, or every maximal one."""
    seed = find_2K2(g)
    if seed is None:
        return None, []
    if exhaustive:
        return seed, all_maximal_decompositions(g)
    return seed, [grow_maximal_S(g, seed)]


def check_all(
    g: Graph,
    decompositions: Sequence[Decomposition],
    seed: Optional[int] = None
) -> List[ClaimsReport]:
    return [claim_checker.check_claims(g, d, seed)[0] for d in decompositions]


claim_checker = ClaimChecker()
