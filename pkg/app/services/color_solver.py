from itertools import combinations
from typing import List, Optional, Sequence, Tuple
import logging
import time

from app.core.config import settings
from app.core.exceptions import InvalidGraphError, SolverTimeoutError
from app.graph.bits import VertexSet, bit, full_set, iter_vertices
from app.graph.coloring import Coloring
from app.graph.core import Graph

logger = logging.getLogger(__name__)

# Clock reads are amortised over this many search nodes
_CHECK_EVERY = 256


class Deadline:
    """Per-call time limit shared by every search node of one solver call."""

    def __init__(self, operation: str, limit_ms: Optional[int] = None):
        self.operation = operation
        self.limit_ms = limit_ms
        self._expires = None if limit_ms is None else time.monotonic() + limit_ms / 1000.0
        self._ticks = 0

    def check(self) -> None:
        if self._expires is None:
            return
        self._ticks += 1
        if self._ticks % _CHECK_EVERY == 0 and time.monotonic() > self._expires:
            logger.warning(f"{self.operation} timed out after {self.limit_ms} ms")
            raise SolverTimeoutError(self.operation, self.limit_ms)


class ColorSolver:
    """Exact chromatic number, exact b-colorings and the b-chromatic number."""

    def __init__(self):
        self.default_limit_ms = settings.BPERF_TIME_LIMIT_MS

    def _deadline(self, operation: str, time_limit_ms: Optional[int]) -> Deadline:
        limit = time_limit_ms if time_limit_ms is not None else self.default_limit_ms
        return Deadline(operation, limit)

    @staticmethod
    def _require_vertices(g: Graph, operation: str) -> None:
        if g.n == 0:
            raise InvalidGraphError(operation, "needs a graph with at least one vertex")

    def m_degree(self, g: Graph) -> int:
        """Largest k such that g has at least k vertices of degree >= k - 1."""
        self._require_vertices(g, "m_degree")
        degrees = sorted(g.degrees(), reverse=True)
        m = 0
        for k in range(1, g.n + 1):
            if degrees[k - 1] >= k - 1:
                m = k
        return m

    def max_clique(self, g: Graph) -> VertexSet:
        """Maximum clique by branch and bound on candidate bit sets."""
        adj = g.adj
        best = 0

        def expand(clique: VertexSet, candidates: VertexSet) -> None:
            nonlocal best
            if not candidates:
                if clique.bit_count() > best.bit_count():
                    best = clique
                return
            while candidates:
                if clique.bit_count() + candidates.bit_count() <= best.bit_count():
                    return
                v = (candidates & -candidates).bit_length() - 1
                expand(clique | bit(v), candidates & adj[v])
                candidates &= ~bit(v)

        expand(0, g.vertices)
        return best

    def greedy_upper_bound(self, g: Graph) -> Coloring:
        """DSatur: repeatedly color the most saturated vertex with its smallest free color."""
        adj = g.adj
        colors = [0] * g.n
        uncolored = g.vertices
        while uncolored:
            chosen, chosen_key, chosen_used = -1, None, 0
            for v in iter_vertices(uncolored):
                used = 0
                for u in iter_vertices(adj[v] & ~uncolored):
                    used |= 1 << colors[u]
                key = (used.bit_count(), (adj[v] & uncolored).bit_count())
                if chosen_key is None or key > chosen_key:
                    chosen, chosen_key, chosen_used = v, key, used
            color = 1
            while chosen_used >> color & 1:
                color += 1
            colors[chosen] = color
            uncolored &= ~bit(chosen)
        return Coloring(tuple(colors))

    def _k_coloring(self, g: Graph, k: int, deadline: Deadline) -> Optional[List[int]]:
        """Proper coloring with at most k colors, new colors opened in order."""
        adj = g.adj
        colors = [0] * g.n

        def search(uncolored: VertexSet, opened: int) -> bool:
            deadline.check()
            if not uncolored:
                return True
            chosen, chosen_key, chosen_used = -1, None, 0
            for v in iter_vertices(uncolored):
                used = 0
                for u in iter_vertices(adj[v] & ~uncolored):
                    used |= 1 << colors[u]
                key = (used.bit_count(), (adj[v] & uncolored).bit_count())
                if chosen_key is None or key > chosen_key:
                    chosen, chosen_key, chosen_used = v, key, used
            if chosen_key[0] >= k:
                return False
            for color in range(1, min(k, opened + 1) + 1):
                if chosen_used >> color & 1:
                    continue
                colors[chosen] = color
                if search(uncolored & ~bit(chosen), max(opened, color)):
                    return True
            colors[chosen] = 0
            return False

        return colors if search(g.vertices, 0) else None

    def chi_exact(self, g: Graph, time_limit_ms: Optional[int] = None) -> Tuple[int, Coloring]:
        """
        Chromatic number with a witness coloring.

        Iterative deepening from the clique bound up to the DSatur bound.
        Raises SolverTimeoutError when the limit runs out before an answer.
        """
        self._require_vertices(g, "chi_exact")
        deadline = self._deadline("chi_exact", time_limit_ms)
        return self._chi(g, deadline)

    def _chi(self, g: Graph, deadline: Deadline) -> Tuple[int, Coloring]:
        upper = self.greedy_upper_bound(g)
        lower = self.max_clique(g).bit_count()
        for k in range(lower, upper.k):
            colors = self._k_coloring(g, k, deadline)
            if colors is not None:
                return k, Coloring(tuple(colors))
        return upper.k, upper

    def exists_b_coloring(
        self,
        g: Graph,
        k: int,
        time_limit_ms: Optional[int] = None
    ) -> Optional[Coloring]:
        """
        Find a b-coloring with exactly k colors, or None if none exists.

        Candidate b-vertex systems u1 < ... < uk are tried in ascending order
        with ui taking color i; the remaining vertices are colored by
        backtracking with forward checking on color domains.
        """
        if k < 1:
            raise InvalidGraphError("exists_b_coloring", f"needs k >= 1, got {k}")
        deadline = self._deadline("exists_b_coloring", time_limit_ms)
        return self._b_coloring(g, k, deadline)

    def _b_coloring(self, g: Graph, k: int, deadline: Deadline) -> Optional[Coloring]:
        eligible = [v for v in range(g.n) if g.degree(v) >= k - 1]
        if len(eligible) < k:
            return None
        for system in combinations(eligible, k):
            colors = self._extend_system(g, k, system, deadline)
            if colors is not None:
                logger.debug(f"b-coloring with {k} colors on b-vertex system {system}")
                return Coloring(tuple(colors))
        return None

    def extend_b_vertex_system(
        self,
        g: Graph,
        system: Sequence[int],
        time_limit_ms: Optional[int] = None
    ) -> Optional[Coloring]:
        """b-coloring in which ``system[i]`` is a b-vertex of color i + 1, if any."""
        deadline = self._deadline("extend_b_vertex_system", time_limit_ms)
        colors = self._extend_system(g, len(system), system, deadline)
        return None if colors is None else Coloring(tuple(colors))

    def _extend_system(
        self,
        g: Graph,
        k: int,
        system: Sequence[int],
        deadline: Deadline
    ) -> Optional[List[int]]:
        adj = g.adj
        everyone = full_set(k)
        domains = [everyone] * g.n

        def assign(doms: List[int], v: int, color_bit: int) -> bool:
            doms[v] = color_bit
            for u in iter_vertices(adj[v]):
                doms[u] &= ~color_bit
                if not doms[u]:
                    return False
            return True

        def demands_met(doms: List[int]) -> bool:
            for i, u in enumerate(system):
                reach = 1 << i
                for w in iter_vertices(adj[u]):
                    reach |= doms[w]
                if reach != everyone:
                    return False
            return True

        for i, u in enumerate(system):
            if not domains[u] >> i & 1 or not assign(domains, u, 1 << i):
                return None
        if not demands_met(domains):
            return None

        def search(doms: List[int], pending: VertexSet) -> Optional[List[int]]:
            deadline.check()
            if not pending:
                return doms
            v = min(iter_vertices(pending), key=lambda x: doms[x].bit_count())
            options = doms[v]
            while options:
                color_bit = options & -options
                options ^= color_bit
                trial = list(doms)
                if assign(trial, v, color_bit) and demands_met(trial):
                    found = search(trial, pending & ~bit(v))
                    if found is not None:
                        return found
            return None

        pending = g.vertices
        for u in system:
            pending &= ~bit(u)
        result = search(domains, pending)
        if result is None:
            return None
        return [d.bit_length() for d in result]

    def b_chromatic(self, g: Graph, time_limit_ms: Optional[int] = None) -> Tuple[int, Coloring]:
        """
        b-chromatic number with a witness b-coloring.

        Every k from m_degree down to chi + 1 is tested on its own; when none
        succeeds the chromatic witness is returned, since any chi-coloring is
        a b-coloring.
        """
        self._require_vertices(g, "b_chromatic")
        deadline = self._deadline("b_chromatic", time_limit_ms)
        chi, chi_coloring = self._chi(g, deadline)
        for k in range(self.m_degree(g), chi, -1):
            found = self._b_coloring(g, k, deadline)
            if found is not None:
                return k, found
        return chi, chi_coloring


color_solver = ColorSolver()
