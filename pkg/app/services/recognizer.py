from functools import lru_cache
from itertools import combinations
from typing import Optional, Tuple
import logging

from app.core.config import settings
from app.core.exceptions import BudgetExceededError
from app.graph.bits import VertexSet, from_vertices, to_list
from app.graph.canon import canonical_graph6
from app.graph.chordal import is_chordal
from app.graph.core import Graph, induced_subgraph
from app.graph.graph6 import parse_graph6
from app.schemas.verdict import (
    Basis,
    ClassEvidence,
    EmbeddingCertificate,
    Verdict,
    VerdictStatus,
)
from app.services.color_solver import color_solver
from app.services.pattern_catalog import pattern_catalog

logger = logging.getLogger(__name__)


class Recognizer:
    """Decides b-perfection from the forbidden patterns and the two class theorems."""

    def __init__(self):
        # canonical graph6 -> (b == chi), bounded LRU
        self._balanced_by_key = lru_cache(maxsize=settings.BPERF_BALANCE_CACHE_SIZE)(self._compute_balanced)

    @staticmethod
    def _compute_balanced(key: str) -> bool:
        h = parse_graph6(key)
        chi, _ = color_solver.chi_exact(h)
        b, _ = color_solver.b_chromatic(h)
        return b == chi

    def _balanced(self, h: Graph) -> bool:
        return self._balanced_by_key(canonical_graph6(h))

    def clear_cache(self) -> None:
        self._balanced_by_key.cache_clear()

    def imperfect_subset(
        self,
        g: Graph,
        proper_only: bool = False
    ) -> Optional[VertexSet]:
        """
        Smallest vertex set inducing a subgraph with b > chi, or None.

        Subsets are swept ascending by size, so the first hit is minimal.
        """
        top = g.n - 1 if proper_only else g.n
        for size in range(1, top + 1):
            for subset in combinations(range(g.n), size):
                mask = from_vertices(subset)
                h, _ = induced_subgraph(g, mask)
                if not self._balanced(h):
                    return mask
        return None

    def brute_force_b_perfect(self, g: Graph) -> Tuple[bool, Optional[VertexSet]]:
        if g.n > settings.BPERF_BRUTE_MAX_N:
            raise BudgetExceededError("brute_force_b_perfect", g.n, settings.BPERF_BRUTE_MAX_N)
        witness = self.imperfect_subset(g)
        return witness is None, witness

    def recognize(
        self,
        g: Graph,
        full_scan: Optional[bool] = None,
        brute: bool = False
    ) -> Verdict:
        """
        Verdict for g.

        An induced family member makes g b-imperfect; otherwise chordal and
        C4-free hosts are b-perfect by theorem, and the remaining F-free hosts
        are conjectured b-perfect (re-decided by brute force when ``brute``).
        """
        certificate = is_chordal(g)
        chordal = certificate.is_chordal
        c4 = None if chordal else pattern_catalog.find_induced(g, pattern_catalog.get("C4"))
        c4free = c4 is None

        found = pattern_catalog.scan_family(g, full_scan=full_scan, chordal=chordal)
        if found is not None:
            name, embedding = found
            return Verdict(
                status=VerdictStatus.B_IMPERFECT,
                basis=Basis.F_MEMBER,
                chordal=chordal,
                c4free=c4free,
                certificate=EmbeddingCertificate(pattern=name, mapping=list(embedding.mapping)),
            )
        if chordal:
            return Verdict(
                status=VerdictStatus.B_PERFECT,
                basis=Basis.CHORDAL_THEOREM,
                chordal=True,
                c4free=True,
                evidence=ClassEvidence(kind="peo", peo=list(certificate.ordering.order)),
            )
        if c4free:
            return Verdict(
                status=VerdictStatus.B_PERFECT,
                basis=Basis.C4_FREE_THEOREM,
                chordal=False,
                c4free=True,
                evidence=ClassEvidence(kind="c4-free"),
            )

        verdict = Verdict(
            status=VerdictStatus.CONJECTURED_B_PERFECT,
            basis=Basis.CONJECTURE,
            chordal=False,
            c4free=False,
            note=f"F-free, not covered by either theorem; induced C4 at {list(c4.mapping)}",
        )
        if not brute:
            return verdict

        perfect, witness = self.brute_force_b_perfect(g)
        if perfect:
            return verdict.model_copy(update={
                "status": VerdictStatus.B_PERFECT,
                "basis": Basis.BRUTE_FORCE,
            })
        logger.warning(f"F-free graph with b > chi on {to_list(witness)}: conjecture counterexample")
        return verdict.model_copy(update={
            "status": VerdictStatus.B_IMPERFECT,
            "basis": Basis.BRUTE_FORCE,
            "brute_witness": to_list(witness),
            "note": "F-free graph with b > chi: counterexample to the conjecture",
        })


recognizer = Recognizer()
