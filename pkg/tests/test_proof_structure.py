import random

import pytest
from hypothesis import HealthCheck, assume, given, settings, strategies as st

from app.core.exceptions import BudgetExceededError, InvalidSeedError, StaleStructureError
from app.graph.bits import from_vertices, to_list
from app.graph.chordal import is_chordal
from app.graph.core import Graph, cycle_graph, disjoint_union, from_edge_list, path_graph
from app.graph.graph6 import emit_graph6
from app.services.corpus import enumerate_chordal_graphs, random_chordal_graph
from app.services.pattern_catalog import pattern_catalog
from app.services.proof_structure import (
    _connected_subsets,
    all_maximal_decompositions,
    check_all,
    claim_checker,
    decompositions_for,
    find_2K2,
    grow_maximal_S,
)

BOWTIE = from_edge_list(5, [(0, 1), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])


class TestDecomposition:
    def test_find_2k2(self):
        assert find_2K2(path_graph(4)) is None
        assert find_2K2(path_graph(5)) == ((0, 1), (3, 4))
        assert find_2K2(disjoint_union(path_graph(2), path_graph(2))) == ((0, 1), (2, 3))

    def test_grow_from_seed(self):
        d = grow_maximal_S(BOWTIE, ((0, 1), (2, 3)))
        assert to_list(d.s) == [0, 1, 2, 3]
        assert to_list(d.r) == [4]
        assert [to_list(c) for c in d.big_components] == [[0, 1], [2, 3]]

    def test_invalid_seed(self):
        with pytest.raises(InvalidSeedError):
            grow_maximal_S(path_graph(4), ((0, 1), (2, 3)))

    def test_all_maximal(self):
        assert [to_list(d.s) for d in all_maximal_decompositions(BOWTIE)] == [[0, 1, 2, 3]]
        with pytest.raises(BudgetExceededError):
            all_maximal_decompositions(Graph.empty(9))

    def test_no_seed(self):
        assert decompositions_for(path_graph(3)) == (None, [])

    def test_connected_subsets(self):
        subsets = sorted(_connected_subsets(path_graph(3), from_vertices([0, 1, 2])))
        assert [to_list(s) for s in subsets] == [[0], [1], [0, 1], [2], [1, 2], [0, 1, 2]]


class TestClaims:
    def test_bowtie_passes_everything(self):
        d = grow_maximal_S(BOWTIE, ((0, 1), (2, 3)))
        report, designated = claim_checker.check_claims(BOWTIE, d)
        assert report.chordal and report.f_free
        assert report.passed
        assert report.z == [0, 1]
        assert to_list(designated.t) == [2, 3]
        assert [r.claim for r in report.results] == [
            "claim3", "claim4", "claim5", "claim6", "clique_extension",
        ]

    def test_hole_breaks_the_clique_claim(self):
        g = cycle_graph(6)
        seed, (d,) = decompositions_for(g)
        assert seed == ((0, 1), (3, 4))
        report, _ = claim_checker.check_claims(g, d)
        assert not report.chordal
        claim4 = next(r for r in report.results if r.claim == "claim4")
        assert claim4.passed is False
        assert claim4.witness == [2, 5]
        assert not report.passed

    def test_stale_decomposition(self):
        d = grow_maximal_S(BOWTIE, ((0, 1), (2, 3)))
        with pytest.raises(StaleStructureError):
            claim_checker.check_claims(path_graph(5), d)

    @settings(max_examples=30, suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])
    @given(
        st.integers(min_value=4, max_value=9),
        st.floats(min_value=0.1, max_value=0.9),
        st.randoms(use_true_random=False),
    )
    def test_claims_hold_on_chordal_f_free_graphs(self, n, p, rnd):
        g = random_chordal_graph(n, p, rnd)
        assume(find_2K2(g) is not None)
        assume(pattern_catalog.scan_family(g, chordal=True) is None)
        assert is_chordal(g).is_chordal
        for d in all_maximal_decompositions(g) if n <= 8 else decompositions_for(g)[1]:
            report, _ = claim_checker.check_claims(g, d, seed=0)
            assert report.passed, report.model_dump()


def f_free_with_2k2(g: Graph) -> bool:
    return find_2K2(g) is not None and pattern_catalog.scan_family(g, chordal=True) is None


@pytest.mark.slow
class TestClaimsAtScale:
    def test_every_chordal_f_free_class_up_to_nine(self):
        checked = 0
        for g in enumerate_chordal_graphs(9):
            if not f_free_with_2k2(g):
                continue
            _, decompositions = decompositions_for(g, exhaustive=g.n <= 8)
            for report in check_all(g, decompositions, seed=0):
                assert report.passed, (emit_graph6(g), report.model_dump())
            checked += 1
        assert checked > 0

    def test_random_chordal_hosts_up_to_fourteen(self):
        rnd = random.Random(14)
        checked = 0
        for i in range(10_000):
            g = random_chordal_graph(5 + i % 10, rnd.uniform(0.3, 0.95), rnd)
            if not f_free_with_2k2(g):
                continue
            _, decompositions = decompositions_for(g)
            for report in check_all(g, decompositions, seed=i):
                assert report.passed, (emit_graph6(g), report.model_dump())
            checked += 1
        assert checked >= 500
