from dataclasses import replace

import pytest

from app.core.exceptions import (
    NonCliqueAttachmentError,
    PartialAttachmentError,
    ReductionPreconditionError,
    StaleStructureError,
)
from app.graph.bits import from_vertices, full_set
from app.graph.coloring import Coloring, validate_coloring
from app.graph.core import add_vertex, complete_graph, cycle_graph, disjoint_union
from app.graph.graph6 import emit_graph6
from app.schemas.campaign import CorpusSource
from app.services.c5_reduction import (
    count_and_find_c5,
    cycle_order,
    extract_site,
    reduce,
    verify_reduction,
)
from app.services.color_solver import color_solver
from app.services.corpus import corpus_service

CYCLE = [0, 1, 2, 3, 4]


def wheel():
    return add_vertex(cycle_graph(5), full_set(5))


class TestSites:
    def test_counting(self):
        assert count_and_find_c5(cycle_graph(5)) == (1, [full_set(5)])
        assert count_and_find_c5(complete_graph(5)) == (0, [])

    def test_cycle_order(self):
        assert cycle_order(cycle_graph(5), full_set(5)) == (0, 1, 2, 3, 4)
        with pytest.raises(StaleStructureError):
            cycle_order(wheel(), from_vertices([0, 1, 2, 3, 5]))

    def test_universal_vertex_is_attached(self):
        site = extract_site(wheel(), CYCLE)
        assert site.x == from_vertices([5])

    def test_partial_attachment_gives_p5(self):
        g = add_vertex(cycle_graph(5), from_vertices([0]))
        with pytest.raises(PartialAttachmentError) as e:
            extract_site(g, CYCLE)
        assert e.value.witness_name == "P5"
        assert 5 in e.value.witness

    def test_non_adjacent_attached_vertices_give_c4(self):
        g = add_vertex(wheel(), full_set(5))
        with pytest.raises(NonCliqueAttachmentError) as e:
            extract_site(g, CYCLE)
        assert e.value.witness == (5, 0, 6, 2)


class TestReduce:
    def test_plain_cycle(self):
        g = cycle_graph(5)
        _, c = color_solver.b_chromatic(g)
        site = extract_site(g, CYCLE)
        result = reduce(g, site, c)
        assert result.ell == 3
        assert result.g_prime == complete_graph(3)
        assert verify_reduction(g, site, result).passed

    def test_four_colors_on_the_cycle(self):
        g = disjoint_union(cycle_graph(5), complete_graph(4))
        c = Coloring((2, 1, 3, 2, 4, 1, 2, 3, 4))
        assert validate_coloring(g, c).is_b_coloring
        site = extract_site(g, CYCLE)
        result = reduce(g, site, c)
        assert result.ell == 4
        assert result.renaming == {2: 1, 1: 2, 3: 3, 4: 4}
        assert result.new_vertices == (4, 5, 6, 7)
        assert result.lifted_b_coloring.colors == (2, 1, 3, 4, 1, 2, 3, 4)
        assert result.g_prime.is_independent(from_vertices(result.new_vertices))
        report = verify_reduction(g, site, result)
        assert report.passed, report.failures()

    def test_wheel(self):
        g = wheel()
        b, c = color_solver.b_chromatic(g)
        site = extract_site(g, CYCLE)
        result = reduce(g, site, c)
        report = verify_reduction(g, site, result)
        assert report.passed, report.failures()
        assert [check.name for check in report.checks] == [
            "lifted_b_coloring",
            "recolored_chi",
            "f_free_c4_free",
            "fewer_c5",
            "new_vertices_simplicial",
        ]
        assert result.lifted_b_coloring.k == b

    def test_rejects_non_b_coloring(self):
        g = cycle_graph(5)
        site = extract_site(g, CYCLE)
        with pytest.raises(ReductionPreconditionError):
            reduce(g, site, Coloring((1, 2, 3, 1, 4)))
        with pytest.raises(ReductionPreconditionError):
            reduce(g, site, Coloring((1, 1, 2, 1, 2)))

    def test_rejects_stale_site(self):
        site = extract_site(cycle_graph(5), CYCLE)
        g = wheel()
        _, c = color_solver.b_chromatic(g)
        with pytest.raises(StaleStructureError):
            reduce(g, site, c)

    def test_broken_recoloring_is_reported(self):
        g = wheel()
        _, c = color_solver.b_chromatic(g)
        site = extract_site(g, CYCLE)
        result = reduce(g, site, c)
        broken = replace(result, recolored_chi=Coloring((1,) * result.g_prime.n))
        report = verify_reduction(g, site, broken)
        assert not report.passed
        assert [check.name for check in report.failures()] == ["recolored_chi"]




def reduce_hosts(sources) -> int:
    exercised = 0
    for source in sources:
        for g in corpus_service.iter_graphs(source):
            count, cycles = count_and_find_c5(g)
            assert count > 0
            site = extract_site(g, list(cycle_order(g, cycles[0])))
            _, c = color_solver.b_chromatic(g)
            report = verify_reduction(g, site, reduce(g, site, c))
            assert report.passed, (emit_graph6(g), report.failures())
            exercised += 1
    return exercised


def test_generated_hosts_reduce_cleanly():
    sources = [CorpusSource(kind="random", count=4, order=n, seed=n, filter="c5host") for n in range(6, 11)]
    assert reduce_hosts(sources) == 20


@pytest.mark.slow
def test_thousand_generated_hosts():
    sources = [
        CorpusSource(kind="random", count=75, order=n, edge_prob=p, seed=10 * n + k, filter="c5host")
        for n in range(6, 13)
        for k, p in enumerate((0.3, 0.7))
    ]
    assert reduce_hosts(sources) >= 1000
