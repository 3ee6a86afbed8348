from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from app.core.exceptions import InvalidOrderingError, NotChordalError, NotPeoError
from app.graph.chordal import (
    ChordalityCertificate,
    EliminationOrdering,
    find_hole,
    greedy_color_peo,
    is_chordal,
    is_peo,
    lexbfs_order,
    omega_chordal,
    validate_hole,
)
from app.graph.bits import from_vertices
from app.graph.coloring import validate_coloring
from app.graph.core import (
    Graph,
    complete_graph,
    cycle_graph,
    from_edge_list,
    induced_subgraph,
    is_connected,
    path_graph,
)
from app.graph.graph6 import emit_graph6
from app.services.color_solver import color_solver
from app.services.corpus import enumerate_chordal_graphs, enumerate_graphs, random_chordal_graph
from tests.conftest import all_labelled_graphs, graphs, to_networkx


@st.composite
def chordal_graphs(draw, max_n: int = 10) -> Graph:
    n = draw(st.integers(min_value=1, max_value=max_n))
    p = draw(st.floats(min_value=0.0, max_value=1.0))
    return random_chordal_graph(n, p, draw(st.randoms(use_true_random=False)))


class TestRecognition:
    @given(graphs(max_n=9))
    def test_agrees_with_networkx(self, g):
        certificate = is_chordal(g)
        assert certificate.is_chordal == nx.is_chordal(to_networkx(g))

    @given(graphs(max_n=9))
    def test_certificate_is_checkable(self, g):
        certificate = is_chordal(g)
        if certificate.is_chordal:
            assert is_peo(g, certificate.ordering).is_peo
        else:
            assert validate_hole(g, certificate.hole)

    @pytest.mark.parametrize("length", [4, 5, 6, 7])
    def test_cycle_hole_covers_the_whole_cycle(self, length):
        certificate = is_chordal(cycle_graph(length))
        assert not certificate.is_chordal
        assert sorted(certificate.hole) == list(range(length))

    def test_lexbfs_breaks_ties_by_lowest_index(self):
        assert lexbfs_order(path_graph(3)).order == (2, 1, 0)

    def test_find_hole_on_chordal_graph(self):
        assert find_hole(complete_graph(4)) is None

    def test_certificate_needs_exactly_one_part(self):
        with pytest.raises(ValueError):
            ChordalityCertificate()


class TestPeo:
    def test_earliest_violation_reported(self):
        g = cycle_graph(4)
        check = is_peo(g, EliminationOrdering((0, 1, 2, 3)))
        assert not check.is_peo
        assert check.vertex == 0
        assert check.pair == (1, 3)

    def test_rejects_non_permutation(self):
        with pytest.raises(InvalidOrderingError):
            is_peo(path_graph(3), EliminationOrdering((0, 0, 1)))

    def test_greedy_coloring_needs_peo(self):
        with pytest.raises(NotPeoError):
            greedy_color_peo(cycle_graph(4), EliminationOrdering((0, 1, 2, 3)))


class TestCliques:
    @given(chordal_graphs())
    def test_omega_and_greedy_coloring_agree(self, g):
        omega, clique = omega_chordal(g)
        assert g.is_clique(clique) and clique.bit_count() == omega
        assert omega == max(len(c) for c in nx.find_cliques(to_networkx(g)))
        coloring = greedy_color_peo(g, is_chordal(g).ordering)
        validate_coloring(g, coloring)
        assert coloring.k == omega

    def test_omega_rejects_holes(self):
        with pytest.raises(NotChordalError) as e:
            omega_chordal(cycle_graph(5))
        assert sorted(e.value.hole) == [0, 1, 2, 3, 4]

    def test_omega_of_edgeless_graph(self):
        assert omega_chordal(from_edge_list(3, []))[0] == 1


def has_hole(g: Graph) -> bool:
    """Some vertex subset of size >= 4 induces a cycle."""
    for size in range(4, g.n + 1):
        for subset in combinations(range(g.n), size):
            h, _ = induced_subgraph(g, from_vertices(subset))
            if all(d == 2 for d in h.degrees()) and is_connected(h):
                return True
    return False


@pytest.mark.slow
class TestExhaustive:
    def test_hole_sweep_on_every_class_up_to_seven(self):
        for g in enumerate_graphs(7):
            assert is_chordal(g).is_chordal == (not has_hole(g)), emit_graph6(g)

    def test_hole_sweep_on_labelled_graphs_up_to_five(self):
        for n in range(6):
            for g in all_labelled_graphs(n):
                assert is_chordal(g).is_chordal == (not has_hole(g)), emit_graph6(g)

    def test_chromatic_number_equals_clique_number(self):
        for g in enumerate_chordal_graphs(8):
            chi, _ = color_solver.chi_exact(g)
            assert chi == omega_chordal(g)[0], emit_graph6(g)
