import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from app.core.exceptions import (
    Graph6ByteRangeError,
    Graph6HeaderError,
    Graph6TrailingDataError,
    Graph6TruncatedError,
    GraphConstructionError,
    InvalidGraphError,
    VertexOutOfRangeError,
)
from app.graph.bits import from_vertices, lowest, to_list
from app.graph.canon import canonical_graph6, canonical_order, is_isomorphic
from app.graph.core import (
    Graph,
    are_twins,
    complement,
    complete_graph,
    components,
    cycle_graph,
    disjoint_union,
    emit_edge_list,
    from_edge_list,
    induced_subgraph,
    is_connected,
    path_graph,
    relabel,
)
from app.graph.graph6 import emit_graph6, parse_graph6
from tests.conftest import graphs, to_networkx


class TestConstruction:
    def test_duplicate_pairs_collapse(self):
        g = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
        assert g.edges() == [(0, 1)]

    def test_self_loop_rejected(self):
        with pytest.raises(GraphConstructionError) as e:
            from_edge_list(3, [(1, 1)])
        assert e.value.pair == (1, 1)

    def test_out_of_range_endpoint_rejected(self):
        with pytest.raises(GraphConstructionError) as e:
            from_edge_list(3, [(0, 3)])
        assert e.value.pair == (0, 3)

    def test_from_rows_checks_symmetry(self):
        with pytest.raises(GraphConstructionError):
            Graph.from_rows([0b10, 0b00])

    def test_empty_graph(self):
        g = Graph.empty(0)
        assert g.n == 0 and g.edge_count == 0
        assert len(components(g)) == 0


class TestQueries:
    def test_induced_subgraph_keeps_ascending_order(self):
        g = cycle_graph(5)
        h, index = induced_subgraph(g, from_vertices([0, 1, 2, 3]))
        assert index == {0: 0, 1: 1, 2: 2, 3: 3}
        assert h.edges() == [(0, 1), (1, 2), (2, 3)]

    def test_induced_subgraph_rejects_foreign_vertices(self):
        with pytest.raises(VertexOutOfRangeError):
            induced_subgraph(path_graph(3), from_vertices([0, 5]))

    def test_components_ordered_by_lowest_member(self):
        g = disjoint_union(path_graph(2), Graph.empty(1), path_graph(3))
        part = components(g)
        assert [to_list(c) for c in part.components] == [[0, 1], [2], [3, 4, 5]]
        assert part.big_flags == (True, False, True)

    def test_twins(self):
        g = path_graph(3)
        assert are_twins(g, 0, 2)
        assert not are_twins(g, 0, 1)
        with pytest.raises(InvalidGraphError):
            are_twins(g, 1, 1)

    def test_edge_list_emit(self):
        assert emit_edge_list(path_graph(3)) == "3 2\n0 1\n1 2\n"

    def test_lowest_of_empty_set(self):
        assert lowest(0) == -1

    @given(graphs())
    def test_complement_is_involution(self, g):
        assert complement(complement(g)) == g

    @given(graphs())
    def test_connectivity_matches_networkx(self, g):
        h = to_networkx(g)
        expected = sorted(sorted(c) for c in nx.connected_components(h))
        assert sorted(to_list(c) for c in components(g).components) == expected
        if g.n:
            assert is_connected(g) == nx.is_connected(h)


class TestGraph6:
    def test_known_encodings(self):
        assert emit_graph6(complete_graph(5)) == "D~{"
        assert emit_graph6(Graph.empty(5)) == "D??"
        assert emit_graph6(Graph.empty(0)) == "?"
        assert emit_graph6(complete_graph(2)) == "A_"

    def test_optional_header_prefix(self):
        assert parse_graph6(">>graph6<<D~{") == complete_graph(5)

    def test_four_byte_size_header(self):
        line = emit_graph6(Graph.empty(63))
        assert line.startswith("~??~")
        assert parse_graph6(line).n == 63

    @pytest.mark.parametrize("line, error", [
        ("", Graph6HeaderError),
        ("~?", Graph6HeaderError),
        ("D~", Graph6TruncatedError),
        ("D~{?", Graph6TrailingDataError),
        ("D~\x7f", Graph6ByteRangeError),
        ("D ~{", Graph6ByteRangeError),
        ("D~~", Graph6ByteRangeError),
        ("A`", Graph6ByteRangeError),
    ])
    def test_malformed_lines(self, line, error):
        with pytest.raises(error):
            parse_graph6(line)

    @given(graphs(max_n=12))
    def test_matches_networkx_encoding(self, g):
        expected = nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()
        assert emit_graph6(g) == expected
        assert parse_graph6(expected) == g


class TestCanonicalForm:
    @given(graphs(max_n=8), st.randoms(use_true_random=False))
    def test_relabelling_keeps_canonical_form(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        h = relabel(g, perm)
        assert canonical_graph6(g) == canonical_graph6(h)
        assert is_isomorphic(g, h)

    @given(graphs(max_n=6), graphs(max_n=6))
    def test_isomorphism_matches_networkx(self, g, h):
        expected = nx.is_isomorphic(to_networkx(g), to_networkx(h))
        assert is_isomorphic(g, h) == expected
        assert (canonical_graph6(g) == canonical_graph6(h)) == expected

    @given(graphs(max_n=10))
    def test_canonical_order_is_a_permutation(self, g):
        assert sorted(canonical_order(g)) == list(range(g.n))

    def test_p4_and_k1_3_differ(self):
        star = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
        assert not is_isomorphic(path_graph(4), star)


@pytest.mark.slow
def test_round_trip_over_enumeration():
    from app.services.corpus import enumerate_graphs

    for g in enumerate_graphs(8):
        assert parse_graph6(emit_graph6(g)) == g


@given(st.integers(min_value=20, max_value=62), st.randoms(use_true_random=False))
def test_round_trip_large_orders(n, rnd):
    from app.services.corpus import random_graph

    g = random_graph(n, rnd.random(), rnd)
    assert parse_graph6(emit_graph6(g)) == g


@pytest.mark.slow
def test_round_trip_bulk():
    from app.services.corpus import random_graph

    rnd = random.Random(9)
    for _ in range(100_000):
        g = random_graph(rnd.randint(0, 62), rnd.random(), rnd)
        assert parse_graph6(emit_graph6(g)) == g
