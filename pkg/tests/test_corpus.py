from collections import Counter
from itertools import combinations
import random

import networkx as nx
import pytest

from app.core.exceptions import BudgetExceededError, EdgeListFormatError, InvalidGraphError
from app.graph.bits import full_set, to_list
from app.graph.canon import canonical_graph6
from app.graph.chordal import is_chordal
from app.graph.core import complete_graph, is_connected, path_graph
from app.graph.graph6 import emit_graph6
from app.schemas.campaign import CorpusSource
from app.services.c5_reduction import count_and_find_c5, cycle_order, extract_site
from app.services.corpus import (
    corpus_service,
    enumerate_chordal_graphs,
    enumerate_graphs,
    passes_filter,
    random_c5_host,
    random_chordal_graph,
)
from app.services.pattern_catalog import pattern_catalog
from app.utils.parsers import graph_file_parser
from tests.conftest import to_networkx


class TestEnumeration:
    def test_class_counts(self):
        counts = Counter(g.n for g in enumerate_graphs(6))
        assert [counts[n] for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]

    def test_classes_are_distinct(self):
        four = [to_networkx(g) for g in enumerate_graphs(4) if g.n == 4]
        for g, h in combinations(four, 2):
            assert not nx.is_isomorphic(g, h)

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            list(enumerate_graphs(9))

    def test_zero(self):
        assert list(enumerate_graphs(0)) == []

    def test_chordal_class_counts(self):
        counts = Counter(g.n for g in enumerate_chordal_graphs(7))
        assert [counts[n] for n in range(1, 8)] == [1, 2, 4, 10, 27, 94, 393]

    def test_chordal_classes_match_filtered_enumeration(self):
        direct = {canonical_graph6(g) for g in enumerate_chordal_graphs(6)}
        filtered = {canonical_graph6(g) for g in enumerate_graphs(6) if is_chordal(g).is_chordal}
        assert direct == filtered

    def test_chordal_budget(self):
        with pytest.raises(BudgetExceededError):
            list(enumerate_chordal_graphs(10))

    def test_builtin_filter(self):
        source = CorpusSource(kind="builtin", max_n=4, filter="c4free")
        assert len(list(corpus_service.iter_graphs(source))) == 1 + 2 + 4 + 10


class TestRandomCorpus:
    def test_reproducible_from_seed(self):
        source = CorpusSource(kind="random", count=5, order=7, seed=11)
        first = [emit_graph6(g) for g in corpus_service.iter_graphs(source)]
        again = [emit_graph6(g) for g in corpus_service.iter_graphs(source)]
        assert first == again
        assert len(first) == 5

    def test_chordal_filter(self):
        source = CorpusSource(kind="random", count=20, order=9, seed=3, filter="chordal")
        graphs = list(corpus_service.iter_graphs(source))
        assert len(graphs) == 20
        assert all(is_chordal(g).is_chordal for g in graphs)

    def test_chordal_samples_can_be_disconnected(self):
        rnd = random.Random(0)
        samples = [random_chordal_graph(8, p, rnd) for p in (0.0, 0.1, 0.2) for _ in range(30)]
        assert all(is_chordal(g).is_chordal for g in samples)
        assert any(not is_connected(g) for g in samples)

    def test_c4free_filter(self):
        source = CorpusSource(kind="random", count=10, order=6, edge_prob=0.3, seed=5, filter="c4free")
        c4 = pattern_catalog.get("C4")
        for g in corpus_service.iter_graphs(source):
            assert pattern_catalog.find_induced(g, c4) is None

    def test_file_corpus(self, tmp_path):
        path = tmp_path / "graphs.g6"
        path.write_text("D~{\n# comment\nD??\n")
        source = CorpusSource(kind="file", path=str(path))
        assert [g.edge_count for g in corpus_service.iter_graphs(source)] == [10, 0]


class TestParser:
    def test_detects_edge_lists(self):
        text = "3 2  # header\n0 1\n1 2\n\n2 1\n0 1\n"
        graphs = graph_file_parser.parse(text)
        assert graphs == [path_graph(3), path_graph(2)]

    def test_detects_graph6(self):
        assert graph_file_parser.parse("D~{\n") == [complete_graph(5)]

    def test_forced_format(self):
        assert graph_file_parser.detect("D~{") == "g6"
        with pytest.raises(ValueError):
            graph_file_parser.parse("D~{", "dot")

    @pytest.mark.parametrize("text", [
        "3 2\n0 1\n1 0\n",
        "3 2\n0 1\n",
        "3 1\n0 3\n",
        "3 1\n0 x\n",
        "3\n",
    ])
    def test_malformed_edge_lists(self, text):
        with pytest.raises(EdgeListFormatError):
            graph_file_parser.parse(text, "edges")


class TestC5Hosts:
    def test_cycle_and_attached_clique(self):
        rnd = random.Random(4)
        for n in range(5, 13):
            g = random_c5_host(n, 0.5, rnd)
            assert g.n == n
            assert cycle_order(g, full_set(5)) == (0, 1, 2, 3, 4)
            site = extract_site(g, [0, 1, 2, 3, 4])
            assert all(g.adj[x] & full_set(5) == full_set(5) for x in to_list(site.x))
            assert passes_filter(g, "c4free")

    def test_needs_five_vertices(self):
        with pytest.raises(InvalidGraphError):
            random_c5_host(4, 0.5, random.Random(0))

    def test_c5host_filter(self):
        source = CorpusSource(kind="random", count=10, order=9, seed=1, filter="c5host")
        hosts = list(corpus_service.iter_graphs(source))
        assert len(hosts) == 10
        for g in hosts:
            assert count_and_find_c5(g)[0] > 0
            assert pattern_catalog.scan_family(g, full_scan=True) is None
