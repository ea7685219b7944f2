"""
Graph 與結構查詢

    - from_edges 正規化與輸入檢查
    - 距離矩陣與 BFS oracle 一致
    - 連通、直徑、圍長（含無環標記）
    - 雙胞胎偵測（真/假雙胞胎）
    - networkx 互通與 fingerprint
"""

import networkx as nx
import pytest

import core
import models
from core.constructions import complete, cycle, path, petersen, star, wheel
from core.errors import DisconnectedGraph, InvalidEdge, InvalidOrder
from core.graph_core import ACYCLIC, UNREACHABLE, Graph, diameter, girth, twins

from conftest import bfs_distances, random_connected_graph


# == 建構 ==================================================================

class TestFromEdges:
    def test_adjacency_sorted_and_symmetric(self):
        g = Graph.from_edges(4, [(3, 0), (0, 1), (2, 1)])
        assert g.adjacency == ((1, 3), (0, 2), (1,), (0,))
        assert g.size == 3

    def test_edge_order_irrelevant_for_equality(self):
        assert Graph.from_edges(3, [(0, 1), (1, 2)]) == Graph.from_edges(3, [(2, 1), (1, 0)])

    def test_labels_do_not_affect_equality(self):
        assert Graph.from_edges(2, [(0, 1)], labels=["a", "b"]) == Graph.from_edges(2, [(0, 1)])

    def test_self_loop_rejected(self):
        with pytest.raises(InvalidEdge):
            Graph.from_edges(3, [(1, 1)])

    def test_duplicate_edge_rejected(self):
        with pytest.raises(InvalidEdge):
            Graph.from_edges(3, [(0, 1), (1, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(InvalidEdge):
            Graph.from_edges(3, [(0, 3)])

    def test_zero_order_rejected(self):
        with pytest.raises(InvalidOrder):
            Graph.from_edges(0, [])

    def test_invalid_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 0)])


# == 距離 ==================================================================

class TestDistances:
    def test_path_distances(self):
        d = path(5).distances()
        assert d[0, 4] == 4
        assert d[2, 2] == 0
        assert d[1, 3] == 2

    def test_matches_bfs_oracle(self, rng):
        for _ in range(20):
            g = random_connected_graph(rng, rng.randint(2, 9))
            d = g.distances()
            oracle = bfs_distances(g)
            for u in range(g.order):
                for v in range(g.order):
                    assert d[u, v] == oracle[u][v]

    def test_disconnected_marks_unreachable(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        d = g.distances()
        assert d[0, 2] == UNREACHABLE
        assert d.is_finite(0, 1) and not d.is_finite(1, 3)
        assert not d.connected
        assert not g.is_connected()

    def test_require_connected_raises(self):
        g = Graph.from_edges(3, [(0, 1)])
        with pytest.raises(DisconnectedGraph):
            g.require_connected()

    def test_diameter_of_disconnected_raises(self):
        with pytest.raises(DisconnectedGraph):
            diameter(Graph.from_edges(3, [(0, 1)]))


# == 結構指標 ==============================================================

class TestStructure:
    @pytest.mark.parametrize("g, expected", [
        (path(6), 5),
        (cycle(7), 3),
        (cycle(8), 4),
        (complete(5), 1),
        (petersen(), 2),
        (wheel(9), 2),
    ])
    def test_diameter(self, g, expected):
        assert diameter(g) == expected

    def test_girth_of_forest_is_acyclic(self):
        assert girth(path(6)) is ACYCLIC
        assert girth(star(5)) is ACYCLIC

    @pytest.mark.parametrize("g, expected", [
        (cycle(7), 7),
        (complete(4), 3),
        (petersen(), 5),
        (wheel(6), 3),
    ])
    def test_girth(self, g, expected):
        assert girth(g) == expected

    def test_degrees(self):
        g = wheel(6)
        assert g.max_degree == 6
        assert g.min_degree == 3
        assert not g.is_regular()
        assert petersen().is_regular()


# == 雙胞胎 ================================================================

class TestTwins:
    def test_complete_graph_all_pairs_true_twins(self):
        assert len(twins(complete(5))) == 10

    def test_star_leaves_are_false_twins(self):
        assert twins(star(4)) == [(1, 2), (1, 3), (2, 3)]

    def test_c4_opposite_vertices(self):
        assert twins(cycle(4)) == [(0, 2), (1, 3)]

    def test_long_path_has_no_twins(self):
        assert twins(path(5)) == []
        assert path(5).twin_vertices() == []

    def test_p2_endpoints_are_true_twins(self):
        assert twins(path(2)) == [(0, 1)]


# == networkx 互通 =========================================================

class TestInterop:
    def test_networkx_round_trip_preserves_graph(self):
        g = petersen()
        assert Graph.from_networkx(g.to_networkx()) == g

    def test_from_networkx_relabels_sorted(self):
        g = Graph.from_networkx(nx.path_graph(["c", "a", "b"]))
        assert g.labels == ("a", "b", "c")
        assert g.has_edge(2, 0) and g.has_edge(0, 1)

    def test_fingerprint(self):
        fp = wheel(5).fingerprint()
        assert fp == {
            "order": 6,
            "size": 10,
            "degree_sequence": [5, 3, 3, 3, 3, 3],
            "girth": 3,
            "diameter": 2,
        }

    def test_fingerprint_of_disconnected_graph(self):
        fp = Graph.from_edges(3, [(0, 1)]).fingerprint()
        assert fp["diameter"] is None
        assert fp["girth"] is None

    @pytest.mark.parametrize("package", [core, models])
    def test_package_exports_resolve(self, package):
        for name in package.__all__:
            assert getattr(package, name).__name__ == name
        with pytest.raises(AttributeError):
            getattr(package, "missing")
