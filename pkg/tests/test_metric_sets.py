"""
區分集、k' 與 C(H)

    - D_G(x,y) 與暴力法一致，且總含 x、y
    - k' = min |D|；雙胞胎 ⇔ 2 維
    - C(H) 與冠積維度 C(ℋ)
    - D_k(G) 與 k-度量生成集檢查
"""

from itertools import combinations

import pytest

from core.constructions import complement, complete, corona, cycle, fan, path, petersen, star, wheel
from core.errors import DisconnectedGraph, SameVertex, TrivialGraph
from core.graph_core import Graph
from core.metric_sets import (
    PairTable,
    c_of_family,
    c_of_h,
    d_k_union,
    dimensional_k,
    distinctive_set,
    is_k_generator,
    nontrivial_distinctive_set,
    pair_table,
)
from models.schemas import CoronaSpec

from conftest import brute_dimensional_k, brute_distinctive, random_connected_graph


# == 區分集 ================================================================

class TestDistinctiveSet:
    def test_matches_oracle_on_random_graphs(self, rng):
        for _ in range(25):
            g = random_connected_graph(rng, rng.randint(2, 9))
            for x in range(g.order):
                for y in range(x + 1, g.order):
                    assert set(distinctive_set(g, x, y).vertices()) == brute_distinctive(g, x, y)

    def test_contains_both_endpoints(self):
        ds = distinctive_set(cycle(6), 0, 3)
        assert 0 in ds and 3 in ds

    def test_symmetric(self):
        g = petersen()
        assert distinctive_set(g, 2, 7).members == distinctive_set(g, 7, 2).members

    def test_path_middle_vertex_excluded(self):
        # d(0,1) = d(2,1)
        assert distinctive_set(path(3), 0, 2).vertices() == [0, 2]

    def test_nontrivial_part_drops_endpoints(self):
        assert nontrivial_distinctive_set(path(4), 0, 2) == frozenset({3})

    @pytest.mark.parametrize("g", [wheel(6), fan(4), star(5), petersen(), complete(4)])
    def test_small_diameter_is_closed_neighbourhood_difference(self, g):
        for x, y in combinations(range(g.order), 2):
            expected = (set(g.neighbors(x)) ^ set(g.neighbors(y))) | {x, y}
            assert set(distinctive_set(g, x, y).vertices()) == expected

    def test_twins_iff_empty_nontrivial_part(self, rng):
        for _ in range(25):
            g = random_connected_graph(rng, rng.randint(2, 7), p=rng.choice([0.2, 0.5, 0.8]))
            twin_pairs = set(g.twins())
            for x, y in combinations(range(g.order), 2):
                assert (not nontrivial_distinctive_set(g, x, y)) == ((x, y) in twin_pairs)

    def test_same_vertex_raises(self):
        with pytest.raises(SameVertex):
            distinctive_set(path(3), 1, 1)

    def test_disconnected_raises(self):
        with pytest.raises(DisconnectedGraph):
            distinctive_set(Graph.from_edges(4, [(0, 1), (2, 3)]), 0, 1)


class TestPairTable:
    def test_one_row_per_pair(self):
        table = PairTable.build(petersen())
        assert len(table) == 45
        assert [pair for pair, _ in table][:3] == [(0, 1), (0, 2), (0, 3)]

    def test_cached_per_graph(self):
        g = wheel(7)
        assert pair_table(g) is pair_table(wheel(7))

    def test_argmin_pairs_are_twins_in_complete_graph(self):
        table = pair_table(complete(4))
        assert table.min_size == 2
        assert len(table.argmin_pairs) == 6


# == k' ====================================================================

class TestDimensionalK:
    @pytest.mark.parametrize("g, expected", [
        (path(2), 2),
        (path(4), 3),
        (path(7), 6),
        (cycle(7), 6),
        (cycle(8), 6),
        (complete(5), 2),
        (star(5), 2),
        (wheel(9), 4),
        (fan(8), 3),
    ])
    def test_known_values(self, g, expected):
        assert dimensional_k(g) == expected

    def test_matches_oracle(self, rng):
        for _ in range(40):
            g = random_connected_graph(rng, rng.randint(2, 9))
            assert dimensional_k(g) == brute_dimensional_k(g)

    def test_twins_iff_two_dimensional(self, rng):
        for _ in range(40):
            g = random_connected_graph(rng, rng.randint(2, 8))
            assert (dimensional_k(g) == 2) == bool(g.twins())

    def test_below_order_for_larger_graphs(self, rng):
        for _ in range(30):
            g = random_connected_graph(rng, rng.randint(3, 9))
            assert 2 <= dimensional_k(g) < g.order

    @pytest.mark.parametrize("n", range(4, 13))
    def test_fans_three_dimensional(self, n):
        assert dimensional_k(fan(n)) == 3

    @pytest.mark.parametrize("n", range(5, 13))
    def test_wheels_four_dimensional(self, n):
        assert dimensional_k(wheel(n)) == 4

    def test_trivial_graph_rejected(self):
        with pytest.raises(TrivialGraph):
            dimensional_k(path(1))


# == C(H) 與冠積維度 =======================================================

class TestCInvariant:
    @pytest.mark.parametrize("h, expected", [
        (complete(2), 2),
        (complete(4), 2),
        (path(4), 3),
        (path(7), 3),
        (cycle(5), 4),
        (cycle(6), 4),
        (cycle(9), 4),
        (petersen(), 6),
    ])
    def test_values(self, h, expected):
        assert c_of_h(h) == expected

    def test_complement_invariant(self, rng):
        for _ in range(25):
            h = random_connected_graph(rng, rng.randint(2, 7))
            assert c_of_h(h) == c_of_h(complement(h))

    def test_family_minimum(self):
        assert c_of_family([cycle(6), path(5), complete(3)]) == 2

    def test_disconnected_attachment_allowed(self):
        # C(H) 只看鄰域，不需要距離；2K2 的兩端為雙胞胎
        assert c_of_h(Graph.from_edges(4, [(0, 1), (2, 3)])) == 2
        assert c_of_h(Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7)])) == 3

    @pytest.mark.parametrize("base", [path(2), path(3)])
    @pytest.mark.parametrize("n", [5, 6, 7, 8])
    def test_corona_of_cycles_four_dimensional(self, base, n):
        g, _ = corona(CoronaSpec(base=base, attachments=tuple(cycle(n) for _ in range(base.order))))
        assert dimensional_k(g) == 4

    def test_corona_dimension_equals_c_on_random_instances(self, rng):
        for _ in range(50):
            base = random_connected_graph(rng, rng.randint(2, 4))
            family = tuple(random_connected_graph(rng, rng.randint(2, 6)) for _ in range(base.order))
            g, _ = corona(CoronaSpec(base=base, attachments=family))
            assert dimensional_k(g) == c_of_family(family)


# == D_k 與生成集檢查 =======================================================

class TestGenerators:
    def test_d_k_of_complete_graph_is_everything(self):
        assert d_k_union(complete(4), 2) == frozenset(range(4))

    def test_d_k_of_path(self):
        # |D| = 3 只出現在距離 2 的頂點對
        assert d_k_union(path(4), 3) == frozenset(range(4))

    def test_d_k_misses_vertices(self):
        assert d_k_union(star(4), 2) == frozenset({1, 2, 3})

    def test_generator_accepts_whole_vertex_set(self):
        g = petersen()
        assert is_k_generator(g, range(g.order), dimensional_k(g))

    def test_generator_reports_first_deficient_pair(self):
        check = is_k_generator(path(4), [3], 2)
        assert not check.ok
        assert check.pair == (0, 1)
        assert check.hits == 1
        assert check.deficit == 1

    def test_path_end_resolves(self):
        assert is_k_generator(path(6), [0], 1).ok

    def test_middle_vertex_does_not_resolve(self):
        check = is_k_generator(path(3), [1], 1)
        assert not check
        assert check.pair == (0, 2)
        assert check.deficit == 1
