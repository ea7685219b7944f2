"""
圖族建構

    - P/C/K/S/F/W 的階數、邊數與非法階數
    - 聯圖與冠積的頂點編號規則
    - 補圖、補圖族與 K_1◇ℋ
"""

import pytest

from core.constructions import (
    complement,
    complement_family,
    complete,
    corona,
    cycle,
    fan,
    join,
    k1_diamond,
    path,
    petersen,
    star,
    uniform_corona,
    wheel,
)
from core.errors import InvalidFamily, InvalidOrder
from models.schemas import CoronaSpec


class TestFamilies:
    @pytest.mark.parametrize("g, order, size", [
        (path(1), 1, 0),
        (path(5), 5, 4),
        (cycle(7), 7, 7),
        (complete(5), 5, 10),
        (star(5), 5, 4),
        (fan(6), 7, 11),
        (wheel(9), 10, 18),
        (petersen(), 10, 15),
    ])
    def test_order_and_size(self, g, order, size):
        assert g.order == order
        assert g.size == size

    @pytest.mark.parametrize("build, n", [
        (path, 0), (cycle, 2), (complete, 0), (star, 1), (fan, 0), (wheel, 2),
    ])
    def test_invalid_order(self, build, n):
        with pytest.raises(InvalidOrder):
            build(n)

    def test_fan_hub_is_vertex_zero(self):
        g = fan(5)
        assert g.degree(0) == 5
        assert g.label(0) == "u"
        assert g.label(3) == "u3"
        # 邊緣依路徑順序
        assert g.has_edge(1, 2) and g.has_edge(4, 5) and not g.has_edge(1, 5)

    def test_wheel_rim_is_cycle(self):
        g = wheel(6)
        assert g.has_edge(1, 6)
        assert all(g.degree(v) == 3 for v in range(1, 7))


class TestJoin:
    def test_join_layout(self):
        g, layout = join(complete(2), path(3))
        assert g.order == 5
        assert list(layout.left) == [0, 1]
        assert list(layout.right) == [2, 3, 4]
        # 1 + 2 + 2*3
        assert g.size == 9

    def test_k1_plus_cycle_is_wheel(self):
        g, _ = join(complete(1), cycle(8))
        assert g == wheel(8)


class TestCorona:
    def test_layout_base_first_then_blocks(self):
        spec = CoronaSpec(base=path(2), attachments=(path(3), cycle(4)))
        g, layout = corona(spec)
        assert g.order == 2 + 3 + 4
        assert list(layout.base_vertices) == [0, 1]
        assert list(layout.copy_block(0)) == [2, 3, 4]
        assert list(layout.copy_block(1)) == [5, 6, 7, 8]
        assert layout.copy_index[(1, 0)] == 5

    def test_each_base_vertex_joined_to_its_copy(self):
        spec = CoronaSpec(base=path(2), attachments=(path(3), cycle(4)))
        g, layout = corona(spec)
        for v in layout.copy_block(0):
            assert g.has_edge(0, v) and not g.has_edge(1, v)
        for v in layout.copy_block(1):
            assert g.has_edge(1, v) and not g.has_edge(0, v)
        # P2 + P3 + C4 + 3 + 4
        assert g.size == 1 + 2 + 4 + 3 + 4

    @pytest.mark.parametrize("base, family", [
        (path(3), (star(4), cycle(5), complete(3))),
        (cycle(4), (petersen(), path(2), fan(4), wheel(5))),
        (complete(2), (complete(1), path(6))),
    ])
    def test_edge_count(self, base, family):
        g, _ = corona(CoronaSpec(base=base, attachments=family))
        assert g.size == base.size + sum(h.size + h.order for h in family)
        assert g.order == base.order + sum(h.order for h in family)

    def test_family_size_must_match_base(self):
        with pytest.raises(InvalidFamily):
            corona(CoronaSpec(base=path(3), attachments=(path(2), path(2))))

    def test_uniform_corona(self):
        spec = uniform_corona(cycle(3), complete(2))
        g, _ = corona(spec)
        assert g.order == 9
        assert spec.attachment_orders == [2, 2, 2]


class TestComplement:
    def test_complement_of_c5_is_c5(self):
        assert complement(cycle(5)).size == 5
        assert complement(cycle(5)).is_regular()

    def test_complement_is_involution(self):
        g = petersen()
        assert complement(complement(g)) == g

    def test_complement_family(self):
        family = complement_family([complete(3), path(4)])
        assert family[0].size == 0
        assert family[1].size == 3

    def test_k1_diamond(self):
        family = k1_diamond([path(4), cycle(5)])
        assert family[0] == fan(4)
        assert family[1] == wheel(5)
