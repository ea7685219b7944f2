"""
區分集計算

D_G(x,y) = {z : d(x,z) ≠ d(y,z)}，以整數位元遮罩表示一列。
"""

from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

import numpy as np
from loguru import logger

from core.errors import SameVertex, TrivialGraph
from core.graph_core import Graph
from models.schemas import DistinctiveSet, GeneratorCheck, Pair, mask_to_vertices, vertices_to_mask


def _pack_rows(diff: np.ndarray) -> List[int]:
    """布林矩陣的每一列打包為整數位元遮罩（bit z 對應頂點 z）"""
    packed = np.packbits(diff, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


class PairTable:
    """
    圖中所有頂點對的區分集

    依字典序儲存 C(n,2) 列，並記錄最小列大小與達到最小值的頂點對。
    """

    def __init__(self, n: int, rows: Dict[Pair, int]):
        self.n = n
        self.rows = rows
        sizes = {pair: mask.bit_count() for pair, mask in rows.items()}
        self.min_size = min(sizes.values()) if sizes else 0
        self.argmin_pairs = [pair for pair, size in sizes.items() if size == self.min_size]

    @classmethod
    def build(cls, g: Graph) -> "PairTable":
        """
        由距離矩陣一次建立所有列

        Args:
            g: 連通圖

        Returns:
            PairTable: 區分集表
        """
        d = g.require_connected().d
        rows: Dict[Pair, int] = {}
        for x in range(g.order - 1):
            diff = d[x + 1:] != d[x]
            for offset, mask in enumerate(_pack_rows(diff)):
                rows[(x, x + 1 + offset)] = mask
        logger.debug(f"🔍 區分集表建立完成: n={g.order}, 列數={len(rows)}")
        return cls(g.order, rows)

    def row(self, x: int, y: int) -> int:
        if x > y:
            x, y = y, x
        return self.rows[(x, y)]

    def __iter__(self) -> Iterator[Tuple[Pair, int]]:
        return iter(self.rows.items())

    def __len__(self) -> int:
        return len(self.rows)

    def rows_of_size(self, size: int) -> List[Tuple[Pair, int]]:
        return [(pair, mask) for pair, mask in self.rows.items() if mask.bit_count() == size]


@lru_cache(maxsize=128)
def pair_table(g: Graph) -> PairTable:
    return PairTable.build(g)


def distinctive_set(g: Graph, x: int, y: int) -> DistinctiveSet:
    if x == y:
        raise SameVertex(f"頂點對兩端相同: {x}")
    d = g.require_connected().d
    mask = _pack_rows((d[x] != d[y])[np.newaxis, :])[0]
    return DistinctiveSet(pair=(min(x, y), max(x, y)), members=mask)


def nontrivial_distinctive_set(g: Graph, x: int, y: int) -> FrozenSet[int]:
    """D*_G(x,y) = D_G(x,y) - {x,y}"""
    members = distinctive_set(g, x, y).members & ~((1 << x) | (1 << y))
    return frozenset(mask_to_vertices(members))


def dimensional_k(g: Graph) -> int:
    """k' = min |D_G(x,y)|，即存在 k-度量基的最大 k"""
    if g.order < 2:
        raise TrivialGraph("dimensional_k 需要階數 ≥ 2 的圖")
    return pair_table(g).min_size


def closed_difference_mask(h: Graph, x: int, y: int) -> int:
    """(N(x) △ N(y)) ∪ {x,y} 的位元遮罩；不需要距離"""
    masks = h.neighbor_masks
    return (masks[x] ^ masks[y]) | (1 << x) | (1 << y)


def c_of_h(h: Graph) -> int:
    """C(H) = min |(N(x) △ N(y)) ∪ {x,y}|"""
    if h.order < 2:
        raise TrivialGraph("C(H) 需要階數 ≥ 2 的圖")
    return min(
        closed_difference_mask(h, x, y).bit_count()
        for x in range(h.order)
        for y in range(x + 1, h.order)
    )


def c_of_family(hs: Sequence[Graph]) -> int:
    if not hs:
        raise TrivialGraph("C(ℋ) 需要非空圖族")
    return min(c_of_h(h) for h in hs)


def d_k_union(g: Graph, k: int) -> FrozenSet[int]:
    """D_k(G)：所有大小恰為 k 的區分集之聯集"""
    union = 0
    for _, mask in pair_table(g).rows_of_size(k):
        union |= mask
    return frozenset(mask_to_vertices(union))


def is_k_generator(g: Graph, s: Iterable[int], k: int) -> GeneratorCheck:
    """
    檢查 S 是否為 k-度量生成集

    Args:
        g: 連通圖
        s: 候選頂點集合
        k: 重數

    Returns:
        GeneratorCheck: 成功，或字典序最小的不足頂點對及其缺額
    """
    if k < 1:
        raise ValueError(f"k 必須 ≥ 1: {k}")
    s_mask = vertices_to_mask(s)
    for pair, mask in pair_table(g):
        hits = (mask & s_mask).bit_count()
        if hits < k:
            return GeneratorCheck(ok=False, pair=pair, hits=hits, deficit=k - hits)
    return GeneratorCheck(ok=True)
