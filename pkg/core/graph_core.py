"""
不可變簡單圖與距離查詢
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union

import networkx as nx
import numpy as np

from core.errors import DisconnectedGraph, InvalidEdge, InvalidOrder

# 位元列的字組預算上限
MAX_ORDER = 4096

# 不可達頂點對的距離標記
UNREACHABLE = -1


class Acyclic(Enum):
    """無環圖（森林）的圍長標記"""
    ACYCLIC = "acyclic"

    def __repr__(self) -> str:
        return "Acyclic"


ACYCLIC = Acyclic.ACYCLIC


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """全點對跳數距離；UNREACHABLE 表示不可達"""
    n: int
    d: np.ndarray

    def __getitem__(self, pair: Tuple[int, int]) -> int:
        u, v = pair
        return int(self.d[u, v])

    def is_finite(self, u: int, v: int) -> bool:
        return self.d[u, v] != UNREACHABLE

    @property
    def connected(self) -> bool:
        return not bool((self.d == UNREACHABLE).any())

    def row(self, u: int) -> np.ndarray:
        return self.d[u]


@dataclass(frozen=True)
class Graph:
    """
    不可變簡單無向圖

    頂點為 0..n-1 的整數索引，鄰接串列遞增排序；
    兩圖相等當且僅當鄰接串列相同，labels 僅為附註資訊。
    """
    n: int
    adjacency: Tuple[Tuple[int, ...], ...]
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Tuple[int, int]],
        labels: Optional[Iterable[str]] = None,
    ) -> "Graph":
        """
        由邊集合建立圖

        Args:
            n: 頂點數
            edges: (u, v) 邊列表，順序不拘
            labels: 頂點名稱（可省略）

        Returns:
            Graph: 正規化後的圖
        """
        if n < 1 or n > MAX_ORDER:
            raise InvalidOrder(f"頂點數必須介於 1 與 {MAX_ORDER} 之間: {n}")

        neighbors: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidEdge(f"邊 ({u}, {v}) 超出頂點範圍 0..{n - 1}")
            if u == v:
                raise InvalidEdge(f"不允許自環: ({u}, {v})")
            if v in neighbors[u]:
                raise InvalidEdge(f"重複的邊: ({u}, {v})")
            neighbors[u].add(v)
            neighbors[v].add(u)

        label_tuple = tuple(labels) if labels is not None else None
        if label_tuple is not None and len(label_tuple) != n:
            raise InvalidOrder(f"標籤數量 {len(label_tuple)} 與頂點數 {n} 不符")

        return cls(
            n=n,
            adjacency=tuple(tuple(sorted(nb)) for nb in neighbors),
            labels=label_tuple,
        )

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> "Graph":
        """由 networkx 圖建立（節點依排序重新編號）"""
        nodes = sorted(nx_graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        edges = [(index[u], index[v]) for u, v in nx_graph.edges()]
        return cls.from_edges(len(nodes), edges, labels=[str(node) for node in nodes])

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    # 基本查詢

    @property
    def order(self) -> int:
        return self.n

    @property
    def size(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> List[int]:
        return [len(nb) for nb in self.adjacency]

    @property
    def max_degree(self) -> int:
        return max(self.degrees())

    @property
    def min_degree(self) -> int:
        return min(self.degrees())

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> Iterator[Tuple[int, int]]:
        for u, nb in enumerate(self.adjacency):
            for v in nb:
                if u < v:
                    yield (u, v)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def is_regular(self) -> bool:
        return len(set(self.degrees())) == 1

    @cached_property
    def neighbor_masks(self) -> Tuple[int, ...]:
        """每個頂點的開鄰域位元遮罩"""
        masks = []
        for nb in self.adjacency:
            mask = 0
            for v in nb:
                mask |= 1 << v
            masks.append(mask)
        return tuple(masks)

    # 距離與結構

    @cached_property
    def _distances(self) -> DistanceMatrix:
        d = np.full((self.n, self.n), UNREACHABLE, dtype=np.int32)
        for source, lengths in nx.all_pairs_shortest_path_length(self.to_networkx()):
            for target, length in lengths.items():
                d[source, target] = length
        d.setflags(write=False)
        return DistanceMatrix(n=self.n, d=d)

    def distances(self) -> DistanceMatrix:
        return self._distances

    def is_connected(self) -> bool:
        return nx.is_connected(self.to_networkx())

    def require_connected(self) -> DistanceMatrix:
        """回傳距離矩陣；不連通時拋出 DisconnectedGraph"""
        dist = self._distances
        if not dist.connected:
            raise DisconnectedGraph(f"圖不連通 (n={self.n})，無法計算距離相關指標")
        return dist

    def diameter(self) -> int:
        return int(self.require_connected().d.max())

    def girth(self) -> Union[int, Acyclic]:
        value = nx.girth(self.to_networkx())
        return ACYCLIC if value == float("inf") else int(value)

    def twins(self) -> List[Tuple[int, int]]:
        """所有 N(x)=N(y)（假孿生）或 N[x]=N[y]（真孿生）的頂點對"""
        masks = self.neighbor_masks
        pairs = []
        for x in range(self.n):
            for y in range(x + 1, self.n):
                if masks[x] == masks[y]:
                    pairs.append((x, y))
                elif masks[x] | (1 << x) == masks[y] | (1 << y):
                    pairs.append((x, y))
        return pairs

    def twin_vertices(self) -> List[int]:
        """至少屬於一組孿生對的頂點"""
        return sorted({v for pair in self.twins() for v in pair})

    def fingerprint(self) -> Dict[str, object]:
        """不做同構判定時用於比對的圖不變量"""
        girth = self.girth()
        return {
            "order": self.n,
            "size": self.size,
            "degree_sequence": sorted(self.degrees(), reverse=True),
            "girth": None if girth is ACYCLIC else girth,
            "diameter": self.diameter() if self.is_connected() else None,
        }


def distances(g: Graph) -> DistanceMatrix:
    return g.distances()


def is_connected(g: Graph) -> bool:
    return g.is_connected()


def diameter(g: Graph) -> int:
    return g.diameter()


def girth(g: Graph) -> Union[int, Acyclic]:
    return g.girth()


def twins(g: Graph) -> List[Tuple[int, int]]:
    return g.twins()
