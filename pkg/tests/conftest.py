"""
共用測試工具：暴力法 oracle 與可重現的隨機圖
"""

import random
from collections import deque
from itertools import combinations
from typing import List, Optional, Sequence, Set, Tuple

import pytest

from core.graph_core import Graph


# -- 暴力法 oracle -------------------------------------------------------------

def bfs_distances(g: Graph) -> List[List[Optional[int]]]:
    """逐點 BFS；不可達為 None"""
    table = []
    for source in range(g.order):
        dist: List[Optional[int]] = [None] * g.order
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if dist[v] is None:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        table.append(dist)
    return table


def brute_distinctive(g: Graph, x: int, y: int) -> Set[int]:
    d = bfs_distances(g)
    return {z for z in range(g.order) if d[x][z] != d[y][z]}


def brute_dimensional_k(g: Graph) -> int:
    d = bfs_distances(g)
    return min(
        sum(1 for z in range(g.order) if d[x][z] != d[y][z])
        for x, y in combinations(range(g.order), 2)
    )


def brute_is_generator(g: Graph, s: Sequence[int], k: int) -> bool:
    d = bfs_distances(g)
    return all(
        sum(1 for z in s if d[x][z] != d[y][z]) >= k
        for x, y in combinations(range(g.order), 2)
    )


def brute_dim_k(g: Graph, k: int) -> int:
    """依基數遞增列舉子集，第一個 k-度量生成集的大小"""
    d = bfs_distances(g)
    pairs = list(combinations(range(g.order), 2))
    rows = [{z for z in range(g.order) if d[x][z] != d[y][z]} for x, y in pairs]
    for size in range(1, g.order + 1):
        for subset in combinations(range(g.order), size):
            chosen = set(subset)
            if all(len(row & chosen) >= k for row in rows):
                return size
    raise AssertionError(f"k={k} 無解")


def brute_optimal_bases(g: Graph, k: int) -> List[Tuple[int, ...]]:
    """所有最佳基，字典序"""
    size = brute_dim_k(g, k)
    return [s for s in combinations(range(g.order), size) if brute_is_generator(g, s, k)]


# -- 隨機圖 -------------------------------------------------------------------

def random_connected_graph(rng: random.Random, n: int, p: float = 0.35) -> Graph:
    """隨機生成樹加上機率 p 的額外邊"""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u, v in combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < p:
            edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)
