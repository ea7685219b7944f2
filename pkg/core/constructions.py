"""
圖族建構：路徑、圈、完全圖、星、扇、輪、補圖、聯圖與冠積
"""

from typing import List, Sequence, Tuple

from core.errors import InvalidOrder
from core.graph_core import Graph
from models.schemas import CoronaLayout, CoronaSpec, JoinLayout


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidOrder(f"路徑 P_n 需要 n ≥ 1: {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidOrder(f"圈 C_n 需要 n ≥ 3: {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidOrder(f"完全圖 K_n 需要 n ≥ 1: {n}")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(n: int) -> Graph:
    """星圖：中心為頂點 0，另有 n-1 片葉子"""
    if n < 2:
        raise InvalidOrder(f"星圖 S_n 需要 n ≥ 2: {n}")
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def fan(n: int) -> Graph:
    """扇形圖 F_{1,n} = K_1 + P_n：中心為頂點 0，邊緣 1..n 依路徑順序"""
    if n < 1:
        raise InvalidOrder(f"扇形圖 F_n 需要 n ≥ 1: {n}")
    return _hub_graph(path(n))


def wheel(n: int) -> Graph:
    """輪圖 W_{1,n} = K_1 + C_n：中心為頂點 0，邊緣 1..n 依圈順序"""
    if n < 3:
        raise InvalidOrder(f"輪圖 W_n 需要 n ≥ 3: {n}")
    return _hub_graph(cycle(n))


def _hub_graph(rim: Graph) -> Graph:
    graph, _ = join(complete(1), rim)
    labels = ["u"] + [f"u{i}" for i in range(1, rim.order + 1)]
    return Graph(n=graph.n, adjacency=graph.adjacency, labels=tuple(labels))


def join(g: Graph, h: Graph) -> Tuple[Graph, JoinLayout]:
    """
    聯圖 G+H

    Args:
        g: 左側圖（編號在前）
        h: 右側圖（編號接續）

    Returns:
        Tuple[Graph, JoinLayout]: 聯圖與頂點編號
    """
    offset = g.order
    edges = list(g.edges())
    edges.extend((u + offset, v + offset) for u, v in h.edges())
    edges.extend((u, v + offset) for u in range(g.order) for v in range(h.order))

    labels = [f"g:{g.label(v)}" for v in range(g.order)]
    labels.extend(f"h:{h.label(v)}" for v in range(h.order))

    graph = Graph.from_edges(g.order + h.order, edges, labels=labels)
    return graph, JoinLayout(left=range(0, offset), right=range(offset, offset + h.order))


def corona(spec: CoronaSpec) -> Tuple[Graph, CoronaLayout]:
    """
    冠積 G⊙ℋ：第 i 個基底頂點與 H_i 的每個頂點相連

    Args:
        spec: 基底圖與附掛圖族

    Returns:
        Tuple[Graph, CoronaLayout]: 冠積圖與頂點編號
    """
    spec.validate()
    base = spec.base
    n = base.order

    edges = list(base.edges())
    labels = [f"v{i}" for i in range(n)]
    base_index = {i: i for i in range(n)}
    copy_index = {}
    block_starts = []

    offset = n
    for i, h in enumerate(spec.attachments):
        block_starts.append(offset)
        for v in range(h.order):
            copy_index[(i, v)] = offset + v
            labels.append(f"H{i}:{h.label(v)}")
            edges.append((i, offset + v))
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.order

    graph = Graph.from_edges(offset, edges, labels=labels)
    layout = CoronaLayout(
        base_index=base_index,
        copy_index=copy_index,
        block_starts=tuple(block_starts),
        block_orders=tuple(h.order for h in spec.attachments),
    )
    return graph, layout


def complement(g: Graph) -> Graph:
    masks = g.neighbor_masks
    edges = [
        (u, v)
        for u in range(g.order)
        for v in range(u + 1, g.order)
        if not masks[u] >> v & 1
    ]
    return Graph.from_edges(g.order, edges, labels=g.labels)


def complement_family(hs: Sequence[Graph]) -> List[Graph]:
    """ℋ̄：每個附掛圖取補圖"""
    return [complement(h) for h in hs]


def k1_diamond(hs: Sequence[Graph]) -> List[Graph]:
    """K_1◇ℋ：每個附掛圖加上一個中心頂點"""
    return [join(complete(1), h)[0] for h in hs]


def uniform_corona(base: Graph, h: Graph) -> CoronaSpec:
    """G⊙H：所有基底頂點附掛同一個圖"""
    return CoronaSpec(base=base, attachments=tuple(h for _ in range(base.order)))
