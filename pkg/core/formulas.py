"""
封閉公式、界限與適用條件

每個預測函式先檢查定理假設；假設不成立時回傳 Prediction.inapplicable，
從不在假設之外外推。需要子圖最佳值的預測會呼叫精確求解器。
"""

from typing import Callable, Dict, List, Optional, Tuple

from core.constructions import complement_family, complete, join, k1_diamond
from core.errors import OutOfRange
from core.graph_core import ACYCLIC, Graph
from core.metric_sets import c_of_family, c_of_h, d_k_union, dimensional_k
from core.solver import build_instance, dim_k, f_of_h_k, solve_exact_all
from models.schemas import BASIS_LIMIT, DEFAULT_NODE_BUDGET, CoronaSpec, Prediction, TheoremId

# JoinGeneratorByDegree 窮舉 V(H) 子集的階數上限
GENERATOR_ENUM_ORDER = 12

# 扇形圖與輪圖的小階數值（一般公式不涵蓋的情形）
FAN_SMALL: Dict[Tuple[int, int], int] = {
    (1, 1): 1, (2, 1): 2, (3, 1): 2, (6, 1): 3,
    (2, 2): 3, (3, 2): 4, (4, 2): 4, (5, 2): 4,
    (4, 3): 5, (5, 3): 5,
}

WHEEL_SMALL: Dict[Tuple[int, int], int] = {
    (3, 1): 3, (6, 1): 3, (4, 1): 2, (5, 1): 2,
    (3, 2): 4, (4, 2): 4, (5, 2): 4, (6, 2): 4,
    (5, 3): 5, (6, 3): 5,
    (5, 4): 6, (6, 4): 6,
}


# ========== 圖形判別 ==========

def is_path(h: Graph) -> bool:
    return h.is_connected() and h.size == h.order - 1 and h.max_degree <= 2


def is_cycle(h: Graph) -> bool:
    return h.order >= 3 and h.is_connected() and h.is_regular() and h.min_degree == 2


def all_twin(h: Graph) -> bool:
    """每個頂點都有雙胞胎"""
    return len(h.twin_vertices()) == h.order


def has_end_vertex_with_degree2_support(h: Graph) -> bool:
    for x in range(h.order):
        if h.degree(x) == 1 and h.degree(h.neighbors(x)[0]) == 2:
            return True
    return False


def _far_or_long_cycle(h: Graph) -> bool:
    """D(H) ≥ 6 或 H 為階數 ≥ 7 的圈"""
    if not h.is_connected():
        return False
    return h.diameter() >= 6 or (is_cycle(h) and h.order >= 7)


def _corona_reason(spec: CoronaSpec, connected_attachments: bool = True) -> Optional[str]:
    """冠積定理的共同假設；回傳不成立的原因，成立時回傳 None"""
    if len(spec.attachments) != spec.base.order:
        return f"附掛圖數量 {len(spec.attachments)} 與基底階數 {spec.base.order} 不符"
    if spec.base.order < 2:
        return "基底圖階數需 ≥ 2"
    if not spec.base.is_connected():
        return "基底圖不連通"
    for i, h in enumerate(spec.attachments):
        if h.order < 2:
            return f"H{i} 為平凡圖"
        if connected_attachments and not h.is_connected():
            return f"H{i} 不連通"
    return None


# ========== 扇形圖與輪圖 ==========

def fan_dim(n: int, k: int) -> int:
    """
    dim_k(F_{1,n})

    Args:
        n: 路徑階數
        k: 1, 2 或 3

    Returns:
        int: 公式值
    """
    if (n, k) in FAN_SMALL:
        return FAN_SMALL[(n, k)]
    if k == 1 and n >= 4:
        return (2 * n + 2) // 5
    if k == 2 and n >= 6:
        return -(-(n + 1) // 2)
    if k == 3 and n >= 6:
        return n - (n - 4) // 5
    raise OutOfRange(f"dim_{k}(F_{{1,{n}}}) 不在封閉公式範圍內")


def wheel_dim(n: int, k: int) -> int:
    """
    dim_k(W_{1,n})

    Args:
        n: 圈階數
        k: 1, 2, 3 或 4

    Returns:
        int: 公式值
    """
    if (n, k) in WHEEL_SMALL:
        return WHEEL_SMALL[(n, k)]
    if n >= 7:
        if k == 1:
            return (2 * n + 2) // 5
        if k == 2:
            return -(-n // 2)
        if k == 3:
            return n - n // 5
        if k == 4:
            return n
    raise OutOfRange(f"dim_{k}(W_{{1,{n}}}) 不在封閉公式範圍內")


def _family_prediction(theorem: TheoremId, formula: Callable[[int, int], int], n: int, k: int) -> Prediction:
    try:
        return Prediction.exact(theorem, formula(n, k))
    except OutOfRange as e:
        return Prediction.inapplicable(theorem, str(e))


def fan_prediction(n: int, k: int) -> Prediction:
    theorem = {1: TheoremId.FAN_DIM1, 2: TheoremId.FAN_DIM2, 3: TheoremId.FAN_DIM3}.get(k)
    if theorem is None:
        raise OutOfRange(f"扇形圖公式只涵蓋 k ∈ {{1,2,3}}: {k}")
    return _family_prediction(theorem, fan_dim, n, k)


def wheel_prediction(n: int, k: int) -> Prediction:
    theorem = {
        1: TheoremId.WHEEL_DIM1, 2: TheoremId.WHEEL_DIM2,
        3: TheoremId.WHEEL_DIM3, 4: TheoremId.WHEEL_DIM4,
    }.get(k)
    if theorem is None:
        raise OutOfRange(f"輪圖公式只涵蓋 k ∈ {{1,2,3,4}}: {k}")
    return _family_prediction(theorem, wheel_dim, n, k)


def wheel_rim_lower_bound(n: int, k: int) -> Prediction:
    """只用邊緣頂點滿足所有邊緣頂點對時，|S| ≥ k+2"""
    theorem = TheoremId.WHEEL_RIM_LOWER_BOUND
    if n < 7:
        return Prediction.inapplicable(theorem, f"需要圈階數 ≥ 7: {n}")
    if k not in (2, 3, 4):
        return Prediction.inapplicable(theorem, f"需要 k ∈ {{2,3,4}}: {k}")
    return Prediction.bounds(theorem, lower=k + 2)


def fan_rim_size(n: int, k: int) -> Prediction:
    """k ∈ {2,3}、n ≥ 6 時，F_{1,n} 的每個 k-度量基至少含 2k 個路徑頂點"""
    theorem = TheoremId.FAN_RIM_SIZE
    if n < 6:
        return Prediction.inapplicable(theorem, f"需要路徑階數 ≥ 6: {n}")
    if k not in (2, 3):
        return Prediction.inapplicable(theorem, f"需要 k ∈ {{2,3}}: {k}")
    return Prediction.bounds(theorem, lower=2 * k)


# ========== 聯圖 K_1+H ==========

def join_dimensional_k(h: Graph) -> int:
    """K_1+H 的 k' = min{C(H), n' - Δ(H) + 1}"""
    return min(c_of_h(h), h.order - h.max_degree + 1)


def join_dimensional_prediction(h: Graph) -> Prediction:
    if h.order < 2:
        return Prediction.inapplicable(TheoremId.JOIN_DIMENSIONAL_K, "H 為平凡圖")
    return Prediction.exact(TheoremId.JOIN_DIMENSIONAL_K, join_dimensional_k(h))


def join_below_attachment(h: Graph, k: Optional[int] = None,
                          node_budget: int = DEFAULT_NODE_BUDGET) -> Prediction:
    """
    K_1+H 與 H 的比較

    k 為 None 時預測 K_1+H 的維度上限為 H 的維度；
    否則預測 dim_k(K_1+H) ≥ dim_k(H)。
    """
    theorem = TheoremId.JOIN_BELOW_ATTACHMENT
    if h.order < 2 or not h.is_connected():
        return Prediction.inapplicable(theorem, "H 需為連通非平凡圖")
    if k is None:
        return Prediction.bounds(theorem, upper=dimensional_k(h))
    if k < 1 or k > join_dimensional_k(h):
        return Prediction.inapplicable(theorem, f"k={k} 超出 K_1+H 的範圍")
    return Prediction.bounds(theorem, lower=dim_k(h, k, node_budget))


def hub_in_every_basis(h: Graph) -> Prediction:
    """
    K_1+H 為 (n'-Δ+1) 維時，中心頂點屬於每個此重數的基

    預測值為「不含中心頂點的最佳基」的數量，即 0。
    """
    theorem = TheoremId.HUB_IN_EVERY_BASIS
    if h.order < 2:
        return Prediction.inapplicable(theorem, "H 為平凡圖")
    k = h.order - h.max_degree + 1
    if join_dimensional_k(h) != k:
        return Prediction.inapplicable(theorem, f"K_1+H 不是 {k} 維（C(H)={c_of_h(h)} 較小）")
    return Prediction.exact(theorem, 0, reason=f"K_1+H 為 {k} 維")


def hub_excluded(h: Graph, k: int) -> Prediction:
    """D(H) ≥ 6 或 H 為長圈時 f(H,k) = 0"""
    theorem = TheoremId.HUB_EXCLUDED
    if h.order < 2 or not _far_or_long_cycle(h):
        return Prediction.inapplicable(theorem, "需要 D(H) ≥ 6 或 H 為階數 ≥ 7 的圈")
    if k < 1 or k > join_dimensional_k(h):
        return Prediction.inapplicable(theorem, f"k={k} 超出 K_1+H 的範圍")
    return Prediction.exact(theorem, 0)


def join_three_dimensional(h: Graph) -> Prediction:
    """H 連通、n' ≥ 4、Δ(H) = n'-2 且無雙胞胎時，K_1+H 為 3 維"""
    theorem = TheoremId.JOIN_THREE_DIMENSIONAL
    if h.order < 4 or not h.is_connected():
        return Prediction.inapplicable(theorem, "需要連通且階數 ≥ 4")
    if h.max_degree != h.order - 2:
        return Prediction.inapplicable(theorem, f"Δ(H)={h.max_degree} ≠ n'-2={h.order - 2}")
    if h.twins():
        return Prediction.inapplicable(theorem, "H 含有雙胞胎頂點")
    return Prediction.exact(theorem, 3)


def join_basis_restriction(h: Graph, k: int) -> Prediction:
    """
    K_1+H 的每個 k-度量基 B，B∩V(H) 都是 H 的 k-度量生成集

    預測值為不滿足的基數量，即 0。
    """
    theorem = TheoremId.JOIN_BASIS_RESTRICTION
    if h.order < 2 or not h.is_connected():
        return Prediction.inapplicable(theorem, "H 需為連通非平凡圖")
    if k < 1 or k > join_dimensional_k(h):
        return Prediction.inapplicable(theorem, f"k={k} 超出 K_1+H 的範圍")
    return Prediction.exact(theorem, 0)


def hub_excluded_by_degree(h: Graph, k: int, node_budget: int = DEFAULT_NODE_BUDGET,
                           limit: int = BASIS_LIMIT) -> Prediction:
    """
    K_1+H 的每個 k-度量基都滿足 |S∩V(H)| ≥ k+Δ(H) 時，f(H,k) = 0

    假設以列舉全部最佳基確認；基的數量達到 limit 時視為無法確認。
    """
    theorem = TheoremId.HUB_EXCLUDED_BY_DEGREE
    if h.order < 2:
        return Prediction.inapplicable(theorem, "H 為平凡圖")
    if k < 1 or k > join_dimensional_k(h):
        return Prediction.inapplicable(theorem, f"k={k} 超出 K_1+H 的範圍")

    g, _ = join(complete(1), h)
    bases = solve_exact_all(build_instance(g, k), limit, node_budget)
    if len(bases) >= limit:
        return Prediction.inapplicable(theorem, f"最佳基達 {limit} 個上限，無法確認假設")
    need = k + h.max_degree
    smallest = min(sum(1 for v in basis if v != 0) for basis in bases)
    if smallest < need:
        return Prediction.inapplicable(theorem, f"存在 |S∩V(H)|={smallest} < k+Δ={need} 的基")
    return Prediction.exact(theorem, 0, reason=f"所有 {len(bases)} 個基都有 |S∩V(H)| ≥ {need}")


def join_generator_by_degree(h: Graph, k: int) -> Prediction:
    """
    S ⊆ V(H) 在 K_1+H 中滿足所有 H 內頂點對且 |S| ≥ k+Δ(H) 時，S 為 K_1+H 的 k-度量生成集

    以窮舉 V(H) 的子集檢查，預測值為反例數量，即 0。
    """
    theorem = TheoremId.JOIN_GENERATOR_BY_DEGREE
    if h.order < 2:
        return Prediction.inapplicable(theorem, "H 為平凡圖")
    if h.order > GENERATOR_ENUM_ORDER:
        return Prediction.inapplicable(theorem, f"n'={h.order} 超過窮舉上限 {GENERATOR_ENUM_ORDER}")
    if k < 1 or k > join_dimensional_k(h):
        return Prediction.inapplicable(theorem, f"k={k} 超出 K_1+H 的範圍")
    if k + h.max_degree > h.order:
        return Prediction.inapplicable(theorem, f"k+Δ={k + h.max_degree} > n'={h.order}")
    return Prediction.exact(theorem, 0)


# ========== 一般圖 ==========

def dim2_all_twins(g: Graph) -> Prediction:
    """dim_2(G) = n 若且唯若每個頂點都是雙胞胎"""
    theorem = TheoremId.DIM2_ALL_TWINS
    if g.order < 2 or not g.is_connected():
        return Prediction.inapplicable(theorem, "需要連通且階數 ≥ 2")
    if all_twin(g):
        return Prediction.exact(theorem, g.order, reason="每個頂點都是雙胞胎")
    return Prediction.bounds(theorem, upper=g.order - 1, reason="存在非雙胞胎頂點")


def dim_n_characterization(g: Graph) -> Prediction:
    """k = k' 時 dim_k(G) = n 若且唯若 V = D_k(G)"""
    theorem = TheoremId.DIM_N_CHARACTERIZATION
    if g.order < 2 or not g.is_connected():
        return Prediction.inapplicable(theorem, "需要連通且階數 ≥ 2")
    k = dimensional_k(g)
    if len(d_k_union(g, k)) == g.order:
        return Prediction.exact(theorem, g.order, reason=f"V = D_{k}(G)")
    return Prediction.bounds(theorem, upper=g.order - 1, reason=f"V ≠ D_{k}(G)")


# ========== 冠積維度 ==========

def corona_dimensional_value(spec: CoronaSpec) -> Prediction:
    """G⊙ℋ 為 C(ℋ) 維"""
    theorem = TheoremId.CORONA_DIMENSIONAL_VALUE
    reason = _corona_reason(spec, connected_attachments=False)
    if reason:
        return Prediction.inapplicable(theorem, reason)
    return Prediction.exact(theorem, c_of_family(spec.attachments))


def corona_within_attachment(spec: CoronaSpec) -> Prediction:
    """冠積的維度不超過各附掛圖維度的最小值"""
    theorem = TheoremId.CORONA_WITHIN_ATTACHMENT
    reason = _corona_reason(spec)
    if reason:
        return Prediction.inapplicable(theorem, reason)
    return Prediction.bounds(theorem, upper=min(dimensional_k(h) for h in spec.attachments))


def girth5_regular_2delta(spec: CoronaSpec) -> Prediction:
    """ℋ 皆為 δ-正則且圍長 ≥ 5 時，G⊙ℋ 為 2δ 維"""
    theorem = TheoremId.GIRTH5_REGULAR_2DELTA
    reason = _corona_reason(spec, connected_attachments=False)
    if reason:
        return Prediction.inapplicable(theorem, reason)

    degrees = set()
    for i, h in enumerate(spec.attachments):
        if not h.is_regular():
            return Prediction.inapplicable(theorem, f"H{i} 不是正則圖")
        girth = h.girth()
        if girth is not ACYCLIC and girth < 5:
            return Prediction.inapplicable(theorem, f"H{i} 圍長 {girth} < 5")
        degrees.add(h.min_degree)
    if len(degrees) != 1:
        return Prediction.inapplicable(theorem, f"附掛圖的正則度不一致: {sorted(degrees)}")
    delta = degrees.pop()
    if delta < 1:
        return Prediction.inapplicable(theorem, "附掛圖沒有邊")
    return Prediction.exact(theorem, 2 * delta, reason=f"δ={delta}")


def end_vertex_support_3(spec: CoronaSpec) -> Prediction:
    """ℋ 無雙胞胎且含有支撐頂點度數為 2 的端點時，G⊙ℋ 為 3 維"""
    theorem = TheoremId.END_VERTEX_SUPPORT_3
    reason = _corona_reason(spec)
    if reason:
        return Prediction.inapplicable(theorem, reason)
    if any(h.twins() for h in spec.attachments):
        return Prediction.inapplicable(theorem, "附掛圖含有雙胞胎頂點")
    if not any(has_end_vertex_with_degree2_support(h) for h in spec.attachments):
        return Prediction.inapplicable(theorem, "沒有支撐頂點度數為 2 的端點")
    return Prediction.exact(theorem, 3)


def corona_two_dimensional(spec: CoronaSpec) -> Prediction:
    """
    G⊙ℋ 為 2 維若且唯若某個 H_i 為 2 維

    以 1 / 0 表示是否為 2 維；連通的 H_i 為 2 維即 H_i 含雙胞胎。
    """
    theorem = TheoremId.CORONA_TWO_DIMENSIONAL
    reason = _corona_reason(spec)
    if reason:
        return Prediction.inapplicable(theorem, reason)
    if any(h.twins() for h in spec.attachments):
        return Prediction.exact(theorem, 1, reason="某個附掛圖含雙胞胎")
    return Prediction.exact(theorem, 0, reason="附掛圖皆無雙胞胎")


def corona_small_diameter(spec: CoronaSpec) -> Prediction:
    """所有 D(H_i) ≤ 2 時，G⊙ℋ 為 min k_i 維"""
    theorem = TheoremId.CORONA_SMALL_DIAMETER
    reason = _corona_reason(spec)
    if reason:
        return Prediction.inapplicable(theorem, reason)
    for i, h in enumerate(spec.attachments):
        if h.diameter() > 2:
            return Prediction.inapplicable(theorem, f"D(H{i}) = {h.diameter()} > 2")
    return Prediction.exact(theorem, min(dimensional_k(h) for h in spec.attachments))


# ========== 冠積 k-度量維度 ==========

def _valid_corona_k(spec: CoronaSpec, k: int) -> Optional[str]:
    if k < 1:
        return f"k 必須 ≥ 1: {k}"
    c = c_of_family(spec.attachments)
    if k > c:
        return f"k={k} 超過 C(ℋ)={c}"
    return None


def sandwich_bounds(spec: CoronaSpec, k: int, node_budget: int = DEFAULT_NODE_BUDGET) -> Prediction:
    """
    Σ dim_k(H_i) ≤ dim_k(G⊙ℋ) ≤ Σ|V_i|

    Args:
        spec: 冠積
        k: 1 ≤ k ≤ C(ℋ)
        node_budget: 子問題的節點預算

    Returns:
        Prediction: lower/upper 界限
    """
    theorem = TheoremId.SANDWICH_BOUNDS
    reason = _corona_reason(spec) or _valid_corona_k(spec, k)
    if reason:
        return Prediction.inapplicable(theorem, reason)
    lower = sum(dim_k(h, k, node_budget) for h in spec.attachments)
    upper = sum(spec.attachment_orders)
    return Prediction.bounds(theorem, lower=lower, upper=upper)


def upper_bound_tight(spec: CoronaSpec, node_budget: int = DEFAULT_NODE_BUDGET) -> Prediction:
    """k = C(ℋ) 且每個 dim_k(H_i) = |V_i| 時，dim_k(G⊙ℋ) = Σ|V_i|"""
    theorem = TheoremId.UPPER_BOUND_TIGHT
    reason = _corona_reason(spec)
    if reason:
        return Prediction.inapplicable(theorem, reason)
    k = c_of_family(spec.attachments)
    for i, h in enumerate(spec.attachments):
        if dim_k(h, k, node_budget) != h.order:
            return Prediction.inapplicable(theorem, f"dim_{k}(H{i}) < |V_{i}|")
    return Prediction.exact(theorem, sum(spec.attachment_orders), reason=f"k=C(ℋ)={k}")


def twin_dim2_equality(spec: CoronaSpec) -> Prediction:
    """dim_2(G⊙ℋ) = Σ|V_i| 若且唯若每個 H_i 都由雙胞胎組成"""
    theorem = TheoremId.TWIN_DIM2_EQUALITY
    reason = _corona_reason(spec)
    if reason:
        return Prediction.inapplicable(theorem, reason)
    total = sum(spec.attachment_orders)
    if all(all_twin(h) for h in spec.attachments):
        return Prediction.exact(theorem, total, reason="所有附掛圖皆由雙胞胎組成")
    return Prediction.bounds(theorem, upper=total - 1, reason="存在含非雙胞胎頂點的附掛圖")


def diam2_equality(spec: CoronaSpec, k: int, node_budget: int = DEFAULT_NODE_BUDGET) -> Prediction:
    """所有 D(H_i) ≤ 2 時 dim_k(G⊙ℋ) = Σ dim_k(H_i)"""
    theorem = TheoremId.DIAM2_EQUALITY
    reason = _corona_reason(spec)
    if reason:
        return Prediction.inapplicable(theorem, reason)
    for i, h in enumerate(spec.attachments):
        if h.diameter() > 2:
            return Prediction.inapplicable(theorem, f"D(H{i}) = {h.diameter()} > 2")
    k_max = min(dimensional_k(h) for h in spec.attachments)
    if k < 1 or k > k_max:
        return Prediction.inapplicable(theorem, f"k={k} 超出 1..{k_max}")
    return Prediction.exact(theorem, sum(dim_k(h, k, node_budget) for h in spec.attachments))


def k1h_upper_bound(spec: CoronaSpec, k: int, node_budget: int = DEFAULT_NODE_BUDGET) -> Prediction:
    """dim_k(G⊙ℋ) ≤ Σ (dim_k(K_1+H_i) - f(H_i,k))"""
    theorem = TheoremId.K1H_UPPER_BOUND
    reason = _corona_reason(spec, connected_attachments=False)
    if reason:
        return Prediction.inapplicable(theorem, reason)
    k_max = min(join_dimensional_k(h) for h in spec.attachments)
    if k < 1 or k > k_max:
        return Prediction.inapplicable(theorem, f"k={k} 超出 1..{k_max}")

    bound = 0
    for h in spec.attachments:
        g, _ = join(complete(1), h)
        bound += dim_k(g, k, node_budget) - f_of_h_k(h, k, node_budget)
    return Prediction.bounds(theorem, upper=bound)


def _join_sum(spec: CoronaSpec, k: int, node_budget: int) -> int:
    return sum(dim_k(g, k, node_budget) for g in k1_diamond(spec.attachments))


def _diam6_reason(spec: CoronaSpec, k: int) -> Optional[str]:
    reason = _corona_reason(spec) or _valid_corona_k(spec, k)
    if reason:
        return reason
    for i, h in enumerate(spec.attachments):
        if not _far_or_long_cycle(h):
            return f"H{i} 既非 D ≥ 6 也非階數 ≥ 7 的圈"
        if k > join_dimensional_k(h):
            return f"k={k} 超出 K_1+H{i} 的範圍"
    return None


def diam6_equality(spec: CoronaSpec, k: int, node_budget: int = DEFAULT_NODE_BUDGET) -> Prediction:
    """
    D(H_i) ≥ 6 或 H_i 為長圈時 dim_k(G⊙ℋ) = dim_k(G⊙ℋ̄) = Σ dim_k(K_1+H_i)

    同一個預測值同時適用於 ℋ 與補圖族 ℋ̄。
    """
    theorem = TheoremId.DIAM6_EQUALITY
    reason = _diam6_reason(spec, k)
    if reason:
        return Prediction.inapplicable(theorem, reason)
    return Prediction.exact(theorem, _join_sum(spec, k, node_budget))


def k1_diamond_equality(spec: CoronaSpec, k: int, node_budget: int = DEFAULT_NODE_BUDGET) -> Prediction:
    """與 diam6_equality 相同假設下，dim_k(G⊙(K_1◇ℋ)) 也等於 Σ dim_k(K_1+H_i)"""
    theorem = TheoremId.K1_DIAMOND_EQUALITY
    reason = _diam6_reason(spec, k)
    if reason:
        return Prediction.inapplicable(theorem, reason)
    return Prediction.exact(theorem, _join_sum(spec, k, node_budget))


def _path_term(n: int, k: int) -> Optional[int]:
    if k == 1 and n >= 7:
        return (2 * n + 2) // 5
    if k == 2 and n >= 6:
        return -(-(n + 1) // 2)
    if k == 3 and n >= 6:
        return n - (n - 4) // 5
    return None


def _cycle_term(n: int, k: int) -> Optional[int]:
    if n < 7:
        return None
    return {
        1: (2 * n + 2) // 5,
        2: -(-n // 2),
        3: n - n // 5,
        4: n,
    }.get(k)


def corona_paths_cycles_closed(spec: CoronaSpec, k: int) -> Prediction:
    """
    附掛圖全為路徑或全為長圈時的封閉和

    同一預測適用於 G⊙ℋ、G⊙ℋ̄ 與 G⊙(K_1◇ℋ)。
    """
    theorem = TheoremId.CORONA_PATHS_CYCLES
    reason = _corona_reason(spec)
    if reason:
        return Prediction.inapplicable(theorem, reason)

    if all(is_path(h) for h in spec.attachments):
        term, family = _path_term, "路徑"
    elif all(is_cycle(h) for h in spec.attachments):
        term, family = _cycle_term, "圈"
    else:
        return Prediction.inapplicable(theorem, "附掛圖族不是全為路徑或全為圈")

    values: List[Optional[int]] = [term(h.order, k) for h in spec.attachments]
    if any(v is None for v in values):
        return Prediction.inapplicable(theorem, f"k={k} 與{family}階數 {spec.attachment_orders} 不在公式範圍內")
    return Prediction.exact(theorem, sum(values), reason=f"附掛圖全為{family}")


def complemented(spec: CoronaSpec) -> CoronaSpec:
    """G⊙ℋ̄"""
    return CoronaSpec(base=spec.base, attachments=tuple(complement_family(spec.attachments)))


def diamond(spec: CoronaSpec) -> CoronaSpec:
    """G⊙(K_1◇ℋ)"""
    return CoronaSpec(base=spec.base, attachments=tuple(k1_diamond(spec.attachments)))
