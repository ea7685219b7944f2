"""
k-度量維度求解器

dim_k(G) 即集合多重覆蓋：找最小的 S 使每個區分集列 |S ∩ D(x,y)| ≥ k。
精確解以基數迭代加深 + 分支定界，貪婪解提供上界。
"""

from typing import Dict, Iterable, List, Optional, Tuple

from loguru import logger

from core.constructions import complete, join, wheel
from core.errors import Infeasible, KTooLarge, ResourceExhausted
from core.graph_core import Graph
from core.metric_sets import dimensional_k, pair_table
from models.schemas import (
    DEFAULT_NODE_BUDGET,
    BasisResult,
    MulticoverInstance,
    ProofKind,
    mask_to_vertices,
    vertices_to_mask,
)


def build_instance(
    g: Graph,
    k: int,
    forced: Optional[Iterable[int]] = None,
    excluded: Optional[Iterable[int]] = None,
) -> MulticoverInstance:
    """
    由區分集表建立多重覆蓋實例

    大小恰為 k 的列（排除後）必須整列選入，直接併入 forced。

    Args:
        g: 連通圖
        k: 重數，1 ≤ k ≤ k'
        forced: 必須選入的頂點
        excluded: 禁止選入的頂點

    Returns:
        MulticoverInstance: 求解器輸入
    """
    if k < 1:
        raise ValueError(f"k 必須 ≥ 1: {k}")
    k_max = dimensional_k(g)
    if k > k_max:
        raise KTooLarge(k, k_max)

    forced_mask = vertices_to_mask(forced or ())
    excluded_mask = vertices_to_mask(excluded or ())
    if forced_mask & excluded_mask:
        raise ValueError("forced 與 excluded 不可重疊")

    rows = tuple(pair_table(g))
    for pair, mask in rows:
        available = mask & ~excluded_mask
        count = available.bit_count()
        if count < k:
            raise Infeasible(f"頂點對 {pair} 排除後只剩 {count} 個區分頂點，少於 k={k}")
        if count == k:
            forced_mask |= available

    return MulticoverInstance(
        n=g.order,
        rows=rows,
        k=k,
        forced=forced_mask,
        excluded=excluded_mask,
    )


class MulticoverSolver:
    """集合多重覆蓋求解器（單執行緒、分支順序固定）"""

    def __init__(self, instance: MulticoverInstance, node_budget: int = DEFAULT_NODE_BUDGET):
        self.instance = instance
        self.node_budget = node_budget
        self.nodes_explored = 0
        self._prepare()

    def _prepare(self) -> None:
        inst = self.instance
        if inst.forced & inst.excluded:
            raise ValueError("forced 與 excluded 不可重疊")

        # 扣除 forced 後的殘餘列；相同遮罩只保留最大需求
        needs: Dict[int, int] = {}
        for pair, mask in inst.rows:
            available = mask & ~inst.excluded
            need = inst.k - (available & inst.forced).bit_count()
            if need <= 0:
                continue
            residual = available & ~inst.forced
            if residual.bit_count() < need:
                raise Infeasible(f"頂點對 {pair} 無法被覆蓋 {inst.k} 次")
            if needs.get(residual, 0) < need:
                needs[residual] = need

        # 若 A ⊆ B 且 need(A) ≥ need(B)，列 B 多餘
        ordered = sorted(needs.items(), key=lambda item: (item[0].bit_count(), -item[1], item[0]))
        kept: List[Tuple[int, int]] = []
        for mask, need in ordered:
            if any(sub & mask == sub and sub_need >= need for sub, sub_need in kept):
                continue
            kept.append((mask, need))

        self.row_masks = [mask for mask, _ in kept]
        self.row_needs = [need for _, need in kept]

        union = 0
        for mask in self.row_masks:
            union |= mask
        self.candidates = mask_to_vertices(union)
        self.columns = {
            v: [i for i, mask in enumerate(self.row_masks) if mask >> v & 1]
            for v in self.candidates
        }
        self.forced_count = inst.forced.bit_count()
        self._reset()

    def _reset(self) -> None:
        self._deficit = list(self.row_needs)
        self._chosen = 0
        self._banned = 0
        self._trail: List[List[int]] = []

    def _tick(self) -> None:
        self.nodes_explored += 1
        if self.nodes_explored > self.node_budget:
            raise ResourceExhausted(self.node_budget)

    def _take(self, v: int) -> None:
        self._chosen |= 1 << v
        touched = [i for i in self.columns[v] if self._deficit[i] > 0]
        for i in touched:
            self._deficit[i] -= 1
        self._trail.append(touched)

    def _untake(self, v: int) -> None:
        self._chosen &= ~(1 << v)
        for i in self._trail.pop():
            self._deficit[i] += 1

    def _hits(self, free: int) -> Dict[int, int]:
        """每個可選頂點仍能減少的缺額列數"""
        deficit = self._deficit
        return {
            v: sum(1 for i in self.columns[v] if deficit[i] > 0)
            for v in self.candidates
            if free >> v & 1
        }

    def lower_bound(self) -> int:
        """互斥列裝箱下界：兩兩不相交的列各自需要獨立的頂點"""
        used = 0
        bound = 0
        rows = sorted(zip(self.row_masks, self.row_needs), key=lambda item: (item[0].bit_count(), -item[1]))
        for mask, need in rows:
            if mask & used == 0:
                used |= mask
                bound += need
        if self.row_needs:
            bound = max(bound, max(self.row_needs))
        return self.forced_count + bound

    def solve_greedy(self) -> BasisResult:
        """每次加入覆蓋最多單位缺額的頂點，同分取最小編號"""
        self._reset()
        while any(self._deficit):
            hits = self._hits(~self._chosen)
            best_v, best_hits = None, 0
            for v, h in hits.items():
                if h > best_hits:
                    best_v, best_hits = v, h
            if best_v is None:
                raise Infeasible("貪婪法無法滿足所有列")
            self._take(best_v)

        witness = self.instance.forced | self._chosen
        return BasisResult(
            k=self.instance.k,
            dim=witness.bit_count(),
            witness=tuple(mask_to_vertices(witness)),
            nodes_explored=0,
            proof=ProofKind.GREEDY_UPPER_BOUND_ONLY,
        )

    def _dfs(self, budget: int) -> bool:
        self._tick()
        deficit = self._deficit
        masks = self.row_masks
        free = ~(self._chosen | self._banned)

        total = 0
        max_deficit = 0
        branch_row = -1
        branch_slack = 0
        for i, d in enumerate(deficit):
            if d == 0:
                continue
            count = (masks[i] & free).bit_count()
            if count < d:
                return False
            total += d
            if d > max_deficit:
                max_deficit = d
            slack = count - d
            if branch_row < 0 or slack < branch_slack or (slack == branch_slack and d > deficit[branch_row]):
                branch_row, branch_slack = i, slack

        if total == 0:
            return True
        if max_deficit > budget:
            return False

        hits = self._hits(free)
        if max(hits.values()) * budget < total:
            return False

        order = sorted(mask_to_vertices(masks[branch_row] & free), key=lambda v: (-hits[v], v))
        banned_before = self._banned
        for v in order:
            self._take(v)
            if self._dfs(budget - 1):
                return True
            self._untake(v)
            self._banned |= 1 << v
        self._banned = banned_before
        return False

    def solve_exact(self, canonical: bool = False) -> BasisResult:
        """
        精確求解 dim_k

        Args:
            canonical: 為 True 時回傳字典序最小的最佳解

        Returns:
            BasisResult: proof = Exact
        """
        greedy = self.solve_greedy()
        upper = greedy.dim
        lower = self.lower_bound()
        logger.debug(f"🔍 k={self.instance.k} 初始界限: 下界={lower}, 貪婪上界={upper}, forced={self.forced_count}")

        witness_mask = vertices_to_mask(greedy.witness)
        for t in range(lower, upper):
            self._reset()
            logger.debug(f"🔍 嘗試基數 t={t}（已探索 {self.nodes_explored:,} 節點）")
            if self._dfs(t - self.forced_count):
                witness_mask = self.instance.forced | self._chosen
                break

        dim = witness_mask.bit_count()
        witness = tuple(mask_to_vertices(witness_mask))
        if canonical:
            witness = self.enumerate_optimal(dim, limit=1)[0]

        logger.info(f"✅ dim_{self.instance.k} = {dim}（探索 {self.nodes_explored:,} 節點）")
        return BasisResult(
            k=self.instance.k,
            dim=dim,
            witness=witness,
            nodes_explored=self.nodes_explored,
            proof=ProofKind.EXACT,
        )

    def enumerate_optimal(self, dim: int, limit: int) -> List[Tuple[int, ...]]:
        """
        依字典序列舉大小為 dim 的解

        Args:
            dim: 已證明的最佳基數
            limit: 最多回傳幾個

        Returns:
            List[Tuple[int, ...]]: 遞增頂點序列
        """
        if limit < 1:
            raise ValueError(f"limit 必須 ≥ 1: {limit}")
        self._reset()
        candidates = self.candidates
        suffix = [0] * (len(candidates) + 1)
        for j in range(len(candidates) - 1, -1, -1):
            suffix[j] = suffix[j + 1] | (1 << candidates[j])
        results: List[Tuple[int, ...]] = []

        def walk(j: int, left: int) -> None:
            self._tick()
            rest = suffix[j]
            total = 0
            for i, d in enumerate(self._deficit):
                if d == 0:
                    continue
                if d > left or (self.row_masks[i] & rest).bit_count() < d:
                    return
                total += d
            if total == 0:
                if left == 0:
                    results.append(tuple(mask_to_vertices(self.instance.forced | self._chosen)))
                return
            if j == len(candidates):
                return

            v = candidates[j]
            self._take(v)
            walk(j + 1, left - 1)
            self._untake(v)
            if len(results) < limit:
                walk(j + 1, left)

        walk(0, dim - self.forced_count)
        return results[:limit]


def solve_exact(inst: MulticoverInstance, node_budget: int = DEFAULT_NODE_BUDGET,
                canonical: bool = True) -> BasisResult:
    """見證為字典序最小的最佳解，與 solve_exact_all(inst, 1)[0] 相同；只需要值時傳 canonical=False"""
    return MulticoverSolver(inst, node_budget).solve_exact(canonical=canonical)


def solve_greedy(inst: MulticoverInstance) -> BasisResult:
    return MulticoverSolver(inst).solve_greedy()


def solve_exact_all(inst: MulticoverInstance, limit: int,
                    node_budget: int = DEFAULT_NODE_BUDGET) -> List[Tuple[int, ...]]:
    """最多 limit 個最佳解，字典序"""
    solver = MulticoverSolver(inst, node_budget)
    result = solver.solve_exact()
    return solver.enumerate_optimal(result.dim, limit)


def dim_k(g: Graph, k: int, node_budget: int = DEFAULT_NODE_BUDGET) -> int:
    return solve_exact(build_instance(g, k), node_budget, canonical=False).dim


def f_of_h_k(h: Graph, k: int, node_budget: int = DEFAULT_NODE_BUDGET) -> int:
    """
    f(H,k)：K_1+H 是否存在包含中心頂點的 k-度量基

    以強制選入中心頂點重新求解，比較兩次的最佳值。
    """
    g, _ = join(complete(1), h)
    free = solve_exact(build_instance(g, k), node_budget, canonical=False).dim
    with_hub = solve_exact(build_instance(g, k, forced=[0]), node_budget, canonical=False).dim
    return 1 if with_hub == free else 0


def rim_instance(n: int, k: int) -> MulticoverInstance:
    """
    W_{1,n} 只保留邊緣頂點對的列，並排除中心頂點

    最佳值即為滿足所有邊緣頂點對的最小邊緣子集。
    """
    g = wheel(n)
    hub = 1 << 0
    rows = tuple((pair, mask & ~hub) for pair, mask in pair_table(g) if pair[0] != 0)
    forced = 0
    for pair, mask in rows:
        if mask.bit_count() < k:
            raise Infeasible(f"邊緣頂點對 {pair} 只有 {mask.bit_count()} 個區分頂點，少於 k={k}")
        if mask.bit_count() == k:
            forced |= mask
    return MulticoverInstance(n=g.order, rows=rows, k=k, forced=forced, excluded=hub)


def coverage_audit(g: Graph, s: Iterable[int], k: int) -> List[Dict[str, object]]:
    """逐對列出 |S ∩ D(x,y)| 與是否達到 k"""
    s_mask = vertices_to_mask(s)
    audit = []
    for pair, mask in pair_table(g):
        hits = (mask & s_mask).bit_count()
        audit.append({"pair": list(pair), "hits": hits, "required": k, "ok": hits >= k})
    return audit
