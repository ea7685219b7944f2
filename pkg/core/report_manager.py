"""
定理檢驗管理器

將 (定理, 實例) 組合交給 formulas 取得預測、交給求解器取得實際值，
比對後產生 TheoremReport，並負責 JSON / CSV / 文字輸出。
"""

import csv
import io
import itertools
import json
import random
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from jinja2 import Environment, FileSystemLoader
from loguru import logger

from core import formulas
from core.constructions import complete, corona, fan, join, wheel
from core.errors import Infeasible, KTooLarge, ParseError, ResourceExhausted
from core.family_parser import FamilyParser
from core.graph_core import Graph
from core.metric_sets import c_of_family, dimensional_k, is_k_generator, pair_table
from core.solver import build_instance, dim_k, f_of_h_k, rim_instance, solve_exact, solve_exact_all
from models.schemas import (
    BASIS_LIMIT,
    DEFAULT_NODE_BUDGET,
    CoronaSpec,
    Prediction,
    TheoremCase,
    TheoremId,
    TheoremReport,
    Verdict,
    vertices_to_mask,
)

SCHEMA_VERSION = 1
TEMPLATES_DIR = Path(__file__).resolve().parent.parent / "templates"

REPORT_COLUMNS = [
    "theorem", "instance", "k", "applicable", "reason",
    "predicted_lower", "predicted_upper", "observed", "verdict", "detail",
]

RANDOM_BASES = ["P2", "P3", "C3", "P4", "C4", "S4"]
# (圖族, 最小階數, 最大階數)，階數皆 ≤ 6
RANDOM_ATTACHMENTS = [("P", 2, 6), ("C", 3, 6), ("K", 2, 5), ("S", 3, 6), ("F", 2, 5), ("W", 3, 5)]

# 依實例型態分類
ORDER_THEOREMS = {
    TheoremId.FAN_DIM1: ("fan", 1),
    TheoremId.FAN_DIM2: ("fan", 2),
    TheoremId.FAN_DIM3: ("fan", 3),
    TheoremId.WHEEL_DIM1: ("wheel", 1),
    TheoremId.WHEEL_DIM2: ("wheel", 2),
    TheoremId.WHEEL_DIM3: ("wheel", 3),
    TheoremId.WHEEL_DIM4: ("wheel", 4),
    TheoremId.WHEEL_RIM_LOWER_BOUND: ("rim", None),
    TheoremId.FAN_RIM_SIZE: ("fan_rim", None),
}

# 依 k 展開的階數定理與預設 k 範圍
ORDER_K_RANGES = {
    TheoremId.WHEEL_RIM_LOWER_BOUND: range(2, 5),
    TheoremId.FAN_RIM_SIZE: range(2, 4),
}

GRAPH_THEOREMS = {
    TheoremId.JOIN_DIMENSIONAL_K,
    TheoremId.JOIN_BELOW_ATTACHMENT,
    TheoremId.HUB_IN_EVERY_BASIS,
    TheoremId.HUB_EXCLUDED,
    TheoremId.DIM2_ALL_TWINS,
    TheoremId.DIM_N_CHARACTERIZATION,
    TheoremId.JOIN_THREE_DIMENSIONAL,
    TheoremId.JOIN_BASIS_RESTRICTION,
    TheoremId.HUB_EXCLUDED_BY_DEGREE,
    TheoremId.JOIN_GENERATOR_BY_DEGREE,
}

# 對 K_1+H 每個有效 k 檢驗的單圖定理
GRAPH_K_THEOREMS = {
    TheoremId.HUB_EXCLUDED,
    TheoremId.JOIN_BASIS_RESTRICTION,
    TheoremId.HUB_EXCLUDED_BY_DEGREE,
    TheoremId.JOIN_GENERATOR_BY_DEGREE,
}

# 需要 k 的冠積定理
CORONA_K_THEOREMS = {
    TheoremId.SANDWICH_BOUNDS,
    TheoremId.DIAM2_EQUALITY,
    TheoremId.K1H_UPPER_BOUND,
    TheoremId.DIAM6_EQUALITY,
    TheoremId.K1_DIAMOND_EQUALITY,
    TheoremId.CORONA_PATHS_CYCLES,
}

Observations = Dict[str, int]
Evaluation = Tuple[Prediction, Callable[[], Observations]]


class ReportManager:
    """定理檢驗與報表輸出"""

    def __init__(self, node_budget: int = DEFAULT_NODE_BUDGET, threads: int = 1):
        self.node_budget = node_budget
        self.threads = threads
        self.parser = FamilyParser()
        self.templates = Environment(
            loader=FileSystemLoader(str(TEMPLATES_DIR)),
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )

    # ========== 單一實例 ==========

    def evaluate(self, case: TheoremCase) -> TheoremReport:
        """
        檢驗單一 (定理, 實例)

        Args:
            case: 定理與實例描述

        Returns:
            TheoremReport: 含判定結果；超出節點預算時為 Skipped
        """
        report = TheoremReport(
            theorem=case.theorem,
            instance=case.label,
            k=self._report_k(case),
            applicable=False,
            reason="",
        )
        try:
            prediction, observe = self._evaluation(case)
        except ResourceExhausted as e:
            return self._skipped(case, report, e)
        except (KTooLarge, Infeasible) as e:
            report.reason = str(e)
            report.verdict = Verdict.INAPPLICABLE
            return report

        report.applicable = prediction.applicable
        report.reason = prediction.reason
        if not prediction.applicable:
            report.verdict = Verdict.INAPPLICABLE
            return report

        report.predicted_lower = prediction.lower
        report.predicted_upper = prediction.upper
        try:
            observations = observe()
        except ResourceExhausted as e:
            return self._skipped(case, report, e)
        except (KTooLarge, Infeasible) as e:
            # 假設成立時 k 一定有效，實例本身與預測矛盾
            report.verdict = Verdict.VIOLATED
            report.detail = str(e)
            logger.error(f"❌ {case.theorem.value} {case.label} k={report.k}: {e}")
            return report

        report.observed = next(iter(observations.values()))
        report.detail = ", ".join(f"{name}={value}" for name, value in observations.items())
        if all(prediction.holds(value) for value in observations.values()):
            report.verdict = Verdict.CONFIRMED if prediction.is_equality else Verdict.BOUND_HELD
            logger.info(f"✅ {case.theorem.value} {case.label} k={report.k}: {report.detail}")
        else:
            report.verdict = Verdict.VIOLATED
            logger.error(
                f"❌ {case.theorem.value} {case.label} k={report.k}: "
                f"預測 [{prediction.lower}, {prediction.upper}]，實際 {report.detail}"
            )
        return report

    @staticmethod
    def _skipped(case: TheoremCase, report: TheoremReport, error: ResourceExhausted) -> TheoremReport:
        logger.warning(f"⚠️ {case.theorem.value} {case.label} k={report.k}: {error}，略過")
        report.verdict = Verdict.SKIPPED
        report.detail = str(error)
        return report

    def _report_k(self, case: TheoremCase) -> Optional[int]:
        if case.k is not None:
            return case.k
        if case.theorem in ORDER_THEOREMS:
            return ORDER_THEOREMS[case.theorem][1]
        if case.theorem in (TheoremId.TWIN_DIM2_EQUALITY, TheoremId.DIM2_ALL_TWINS):
            return 2
        return None

    def _spec(self, case: TheoremCase) -> CoronaSpec:
        if case.base_expr is None or case.attach_expr is None:
            raise ParseError(f"{case.theorem.value} 需要 --base 與 --attach")
        return self.parser.parse_corona_spec(case.base_expr, case.attach_expr)

    def _graph(self, case: TheoremCase) -> Graph:
        if case.graph_expr is None:
            raise ParseError(f"{case.theorem.value} 需要 --graph")
        return self.parser.parse(case.graph_expr)

    def _corona_dim(self, spec: CoronaSpec, k: int) -> int:
        graph, _ = corona(spec)
        return dim_k(graph, k, self.node_budget)

    def _evaluation(self, case: TheoremCase) -> Evaluation:
        """回傳預測，以及計算實際值的延遲函式（僅在適用時呼叫）"""
        theorem, k, budget = case.theorem, case.k, self.node_budget

        if theorem in ORDER_THEOREMS:
            family, fixed_k = ORDER_THEOREMS[theorem]
            n = case.n
            if n is None:
                raise ParseError(f"{theorem.value} 需要 --n")
            if theorem in ORDER_K_RANGES and k is None:
                raise ParseError(f"{theorem.value} 需要 k")
            if family == "fan":
                return formulas.fan_prediction(n, fixed_k), lambda: {"dim_k": dim_k(fan(n), fixed_k, budget)}
            if family == "wheel":
                return formulas.wheel_prediction(n, fixed_k), lambda: {"dim_k": dim_k(wheel(n), fixed_k, budget)}
            if family == "fan_rim":
                return formulas.fan_rim_size(n, k), lambda: self._fewest_rim_vertices(n, k)
            return (
                formulas.wheel_rim_lower_bound(n, k),
                lambda: {"rim_minimum": solve_exact(rim_instance(n, k), budget, canonical=False).dim},
            )

        if theorem in GRAPH_THEOREMS:
            g = self._graph(case)
            if theorem in GRAPH_K_THEOREMS and k is None:
                raise ParseError(f"{theorem.value} 需要 k")
            hub_graph = lambda: join(complete(1), g)[0]
            if theorem is TheoremId.JOIN_DIMENSIONAL_K:
                return formulas.join_dimensional_prediction(g), lambda: {"dimensional_k": dimensional_k(hub_graph())}
            if theorem is TheoremId.JOIN_BELOW_ATTACHMENT:
                if k is None:
                    return formulas.join_below_attachment(g), lambda: {"dimensional_k": dimensional_k(hub_graph())}
                return (
                    formulas.join_below_attachment(g, k, budget),
                    lambda: {"dim_k": dim_k(hub_graph(), k, budget)},
                )
            if theorem is TheoremId.HUB_IN_EVERY_BASIS:
                return formulas.hub_in_every_basis(g), lambda: self._bases_without_hub(g)
            if theorem is TheoremId.HUB_EXCLUDED:
                return formulas.hub_excluded(g, k), lambda: {"f": f_of_h_k(g, k, budget)}
            if theorem is TheoremId.HUB_EXCLUDED_BY_DEGREE:
                return formulas.hub_excluded_by_degree(g, k, budget), lambda: {"f": f_of_h_k(g, k, budget)}
            if theorem is TheoremId.JOIN_BASIS_RESTRICTION:
                return formulas.join_basis_restriction(g, k), lambda: self._restrictions_not_generating(g, k)
            if theorem is TheoremId.JOIN_GENERATOR_BY_DEGREE:
                return formulas.join_generator_by_degree(g, k), lambda: self._degree_generator_failures(g, k)
            if theorem is TheoremId.JOIN_THREE_DIMENSIONAL:
                return formulas.join_three_dimensional(g), lambda: {"dimensional_k": dimensional_k(hub_graph())}
            if theorem is TheoremId.DIM2_ALL_TWINS:
                return formulas.dim2_all_twins(g), lambda: {"dim_k": dim_k(g, 2, budget)}
            return (
                formulas.dim_n_characterization(g),
                lambda: {"dim_k": dim_k(g, dimensional_k(g), budget)},
            )

        spec = self._spec(case)
        dimensionality = lambda: {"dimensional_k": dimensional_k(corona(spec)[0])}
        if theorem is TheoremId.CORONA_DIMENSIONAL_VALUE:
            return formulas.corona_dimensional_value(spec), dimensionality
        if theorem is TheoremId.CORONA_WITHIN_ATTACHMENT:
            return formulas.corona_within_attachment(spec), dimensionality
        if theorem is TheoremId.GIRTH5_REGULAR_2DELTA:
            return formulas.girth5_regular_2delta(spec), dimensionality
        if theorem is TheoremId.END_VERTEX_SUPPORT_3:
            return formulas.end_vertex_support_3(spec), dimensionality
        if theorem is TheoremId.CORONA_SMALL_DIAMETER:
            return formulas.corona_small_diameter(spec), dimensionality
        if theorem is TheoremId.CORONA_TWO_DIMENSIONAL:
            return formulas.corona_two_dimensional(spec), lambda: {
                "two_dimensional": int(dimensional_k(corona(spec)[0]) == 2),
            }
        if theorem is TheoremId.UPPER_BOUND_TIGHT:
            prediction = formulas.upper_bound_tight(spec, budget)
            return prediction, lambda: {"dim_k": self._corona_dim(spec, c_of_family(spec.attachments))}
        if theorem is TheoremId.TWIN_DIM2_EQUALITY:
            return formulas.twin_dim2_equality(spec), lambda: {"dim_k": self._corona_dim(spec, 2)}

        if k is None:
            raise ParseError(f"{theorem.value} 需要 k")
        plain = lambda: {"dim_k": self._corona_dim(spec, k)}
        if theorem is TheoremId.SANDWICH_BOUNDS:
            return formulas.sandwich_bounds(spec, k, budget), plain
        if theorem is TheoremId.DIAM2_EQUALITY:
            return formulas.diam2_equality(spec, k, budget), plain
        if theorem is TheoremId.K1H_UPPER_BOUND:
            return formulas.k1h_upper_bound(spec, k, budget), plain
        if theorem is TheoremId.DIAM6_EQUALITY:
            return formulas.diam6_equality(spec, k, budget), lambda: {
                "G⊙ℋ": self._corona_dim(spec, k),
                "G⊙ℋ̄": self._corona_dim(formulas.complemented(spec), k),
            }
        if theorem is TheoremId.K1_DIAMOND_EQUALITY:
            return formulas.k1_diamond_equality(spec, k, budget), lambda: {
                "G⊙(K1◇ℋ)": self._corona_dim(formulas.diamond(spec), k),
            }
        return formulas.corona_paths_cycles_closed(spec, k), lambda: {
            "G⊙ℋ": self._corona_dim(spec, k),
            "G⊙ℋ̄": self._corona_dim(formulas.complemented(spec), k),
            "G⊙(K1◇ℋ)": self._corona_dim(formulas.diamond(spec), k),
        }

    def _optimal_bases(self, g: Graph, k: int) -> List[Tuple[int, ...]]:
        """列舉最多 BASIS_LIMIT 個 k-度量基；達到上限時結果可能不完整"""
        bases = solve_exact_all(build_instance(g, k), BASIS_LIMIT, self.node_budget)
        if len(bases) >= BASIS_LIMIT:
            logger.warning(f"⚠️ {k}-度量基達 {BASIS_LIMIT} 個上限，只檢查前 {BASIS_LIMIT} 個")
        else:
            logger.debug(f"🔍 {k}-度量基: 列舉 {len(bases)} 個")
        return bases

    def _bases_without_hub(self, h: Graph) -> Observations:
        k = h.order - h.max_degree + 1
        bases = self._optimal_bases(join(complete(1), h)[0], k)
        return {"bases_without_hub": sum(1 for basis in bases if 0 not in basis)}

    def _fewest_rim_vertices(self, n: int, k: int) -> Observations:
        bases = self._optimal_bases(fan(n), k)
        return {"rim_in_basis": min(sum(1 for v in basis if v != 0) for basis in bases)}

    def _restrictions_not_generating(self, h: Graph, k: int) -> Observations:
        bases = self._optimal_bases(join(complete(1), h)[0], k)
        failures = sum(1 for basis in bases if not is_k_generator(h, [v - 1 for v in basis if v != 0], k))
        return {"non_generating": failures}

    def _degree_generator_failures(self, h: Graph, k: int) -> Observations:
        """V(H) 中滿足 H 內頂點對且 |S| ≥ k+Δ 的子集，不是 K_1+H 的 k-度量生成集的數量"""
        g, _ = join(complete(1), h)
        inner = [mask for (x, _), mask in pair_table(g) if x != 0]
        checked = failures = 0
        for size in range(k + h.max_degree, h.order + 1):
            for subset in itertools.combinations(range(1, h.order + 1), size):
                s_mask = vertices_to_mask(subset)
                if any((mask & s_mask).bit_count() < k for mask in inner):
                    continue
                checked += 1
                if not is_k_generator(g, subset, k):
                    failures += 1
        logger.debug(f"🔍 k={k}: 檢查 {checked} 個 V(H) 子集")
        return {"failures": failures}

    # ========== 批次執行 ==========

    def run(self, cases: List[TheoremCase]) -> List[TheoremReport]:
        """
        依序或平行檢驗多個實例；輸出順序與輸入順序相同

        Args:
            cases: 實例列表

        Returns:
            List[TheoremReport]: 檢驗結果
        """
        logger.info(f"🔍 開始檢驗 {len(cases)} 個實例（threads={self.threads}）")
        if self.threads <= 1 or len(cases) <= 1:
            return [self.evaluate(case) for case in cases]

        with ProcessPoolExecutor(max_workers=self.threads) as executor:
            return list(executor.map(_evaluate_in_worker, cases, [self.node_budget] * len(cases)))

    def sweep_cases(
        self,
        theorem: TheoremId,
        n_range: Optional[range] = None,
        k_range: Optional[range] = None,
        graph_expr: Optional[str] = None,
        base_expr: Optional[str] = None,
        attach_expr: Optional[str] = None,
    ) -> List[TheoremCase]:
        """
        為單一定理展開參數範圍

        Args:
            theorem: 定理
            n_range: 扇形圖 / 輪圖的階數範圍
            k_range: 重數範圍；省略時取該實例所有有效的 k
            graph_expr: 單圖定理的圖形描述
            base_expr: 冠積基底
            attach_expr: 冠積附掛圖族

        Returns:
            List[TheoremCase]: 待檢驗實例
        """
        if theorem in ORDER_THEOREMS:
            if n_range is None:
                raise ParseError(f"{theorem.value} 需要 --n")
            if theorem in ORDER_K_RANGES:
                ks = k_range or ORDER_K_RANGES[theorem]
                return [TheoremCase(theorem, k=k, n=n) for n in n_range for k in ks]
            return [TheoremCase(theorem, n=n) for n in n_range]

        if theorem in GRAPH_THEOREMS:
            if graph_expr is None:
                raise ParseError(f"{theorem.value} 需要 --graph")
            if theorem in GRAPH_K_THEOREMS:
                ks = k_range or range(1, formulas.join_dimensional_k(self.parser.parse(graph_expr)) + 1)
                return [TheoremCase(theorem, k=k, graph_expr=graph_expr) for k in ks]
            if theorem is TheoremId.JOIN_BELOW_ATTACHMENT:
                cases = [TheoremCase(theorem, graph_expr=graph_expr)]
                ks = k_range or range(1, formulas.join_dimensional_k(self.parser.parse(graph_expr)) + 1)
                return cases + [TheoremCase(theorem, k=k, graph_expr=graph_expr) for k in ks]
            return [TheoremCase(theorem, graph_expr=graph_expr)]

        if base_expr is None or attach_expr is None:
            raise ParseError(f"{theorem.value} 需要 --base 與 --attach")
        if theorem not in CORONA_K_THEOREMS:
            return [TheoremCase(theorem, base_expr=base_expr, attach_expr=attach_expr)]
        if k_range is None:
            spec = self.parser.parse_corona_spec(base_expr, attach_expr)
            k_range = range(1, c_of_family(spec.attachments) + 1)
        return [TheoremCase(theorem, k=k, base_expr=base_expr, attach_expr=attach_expr) for k in k_range]

    def verify_cases(self, only: Iterable[str] = ()) -> List[TheoremCase]:
        """內建的完整檢驗語料；only 非空時只保留指定的定理"""
        wanted = {parse_theorem(name) for name in only}
        cases = [case for case in self._corpus() if not wanted or case.theorem in wanted]
        logger.info(f"🔍 檢驗語料: {len(cases)} 個實例")
        return cases

    def _corpus(self) -> List[TheoremCase]:
        T = TheoremId
        cases: List[TheoremCase] = []

        def order(theorem: TheoremId, ns: range) -> None:
            cases.extend(self.sweep_cases(theorem, n_range=ns))

        def graphs(theorem: TheoremId, exprs: List[str]) -> None:
            for expr in exprs:
                cases.extend(self.sweep_cases(theorem, graph_expr=expr))

        def coronas(theorem: TheoremId, pairs: List[Tuple[str, str]]) -> None:
            for base, attach in pairs:
                cases.extend(self.sweep_cases(theorem, base_expr=base, attach_expr=attach))

        order(T.FAN_DIM1, range(2, 15))
        order(T.FAN_DIM2, range(2, 15))
        order(T.FAN_DIM3, range(4, 15))
        order(T.WHEEL_DIM1, range(3, 15))
        order(T.WHEEL_DIM2, range(3, 15))
        order(T.WHEEL_DIM3, range(5, 15))
        order(T.WHEEL_DIM4, range(5, 15))
        order(T.WHEEL_RIM_LOWER_BOUND, range(7, 13))
        order(T.FAN_RIM_SIZE, range(6, 11))

        graphs(T.JOIN_DIMENSIONAL_K, ["P4", "P7", "C5", "C8", "K4", "S5", "Petersen"])
        graphs(T.JOIN_BELOW_ATTACHMENT, ["P5", "C6", "C7"])
        graphs(T.HUB_IN_EVERY_BASIS, ["P3", "P4", "S4", "S5", "C4"])
        graphs(T.HUB_EXCLUDED, ["C7", "C8", "P7"])
        graphs(T.DIM2_ALL_TWINS, ["K4", "C4", "S4", "P4", "C5", "join(K2; comp(K3))"])
        graphs(T.DIM_N_CHARACTERIZATION, ["P4", "C6", "K4", "C5", "P5", "Petersen"])
        graphs(T.JOIN_THREE_DIMENSIONAL, ["P4", "comp(P5)", "comp(P6)", "C4", "C6"])
        graphs(T.JOIN_BASIS_RESTRICTION, ["P5", "C6", "C7", "K4", "S4"])
        graphs(T.HUB_EXCLUDED_BY_DEGREE, ["C7", "C8", "P7", "P8"])
        graphs(T.JOIN_GENERATOR_BY_DEGREE, ["P4", "P6", "C6", "C7", "S5", "Petersen"])

        coronas(T.CORONA_DIMENSIONAL_VALUE, [
            ("P2", "K2,K2"), ("C3", "P4"), ("P2", "C5"), ("P3", "C6"), ("P2", "P4,C5"), ("P2", "Petersen"),
        ])
        coronas(T.CORONA_WITHIN_ATTACHMENT, [("P2", "P4,C5"), ("P3", "K3,P5,C6")])
        coronas(T.GIRTH5_REGULAR_2DELTA, [("P2", "C5"), ("P3", "C6"), ("P2", "K2"), ("P2", "Petersen")])
        coronas(T.END_VERTEX_SUPPORT_3, [("P2", "P4,C5"), ("P2", "P5"), ("C3", "P4,P6,C7")])
        coronas(T.CORONA_TWO_DIMENSIONAL, [("P2", "K2,K2"), ("P2", "C5"), ("P2", "P4,C4"), ("P3", "P5"), ("P2", "S4")])
        coronas(T.CORONA_SMALL_DIAMETER, [("P2", "C5"), ("P2", "K4,C4"), ("P3", "S4"), ("P2", "Petersen"), ("P2", "P5")])
        coronas(T.SANDWICH_BOUNDS, [("P2", "P4"), ("P2", "K3"), ("P2", "C6")])
        coronas(T.UPPER_BOUND_TIGHT, [("P2", "P4"), ("P3", "P4"), ("C3", "P4"), ("P2", "C6"), ("P3", "C6")])
        coronas(T.TWIN_DIM2_EQUALITY, [("P3", "K2,K3,K2"), ("P2", "C4"), ("P2", "P4,K2"), ("P2", "K2,P3")])
        coronas(T.DIAM2_EQUALITY, [("P2", "K4"), ("P2", "C5"), ("P2", "S4"), ("P3", "F5")])
        coronas(T.K1H_UPPER_BOUND, [("P2", "P6"), ("P2", "K2"), ("P2", "C7"), ("P2", "P4,C5")])
        coronas(T.DIAM6_EQUALITY, [("P2", "C7"), ("P2", "P7")])
        coronas(T.K1_DIAMOND_EQUALITY, [("P2", "C7"), ("P2", "P7")])
        coronas(T.CORONA_PATHS_CYCLES, [("P2", "P6,P7"), ("P2", "C7,C8"), ("P2", "P7")])
        return cases

    def random_cases(self, count: int, seed: int) -> List[TheoremCase]:
        """
        隨機小型冠積實例（基底階數 ≤ 4，附掛圖階數 ≤ 6）

        每個實例對 CoronaDimensionalValue、SandwichBounds、K1HUpperBound 各產生檢驗項目。

        Args:
            count: 實例數
            seed: 亂數種子；相同種子產生相同實例

        Returns:
            List[TheoremCase]: 待檢驗實例
        """
        rng = random.Random(seed)
        cases: List[TheoremCase] = []
        for _ in range(count):
            base = rng.choice(RANDOM_BASES)
            base_order = self.parser.parse(base).order
            attach = ",".join(
                f"{family}{rng.randint(low, high)}"
                for family, low, high in (rng.choice(RANDOM_ATTACHMENTS) for _ in range(base_order))
            )
            cases.append(TheoremCase(TheoremId.CORONA_DIMENSIONAL_VALUE, base_expr=base, attach_expr=attach))
            for theorem in (TheoremId.SANDWICH_BOUNDS, TheoremId.K1H_UPPER_BOUND):
                cases.extend(self.sweep_cases(theorem, base_expr=base, attach_expr=attach))
        return cases

    # ========== 統計與輸出 ==========

    @staticmethod
    def summarize(reports: List[TheoremReport]) -> Dict[str, Any]:
        """各定理的判定次數與總計"""
        per_theorem: Dict[str, Counter] = {}
        for report in reports:
            per_theorem.setdefault(report.theorem.value, Counter())[report.verdict.value] += 1

        totals = Counter(report.verdict.value for report in reports)
        return {
            "instances": len(reports),
            "violations": totals.get(Verdict.VIOLATED.value, 0),
            "totals": {verdict.value: totals.get(verdict.value, 0) for verdict in Verdict},
            "per_theorem": {
                name: {verdict.value: counts.get(verdict.value, 0) for verdict in Verdict}
                for name, counts in per_theorem.items()
            },
        }

    @staticmethod
    def report_to_dict(report: TheoremReport) -> Dict[str, Any]:
        return {
            "theorem": report.theorem.value,
            "instance": report.instance,
            "k": report.k,
            "applicable": report.applicable,
            "reason": report.reason,
            "predicted_lower": report.predicted_lower,
            "predicted_upper": report.predicted_upper,
            "observed": report.observed,
            "verdict": report.verdict.value,
            "detail": report.detail,
        }

    @staticmethod
    def to_json(payload: Dict[str, Any]) -> str:
        document = {"schema_version": SCHEMA_VERSION}
        document.update(payload)
        return json.dumps(document, ensure_ascii=False, indent=2) + "\n"

    @staticmethod
    def to_csv(columns: List[str], rows: Iterable[Dict[str, Any]]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow(["" if row.get(column) is None else row.get(column) for column in columns])
        return buffer.getvalue()

    def render_text(self, template_name: str, **context: Any) -> str:
        return self.templates.get_template(template_name).render(**context)

    def emit(self, content: str, output_path: Optional[str] = None) -> None:
        """寫到 stdout，或指定 --output 時寫入檔案"""
        if output_path is None:
            sys.stdout.write(content)
            return
        path = Path(output_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(content, encoding="utf-8")
        logger.info(f"✅ 結果已寫入 {path}")


def _evaluate_in_worker(case: TheoremCase, node_budget: int) -> TheoremReport:
    return ReportManager(node_budget=node_budget).evaluate(case)


def parse_theorem(name: str) -> TheoremId:
    """定理名稱（大小寫不拘）轉為 TheoremId"""
    for theorem in TheoremId:
        if theorem.value.lower() == name.strip().lower():
            return theorem
    raise ParseError(f"未知的定理: {name!r}（可用: {', '.join(t.value for t in TheoremId)}）")
