"""
資料結構定義
"""

import os
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from core.errors import Inapplicable, InvalidFamily
from core.graph_core import Graph

DEFAULT_NODE_BUDGET = 50_000_000
NODE_BUDGET_ENV = "KMETRIC_NODE_BUDGET"
# 需要「每個最佳基」的定理最多列舉的基數
BASIS_LIMIT = 256

Pair = Tuple[int, int]


@dataclass(frozen=True)
class CoronaSpec:
    """冠積 G⊙ℋ 的輸入：基底圖與每個基底頂點對應的附掛圖"""
    base: Graph
    attachments: Tuple[Graph, ...]

    def __post_init__(self):
        if not isinstance(self.attachments, tuple):
            object.__setattr__(self, "attachments", tuple(self.attachments))

    def validate(self) -> None:
        if len(self.attachments) != self.base.order:
            raise InvalidFamily(
                f"附掛圖數量 {len(self.attachments)} 與基底階數 {self.base.order} 不符"
            )

    @property
    def attachment_orders(self) -> List[int]:
        return [h.order for h in self.attachments]


@dataclass(frozen=True)
class CoronaLayout:
    """冠積頂點編號：基底頂點在前，之後依序為各附掛圖的連續區塊"""
    base_index: Dict[int, int]
    copy_index: Dict[Tuple[int, int], int]
    block_starts: Tuple[int, ...]
    block_orders: Tuple[int, ...]

    def copy_block(self, i: int) -> range:
        """第 i 份附掛圖 V_i 的頂點索引"""
        return range(self.block_starts[i], self.block_starts[i] + self.block_orders[i])

    @property
    def base_vertices(self) -> range:
        return range(len(self.base_index))


@dataclass(frozen=True)
class JoinLayout:
    """聯圖 G+H 的頂點編號：G 在前，H 在後"""
    left: range
    right: range


@dataclass(frozen=True)
class DistinctiveSet:
    """頂點對 (x, y) 的區分集 D_G(x,y)，以位元遮罩儲存"""
    pair: Pair
    members: int

    @property
    def size(self) -> int:
        return self.members.bit_count()

    def vertices(self) -> List[int]:
        return mask_to_vertices(self.members)

    def __contains__(self, z: int) -> bool:
        return bool(self.members >> z & 1)


@dataclass(frozen=True)
class GeneratorCheck:
    """k-度量生成集檢查結果；失敗時附上字典序最小的不足頂點對"""
    ok: bool
    pair: Optional[Pair] = None
    hits: int = 0
    deficit: int = 0

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class MulticoverInstance:
    """集合多重覆蓋實例：每列至少被選中 k 次"""
    n: int
    rows: Tuple[Tuple[Pair, int], ...]
    k: int
    forced: int = 0
    excluded: int = 0


class ProofKind(str, Enum):
    EXACT = "Exact"
    GREEDY_UPPER_BOUND_ONLY = "GreedyUpperBoundOnly"


@dataclass(frozen=True)
class BasisResult:
    """k-度量基計算結果"""
    k: int
    dim: int
    witness: Tuple[int, ...]
    nodes_explored: int
    proof: ProofKind


class TheoremId(str, Enum):
    """受檢驗的定理目錄"""
    CORONA_DIMENSIONAL_VALUE = "CoronaDimensionalValue"
    CORONA_WITHIN_ATTACHMENT = "CoronaDimensionalWithinAttachment"
    GIRTH5_REGULAR_2DELTA = "Girth5Regular2Delta"
    END_VERTEX_SUPPORT_3 = "EndVertexSupport3"
    JOIN_DIMENSIONAL_K = "JoinDimensionalK"
    JOIN_BELOW_ATTACHMENT = "JoinBelowAttachment"
    HUB_IN_EVERY_BASIS = "HubInEveryBasis"
    DIM2_ALL_TWINS = "Dim2AllTwins"
    DIM_N_CHARACTERIZATION = "DimNCharacterization"
    SANDWICH_BOUNDS = "SandwichBounds"
    UPPER_BOUND_TIGHT = "UpperBoundTight"
    TWIN_DIM2_EQUALITY = "TwinDim2Equality"
    DIAM2_EQUALITY = "Diam2Equality"
    K1H_UPPER_BOUND = "K1HUpperBound"
    WHEEL_RIM_LOWER_BOUND = "WheelRimLowerBound"
    DIAM6_EQUALITY = "Diam6Equality"
    HUB_EXCLUDED = "HubExcluded"
    K1_DIAMOND_EQUALITY = "K1DiamondEquality"
    FAN_DIM1 = "FanDim1"
    FAN_DIM2 = "FanDim2"
    FAN_DIM3 = "FanDim3"
    WHEEL_DIM1 = "WheelDim1"
    WHEEL_DIM2 = "WheelDim2"
    WHEEL_DIM3 = "WheelDim3"
    WHEEL_DIM4 = "WheelDim4"
    CORONA_PATHS_CYCLES = "CoronaPathsCyclesClosed"
    CORONA_TWO_DIMENSIONAL = "CoronaTwoDimensional"
    CORONA_SMALL_DIAMETER = "CoronaSmallDiameter"
    JOIN_THREE_DIMENSIONAL = "JoinThreeDimensional"
    JOIN_BASIS_RESTRICTION = "JoinBasisRestriction"
    HUB_EXCLUDED_BY_DEGREE = "HubExcludedByDegree"
    JOIN_GENERATOR_BY_DEGREE = "JoinGeneratorByDegree"
    FAN_RIM_SIZE = "FanRimSize"


@dataclass(frozen=True)
class Prediction:
    """
    定理對單一實例的預測

    value 不為 None 時是等式預測；否則以 lower/upper 表示界限（任一側可省略）。
    """
    theorem: TheoremId
    applicable: bool
    reason: str
    value: Optional[int] = None
    lower: Optional[int] = None
    upper: Optional[int] = None

    @classmethod
    def inapplicable(cls, theorem: TheoremId, reason: str) -> "Prediction":
        return cls(theorem=theorem, applicable=False, reason=reason)

    @classmethod
    def exact(cls, theorem: TheoremId, value: int, reason: str = "假設成立") -> "Prediction":
        return cls(theorem=theorem, applicable=True, reason=reason, value=value, lower=value, upper=value)

    @classmethod
    def bounds(cls, theorem: TheoremId, lower: Optional[int] = None, upper: Optional[int] = None,
               reason: str = "假設成立") -> "Prediction":
        return cls(theorem=theorem, applicable=True, reason=reason, lower=lower, upper=upper)

    @property
    def is_equality(self) -> bool:
        return self.value is not None

    def holds(self, observed: int) -> bool:
        if self.lower is not None and observed < self.lower:
            return False
        if self.upper is not None and observed > self.upper:
            return False
        return True

    def require(self) -> "Prediction":
        """假設不成立時拋出 Inapplicable"""
        if not self.applicable:
            raise Inapplicable(f"{self.theorem.value}: {self.reason}")
        return self


class Verdict(str, Enum):
    CONFIRMED = "Confirmed"
    BOUND_HELD = "BoundHeld"
    INAPPLICABLE = "Inapplicable"
    VIOLATED = "VIOLATED"
    SKIPPED = "Skipped"


@dataclass(frozen=True)
class TheoremCase:
    """
    一個待檢驗的（定理, 實例）組合

    實例以描述字串保存，可在子行程中重新建構。
    """
    theorem: TheoremId
    k: Optional[int] = None
    n: Optional[int] = None
    graph_expr: Optional[str] = None
    base_expr: Optional[str] = None
    attach_expr: Optional[str] = None

    @property
    def label(self) -> str:
        if self.base_expr is not None:
            return f"corona({self.base_expr}; {self.attach_expr})"
        if self.graph_expr is not None:
            return self.graph_expr
        return f"n={self.n}"


@dataclass
class TheoremReport:
    """單一定理在單一實例上的檢驗結果"""
    theorem: TheoremId
    instance: str
    k: Optional[int]
    applicable: bool
    reason: str
    predicted_lower: Optional[int] = None
    predicted_upper: Optional[int] = None
    observed: Optional[int] = None
    verdict: Verdict = Verdict.INAPPLICABLE
    detail: str = ""


@dataclass
class RunConfig:
    """命令列設定"""
    command: str
    graph_expr: Optional[str] = None
    k: Optional[str] = None
    output_format: str = "text"
    node_budget: int = DEFAULT_NODE_BUDGET
    threads: int = 1
    seed: int = 0
    theorem: Optional[str] = None
    n_range: Optional[str] = None
    base_expr: Optional[str] = None
    attach_expr: Optional[str] = None
    all_limit: Optional[int] = None
    audit: bool = False
    only: List[str] = field(default_factory=list)
    random_count: int = 0
    output_path: Optional[str] = None
    timing: bool = False

    @classmethod
    def from_env(cls, command: str, **overrides) -> "RunConfig":
        """
        建立設定；環境變數先套用，明確指定的參數優先

        Args:
            command: 子指令名稱
            overrides: 命令列參數（值為 None 者忽略）

        Returns:
            RunConfig: 驗證後的設定
        """
        config = cls(command=command)
        env_budget = os.environ.get(NODE_BUDGET_ENV)
        if env_budget:
            try:
                config.node_budget = int(env_budget)
            except ValueError:
                raise ValueError(f"{NODE_BUDGET_ENV} 必須為整數: {env_budget!r}")

        for key, value in overrides.items():
            if value is not None:
                setattr(config, key, value)

        config.validate()
        return config

    def validate(self) -> None:
        if self.node_budget < 1:
            raise ValueError(f"node_budget 必須 ≥ 1: {self.node_budget}")
        if self.threads < 1:
            raise ValueError(f"threads 必須 ≥ 1: {self.threads}")
        if self.random_count < 0:
            raise ValueError(f"random_count 必須 ≥ 0: {self.random_count}")
        if self.output_format not in ("json", "csv", "text"):
            raise ValueError(f"不支援的輸出格式: {self.output_format}")


def mask_to_vertices(mask: int) -> List[int]:
    """位元遮罩轉為遞增頂點列表"""
    vertices = []
    while mask:
        low = mask & -mask
        vertices.append(low.bit_length() - 1)
        mask ^= low
    return vertices


def vertices_to_mask(vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask
