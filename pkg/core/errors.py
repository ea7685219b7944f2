"""
例外定義

每個例外帶有 exit_code，僅由 kmetric.py 轉換成程式結束碼。
"""


class KMetricError(Exception):
    """所有 k-度量相關錯誤的基底類別"""
    exit_code = 1


class ParseError(KMetricError, ValueError):
    """圖形描述語法或邊列表格式錯誤"""
    exit_code = 2


class InvalidOrder(KMetricError, ValueError):
    """圖族建構參數（階數）不合法"""
    exit_code = 2


class InvalidFamily(KMetricError, ValueError):
    """冠積附掛圖族與基底階數不符"""
    exit_code = 2


class SameVertex(KMetricError, ValueError):
    """頂點對的兩端相同"""
    exit_code = 2


class TrivialGraph(KMetricError, ValueError):
    """需要階數 ≥ 2 的圖"""
    exit_code = 2


class OutOfRange(KMetricError, ValueError):
    """封閉公式不涵蓋的參數"""
    exit_code = 2


class DisconnectedGraph(KMetricError):
    """依賴距離的運算遇到不連通圖"""
    exit_code = 3


class KTooLarge(KMetricError):
    """k 超過圖的 k' (dimensional_k)"""
    exit_code = 3

    def __init__(self, k: int, k_max: int):
        super().__init__(f"k={k} 超過此圖的上限 k'={k_max}")
        self.k = k
        self.k_max = k_max


class Infeasible(KMetricError):
    """多重覆蓋實例無解"""
    exit_code = 3


class ResourceExhausted(KMetricError):
    """搜尋節點數超過預算"""
    exit_code = 4

    def __init__(self, budget: int):
        super().__init__(f"搜尋節點數超過預算 {budget:,}")
        self.budget = budget


class Inapplicable(KMetricError):
    """定理假設不成立，不做預測"""
    exit_code = 2


class TheoremViolation(KMetricError):
    """符合假設的實例與定理預測不一致"""
    exit_code = 5


class InvalidEdge(KMetricError, ValueError):
    """邊不合法（超出範圍、自環或重複）"""
    exit_code = 2
