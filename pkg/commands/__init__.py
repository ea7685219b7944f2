"""
命令列子指令群組

每個模組提供 create_*_commands(subparsers, manager)，註冊子指令並以
set_defaults(handler=...) 綁定處理函式。處理函式接收 RunConfig，回傳結束碼。
"""

import argparse
from typing import Optional

from core.errors import KTooLarge
from core.family_parser import FamilyParser
from core.graph_core import Graph
from core.metric_sets import dimensional_k


def add_output_options(parser: argparse.ArgumentParser) -> None:
    """所有子指令共用的輸出與求解選項"""
    parser.add_argument("--format", dest="output_format", choices=["json", "csv", "text"], default=None,
                        help="輸出格式（預設 text）")
    parser.add_argument("--output", dest="output_path", default=None, help="寫入檔案而非 stdout")
    parser.add_argument("--node-budget", dest="node_budget", type=int, default=None,
                        help="單次精確求解的節點上限（可用 KMETRIC_NODE_BUDGET 設定）")
    parser.add_argument("--timing", action="store_true", default=None, help="輸出包含計算時間")


def resolve_k_range(parser: FamilyParser, k_text: Optional[str], graph: Graph) -> range:
    """
    --k 範圍；省略時為 1..k'

    Raises:
        KTooLarge: 範圍超過 k'
    """
    k_max = dimensional_k(graph)
    if k_text is None:
        return range(1, k_max + 1)
    ks = parser.parse_range(k_text)
    if ks.start < 1:
        raise ValueError(f"k 必須 ≥ 1: {k_text}")
    if ks[-1] > k_max:
        raise KTooLarge(ks[-1], k_max)
    return ks
