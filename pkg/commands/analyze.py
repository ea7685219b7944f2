"""
analyze：圖的基本指標與 k'
"""

import argparse
import time
from typing import Any, Dict

from core.graph_core import ACYCLIC, Graph
from core.metric_sets import c_of_h, d_k_union, dimensional_k
from core.report_manager import ReportManager
from commands import add_output_options
from models.schemas import RunConfig

ANALYZE_COLUMNS = [
    "graph", "order", "size", "dimensional_k", "twin_pairs", "c_of_h",
    "diameter", "girth", "min_degree", "max_degree", "regular",
]


def create_analyze_commands(subparsers: argparse._SubParsersAction, manager: ReportManager) -> None:
    """註冊 analyze 子指令"""

    parser = subparsers.add_parser("analyze", help="計算 k'、雙胞胎、C(G)、直徑與圍長")
    parser.add_argument("graph_expr", metavar="GRAPH", help="圖形描述，例如 W9、corona(P2; C7)、@edges.txt")
    add_output_options(parser)

    def analyze(config: RunConfig) -> int:
        started = time.perf_counter()
        graph = manager.parser.parse(config.graph_expr)
        report = analyze_graph(config.graph_expr, graph)
        if config.timing:
            report["wall_seconds"] = round(time.perf_counter() - started, 6)

        if config.output_format == "json":
            content = manager.to_json({"command": "analyze", **report})
        elif config.output_format == "csv":
            row = dict(report, twin_pairs=len(report["twin_pairs"]))
            columns = ANALYZE_COLUMNS + (["wall_seconds"] if config.timing else [])
            content = manager.to_csv(columns, [row])
        else:
            content = manager.render_text("analyze.txt.j2", report=report, timing=config.timing)
        manager.emit(content, config.output_path)
        return 0

    parser.set_defaults(handler=analyze)


def analyze_graph(expr: str, graph: Graph) -> Dict[str, Any]:
    """
    單一連通圖的指標

    Args:
        expr: 原始描述（僅用於輸出）
        graph: 已解析的圖

    Returns:
        Dict[str, Any]: 依固定鍵順序排列的指標
    """
    graph.require_connected()
    k_max = dimensional_k(graph)
    girth = graph.girth()
    return {
        "graph": expr,
        "order": graph.order,
        "size": graph.size,
        "dimensional_k": k_max,
        "twin_pairs": [list(pair) for pair in graph.twins()],
        "c_of_h": c_of_h(graph),
        "diameter": graph.diameter(),
        "girth": None if girth is ACYCLIC else girth,
        "min_degree": graph.min_degree,
        "max_degree": graph.max_degree,
        "regular": graph.is_regular(),
        "d_k": sorted(d_k_union(graph, k_max)),
    }
