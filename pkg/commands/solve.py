"""
dimk / basis：精確計算 k-度量維度與 k-度量基
"""

import argparse
import time
from typing import Any, Dict, List

from loguru import logger

from core.report_manager import ReportManager
from core.solver import MulticoverSolver, build_instance, coverage_audit
from commands import add_output_options, resolve_k_range
from models.schemas import RunConfig

DIMK_COLUMNS = ["k", "dim_k", "nodes_explored", "proof"]
BASIS_COLUMNS = ["k", "dim_k", "index", "witness", "labels"]


def create_solve_commands(subparsers: argparse._SubParsersAction, manager: ReportManager) -> None:
    """註冊 dimk 與 basis 子指令"""

    dimk_parser = subparsers.add_parser("dimk", help="計算 dim_k（可指定 k 範圍）")
    dimk_parser.add_argument("graph_expr", metavar="GRAPH", help="圖形描述")
    dimk_parser.add_argument("--k", dest="k", default=None, help="k 或 a..b；省略時為 1..k'")
    add_output_options(dimk_parser)

    basis_parser = subparsers.add_parser("basis", help="列出 k-度量基")
    basis_parser.add_argument("graph_expr", metavar="GRAPH", help="圖形描述")
    basis_parser.add_argument("--k", dest="k", default=None, help="k 或 a..b；省略時為 1..k'")
    basis_parser.add_argument("--all", dest="all_limit", type=int, default=None, metavar="N",
                              help="依字典序列出最多 N 個最佳基")
    basis_parser.add_argument("--audit", action="store_true", default=None, help="附上每個頂點對的覆蓋次數")
    add_output_options(basis_parser)

    def dimk(config: RunConfig) -> int:
        graph = manager.parser.parse(config.graph_expr)
        graph.require_connected()
        ks = resolve_k_range(manager.parser, config.k, graph)

        rows: List[Dict[str, Any]] = []
        for k in ks:
            started = time.perf_counter()
            result = MulticoverSolver(build_instance(graph, k), manager.node_budget).solve_exact()
            row = {
                "k": k,
                "dim_k": result.dim,
                "nodes_explored": result.nodes_explored,
                "proof": result.proof.value,
            }
            if config.timing:
                row["wall_seconds"] = round(time.perf_counter() - started, 6)
            rows.append(row)

        if config.output_format == "json":
            content = manager.to_json({"command": "dimk", "graph": config.graph_expr, "order": graph.order, "rows": rows})
        elif config.output_format == "csv":
            content = manager.to_csv(DIMK_COLUMNS + (["wall_seconds"] if config.timing else []), rows)
        else:
            content = manager.render_text("dimk.txt.j2", graph=config.graph_expr, order=graph.order,
                                          rows=rows, timing=config.timing)
        manager.emit(content, config.output_path)
        return 0

    def basis(config: RunConfig) -> int:
        if config.all_limit is not None and config.all_limit < 1:
            raise ValueError(f"--all 必須 ≥ 1: {config.all_limit}")
        graph = manager.parser.parse(config.graph_expr)
        graph.require_connected()
        ks = resolve_k_range(manager.parser, config.k, graph)

        results: List[Dict[str, Any]] = []
        for k in ks:
            started = time.perf_counter()
            solver = MulticoverSolver(build_instance(graph, k), manager.node_budget)
            result = solver.solve_exact(canonical=True)
            if config.all_limit is None:
                witnesses = [result.witness]
            else:
                witnesses = solver.enumerate_optimal(result.dim, config.all_limit)
            entry: Dict[str, Any] = {
                "k": k,
                "dim_k": result.dim,
                "bases": [
                    {"vertices": list(w), "labels": [graph.label(v) for v in w]}
                    for w in witnesses
                ],
            }
            if config.audit:
                entry["audit"] = coverage_audit(graph, witnesses[0], k)
            if config.timing:
                entry["wall_seconds"] = round(time.perf_counter() - started, 6)
            results.append(entry)

        if config.output_format == "json":
            content = manager.to_json({"command": "basis", "graph": config.graph_expr, "order": graph.order,
                                       "results": results})
        elif config.output_format == "csv":
            if config.audit:
                logger.warning("⚠️ CSV 格式不含覆蓋明細，請改用 --format json 或 text")
            rows = [
                {
                    "k": entry["k"],
                    "dim_k": entry["dim_k"],
                    "index": index,
                    "witness": " ".join(map(str, item["vertices"])),
                    "labels": " ".join(item["labels"]),
                }
                for entry in results
                for index, item in enumerate(entry["bases"])
            ]
            content = manager.to_csv(BASIS_COLUMNS, rows)
        else:
            content = manager.render_text("basis.txt.j2", graph=config.graph_expr, order=graph.order,
                                          results=results, timing=config.timing)
        manager.emit(content, config.output_path)
        return 0

    dimk_parser.set_defaults(handler=dimk)
    basis_parser.set_defaults(handler=basis)
