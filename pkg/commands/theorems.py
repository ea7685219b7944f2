"""
sweep / verify：以精確求解器檢驗定理
"""

import argparse
import time
from typing import List

from loguru import logger

from core.errors import TheoremViolation
from core.report_manager import REPORT_COLUMNS, ReportManager, parse_theorem
from commands import add_output_options
from models.schemas import RunConfig, TheoremReport, Verdict


def create_theorem_commands(subparsers: argparse._SubParsersAction, manager: ReportManager) -> None:
    """註冊 sweep 與 verify 子指令"""

    sweep_parser = subparsers.add_parser("sweep", help="對單一定理展開參數範圍並檢驗")
    sweep_parser.add_argument("theorem", metavar="THEOREM", help="定理名稱，例如 FanDim2、SandwichBounds")
    sweep_parser.add_argument("--n", dest="n_range", default=None, help="扇形圖 / 輪圖階數 a..b")
    sweep_parser.add_argument("--k", dest="k", default=None, help="k 或 a..b")
    sweep_parser.add_argument("--graph", dest="graph_expr", default=None, help="單圖定理的圖形描述")
    sweep_parser.add_argument("--base", dest="base_expr", default=None, help="冠積基底")
    sweep_parser.add_argument("--attach", dest="attach_expr", default=None, help="冠積附掛圖族，逗號分隔")
    sweep_parser.add_argument("--threads", type=int, default=None, help="平行檢驗的行程數")
    add_output_options(sweep_parser)

    verify_parser = subparsers.add_parser("verify", help="執行完整檢驗語料")
    verify_parser.add_argument("--only", action="append", default=None, metavar="THEOREM",
                               help="只檢驗指定定理（可重複）")
    verify_parser.add_argument("--random", dest="random_count", type=int, default=None, metavar="N",
                               help="另外加入 N 個隨機冠積實例")
    verify_parser.add_argument("--seed", type=int, default=None, help="隨機實例的亂數種子")
    verify_parser.add_argument("--threads", type=int, default=None, help="平行檢驗的行程數")
    add_output_options(verify_parser)

    def sweep(config: RunConfig) -> int:
        theorem = parse_theorem(config.theorem)
        parser = manager.parser
        cases = manager.sweep_cases(
            theorem,
            n_range=parser.parse_range(config.n_range) if config.n_range else None,
            k_range=parser.parse_range(config.k) if config.k else None,
            graph_expr=config.graph_expr,
            base_expr=config.base_expr,
            attach_expr=config.attach_expr,
        )
        return _publish("sweep", manager, config, cases)

    def verify(config: RunConfig) -> int:
        cases = manager.verify_cases(config.only)
        if config.random_count:
            cases += manager.random_cases(config.random_count, config.seed)
        return _publish("verify", manager, config, cases)

    sweep_parser.set_defaults(handler=sweep)
    verify_parser.set_defaults(handler=verify)


def _publish(command: str, manager: ReportManager, config: RunConfig, cases: list) -> int:
    """執行、輸出，並在有違反時回傳對應結束碼"""
    started = time.perf_counter()
    reports: List[TheoremReport] = manager.run(cases)
    summary = manager.summarize(reports)
    if config.timing:
        summary["wall_seconds"] = round(time.perf_counter() - started, 6)

    if config.output_format == "json":
        payload = {"command": command, "summary": summary, "reports": [manager.report_to_dict(r) for r in reports]}
        if command == "verify" and config.random_count:
            payload["seed"] = config.seed
        content = manager.to_json(payload)
    elif config.output_format == "csv":
        content = manager.to_csv(REPORT_COLUMNS, (manager.report_to_dict(r) for r in reports))
    else:
        content = manager.render_text("reports.txt.j2", command=command, summary=summary,
                                      reports=reports, timing=config.timing)
    manager.emit(content, config.output_path)

    violations = summary["violations"]
    if violations:
        logger.error(f"❌ {violations} 個實例違反定理預測")
        return TheoremViolation.exit_code

    skipped = summary["totals"][Verdict.SKIPPED.value]
    if skipped:
        logger.warning(f"⚠️ {skipped} 個實例超出節點預算而略過")
    logger.info(f"✅ {command}: {len(reports)} 個實例，無違反")
    return 0
