"""
k-度量維度工具 - 主程式

    python kmetric.py analyze W9
    python kmetric.py dimk F10 --k 1..3
    python kmetric.py basis "corona(P2; K2, K2)" --k 2 --audit
    python kmetric.py sweep WheelDim3 --n 7..12
    python kmetric.py verify --format json
"""

import argparse
import os
import sys
from dataclasses import fields
from typing import List, Optional

from loguru import logger

# 導入自定義模組
from core.errors import KMetricError
from core.report_manager import ReportManager
from commands.analyze import create_analyze_commands
from commands.solve import create_solve_commands
from commands.theorems import create_theorem_commands
from models.schemas import RunConfig

LOG_LEVEL_ENV = "KMETRIC_LOG_LEVEL"
DEFAULT_LOG_LEVEL = "WARNING"

CONFIG_FIELDS = {f.name for f in fields(RunConfig)} - {"command"}


def configure_logging(verbosity: int) -> None:
    """stderr 單一 sink；-v 為 INFO，-vv 為 DEBUG"""
    if verbosity >= 2:
        level = "DEBUG"
    elif verbosity == 1:
        level = "INFO"
    else:
        level = os.environ.get(LOG_LEVEL_ENV, DEFAULT_LOG_LEVEL).upper()
    logger.remove()
    logger.add(sys.stderr, level=level, format="<level>{level: <8}</level> | {message}")


def build_parser(manager: ReportManager) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kmetric",
        description="k-度量生成集、k-度量基與 k-度量維度計算工具",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v 顯示進度，-vv 顯示搜尋細節")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")

    # 註冊子指令
    create_analyze_commands(subparsers, manager)
    create_solve_commands(subparsers, manager)
    create_theorem_commands(subparsers, manager)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    命令列進入點

    Args:
        argv: 參數列表；None 時使用 sys.argv

    Returns:
        int: 結束碼（0 成功，2 語法/用法，3 無解或 k 過大，4 超出節點預算，5 定理違反）
    """
    manager = ReportManager()
    parser = build_parser(manager)
    args = parser.parse_args(argv)
    configure_logging(args.verbose)

    if args.command is None:
        parser.print_help(sys.stderr)
        return 2

    options = {key: value for key, value in vars(args).items() if key in CONFIG_FIELDS}
    try:
        config = RunConfig.from_env(args.command, **options)
        manager.node_budget = config.node_budget
        manager.threads = config.threads
        return args.handler(config)
    except KMetricError as e:
        logger.error(f"❌ {e}")
        return e.exit_code
    except ValueError as e:
        logger.error(f"❌ {e}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
