"""
核心功能模組
"""

import importlib

# 避免循環導入，使用延遲導入
_EXPORTS = {
    'Graph': 'core.graph_core',
    'FamilyParser': 'core.family_parser',
    'PairTable': 'core.metric_sets',
    'MulticoverSolver': 'core.solver',
    'ReportManager': 'core.report_manager',
}

__all__ = list(_EXPORTS)


def __getattr__(name):
    if name not in _EXPORTS:
        raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
    return getattr(importlib.import_module(_EXPORTS[name]), name)
