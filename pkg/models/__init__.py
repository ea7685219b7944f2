"""
資料模型模組
"""

import importlib

# 避免循環導入，使用延遲導入
_EXPORTS = ['CoronaSpec', 'CoronaLayout', 'DistinctiveSet', 'MulticoverInstance', 'BasisResult', 'TheoremReport', 'RunConfig']

__all__ = list(_EXPORTS)


def __getattr__(name):
    if name not in _EXPORTS:
        raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
    return getattr(importlib.import_module('models.schemas'), name)
