"""Kernel backend selection.

The compiled extension is used when it imported successfully and the
problem fits in its 64-bit masks; otherwise the pure-Python twin runs.
Both backends produce identical results (tests/test_kernels.py checks
parity), so selection never changes behavior, only speed.
"""

from __future__ import annotations

from . import _kernels_py as _pure
from ._kernels_py import HWF, MDF, HWF_TIE_MDF

try:
    from . import _ckernels as _compiled
except ImportError:  # extension not built; pure fallback
    _compiled = None

__all__ = ["HWF", "MDF", "HWF_TIE_MDF", "backend",
           "maximal_independent_sets", "greedy_rounds"]


def backend() -> str:
    """Name of the kernel backend in use."""
    return "compiled" if _compiled is not None else "pure-python"


def maximal_independent_sets(adj: list[int]) -> list[int]:
    if _compiled is not None and len(adj) <= 64:
        return _compiled.maximal_independent_sets(adj)
    return _pure.maximal_independent_sets(adj)


def greedy_rounds(demands: list[int], adj: list[int],
                  mode: int) -> list[tuple[int, int]]:
    if _compiled is not None and len(demands) <= 64:
        return _compiled.greedy_rounds(demands, adj, mode)
    return _pure.greedy_rounds(demands, adj, mode)
