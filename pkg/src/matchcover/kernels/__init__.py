"""Kernel selection: compiled extension when available, else pure Python.

The compiled module only handles graphs that fit machine words
(m <= 64 edges, n <= 64 vertices, <= 62 colors); larger inputs silently
use the pure implementation, which is semantically identical.
Set MATCHCOVER_PURE=1 to force the pure kernels (used by the benchmark).
"""

from __future__ import annotations

import os

from . import _pure

try:
    from . import _fast  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on build environment
    _fast = None

HAVE_FAST = _fast is not None


def _use_fast() -> bool:
    return HAVE_FAST and not os.environ.get("MATCHCOVER_PURE")


def enumerate_perfect_matchings(n: int, edges: list[tuple[int, int]],
                                cap: int) -> tuple[list[int], bool]:
    if _use_fast() and n <= 64 and len(edges) <= 64:
        return _fast.enumerate_perfect_matchings(n, edges, cap)
    return _pure.enumerate_perfect_matchings(n, edges, cap)


def edge_coloring(n: int, edges: list[tuple[int, int]], colors: int,
                  budget: int) -> tuple[list[int] | None, bool]:
    if _use_fast() and n <= 64 and colors <= 62:
        return _fast.edge_coloring(n, edges, colors, budget)
    return _pure.edge_coloring(n, edges, colors, budget)
