"""Selects the compiled path kernel when available, else the pure-Python one.

Set ``GS4_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
from array import array
from typing import Iterable

from . import _altpath_py

if os.environ.get("GS4_PURE_PYTHON") == "1":
    _impl = _altpath_py
    BACKEND = "python"
else:
    try:
        from . import _altpath as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:  # pragma: no cover - depends on the build
        _impl = _altpath_py
        BACKEND = "python"

Edge = tuple[int, int]


def _csr(n: int, edges: Iterable[Edge], index: dict[int, int]) -> tuple[array, array]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for x, y in edges:
        i, j = index[x], index[y]
        adj[i].append(j)
        adj[j].append(i)
    ptr = array("i", [0])
    idx = array("i")
    for row in adj:
        row.sort()
        idx.extend(row)
        ptr.append(len(idx))
    return ptr, idx


def alternating_endpoints(g_edges: Iterable[Edge], h_edges: Iterable[Edge], interface: frozenset,
                          impl=None) -> set[Edge]:
    """Pairs ``(x, y)``, ``x < y``, outside ``interface`` joined by a complete alternating path."""
    g_edges = list(g_edges)
    h_edges = list(h_edges)
    verts = sorted({v for e in g_edges for v in e} | {v for e in h_edges for v in e})
    if not verts:
        return set()
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    gp, gi = _csr(n, g_edges, index)
    hp, hi = _csr(n, h_edges, index)
    iface = array("B", (1 if v in interface else 0 for v in verts))
    pairs = (impl or _impl).alt_endpoints(n, gp, gi, hp, hi, iface)
    return {(verts[i], verts[j]) for i, j in pairs}
