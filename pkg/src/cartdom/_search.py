"""Pick the search kernel at import time.

The compiled extension is used when it was built and the graph fits in 64
vertices.  Set ``CARTDOM_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from cartdom import _search_py

try:
    if os.environ.get("CARTDOM_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from cartdom import _search_c
except ImportError:
    _search_c = None

COMPILED_MAX_ORDER = 64
BACKEND = "compiled" if _search_c is not None else "python"


def available_backends() -> list[str]:
    return ["python"] + (["compiled"] if _search_c is not None else [])


def min_dominating(n, cover, cand, partner, paired, backend=None) -> int:
    backend = backend or BACKEND
    if backend == "compiled":
        if _search_c is None:
            raise RuntimeError("compiled kernel is not available")
        if n <= COMPILED_MAX_ORDER:
            return _search_c.min_dominating(n, cover, cand, partner, paired)
    elif backend != "python":
        raise ValueError(f"unknown backend {backend!r}")
    return _search_py.min_dominating(n, cover, cand, partner, paired)
