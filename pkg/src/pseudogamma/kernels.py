"""Kernel dispatch: the compiled extension when it was built, otherwise the
numpy fallback. Set ``PSEUDOGAMMA_PURE_PYTHON=1`` to force the fallback."""

from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels


def _load_compiled() -> ModuleType | None:
    if os.environ.get("PSEUDOGAMMA_PURE_PYTHON", "") not in ("", "0"):
        return None
    try:
        from . import _ckernels
    except ImportError:
        return None
    return _ckernels


_compiled = _load_compiled()
BACKEND = "cython" if _compiled is not None else "python"
_active: ModuleType = _compiled if _compiled is not None else _pykernels

direct_log_sum = _active.direct_log_sum
hasse_inner = _active.hasse_inner


def backend(name: str) -> ModuleType:
    """Explicit access to one implementation (for tests and benchmarks)."""
    if name == "python":
        return _pykernels
    if name == "cython":
        if _compiled is None:
            raise ImportError("compiled kernels are not built")
        return _compiled
    raise ValueError(f"unknown backend {name!r}")


def available_backends() -> list[str]:
    return ["cython", "python"] if _compiled is not None else ["python"]
