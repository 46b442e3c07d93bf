"""Kernel backend selection.

The compiled extension is used when it imports; setting the environment
variable ``GAPMATCH_PURE_PYTHON=1`` forces the pure-Python kernels.
"""

from __future__ import annotations

import os
from types import ModuleType

from gapmatch import _pykernels

compiled: ModuleType | None
try:
    from gapmatch import _kernels as compiled
except ImportError:  # extension not built
    compiled = None

if compiled is not None and not os.environ.get("GAPMATCH_PURE_PYTHON"):
    default = compiled
    BACKEND = "compiled"
else:
    default = _pykernels
    BACKEND = "python"


def get(backend: str | None = None) -> ModuleType:
    """Kernel module for ``backend`` (``"compiled"``, ``"python"`` or ``None`` for the default)."""
    if backend is None:
        return default
    if backend == "python":
        return _pykernels
    if backend == "compiled":
        if compiled is None:
            raise RuntimeError("the compiled kernels are not available; rebuild the package")
        return compiled
    raise ValueError(f"unknown backend {backend!r}")


def available() -> list[str]:
    return ["python"] + (["compiled"] if compiled is not None else [])
