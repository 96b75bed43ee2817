"""Search-kernel selection.

The compiled extension is used when it imported successfully and the weight
bound fits its 64-bit slot masks; otherwise the pure-Python reference kernel
runs.  Setting CIRCLEFP_PURE_PYTHON=1 forces the reference kernel, which is
also the arbiter whenever the two disagree.
"""

from __future__ import annotations

import os
from typing import Callable

from . import _core_py

if os.environ.get("CIRCLEFP_PURE_PYTHON") == "1":
    _compiled = None
else:
    try:
        from . import _core as _compiled  # type: ignore[attr-defined]
    except ImportError:
        _compiled = None

#: Which kernel imports resolved to: "cython" or "python".
KERNEL = "cython" if _compiled is not None else "python"

# the compiled kernel keeps one bit per possible weight value in a uint64
_COMPILED_MAX_WEIGHT = 32


def kernel_for(max_weight: int) -> tuple[Callable, str]:
    """The (search_chunk, kind) pair to use for a given weight bound."""
    if _compiled is not None and max_weight <= _COMPILED_MAX_WEIGHT:
        return _compiled.search_chunk, "cython"
    return _core_py.search_chunk, "python"
