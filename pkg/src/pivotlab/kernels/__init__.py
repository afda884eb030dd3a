"""Kernel backend selection.

The compiled core (`_ckernels`, built from the .pyx source) is preferred when
importable; the numpy reference implementation is the fallback. Both expose
the same six functions with identical semantics. Set PIVOTLAB_KERNELS to
"py" to force the fallback or "c" to require the compiled core.
"""
from __future__ import annotations

import os

from . import reference

_ENV = "PIVOTLAB_KERNELS"


def _select():
    choice = os.environ.get(_ENV, "auto")
    if choice not in ("auto", "c", "py"):
        raise RuntimeError(f"{_ENV} must be one of auto/c/py, got {choice!r}")
    if choice in ("auto", "c"):
        try:
            from . import _ckernels

            return _ckernels, "c"
        except ImportError:
            if choice == "c":
                raise
    return reference, "python"


_impl, BACKEND = _select()

softmax_fwd = _impl.softmax_fwd
softmax_bwd = _impl.softmax_bwd
gelu_fwd = _impl.gelu_fwd
gelu_bwd = _impl.gelu_bwd
layer_norm_fwd = _impl.layer_norm_fwd
layer_norm_bwd = _impl.layer_norm_bwd


def available_backends() -> list[str]:
    """Names of importable backends ("python" is always present)."""
    names = []
    try:
        from . import _ckernels  # noqa: F401

        names.append("c")
    except ImportError:
        pass
    names.append("python")
    return names
