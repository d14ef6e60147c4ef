"""Selects the compiled kernels when they are importable.

Set ``ISCODES_PURE_PYTHON=1`` to force the fallback.  The compiled core
only handles characteristic 2 with m <= 62; everything else always runs
in Python.
"""

from __future__ import annotations

import os
from typing import Sequence

from iscodes import _pykernels
from iscodes.field import FieldContext

try:
    if os.environ.get("ISCODES_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from iscodes import _ckernels
except ImportError:
    _ckernels = None

NATIVE_AVAILABLE = _ckernels is not None
_native_fields: dict[FieldContext, object] = {}


def default_backend() -> str:
    return "native" if NATIVE_AVAILABLE else "python"


def native_supports(F: FieldContext) -> bool:
    return NATIVE_AVAILABLE and F.q == 2 and F.m <= 62


def _native_field(F: FieldContext):
    nf = _native_fields.get(F)
    if nf is None:
        exp = F._exp if F.has_tables else []
        log = F._log if F.has_tables else []
        nf = _ckernels.NativeField(F.m, F._mod_int, exp, log)
        _native_fields[F] = nf
    return nf


def _resolve(F: FieldContext, backend: str | None) -> str:
    if backend is None:
        backend = os.environ.get("ISCODES_BACKEND", "auto")
    if backend == "auto":
        return "native" if native_supports(F) else "python"
    if backend == "native" and not native_supports(F):
        raise RuntimeError(f"native kernels unavailable for {F!r}")
    if backend not in ("native", "python"):
        raise ValueError(f"unknown backend {backend!r}")
    return backend


def koetter(F: FieldContext, points: Sequence[Sequence[int]], s: int, k: int,
            backend: str | None = None):
    if _resolve(F, backend) == "native":
        return _ckernels.koetter(_native_field(F), [tuple(p) for p in points], s, k)
    return _pykernels.koetter(F, points, s, k)


def rref(F: FieldContext, rows: Sequence[Sequence[int]], ncols: int,
         backend: str | None = None):
    if _resolve(F, backend) == "native":
        return _ckernels.rref(_native_field(F), [list(r) for r in rows], ncols)
    return _pykernels.rref(F, rows, ncols)
