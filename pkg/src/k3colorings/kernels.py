"""Backend selection for the hot loops.

The compiled extension is used when it imports; otherwise the pure-Python
twin.  ``use_backend`` switches explicitly (tests run both).
"""

from __future__ import annotations

import logging
from contextlib import contextmanager
from types import ModuleType

from . import _pykernels

log = logging.getLogger(__name__)

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None
    log.debug("compiled kernels unavailable, using pure Python")

BACKENDS: dict[str, ModuleType] = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["compiled"] = _ckernels

_active: ModuleType = _ckernels if _ckernels is not None else _pykernels


def backend_name() -> str:
    return "compiled" if _active is _ckernels else "python"


def has_compiled() -> bool:
    return _ckernels is not None


def use_backend(name: str) -> None:
    global _active
    if name not in BACKENDS:
        raise ValueError(f"backend {name!r} not available; have {sorted(BACKENDS)}")
    _active = BACKENDS[name]


@contextmanager
def backend(name: str):
    prev = backend_name()
    use_backend(name)
    try:
        yield
    finally:
        use_backend(prev)


def count_triangle_pattern(*args):
    return _active.count_triangle_pattern(*args)


def naive_count(*args):
    return _active.naive_count(*args)


def min_internal_bipartition(n: int, adj):
    return _active.min_internal_bipartition(n, list(adj))
