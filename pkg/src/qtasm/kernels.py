"""Backend selection for the search kernels.

The compiled extension is used when it imports; otherwise, or when the
environment variable ``QTASM_PURE`` is set to a non-empty value other than
``0``, the pure-Python versions are used.  Both expose ``asm_enumerate`` and
``ice_solutions`` with identical results.
"""

from __future__ import annotations

import os

from qtasm import _purekernels
from qtasm._purekernels import SYM_HT, SYM_NONE, SYM_QT, SearchLimitExceeded

__all__ = ["BACKEND", "SYM_HT", "SYM_NONE", "SYM_QT", "SearchLimitExceeded",
           "asm_enumerate", "ice_solutions", "get_backend"]


def _want_pure() -> bool:
    flag = os.environ.get("QTASM_PURE", "")
    return flag not in ("", "0")


def get_backend(name: str):
    """Return the kernel module called ``"compiled"`` or ``"pure"``."""
    if name == "pure":
        return _purekernels
    if name == "compiled":
        from qtasm import _kernels

        return _kernels
    raise ValueError(f"unknown backend {name!r}")


if _want_pure():
    _impl = _purekernels
    BACKEND = "pure"
else:
    try:
        from qtasm import _kernels as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = _purekernels
        BACKEND = "pure"

asm_enumerate = _impl.asm_enumerate
ice_solutions = _impl.ice_solutions
