"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-Python twin is
always available.  Set PERMRAT_BACKEND=pure or PERMRAT_BACKEND=compiled to
force a choice (the latter raises if the extension was not built).

The compiled kernels do 64-bit arithmetic and require p < 2^31; select()
silently falls back to the pure kernels above that, where Python integers
take over.
"""

from __future__ import annotations

import os

from . import _kernel_py

try:
    from . import _kernel as _compiled
except ImportError:  # extension not built; pure fallback only
    _compiled = None

COMPILED_P_LIMIT = 1 << 31


def have_compiled() -> bool:
    return _compiled is not None


def get_backend(name: str | None = None):
    """Return the kernel module for `name` (or the environment/default choice)."""
    name = name or os.environ.get("PERMRAT_BACKEND")
    if name is None:
        name = "compiled" if _compiled is not None else "pure"
    if name == "pure":
        return _kernel_py
    if name == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernel requested but the extension is not built")
        return _compiled
    raise ValueError(f"unknown backend {name!r} (expected 'pure' or 'compiled')")


def select(p: int, name: str | None = None):
    """Backend for work in characteristic p, honoring the compiled p-limit."""
    kern = get_backend(name)
    if kern is not _kernel_py and p >= COMPILED_P_LIMIT:
        return _kernel_py
    return kern


def backend_name(name: str | None = None) -> str:
    return get_backend(name).BACKEND
