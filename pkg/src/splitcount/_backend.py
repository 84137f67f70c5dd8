"""Kernel backend selection: compiled extension if built, pure Python otherwise.

Set SPLITCOUNT_PURE=1 to force the pure backend; benchmarks and tests can
switch at runtime with use().
"""

from __future__ import annotations

import os

from . import _gfcore_py

try:
    from . import _gfcore
except ImportError:  # extension not built in this environment
    _gfcore = None

if os.environ.get("SPLITCOUNT_PURE"):
    _active = _gfcore_py
else:
    _active = _gfcore if _gfcore is not None else _gfcore_py


def active():
    """The kernel module currently in use."""
    return _active


def name() -> str:
    return _active.BACKEND_NAME


def available() -> tuple[str, ...]:
    return ("compiled", "pure") if _gfcore is not None else ("pure",)


def use(which: str):
    """Select a backend by name ('compiled' or 'pure'); returns it."""
    global _active
    if which == "pure":
        _active = _gfcore_py
    elif which == "compiled":
        if _gfcore is None:
            raise RuntimeError("compiled kernel is not available")
        _active = _gfcore
    else:
        raise ValueError(f"unknown backend {which!r}")
    return _active
