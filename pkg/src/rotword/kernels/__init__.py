"""Kernel backend selection.

The hot loops (grid enumeration, pair reconstruction) exist twice: numba
@njit kernels and a pure-numpy fallback.  ROTWORD_BACKEND picks one:

  auto   use numba when importable, else numpy (default)
  numba  require the compiled kernels
  numpy  force the fallback

`use_backend` overrides the choice for a scope (used by tests and the
benchmark).
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from types import ModuleType

from . import _numpy

_ENV_VAR = "ROTWORD_BACKEND"
_active: ModuleType | None = None


def _load_numba_backend() -> ModuleType:
    from . import _numba

    return _numba


def _resolve(name: str) -> ModuleType:
    if name == "numpy":
        return _numpy
    if name == "numba":
        return _load_numba_backend()
    if name == "auto":
        try:
            return _load_numba_backend()
        except ImportError:
            return _numpy
    raise ValueError(f"unknown backend {name!r}; expected auto, numba or numpy")


def get_backend() -> ModuleType:
    global _active
    if _active is None:
        _active = _resolve(os.environ.get(_ENV_VAR, "auto"))
    return _active


def active_backend_name() -> str:
    return get_backend().BACKEND_NAME


def set_backend(name: str | None) -> None:
    """Force a backend; None re-resolves from the environment."""
    global _active
    _active = None if name is None else _resolve(name)


@contextmanager
def use_backend(name: str):
    global _active
    previous = _active
    _active = _resolve(name)
    try:
        yield _active
    finally:
        _active = previous


# Packing helpers are backend-independent.
pack_words = _numpy.pack_words
unpack_words = _numpy.unpack_words
