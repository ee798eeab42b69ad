"""Backend dispatch for the hot table/scan kernels.

Two interchangeable implementations exist: a numba-jitted one and a pure
numpy/python fallback.  Selection order: explicit ``name`` argument, then the
``CONTOUR_DUO_BACKEND`` environment variable (``numba`` or ``numpy``), then
numba when importable, else numpy.  Both backends return identical arrays;
``tests/test_kernels.py`` holds them to that.
"""

from __future__ import annotations

import os
from importlib import import_module

_ENV_VAR = "CONTOUR_DUO_BACKEND"
_MODULES = {
    "numba": "contour_duo.kernels.numba_backend",
    "numpy": "contour_duo.kernels.numpy_backend",
}


def available_backends() -> list[str]:
    names = []
    try:
        import numba  # noqa: F401

        names.append("numba")
    except ImportError:
        pass
    names.append("numpy")
    return names


def get_backend(name: str | None = None):
    """Return the kernel module for ``name`` (or the environment default)."""
    if name is None:
        name = os.environ.get(_ENV_VAR, "").strip().lower() or None
    if name is None:
        name = "numba" if "numba" in available_backends() else "numpy"
    if name not in _MODULES:
        raise ValueError(f"unknown kernel backend {name!r}; choose from {sorted(_MODULES)}")
    return import_module(_MODULES[name])
