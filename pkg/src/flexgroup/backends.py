"""Kernel backend selection.

The hot loops (subgroup closure, cyclic membership, associativity scan,
cycliciser) exist twice: numba @njit kernels and a pure-numpy fallback.
The default backend is numba when it imports, and can be forced with the
``FLEXGROUP_BACKEND`` environment variable ("numba" or "numpy") or at
runtime with :func:`set_backend` / :func:`use_backend`.
"""

from __future__ import annotations

import contextlib
import os

from . import kernels_numpy

_BACKENDS: dict[str, object] = {"numpy": kernels_numpy}
_active: str | None = None

try:
    from . import kernels_numba

    _BACKENDS["numba"] = kernels_numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    pass


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def _resolve_default() -> str:
    env = os.environ.get("FLEXGROUP_BACKEND", "").strip().lower()
    if env:
        if env not in _BACKENDS:
            raise ValueError(
                f"FLEXGROUP_BACKEND={env!r} is not one of {available_backends()}"
            )
        return env
    return "numba" if "numba" in _BACKENDS else "numpy"


def get_backend() -> str:
    global _active
    if _active is None:
        _active = _resolve_default()
    return _active


def set_backend(name: str) -> None:
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}; have {available_backends()}")
    _active = name


@contextlib.contextmanager
def use_backend(name: str):
    previous = get_backend()
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


def _kernels():
    return _BACKENDS[get_backend()]


# Thin delegating wrappers so call sites pick up runtime backend switches.

def closure_mask(table, seeds, identity):
    return _kernels().closure_mask(table, seeds, identity)


def closure_extend(table, members, new_elt):
    return _kernels().closure_extend(table, members, new_elt)


def light_violation(table, gens):
    return _kernels().light_violation(table, gens)


def cyclic_membership(table, identity):
    return _kernels().cyclic_membership(table, identity)


def element_orders(table, identity):
    return _kernels().element_orders(table, identity)


def pair_cyclic_matrix(mem):
    return _kernels().pair_cyclic_matrix(mem)


def cycliciser_mask(mem):
    return _kernels().cycliciser_mask(mem)
