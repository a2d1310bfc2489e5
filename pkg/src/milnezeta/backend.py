"""Selects the compiled kernels at import time, pure Python otherwise.

``milnezeta._kernels`` (Cython) and :mod:`milnezeta._pure` implement the
same routines; this module picks whichever is available and exposes the
choice.  :func:`force` swaps the active set at runtime, which is what the
backend benchmark and the equivalence tests use.  It rebinds module-level
references and is not meant to be called from concurrent threads.
"""

from __future__ import annotations

import contextlib
from typing import Optional

import numpy as np

from . import _ode, _pure
from .errors import DomainError

try:
    from . import _kernels  # type: ignore[attr-defined]

    HAVE_KERNELS = True
except ImportError:
    _kernels = None  # type: ignore[assignment]
    HAVE_KERNELS = False

#: Name of the backend picked at import time: "cython" or "python".
DEFAULT_BACKEND = "cython" if HAVE_KERNELS else "python"

_ACTIVE = DEFAULT_BACKEND

# Integer codes shared with the compiled integrator.
SYSTEM_WAVE = 0
SYSTEM_PINNEY = 1
SYSTEM_COUPLED = 2

RHO_FLOOR = 1e-8
_FLOOR_INDEX = {SYSTEM_WAVE: None, SYSTEM_PINNEY: 0, SYSTEM_COUPLED: 2}


def active_backend() -> str:
    """Name of the backend currently answering calls."""
    return _ACTIVE


def available_backends() -> tuple[str, ...]:
    return ("python", "cython") if HAVE_KERNELS else ("python",)


def _bind(name: str) -> None:
    global _ACTIVE, log_gamma, digamma, eta_series, eta_series_many
    if name == "cython":
        if not HAVE_KERNELS:
            raise DomainError("compiled kernels are not available in this install")
        log_gamma = _kernels.log_gamma
        digamma = _kernels.digamma
        eta_series = _kernels.eta_series
        eta_series_many = _pure.eta_series_many  # grids stay vectorized
    elif name == "python":
        log_gamma = _pure.log_gamma
        digamma = _pure.digamma
        eta_series = _pure.eta_series
        eta_series_many = _pure.eta_series_many
    else:
        raise DomainError(f"unknown backend {name!r}")
    _ACTIVE = name


@contextlib.contextmanager
def force(name: str):
    """Temporarily run every dispatched call on the named backend."""
    previous = _ACTIVE
    _bind(name)
    try:
        yield
    finally:
        _bind(previous)


def coulomb_q(y: float, eps: float, k: float) -> float:
    """Effective-potential bracket of the transformed Coulomb equation."""
    return k * k - k * eps / y + 3.0 / (16.0 * y * y)


def _python_rhs(system: int, eps: float, k: float, q_const: float):
    if system == SYSTEM_WAVE:
        def rhs(y, s):
            return np.array([s[1], -coulomb_q(y, eps, k) * s[0]])
    elif system == SYSTEM_PINNEY:
        def rhs(y, s):
            return np.array([s[1], -coulomb_q(y, eps, k) * s[0] + q_const / s[0] ** 3])
    elif system == SYSTEM_COUPLED:
        def rhs(y, s):
            q = coulomb_q(y, eps, k)
            return np.array([s[1], -q * s[0], s[3], -q * s[2] + q_const / s[2] ** 3])
    else:
        raise DomainError(f"unknown system code {system}")
    return rhs


def integrate_system(
    system: int,
    eps: float,
    k: float,
    q_const: float,
    y0: np.ndarray,
    t0: float,
    t_end: float,
    rtol: float,
    atol: float,
    t_eval: np.ndarray,
    potential=None,
) -> np.ndarray:
    """Integrate one of the standard systems on the active backend.

    A caller-supplied ``potential`` (used by the constant-coefficient test
    cases) always runs on the generic Python integrator; the compiled path
    has the Coulomb bracket inlined.
    """
    floor_index = _FLOOR_INDEX[system]
    if potential is not None:
        if system == SYSTEM_WAVE:
            def rhs(y, s):
                return np.array([s[1], -potential(y) * s[0]])
        elif system == SYSTEM_PINNEY:
            def rhs(y, s):
                return np.array([s[1], -potential(y) * s[0] + q_const / s[0] ** 3])
        else:
            def rhs(y, s):
                q = potential(y)
                return np.array([s[1], -q * s[0], s[3], -q * s[2] + q_const / s[2] ** 3])
        return _ode.dopri5(
            rhs, t0, y0, t_end, rtol, atol, t_eval,
            floor_index=floor_index, floor_value=RHO_FLOOR,
        )
    if _ACTIVE == "cython":
        return _kernels.integrate_system(
            system, eps, k, q_const,
            np.asarray(y0, dtype=float), t0, t_end, rtol, atol,
            np.asarray(t_eval, dtype=float), RHO_FLOOR,
        )
    return _ode.dopri5(
        _python_rhs(system, eps, k, q_const),
        t0, y0, t_end, rtol, atol, t_eval,
        floor_index=floor_index, floor_value=RHO_FLOOR,
    )


# Bound at import.
log_gamma = _pure.log_gamma
digamma = _pure.digamma
eta_series = _pure.eta_series
eta_series_many = _pure.eta_series_many
_bind(DEFAULT_BACKEND)
