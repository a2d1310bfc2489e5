"""Adaptive Dormand-Prince 5(4) integrator with dense output.

Generic (callback-based) pure-Python implementation.  The compiled kernel
module carries a specialized twin of the same scheme, with the right-hand
sides of the package's standard systems inlined; both share the Butcher
tableau, the error control, and the quartic dense-output interpolant, so
trajectories agree to integration accuracy regardless of the backend.
"""

from __future__ import annotations

import math
from typing import Callable, Optional

import numpy as np

from .errors import AmplitudeCollapseError, ToleranceError

# Dormand-Prince 5(4) tableau.
_C = (0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0)
_A = (
    (),
    (1.0 / 5.0,),
    (3.0 / 40.0, 9.0 / 40.0),
    (44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0),
    (19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0),
    (9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0),
)
_B = (35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0)
# b - b_hat, with the 7th entry weighting the FSAL stage.
_E = (
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
)
# Dense-output weights for the quartic term of the continuous extension.
_D = (
    -12715105075.0 / 11282082432.0,
    0.0,
    87487479700.0 / 32700410799.0,
    -10690763975.0 / 1880347072.0,
    701980252875.0 / 199316789632.0,
    -1453857185.0 / 822651844.0,
    69997945.0 / 29380423.0,
)

_SAFETY = 0.9
_MIN_FACTOR = 0.2
_MAX_FACTOR = 5.0
_MAX_STEPS = 2_000_000


def _error_norm(err: np.ndarray, y0: np.ndarray, y1: np.ndarray, rtol: float, atol: float) -> float:
    scale = atol + rtol * np.maximum(np.abs(y0), np.abs(y1))
    return float(np.sqrt(np.mean((err / scale) ** 2)))


def _initial_step(
    f: Callable[[float, np.ndarray], np.ndarray],
    t0: float,
    y0: np.ndarray,
    f0: np.ndarray,
    direction: float,
    rtol: float,
    atol: float,
) -> float:
    scale = atol + rtol * np.abs(y0)
    d0 = float(np.sqrt(np.mean((y0 / scale) ** 2)))
    d1 = float(np.sqrt(np.mean((f0 / scale) ** 2)))
    h0 = 1e-6 if d0 < 1e-5 or d1 < 1e-5 else 0.01 * d0 / d1
    y1 = y0 + h0 * direction * f0
    f1 = f(t0 + h0 * direction, y1)
    d2 = float(np.sqrt(np.mean(((f1 - f0) / scale) ** 2))) / h0
    if max(d1, d2) <= 1e-15:
        h1 = max(1e-6, h0 * 1e-3)
    else:
        h1 = (0.01 / max(d1, d2)) ** 0.2
    return min(100.0 * h0, h1)


def dopri5(
    f: Callable[[float, np.ndarray], np.ndarray],
    t0: float,
    y0: np.ndarray,
    t_end: float,
    rtol: float,
    atol: float,
    t_eval: np.ndarray,
    floor_index: Optional[int] = None,
    floor_value: float = 0.0,
) -> np.ndarray:
    """Integrate y' = f(t, y) and return the states on ``t_eval``.

    ``t_eval`` must run monotonically from t0 towards t_end (either
    direction).  When ``floor_index`` is given, the corresponding component
    must stay above ``floor_value`` at accepted steps and dense samples,
    otherwise :class:`AmplitudeCollapseError` is raised.
    """
    y = np.asarray(y0, dtype=float).copy()
    dim = y.size
    t_eval = np.asarray(t_eval, dtype=float)
    out = np.empty((t_eval.size, dim))
    direction = 1.0 if t_end >= t0 else -1.0
    span = abs(t_end - t0)
    if span == 0.0:
        out[:] = y
        return out

    t = t0
    k1 = f(t, y)
    h = min(_initial_step(f, t0, y, k1, direction, rtol, atol), span)
    next_eval = 0
    n_eval = t_eval.size
    stages = [np.empty(dim) for _ in range(7)]
    max_factor = _MAX_FACTOR

    # Emit any sample sitting exactly at the start.
    while next_eval < n_eval and t_eval[next_eval] == t0:
        out[next_eval] = y
        next_eval += 1

    for _ in range(_MAX_STEPS):
        if direction * (t - t_end) >= 0.0:
            break
        h = min(h, abs(t_end - t))
        if h < 1e-14 * max(1.0, abs(t)):
            raise ToleranceError(
                f"step size underflow at t={t!r}; requested rtol={rtol!r} not achievable"
            )
        hs = h * direction
        stages[0] = k1
        failed = False
        for i in range(1, 6):
            dy = _A[i][0] * stages[0]
            for j in range(1, i):
                dy = dy + _A[i][j] * stages[j]
            stages[i] = f(t + _C[i] * hs, y + hs * dy)
        dy = _B[0] * stages[0]
        for j in range(2, 6):
            dy = dy + _B[j] * stages[j]
        y_new = y + hs * dy
        t_new = t + hs
        stages[6] = f(t_new, y_new)
        if not (np.all(np.isfinite(y_new)) and np.all(np.isfinite(stages[6]))):
            failed = True
            norm = np.inf
        else:
            err = _E[0] * stages[0]
            for j in range(2, 7):
                err = err + _E[j] * stages[j]
            err = hs * err
            norm = _error_norm(err, y, y_new, rtol, atol)
            failed = norm > 1.0

        if failed:
            factor = _MIN_FACTOR if not math.isfinite(norm) else max(
                _MIN_FACTOR, _SAFETY * norm ** -0.2
            )
            h *= factor
            max_factor = 1.0
            continue

        if floor_index is not None and y_new[floor_index] <= floor_value:
            raise AmplitudeCollapseError(
                f"amplitude fell to {y_new[floor_index]!r} at t={t_new!r}"
            )

        # Dense output over [t, t_new] (Hairer's continuous extension).
        if next_eval < n_eval and direction * (t_eval[next_eval] - t_new) <= 0.0:
            ydiff = y_new - y
            bspl = hs * stages[0] - ydiff
            r3 = bspl
            r4 = ydiff - hs * stages[6] - bspl
            r5 = _D[0] * stages[0]
            for j in range(2, 7):
                r5 = r5 + _D[j] * stages[j]
            r5 = hs * r5
            while next_eval < n_eval and direction * (t_eval[next_eval] - t_new) <= 0.0:
                s = (t_eval[next_eval] - t) / hs
                s1 = 1.0 - s
                y_s = y + s * (ydiff + s1 * (r3 + s * (r4 + s1 * r5)))
                if floor_index is not None and y_s[floor_index] <= floor_value:
                    raise AmplitudeCollapseError(
                        f"amplitude fell to {y_s[floor_index]!r} at t={t_eval[next_eval]!r}"
                    )
                out[next_eval] = y_s
                next_eval += 1

        t = t_new
        y = y_new
        k1 = stages[6]
        if norm == 0.0:
            factor = max_factor
        else:
            factor = min(max_factor, max(_MIN_FACTOR, _SAFETY * norm ** -0.2))
        h *= factor
        max_factor = _MAX_FACTOR
    else:
        raise ToleranceError(f"integration exceeded {_MAX_STEPS} steps")

    # Samples at (or within rounding of) the final time.
    while next_eval < n_eval:
        if abs(t_eval[next_eval] - t_end) > 1e-10 * max(1.0, abs(t_end)):
            raise ValueError("t_eval extends beyond the integration interval")
        out[next_eval] = y
        next_eval += 1
    return out
