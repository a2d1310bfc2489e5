"""Pure-Python reference implementations of the numerical hot kernels.

The compiled extension ``milnezeta._kernels`` mirrors these routines
statement by statement; whichever is importable gets picked by
:mod:`milnezeta.backend`.  Keeping a plain-Python twin means the package
works on any interpreter and gives the benchmark something to race.

Arguments are assumed pre-validated (finiteness, poles, support windows);
validation lives in the public wrappers, not here.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

# Stirling expansion of log Gamma: sum_n LOGG[n] / w**(2n+1), valid once
# Re w >= SHIFT_RE.  Coefficients are B_{2n}/(2n(2n-1)).
_SHIFT_RE = 12.0

_STIRLING_LOGGAMMA = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
)

# Stirling expansion of digamma: psi(w) ~ log w - 1/(2w) - sum_n PSI[n]/w**(2n+2)
# with coefficients B_{2n}/(2n).
_STIRLING_DIGAMMA = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
    43867.0 / 14364.0,
    -174611.0 / 6600.0,
)

_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)


def log_gamma(z: complex) -> complex:
    """Analytically continued log Gamma on the plane cut along (-inf, 0].

    Upward recurrence pushes Re z past the Stirling threshold; every
    principal log in the shift has positive real part once Re z > 0, and
    the right half-plane is simply connected, so the accumulated phase is
    the continued one (no 2*pi wraps along vertical lines).
    """
    w = complex(z)
    shift = 0.0 + 0.0j
    while w.real < _SHIFT_RE:
        shift += cmath.log(w)
        w += 1.0
    r = 1.0 / w
    r2 = r * r
    ser = _STIRLING_LOGGAMMA[9]
    for c in (
        _STIRLING_LOGGAMMA[8],
        _STIRLING_LOGGAMMA[7],
        _STIRLING_LOGGAMMA[6],
        _STIRLING_LOGGAMMA[5],
        _STIRLING_LOGGAMMA[4],
        _STIRLING_LOGGAMMA[3],
        _STIRLING_LOGGAMMA[2],
        _STIRLING_LOGGAMMA[1],
        _STIRLING_LOGGAMMA[0],
    ):
        ser = ser * r2 + c
    ser *= r
    return (w - 0.5) * cmath.log(w) - w + _HALF_LOG_TWO_PI + ser - shift


def digamma(z: complex) -> complex:
    """Digamma via the recurrence psi(z) = psi(z+1) - 1/z, then Stirling."""
    w = complex(z)
    shift = 0.0 + 0.0j
    while w.real < _SHIFT_RE:
        shift += 1.0 / w
        w += 1.0
    r = 1.0 / w
    r2 = r * r
    ser = _STIRLING_DIGAMMA[9]
    for c in (
        _STIRLING_DIGAMMA[8],
        _STIRLING_DIGAMMA[7],
        _STIRLING_DIGAMMA[6],
        _STIRLING_DIGAMMA[5],
        _STIRLING_DIGAMMA[4],
        _STIRLING_DIGAMMA[3],
        _STIRLING_DIGAMMA[2],
        _STIRLING_DIGAMMA[1],
        _STIRLING_DIGAMMA[0],
    ):
        ser = ser * r2 + c
    ser *= r2
    return cmath.log(w) - 0.5 * r - ser - shift


def eta_series(t: float, scaled_coeffs: np.ndarray, log_terms: np.ndarray) -> complex:
    """Accelerated alternating sum  S(t) = sum_k b_k * (k+1)**(-i t).

    ``scaled_coeffs`` are the acceleration coefficients already divided by
    (k+1)**sigma and ``log_terms`` holds log(k+1); the caller divides by the
    eta-to-zeta prefactor.
    """
    phase = t * log_terms
    re = float(np.dot(scaled_coeffs, np.cos(phase)))
    im = -float(np.dot(scaled_coeffs, np.sin(phase)))
    return complex(re, im)


def eta_series_many(
    ts: np.ndarray, scaled_coeffs: np.ndarray, log_terms: np.ndarray
) -> np.ndarray:
    """Vectorized :func:`eta_series` over a grid of ordinates."""
    phase = np.multiply.outer(ts, log_terms)
    re = np.cos(phase) @ scaled_coeffs
    im = np.sin(phase) @ scaled_coeffs
    return re - 1j * im
