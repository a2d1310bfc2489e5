"""Density of critical-line zeta zeros and its repulsive-Coulomb twin.

Two closed-form densities in the reduced spectral parameter eps:

    n_Z(eps) = -ln(pi)/(2 pi) + Re Psi(1/4 + i eps/2) / (2 pi)
    n_C(eps) = -F'(eps)/(2 pi) + Re Psi(1/4 + i eps/2) / (2 pi)

where F(eps) = pi/2 - atan(csch(pi eps)) is the Coulomb phase-shift
function and F'(eps) = pi * sech(pi eps).  Their gap is the constant
ln(pi)/(2 pi) minus an exponentially small sech term.  The smooth
counting function is the exact antiderivative of n_Z.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import specfun
from .errors import DomainError

#: The constant shift between the two densities, ln(pi)/(2 pi).
GAP_CONSTANT = math.log(math.pi) / (2.0 * math.pi)

_LN_PI = math.log(math.pi)
_TWO_PI = 2.0 * math.pi


class DensityKind(enum.Enum):
    ZETA = "zeta"
    COULOMB = "coulomb"
    MILNE = "milne"


@dataclass(frozen=True)
class DensityCurve:
    """A density sampled on a strictly increasing eps grid."""

    epsilons: np.ndarray
    values: np.ndarray
    kind: DensityKind

    def __post_init__(self):
        eps = np.asarray(self.epsilons, dtype=float)
        vals = np.asarray(self.values, dtype=float)
        if eps.ndim != 1 or vals.shape != eps.shape:
            raise DomainError("epsilons and values must be 1-D arrays of equal length")
        if eps.size > 1 and not np.all(np.diff(eps) > 0.0):
            raise DomainError("epsilons must be strictly increasing")
        object.__setattr__(self, "epsilons", eps)
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return self.epsilons.size


def _check_finite(eps: float) -> float:
    eps = float(eps)
    if not math.isfinite(eps):
        raise DomainError(f"non-finite eps {eps!r}")
    return eps


def _check_positive(eps: float) -> float:
    eps = _check_finite(eps)
    if eps <= 0.0:
        raise DomainError(f"eps must be > 0, got {eps!r}")
    return eps


def _sech(x: float) -> float:
    # cosh overflows past ~710; sech is identically 0.0 there in doubles.
    return 0.0 if x > 700.0 else 1.0 / math.cosh(x)


def _csch(x: float) -> float:
    return 0.0 if x > 700.0 else 1.0 / math.sinh(x)


def _re_digamma_quarter(eps: float) -> float:
    return specfun.digamma(complex(0.25, 0.5 * eps)).real


def riemann_zero_density(eps: float) -> float:
    """Mean density of critical-line zeta zeros at ordinate eps.

    Negative for small eps; no sign constraint applies.
    """
    eps = _check_finite(eps)
    return -_LN_PI / _TWO_PI + _re_digamma_quarter(eps) / _TWO_PI


def coulomb_phase_function(eps: float) -> float:
    """Phase shift F(eps) = pi/2 - atan(csch(pi*eps)), increasing on (0, pi/2)."""
    eps = _check_positive(eps)
    return 0.5 * math.pi - math.atan(_csch(math.pi * eps))


def coulomb_phase_derivative(eps: float) -> float:
    """Closed-form derivative F'(eps) = pi * sech(pi*eps)."""
    eps = _check_positive(eps)
    return math.pi * _sech(math.pi * eps)


def coulomb_density(eps: float) -> float:
    """Level density of the repulsive Coulomb continuum problem."""
    eps = _check_positive(eps)
    return -_sech(math.pi * eps) / 2.0 + _re_digamma_quarter(eps) / _TWO_PI


def density_gap(eps: float) -> float:
    """n_C(eps) - n_Z(eps), evaluated in its analytically reduced form.

    The digamma terms cancel exactly, leaving
    ln(pi)/(2 pi) - sech(pi*eps)/2; evaluating the reduced form keeps the
    exponentially small tail representable where the raw subtraction would
    drown in rounding noise.
    """
    eps = _check_positive(eps)
    return GAP_CONSTANT - 0.5 * _sech(math.pi * eps)


def smooth_zero_count(T: float) -> float:
    """Smooth counting function of critical-line zeros up to ordinate T.

    Exact antiderivative of :func:`riemann_zero_density`:
    Im log Gamma(1/4 + iT/2)/pi - T ln(pi)/(2 pi) + 1.  The fluctuating
    part of the true counting function is deliberately absent.
    """
    T = float(T)
    if not math.isfinite(T) or T <= 0.0:
        raise DomainError(f"T must be positive and finite, got {T!r}")
    return (
        specfun.arg_gamma(complex(0.25, 0.5 * T)) / math.pi
        - T * _LN_PI / _TWO_PI
        + 1.0
    )


def density_curve(epsilons, kind: DensityKind) -> DensityCurve:
    """Sample n_Z or n_C on a grid and package it as a curve."""
    eps = np.asarray(epsilons, dtype=float)
    if kind is DensityKind.ZETA:
        vals = np.array([riemann_zero_density(e) for e in eps])
    elif kind is DensityKind.COULOMB:
        vals = np.array([coulomb_density(e) for e in eps])
    else:
        raise DomainError("only ZETA and COULOMB curves are sampled here; "
                          "Milne grids live in milnezeta.milne")
    return DensityCurve(epsilons=eps, values=vals, kind=kind)
