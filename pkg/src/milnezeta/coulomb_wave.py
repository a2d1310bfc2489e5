"""The transformed repulsive-Coulomb equation and its solutions.

In the coordinate y = x**2 the radial problem collapses to

    phi'' + [k**2 - k*eps/y + 3/(16 y**2)] phi = 0,

with the unconventional partial wave number l_r = -1/4 baked into the
centrifugal 3/16 coefficient.  The module provides the effective
potential, the large-y phase and its sine/cosine pair

    phi1 = sin(theta), phi2 = cos(theta),
    theta(y) = k y - (eps/2) ln(2 k y) - l_r pi/2 + ArgGamma(l_r + 1 + i eps/2),

direct adaptive integration seeded by the Frobenius series at the y = 0
singular point (indicial exponents 3/4 and 1/4), and Wronskian
diagnostics.  Note the sine/cosine pair is asymptotic only: its Wronskian
-(k - eps/(2 y)) is y-dependent, unlike any exact solution pair.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import backend, specfun
from .errors import AbscissaMismatchError, DomainError


@dataclass(frozen=True)
class CoulombParams:
    """Reduced parameters (eps, k, l_r) shared by every formula here."""

    eps: float
    k: float = 1.0
    l_r: float = -0.25

    def __post_init__(self):
        for name in ("eps", "k", "l_r"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise DomainError(f"{name} must be finite, got {v!r}")
            object.__setattr__(self, name, v)
        if self.k <= 0.0:
            raise DomainError(f"k must be > 0, got {self.k!r}")


@dataclass(frozen=True)
class WaveSample:
    """One sample (y, phi, dphi/dy) of a solution."""

    y: float
    phi: float
    dphi: float

    def __post_init__(self):
        if not (math.isfinite(self.y) and self.y > 0.0):
            raise DomainError(f"y must be positive, got {self.y!r}")


class Branch(enum.Enum):
    """Frobenius branches at the y = 0 singular point, by indicial exponent."""

    REGULAR = 0.75
    SINGULAR = 0.25


def _check_y(y: float) -> float:
    y = float(y)
    if not math.isfinite(y) or y <= 0.0:
        raise DomainError(f"y must be positive, got {y!r}")
    return y


def effective_potential(y: float, p: CoulombParams) -> float:
    """Bracket Q(y) = k**2 - k*eps/y + 3/(16 y**2) of the wave equation."""
    y = _check_y(y)
    return backend.coulomb_q(y, p.eps, p.k)


def phase_argument(y: float, p: CoulombParams) -> float:
    """Large-y phase theta(y); the log vanishes at y = 1/(2k)."""
    y = _check_y(y)
    return (
        p.k * y
        - 0.5 * p.eps * math.log(2.0 * p.k * y)
        - 0.5 * p.l_r * math.pi
        + specfun.arg_gamma(complex(p.l_r + 1.0, 0.5 * p.eps))
    )


def phase_rate(y: float, p: CoulombParams) -> float:
    """d theta/dy = k - eps/(2y)."""
    y = _check_y(y)
    return p.k - 0.5 * p.eps / y


def asymptotic_pair(y: float, p: CoulombParams) -> tuple[float, float]:
    """(phi1, phi2) = (sin theta, cos theta) at y."""
    th = phase_argument(y, p)
    return math.sin(th), math.cos(th)


def asymptotic_samples(y: float, p: CoulombParams) -> tuple[WaveSample, WaveSample]:
    """The asymptotic pair with its exact y-derivatives, as samples."""
    th = phase_argument(y, p)
    rate = phase_rate(y, p)
    s, c = math.sin(th), math.cos(th)
    return (
        WaveSample(y=y, phi=s, dphi=rate * c),
        WaveSample(y=y, phi=c, dphi=-rate * s),
    )


def frobenius_coefficients(p: CoulombParams, branch: Branch, terms: int) -> np.ndarray:
    """Series coefficients c_0..c_{terms-1} of phi = y**s * sum c_n y**n.

    Recurrence: c_n * n*(n + 2s - 1) = k*eps*c_{n-1} - k**2*c_{n-2},
    with s the indicial exponent (3/4 regular, 1/4 singular).
    """
    if terms < 1:
        raise DomainError("need at least one series term")
    s = branch.value
    c = np.zeros(terms)
    c[0] = 1.0
    for n in range(1, terms):
        rhs = p.k * p.eps * c[n - 1]
        if n >= 2:
            rhs -= p.k * p.k * c[n - 2]
        c[n] = rhs / (n * (n + 2.0 * s - 1.0))
    return c


def frobenius_start(
    y: float, p: CoulombParams, branch: Branch, terms: int = 2
) -> tuple[float, float]:
    """(phi, dphi) of the truncated Frobenius series at small y."""
    y = _check_y(y)
    s = branch.value
    c = frobenius_coefficients(p, branch, terms)
    val = 0.0
    dval = 0.0
    for n in range(terms - 1, -1, -1):
        val = val * y + c[n]
        dval = dval * y + (s + n) * c[n]
    return (y**s) * val, (y ** (s - 1.0)) * dval


def integrate_schrodinger(
    p: CoulombParams,
    y_start: float,
    y_end: float,
    branch: Branch,
    rtol: float = 1e-10,
    atol: float = 1e-12,
    y_eval: Optional[Sequence[float]] = None,
    series_terms: int = 2,
) -> list[WaveSample]:
    """Integrate the wave equation from a Frobenius start at y_start.

    y_start must be small enough that the truncated series error is below
    the requested tolerance (the default two terms want y_start <= 1e-3
    for moderate eps).  Samples are produced on ``y_eval`` (default: 200
    points spanning [y_start, y_end]) by dense interpolation, independent
    of the internal adaptive steps.
    """
    y_start = _check_y(y_start)
    y_end = _check_y(y_end)
    if y_end <= y_start:
        raise DomainError(f"need y_start < y_end, got [{y_start!r}, {y_end!r}]")
    if y_eval is None:
        grid = np.linspace(y_start, y_end, 200)
    else:
        grid = np.asarray(y_eval, dtype=float)
        if grid.size == 0:
            raise DomainError("y_eval must be nonempty")
        if np.any(grid < y_start) or np.any(grid > y_end):
            raise DomainError("y_eval must lie within [y_start, y_end]")
        if grid.size > 1 and not np.all(np.diff(grid) > 0.0):
            raise DomainError("y_eval must be strictly increasing")
    phi0, dphi0 = frobenius_start(y_start, p, branch, series_terms)
    states = backend.integrate_system(
        backend.SYSTEM_WAVE, p.eps, p.k, 0.0,
        np.array([phi0, dphi0]), y_start, y_end, rtol, atol, grid,
    )
    return [
        WaveSample(y=float(gy), phi=float(s[0]), dphi=float(s[1]))
        for gy, s in zip(grid, states)
    ]


def wronskian(a: WaveSample, b: WaveSample) -> float:
    """phi_a * dphi_b - dphi_a * phi_b, requiring a shared abscissa."""
    if a.y != b.y:
        raise AbscissaMismatchError(f"samples at different y: {a.y!r} vs {b.y!r}")
    return a.phi * b.dphi - a.dphi * b.phi
