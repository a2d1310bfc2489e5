"""Milne amplitude, its density 1/rho**2, and the Pinney-equation route.

The closed form builds rho**2 = (alpha*phi1 + beta*phi2)**2 + phi2**2/alpha**2
from the asymptotic sine/cosine pair, with superposition constants fixed at
y0 = 1/(2k), where the logarithm inside the phase vanishes:

    alpha = sin(1/2 + pi/8 + ArgGamma(3/4 + i eps/2))
    beta  = k (1 - eps) cos(1/2 + pi/8 + ArgGamma(3/4 + i eps/2))

beta carries the factor k because the exact derivative of the sine
solution at y0 is k (1 - eps) cos(.); at k = 1 this reduces to the usual
(1 - eps) prefactor.  The independent validation path integrates the
Pinney equation rho'' + Q(y) rho = q/rho**3 directly; the default
constant q = k**2 is the squared large-y Wronskian of the pair, which is
what the closed form's coefficient matrix (det = 1) implies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import backend
from .coulomb_wave import CoulombParams, phase_argument, phase_rate
from .errors import DegenerateAlphaError, DomainError

#: Below this |alpha| the closed form's 1/alpha**2 is treated as singular.
ALPHA_FLOOR = 1e-12

#: Positivity floor for integrated Pinney amplitudes.
RHO_FLOOR = backend.RHO_FLOOR


@dataclass(frozen=True)
class SuperpositionConstants:
    alpha: float
    beta: float


@dataclass(frozen=True)
class MilneSample:
    """One sample of the amplitude: (y, rho, drho/dy, n_m = 1/rho**2)."""

    y: float
    rho: float
    drho: float
    n_m: float

    def __post_init__(self):
        if not (math.isfinite(self.y) and self.y > 0.0):
            raise DomainError(f"y must be positive, got {self.y!r}")
        if not (math.isfinite(self.rho) and self.rho > 0.0):
            raise DomainError(f"rho must be positive, got {self.rho!r}")


@dataclass(frozen=True)
class GridSpec:
    """Cartesian grid specification; defaults span [0.1, 10] x [0.1, 10]."""

    y_min: float = 0.1
    y_max: float = 10.0
    y_count: int = 100
    eps_min: float = 0.1
    eps_max: float = 10.0
    eps_count: int = 100

    def __post_init__(self):
        if not (0.0 < self.y_min < self.y_max) or not (0.0 < self.eps_min < self.eps_max):
            raise DomainError("grid ranges must be positive and ordered")
        if self.y_count < 2 or self.eps_count < 2:
            raise DomainError("grid counts must be >= 2")

    def y_axis(self) -> np.ndarray:
        return np.linspace(self.y_min, self.y_max, self.y_count)

    def eps_axis(self) -> np.ndarray:
        return np.linspace(self.eps_min, self.eps_max, self.eps_count)


@dataclass(frozen=True)
class MilneGrid:
    """Milne density over a grid; values[i, j] = n_M(y_axis[j], eps_axis[i]).

    Rows whose eps hit a degenerate alpha are dropped from the axes and
    recorded in ``skipped_eps`` instead of aborting the evaluation.
    """

    y_axis: np.ndarray
    eps_axis: np.ndarray
    values: np.ndarray
    skipped_eps: tuple[float, ...] = ()

    def __post_init__(self):
        if self.values.shape != (self.eps_axis.size, self.y_axis.size):
            raise DomainError("grid dimensions inconsistent with axes")


def superposition_constants(p: CoulombParams) -> SuperpositionConstants:
    """Constants (alpha, beta) fixed at the log-free point y0 = 1/(2k)."""
    y0 = 0.5 / p.k
    theta0 = phase_argument(y0, p)
    alpha = math.sin(theta0)
    if abs(alpha) < ALPHA_FLOOR:
        raise DegenerateAlphaError(
            f"alpha = {alpha!r} at eps = {p.eps!r}: Milne closed form is singular"
        )
    beta = p.k * (1.0 - p.eps) * math.cos(theta0)
    return SuperpositionConstants(alpha=alpha, beta=beta)


def _density_value(y: float, p: CoulombParams, c: SuperpositionConstants) -> float:
    th = phase_argument(y, p)
    phi1 = math.sin(th)
    phi2 = math.cos(th)
    u = c.alpha * phi1 + c.beta * phi2
    return 1.0 / (u * u + (phi2 * phi2) / (c.alpha * c.alpha))


def milne_density(y: float, p: CoulombParams) -> float:
    """n_M(y, eps) = 1/rho**2 from the closed form; strictly positive."""
    c = superposition_constants(p)
    return _density_value(y, p, c)


def milne_amplitude(y: float, p: CoulombParams) -> MilneSample:
    """Closed-form amplitude rho and its derivative at y."""
    c = superposition_constants(p)
    th = phase_argument(y, p)
    rate = phase_rate(y, p)
    phi1 = math.sin(th)
    phi2 = math.cos(th)
    u = c.alpha * phi1 + c.beta * phi2
    v = phi2
    du = rate * (c.alpha * phi2 - c.beta * phi1)
    dv = -rate * phi1
    rho_sq = u * u + (v * v) / (c.alpha * c.alpha)
    rho = math.sqrt(rho_sq)
    drho = (u * du + v * dv / (c.alpha * c.alpha)) / rho
    return MilneSample(y=y, rho=rho, drho=drho, n_m=1.0 / rho_sq)


def milne_grid(spec: Optional[GridSpec] = None, k: float = 1.0) -> MilneGrid:
    """Row-major closed-form evaluation over the Cartesian grid.

    Deterministic: rows are evaluated in eps order, columns in y order,
    with the same arithmetic as :func:`milne_density` pointwise.
    """
    spec = spec or GridSpec()
    y_axis = spec.y_axis()
    eps_axis = spec.eps_axis()
    rows = []
    kept_eps = []
    skipped = []
    for eps in eps_axis:
        p = CoulombParams(eps=float(eps), k=k)
        try:
            c = superposition_constants(p)
        except DegenerateAlphaError:
            skipped.append(float(eps))
            continue
        rows.append([_density_value(float(y), p, c) for y in y_axis])
        kept_eps.append(float(eps))
    return MilneGrid(
        y_axis=y_axis,
        eps_axis=np.array(kept_eps),
        values=np.array(rows),
        skipped_eps=tuple(skipped),
    )


def integrate_pinney(
    p: CoulombParams,
    y0: float,
    rho0: float,
    drho0: float,
    y_end: float,
    q_const: Optional[float] = None,
    rtol: float = 1e-10,
    atol: float = 1e-12,
    y_eval: Optional[Sequence[float]] = None,
    potential=None,
) -> list[MilneSample]:
    """Adaptive integration of rho'' + Q(y) rho = q_const/rho**3.

    q_const defaults to k**2, the closed form's normalization.  The
    amplitude must stay above RHO_FLOOR or AmplitudeCollapseError is
    raised.  ``potential`` overrides Q for constant-coefficient checks.
    """
    y0 = float(y0)
    y_end = float(y_end)
    if not (math.isfinite(y0) and y0 > 0.0) or not (math.isfinite(y_end) and y_end > y0):
        raise DomainError(f"need 0 < y0 < y_end, got [{y0!r}, {y_end!r}]")
    if not (math.isfinite(rho0) and rho0 > 0.0):
        raise DomainError(f"rho0 must be positive, got {rho0!r}")
    q = p.k * p.k if q_const is None else float(q_const)
    if y_eval is None:
        grid = np.linspace(y0, y_end, 200)
    else:
        grid = np.asarray(y_eval, dtype=float)
        if grid.size == 0:
            raise DomainError("y_eval must be nonempty")
        if np.any(grid < y0) or np.any(grid > y_end):
            raise DomainError("y_eval must lie within [y0, y_end]")
        if grid.size > 1 and not np.all(np.diff(grid) > 0.0):
            raise DomainError("y_eval must be strictly increasing")
    states = backend.integrate_system(
        backend.SYSTEM_PINNEY, p.eps, p.k, q,
        np.array([rho0, drho0]), y0, y_end, rtol, atol, grid,
        potential=potential,
    )
    return [
        MilneSample(
            y=float(gy),
            rho=float(s[0]),
            drho=float(s[1]),
            n_m=1.0 / float(s[0]) ** 2,
        )
        for gy, s in zip(grid, states)
    ]
