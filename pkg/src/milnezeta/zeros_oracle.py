"""Empirical ground truth: critical-line zeta zeros at desk scale.

Z(t) = exp(i theta(t)) zeta(1/2 + it) is real for real t; its sign
changes locate the zeros.  zeta on the critical line is evaluated through
the alternating (eta) series accelerated with Borwein-style Chebyshev
coefficients, whose truncation error decays like (3 + sqrt(8))**-n even
after absorbing the exp(pi t / 2) growth of the prefactor bound, so the
term count grows only linearly with t.  theta(t) reuses the continued
gamma phase from :mod:`milnezeta.specfun`.

Supported window: 10 <= T_max <= 200 with grid step <= 0.05, enough to
resolve every gap between consecutive zeros at these heights.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import BinaryIO, Iterable, Union

import numpy as np

from . import backend, specfun
from .errors import DomainError, RangeError, ZeroTableError
from .zero_density import DensityCurve, DensityKind

SCAN_T_MIN = 10.0
SCAN_T_MAX = 200.0
SCAN_STEP_MAX = 0.05
_SCAN_T_LO = 5.0  # first zero sits at ~14.13; start the sweep well below

_LN_ACCEL = math.log(3.0 + math.sqrt(8.0))
_LN_PI = math.log(math.pi)


@dataclass(frozen=True)
class ZeroTable:
    """Strictly increasing ordinates t of zeros 1/2 + it, all above 1."""

    ordinates: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.ordinates, dtype=float)
        if t.ndim != 1:
            raise ZeroTableError("ordinates must form a 1-D sequence")
        if t.size and not np.all(t > 1.0):
            raise ZeroTableError("every ordinate must exceed 1")
        if t.size > 1 and not np.all(np.diff(t) > 0.0):
            raise ZeroTableError("ordinates must be strictly increasing")
        object.__setattr__(self, "ordinates", t)

    def __len__(self) -> int:
        return self.ordinates.size

    def count_below(self, T: float) -> int:
        return int(np.searchsorted(self.ordinates, T, side="right"))


def load_zero_table(source: Union[bytes, str, BinaryIO, io.TextIOBase, Iterable[str]]) -> ZeroTable:
    """Parse a zero table: one decimal ordinate per line, '#' comments.

    Ascending order is required; violations and unparsable lines raise
    :class:`ZeroTableError` carrying the line number.
    """
    if isinstance(source, bytes):
        lines = source.decode("utf-8").splitlines()
    elif isinstance(source, str):
        lines = source.splitlines()
    elif hasattr(source, "read"):
        data = source.read()
        if isinstance(data, bytes):
            data = data.decode("utf-8")
        lines = data.splitlines()
    else:
        lines = [str(line) for line in source]
    ordinates = []
    previous = None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            value = float(line)
        except ValueError:
            raise ZeroTableError(f"line {lineno}: cannot parse {line!r}") from None
        if not math.isfinite(value):
            raise ZeroTableError(f"line {lineno}: non-finite ordinate {line!r}")
        if previous is not None and value <= previous:
            raise ZeroTableError(
                f"line {lineno}: ordinate {value!r} not above previous {previous!r}"
            )
        ordinates.append(value)
        previous = value
    return ZeroTable(ordinates=np.array(ordinates))


@lru_cache(maxsize=32)
def _accel_coefficients(n: int) -> tuple[np.ndarray, np.ndarray]:
    """(scaled coefficients, log terms) for the accelerated eta sum.

    d_k = n * sum_{j<=k} (n+j-1)! 4**j / ((n-j)! (2j)!), computed exactly;
    the emitted coefficients are (-1)**k (1 - d_k/d_n) / sqrt(k+1) for the
    critical line sigma = 1/2.
    """
    terms = [
        Fraction(factorial(n + j - 1) * 4**j, factorial(n - j) * factorial(2 * j))
        for j in range(n + 1)
    ]
    d = []
    acc = Fraction(0)
    for j in range(n + 1):
        acc += terms[j]
        d.append(n * acc)
    d_n = d[n]
    ks = np.arange(n, dtype=float)
    coeffs = np.array(
        [((-1) ** k) * float(1 - Fraction(d[k], d_n)) for k in range(n)]
    )
    scaled = coeffs / np.sqrt(ks + 1.0)
    return scaled, np.log(ks + 1.0)


def _term_count(t: float) -> int:
    # Error bound ~ (3+sqrt 8)**-n (1+2|t|) e^(pi |t|/2); aim below 1e-10
    # and quantize upward so the coefficient cache stays small.
    t = abs(t)
    needed = (0.5 * math.pi * t + math.log((1.0 + 2.0 * t) * 1e10)) / _LN_ACCEL
    n = max(24, int(math.ceil(needed)) + 4)
    return ((n + 15) // 16) * 16


def riemann_siegel_theta(t: float) -> float:
    """theta(t) = ArgGamma(1/4 + it/2) - (t/2) ln(pi), continued phase."""
    t = float(t)
    if not math.isfinite(t):
        raise DomainError(f"non-finite t {t!r}")
    return specfun.arg_gamma(complex(0.25, 0.5 * t)) - 0.5 * t * _LN_PI


def zeta_half_line(t: float) -> complex:
    """zeta(1/2 + it) through the accelerated alternating series."""
    t = float(t)
    if not math.isfinite(t):
        raise DomainError(f"non-finite t {t!r}")
    scaled, logs = _accel_coefficients(_term_count(t))
    eta = backend.eta_series(t, scaled, logs)
    s = complex(0.5, t)
    return eta / (1.0 - 2.0 ** (1.0 - s))


def z_function(t: float) -> float:
    """Real rotated zeta Z(t) = exp(i theta(t)) zeta(1/2 + it)."""
    theta = riemann_siegel_theta(t)
    value = complex(math.cos(theta), math.sin(theta)) * zeta_half_line(t)
    return value.real


def _z_many(ts: np.ndarray) -> np.ndarray:
    """Vectorized Z over a grid, grouped by shared term count."""
    out = np.empty(ts.size)
    thetas = np.array([riemann_siegel_theta(t) for t in ts])
    counts = np.array([_term_count(t) for t in ts])
    for n in np.unique(counts):
        mask = counts == n
        chunk = ts[mask]
        scaled, logs = _accel_coefficients(int(n))
        eta = backend.eta_series_many(chunk, scaled, logs)
        s = 0.5 + 1j * chunk
        zeta = eta / (1.0 - 2.0 ** (1.0 - s))
        out[mask] = (np.exp(1j * thetas[mask]) * zeta).real
    return out


def scan_zeros(T_max: float, grid_step: float = 0.01) -> ZeroTable:
    """Ordinates of the sign changes of Z(t) up to T_max.

    Each sign change is bracketed on the grid and refined by bisection to
    an interval of 1e-6.
    """
    T_max = float(T_max)
    grid_step = float(grid_step)
    if not (SCAN_T_MIN <= T_max <= SCAN_T_MAX):
        raise RangeError(
            f"T_max = {T_max!r} outside the supported window [{SCAN_T_MIN}, {SCAN_T_MAX}]"
        )
    if not (0.0 < grid_step <= SCAN_STEP_MAX):
        raise RangeError(
            f"grid_step = {grid_step!r} outside (0, {SCAN_STEP_MAX}]"
        )
    n_pts = int(math.floor((T_max - _SCAN_T_LO) / grid_step)) + 1
    ts = _SCAN_T_LO + grid_step * np.arange(n_pts)
    if ts[-1] < T_max:
        ts = np.append(ts, T_max)
    zs = _z_many(ts)
    ordinates = []
    for i in range(ts.size - 1):
        a, b = float(ts[i]), float(ts[i + 1])
        za, zb = float(zs[i]), float(zs[i + 1])
        if za == 0.0:
            ordinates.append(a)
            continue
        if za * zb < 0.0:
            ordinates.append(_bisect(a, b, za, zb))
    if zs[-1] == 0.0:
        ordinates.append(float(ts[-1]))
    return ZeroTable(ordinates=np.array(ordinates))


def _bisect(a: float, b: float, za: float, zb: float, width: float = 1e-6) -> float:
    while b - a > width:
        mid = 0.5 * (a + b)
        zm = z_function(mid)
        if zm == 0.0:
            return mid
        if za * zm < 0.0:
            b, zb = mid, zm
        else:
            a, za = mid, zm
    return 0.5 * (a + b)


def empirical_density(table: ZeroTable, window: float) -> DensityCurve:
    """Centered sliding-window density, one sample per ordinate.

    values[i] = #{ t_j : |t_j - t_i| <= window/2 } / window.  Windows
    reaching past the table's ends undercount; compare away from the
    boundaries.
    """
    window = float(window)
    if not math.isfinite(window) or window <= 0.0:
        raise DomainError(f"window must be positive, got {window!r}")
    if len(table) == 0:
        raise DomainError("empty zero table")
    t = table.ordinates
    half = 0.5 * window
    lo = np.searchsorted(t, t - half, side="left")
    hi = np.searchsorted(t, t + half, side="right")
    values = (hi - lo) / window
    return DensityCurve(epsilons=t, values=values, kind=DensityKind.ZETA)
