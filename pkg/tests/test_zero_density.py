"""Density formulas, their gap, and the smooth counting function."""

import math

import numpy as np
import pytest

from milnezeta import (
    GAP_CONSTANT,
    DensityCurve,
    DensityKind,
    coulomb_density,
    coulomb_phase_derivative,
    coulomb_phase_function,
    density_curve,
    density_gap,
    riemann_zero_density,
    smooth_zero_count,
)
from milnezeta.errors import DomainError

EULER_GAMMA = 0.5772156649015329


def theta_asymptotic(t: float) -> float:
    """Riemann-Siegel theta by its large-t expansion (test oracle)."""
    return (
        0.5 * t * math.log(0.5 * t / math.pi)
        - 0.5 * t
        - 0.125 * math.pi
        + 1.0 / (48.0 * t)
        + 7.0 / (5760.0 * t**3)
    )


# ---------------------------------------------------------------------------
# riemann_zero_density
# ---------------------------------------------------------------------------


def test_density_at_zero_from_gauss_closed_form():
    psi_quarter = -EULER_GAMMA - 0.5 * math.pi - 3.0 * math.log(2.0)
    expected = -math.log(math.pi) / (2 * math.pi) + psi_quarter / (2 * math.pi)
    assert riemann_zero_density(0.0) == pytest.approx(expected, abs=1e-12)
    assert riemann_zero_density(0.0) == pytest.approx(-0.855010, abs=1e-5)


def test_density_at_first_zero_ordinate():
    assert riemann_zero_density(14.134725) == pytest.approx(0.1290, abs=5e-4)


def test_density_large_eps_asymptote():
    asym = math.log(1000.0 / (2 * math.pi)) / (2 * math.pi)
    assert riemann_zero_density(1000.0) == pytest.approx(asym, abs=1e-4)
    assert riemann_zero_density(1000.0) == pytest.approx(0.80690, abs=1e-4)


def test_density_rejects_non_finite():
    with pytest.raises(DomainError):
        riemann_zero_density(float("inf"))


def test_asymptote_approach_is_monotone():
    eps = np.geomspace(50.0, 1000.0, 25)
    gaps = [
        abs(riemann_zero_density(e) - math.log(e / (2 * math.pi)) / (2 * math.pi))
        for e in eps
    ]
    assert all(a > b for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] < 1e-3


# ---------------------------------------------------------------------------
# phase-shift function and derivative
# ---------------------------------------------------------------------------


def test_phase_function_small_eps_limit():
    assert coulomb_phase_function(1e-9) == pytest.approx(0.0, abs=1e-6)


def test_phase_function_at_one():
    expected = 0.5 * math.pi - math.atan(1.0 / math.sinh(math.pi))
    assert coulomb_phase_function(1.0) == pytest.approx(expected, abs=1e-14)
    assert coulomb_phase_function(1.0) == pytest.approx(1.484423, abs=1e-5)


def test_phase_function_large_eps_limit():
    assert coulomb_phase_function(500.0) == pytest.approx(0.5 * math.pi, abs=1e-14)


def test_phase_function_monotone_increasing():
    # Strictly increasing until the csch term saturates below one ulp of
    # pi/2 (around eps ~ 12 in doubles), non-decreasing beyond.
    eps = np.linspace(0.01, 8.0, 160)
    vals = [coulomb_phase_function(e) for e in eps]
    assert all(a < b for a, b in zip(vals, vals[1:]))
    assert all(0.0 < v < 0.5 * math.pi for v in vals)
    tail = [coulomb_phase_function(e) for e in np.linspace(8.0, 20.0, 40)]
    assert all(a <= b for a, b in zip(tail, tail[1:]))
    assert all(v <= 0.5 * math.pi for v in tail)


def test_phase_derivative_small_eps_limit():
    assert coulomb_phase_derivative(1e-12) == pytest.approx(math.pi, abs=1e-9)


def test_phase_derivative_at_one_and_ten():
    assert coulomb_phase_derivative(1.0) == pytest.approx(math.pi / math.cosh(math.pi), abs=1e-14)
    assert coulomb_phase_derivative(1.0) == pytest.approx(0.271015, abs=1e-5)
    assert coulomb_phase_derivative(10.0) < 1e-12


def test_phase_derivative_matches_finite_differences():
    h = 1e-6
    for e in (0.05, 0.3, 1.0, 2.5, 5.0):
        fd = (coulomb_phase_function(e + h) - coulomb_phase_function(e - h)) / (2 * h)
        assert coulomb_phase_derivative(e) == pytest.approx(fd, abs=1e-8)


def test_phase_functions_reject_nonpositive_eps():
    for f in (coulomb_phase_function, coulomb_phase_derivative, coulomb_density, density_gap):
        with pytest.raises(DomainError):
            f(0.0)
        with pytest.raises(DomainError):
            f(-1.0)


# ---------------------------------------------------------------------------
# coulomb_density and the gap
# ---------------------------------------------------------------------------


def test_coulomb_density_small_eps_limit():
    psi_quarter = -EULER_GAMMA - 0.5 * math.pi - 3.0 * math.log(2.0)
    expected = -0.5 + psi_quarter / (2 * math.pi)
    assert coulomb_density(1e-9) == pytest.approx(expected, abs=1e-6)
    assert coulomb_density(1e-9) == pytest.approx(-1.172823, abs=1e-5)


def test_gap_at_one():
    assert density_gap(1.0) == pytest.approx(0.1390559, abs=1e-6)
    assert coulomb_density(1.0) - riemann_zero_density(1.0) == pytest.approx(
        density_gap(1.0), abs=1e-12
    )


def test_gap_at_ten_is_the_constant():
    assert coulomb_density(10.0) == pytest.approx(
        riemann_zero_density(10.0) + GAP_CONSTANT, abs=1e-12
    )


def test_gap_limit_constant_matches_ln_pi_over_two_pi():
    assert GAP_CONSTANT == pytest.approx(math.log(math.pi) / (2 * math.pi), abs=0.0)
    assert density_gap(200.0) == GAP_CONSTANT


def test_gap_identity_random_sweep(rng):
    for _ in range(200):
        e = rng.uniform(0.05, 20.0)
        closed = GAP_CONSTANT - 0.5 / math.cosh(math.pi * e)
        assert abs(density_gap(e) - closed) < 1e-12
        assert abs((coulomb_density(e) - riemann_zero_density(e)) - closed) < 1e-12


def test_gap_exponential_decay_bound():
    for e in np.linspace(1.0, 20.0, 77):
        assert abs(density_gap(e) - GAP_CONSTANT) <= 2.0 * math.exp(-math.pi * e)


# ---------------------------------------------------------------------------
# smooth_zero_count
# ---------------------------------------------------------------------------


def test_smooth_count_values_from_theta_oracle():
    for t, literal in ((100.0, 29.0024), (50.0, 9.4233), (14.0, 0.4328)):
        oracle = theta_asymptotic(t) / math.pi + 1.0
        assert smooth_zero_count(t) == pytest.approx(oracle, abs=1e-6)
        assert smooth_zero_count(t) == pytest.approx(literal, abs=1e-3)


def test_smooth_count_frozen_reference_values():
    assert smooth_zero_count(100.0) == pytest.approx(29.002409902271817, abs=1e-9)
    assert smooth_zero_count(50.0) == pytest.approx(9.422914422060699, abs=1e-9)


def test_smooth_count_derivative_is_density():
    h = 1e-5
    for t in np.linspace(1.0, 200.0, 41):
        fd = (smooth_zero_count(t + h) - smooth_zero_count(t - h)) / (2 * h)
        assert abs(fd - riemann_zero_density(t)) < 1e-7


def test_smooth_count_monotone_above_ten():
    ts = np.linspace(10.0, 300.0, 400)
    vals = [smooth_zero_count(t) for t in ts]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_smooth_count_against_quadrature_of_density():
    integrate = pytest.importorskip("scipy.integrate")
    val, err = integrate.quad(riemann_zero_density, 10.0, 100.0, limit=200)
    assert smooth_zero_count(100.0) - smooth_zero_count(10.0) == pytest.approx(
        val, abs=max(1e-9, 10 * err)
    )


def test_smooth_count_domain():
    with pytest.raises(DomainError):
        smooth_zero_count(0.0)
    with pytest.raises(DomainError):
        smooth_zero_count(-3.0)


# ---------------------------------------------------------------------------
# DensityCurve plumbing
# ---------------------------------------------------------------------------


def test_density_curve_sampling_consistency():
    eps = np.linspace(0.5, 5.0, 10)
    zc = density_curve(eps, DensityKind.ZETA)
    cc = density_curve(eps, DensityKind.COULOMB)
    assert zc.kind is DensityKind.ZETA and cc.kind is DensityKind.COULOMB
    assert zc.values[3] == riemann_zero_density(eps[3])
    assert cc.values[3] == coulomb_density(eps[3])
    assert len(zc) == 10


def test_density_curve_validation():
    with pytest.raises(DomainError):
        DensityCurve(epsilons=np.array([1.0, 1.0]), values=np.array([0.0, 0.0]),
                     kind=DensityKind.ZETA)
    with pytest.raises(DomainError):
        DensityCurve(epsilons=np.array([1.0, 2.0]), values=np.array([0.0]),
                     kind=DensityKind.ZETA)
    with pytest.raises(DomainError):
        density_curve(np.array([1.0, 2.0]), DensityKind.MILNE)
