"""Gamma-family accuracy: frozen oracle values, identities, error surface."""

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from milnezeta import arg_gamma, digamma, log_gamma
from milnezeta.errors import DomainError, PoleError, RangeError
from milnezeta.specfun import SUPPORTED_IM_MAX

# ---------------------------------------------------------------------------
# In-test oracles, independent of the production Stirling-plus-recurrence path.
# ---------------------------------------------------------------------------


def euler_gamma_oracle(n: int = 4000) -> float:
    """Euler-Mascheroni via harmonic sum with Euler-Maclaurin tail."""
    h = sum(1.0 / k for k in range(1, n + 1))
    return h - math.log(n) - 0.5 / n + 1.0 / (12.0 * n * n)


def log_gamma_product_oracle(z: complex, n: int = 200_000) -> complex:
    """Weierstrass product:  log G(z) = -log z - g z + sum (z/k - log(1+z/k)).

    The tail beyond n is replaced by the midpoint-rule integral of the
    asymptotic term expansion, accurate to ~1/n**3.
    """
    ks = np.arange(1, n + 1, dtype=float)
    series = np.sum(z / ks - np.log(1.0 + z / ks))
    m = n + 0.5
    tail = (z * z) / (2.0 * m) - (z**3) / (6.0 * m * m) + (z**4) / (12.0 * m**3)
    return -np.log(complex(z)) - euler_gamma_oracle() * z + series + tail


def digamma_asymptotic_oracle(z: complex) -> complex:
    """Three-term large-|z| expansion: log z - 1/(2z) - 1/(12 z^2)."""
    return cmath.log(z) - 1.0 / (2.0 * z) - 1.0 / (12.0 * z * z)


EULER_GAMMA = 0.5772156649015329


def test_euler_gamma_oracle_consistency():
    assert abs(euler_gamma_oracle() - EULER_GAMMA) < 1e-12


# ---------------------------------------------------------------------------
# log_gamma
# ---------------------------------------------------------------------------


def test_log_gamma_at_one_is_zero():
    assert abs(log_gamma(1.0 + 0.0j)) < 1e-13


def test_log_gamma_half_closed_form():
    assert log_gamma(0.5 + 0.0j).real == pytest.approx(math.log(math.sqrt(math.pi)), abs=1e-13)
    assert abs(log_gamma(0.5 + 0.0j).imag) < 1e-13


def test_log_gamma_one_plus_i_against_product_oracle():
    got = log_gamma(1.0 + 1.0j)
    oracle = log_gamma_product_oracle(1.0 + 1.0j)
    assert abs(got - oracle) < 1e-9
    # modulus separately from the reflection-type identity |G(1+i)|^2 = pi/sinh(pi)
    assert got.real == pytest.approx(0.5 * math.log(math.pi / math.sinh(math.pi)), abs=1e-12)
    # literal example values with their stated tolerance
    assert got.real == pytest.approx(-0.650918, abs=1e-5)
    assert got.imag == pytest.approx(-0.30164, abs=1e-5)


def test_log_gamma_matches_mpmath_on_the_working_strip():
    mp = pytest.importorskip("mpmath")
    mp.mp.dps = 30
    rng = np.random.default_rng(11)
    for _ in range(200):
        z = complex(rng.uniform(0.05, 10.0), rng.uniform(-500.0, 500.0))
        ref = complex(mp.loggamma(mp.mpc(z.real, z.imag)))
        assert abs(log_gamma(z) - ref) <= 1e-12 * max(1.0, abs(ref))


def test_log_gamma_phase_continuity_along_quarter_line():
    ts = np.arange(0.0, 200.0 + 1e-9, 0.01)
    phases = np.array([log_gamma(complex(0.25, t)).imag for t in ts])
    jumps = np.abs(np.diff(phases))
    assert jumps.max() < 0.5 * math.pi


def test_log_gamma_poles_and_domain():
    with pytest.raises(PoleError):
        log_gamma(0.0 + 0.0j)
    with pytest.raises(PoleError):
        log_gamma(-3.0 + 0.0j)
    with pytest.raises(DomainError):
        log_gamma(-0.5 + 0.0j)
    with pytest.raises(DomainError):
        log_gamma(complex(float("nan"), 0.0))
    with pytest.raises(RangeError):
        log_gamma(complex(0.25, 2.0 * SUPPORTED_IM_MAX))


# ---------------------------------------------------------------------------
# digamma
# ---------------------------------------------------------------------------


def test_digamma_at_one_is_minus_euler_gamma():
    got = digamma(1.0 + 0.0j)
    assert got.real == pytest.approx(-euler_gamma_oracle(), abs=1e-11)
    assert got.real == pytest.approx(-EULER_GAMMA, abs=1e-9)
    assert abs(got.imag) < 1e-13


def test_digamma_at_two_via_recurrence():
    assert digamma(2.0 + 0.0j).real == pytest.approx(1.0 - EULER_GAMMA, abs=1e-9)


def test_digamma_quarter_gauss_closed_form():
    closed = -EULER_GAMMA - 0.5 * math.pi - 3.0 * math.log(2.0)
    got = digamma(0.25 + 0.0j)
    assert got.real == pytest.approx(closed, abs=1e-9)
    assert got.real == pytest.approx(-4.2274535334, abs=1e-9)


def test_digamma_on_first_zero_ordinate_matches_asymptotic_oracle():
    z = complex(0.25, 7.0673626)
    assert digamma(z).real == pytest.approx(digamma_asymptotic_oracle(z).real, abs=1e-4)
    assert digamma(z).real == pytest.approx(1.9553, abs=1e-3)


def test_digamma_matches_mpmath_on_the_working_strip():
    mp = pytest.importorskip("mpmath")
    mp.mp.dps = 30
    rng = np.random.default_rng(13)
    for _ in range(200):
        z = complex(rng.uniform(0.05, 10.0), rng.uniform(-500.0, 500.0))
        ref = complex(mp.digamma(mp.mpc(z.real, z.imag)))
        assert abs(digamma(z) - ref) <= 1e-12 * max(1.0, abs(ref))


def test_digamma_pole_error():
    with pytest.raises(PoleError):
        digamma(-7.0 + 0.0j)


# ---------------------------------------------------------------------------
# arg_gamma
# ---------------------------------------------------------------------------


def test_arg_gamma_real_positive_axis_is_zero():
    assert arg_gamma(0.75 + 0.0j) == pytest.approx(0.0, abs=1e-14)


def test_arg_gamma_one_plus_i():
    assert arg_gamma(1.0 + 1.0j) == pytest.approx(-0.30164, abs=1e-5)
    assert arg_gamma(1.0 + 1.0j) == pytest.approx(
        log_gamma_product_oracle(1.0 + 1.0j).imag, abs=1e-9
    )


def test_arg_gamma_schwarz_reflection():
    for t in (0.3, 1.7, 12.0, 150.0):
        assert arg_gamma(complex(0.75, -t)) == pytest.approx(
            -arg_gamma(complex(0.75, t)), abs=1e-13
        )


def test_arg_gamma_domain_error_left_half_plane():
    with pytest.raises(DomainError):
        arg_gamma(complex(-0.25, 3.0))
    with pytest.raises(DomainError):
        arg_gamma(complex(0.0, 3.0))


# ---------------------------------------------------------------------------
# Spec invariants
# ---------------------------------------------------------------------------


def test_recurrence_sweep_thousand_points(rng):
    for _ in range(1000):
        z = complex(rng.uniform(0.1, 10.0), rng.uniform(-100.0, 100.0))
        lhs = digamma(z + 1.0)
        rhs = digamma(z) + 1.0 / z
        assert abs(lhs - rhs) < 1e-12


def test_conjugate_symmetry_sweep(rng):
    for _ in range(300):
        z = complex(rng.uniform(0.1, 10.0), rng.uniform(-100.0, 100.0))
        assert abs(digamma(z.conjugate()) - digamma(z).conjugate()) < 1e-13


def test_log_gamma_derivative_matches_digamma(rng):
    h = 1e-5
    for _ in range(50):
        z = complex(rng.uniform(0.5, 8.0), rng.uniform(-50.0, 50.0))
        fd = (log_gamma(z + h) - log_gamma(z - h)) / (2.0 * h)
        assert abs(fd - digamma(z)) < 1e-8


@settings(max_examples=80, deadline=None)
@given(
    re=st.floats(0.1, 10.0, allow_nan=False),
    im=st.floats(-100.0, 100.0, allow_nan=False),
)
def test_recurrence_property(re, im):
    z = complex(re, im)
    assert abs(digamma(z + 1.0) - digamma(z) - 1.0 / z) < 1e-12


@settings(max_examples=80, deadline=None)
@given(
    re=st.floats(0.05, 10.0, allow_nan=False),
    im=st.floats(0.0, 200.0, allow_nan=False),
)
def test_arg_gamma_antisymmetry_property(re, im):
    if im == 0.0:
        assert arg_gamma(complex(re, 0.0)) == pytest.approx(0.0, abs=1e-12)
    else:
        assert arg_gamma(complex(re, -im)) == pytest.approx(
            -arg_gamma(complex(re, im)), abs=1e-12
        )
