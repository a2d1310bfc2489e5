"""Zero table ingestion, the sign-scan oracle, and the empirical density."""

import io

import numpy as np
import pytest

from milnezeta import (
    ZeroTable,
    empirical_density,
    load_zero_table,
    riemann_siegel_theta,
    riemann_zero_density,
    scan_zeros,
    smooth_zero_count,
    z_function,
    zeta_half_line,
)
from milnezeta.errors import DomainError, RangeError, ZeroTableError
from milnezeta.zero_density import DensityKind

# Published ordinates of the first three critical-line zeros.
FIRST_THREE = (14.134725, 21.022040, 25.010858)


# ---------------------------------------------------------------------------
# load_zero_table
# ---------------------------------------------------------------------------


def test_load_three_ordinates():
    table = load_zero_table(b"14.134725\n21.022040\n25.010858\n")
    assert len(table) == 3
    assert table.ordinates[0] == pytest.approx(14.134725)


def test_load_skips_comments_and_blanks():
    table = load_zero_table(b"# comment\n\n14.134725\n")
    assert len(table) == 1


def test_load_monotonicity_error_carries_line():
    with pytest.raises(ZeroTableError, match="line 2"):
        load_zero_table(b"21.0\n14.0\n")


def test_load_parse_error_carries_line():
    with pytest.raises(ZeroTableError, match="line 3"):
        load_zero_table(b"14.1\n21.0\nnot-a-number\n")


def test_load_from_binary_stream():
    table = load_zero_table(io.BytesIO(b"14.134725\n21.022040\n"))
    assert len(table) == 2


def test_table_rejects_small_ordinates():
    with pytest.raises(ZeroTableError):
        ZeroTable(ordinates=np.array([0.5, 14.0]))


# ---------------------------------------------------------------------------
# scan_zeros
# ---------------------------------------------------------------------------


def test_scan_to_thirty_finds_exactly_the_first_three():
    table = scan_zeros(30.0, 0.01)
    assert len(table) == 3
    for got, expected in zip(table.ordinates, FIRST_THREE):
        assert got == pytest.approx(expected, abs=1e-5)


def test_scan_to_hundred_count(scan100):
    assert len(scan100) == 29


def test_scan_matches_published_table_roundtrip(scan100):
    text = "\n".join(f"{t:.10f}" for t in scan100.ordinates)
    again = load_zero_table(text)
    assert len(again) == len(scan100)
    assert np.allclose(again.ordinates, scan100.ordinates, atol=1e-9)


def test_scan_window_and_step_guards():
    with pytest.raises(RangeError):
        scan_zeros(5.0, 0.01)
    with pytest.raises(RangeError):
        scan_zeros(500.0, 0.01)
    with pytest.raises(RangeError):
        scan_zeros(50.0, 0.5)
    with pytest.raises(RangeError):
        scan_zeros(50.0, 0.0)


def test_each_ordinate_is_bracketed_by_a_sign_change(scan100):
    for t in scan100.ordinates:
        assert z_function(t - 1e-4) * z_function(t + 1e-4) < 0.0


def test_counts_track_smooth_counting_function(scan100):
    for T in (20.0, 40.0, 60.0, 80.0, 100.0):
        assert abs(smooth_zero_count(T) - scan100.count_below(T)) <= 1.0


def test_zeta_half_line_against_euler_product_free_reference():
    # Independent slow reference: raw alternating eta sum with Cesaro-style
    # tail averaging, adequate at small t.
    t = 14.0
    s = complex(0.5, t)
    n = 200_000
    ks = np.arange(1, n + 1, dtype=float)
    terms = (-1.0) ** (ks - 1) * ks ** (-s)
    partial = np.cumsum(terms)
    eta_ref = 0.5 * (partial[-1] + partial[-2])
    ref = eta_ref / (1.0 - 2.0 ** (1.0 - s))
    assert zeta_half_line(t) == pytest.approx(ref, abs=5e-6)


def test_theta_odd_and_smooth():
    assert riemann_siegel_theta(20.0) == pytest.approx(-riemann_siegel_theta(-20.0), abs=1e-12)


# ---------------------------------------------------------------------------
# empirical_density
# ---------------------------------------------------------------------------


def test_single_zero_density_is_inverse_window():
    table = ZeroTable(ordinates=np.array([15.0]))
    curve = empirical_density(table, 10.0)
    assert curve.kind is DensityKind.ZETA
    assert curve.values[0] == pytest.approx(0.1)


def test_density_near_hundred_matches_smooth_value(scan160):
    curve = empirical_density(scan160, 20.0)
    i = int(np.argmin(np.abs(curve.epsilons - 100.0)))
    assert curve.values[i] == pytest.approx(0.44, abs=0.10)
    assert curve.values[i] == pytest.approx(
        riemann_zero_density(curve.epsilons[i]), abs=0.10
    )


def test_wider_windows_shrink_residual_variance(scan160):
    # Oracle-measured behaviour on [50, 150]: the variance of the
    # (empirical - n_Z) residual drops by ~5.2x from window 5 to 10 and
    # ~3.7x from 10 to 20 (zeros are rigid, so the decay is faster than
    # the 2x a Poisson process would give).  Windows that reach past the
    # table's ends saturate and are excluded.
    variances = {}
    for w in (5.0, 10.0, 20.0):
        curve = empirical_density(scan160, w)
        mask = (curve.epsilons >= 50.0) & (curve.epsilons <= 150.0)
        resid = curve.values[mask] - np.array(
            [riemann_zero_density(e) for e in curve.epsilons[mask]]
        )
        variances[w] = float(np.var(resid))
    assert variances[5.0] > variances[10.0] > variances[20.0]
    assert variances[5.0] / variances[10.0] > 2.0
    assert variances[10.0] / variances[20.0] > 2.0


def test_empirical_density_guards():
    with pytest.raises(DomainError):
        empirical_density(ZeroTable(ordinates=np.array([15.0])), 0.0)
    with pytest.raises(DomainError):
        empirical_density(ZeroTable(ordinates=np.array([])), 10.0)
