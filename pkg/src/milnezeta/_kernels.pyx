# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the hot kernels in ``milnezeta._pure`` and ``milnezeta._ode``.

Same Stirling coefficients, same Dormand-Prince tableau, same step
control; only the inner loops are C.  The package falls back to the pure
implementations when this extension is absent, so nothing here may change
observable semantics.
"""

import numpy as np

from .errors import AmplitudeCollapseError, ToleranceError

cdef extern from "complex.h" nogil:
    double complex clog(double complex)
    double creal(double complex)
    double cimag(double complex)

from libc.math cimport cos, sin, sqrt, fabs, fmax, fmin, pow, isfinite, INFINITY


cdef double SHIFT_RE = 12.0
cdef double HALF_LOG_TWO_PI = 0.9189385332046727

cdef double[10] LOGG
LOGG[0] = 1.0 / 12.0
LOGG[1] = -1.0 / 360.0
LOGG[2] = 1.0 / 1260.0
LOGG[3] = -1.0 / 1680.0
LOGG[4] = 1.0 / 1188.0
LOGG[5] = -691.0 / 360360.0
LOGG[6] = 1.0 / 156.0
LOGG[7] = -3617.0 / 122400.0
LOGG[8] = 43867.0 / 244188.0
LOGG[9] = -174611.0 / 125400.0

cdef double[10] PSI
PSI[0] = 1.0 / 12.0
PSI[1] = -1.0 / 120.0
PSI[2] = 1.0 / 252.0
PSI[3] = -1.0 / 240.0
PSI[4] = 1.0 / 132.0
PSI[5] = -691.0 / 32760.0
PSI[6] = 1.0 / 12.0
PSI[7] = -3617.0 / 8160.0
PSI[8] = 43867.0 / 14364.0
PSI[9] = -174611.0 / 6600.0


cdef double complex _log_gamma(double complex z) nogil:
    cdef double complex w = z
    cdef double complex shift = 0.0
    cdef double complex r, r2, ser
    cdef int i
    while creal(w) < SHIFT_RE:
        shift = shift + clog(w)
        w = w + 1.0
    r = 1.0 / w
    r2 = r * r
    ser = LOGG[9]
    for i in range(8, -1, -1):
        ser = ser * r2 + LOGG[i]
    ser = ser * r
    return (w - 0.5) * clog(w) - w + HALF_LOG_TWO_PI + ser - shift


cdef double complex _digamma(double complex z) nogil:
    cdef double complex w = z
    cdef double complex shift = 0.0
    cdef double complex r, r2, ser
    cdef int i
    while creal(w) < SHIFT_RE:
        shift = shift + 1.0 / w
        w = w + 1.0
    r = 1.0 / w
    r2 = r * r
    ser = PSI[9]
    for i in range(8, -1, -1):
        ser = ser * r2 + PSI[i]
    ser = ser * r2
    return clog(w) - 0.5 * r - ser - shift


def log_gamma(double complex z):
    """Compiled analytically continued log Gamma (pre-validated input)."""
    return _log_gamma(z)


def digamma(double complex z):
    """Compiled digamma via recurrence plus Stirling series."""
    return _digamma(z)


def eta_series(double t, double[::1] scaled_coeffs, double[::1] log_terms):
    """Accelerated alternating sum  sum_k b_k * (k+1)**(-i t)."""
    cdef Py_ssize_t n = scaled_coeffs.shape[0]
    cdef Py_ssize_t i
    cdef double re = 0.0, im = 0.0, phase
    with nogil:
        for i in range(n):
            phase = t * log_terms[i]
            re += scaled_coeffs[i] * cos(phase)
            im -= scaled_coeffs[i] * sin(phase)
    return complex(re, im)


# ---------------------------------------------------------------------------
# Dormand-Prince 5(4) with the Coulomb right-hand sides inlined.
# ---------------------------------------------------------------------------

cdef double C2 = 1.0 / 5.0
cdef double C3 = 3.0 / 10.0
cdef double C4 = 4.0 / 5.0
cdef double C5 = 8.0 / 9.0

cdef double A21 = 1.0 / 5.0
cdef double A31 = 3.0 / 40.0, A32 = 9.0 / 40.0
cdef double A41 = 44.0 / 45.0, A42 = -56.0 / 15.0, A43 = 32.0 / 9.0
cdef double A51 = 19372.0 / 6561.0, A52 = -25360.0 / 2187.0
cdef double A53 = 64448.0 / 6561.0, A54 = -212.0 / 729.0
cdef double A61 = 9017.0 / 3168.0, A62 = -355.0 / 33.0
cdef double A63 = 46732.0 / 5247.0, A64 = 49.0 / 176.0, A65 = -5103.0 / 18656.0

cdef double B1 = 35.0 / 384.0, B3 = 500.0 / 1113.0, B4 = 125.0 / 192.0
cdef double B5 = -2187.0 / 6784.0, B6 = 11.0 / 84.0

cdef double E1 = 71.0 / 57600.0, E3 = -71.0 / 16695.0, E4 = 71.0 / 1920.0
cdef double E5 = -17253.0 / 339200.0, E6 = 22.0 / 525.0, E7 = -1.0 / 40.0

cdef double D1 = -12715105075.0 / 11282082432.0
cdef double D3 = 87487479700.0 / 32700410799.0
cdef double D4 = -10690763975.0 / 1880347072.0
cdef double D5 = 701980252875.0 / 199316789632.0
cdef double D6 = -1453857185.0 / 822651844.0
cdef double D7 = 69997945.0 / 29380423.0

cdef double SAFETY = 0.9
cdef double MIN_FACTOR = 0.2
cdef double MAX_FACTOR = 5.0
cdef long MAX_STEPS = 2000000


cdef inline void _rhs(int system, double yv, double* s, double* out,
                      double eps, double k, double q_const) nogil:
    cdef double q = k * k - k * eps / yv + 3.0 / (16.0 * yv * yv)
    if system == 0:
        out[0] = s[1]
        out[1] = -q * s[0]
    elif system == 1:
        out[0] = s[1]
        out[1] = -q * s[0] + q_const / (s[0] * s[0] * s[0])
    else:
        out[0] = s[1]
        out[1] = -q * s[0]
        out[2] = s[3]
        out[3] = -q * s[2] + q_const / (s[2] * s[2] * s[2])


cdef inline double _err_norm(double* err, double* y0, double* y1,
                             int dim, double rtol, double atol) nogil:
    cdef double acc = 0.0, sc
    cdef int i
    for i in range(dim):
        sc = atol + rtol * fmax(fabs(y0[i]), fabs(y1[i]))
        acc += (err[i] / sc) * (err[i] / sc)
    return sqrt(acc / dim)


def integrate_system(int system, double eps, double k, double q_const,
                     double[::1] y0, double t0, double t_end,
                     double rtol, double atol, double[::1] t_eval,
                     double rho_floor):
    """Specialized adaptive integration; mirrors ``milnezeta._ode.dopri5``."""
    cdef int dim = 4 if system == 2 else 2
    cdef int floor_index = -1
    if system == 1:
        floor_index = 0
    elif system == 2:
        floor_index = 2
    if y0.shape[0] != dim:
        raise ValueError("state dimension mismatch")

    cdef Py_ssize_t n_eval = t_eval.shape[0]
    out_arr = np.empty((n_eval, dim))
    cdef double[:, ::1] out = out_arr

    cdef double y[4]
    cdef double y_new[4]
    cdef double ks[7][4]
    cdef double work[4]
    cdef double errv[4]
    cdef double ydiff[4]
    cdef double r3[4]
    cdef double r4[4]
    cdef double r5[4]
    cdef int i, j
    for i in range(dim):
        y[i] = y0[i]

    cdef double direction = 1.0 if t_end >= t0 else -1.0
    cdef double span = fabs(t_end - t0)
    cdef Py_ssize_t next_eval = 0
    cdef double t = t0
    cdef long step_count = 0
    cdef double h, hs, norm, factor, sc, d0, d1, d2, h0, h1, t_new, s_frac, s1, ysamp
    cdef double max_factor = MAX_FACTOR
    cdef bint failed
    cdef int status = 0
    cdef double bad_value = 0.0, bad_time = 0.0

    if span == 0.0:
        for j in range(n_eval):
            for i in range(dim):
                out[j, i] = y[i]
        return out_arr

    _rhs(system, t, y, ks[0], eps, k, q_const)

    # Initial step: same heuristic as the pure integrator.
    d0 = 0.0
    d1 = 0.0
    for i in range(dim):
        sc = atol + rtol * fabs(y[i])
        d0 += (y[i] / sc) * (y[i] / sc)
        d1 += (ks[0][i] / sc) * (ks[0][i] / sc)
    d0 = sqrt(d0 / dim)
    d1 = sqrt(d1 / dim)
    h0 = 1e-6 if (d0 < 1e-5 or d1 < 1e-5) else 0.01 * d0 / d1
    for i in range(dim):
        work[i] = y[i] + h0 * direction * ks[0][i]
    _rhs(system, t + h0 * direction, work, ks[1], eps, k, q_const)
    d2 = 0.0
    for i in range(dim):
        sc = atol + rtol * fabs(y[i])
        d2 += ((ks[1][i] - ks[0][i]) / sc) * ((ks[1][i] - ks[0][i]) / sc)
    d2 = sqrt(d2 / dim) / h0
    if fmax(d1, d2) <= 1e-15:
        h1 = fmax(1e-6, h0 * 1e-3)
    else:
        h1 = pow(0.01 / fmax(d1, d2), 0.2)
    h = fmin(100.0 * h0, h1)
    h = fmin(h, span)

    while next_eval < n_eval and t_eval[next_eval] == t0:
        for i in range(dim):
            out[next_eval, i] = y[i]
        next_eval += 1

    while True:
        if direction * (t - t_end) >= 0.0:
            break
        step_count += 1
        if step_count > MAX_STEPS:
            status = 1
            bad_time = t
            break
        h = fmin(h, fabs(t_end - t))
        if h < 1e-14 * fmax(1.0, fabs(t)):
            status = 1
            bad_time = t
            break
        hs = h * direction

        # Stages 2..6.
        for i in range(dim):
            work[i] = y[i] + hs * A21 * ks[0][i]
        _rhs(system, t + C2 * hs, work, ks[1], eps, k, q_const)
        for i in range(dim):
            work[i] = y[i] + hs * (A31 * ks[0][i] + A32 * ks[1][i])
        _rhs(system, t + C3 * hs, work, ks[2], eps, k, q_const)
        for i in range(dim):
            work[i] = y[i] + hs * (A41 * ks[0][i] + A42 * ks[1][i] + A43 * ks[2][i])
        _rhs(system, t + C4 * hs, work, ks[3], eps, k, q_const)
        for i in range(dim):
            work[i] = y[i] + hs * (A51 * ks[0][i] + A52 * ks[1][i]
                                   + A53 * ks[2][i] + A54 * ks[3][i])
        _rhs(system, t + C5 * hs, work, ks[4], eps, k, q_const)
        for i in range(dim):
            work[i] = y[i] + hs * (A61 * ks[0][i] + A62 * ks[1][i] + A63 * ks[2][i]
                                   + A64 * ks[3][i] + A65 * ks[4][i])
        _rhs(system, t + hs, work, ks[5], eps, k, q_const)
        for i in range(dim):
            y_new[i] = y[i] + hs * (B1 * ks[0][i] + B3 * ks[2][i] + B4 * ks[3][i]
                                    + B5 * ks[4][i] + B6 * ks[5][i])
        t_new = t + hs
        _rhs(system, t_new, y_new, ks[6], eps, k, q_const)

        failed = False
        for i in range(dim):
            if not (isfinite(y_new[i]) and isfinite(ks[6][i])):
                failed = True
        if failed:
            norm = INFINITY
        else:
            for i in range(dim):
                errv[i] = hs * (E1 * ks[0][i] + E3 * ks[2][i] + E4 * ks[3][i]
                                + E5 * ks[4][i] + E6 * ks[5][i] + E7 * ks[6][i])
            norm = _err_norm(errv, y, y_new, dim, rtol, atol)
            failed = norm > 1.0

        if failed:
            if norm == INFINITY or not isfinite(norm):
                factor = MIN_FACTOR
            else:
                factor = fmax(MIN_FACTOR, SAFETY * pow(norm, -0.2))
            h *= factor
            max_factor = 1.0
            continue

        if floor_index >= 0 and y_new[floor_index] <= rho_floor:
            status = 2
            bad_value = y_new[floor_index]
            bad_time = t_new
            break

        if next_eval < n_eval and direction * (t_eval[next_eval] - t_new) <= 0.0:
            for i in range(dim):
                ydiff[i] = y_new[i] - y[i]
                r3[i] = hs * ks[0][i] - ydiff[i]
                r4[i] = ydiff[i] - hs * ks[6][i] - r3[i]
                r5[i] = hs * (D1 * ks[0][i] + D3 * ks[2][i] + D4 * ks[3][i]
                              + D5 * ks[4][i] + D6 * ks[5][i] + D7 * ks[6][i])
            while next_eval < n_eval and direction * (t_eval[next_eval] - t_new) <= 0.0:
                s_frac = (t_eval[next_eval] - t) / hs
                s1 = 1.0 - s_frac
                for i in range(dim):
                    ysamp = y[i] + s_frac * (ydiff[i] + s1 * (r3[i] + s_frac * (r4[i] + s1 * r5[i])))
                    out[next_eval, i] = ysamp
                if floor_index >= 0 and out[next_eval, floor_index] <= rho_floor:
                    status = 2
                    bad_value = out[next_eval, floor_index]
                    bad_time = t_eval[next_eval]
                    break
                next_eval += 1
            if status != 0:
                break

        t = t_new
        for i in range(dim):
            y[i] = y_new[i]
            ks[0][i] = ks[6][i]
        if norm == 0.0:
            factor = max_factor
        else:
            factor = fmin(max_factor, fmax(MIN_FACTOR, SAFETY * pow(norm, -0.2)))
        h *= factor
        max_factor = MAX_FACTOR

    if status == 1:
        raise ToleranceError(
            f"step size underflow at t={bad_time!r}; requested rtol={rtol!r} not achievable"
        )
    if status == 2:
        raise AmplitudeCollapseError(
            f"amplitude fell to {bad_value!r} at t={bad_time!r}"
        )

    while next_eval < n_eval:
        if fabs(t_eval[next_eval] - t_end) > 1e-10 * fmax(1.0, fabs(t_end)):
            raise ValueError("t_eval extends beyond the integration interval")
        for i in range(dim):
            out[next_eval, i] = y[i]
        next_eval += 1
    return out_arr
