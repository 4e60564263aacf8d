# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels: burst survival exponent, binned binomial likelihood,
cycle-level readout chain and the Rothwarf-Taylor RK4 integrator.

Semantics match qpburst._kernels._pure exactly (same pre-drawn random
numbers, same branch structure); only the evaluation speed differs.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport exp, expm1, log, log1p

cnp.import_array()

BACKEND_NAME = "cython"

cdef double NEG_INF = -float("inf")


cdef inline double _exponent_one(double t, double e_dep, double r, double tau,
                                 double alpha, double beta) noexcept nogil:
    cdef double e_t, denom
    if t < 0.0 or e_dep <= 0.0:
        return 0.0
    e_t = exp(t / tau)
    denom = e_dep * tau * r * (e_t - 1.0) + beta * e_t
    return alpha * e_dep / denom


def survival_exponent(t, double e_dep, double r, double tau,
                      double alpha, double beta):
    """Quasiparticle-induced survival exponent per measurement interval.

    Elementwise over bin/cycle times; t < 0 contributes 0.
    """
    cdef cnp.ndarray[cnp.float64_t, ndim=1] t_arr = np.ascontiguousarray(t, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty_like(t_arr)
    cdef Py_ssize_t i, n = t_arr.shape[0]
    for i in range(n):
        out[i] = _exponent_one(t_arr[i], e_dep, r, tau, alpha, beta)
    return out


def waveform_loglik(t, n, n_tot, log_comb, double e_dep, double r, double tau,
                    double gamma, double alpha, double beta,
                    double fidelity, double p_ge):
    """Binomial log-likelihood of a binned waveform under the burst model."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] t_arr = np.ascontiguousarray(t, dtype=np.float64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] n_arr = np.ascontiguousarray(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] nt_arr = np.ascontiguousarray(n_tot, dtype=np.int64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] lc_arr = np.ascontiguousarray(log_comb, dtype=np.float64)
    cdef Py_ssize_t i, nb = t_arr.shape[0]
    cdef double total = 0.0
    cdef double lam, p
    cdef long k, big_n
    for i in range(nb):
        big_n = nt_arr[i]
        if big_n == 0:
            continue
        k = n_arr[i]
        lam = _exponent_one(t_arr[i], e_dep, r, tau, alpha, beta) + gamma
        p = fidelity * (-expm1(-lam)) + p_ge
        if p <= 0.0:
            if k > 0:
                return NEG_INF
            total += lc_arr[i]
        elif p >= 1.0:
            if k < big_n:
                return NEG_INF
            total += lc_arr[i]
        else:
            total += lc_arr[i] + k * log(p) + (big_n - k) * log1p(-p)
    return total


def simulate_outcomes(p_gg, p_ee, double p_ge, double p_eg, uniforms,
                      int start_ground):
    """Run the two-state readout chain over pre-drawn uniforms.

    Returns (measured_ground, true_ground) boolean arrays; see the pure
    backend for the full contract.
    """
    cdef cnp.ndarray[cnp.float64_t, ndim=1] pgg = np.ascontiguousarray(p_gg, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] pee = np.ascontiguousarray(p_ee, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=2] u = np.ascontiguousarray(uniforms, dtype=np.float64)
    cdef Py_ssize_t i, n_cycles = pgg.shape[0]
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] outcomes = np.empty(n_cycles, dtype=np.uint8)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] true_ground = np.empty(n_cycles, dtype=np.uint8)
    cdef bint prev_ground = start_ground != 0
    cdef bint relaxed
    for i in range(n_cycles):
        if prev_ground:
            relaxed = u[i, 0] < pgg[i]
        else:
            relaxed = not (u[i, 0] < pee[i])
        true_ground[i] = relaxed
        if relaxed:
            outcomes[i] = not (u[i, 1] < p_eg)
        else:
            outcomes[i] = u[i, 1] < p_ge
        prev_ground = relaxed
    return outcomes.view(np.bool_), true_ground.view(np.bool_)


cdef inline double _rt_rhs(double x, double r, double s0, double g) noexcept nogil:
    return -r * x * x - s0 * x + g


cdef inline double _rk4_step(double x, double h, double r, double s0,
                             double g) noexcept nogil:
    cdef double k1 = _rt_rhs(x, r, s0, g)
    cdef double k2 = _rt_rhs(x + 0.5 * h * k1, r, s0, g)
    cdef double k3 = _rt_rhs(x + 0.5 * h * k2, r, s0, g)
    cdef double k4 = _rt_rhs(x + h * k3, r, s0, g)
    return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def rk4_rothwarf(double x0, double r, double s0, double g, t_grid, double step):
    """Fixed-step RK4 trajectory of dx/dt = -r x^2 - s0 x + g, from t = 0."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] grid = np.ascontiguousarray(t_grid, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty_like(grid)
    cdef Py_ssize_t j, n_grid = grid.shape[0]
    cdef long n_full, m
    cdef double x = x0
    cdef double t_cur = 0.0
    cdef double target, last
    for j in range(n_grid):
        target = grid[j]
        n_full = <long>((target - t_cur) / step)
        for m in range(n_full):
            x = _rk4_step(x, step, r, s0, g)
        t_cur += n_full * step
        last = target - t_cur
        if last > 1e-300:
            x = _rk4_step(x, last, r, s0, g)
            t_cur = target
        out[j] = x
    return out
