"""Pure-numpy reference implementation of the hot kernels.

Selected automatically when the compiled extension is unavailable (or when
``QPBURST_PURE_PYTHON=1``).  Function signatures and semantics are identical
to ``_core``; the benchmark suite compares the two backends.
"""

import math

import numpy as np
from scipy.special import gammaln

BACKEND_NAME = "python"


def survival_exponent(t, e_dep, r, tau, alpha, beta):
    """Quasiparticle-induced survival exponent per measurement interval.

    ``alpha * e_dep / (e_dep * tau * r * (e^(t/tau) - 1) + beta * e^(t/tau))``
    evaluated elementwise; times before the trigger (t < 0) contribute 0.
    All inputs in SI units except ``e_dep`` and ``beta`` which share an
    arbitrary common energy unit (eV in practice).
    """
    t = np.asarray(t, dtype=np.float64)
    out = np.zeros_like(t)
    if e_dep <= 0.0:
        return out
    mask = t >= 0.0
    with np.errstate(over="ignore"):
        e_t = np.exp(t[mask] / tau)
        denom = e_dep * tau * r * (e_t - 1.0) + beta * e_t
        out[mask] = alpha * e_dep / denom
    return out


def waveform_loglik(t, n, n_tot, log_comb, e_dep, r, tau, gamma, alpha, beta,
                    fidelity, p_ge):
    """Binomial log-likelihood of a binned waveform under the burst model.

    ``t`` holds bin centres relative to the trigger; pre-trigger bins use the
    background-only exponent ``gamma``.  Bins with ``n_tot == 0`` are skipped.
    Returns ``-inf`` when the model probability is pinned at 0 or 1 and the
    data disagree.
    """
    t = np.asarray(t, dtype=np.float64)
    n = np.asarray(n, dtype=np.int64)
    n_tot = np.asarray(n_tot, dtype=np.int64)
    lam = survival_exponent(t, e_dep, r, tau, alpha, beta) + gamma
    p = fidelity * (-np.expm1(-lam)) + p_ge

    total = 0.0
    for i in range(t.shape[0]):
        big_n = n_tot[i]
        if big_n == 0:
            continue
        k = n[i]
        pi = p[i]
        if pi <= 0.0:
            if k > 0:
                return -math.inf
            total += log_comb[i]
        elif pi >= 1.0:
            if k < big_n:
                return -math.inf
            total += log_comb[i]
        else:
            total += log_comb[i] + k * math.log(pi) + (big_n - k) * math.log1p(-pi)
    return total


def binom_log_comb(n, n_tot):
    """log C(N, n) per bin, via log-gamma."""
    n = np.asarray(n, dtype=np.float64)
    n_tot = np.asarray(n_tot, dtype=np.float64)
    return gammaln(n_tot + 1.0) - gammaln(n + 1.0) - gammaln(n_tot - n + 1.0)


def simulate_outcomes(p_gg, p_ee, p_ge, p_eg, uniforms, start_ground):
    """Run the two-state readout chain over pre-drawn uniforms.

    ``p_gg[i]`` is the probability that the qubit is read out in the ground
    state given the previous cycle's true state was ground; ``p_ee[i]`` the
    probability of an excited readout given the previous true state was
    excited.  ``uniforms`` has shape (n_cycles, 2): column 0 drives the state
    transition, column 1 the readout misclassification (``p_ge``/``p_eg``).
    Returns (measured_ground, true_ground) boolean arrays.
    """
    n_cycles = len(p_gg)
    outcomes = np.empty(n_cycles, dtype=bool)
    true_ground = np.empty(n_cycles, dtype=bool)
    prev_ground = bool(start_ground)
    for i in range(n_cycles):
        if prev_ground:
            relaxed = uniforms[i, 0] < p_gg[i]
        else:
            relaxed = not (uniforms[i, 0] < p_ee[i])
        true_ground[i] = relaxed
        if relaxed:
            outcomes[i] = not (uniforms[i, 1] < p_eg)
        else:
            outcomes[i] = uniforms[i, 1] < p_ge
        prev_ground = relaxed
    return outcomes, true_ground


def _rt_rhs(x, r, s0, g):
    return -r * x * x - s0 * x + g


def _rk4_step(x, h, r, s0, g):
    k1 = _rt_rhs(x, r, s0, g)
    k2 = _rt_rhs(x + 0.5 * h * k1, r, s0, g)
    k3 = _rt_rhs(x + 0.5 * h * k2, r, s0, g)
    k4 = _rt_rhs(x + h * k3, r, s0, g)
    return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def rk4_rothwarf(x0, r, s0, g, t_grid, step):
    """Fixed-step RK4 trajectory of dx/dt = -r x^2 - s0 x + g, from t = 0.

    The integrator advances with step ``step`` and lands exactly on every
    requested grid time with a final partial step.
    """
    t_grid = np.asarray(t_grid, dtype=np.float64)
    out = np.empty_like(t_grid)
    x = float(x0)
    t_cur = 0.0
    for j, target in enumerate(t_grid):
        remaining = target - t_cur
        n_full = int(remaining / step)
        for _ in range(n_full):
            x = _rk4_step(x, step, r, s0, g)
        t_cur += n_full * step
        last = target - t_cur
        if last > 1e-300:
            x = _rk4_step(x, last, r, s0, g)
            t_cur = target
        out[j] = x
    return out
