"""Quasiparticle density and qubit relaxation models.

The central object is the probability that a continuously monitored transmon
relaxes during one effective measurement interval, as a function of the time
elapsed since a phonon burst deposited energy on the qubit island.  Internal
computations run in SI units; the public dataclasses carry the conventional
lab units (eV, ns^-1, ms) that appear in their field names.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.constants import e as _E_CHARGE
from scipy.constants import hbar as _HBAR
from scipy.constants import k as _K_B
from scipy.special import ndtr

from . import _kernels
from .errors import BaselineError, ConfigError, DomainError, IntegrationError

__all__ = [
    "PhysicsConstants",
    "QubitConfig",
    "BurstParams",
    "RTParams",
    "DEFAULT_CONSTANTS",
    "relaxation_coefficients",
    "relaxation_probability",
    "observed_probability",
    "gamma_from_baseline",
    "rt_from_decay_params",
    "rt_from_rate_params",
    "decay_rate",
    "integrate_rothwarf_taylor",
    "kaplan_recombination",
    "separation_fidelity",
    "pulse_amplitude",
    "energy_for_amplitude",
]


@dataclass(frozen=True)
class PhysicsConstants:
    """Material and device constants feeding the relaxation model.

    n_cp: Cooper-pair density [m^-3]
    delta_ev: superconducting gap [eV]
    volume_m3: qubit island volume [m^3]
    epsilon: phonon-to-quasiparticle conversion efficiency (0, 1]
    delta_t_s: effective measurement interval [s] (wait time plus half the
        readout duration)
    """

    n_cp: float = 4.0e24
    delta_ev: float = 180.0e-6
    volume_m3: float = 6975.0e-18
    epsilon: float = 0.57
    delta_t_s: float = 3.0e-6
    hbar: float = _HBAR
    k_b: float = _K_B

    def __post_init__(self):
        for name in ("n_cp", "delta_ev", "volume_m3", "epsilon", "delta_t_s",
                     "hbar", "k_b"):
            if getattr(self, name) <= 0.0:
                raise DomainError(f"{name} must be strictly positive")
        if self.epsilon > 1.0:
            raise DomainError("epsilon cannot exceed 1")

    @property
    def delta_joule(self) -> float:
        return self.delta_ev * _E_CHARGE


DEFAULT_CONSTANTS = PhysicsConstants()


@dataclass(frozen=True)
class QubitConfig:
    """Per-qubit readout and geometry parameters.

    omega_q: angular frequency [rad/s]
    fidelity: separation fidelity (1 - p_ge - p_eg)
    p_ge: probability of reading an excited qubit as ground
    position_mm: (x, y) on the chip [mm]
    baseline: nominal pre-trigger error probability
    baseline_sigma: its per-bin standard deviation
    """

    name: str
    omega_q: float
    fidelity: float
    p_ge: float
    position_mm: tuple[float, float] = (0.0, 0.0)
    baseline: float = 0.08
    baseline_sigma: float = 0.04

    def __post_init__(self):
        if not self.name:
            raise ConfigError("qubit name must be non-empty")
        if self.omega_q <= 0.0:
            raise DomainError("omega_q must be strictly positive")
        if not 0.0 <= self.fidelity <= 1.0 or not 0.0 <= self.p_ge <= 1.0:
            raise ConfigError("fidelity and p_ge must lie in [0, 1]")
        if self.fidelity + self.p_ge > 1.0 + 1e-12:
            raise ConfigError(
                f"{self.name}: fidelity + p_ge = {self.fidelity + self.p_ge} exceeds 1")
        if not 0.0 <= self.baseline <= 1.0:
            raise ConfigError("baseline must lie in [0, 1]")
        if self.baseline_sigma < 0.0:
            raise ConfigError("baseline_sigma must be non-negative")

    @property
    def p_eg(self) -> float:
        """Probability of reading a ground-state qubit as excited."""
        return 1.0 - self.fidelity - self.p_ge

    def with_baseline(self, baseline: float, baseline_sigma: float) -> "QubitConfig":
        return replace(self, baseline=baseline, baseline_sigma=baseline_sigma)


@dataclass(frozen=True)
class BurstParams:
    """Free parameters of one relaxation transient.

    e_dep_ev: energy deposited on the island [eV]
    r_ns: recombination constant [1/ns]
    tau_ss_ms: linear-loss time [ms]
    gamma: dimensionless background relaxation exponent
    """

    e_dep_ev: float
    r_ns: float
    tau_ss_ms: float
    gamma: float = 0.0

    def __post_init__(self):
        if self.e_dep_ev < 0.0:
            raise DomainError("e_dep_ev must be non-negative")
        if self.r_ns <= 0.0:
            raise DomainError("r_ns must be strictly positive")
        if self.tau_ss_ms <= 0.0:
            raise DomainError("tau_ss_ms must be strictly positive")
        if self.gamma < 0.0:
            raise DomainError("gamma must be non-negative")

    @property
    def r_si(self) -> float:
        """Recombination constant in 1/s."""
        return self.r_ns * 1e9

    @property
    def tau_si(self) -> float:
        """Linear-loss time in seconds."""
        return self.tau_ss_ms * 1e-3


@dataclass(frozen=True)
class RTParams:
    """Rothwarf-Taylor dynamics in the dimensionless decay parametrisation.

    r_prime: recombination fraction in [0, 1)
    x_i: normalised injected quasiparticle density
    x_0: normalised steady-state density
    s_0: trapping (linear loss) coefficient [1/s]
    g: generation rate [1/s]
    c_coeff: decay-rate constant multiplying the density [1/s]
    gamma_0: residual decay rate [1/s]
    """

    r_prime: float
    x_i: float
    x_0: float
    s_0: float
    g: float
    c_coeff: float = 0.0
    gamma_0: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.r_prime < 1.0:
            raise DomainError("r_prime must lie in [0, 1)")
        if self.x_i <= 0.0:
            raise DomainError("x_i must be strictly positive")
        if self.x_0 < 0.0:
            raise DomainError("x_0 must be non-negative")

    @property
    def _q(self) -> float:
        # q = recombination_rate * tau_ss, dimensionless
        return self.r_prime / ((1.0 - self.r_prime) * self.x_i)

    @property
    def tau_ss(self) -> float:
        """Linear-loss time [s]."""
        q = self._q
        if self.s_0 != 0.0:
            return (1.0 - 2.0 * q * self.x_0) / self.s_0
        # s_0 = 0 requires a finite steady state; recover tau from g instead
        return self.x_0 * (1.0 - q * self.x_0) / self.g

    @property
    def recombination_rate(self) -> float:
        """Quadratic-loss coefficient for the normalised density [1/s]."""
        return self._q / self.tau_ss


def relaxation_coefficients(constants: PhysicsConstants,
                            qubit: QubitConfig) -> tuple[float, float]:
    """Coefficients (alpha, beta) of the relaxation-probability model.

    alpha (dimensionless) converts the normalised quasiparticle density into
    a relaxation exponent per measurement interval; beta [eV] converts a
    deposited energy into that normalised density.
    """
    alpha = constants.delta_t_s * math.sqrt(
        2.0 * qubit.omega_q * constants.delta_joule / (math.pi ** 2 * constants.hbar))
    beta = constants.n_cp * constants.volume_m3 * constants.delta_ev / constants.epsilon
    return alpha, beta


def relaxation_probability(t, params: BurstParams,
                           constants: PhysicsConstants = DEFAULT_CONSTANTS,
                           qubit: QubitConfig | None = None,
                           *, alpha: float | None = None,
                           beta: float | None = None):
    """Probability that the qubit relaxes during one measurement interval.

    ``t`` [s] is the time elapsed since the burst trigger (scalar or array,
    >= 0).  Either a qubit (from which alpha is derived) or explicit
    (alpha, beta) coefficients must be supplied.
    """
    if alpha is None or beta is None:
        if qubit is None:
            raise DomainError("either a qubit or explicit (alpha, beta) are required")
        alpha, beta = relaxation_coefficients(constants, qubit)
    t_arr = np.atleast_1d(np.asarray(t, dtype=np.float64))
    if np.any(t_arr < 0.0):
        raise DomainError("t must be non-negative")
    lam = _kernels.survival_exponent(
        np.ascontiguousarray(t_arr), params.e_dep_ev, params.r_si, params.tau_si,
        alpha, beta)
    p = -np.expm1(-(lam + params.gamma))
    return float(p[0]) if np.isscalar(t) or np.ndim(t) == 0 else p


def observed_probability(p_r, qubit: QubitConfig):
    """Fold the true relaxation probability with the readout fidelities."""
    p_arr = np.asarray(p_r, dtype=np.float64)
    if np.any(p_arr < 0.0) or np.any(p_arr > 1.0):
        raise DomainError("p_r must lie in [0, 1]")
    out = p_arr * qubit.fidelity + qubit.p_ge
    return float(out) if np.ndim(p_r) == 0 else out


def gamma_from_baseline(qubit: QubitConfig, baseline: float | None = None) -> float:
    """Background relaxation exponent reproducing an observed baseline.

    Inverts the fidelity folding at zero deposited energy.  ``baseline``
    defaults to the qubit's configured nominal value.
    """
    b = qubit.baseline if baseline is None else baseline
    if b < qubit.p_ge:
        raise BaselineError(
            f"baseline {b} below the ground-misread floor p_ge = {qubit.p_ge}")
    if b >= qubit.fidelity + qubit.p_ge:
        raise BaselineError(
            f"baseline {b} at or above the saturation level "
            f"fidelity + p_ge = {qubit.fidelity + qubit.p_ge}")
    return -math.log1p(-(b - qubit.p_ge) / qubit.fidelity)


def rt_from_decay_params(r_prime: float, tau_ss: float, x_i: float,
                         x_0: float = 0.0, c_coeff: float = 0.0,
                         gamma_0: float = 0.0) -> RTParams:
    """Build RTParams from the decay parametrisation (r', tau_ss, x_i, x_0)."""
    if not 0.0 <= r_prime < 1.0:
        raise DomainError("r_prime must lie in [0, 1)")
    if tau_ss <= 0.0:
        raise DomainError("tau_ss must be strictly positive")
    if x_i <= 0.0:
        raise DomainError("x_i must be strictly positive")
    if x_0 < 0.0:
        raise DomainError("x_0 must be non-negative")
    q = r_prime / ((1.0 - r_prime) * x_i)
    s_0 = (1.0 - 2.0 * q * x_0) / tau_ss
    g = (x_0 / tau_ss) * (1.0 - q * x_0)
    return RTParams(r_prime=r_prime, x_i=x_i, x_0=x_0, s_0=s_0, g=g,
                    c_coeff=c_coeff, gamma_0=gamma_0)


def rt_from_rate_params(r: float, s_0: float, g: float, x_i: float,
                        c_coeff: float = 0.0, gamma_0: float = 0.0) -> RTParams:
    """Build RTParams from the rate parametrisation (r, s_0, g) plus x_i.

    The steady-state density is the non-negative root of r x^2 + s_0 x = g.
    """
    if r < 0.0:
        raise DomainError("r must be non-negative")
    if g < 0.0:
        raise DomainError("g must be non-negative")
    if x_i <= 0.0:
        raise DomainError("x_i must be strictly positive")
    disc = s_0 * s_0 + 4.0 * r * g
    denom = s_0 + math.sqrt(disc)
    if denom <= 0.0:
        if g == 0.0:
            x_0 = 0.0
        else:
            raise DomainError("no steady state: s_0 and r cannot both vanish with g > 0")
    else:
        x_0 = 2.0 * g / denom
    total_rate = s_0 + 2.0 * r * x_0
    if total_rate <= 0.0:
        raise DomainError("total linear-loss rate must be strictly positive")
    tau_ss = 1.0 / total_rate
    rho = r * tau_ss * x_i
    r_prime = rho / (1.0 + rho)
    return RTParams(r_prime=r_prime, x_i=x_i, x_0=x_0, s_0=s_0, g=g,
                    c_coeff=c_coeff, gamma_0=gamma_0)


def decay_rate(t, rt: RTParams, tau_ss: float | None = None):
    """Closed-form qubit decay rate after a quasiparticle injection [1/s].

    ``t`` [s] scalar or array, >= 0.  ``tau_ss`` defaults to the value
    implied by the RTParams themselves.
    """
    tau = rt.tau_ss if tau_ss is None else tau_ss
    t_arr = np.asarray(t, dtype=np.float64)
    if np.any(t_arr < 0.0):
        raise DomainError("t must be non-negative")
    with np.errstate(over="ignore"):
        out = rt.c_coeff * rt.x_i * (1.0 - rt.r_prime) / (np.exp(t_arr / tau) - rt.r_prime)
    out = out + rt.gamma_0
    return float(out) if np.ndim(t) == 0 else out


def integrate_rothwarf_taylor(x_init: float, r: float, s_0: float, g: float,
                              t_grid, step: float | None = None,
                              validate: bool = True):
    """Fixed-step RK4 trajectory of the quasiparticle density ODE.

    dx/dt = -r x^2 - s_0 x + g, starting from x(0) = x_init, evaluated at the
    (monotone, non-negative) times in ``t_grid``.  When ``validate`` is set
    the integration is repeated at half the step and an IntegrationError is
    raised if the two trajectories disagree beyond 1e-4 relative.
    """
    if x_init < 0.0:
        raise DomainError("x_init must be non-negative")
    if r < 0.0 or g < 0.0:
        raise DomainError("r and g must be non-negative")
    grid = np.ascontiguousarray(t_grid, dtype=np.float64)
    if grid.size == 0:
        return grid.copy()
    if np.any(np.diff(grid) < 0.0) or grid[0] < 0.0:
        raise DomainError("t_grid must be non-negative and non-decreasing")
    t_max = float(grid[-1])
    if step is None:
        rate = s_0 + 2.0 * r * x_init
        char_time = 1.0 / rate if rate > 0.0 else t_max
        step = char_time / 1e4
        if t_max > 0.0:
            step = min(step, t_max / 100.0)
    if step <= 0.0:
        raise DomainError("step must be strictly positive")
    traj = _kernels.rk4_rothwarf(x_init, r, s_0, g, grid, step)
    if validate:
        fine = _kernels.rk4_rothwarf(x_init, r, s_0, g, grid, step / 2.0)
        scale = max(abs(x_init), float(np.max(np.abs(fine), initial=0.0)), 1e-300)
        rel = np.max(np.abs(traj - fine) / (np.abs(fine) + 1e-9 * scale))
        if rel > 1e-4:
            raise IntegrationError(
                f"halved-step disagreement {rel:.3e} exceeds 1e-4; decrease the step")
    return traj


def kaplan_recombination(f_supp: float, tau_0_ns: float = 438.0) -> float:
    """Recombination constant [1/ns] from the electron-phonon coupling time.

    Uses the low-temperature aluminium estimate 21.8 / (F tau_0), where F is
    a device-specific suppression factor.
    """
    if f_supp <= 0.0 or tau_0_ns <= 0.0:
        raise DomainError("suppression factor and tau_0 must be strictly positive")
    return 21.8 / (f_supp * tau_0_ns)


def separation_fidelity(mu_g: float, sigma_g: float, mu_e: float,
                        sigma_e: float, threshold: float) -> tuple[float, float, float]:
    """Readout fidelity from Gaussian fits of the two readout populations.

    Assumes the ground population sits below the threshold on the projected
    axis.  Returns (fidelity, p_ge, p_eg) where p_ge is the excited Gaussian
    mass below the threshold and p_eg the ground Gaussian mass above it.
    """
    if sigma_g <= 0.0 or sigma_e <= 0.0:
        raise DomainError("sigma_g and sigma_e must be strictly positive")
    p_ge = float(ndtr((threshold - mu_e) / sigma_e))
    p_eg = float(1.0 - ndtr((threshold - mu_g) / sigma_g))
    return 1.0 - p_ge - p_eg, p_ge, p_eg


def pulse_amplitude(e_dep_ev: float, qubit: QubitConfig,
                    constants: PhysicsConstants = DEFAULT_CONSTANTS,
                    gamma: float = 0.0) -> float:
    """Observed error probability immediately after a trigger."""
    alpha, beta = relaxation_coefficients(constants, qubit)
    exponent = alpha * e_dep_ev / beta + gamma
    return observed_probability(-math.expm1(-exponent), qubit)


def energy_for_amplitude(p_obs: float, qubit: QubitConfig,
                         constants: PhysicsConstants = DEFAULT_CONSTANTS,
                         gamma: float = 0.0) -> float:
    """Deposited energy [eV] whose initial amplitude matches ``p_obs``.

    Inverse of pulse_amplitude; raises DomainError when the requested
    amplitude is outside the reachable range.
    """
    p_r = (p_obs - qubit.p_ge) / qubit.fidelity
    if not 0.0 <= p_r < 1.0:
        raise DomainError("requested amplitude outside the reachable range")
    exponent = -math.log1p(-p_r)
    if exponent < gamma:
        raise DomainError("requested amplitude below the background level")
    alpha, beta = relaxation_coefficients(constants, qubit)
    return (exponent - gamma) * beta / alpha
