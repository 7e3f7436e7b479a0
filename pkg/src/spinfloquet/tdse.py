"""Direct numerical checks of the closed-form results.

Everything here integrates the time-dependent Schrodinger equation
i hbar dpsi/dt = H(t) psi with an adaptive Runge-Kutta method (DOP853) and
no renormalization along the way: norm drift is kept as an accuracy
diagnostic instead of being hidden.  Internally time is stepped in drive
phase theta = omega0 t, where the equation reads

    dpsi/dtheta = -i (x / 2) [[0, e^{-i h theta}], [e^{+i h theta}, 0]] psi

with x the reduced drive strength and h the helicity.

``quasienergies_from_monodromy`` extracts quasienergies from the one-period
propagator; ``monte_carlo_flip`` samples the emission / no-emission scenario
decomposition with a seeded generator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .errors import DomainError, IntegrationError
from .floquet import DriveField, Spinor, solve_floquet
from .pulse import PulseSpec, projection_coefficients
from .units import CONSTANTS

__all__ = [
    "IntegratorSettings",
    "Trajectory",
    "McFlipEstimate",
    "integrate_tdse",
    "quasienergies_from_monodromy",
    "flip_probability_tdse",
    "monte_carlo_flip",
]


@dataclass(frozen=True)
class IntegratorSettings:
    """Adaptive integrator controls.

    rel_tol, abs_tol : solver tolerances, each in (0, 1e-3]
    max_step         : maximum step as a fraction of the drive period, <= 0.1
    """

    rel_tol: float = 1e-11
    abs_tol: float = 1e-13
    max_step: float = 0.05

    def __post_init__(self):
        for name, v in (("rel_tol", self.rel_tol), ("abs_tol", self.abs_tol)):
            if not (0.0 < v <= 1e-3):
                raise DomainError(f"{name} must be in (0, 1e-3], got {v}")
        if not (0.0 < self.max_step <= 0.1):
            raise DomainError(f"max_step must be in (0, 0.1] periods, got {self.max_step}")


DEFAULT_SETTINGS = IntegratorSettings()


@dataclass(frozen=True)
class Trajectory:
    """Sampled TDSE solution: times (s), spinor components, norm drift."""

    times: np.ndarray
    spinors: np.ndarray  # shape (n, 2), complex, not renormalized
    norm_drift: float

    def final_spinor(self) -> Spinor:
        return Spinor(complex(self.spinors[-1, 0]), complex(self.spinors[-1, 1]))


@dataclass(frozen=True)
class McFlipEstimate:
    """Monte-Carlo flip-probability estimate with its standard error."""

    estimate: float
    std_error: float
    n_trials: int
    seed: int


def _rhs(x: float, helicity: int):
    half_x = 0.5 * x

    def f(theta, y):
        phase = np.exp(-1j * helicity * theta)
        return np.array([-1j * half_x * phase * y[1],
                         -1j * half_x * np.conj(phase) * y[0]])

    return f


def _integrate_phase(field: DriveField, y0: np.ndarray, theta_span: tuple[float, float],
                     settings: IntegratorSettings, theta_eval=None):
    x = solve_floquet(field).x
    res = solve_ivp(
        _rhs(x, field.helicity), theta_span, y0,
        method="DOP853", rtol=settings.rel_tol, atol=settings.abs_tol,
        max_step=settings.max_step * 2.0 * math.pi, t_eval=theta_eval,
        dense_output=False,
    )
    if not res.success:
        last = res.t[-1] / field.omega0 if len(res.t) else None
        raise IntegrationError(f"TDSE integration failed: {res.message}",
                               last_good_time=last)
    return res


def integrate_tdse(field: DriveField, psi0: Spinor, t_span: tuple[float, float],
                   settings: IntegratorSettings = DEFAULT_SETTINGS,
                   t_eval=None) -> Trajectory:
    """Integrate the TDSE over t_span (seconds) from the state psi0.

    Args:
        field: the rotating drive.
        psi0: initial spinor; should be normalized for norm_drift to be
            meaningful.
        t_span: (t0, t1) in seconds, t1 > t0 >= 0.
        settings: tolerances and step limit.
        t_eval: optional sample times; defaults to the solver's own steps.
    """
    t0, t1 = float(t_span[0]), float(t_span[1])
    if not (math.isfinite(t0) and math.isfinite(t1) and t1 > t0):
        raise DomainError(f"t_span must be finite with t1 > t0, got {t_span}")
    w = field.omega0
    theta_eval = None if t_eval is None else np.asarray(t_eval, dtype=float) * w
    res = _integrate_phase(field, psi0.as_array(), (t0 * w, t1 * w),
                           settings, theta_eval)
    spinors = res.y.T.copy()
    norms = np.sqrt(np.abs(spinors[:, 0]) ** 2 + np.abs(spinors[:, 1]) ** 2)
    drift = float(np.max(np.abs(norms - psi0.norm())))
    return Trajectory(times=res.t / w, spinors=spinors, norm_drift=drift)


def quasienergies_from_monodromy(field: DriveField,
                                 settings: IntegratorSettings = DEFAULT_SETTINGS
                                 ) -> tuple[float, float]:
    """Quasienergies (eV) from the one-period propagator U(T).

    The columns of U are integrated from the identity; eigenvalues
    lambda = exp(-i eps T / hbar) give eps = -(hbar / T) arg(lambda), reported
    in the branch (-hbar omega0 / 2, hbar omega0 / 2] and sorted ascending.
    Raises IntegrationError if U fails unitarity at 1e-10.
    """
    two_pi = 2.0 * math.pi
    cols = []
    for y0 in (np.array([1.0 + 0.0j, 0.0j]), np.array([0.0j, 1.0 + 0.0j])):
        res = _integrate_phase(field, y0, (0.0, two_pi), settings,
                               theta_eval=np.array([0.0, two_pi]))
        cols.append(res.y[:, -1])
    u = np.column_stack(cols)
    unitarity = np.max(np.abs(u.conj().T @ u - np.eye(2)))
    if unitarity > 1e-10:
        raise IntegrationError(
            f"one-period propagator not unitary to 1e-10 (defect {unitarity:.3g}); "
            "tighten the integrator tolerances")
    lam = np.linalg.eigvals(u)
    hbar_w0 = CONSTANTS.hbar_eV_s * field.omega0  # photon energy in eV
    eps = -hbar_w0 * np.angle(lam) / two_pi       # in [-hbar w0/2, hbar w0/2)
    eps = np.where(eps <= -0.5 * hbar_w0, eps + hbar_w0, eps)
    eps = np.sort(eps)
    return float(eps[0]), float(eps[1])


def flip_probability_tdse(pulse: PulseSpec, initial: str,
                          settings: IntegratorSettings = DEFAULT_SETTINGS) -> float:
    """Decay-free flip probability from direct integration over the pulse."""
    if initial not in ("plus", "minus"):
        raise DomainError(f"initial must be 'plus' or 'minus', got {initial!r}")
    psi0 = Spinor.up() if initial == "plus" else Spinor.down()
    traj = integrate_tdse(pulse.field, psi0, (0.0, pulse.tau0), settings,
                          t_eval=[0.0, pulse.tau0])
    final = traj.final_spinor()
    amp = final.c_minus if initial == "plus" else final.c_plus
    return float(abs(amp) ** 2)


def monte_carlo_flip(pulse: PulseSpec, gamma: float, initial: str,
                     n_trials: int, seed: int) -> McFlipEstimate:
    """Monte-Carlo estimate of the flip probability via scenario sampling.

    Each trial draws whether a photon was emitted during the pulse
    (probability w = |a_e|^2 (1 - e^{-Gamma tau0})) and then whether the spin
    flipped, using the emission or no-emission flip probability accordingly.
    Variates come from the counter-based Philox generator, so trial i always
    consumes counters (2i, 2i+1): every trial is a pure function of
    (seed, trial index), independent of batching or execution order.
    """
    if initial not in ("plus", "minus"):
        raise DomainError(f"initial must be 'plus' or 'minus', got {initial!r}")
    if not (math.isfinite(gamma) and gamma >= 0.0):
        raise DomainError(f"gamma must be finite and >= 0, got {gamma}")
    if n_trials < 1:
        raise DomainError(f"n_trials must be >= 1, got {n_trials}")
    sol = solve_floquet(pulse.field)
    a_e, _ = projection_coefficients(sol, initial)
    w = abs(a_e) ** 2 * (-math.expm1(-gamma * pulse.tau0))
    # flip probability in each scenario (see pulse.scenario_composition)
    p_emitted = sol.A**2 if initial == "minus" else sol.B**2
    p_coherent = (sol.coupling / sol.Omega) ** 2 * math.sin(0.5 * sol.Omega * pulse.tau0) ** 2

    rng = np.random.Generator(np.random.Philox(seed))
    draws = rng.random((n_trials, 2))
    emitted = draws[:, 0] < w
    p_flip = np.where(emitted, p_emitted, p_coherent)
    flips = draws[:, 1] < p_flip
    estimate = float(np.mean(flips))
    std_error = math.sqrt(estimate * (1.0 - estimate) / n_trials)
    return McFlipEstimate(estimate=estimate, std_error=std_error,
                          n_trials=int(n_trials), seed=int(seed))
