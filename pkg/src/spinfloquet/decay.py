"""Spontaneous decay between the dressed states.

The excited dressed state decays radiatively at

    Gamma = (2 mu_B^2 Omega0^3 / 3 hbar c^3) * ((Omega + s) / Omega)^2

with s the signed drive frequency, so the survival amplitude follows
c_e(t) = exp(-Gamma t / 2) and the emission probability 1 - exp(-Gamma t).
A phenomenological variant replaces Gamma by 1 / tau_s.

``memory_kernel_evolution`` validates the exponential law from first
principles by integrating the non-Markovian amplitude equation

    dc_e/dt = -P * integral_0^t K(t - t') c_e(t') dt',
    K(tau)  = integral_0^{omega_max} dw w^3 exp(i (Omega0 - w) tau),
    P       = (mu_B^2 / 3 pi hbar c^3) * ((Omega + s) / Omega)^2,

with a sharp frequency cutoff omega_max regularizing the w-integral.  The
kernel and its first two antiderivatives are evaluated in closed form
(sine/cosine integrals plus elementary terms), so the Volterra equation is
solved by trapezoidal product integration: c_e is piecewise linear on the
grid while the oscillatory kernel is integrated exactly over each panel.
The sharp cutoff also induces a fast energy-shift rotation of c_e (the
imaginary part of the kernel integral, analogous to a Lamb shift).  That
phase is factored out analytically before time stepping and is reported as
the ``phase_drift`` diagnostic; only |c_e| is meaningful for comparisons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import sici

from .errors import DomainError, GridResolutionError
from .floquet import FloquetSolution
from .units import CONSTANTS

__all__ = [
    "DecayModel",
    "SurvivalTrajectory",
    "ApplicabilityVerdict",
    "decay_rate",
    "emission_probability",
    "memory_kernel_evolution",
    "applicability_check",
]

_EULER_GAMMA = 0.5772156649015329


@dataclass(frozen=True)
class DecayModel:
    """Decay-rate model: 'radiative' (field-dependent) or 'phenomenological'
    (fixed spin lifetime tau_s in seconds)."""

    kind: str
    tau_s: float | None = None

    def __post_init__(self):
        if self.kind == "radiative":
            if self.tau_s is not None:
                raise DomainError("radiative model takes no tau_s")
        elif self.kind == "phenomenological":
            if self.tau_s is None or not (math.isfinite(self.tau_s) and self.tau_s > 0.0):
                raise DomainError(f"phenomenological model needs tau_s > 0, got {self.tau_s}")
        else:
            raise DomainError(f"unknown decay model kind {self.kind!r}")

    @staticmethod
    def radiative() -> "DecayModel":
        return DecayModel(kind="radiative")

    @staticmethod
    def phenomenological(tau_s: float) -> "DecayModel":
        return DecayModel(kind="phenomenological", tau_s=tau_s)


@dataclass(frozen=True)
class ApplicabilityVerdict:
    """Outcome of the omega0 * tau_s >= threshold applicability check."""

    ok: bool
    product: float
    threshold: float

    @property
    def verdict(self) -> str:
        return "pass" if self.ok else "warn"


@dataclass(frozen=True)
class SurvivalTrajectory:
    """Numerical solution of the memory-kernel amplitude equation.

    times          : sample times, s
    amplitude      : complex c_e(t) samples, c_e(0) = 1
    cutoff         : omega_max used, rad/s
    markov_rate    : closed-form Gamma implied by the kernel, 1/s
    phase_drift    : fitted d(arg c_e)/dt, rad/s (cutoff-induced shift)
    regime_warning : True when Gamma << Omega0 << omega_max does not hold
    """

    times: np.ndarray
    amplitude: np.ndarray
    cutoff: float
    markov_rate: float
    phase_drift: float
    regime_warning: bool

    def survival_probability(self) -> np.ndarray:
        return np.abs(self.amplitude) ** 2


def _coupling_factor(sol: FloquetSolution) -> float:
    """((Omega + s) / Omega)^2; vanishes at zero field for helicity -1."""
    return ((sol.Omega + sol.omega0_signed) / sol.Omega) ** 2


def decay_rate(sol: FloquetSolution, model: DecayModel) -> float:
    """Decay rate Gamma in 1/s for the given dressed-state solution."""
    if model.kind == "phenomenological":
        return 1.0 / model.tau_s
    if sol.Omega0 < 0.0:
        raise DomainError(f"radiative decay needs Omega0 >= 0, got {sol.Omega0}")
    c = CONSTANTS
    return (2.0 * c.mu_B_erg_per_gauss**2 * sol.Omega0**3
            / (3.0 * c.hbar_erg_s * c.c_cm_per_s**3)) * _coupling_factor(sol)


def emission_probability(gamma: float, t: float):
    """Probability 1 - exp(-Gamma t) that a photon was emitted by time t."""
    if not (math.isfinite(gamma) and gamma >= 0.0):
        raise DomainError(f"gamma must be finite and >= 0, got {gamma}")
    t = np.asarray(t, dtype=float)
    if np.any(t < 0.0):
        raise DomainError("emission_probability needs t >= 0")
    out = -np.expm1(-gamma * t)
    if out.ndim == 0:
        return float(out)
    return out


def applicability_check(omega0: float, tau_s: float,
                        threshold: float = 100.0) -> ApplicabilityVerdict:
    """Check omega0 * tau_s >= threshold for the phenomenological model.

    The closed-form flip probabilities assume many drive cycles per spin
    lifetime; below the threshold the caller should treat results as
    qualitative only.
    """
    if not (math.isfinite(omega0) and omega0 > 0.0):
        raise DomainError(f"omega0 must be finite and > 0, got {omega0}")
    if not (math.isfinite(tau_s) and tau_s > 0.0):
        raise DomainError(f"tau_s must be finite and > 0, got {tau_s}")
    product = omega0 * tau_s
    return ApplicabilityVerdict(ok=product >= threshold, product=product,
                                threshold=threshold)


# ----------------------------------------------------------------------------
# Closed-form kernel antiderivatives.
#
# With y = w - Wc (Wc the phase center) the kernel antiderivatives reduce to
# combinations of phi_k(y, T) = integral_0^y eta^k (exp(-i eta T) - 1) d eta
# for k = -1, 0, 1, 2.  Closed forms suffer catastrophic cancellation when
# |y T| is small, so each phi_k switches to a Taylor series there.

_SERIES_CUT = 0.5
_SERIES_TERMS = 20


def _phi_minus1(y: float, t: np.ndarray) -> np.ndarray:
    """integral_0^y (e^{-i eta T} - 1) / eta d eta, elementwise over T."""
    if y == 0.0:
        return np.zeros_like(t, dtype=complex)
    if y < 0.0:
        return np.conj(_phi_minus1(-y, t))
    u = y * t
    out = np.empty_like(u, dtype=complex)
    small = np.abs(u) < _SERIES_CUT
    us = u[small]
    acc = np.zeros_like(us, dtype=complex)
    term = np.ones_like(us, dtype=complex)
    for m in range(1, _SERIES_TERMS + 1):
        term = term * (-1j * us) / m
        acc += term / m
    out[small] = acc
    ub = u[~small]
    si, ci = sici(ub)
    out[~small] = (ci - np.log(ub) - _EULER_GAMMA) - 1j * si
    return out


def _phi_poly(k: int, y: float, t: np.ndarray) -> np.ndarray:
    """integral_0^y eta^k (e^{-i eta T} - 1) d eta for k = 0, 1, 2."""
    if y == 0.0:
        return np.zeros_like(t, dtype=complex)
    u = y * t
    out = np.empty_like(u, dtype=complex)
    small = np.abs(u) < _SERIES_CUT
    us = u[small]
    acc = np.zeros_like(us, dtype=complex)
    term = np.ones_like(us, dtype=complex)
    for m in range(1, _SERIES_TERMS + 1):
        term = term * (-1j * us) / m
        acc += term / (k + m + 1)
    out[small] = acc * y ** (k + 1)
    tb = t[~small]
    ub = u[~small]
    eb = np.exp(-1j * ub)
    if k == 0:
        closed = (1.0 - eb) / (1j * tb) - y
    elif k == 1:
        h1 = eb * (1j * y / tb + 1.0 / tb**2) - 1.0 / tb**2
        closed = h1 - 0.5 * y**2
    elif k == 2:
        h2 = eb * (1j * y**2 / tb + 2.0 * y / tb**2 - 2.0j / tb**3) + 2.0j / tb**3
        closed = h2 - y**3 / 3.0
    else:  # pragma: no cover - internal use only
        raise ValueError(k)
    out[~small] = closed
    return out


def _kernel_antiderivatives(cutoff: float, center: float,
                            t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """K1(T) = int_0^T K, K2(T) = int_0^T tau K for the shifted kernel.

    K(tau) = int_0^cutoff w^3 exp(i (center - w) tau) dw, with 0 < center
    < cutoff.  Evaluated elementwise over the array T (T >= 0).
    """
    a = -center
    b = cutoff - center
    # binomial coefficients of w^3 = (y + center)^3
    c0 = center**3
    c1 = 3.0 * center**2
    c2 = 3.0 * center
    phim1 = _phi_minus1(b, t) - _phi_minus1(a, t)
    phi0 = _phi_poly(0, b, t) - _phi_poly(0, a, t)
    phi1 = _phi_poly(1, b, t) - _phi_poly(1, a, t)
    phi2 = _phi_poly(2, b, t) - _phi_poly(2, a, t)
    k1 = 1j * (c0 * phim1 + c1 * phi0 + c2 * phi1 + phi2)

    def psi(k: int, y: float) -> np.ndarray:
        # integral_0^y eta^k g2(eta, T) d eta with g2 the inner tau-moment;
        # the 1/eta^2 singularities cancel against the polynomial pieces.
        if y == 0.0:
            return np.zeros_like(t, dtype=complex)
        u = y * t
        e = np.exp(-1j * u)
        if k == 0:
            return -(e - 1.0) / y - 1j * t
        if k == 1:
            return (1.0 - e) + _phi_minus1(y, t)
        if k == 2:
            return 1j * t * (_phi_poly(1, y, t) + 0.5 * y**2) + _phi_poly(0, y, t)
        if k == 3:
            return 1j * t * (_phi_poly(2, y, t) + y**3 / 3.0) + _phi_poly(1, y, t)
        raise ValueError(k)  # pragma: no cover

    k2 = (c0 * (psi(0, b) - psi(0, a)) + c1 * (psi(1, b) - psi(1, a))
          + c2 * (psi(2, b) - psi(2, a)) + (psi(3, b) - psi(3, a)))
    return k1, k2


def _cutoff_shift(cutoff: float, center: float) -> float:
    """-Im int_0^inf K(tau) d tau = principal-value part of the w-integral."""
    return (cutoff**3 / 3.0 + center * cutoff**2 / 2.0 + center**2 * cutoff
            + center**3 * math.log((cutoff - center) / center))


def _solve_volterra(prefactor: float, omega_res: float, cutoff: float,
                    t_grid: np.ndarray) -> tuple[np.ndarray, float]:
    """Product-integration march of the amplitude equation.

    Returns (c_e samples, shift mu) where the fast cutoff-induced rotation
    exp(i mu t) was factored out of c_e during stepping and restored at the
    end.  The grid must be uniform with t_grid[0] = 0.
    """
    n = len(t_grid) - 1
    dt = t_grid[1] - t_grid[0]
    mu = prefactor * _cutoff_shift(cutoff, omega_res)
    center = omega_res - mu  # phase center of the rotated kernel
    if not (0.0 < center < cutoff):
        # shift rivals the resonance itself; no frame helps, stay in the lab
        mu = 0.0
        center = omega_res
    k1, k2 = _kernel_antiderivatives(cutoff, center, t_grid)
    # panel moments: m0 over [t_m, t_{m+1}], m1 of (tau - t_m) K(tau)
    m0 = np.diff(k1)
    m1 = np.diff(k2) - t_grid[:-1] * m0
    alpha = m0 - m1 / dt
    q = m1 / dt
    u = np.empty(n, dtype=complex)  # u[j] couples d[n-j] for 1 <= j <= n-1
    u[0] = 0.0
    u[1:] = alpha[1:] + q[:-1]

    d = np.empty(n + 1, dtype=complex)
    d[0] = 1.0
    # First step from exponentiated first-order theory: the memory integral
    # saturates within ~1/cutoff, far inside the first panel, and starting
    # the trapezoid march across that turn-on leaves an O((mu dt)^2) slip.
    k1_lab, k2_lab = _kernel_antiderivatives(cutoff, omega_res, t_grid[:2])
    d[1] = (np.exp(-1j * mu * dt)
            * np.exp(-prefactor * (dt * k1_lab[1] - k2_lab[1])))
    conv = alpha[0] * d[1] + q[0] * d[0]  # I_1
    half = 0.5 * dt
    denom = 1.0 + half * (1j * mu + prefactor * alpha[0])
    for i in range(1, n):
        # partial convolution for I_{i+1} excluding the unknown d[i+1]
        tail = np.dot(u[1:i + 1], d[i:0:-1]) + q[i] * d[0]
        rhs = (d[i] * (1.0 - half * 1j * mu)
               - half * prefactor * (conv + tail))
        d[i + 1] = rhs / denom
        conv = alpha[0] * d[i + 1] + tail
    c = d * np.exp(1j * mu * t_grid)
    return c, mu


def memory_kernel_evolution(sol: FloquetSolution, omega_max: float,
                            t_grid) -> SurvivalTrajectory:
    """Integrate the non-Markovian survival amplitude on a uniform time grid.

    Args:
        sol: dressed-state solution; its Omega0 sets the resonance frequency.
        omega_max: sharp frequency cutoff, rad/s; must exceed Omega0.
        t_grid: uniform, increasing sample times starting at 0.

    The grid must either resolve the cutoff (dt * omega_max <= 0.5) or, since
    the kernel panels are integrated in closed form, resolve the solution's
    own complex rate (dt * |Gamma/2 + i shift| <= 0.5); otherwise a
    GridResolutionError is raised.
    """
    t_grid = np.asarray(t_grid, dtype=float)
    if t_grid.ndim != 1 or len(t_grid) < 2:
        raise DomainError("t_grid must be a 1-D array with at least 2 points")
    if t_grid[0] != 0.0:
        raise DomainError("t_grid must start at 0")
    steps = np.diff(t_grid)
    dt = steps[0]
    if dt <= 0.0 or not np.allclose(steps, dt, rtol=1e-9, atol=0.0):
        raise DomainError("t_grid must be uniform and increasing")
    if not (sol.Omega0 > 0.0):
        raise DomainError(f"memory kernel needs Omega0 > 0, got {sol.Omega0}")
    if not (omega_max > sol.Omega0):
        raise DomainError(f"omega_max must exceed Omega0, got {omega_max} <= {sol.Omega0}")

    c = CONSTANTS
    prefactor = (c.mu_B_erg_per_gauss**2 / (3.0 * math.pi * c.hbar_erg_s
                 * c.c_cm_per_s**3)) * _coupling_factor(sol)
    gamma = 2.0 * math.pi * prefactor * sol.Omega0**3
    shift = prefactor * _cutoff_shift(omega_max, sol.Omega0)
    rate_scale = abs(0.5 * gamma + 1j * shift)
    if dt * omega_max > 0.5 and dt * rate_scale > 0.5:
        raise GridResolutionError(
            f"grid too coarse: dt * omega_max = {dt * omega_max:.3g} and "
            f"dt * |decay rate| = {dt * rate_scale:.3g} both exceed 0.5")

    regime_warning = (not (gamma <= 0.05 * sol.Omega0
                           and omega_max >= 3.0 * sol.Omega0)
                      or not (0.0 < sol.Omega0 - shift < omega_max))
    amplitude, _ = _solve_volterra(prefactor, sol.Omega0, omega_max, t_grid)

    phase = np.unwrap(np.angle(amplitude))
    drift = float(np.polyfit(t_grid, phase, 1)[0]) if len(t_grid) > 2 else 0.0
    return SurvivalTrajectory(
        times=t_grid,
        amplitude=amplitude,
        cutoff=float(omega_max),
        markov_rate=gamma,
        phase_drift=drift,
        regime_warning=regime_warning,
    )
