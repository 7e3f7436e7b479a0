"""Exact dressed states of a spin-1/2 in a circularly polarized magnetic field.

The Hamiltonian is H(t) = mu_B sigma . H(t) with the rotating field
H(t) = H0 (cos w t, h sin w t, 0), drive frequency w = omega0 > 0 and
helicity h = +/-1.  Writing s = h * omega0, the two exact solutions are

    psi_g(t) = [A |+> - B e^{+i s t} |->] e^{-i eps_g t / hbar}
    psi_e(t) = [B e^{-i s t} |+> + A |->] e^{-i eps_e t / hbar}

with the generalized frequency Omega = sqrt((2 mu_B H0 / hbar)^2 + omega0^2),
mixing amplitudes A = sqrt((Omega + s) / 2 Omega), B = sqrt((Omega - s) / 2 Omega),
and quasienergies eps_g = hbar (s - Omega) / 2 = -eps_e.  The splitting
eps_e - eps_g = hbar Omega0 with Omega0 = Omega - s defines the frequency of
spontaneous emission between the dressed states.

All frequencies are angular (rad/s); quasienergies are reported in eV.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .units import CONSTANTS, reduced_drive_strength

__all__ = [
    "DriveField",
    "Spinor",
    "FloquetSolution",
    "drive_field_at",
    "solve_floquet",
    "floquet_state",
    "schrodinger_residual",
]


@dataclass(frozen=True)
class DriveField:
    """Rotating magnetic field: amplitude (gauss), frequency (rad/s), helicity.

    helicity +1 rotates the in-plane field counterclockwise
    (H ~ (cos w t, sin w t, 0)); -1 reverses the rotation sense.
    """

    h0_gauss: float
    omega0: float
    helicity: int = 1

    def __post_init__(self):
        if not (math.isfinite(self.h0_gauss) and self.h0_gauss >= 0.0):
            raise DomainError(f"h0_gauss must be finite and >= 0, got {self.h0_gauss}")
        if not (math.isfinite(self.omega0) and self.omega0 > 0.0):
            raise DomainError(f"omega0 must be finite and > 0, got {self.omega0}")
        if self.helicity not in (1, -1):
            raise DomainError(f"helicity must be +1 or -1, got {self.helicity}")

    @property
    def period(self) -> float:
        return 2.0 * math.pi / self.omega0


@dataclass(frozen=True)
class Spinor:
    """Two-component complex state (c_plus, c_minus) in the sigma_z basis."""

    c_plus: complex
    c_minus: complex

    def norm(self) -> float:
        return math.sqrt(abs(self.c_plus) ** 2 + abs(self.c_minus) ** 2)

    def normalized(self) -> "Spinor":
        n = self.norm()
        if n == 0.0:
            raise DomainError("cannot normalize the zero spinor")
        return Spinor(self.c_plus / n, self.c_minus / n)

    def overlap(self, other: "Spinor") -> complex:
        """Inner product <self|other>."""
        return (np.conj(self.c_plus) * other.c_plus
                + np.conj(self.c_minus) * other.c_minus)

    def as_array(self) -> np.ndarray:
        return np.array([self.c_plus, self.c_minus], dtype=complex)

    @staticmethod
    def from_array(a) -> "Spinor":
        return Spinor(complex(a[0]), complex(a[1]))

    @staticmethod
    def up() -> "Spinor":
        return Spinor(1.0 + 0.0j, 0.0j)

    @staticmethod
    def down() -> "Spinor":
        return Spinor(0.0j, 1.0 + 0.0j)


@dataclass(frozen=True)
class FloquetSolution:
    """Derived quantities of the dressed-state solution for one field.

    omega0_signed : helicity * omega0, the signed frequency entering all phases
    coupling      : 2 mu_B H0 / hbar, rad/s
    Omega         : generalized frequency sqrt(coupling^2 + omega0^2), rad/s
    Omega0        : dressed splitting frequency Omega - omega0_signed, rad/s
    eps_g, eps_e  : quasienergies in eV, eps_e - eps_g = hbar Omega0
    A, B          : mixing amplitudes, A^2 + B^2 = 1
    """

    omega0_signed: float
    coupling: float
    Omega: float
    Omega0: float
    eps_g: float
    eps_e: float
    A: float
    B: float

    @property
    def x(self) -> float:
        """Dimensionless drive strength coupling / |omega0|."""
        return self.coupling / abs(self.omega0_signed)


def drive_field_at(field: DriveField, t: float) -> tuple[np.ndarray, np.ndarray]:
    """Field vector (gauss) and spin Hamiltonian matrix (erg) at time t.

    Returns (H, Hmat) with H = H0 (cos s t, sin s t, 0), s = helicity * omega0,
    and Hmat = mu_B (sigma_x Hx + sigma_y Hy), a Hermitian 2x2 with
    eigenvalues +/- mu_B H0.
    """
    s = field.helicity * field.omega0
    hx = field.h0_gauss * math.cos(s * t)
    hy = field.h0_gauss * math.sin(s * t)
    vec = np.array([hx, hy, 0.0])
    mu = CONSTANTS.mu_B_erg_per_gauss
    off = mu * (hx - 1j * hy)
    hmat = np.array([[0.0, off], [np.conj(off), 0.0]], dtype=complex)
    return vec, hmat


def solve_floquet(field: DriveField) -> FloquetSolution:
    """Solve the dressed-state problem for one rotating field."""
    x = reduced_drive_strength(field.h0_gauss, field.omega0)
    s = field.helicity * field.omega0
    coupling = x * field.omega0
    omega_big = math.hypot(coupling, field.omega0)
    a = math.sqrt((omega_big + s) / (2.0 * omega_big))
    b = math.sqrt((omega_big - s) / (2.0 * omega_big))
    hbar_ev = CONSTANTS.hbar_eV_s
    eps_g = 0.5 * hbar_ev * (s - omega_big)
    return FloquetSolution(
        omega0_signed=s,
        coupling=coupling,
        Omega=omega_big,
        Omega0=omega_big - s,
        eps_g=eps_g,
        eps_e=-eps_g,
        A=a,
        B=b,
    )


def _state_components(sol: FloquetSolution, which: str, t):
    """Spinor components of one dressed state; t may be a scalar or array."""
    t = np.asarray(t, dtype=float)
    s = sol.omega0_signed
    # quasienergy phase rates eps/hbar in rad/s
    rate_g = 0.5 * (s - sol.Omega)
    if which == "g":
        phase = np.exp(-1j * rate_g * t)
        return sol.A * phase, -sol.B * np.exp(1j * s * t) * phase
    if which == "e":
        phase = np.exp(1j * rate_g * t)  # eps_e = -eps_g
        return sol.B * np.exp(-1j * s * t) * phase, sol.A * phase
    raise DomainError(f"which must be 'g' or 'e', got {which!r}")


def floquet_state(sol: FloquetSolution, which: str, t: float) -> Spinor:
    """Dressed state 'g' (ground) or 'e' (excited) at time t, normalized."""
    c_plus, c_minus = _state_components(sol, which, t)
    return Spinor(complex(c_plus), complex(c_minus))


def schrodinger_residual(sol: FloquetSolution, which: str, t):
    """Residual || i hbar d/dt psi - H(t) psi || / (hbar Omega) at time t.

    The derivative is analytic, so this measures only the internal consistency
    of the stored solution; t may be a scalar or an array.
    """
    t = np.asarray(t, dtype=float)
    s = sol.omega0_signed
    rate_g = 0.5 * (s - sol.Omega)
    c_plus, c_minus = _state_components(sol, which, t)
    if which == "g":
        d_plus = -1j * rate_g * c_plus
        d_minus = (1j * s - 1j * rate_g) * c_minus
    else:
        d_plus = (-1j * s + 1j * rate_g) * c_plus
        d_minus = 1j * rate_g * c_minus
    # i hbar d psi - Hmat psi, with Hmat/hbar = (coupling/2) [[0, e^{-ist}], [e^{ist}, 0]]
    half_coupling = 0.5 * sol.coupling
    hpsi_plus = half_coupling * np.exp(-1j * s * t) * c_minus
    hpsi_minus = half_coupling * np.exp(1j * s * t) * c_plus
    r_plus = 1j * d_plus - hpsi_plus
    r_minus = 1j * d_minus - hpsi_minus
    res = np.sqrt(np.abs(r_plus) ** 2 + np.abs(r_minus) ** 2) / sol.Omega
    if res.ndim == 0:
        return float(res)
    return res
