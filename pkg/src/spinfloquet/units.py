"""Physical constants and unit conversions.

Everything downstream works with reduced quantities: a dimensionless drive
strength, angular frequencies in rad/s, times in seconds.  This module is the
single place that touches dimensional constants.  Decay-rate prefactors are
evaluated in Gaussian-CGS units (magnetic field in gauss, erg-based hbar and
c); electron-volt forms are carried alongside for input and output.

Constant values are CODATA 2018 (https://physics.nist.gov/cuu/Constants/).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, UnitError

__all__ = [
    "PhysicalConstants",
    "CODATA2018",
    "CONSTANTS",
    "ReducedParams",
    "reduced_drive_strength",
    "reference_decay_rate",
    "reduced_params",
    "convert",
    "photon_energy_to_omega",
]


@dataclass(frozen=True)
class PhysicalConstants:
    """Fundamental constants in the two unit systems the library accepts.

    Gaussian-CGS values (erg, gauss, cm, s) are authoritative for decay-rate
    prefactors; eV-based values serve input/output.  ``consistency_errors``
    checks that the two forms agree and that mu_B = |e| hbar / (2 m_e c).
    """

    mu_B_erg_per_gauss: float
    mu_B_eV_per_tesla: float
    hbar_erg_s: float
    hbar_eV_s: float
    c_cm_per_s: float
    m_e_gram: float
    e_statcoulomb: float
    erg_per_eV: float

    def consistency_errors(self) -> dict[str, float]:
        """Relative internal-consistency errors of the stored values."""
        mu_b_derived = self.e_statcoulomb * self.hbar_erg_s / (
            2.0 * self.m_e_gram * self.c_cm_per_s)
        # erg/gauss -> eV/tesla: divide by erg-per-eV, multiply by gauss-per-tesla
        mu_b_ev_t = self.mu_B_erg_per_gauss / self.erg_per_eV * GAUSS_PER_TESLA
        hbar_ev = self.hbar_erg_s / self.erg_per_eV
        return {
            "mu_B_vs_e_hbar_over_2mc": abs(mu_b_derived / self.mu_B_erg_per_gauss - 1.0),
            "mu_B_unit_forms": abs(mu_b_ev_t / self.mu_B_eV_per_tesla - 1.0),
            "hbar_unit_forms": abs(hbar_ev / self.hbar_eV_s - 1.0),
        }


GAUSS_PER_TESLA = 1.0e4

CODATA2018 = PhysicalConstants(
    mu_B_erg_per_gauss=9.2740100783e-21,
    mu_B_eV_per_tesla=5.7883818060e-5,
    hbar_erg_s=1.054571817e-27,
    hbar_eV_s=6.582119569e-16,
    c_cm_per_s=2.99792458e10,       # exact
    m_e_gram=9.1093837015e-28,
    e_statcoulomb=4.80320471257e-10,
    erg_per_eV=1.602176634e-12,     # exact
)

CONSTANTS = CODATA2018


@dataclass(frozen=True)
class ReducedParams:
    """Reduced description of one drive point.

    x         : dimensionless drive strength 2 mu_B H0 / (hbar omega0)
    omega0    : drive angular frequency, rad/s
    gamma_ref : reference decay rate 2 mu_B^2 omega0^3 / (3 hbar c^3), 1/s
    """

    x: float
    omega0: float
    gamma_ref: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and self.x >= 0.0):
            raise DomainError(f"reduced strength x must be finite and >= 0, got {self.x}")
        if not (math.isfinite(self.omega0) and self.omega0 > 0.0):
            raise DomainError(f"omega0 must be finite and > 0, got {self.omega0}")
        if not (math.isfinite(self.gamma_ref) and self.gamma_ref >= 0.0):
            raise DomainError(f"gamma_ref must be finite and >= 0, got {self.gamma_ref}")


def _require_field(h0_gauss: float) -> None:
    if not (math.isfinite(h0_gauss) and h0_gauss >= 0.0):
        raise DomainError(f"field amplitude must be finite and >= 0 gauss, got {h0_gauss}")


def _require_omega(omega0: float) -> None:
    if not (math.isfinite(omega0) and omega0 > 0.0):
        raise DomainError(f"drive frequency must be finite and > 0 rad/s, got {omega0}")


def reduced_drive_strength(h0_gauss: float, omega0: float) -> float:
    """Dimensionless drive strength x = 2 mu_B H0 / (hbar omega0).

    Args:
        h0_gauss: rotating-field amplitude in gauss, >= 0.
        omega0: drive angular frequency in rad/s, > 0.
    """
    _require_field(h0_gauss)
    _require_omega(omega0)
    c = CONSTANTS
    return 2.0 * c.mu_B_erg_per_gauss * h0_gauss / (c.hbar_erg_s * omega0)


def reference_decay_rate(omega0: float) -> float:
    """Reference decay rate gamma_ref = 2 mu_B^2 omega0^3 / (3 hbar c^3) in 1/s.

    Cubic in omega0; approximately 7.08 1/s at hbar*omega0 = 1 eV.
    """
    _require_omega(omega0)
    c = CONSTANTS
    return (2.0 * c.mu_B_erg_per_gauss**2 * omega0**3
            / (3.0 * c.hbar_erg_s * c.c_cm_per_s**3))


def reduced_params(h0_gauss: float, omega0: float) -> ReducedParams:
    """Bundle (x, omega0, gamma_ref) for one drive point."""
    return ReducedParams(
        x=reduced_drive_strength(h0_gauss, omega0),
        omega0=omega0,
        gamma_ref=reference_decay_rate(omega0),
    )


# Linear conversion groups: value_in_base = value * factor[unit].
# Energy group base: eV (rad/s enters through E = hbar * omega).
_ENERGY_TO_EV = {"eV": 1.0, "rad/s": CODATA2018.hbar_eV_s}
_FIELD_TO_GAUSS = {"gauss": 1.0, "tesla": GAUSS_PER_TESLA}
_TIME_TO_S = {"s": 1.0, "ns": 1.0e-9, "ps": 1.0e-12, "fs": 1.0e-15}

_GROUPS = (_ENERGY_TO_EV, _FIELD_TO_GAUSS, _TIME_TO_S)


def convert(value: float, from_unit: str, to_unit: str) -> float:
    """Convert ``value`` between units of one dimension group.

    Supported groups: {eV, rad/s} (via E = hbar omega), {tesla, gauss},
    {s, ns, ps, fs}.  Raises UnitError for any pair outside one group.
    """
    for group in _GROUPS:
        if from_unit in group and to_unit in group:
            return value * group[from_unit] / group[to_unit]
    raise UnitError(f"unsupported unit conversion {from_unit!r} -> {to_unit!r}; "
                    "supported groups: eV/rad/s, tesla/gauss, s/ns/ps/fs")


def photon_energy_to_omega(energy_ev: float) -> float:
    """Angular frequency in rad/s for a photon energy in eV."""
    return convert(energy_ev, "eV", "rad/s")
