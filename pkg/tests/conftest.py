"""Shared helpers: drive fields with an exact dimensionless coupling."""

import pytest

from spinfloquet.floquet import DriveField
from spinfloquet.units import CONSTANTS, photon_energy_to_omega

# 1 eV drive photon, the reference operating point
OMEGA0_1EV = photon_energy_to_omega(1.0)


def h0_for_x(x, omega0):
    """Field amplitude in gauss giving 2 mu_B H0 / hbar = x * omega0 exactly.

    Inverts the coupling in the same unit system the solver uses, so x
    round-trips to the last bit instead of picking up the ~1e-9 spread
    between independent CODATA entries.
    """
    c = CONSTANTS
    return x * c.hbar_erg_s * omega0 / (2.0 * c.mu_B_erg_per_gauss)


def field_for_x(x, omega0=OMEGA0_1EV, helicity=1):
    return DriveField(h0_gauss=h0_for_x(x, omega0), omega0=omega0,
                      helicity=helicity)


@pytest.fixture
def field_3q():
    """x = 3/4 at 1 eV, helicity +1: Omega = 1.25 w0, Omega0 = w0 / 4."""
    return field_for_x(0.75)
