"""Physical constants, unit conversions, and reduced drive parameters."""

import pytest

from spinfloquet.errors import DomainError, UnitError
from spinfloquet.units import (
    CONSTANTS,
    GAUSS_PER_TESLA,
    ReducedParams,
    convert,
    photon_energy_to_omega,
    reduced_drive_strength,
    reduced_params,
    reference_decay_rate,
)


def test_constants_internally_consistent():
    # independent CODATA entries cross-checked against each other; the
    # residuals are set by their published significant figures, ~1e-9
    errs = CONSTANTS.consistency_errors()
    assert set(errs) == {"mu_B_vs_e_hbar_over_2mc", "mu_B_unit_forms",
                         "hbar_unit_forms"}
    for name, err in errs.items():
        assert 0.0 <= err < 1e-8, name


def test_photon_energy_to_omega_1ev():
    # hand value: 1 eV / hbar = 1 / 6.582119569e-16 rad/s
    assert photon_energy_to_omega(1.0) == pytest.approx(
        1.5192674479961272e15, rel=1e-15)


def test_convert_field_units():
    assert convert(1.0, "tesla", "gauss") == GAUSS_PER_TESLA == 1.0e4
    assert convert(2.5e4, "gauss", "tesla") == pytest.approx(2.5, rel=1e-15)
    assert convert(7.0, "gauss", "gauss") == 7.0


def test_convert_time_units():
    assert convert(1.0, "ps", "s") == pytest.approx(1.0e-12, rel=1e-15)
    assert convert(1.0, "s", "fs") == pytest.approx(1.0e15, rel=1e-15)
    assert convert(3.0, "ns", "ps") == pytest.approx(3.0e3, rel=1e-15)


def test_convert_energy_frequency():
    w = convert(1.0, "eV", "rad/s")
    assert w * CONSTANTS.hbar_eV_s == pytest.approx(1.0, rel=1e-15)
    assert convert(w, "rad/s", "eV") == pytest.approx(1.0, rel=1e-15)


def test_convert_rejects_cross_group_and_unknown():
    with pytest.raises(UnitError):
        convert(1.0, "gauss", "s")
    with pytest.raises(UnitError):
        convert(1.0, "eV", "tesla")
    with pytest.raises(UnitError):
        convert(1.0, "furlong", "s")


def test_reduced_drive_strength_reference_point():
    # hand value: 2 * 9.2740100783e-21 * 1e7 / (1.054571817e-27 * w0)
    w0 = photon_energy_to_omega(1.0)
    assert reduced_drive_strength(1.0e7, w0) == pytest.approx(
        0.11576763618267957, rel=1e-14)
    assert reduced_drive_strength(0.0, w0) == 0.0


def test_reduced_drive_strength_scales_linearly():
    w0 = photon_energy_to_omega(1.0)
    x1 = reduced_drive_strength(3.0e6, w0)
    x2 = reduced_drive_strength(6.0e6, w0)
    assert x2 == pytest.approx(2.0 * x1, rel=1e-14)


def test_reference_decay_rate_1ev():
    # 2 mu_B^2 w0^3 / (3 hbar c^3) at hbar*w0 = 1 eV; hand arithmetic gives
    # 603209.011 / 85243.157 = 7.0763...  (the committed fixture spells out
    # every intermediate)
    w0 = photon_energy_to_omega(1.0)
    assert reference_decay_rate(w0) == pytest.approx(7.076333563864661,
                                                     rel=1e-14)


def test_reference_decay_rate_cubic_scaling():
    w0 = photon_energy_to_omega(1.0)
    assert reference_decay_rate(2.0 * w0) == pytest.approx(
        8.0 * reference_decay_rate(w0), rel=1e-13)


def test_reduced_params_bundle():
    w0 = photon_energy_to_omega(1.0)
    p = reduced_params(5.0e6, w0)
    assert isinstance(p, ReducedParams)
    assert p.omega0 == w0
    assert p.x == reduced_drive_strength(5.0e6, w0)
    assert p.gamma_ref == reference_decay_rate(w0)


@pytest.mark.parametrize("h0, w0", [(-1.0, 1.0e15), (float("nan"), 1.0e15),
                                    (1.0e6, 0.0), (1.0e6, -2.0e15)])
def test_reduced_params_rejects_bad_inputs(h0, w0):
    with pytest.raises(DomainError):
        reduced_params(h0, w0)
