"""Zone classification and per-zone parameter construction."""

import cmath
import dataclasses
import math

import pytest

from qstep import (
    DegenerateEnergy,
    EnergyZone,
    NonPositiveEnergy,
    StepPotential,
    classify_zone,
    zone_params,
)


def test_zone_boundaries_order_the_three_regimes():
    pot = StepPotential(0.6, 0.8, 0.0)  # v0 = 1.0, |W| = 0.8
    assert classify_zone(pot, 1.5) is EnergyZone.A
    assert classify_zone(pot, 0.9) is EnergyZone.B
    assert classify_zone(pot, 0.5) is EnergyZone.C


def test_pure_longitudinal_potential_has_no_zone_c():
    pot = StepPotential(1.0, 0.0, 0.0)  # |W| = 0: zone C is empty
    assert classify_zone(pot, 0.5) is EnergyZone.B
    assert classify_zone(pot, 2.0) is EnergyZone.A


def test_energy_at_either_boundary_is_degenerate():
    pot = StepPotential(0.6, 0.8, 0.0)
    with pytest.raises(DegenerateEnergy):
        classify_zone(pot, 1.0)  # E = v0
    with pytest.raises(DegenerateEnergy):
        classify_zone(pot, 0.8)  # E = |W|


def test_degeneracy_margin_is_relative():
    pot = StepPotential(0.6, 0.8, 0.0)
    with pytest.raises(DegenerateEnergy):
        classify_zone(pot, 1.0 + 1e-13)
    assert classify_zone(pot, 1.0 + 1e-11) is EnergyZone.A


def test_nonpositive_energy_message():
    pot = StepPotential(0.0, 0.6, 0.0)
    for bad in (0.0, -1.0):
        with pytest.raises(NonPositiveEnergy, match="energy must be positive"):
            classify_zone(pot, bad)


def test_nonfinite_energy_rejected():
    pot = StepPotential(0.0, 0.6, 0.0)
    for bad in (math.nan, math.inf):
        with pytest.raises(ValueError):
            classify_zone(pot, bad)


def test_potential_validation():
    with pytest.raises(ValueError):
        StepPotential(-0.1, 0.5, 0.0)  # longitudinal part must be >= 0
    with pytest.raises(ValueError):
        StepPotential(0.0, 0.0, 0.0)  # no step at all
    with pytest.raises(ValueError):
        StepPotential(math.nan, 0.0, 1.0)


def test_potential_is_frozen_and_exposes_magnitudes():
    pot = StepPotential(0.3, 0.4, 1.2)
    assert math.isclose(pot.v0, math.sqrt(0.09 + 0.16 + 1.44), rel_tol=1e-15)
    assert math.isclose(pot.w_mag, math.sqrt(0.16 + 1.44), rel_tol=1e-15)
    with pytest.raises(dataclasses.FrozenInstanceError):
        pot.v1 = 1.0


def test_zone_a_momenta_square_to_stated_discriminants():
    pot = StepPotential(0.5, 0.6, 0.8)
    energy = 2.0
    p = zone_params(pot, energy)
    q = math.sqrt(energy**2 - pot.w_mag**2)
    assert p.zone is EnergyZone.A
    assert math.isclose(p.epsilon, math.sqrt(energy), rel_tol=1e-15)
    assert math.isclose(p.rho_minus**2, q - pot.v1, rel_tol=1e-13)
    assert math.isclose(p.nu_plus.real**2, q + pot.v1, rel_tol=1e-13)
    assert p.nu_minus == complex(0.0, 1.0) * p.rho_minus
    assert p.v1 == pot.v1 and p.v2 == pot.v2 and p.v3 == pot.v3


def test_zone_a_mixing_ratios():
    pot = StepPotential(0.5, 0.6, 0.8)
    energy = 2.0
    p = zone_params(pot, energy)
    q = math.sqrt(energy**2 - pot.w_mag**2)
    d = energy + q
    assert cmath.isclose(p.z, complex(-pot.v3, pot.v2) / d, rel_tol=1e-13)
    assert cmath.isclose(p.w, complex(-pot.v3, -pot.v2) / d, rel_tol=1e-13)
    assert p.zw.imag == 0.0
    assert math.isclose(p.zw.real, pot.w_mag**2 / d**2, rel_tol=1e-13)


def test_zone_b_decay_rates():
    pot = StepPotential(1.0, 0.5, 0.2)
    energy = 0.8
    p = zone_params(pot, energy)
    q = math.sqrt(energy**2 - pot.w_mag**2)
    assert p.zone is EnergyZone.B
    assert math.isclose(p.nu_minus.real**2, pot.v1 - q, rel_tol=1e-13)
    assert math.isclose(p.nu_plus.real**2, pot.v1 + q, rel_tol=1e-13)
    assert p.nu_minus.imag == 0.0 and p.nu_plus.imag == 0.0


def test_zone_c_conjugate_pair_and_unimodular_product():
    pot = StepPotential(0.2, 1.0, 0.0)
    energy = 0.6
    p = zone_params(pot, energy)
    assert p.zone is EnergyZone.C
    b2 = math.sqrt(pot.v1**2 + pot.w_mag**2 - energy**2)
    assert math.isclose(p.sigma_plus**2, (b2 + pot.v1) / 2.0, rel_tol=1e-13)
    assert math.isclose(p.sigma_minus**2, (b2 - pot.v1) / 2.0, rel_tol=1e-13)
    assert p.nu_minus == complex(p.sigma_plus, -p.sigma_minus)
    assert p.nu_plus == complex(p.sigma_plus, p.sigma_minus)
    expected_phi = math.atan2(math.sqrt(pot.w_mag**2 - energy**2), energy)
    assert math.isclose(p.phi, expected_phi, rel_tol=1e-13)
    # the mixing product is a pure phase in the sub-spectral zone
    assert math.isclose(abs(p.zw), 1.0, rel_tol=1e-13)
    assert cmath.isclose(p.zw, cmath.exp(complex(0.0, -2.0 * p.phi)), rel_tol=1e-13)


def test_zone_params_rejects_bad_energy_like_classify():
    pot = StepPotential(0.6, 0.8, 0.0)
    with pytest.raises(DegenerateEnergy):
        zone_params(pot, 1.0)
    with pytest.raises(NonPositiveEnergy):
        zone_params(pot, -2.0)
