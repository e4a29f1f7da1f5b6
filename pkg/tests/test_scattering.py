"""Closed-form coefficients, phases and stationary-phase delay times."""

import cmath
import math

import pytest

from qstep import (
    DegenerateEnergy,
    EnergyZone,
    StepPotential,
    ZoneCrossing,
    complex_limit_solution,
    delay_times,
    phase_data,
    probabilities,
    solve_step,
)


def test_pure_transverse_reference_values(zone_a_solution):
    sol = zone_a_solution
    assert sol.zone is EnergyZone.A
    assert sol.r == pytest.approx(complex(0.052460, 0.058651), abs=1e-6)
    assert sol.t == pytest.approx(complex(1.118034, 0.0), abs=1e-6)
    assert sol.R == pytest.approx(0.006192, abs=1e-6)
    assert sol.T == pytest.approx(0.993808, abs=1e-6)
    assert sol.R + sol.T == pytest.approx(1.0, abs=1e-12)


def test_pure_transverse_transmission_is_real():
    # With no longitudinal part the two region-II momenta coincide and the
    # transmission amplitude stays real at every energy above the step.
    for energy in (0.8, 1.0, 1.7, 2.5):
        sol = solve_step(StepPotential(0.0, 0.6, 0.0), energy)
        assert sol.t.imag == pytest.approx(0.0, abs=1e-15)


def test_zone_a_complex_limit_exact_values():
    sol = solve_step(StepPotential(0.75, 0.0, 0.0), 1.0)
    assert sol.zone is EnergyZone.A
    assert sol.r == pytest.approx(complex(1.0 / 3.0, 0.0), abs=1e-15)
    assert sol.t == pytest.approx(complex(4.0 / 3.0, 0.0), abs=1e-15)
    assert sol.r_tilde == 0.0 and sol.t_tilde == 0.0
    assert sol.R == pytest.approx(1.0 / 9.0, abs=1e-15)
    assert sol.T == pytest.approx(8.0 / 9.0, abs=1e-15)


def test_zone_b_complex_limit_exact_values():
    sol = solve_step(StepPotential(1.0, 0.0, 0.0), 0.5)
    assert sol.zone is EnergyZone.B
    assert sol.r == pytest.approx(complex(0.0, -1.0), abs=1e-15)
    assert sol.t == pytest.approx(complex(1.0, -1.0), abs=1e-15)
    assert abs(sol.r) == pytest.approx(1.0, abs=1e-15)


def test_complex_limit_solution_matches_solve_step():
    for v1, energy in ((0.75, 1.0), (1.0, 0.5), (1.3, 2.0)):
        limit = complex_limit_solution(v1, energy)
        full = solve_step(StepPotential(v1, 0.0, 0.0), energy)
        assert limit.zone is full.zone
        assert limit.r == pytest.approx(full.r, abs=1e-14)
        assert limit.t == pytest.approx(full.t, abs=1e-14)


def test_complex_limit_free_particle():
    sol = complex_limit_solution(0.0, 1.7)
    assert sol.r == 0.0
    assert sol.t == 1.0
    assert sol.R == 0.0 and sol.T == 1.0


def test_complex_limit_degenerate_energy():
    with pytest.raises(DegenerateEnergy):
        complex_limit_solution(1.0, 1.0)


def test_total_reflection_in_lower_zones(zone_b_solution, zone_c_solution):
    for sol in (zone_b_solution, zone_c_solution):
        assert abs(sol.r) == pytest.approx(1.0, abs=1e-14)
        assert sol.R == 1.0
        assert sol.T == 0.0


def test_probabilities_returns_solution_fields(zone_a_solution):
    r_prob, t_prob = probabilities(zone_a_solution)
    assert r_prob == zone_a_solution.R
    assert t_prob == zone_a_solution.T


def test_boundary_matching_identities():
    # Value continuity at x=0 in symplectic components:
    #   1 + r = t + z*t_tilde   and   r_tilde = w*t + t_tilde
    for pot, energy in (
        (StepPotential(0.5, 0.6, 0.8), 2.0),
        (StepPotential(1.0, 0.5, 0.2), 0.8),
        (StepPotential(0.2, 1.0, 0.0), 0.6),
    ):
        sol = solve_step(pot, energy)
        p = sol.params
        assert 1.0 + sol.r == pytest.approx(sol.t + p.z * sol.t_tilde, abs=1e-13)
        assert sol.r_tilde == pytest.approx(p.w * sol.t + sol.t_tilde, abs=1e-13)


def test_phase_reconstruction_zone_a():
    sol = solve_step(StepPotential(0.5, 0.6, 0.8), 2.0)
    ph = phase_data(sol)
    assert ph.theta is None
    rebuilt_r = abs(sol.r) * cmath.exp(1j * (ph.theta_n - ph.theta_d))
    rebuilt_t = abs(sol.t) * cmath.exp(-1j * ph.theta_d)
    assert rebuilt_r == pytest.approx(sol.r, abs=1e-13)
    assert rebuilt_t == pytest.approx(sol.t, abs=1e-13)


def test_phase_reconstruction_lower_zones(zone_b_solution, zone_c_solution):
    for sol in (zone_b_solution, zone_c_solution):
        ph = phase_data(sol)
        assert ph.theta_n is None and ph.theta_d is None
        assert cmath.exp(2j * ph.theta) == pytest.approx(sol.r, abs=1e-13)


def test_zone_b_complex_limit_phase_value():
    # ratio sqrt((V1-E)/E) = 1 puts the half-angle at -pi/4
    ph = phase_data(solve_step(StepPotential(1.0, 0.0, 0.0), 0.5))
    assert math.isclose(ph.theta, -math.pi / 4.0, rel_tol=1e-13)


def test_delay_times_zone_a_complex_limit_is_instantaneous():
    dt = delay_times(StepPotential(0.75, 0.0, 0.0), 1.0)
    assert abs(dt.tau_r) < 1e-8
    assert abs(dt.tau_t) < 1e-8


def test_delay_times_zone_b_complex_limit_value():
    # closed form (hbar/E0)*sqrt(E0/(V1-E0)) = 2 at E0 = 0.5, V1 = 1
    dt = delay_times(StepPotential(1.0, 0.0, 0.0), 0.5)
    assert dt.tau_r == pytest.approx(2.0, abs=1e-6)
    assert dt.tau_t is None


def test_delay_times_pure_transverse_reference():
    dt = delay_times(StepPotential(0.0, 0.6, 0.0), 1.0)
    assert dt.tau_r == pytest.approx(-0.13975424877, abs=1e-9)
    # equal region-II momenta force a real t(eps), so no transmission delay
    assert dt.tau_t == 0.0


def test_delay_times_stencil_zone_crossing():
    pot = StepPotential(0.6, 0.8, 0.0)  # zone boundary at E = 1
    e0 = (1.0 - 0.5e-5) ** 2
    with pytest.raises(ZoneCrossing):
        delay_times(pot, e0)


def test_delay_times_step_validation():
    pot = StepPotential(0.0, 0.6, 0.0)
    with pytest.raises(ValueError):
        delay_times(pot, 1.0, h=0.0)
    with pytest.raises(ValueError):
        delay_times(pot, 1e-12)  # default h exceeds eps0


def test_solution_exposes_zone_params():
    sol = solve_step(StepPotential(0.3, 0.4, 1.2), 3.0)
    assert sol.params.zone is sol.zone
    assert sol.params.energy == 3.0
