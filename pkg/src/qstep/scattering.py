"""Closed-form scattering coefficients, phases and delay times.

The stationary wave for a unit rightward wave incident on the step is

    x < 0:  Phi_I(x)  = e^{i eps x} + r e^{-i eps x} + j rtilde e^{eps x}
    x > 0:  Phi_II(x) = (1 + j w) t c1(x) + (z + j) ttilde c2(x)

where c1, c2 are the two region-II exponential branches of the zone
(oscillatory/evanescent in zone A, doubly evanescent in zone B,
damped-oscillatory in zone C).  The coefficient formulas below are the
per-zone closed forms; they are cross-checked against an independent
4x4 linear solve in qstep.oracle.

Units: hbar = 1, m = 1/2, so the dispersion is E = eps^2 and the group
velocity of the incident wave is 2 eps.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DegenerateEnergy, InternalDegeneracy, NonPositiveEnergy, ZoneCrossing
from .step import EnergyZone, StepPotential, ZoneParams, classify_zone, zone_params

# Magnitude floor below which a closed-form denominator is treated as
# collapsed rather than divided through.
DENOMINATOR_FLOOR = 1e-300

# Default central-difference step in eps for the phase derivatives.
DEFAULT_PHASE_STEP = 1e-5


@dataclass(frozen=True)
class ScatteringSolution:
    """Coefficients (r, t, rtilde, ttilde) with probabilities R, T."""

    zone: EnergyZone
    r: complex
    t: complex
    r_tilde: complex
    t_tilde: complex
    R: float
    T: float
    params: ZoneParams


@dataclass(frozen=True)
class PhaseData:
    """Reflection/transmission phases of one solution.

    Zone A carries the two full angles theta_n, theta_d with
    r = |r| e^{i(theta_n - theta_d)} and t = |t| e^{-i theta_d}.
    Zones B and C carry the half-angle theta with r = e^{2 i theta},
    defined modulo pi.
    """

    zone: EnergyZone
    theta_n: float | None = None
    theta_d: float | None = None
    theta: float | None = None


@dataclass(frozen=True)
class DelayTimes:
    """Stationary-phase delay times; tau_t only exists in zone A."""

    zone: EnergyZone
    tau_r: float
    tau_t: float | None = None


def _require(*denominators: complex) -> None:
    for d in denominators:
        if abs(d) < DENOMINATOR_FLOOR:
            raise InternalDegeneracy(f"denominator magnitude {abs(d)!r} below {DENOMINATOR_FLOOR!r}")


def solve_step(pot: StepPotential, energy: float) -> ScatteringSolution:
    """Solve the step problem for a unit incident wave.

    Returns the closed-form coefficients of the energy zone together with
    the reflection and transmission probabilities R = |r|^2 and
    T = (rho_minus/eps)(1 - |w|^2)|t|^2 (zone A; zero in zones B and C,
    where the reflection is total).
    """
    p = zone_params(pot, energy)
    eps = p.epsilon
    zw = p.zw
    w = p.w

    if p.zone is EnergyZone.A:
        rho = p.rho_minus
        nu = p.nu_plus.real
        _require(complex(eps + rho), complex(eps + nu), complex(2.0 * eps))
        bracket = 1.0 - zw * ((eps + 1j * nu) / (eps + nu)) * ((eps - 1j * rho) / (eps + rho))
        _require(bracket)
        t = (2.0 * eps / (eps + rho)) / bracket
        # r is often quoted with a common (eps - rho) prefactor that cancels
        # against the bracket; distributing it avoids a spurious 0/0 at eps ~ rho
        r = t / (2.0 * eps) * ((eps - rho) - zw * (eps - 1j * nu) * (eps - 1j * rho) / (eps + nu))
        t_tilde = -((eps - 1j * rho) / (eps + nu)) * w * t
        r_tilde = ((nu + 1j * rho) / (eps + nu)) * w * t
        transmitted = (rho / eps) * (1.0 - abs(w) ** 2) * abs(t) ** 2
    elif p.zone is EnergyZone.B:
        nm = p.nu_minus.real
        np_ = p.nu_plus.real
        _require(complex(eps, nm), complex(eps + np_), complex(2.0 * eps))
        bracket = 1.0 - zw * ((eps + nm) / (eps + 1j * nm)) * ((eps + 1j * np_) / (eps + np_))
        _require(bracket)
        t = (2.0 * eps / (eps + 1j * nm)) / bracket
        r = t / (2.0 * eps) * ((eps - 1j * nm) - zw * (eps + nm) * (eps - 1j * np_) / (eps + np_))
        t_tilde = -((eps + nm) / (eps + np_)) * w * t
        r_tilde = ((np_ - nm) / (eps + np_)) * w * t
        transmitted = 0.0
    else:
        sp = p.sigma_plus
        sm = p.sigma_minus
        d1 = complex(eps + sm, sp)
        d2 = complex(eps + sp, sm)
        _require(d1, d2, complex(2.0 * eps))
        bracket = 1.0 - zw * (complex(eps + sp, -sm) / d1) * (complex(eps - sm, sp) / d2)
        _require(bracket)
        t = (2.0 * eps / d1) / bracket
        r = t / (2.0 * eps) * (complex(eps - sm, -sp) - zw * complex(eps + sp, -sm) * complex(eps + sm, -sp) / d2)
        t_tilde = -(complex(eps + sp, -sm) / d2) * w * t
        r_tilde = (2j * sm / d2) * w * t
        transmitted = 0.0

    return ScatteringSolution(
        zone=p.zone,
        r=r,
        t=t,
        r_tilde=r_tilde,
        t_tilde=t_tilde,
        R=abs(r) ** 2,
        T=transmitted,
        params=p,
    )


def probabilities(sol: ScatteringSolution) -> tuple[float, float]:
    """Reflection and transmission probabilities (R, T)."""
    return sol.R, sol.T


def phase_data(sol: ScatteringSolution) -> PhaseData:
    """Phases of r and t from the rational forms of the coefficients.

    All angles come from the two-argument arctangent of the (imaginary,
    real) component pairs of the exact numerators/denominators, so the
    reconstruction identities hold to rounding:

      zone A:   r = |r| e^{i(theta_n - theta_d)},  t = |t| e^{-i theta_d}
      zones B/C:  r = e^{2 i theta}
    """
    p = sol.params
    eps = p.epsilon

    if p.zone is EnergyZone.A:
        zw = p.zw.real
        rho = p.rho_minus
        nu = p.nu_plus.real
        theta_n = math.atan2(
            zw * eps * (rho + nu),
            (eps - rho) * (eps + nu) - zw * (eps * eps - rho * nu),
        )
        theta_d = math.atan2(
            zw * eps * (rho - nu),
            (eps + rho) * (eps + nu) - zw * (eps * eps + rho * nu),
        )
        return PhaseData(zone=p.zone, theta_n=theta_n, theta_d=theta_d)

    if p.zone is EnergyZone.B:
        zw = p.zw.real
        nm = p.nu_minus.real
        np_ = p.nu_plus.real
        theta = math.atan2(
            zw * np_ * (eps + nm) - nm * (eps + np_),
            eps * (eps + np_) - zw * eps * (eps + nm),
        )
        return PhaseData(zone=p.zone, theta=theta)

    # zone C: with N = (eps-s_- -i s_+)(eps+s_+ +i s_-) e^{i phi}
    #             - (eps+s_+ -i s_-)(eps+s_- -i s_+) e^{-i phi}
    # the denominator of r equals -conj(N), so r = e^{2 i theta} with
    # theta = arg(i N) modulo pi.
    sp = p.sigma_plus
    sm = p.sigma_minus
    ph = cmath.exp(1j * p.phi)
    n = complex(eps - sm, -sp) * complex(eps + sp, sm) * ph - complex(eps + sp, -sm) * complex(eps + sm, -sp) / ph
    theta = math.atan2(n.real, -n.imag)
    return PhaseData(zone=p.zone, theta=theta)


def _wrap(delta: float, period: float) -> float:
    # map a phase difference into (-period/2, period/2]
    half = period / 2.0
    while delta > half:
        delta -= period
    while delta <= -half:
        delta += period
    return delta


def delay_times(pot: StepPotential, e0: float, h: float = DEFAULT_PHASE_STEP) -> DelayTimes:
    """Stationary-phase delay times at carrier energy e0.

    The phase derivatives are central differences in eps with step h,
    re-solving the step problem at eps0 +/- h.  With m/hbar = 1/2:

      zone A:    tau_r = (theta_n' - theta_d') / (2 eps0)
                 tau_t = -theta_d' / (2 eps0)
      zones B/C: tau_r = theta' / eps0

    Raises ZoneCrossing when either stencil energy leaves the zone of e0.
    """
    if not (h > 0.0) or not math.isfinite(h):
        raise ValueError("h must be a positive finite step.")
    zone0 = classify_zone(pot, e0)
    eps0 = math.sqrt(e0)
    if eps0 - h <= 0.0:
        raise ValueError("h must be smaller than sqrt(e0).")

    phases = []
    for eps in (eps0 - h, eps0 + h):
        energy = eps * eps
        try:
            zone = classify_zone(pot, energy)
        except DegenerateEnergy as exc:
            raise ZoneCrossing(f"stencil energy {energy!r} hits a zone boundary") from exc
        if zone is not zone0:
            raise ZoneCrossing(f"stencil energy {energy!r} lies in zone {zone.value}, carrier in {zone0.value}")
        phases.append(phase_data(solve_step(pot, energy)))
    lo, hi = phases

    if zone0 is EnergyZone.A:
        dn = _wrap(hi.theta_n - lo.theta_n, 2.0 * math.pi) / (2.0 * h)
        dd = _wrap(hi.theta_d - lo.theta_d, 2.0 * math.pi) / (2.0 * h)
        return DelayTimes(zone=zone0, tau_r=(dn - dd) / (2.0 * eps0), tau_t=-dd / (2.0 * eps0))

    # theta is defined modulo pi, so differences wrap with period pi
    dt = _wrap(hi.theta - lo.theta, math.pi) / (2.0 * h)
    return DelayTimes(zone=zone0, tau_r=2.0 * dt / (2.0 * eps0), tau_t=None)


def complex_limit_solution(v1: float, energy: float) -> ScatteringSolution:
    """Solution of the ordinary complex step i*v1 (v2 = v3 = 0).

    For v1 > 0 this is the quaternionic solve with a vanishing transverse
    part, whose formulas reduce exactly to the textbook complex step.  For
    v1 = 0 it is the free particle (r = 0, t = 1), assembled directly
    because a null potential has no step to classify.
    """
    if not math.isfinite(v1) or v1 < 0.0:
        raise ValueError("v1 must be finite and non-negative.")
    if v1 > 0.0:
        return solve_step(StepPotential(v1, 0.0, 0.0), energy)

    if energy <= 0.0:
        raise NonPositiveEnergy("energy must be positive")
    eps = math.sqrt(energy)
    params = ZoneParams(
        zone=EnergyZone.A,
        energy=energy,
        v1=0.0,
        v2=0.0,
        v3=0.0,
        v0=0.0,
        epsilon=eps,
        nu_plus=complex(eps, 0.0),
        nu_minus=complex(0.0, eps),
        rho_minus=eps,
        sigma_plus=0.0,
        sigma_minus=0.0,
        phi=0.0,
        z=0j,
        w=0j,
        zw=0j,
    )
    return ScatteringSolution(
        zone=EnergyZone.A, r=0j, t=1.0 + 0j, r_tilde=0j, t_tilde=0j, R=0.0, T=1.0, params=params
    )
