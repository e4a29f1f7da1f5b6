"""Independent numerical checks of the closed-form solution.

Nothing in this module reuses the closed-form coefficient algebra: the
4x4 matching solve rebuilds (r, rtilde, t, ttilde) from the boundary
conditions alone, the ODE residual probes the differential equation with
finite differences, the time-reversal residual probes the conjugated
field, and the packet oracle measures arrival times from an actual
wave-packet synthesis instead of stationary-phase derivatives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DegenerateEnergy, SingularSystem, UnresolvedPeak, ZoneCrossing
from .quaternion import Quaternion
from .scattering import ScatteringSolution, delay_times, solve_step
from .step import EnergyZone, StepPotential, ZoneParams, classify_zone, zone_params
from .wavefield import (
    eval_region1,
    eval_region1_derivative,
    eval_region2,
    eval_region2_derivative,
)

PIVOT_FLOOR = 1e-12

# 21 abscissae straddling the step, none closer than 0.15 to the kink.
TIME_REVERSAL_GRID = tuple(-3.15 + 0.3 * i for i in range(21))

_I = Quaternion(0.0, 1.0, 0.0, 0.0)


class MatchingCoefficients(NamedTuple):
    r: complex
    r_tilde: complex
    t: complex
    t_tilde: complex


@dataclass(frozen=True)
class ResidualReport:
    max_abs: float
    descriptor: str
    converged: bool


@dataclass(frozen=True)
class PacketSpec:
    """Gaussian packet in momentum: center sqrt(e0), width sigma_eps.

    n_quad trapezoid nodes cover sqrt(e0) +/- 5 sigma_eps.  t_scan is
    (t_min, t_max, n_t); when None the window is centered on the
    stationary-phase prediction with half-width max(10, 5 |tau|) and
    2001 points.
    """

    e0: float
    sigma_eps: float
    n_quad: int = 4001
    t_scan: tuple[float, float, int] | None = None

    def __post_init__(self) -> None:
        if not (self.e0 > 0.0 and math.isfinite(self.e0)):
            raise ValueError("e0 must be positive and finite.")
        if not (self.sigma_eps > 0.0 and math.isfinite(self.sigma_eps)):
            raise ValueError("sigma_eps must be positive and finite.")
        if math.sqrt(self.e0) - 5.0 * self.sigma_eps <= 0.0:
            raise ValueError("momentum support must stay positive: need sqrt(e0) > 5 sigma_eps.")
        if self.n_quad < 9:
            raise ValueError("n_quad must be at least 9.")
        if self.t_scan is not None:
            t_min, t_max, n_t = self.t_scan
            if not (t_min < t_max):
                raise ValueError("t_scan window must have t_min < t_max.")
            if n_t < 5:
                raise ValueError("t_scan must have at least 5 points.")


@dataclass
class PacketArrival:
    """Measured vs predicted arrival times plus the scanned |psi| series."""

    zone: EnergyZone
    tau_r_predicted: float
    tau_r_measured: float
    tau_t_predicted: float | None
    tau_t_measured: float | None
    times: np.ndarray
    abs_refl: np.ndarray
    abs_trans: np.ndarray | None


def _region2_exponents(params: ZoneParams) -> tuple[complex, complex]:
    # growth rates of the two region-II branches
    if params.zone is EnergyZone.A:
        return complex(0.0, params.rho_minus), -params.nu_plus
    if params.zone is EnergyZone.B:
        return -params.nu_minus, -params.nu_plus
    return (
        complex(-params.sigma_plus, params.sigma_minus),
        complex(-params.sigma_plus, -params.sigma_minus),
    )


def linear_matching_solve(pot: StepPotential, energy: float) -> MatchingCoefficients:
    """Solve the x = 0 matching conditions as a dense 4x4 linear system.

    With region II written as a(x) = t e^{mu1 x} + z ttilde e^{mu2 x} and
    b(x) = w t e^{mu1 x} + ttilde e^{mu2 x}, continuity of (a, b) and of
    their derivatives at x = 0 gives four equations in the unknown vector
    (r, rtilde, t, ttilde):

        -r                 +       t + z ttilde     = 1
              - rtilde     +     w t +   ttilde     = 0
        i eps r            +   mu1 t + mu2 z ttilde = i eps
              - eps rtilde + mu1 w t + mu2 ttilde   = 0

    solved by Gaussian elimination with scaled partial pivoting.
    """
    p = zone_params(pot, energy)
    eps = p.epsilon
    mu1, mu2 = _region2_exponents(p)
    ieps = 1j * eps

    a: list[list[complex]] = [
        [-1.0 + 0j, 0j, 1.0 + 0j, p.z, 1.0 + 0j],
        [0j, -1.0 + 0j, p.w, 1.0 + 0j, 0j],
        [ieps, 0j, mu1, mu2 * p.z, ieps],
        [0j, complex(-eps), mu1 * p.w, mu2, 0j],
    ]

    scale = [max(abs(row[j]) for j in range(4)) for row in a]
    order = [0, 1, 2, 3]
    for col in range(4):
        best = max(range(col, 4), key=lambda i: abs(a[order[i]][col]) / scale[order[i]])
        order[col], order[best] = order[best], order[col]
        row = order[col]
        if abs(a[row][col]) < PIVOT_FLOOR * scale[row]:
            raise SingularSystem(
                f"pivot {abs(a[row][col])!r} below {PIVOT_FLOOR!r} of row norm {scale[row]!r}"
            )
        for below in order[col + 1 :]:
            factor = a[below][col] / a[row][col]
            if factor != 0:
                for j in range(col, 5):
                    a[below][j] -= factor * a[row][j]

    x = [0j, 0j, 0j, 0j]
    for col in range(3, -1, -1):
        row = order[col]
        acc = a[row][4]
        for j in range(col + 1, 4):
            acc -= a[row][j] * x[j]
        x[col] = acc / a[row][col]

    return MatchingCoefficients(r=x[0], r_tilde=x[1], t=x[2], t_tilde=x[3])


def _scaled(q: Quaternion, s: float) -> Quaternion:
    return Quaternion(q.q0 * s, q.q1 * s, q.q2 * s, q.q3 * s)


def _eval(sol: ScatteringSolution, x: float) -> Quaternion:
    return eval_region1(sol, x) if x <= 0.0 else eval_region2(sol, x)


def _fd_second(sol: ScatteringSolution, x: float, h: float) -> tuple[Quaternion, Quaternion]:
    phi_0 = _eval(sol, x)
    second = _scaled(_eval(sol, x + h) + _eval(sol, x - h) - _scaled(phi_0, 2.0), 1.0 / (h * h))
    return phi_0, second


def ode_residual(sol: ScatteringSolution, x: float, h: float = 1e-3) -> float:
    """|i Phi''_fd - V Phi + Phi i E| at one interior point.

    V is the step quaternion i v1 + j v2 + k v3 for x > 0 and zero for
    x < 0.  The analytic solution satisfies the equation exactly, so the
    returned magnitude is pure finite-difference truncation, O(h^2).
    Requires x != 0 and |x| >= h so the stencil stays on one side.
    """
    if not (h > 0.0 and math.isfinite(h)):
        raise ValueError("h must be a positive finite step.")
    if x == 0.0:
        raise ValueError("x must be away from the kink at 0.")
    if abs(x) < h:
        raise ValueError("stencil x +/- h must stay on one side of the step.")
    p = sol.params
    phi_0, second = _fd_second(sol, x, h)
    res = _I * second + _scaled(phi_0 * _I, p.energy)
    if x > 0.0:
        res = res - Quaternion(0.0, p.v1, p.v2, p.v3) * phi_0
    return res.norm()


def matching_residual(sol: ScatteringSolution) -> ResidualReport:
    """Value and derivative mismatch of the two region solutions at x = 0."""
    value_gap = (eval_region1(sol, 0.0) - eval_region2(sol, 0.0)).norm()
    deriv_gap = (eval_region1_derivative(sol, 0.0) - eval_region2_derivative(sol, 0.0)).norm()
    worst = max(value_gap, deriv_gap)
    return ResidualReport(
        max_abs=worst,
        descriptor=f"x=0 value/derivative matching, zone {sol.zone.value}",
        converged=worst < 1e-12,
    )


def time_reversal_residual(pot: StepPotential, energy: float, h: float = 1e-3) -> float:
    """Max residual of the time-reversed equation for Xi = u Phi u^bar.

    The reversal unit is u = k e^{i theta} with theta the phase of
    W = v2 - i v3 (theta = 0 when v2 = v3 = 0).  Xi must satisfy

        u Phi (-iE) u^bar + i Xi'' - (i v1 + j v2 + k v3) Xi = 0

    with the same potential on x > 0 and none on x < 0.  Xi'' is taken by
    central differences, so the analytic zero shows up as pure O(h^2)
    truncation; the max over TIME_REVERSAL_GRID is returned.
    """
    if not (h > 0.0 and math.isfinite(h)):
        raise ValueError("h must be a positive finite step.")
    sol = solve_step(pot, energy)
    if pot.v2 == 0.0 and pot.v3 == 0.0:
        theta = 0.0
    else:
        theta = math.atan2(-pot.v3, pot.v2)
    u = Quaternion(0.0, 0.0, math.sin(theta), math.cos(theta))
    u_bar = u.conj()
    v_quat = Quaternion(0.0, pot.v1, pot.v2, pot.v3)

    worst = 0.0
    for x in TIME_REVERSAL_GRID:
        phi_0 = _eval(sol, x)
        xi_0 = u * phi_0 * u_bar
        xi_m = u * _eval(sol, x - h) * u_bar
        xi_p = u * _eval(sol, x + h) * u_bar
        xi_second = _scaled(xi_p + xi_m - _scaled(xi_0, 2.0), 1.0 / (h * h))
        res = _scaled(u * (phi_0 * _I) * u_bar, -energy) + _I * xi_second
        if x > 0.0:
            res = res - v_quat * xi_0
        worst = max(worst, res.norm())
    return worst


def _refine_peak(times: np.ndarray, magnitudes: np.ndarray, label: str) -> float:
    k = int(np.argmax(magnitudes))
    if k == 0 or k == len(times) - 1:
        raise UnresolvedPeak(f"{label} peak sits on the scan boundary; widen t_scan")
    y_lo, y_mid, y_hi = magnitudes[k - 1], magnitudes[k], magnitudes[k + 1]
    denom = y_lo - 2.0 * y_mid + y_hi
    if denom == 0.0:
        return float(times[k])
    shift = 0.5 * (y_lo - y_hi) / denom
    dt = times[1] - times[0]
    return float(times[k] + shift * dt)


def packet_arrival(pot: StepPotential, spec: PacketSpec) -> PacketArrival:
    """Measure arrival times by synthesizing a Gaussian wave packet.

    The reflected field at x = 0 is the quadrature
    psi_refl(t) = sum_quad g(eps) r(eps) e^{-i eps^2 t} over trapezoid
    nodes (zone A also synthesizes the transmitted analogue with t(eps)),
    and the arrival is the parabolic-refined maximum of |psi| over the
    scan window.  All node energies must share the zone of e0, else
    ZoneCrossing.
    """
    eps0 = math.sqrt(spec.e0)
    sig = spec.sigma_eps
    lo = eps0 - 5.0 * sig
    hi = eps0 + 5.0 * sig

    zone0 = classify_zone(pot, spec.e0)
    for edge in (lo, hi):
        try:
            zone_edge = classify_zone(pot, edge * edge)
        except DegenerateEnergy as exc:
            raise ZoneCrossing(f"packet support touches a zone boundary at eps={edge!r}") from exc
        if zone_edge is not zone0:
            raise ZoneCrossing(
                f"packet support spans zones {zone0.value} and {zone_edge.value}; shrink sigma_eps"
            )

    predicted = delay_times(pot, spec.e0)

    nodes = np.linspace(lo, hi, spec.n_quad)
    weights = np.full(spec.n_quad, nodes[1] - nodes[0])
    weights[0] *= 0.5
    weights[-1] *= 0.5
    envelope = np.exp(-((nodes - eps0) ** 2) / (2.0 * sig * sig))

    r_vals = np.empty(spec.n_quad, dtype=complex)
    t_vals = np.empty(spec.n_quad, dtype=complex)
    for idx, eps in enumerate(nodes):
        sol = solve_step(pot, float(eps) * float(eps))
        r_vals[idx] = sol.r
        t_vals[idx] = sol.t

    if spec.t_scan is not None:
        t_min, t_max, n_t = spec.t_scan
    else:
        centers = [predicted.tau_r]
        if predicted.tau_t is not None:
            centers.append(predicted.tau_t)
        half = max(10.0, 5.0 * max(abs(c) for c in centers))
        t_min = min(centers) - half
        t_max = max(centers) + half
        n_t = 2001
    times = np.linspace(t_min, t_max, n_t)

    amp_refl = weights * envelope * r_vals
    amp_trans = weights * envelope * t_vals if zone0 is EnergyZone.A else None

    esq = nodes * nodes
    abs_refl = np.empty(n_t)
    abs_trans = np.empty(n_t) if amp_trans is not None else None
    chunk = max(1, 2_000_000 // spec.n_quad)
    for start in range(0, n_t, chunk):
        stop = min(start + chunk, n_t)
        kernel = np.exp(-1j * np.outer(times[start:stop], esq))
        abs_refl[start:stop] = np.abs(kernel @ amp_refl)
        if abs_trans is not None:
            abs_trans[start:stop] = np.abs(kernel @ amp_trans)

    tau_r_measured = _refine_peak(times, abs_refl, "reflected")
    tau_t_measured = _refine_peak(times, abs_trans, "transmitted") if abs_trans is not None else None

    return PacketArrival(
        zone=zone0,
        tau_r_predicted=predicted.tau_r,
        tau_r_measured=tau_r_measured,
        tau_t_predicted=predicted.tau_t,
        tau_t_measured=tau_t_measured,
        times=times,
        abs_refl=abs_refl,
        abs_trans=abs_trans,
    )
