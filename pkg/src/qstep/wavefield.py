"""Evaluation of the stationary wave, its density and its current.

Positions fed to eval_region1/eval_region2/current_density are in the
internal length unit (hbar = 2m = 1).  Grid sampling I/O instead uses the
adimensional coordinate sqrt(V0) * x so that grids are comparable across
potentials of different height.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .quaternion import Quaternion, from_symplectic
from .scattering import ScatteringSolution
from .step import EnergyZone


@dataclass(frozen=True)
class WaveSample:
    """One grid row: adimensional x, the four components, density, current."""

    x: float
    phi0: float
    phi1: float
    phi2: float
    phi3: float
    rho: float
    j: float


def _region1_symplectic(sol: ScatteringSolution, x: float) -> tuple[complex, complex, complex, complex]:
    eps = sol.params.epsilon
    plus = cmath.exp(1j * eps * x)
    minus = cmath.exp(-1j * eps * x)
    grow = math.exp(eps * x)
    a = plus + sol.r * minus
    b = sol.r_tilde * grow
    da = 1j * eps * (plus - sol.r * minus)
    db = eps * sol.r_tilde * grow
    return a, b, da, db


def _region2_exponents(sol: ScatteringSolution) -> tuple[complex, complex]:
    p = sol.params
    if p.zone is EnergyZone.A:
        return complex(0.0, p.rho_minus), -p.nu_plus
    if p.zone is EnergyZone.B:
        return -p.nu_minus, -p.nu_plus
    return complex(-p.sigma_plus, p.sigma_minus), complex(-p.sigma_plus, -p.sigma_minus)


def _region2_symplectic(sol: ScatteringSolution, x: float) -> tuple[complex, complex, complex, complex]:
    p = sol.params
    mu1, mu2 = _region2_exponents(sol)
    c1 = sol.t * cmath.exp(mu1 * x)
    c2 = sol.t_tilde * cmath.exp(mu2 * x)
    a = c1 + p.z * c2
    b = p.w * c1 + c2
    da = mu1 * c1 + p.z * mu2 * c2
    db = p.w * mu1 * c1 + mu2 * c2
    return a, b, da, db


def eval_region1(sol: ScatteringSolution, x: float) -> Quaternion:
    """Phi(x) for x <= 0: incident + reflected + evanescent j-part."""
    if x > 0.0:
        raise ValueError("eval_region1 requires x <= 0.")
    a, b, _, _ = _region1_symplectic(sol, x)
    return from_symplectic(a, b)


def eval_region2(sol: ScatteringSolution, x: float) -> Quaternion:
    """Phi(x) for x >= 0: the two transmitted/evanescent branches."""
    if x < 0.0:
        raise ValueError("eval_region2 requires x >= 0.")
    a, b, _, _ = _region2_symplectic(sol, x)
    return from_symplectic(a, b)


def eval_region1_derivative(sol: ScatteringSolution, x: float) -> Quaternion:
    """Analytic dPhi/dx for x <= 0."""
    if x > 0.0:
        raise ValueError("eval_region1_derivative requires x <= 0.")
    _, _, da, db = _region1_symplectic(sol, x)
    return from_symplectic(da, db)


def eval_region2_derivative(sol: ScatteringSolution, x: float) -> Quaternion:
    """Analytic dPhi/dx for x >= 0."""
    if x < 0.0:
        raise ValueError("eval_region2_derivative requires x >= 0.")
    _, _, da, db = _region2_symplectic(sol, x)
    return from_symplectic(da, db)


def current_density(sol: ScatteringSolution, x: float) -> float:
    """Probability current J(x) = (hbar/2m) Sc[(dPhi^bar) i Phi - Phi^bar i dPhi].

    In symplectic components this is 2 (Im(conj(b') b) - Im(conj(a') a))
    with hbar/2m = 1.  J is piecewise constant in x for the exact
    solution: 2 eps (1 - |r|^2) on the left, (2 rho_minus (1 - |w|^2)|t|^2
    in zone A, else 0) on the right.
    """
    if x < 0.0:
        a, b, da, db = _region1_symplectic(sol, x)
    else:
        a, b, da, db = _region2_symplectic(sol, x)
    return 2.0 * ((db.conjugate() * b).imag - (da.conjugate() * a).imag)


def sample_grid(sol: ScatteringSolution, x_min: float, x_max: float, n: int) -> list[WaveSample]:
    """Sample the wave on a uniform adimensional grid sqrt(V0) x.

    Each sample holds the four real components, the density
    rho = phi0^2 + phi1^2 + phi2^2 + phi3^2 and the current J at that
    point.  Requires x_min < x_max, n >= 2 and a non-null potential
    (V0 > 0 provides the length unit).
    """
    if n < 2:
        raise ValueError("n must be at least 2.")
    if not (x_min < x_max):
        raise ValueError("x_min must be smaller than x_max.")
    v0 = sol.params.v0
    if v0 <= 0.0:
        raise ValueError("sample_grid needs V0 > 0 for the adimensional unit.")
    scale = math.sqrt(v0)

    samples: list[WaveSample] = []
    step = (x_max - x_min) / (n - 1)
    for i in range(n):
        x_ad = x_min + i * step
        x_int = x_ad / scale
        phi = eval_region1(sol, x_int) if x_int <= 0.0 else eval_region2(sol, x_int)
        rho = phi.q0 * phi.q0 + phi.q1 * phi.q1 + phi.q2 * phi.q2 + phi.q3 * phi.q3
        samples.append(
            WaveSample(
                x=x_ad,
                phi0=phi.q0,
                phi1=phi.q1,
                phi2=phi.q2,
                phi3=phi.q3,
                rho=rho,
                j=current_density(sol, x_int),
            )
        )
    return samples
