"""Step potential model and energy-zone kinematics.

The potential is the anti-hermitian step i v1 + j v2 + k v3 for x > 0 and
zero for x < 0, in units with hbar = 1 and m = 1/2 (so hbar^2/2m = 1 and
energies are eps^2 for incident momentum eps).

For step height V0 = sqrt(v1^2 + v2^2 + v3^2) and transverse magnitude
|W| = sqrt(v2^2 + v3^2) the positive energy axis splits into three zones:

    A:  E > V0                 partial transmission
    B:  |W| < E < V0           evanescent region II, total reflection
    C:  0 < E < |W|            oscillating-damped region II, total reflection
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .errors import DegenerateEnergy, NonPositiveEnergy

# Relative margin around zone boundaries inside which the closed forms
# are considered degenerate.
BOUNDARY_MARGIN = 1e-12


class EnergyZone(Enum):
    A = "A"
    B = "B"
    C = "C"


@dataclass(frozen=True)
class StepPotential:
    """Anti-hermitian step amplitudes (v1, v2, v3), v1 >= 0, not all zero."""

    v1: float
    v2: float
    v3: float

    def __post_init__(self) -> None:
        for name in ("v1", "v2", "v3"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite.")
        if self.v1 < 0.0:
            raise ValueError("v1 must be non-negative.")
        if self.v1 == 0.0 and self.v2 == 0.0 and self.v3 == 0.0:
            raise ValueError("potential must be non-zero.")

    @property
    def v0(self) -> float:
        """Step height sqrt(v1^2 + v2^2 + v3^2)."""
        return math.sqrt(self.v1 * self.v1 + self.v2 * self.v2 + self.v3 * self.v3)

    @property
    def w_mag(self) -> float:
        """Transverse magnitude sqrt(v2^2 + v3^2)."""
        return math.hypot(self.v2, self.v3)


@dataclass(frozen=True)
class ZoneParams:
    """Kinematic parameters of one (potential, energy) pair.

    epsilon is the incident momentum sqrt(E).  nu_minus and nu_plus are the
    complex decay constants of the two region-II branches, stored for every
    zone (zone A: nu_minus = i rho_minus; zone C: nu_minus/plus =
    sigma_plus -/+ i sigma_minus).  rho_minus is non-zero only in zone A,
    sigma_plus/sigma_minus and phi only in zone C.  z and w are the
    quaternionic mixing amplitudes of the two branches and zw their product
    (real in zones A/B, exp(-2i phi) in zone C).
    """

    zone: EnergyZone
    energy: float
    v1: float
    v2: float
    v3: float
    v0: float
    epsilon: float
    nu_plus: complex
    nu_minus: complex
    rho_minus: float
    sigma_plus: float
    sigma_minus: float
    phi: float
    z: complex
    w: complex
    zw: complex


def classify_zone(pot: StepPotential, energy: float) -> EnergyZone:
    """Classify energy into zone A, B or C, rejecting boundary values.

    Raises NonPositiveEnergy for energy <= 0 and DegenerateEnergy when
    energy is within BOUNDARY_MARGIN * V0 of either zone boundary.
    """
    if not math.isfinite(energy):
        raise ValueError("energy must be finite.")
    if energy <= 0.0:
        raise NonPositiveEnergy("energy must be positive")
    v0 = pot.v0
    w_mag = pot.w_mag
    margin = BOUNDARY_MARGIN * v0
    if abs(energy - v0) < margin:
        raise DegenerateEnergy(f"energy {energy!r} is within {margin!r} of the step height {v0!r}")
    if abs(energy - w_mag) < margin:
        raise DegenerateEnergy(f"energy {energy!r} is within {margin!r} of the lower zone edge {w_mag!r}")
    if energy > v0:
        return EnergyZone.A
    if energy > w_mag:
        return EnergyZone.B
    return EnergyZone.C


def zone_params(pot: StepPotential, energy: float) -> ZoneParams:
    """Momenta, decay constants and mixing amplitudes for one case."""
    zone = classify_zone(pot, energy)
    v1, v2, v3 = pot.v1, pot.v2, pot.v3
    eps = math.sqrt(energy)
    w_sq = v2 * v2 + v3 * v3
    disc = energy * energy - w_sq

    rho_minus = 0.0
    sigma_plus = 0.0
    sigma_minus = 0.0
    phi = 0.0

    if zone is EnergyZone.C:
        # disc < 0: both branches share the damping sigma_plus and
        # counter-rotate with sigma_minus; the mixing amplitudes pick up
        # the phase exp(-i phi) with cos(phi) = E / |W|.
        w_mag = math.sqrt(w_sq)
        b2 = math.sqrt(v1 * v1 + w_sq - energy * energy)
        sigma_plus = math.sqrt((b2 + v1) / 2.0)
        sigma_minus = math.sqrt((b2 - v1) / 2.0)
        phi = math.atan2(math.sqrt(w_sq - energy * energy), energy)
        nu_minus = complex(sigma_plus, -sigma_minus)
        nu_plus = complex(sigma_plus, sigma_minus)
        phase = cmath.exp(-1j * phi)
        z = complex(-v3, v2) / w_mag * phase
        w = complex(-v3, -v2) / w_mag * phase
        zw = cmath.exp(-2j * phi)
    else:
        q = math.sqrt(disc)
        if zone is EnergyZone.A:
            rho_minus = math.sqrt(q - v1)
            nu_minus = complex(0.0, rho_minus)
            nu_plus = complex(math.sqrt(q + v1), 0.0)
        else:
            nu_minus = complex(math.sqrt(v1 - q), 0.0)
            nu_plus = complex(math.sqrt(v1 + q), 0.0)
        d = energy + q
        z = complex(-v3, v2) / d
        w = complex(-v3, -v2) / d
        zw = complex(w_sq / (d * d), 0.0)

    return ZoneParams(
        zone=zone,
        energy=energy,
        v1=v1,
        v2=v2,
        v3=v3,
        v0=pot.v0,
        epsilon=eps,
        nu_plus=nu_plus,
        nu_minus=nu_minus,
        rho_minus=rho_minus,
        sigma_plus=sigma_plus,
        sigma_minus=sigma_minus,
        phi=phi,
        z=z,
        w=w,
        zw=zw,
    )
