"""Analytic scattering of quaternionic wave functions on a 1D potential step.

Units: hbar = 1, m = 1/2.  The potential is i v1 + j v2 + k v3 for x > 0
and zero for x < 0; see qstep.step for the energy-zone taxonomy.
"""

from __future__ import annotations

from .errors import (
    DegenerateEnergy,
    InternalDegeneracy,
    NonPositiveEnergy,
    QStepError,
    SingularSystem,
    UnresolvedPeak,
    ZoneCrossing,
)
from .oracle import (
    MatchingCoefficients,
    PacketArrival,
    PacketSpec,
    ResidualReport,
    linear_matching_solve,
    matching_residual,
    ode_residual,
    packet_arrival,
    time_reversal_residual,
)
from .quaternion import (
    Quaternion,
    from_symplectic,
    quat_conj,
    quat_mul,
    quat_norm,
    to_symplectic,
)
from .rng import SplitMix64
from .scattering import (
    DelayTimes,
    PhaseData,
    ScatteringSolution,
    complex_limit_solution,
    delay_times,
    phase_data,
    probabilities,
    solve_step,
)
from .step import EnergyZone, StepPotential, ZoneParams, classify_zone, zone_params
from .verify import PropertyResult, random_cases, run_verification
from .wavefield import (
    WaveSample,
    current_density,
    eval_region1,
    eval_region1_derivative,
    eval_region2,
    eval_region2_derivative,
    sample_grid,
)

__version__ = "0.1.0"

__all__ = [
    "DegenerateEnergy",
    "DelayTimes",
    "EnergyZone",
    "InternalDegeneracy",
    "MatchingCoefficients",
    "NonPositiveEnergy",
    "PacketArrival",
    "PacketSpec",
    "PhaseData",
    "PropertyResult",
    "QStepError",
    "Quaternion",
    "ResidualReport",
    "ScatteringSolution",
    "SingularSystem",
    "SplitMix64",
    "StepPotential",
    "UnresolvedPeak",
    "WaveSample",
    "ZoneCrossing",
    "ZoneParams",
    "classify_zone",
    "complex_limit_solution",
    "current_density",
    "delay_times",
    "eval_region1",
    "eval_region1_derivative",
    "eval_region2",
    "eval_region2_derivative",
    "from_symplectic",
    "linear_matching_solve",
    "matching_residual",
    "ode_residual",
    "packet_arrival",
    "phase_data",
    "probabilities",
    "quat_conj",
    "quat_mul",
    "quat_norm",
    "random_cases",
    "run_verification",
    "sample_grid",
    "solve_step",
    "time_reversal_residual",
    "to_symplectic",
    "zone_params",
    "__version__",
]
