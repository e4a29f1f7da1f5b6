"""Shared fixtures: seeded case sweeps reused across test modules."""

import pytest

from qstep import StepPotential, solve_step
from qstep.verify import random_cases


@pytest.fixture(scope="session")
def sweep_10k():
    """The seeded 10^4-case sweep spanning all three zones."""
    return random_cases(seed=1, n=10000)


@pytest.fixture(scope="session")
def zone_a_solution():
    """Reference zone-A solution with a pure transverse potential."""
    return solve_step(StepPotential(0.0, 0.6, 0.0), 1.0)


@pytest.fixture(scope="session")
def zone_b_solution():
    return solve_step(StepPotential(1.0, 0.5, 0.2), 0.8)


@pytest.fixture(scope="session")
def zone_c_solution():
    return solve_step(StepPotential(0.0, 1.0, 0.0), 0.6)
