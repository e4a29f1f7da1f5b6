"""Exceptions raised by the qstep solvers and oracles."""

from __future__ import annotations


class QStepError(Exception):
    """Base class for all qstep-specific failures."""


class NonPositiveEnergy(QStepError):
    """Energy must be strictly positive."""


class DegenerateEnergy(QStepError):
    """Energy sits on (or within tolerance of) a zone boundary."""


class InternalDegeneracy(QStepError):
    """A closed-form denominator collapsed below the representable floor."""


class ZoneCrossing(QStepError):
    """A finite-difference or packet stencil straddles a zone boundary."""


class SingularSystem(QStepError):
    """The 4x4 matching system has no usable pivot."""


class UnresolvedPeak(QStepError):
    """The packet scan window does not bracket the arrival maximum."""
