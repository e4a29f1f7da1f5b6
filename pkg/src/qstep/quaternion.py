"""Real quaternion algebra with the symplectic complex decomposition.

A quaternion q = q0 + i q1 + j q2 + k q3 is stored as four floats and
split into the complex pair (a, b) with q = a + j b, where a = q0 + i q1
and b = q2 - i q3.  With this convention, for a complex number c:

    q * c  ->  (a c, b c)
    c * q  ->  (c a, conj(c) b)

which encodes the anti-commutation rule j c = conj(c) j.
"""

from __future__ import annotations

import math


class Quaternion:
    __slots__ = ("q0", "q1", "q2", "q3")

    def __init__(self, q0: float, q1: float, q2: float, q3: float) -> None:
        self.q0 = float(q0)
        self.q1 = float(q1)
        self.q2 = float(q2)
        self.q3 = float(q3)

    def __repr__(self) -> str:
        return f"Quaternion({self.q0!r}, {self.q1!r}, {self.q2!r}, {self.q3!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Quaternion):
            return NotImplemented
        return (self.q0, self.q1, self.q2, self.q3) == (other.q0, other.q1, other.q2, other.q3)

    def __hash__(self) -> int:
        return hash((self.q0, self.q1, self.q2, self.q3))

    def __add__(self, other: Quaternion) -> Quaternion:
        return Quaternion(self.q0 + other.q0, self.q1 + other.q1, self.q2 + other.q2, self.q3 + other.q3)

    def __sub__(self, other: Quaternion) -> Quaternion:
        return Quaternion(self.q0 - other.q0, self.q1 - other.q1, self.q2 - other.q2, self.q3 - other.q3)

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.q0, -self.q1, -self.q2, -self.q3)

    def __mul__(self, other: Quaternion) -> Quaternion:
        p0, p1, p2, p3 = self.q0, self.q1, self.q2, self.q3
        r0, r1, r2, r3 = other.q0, other.q1, other.q2, other.q3
        return Quaternion(
            p0 * r0 - p1 * r1 - p2 * r2 - p3 * r3,
            p0 * r1 + p1 * r0 + p2 * r3 - p3 * r2,
            p0 * r2 - p1 * r3 + p2 * r0 + p3 * r1,
            p0 * r3 + p1 * r2 - p2 * r1 + p3 * r0,
        )

    def conj(self) -> Quaternion:
        return Quaternion(self.q0, -self.q1, -self.q2, -self.q3)

    def norm(self) -> float:
        return math.sqrt(self.q0 * self.q0 + self.q1 * self.q1 + self.q2 * self.q2 + self.q3 * self.q3)

    def __abs__(self) -> float:
        return self.norm()


ZERO = Quaternion(0.0, 0.0, 0.0, 0.0)
ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def quat_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    return p * q


def quat_conj(q: Quaternion) -> Quaternion:
    return q.conj()


def quat_norm(q: Quaternion) -> float:
    return q.norm()


def to_symplectic(q: Quaternion) -> tuple[complex, complex]:
    """Split q = a + j b into (a, b) with a = q0 + i q1, b = q2 - i q3."""
    return complex(q.q0, q.q1), complex(q.q2, -q.q3)


def from_symplectic(a: complex, b: complex) -> Quaternion:
    """Rebuild q = a + j b; inverse of to_symplectic."""
    a = complex(a)
    b = complex(b)
    return Quaternion(a.real, a.imag, b.real, -b.imag)
