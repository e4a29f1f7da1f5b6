"""Algebraic identities for the quaternion core."""

import math

from qstep import (
    Quaternion,
    from_symplectic,
    quat_conj,
    quat_mul,
    quat_norm,
    to_symplectic,
)
from qstep.quaternion import I, J, K, ONE, ZERO


def test_hamilton_table():
    assert I * J == K
    assert J * I == -K
    assert J * K == I
    assert K * J == -I
    assert K * I == J
    assert I * K == -J
    assert I * I == -ONE
    assert J * J == -ONE
    assert K * K == -ONE


def test_multiplication_is_associative():
    p = Quaternion(0.5, -1.25, 2.0, 0.75)
    q = Quaternion(-1.0, 0.5, 0.25, -2.0)
    s = Quaternion(3.0, 0.0, -0.5, 1.5)
    left = (p * q) * s
    right = p * (q * s)
    assert abs(left - right) < 1e-12


def test_conjugation_reverses_products():
    p = Quaternion(1.0, 2.0, -0.5, 0.25)
    q = Quaternion(-0.75, 0.5, 1.5, -1.0)
    assert abs((p * q).conj() - q.conj() * p.conj()) < 1e-12


def test_norm_is_multiplicative():
    p = Quaternion(1.0, -2.0, 0.5, 3.0)
    q = Quaternion(0.25, 1.0, -1.5, 0.5)
    assert math.isclose(abs(p * q), abs(p) * abs(q), rel_tol=1e-13)


def test_norm_squared_equals_q_times_conjugate():
    q = Quaternion(1.5, -0.5, 2.0, -1.0)
    prod = q * q.conj()
    assert prod.q1 == prod.q2 == prod.q3 == 0.0
    assert math.isclose(prod.q0, q.norm() ** 2, rel_tol=1e-13)


def test_arithmetic_and_equality():
    p = Quaternion(1.0, 2.0, 3.0, 4.0)
    q = Quaternion(0.5, -1.0, 0.25, 2.0)
    assert p + q == Quaternion(1.5, 1.0, 3.25, 6.0)
    assert p - q == Quaternion(0.5, 3.0, 2.75, 2.0)
    assert -p == Quaternion(-1.0, -2.0, -3.0, -4.0)
    assert p + ZERO == p
    assert p * ONE == p
    assert hash(Quaternion(1.0, 2.0, 3.0, 4.0)) == hash(p)
    assert repr(q)  # stable, non-empty


def test_components_coerced_to_float():
    q = Quaternion(1, 2, 3, 4)
    assert all(isinstance(c, float) for c in (q.q0, q.q1, q.q2, q.q3))


def test_function_forms_match_methods():
    p = Quaternion(0.1, 0.2, 0.3, 0.4)
    q = Quaternion(-1.0, 2.0, -3.0, 4.0)
    assert quat_mul(p, q) == p * q
    assert quat_conj(p) == p.conj()
    assert quat_norm(p) == p.norm() == abs(p)


def test_symplectic_round_trip_is_exact():
    q = Quaternion(0.125, -2.5, 3.75, -0.0625)
    a, b = to_symplectic(q)
    assert a == complex(0.125, -2.5)
    assert b == complex(3.75, 0.0625)
    assert from_symplectic(a, b) == q


def test_symplectic_split_reconstructs_q_as_a_plus_j_b():
    # q = a + j*b with a, b embedded as q0 + i*q1 quaternions
    q = Quaternion(1.0, -0.5, 0.75, 2.0)
    a, b = to_symplectic(q)
    a_quat = Quaternion(a.real, a.imag, 0.0, 0.0)
    b_quat = Quaternion(b.real, b.imag, 0.0, 0.0)
    assert a_quat + J * b_quat == q


def test_j_commutation_conjugates_complex_factors():
    # j*c = conj(c)*j for any complex c embedded in the i-plane
    c = Quaternion(0.3, -1.7, 0.0, 0.0)
    c_bar = Quaternion(0.3, 1.7, 0.0, 0.0)
    assert J * c == c_bar * J


def test_right_complex_multiplication_acts_on_both_halves():
    # (a + j*b)*c = a*c + j*(b*c): no conjugate on the lower half
    q = Quaternion(1.0, 2.0, -0.5, 0.25)
    c = complex(0.6, -1.1)
    a, b = to_symplectic(q)
    c_quat = Quaternion(c.real, c.imag, 0.0, 0.0)
    assert abs(q * c_quat - from_symplectic(a * c, b * c)) < 1e-15


def test_left_complex_multiplication_conjugates_lower_half():
    # c*(a + j*b) = c*a + j*(conj(c)*b)
    q = Quaternion(1.0, 2.0, -0.5, 0.25)
    c = complex(0.6, -1.1)
    a, b = to_symplectic(q)
    c_quat = Quaternion(c.real, c.imag, 0.0, 0.0)
    assert abs(c_quat * q - from_symplectic(c * a, c.conjugate() * b)) < 1e-15
