"""Operator ring: products, divisions, adjoints, mixed forms."""

import random

import pytest

from fuchsian_ops.params import frac, ratx
from fuchsian_ops.weyl import (
    D,
    DiffOp,
    THETA,
    X,
    adjoint,
    ext_euclid,
    from_mixed,
    normalize_monic,
    op_ldivmod,
    op_mul,
    op_pow,
    op_rdivmod,
    proportional,
    to_mixed,
)


def _random_op(rng, order, coeff_deg=2, names=("a", "b")):
    coeffs = []
    for _ in range(order + 1):
        c = ratx(0)
        for k in range(coeff_deg + 1):
            num = rng.randint(-4, 4)
            if num:
                term = ratx(num) * ratx("x") ** k
                if rng.random() < 0.4:
                    term = term * ratx(rng.choice(names))
                c = c + term
        coeffs.append(c)
    if coeffs[-1].is_zero():
        coeffs[-1] = ratx(1)
    return DiffOp(coeffs)


def test_basic_relations():
    # theta x = x (theta + 1) and d theta = (theta + 1) d
    theta = op_mul(X, D)
    lhs = op_mul(theta, X)
    rhs = op_mul(X, theta + DiffOp([1]))
    assert (lhs - rhs).is_zero()
    lhs = op_mul(D, theta)
    rhs = op_mul(theta + DiffOp([1]), D)
    assert (lhs - rhs).is_zero()


def test_mul_associative():
    rng = random.Random(3)
    A, B, C = (_random_op(rng, k) for k in (2, 1, 2))
    assert (op_mul(op_mul(A, B), C) - op_mul(A, op_mul(B, C))).is_zero()


def test_division_round_trip_right_and_left():
    rng = random.Random(5)
    A, B = _random_op(rng, 3), _random_op(rng, 1)
    q, r = op_rdivmod(A, B)
    assert (op_mul(q, B) + r - A).is_zero()
    assert r.order < B.order or r.is_zero()
    q, r = op_ldivmod(A, B)
    assert (op_mul(B, q) + r - A).is_zero()


def test_adjoint_involution_and_antihomomorphism():
    rng = random.Random(7)
    A, B = _random_op(rng, 2), _random_op(rng, 2)
    assert (adjoint(adjoint(A)) - A).is_zero()
    assert (adjoint(op_mul(A, B)) - op_mul(adjoint(B), adjoint(A))).is_zero()


def test_ext_euclid_bezout():
    rng = random.Random(9)
    A, B = _random_op(rng, 3), _random_op(rng, 2)
    g, u, v = ext_euclid(A, B)
    resid = op_mul(u, A) + op_mul(v, B) - g
    assert resid.is_zero()


def test_ext_euclid_detects_common_right_factor():
    rng = random.Random(11)
    F = _random_op(rng, 1)
    A = op_mul(_random_op(rng, 2), F)
    B = op_mul(_random_op(rng, 1), F)
    g, u, v = ext_euclid(A, B)
    assert g.order >= 1
    _, rem = op_rdivmod(A, g)
    assert rem.is_zero()
    _, rem = op_rdivmod(B, g)
    assert rem.is_zero()


def test_mixed_form_round_trip():
    rng = random.Random(13)
    A = _random_op(rng, 3, coeff_deg=3)
    M = to_mixed(A)
    assert (from_mixed(M) - A).is_zero()


def test_theta_form_of_theta_operator():
    theta = op_mul(X, D)
    A = op_mul(theta, theta) + theta + DiffOp([frac("a")])
    M = to_mixed(A)
    assert M.is_theta_form()
    assert (from_mixed(M) - A).is_zero()


def test_op_pow():
    assert (op_pow(D, 3) - op_mul(D, op_mul(D, D))).is_zero()
    assert op_pow(D, 0).order == 0


def test_normalize_monic_and_proportional():
    rng = random.Random(17)
    A = _random_op(rng, 2)
    B = A.scale(frac("a") + 2)
    assert proportional(A, B)
    assert (normalize_monic(A) - normalize_monic(B)).is_zero()
    assert not proportional(A, A + DiffOp([1, 1]))


def test_division_by_zero_operator():
    with pytest.raises(ZeroDivisionError):
        op_rdivmod(D, DiffOp([]))
