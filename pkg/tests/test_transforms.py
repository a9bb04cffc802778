"""Gauge transforms, convolution, and the matrix convolution blocks."""

import random
from fractions import Fraction

import pytest
import sympy

from fuchsian_ops.catalog import make
from fuchsian_ops.params import frac, ratx
from fuchsian_ops.sampling import sample_assignment
from fuchsian_ops.transforms import (
    GaugeFactor,
    addition,
    mc,
    mc_monodromy,
    order_drop,
    theta_conjugate,
)
from fuchsian_ops.weyl import (
    D,
    DiffOp,
    THETA,
    clear_x_denominators,
    op_mul,
    proportional,
)


def test_addition_inverse():
    A = make("E2", {"A": frac("A"), "B": frac("B"), "C": frac("C")}).op
    f = GaugeFactor(frac("p"), frac("q"))
    back = addition(addition(A, f), f.inverse())
    assert (back - A).is_zero()


def test_addition_on_d_gives_logarithmic_derivative():
    x = ratx("x")
    out = addition(D, GaugeFactor(frac("p"), 0))
    expected = D - DiffOp([frac("p") / x])
    assert (out - expected).is_zero()


def test_theta_conjugate_on_theta_polynomial():
    from fuchsian_ops.weyl import X

    c = frac("s")
    theta = op_mul(X, D)
    A = op_mul(theta + DiffOp([1]), theta)
    out = theta_conjugate(A, c)
    expected = op_mul(theta + DiffOp([c + 1]), theta + DiffOp([c]))
    assert (out - expected).is_zero()


def test_mc_zero_is_identity_sampled(rng):
    asg = sample_assignment(("A", "B", "C"), rng)
    A = make("E2", asg).op
    out, info = mc(A, 0)
    assert proportional(out, A)
    assert info.mu == 0


def test_order_drop_integer_exponents(rng):
    asg = sample_assignment(("A", "B", "C"), rng)
    A = make("E2", asg).op
    # generic mu creates no integral exponents at infinity: drop = -2 + 2
    assert order_drop(A, Fraction(1, 7)) in (-2, -1, 0)


def test_mc_monodromy_block_shapes():
    t = sympy.Symbol("t")
    A0 = sympy.Matrix(2, 2, lambda i, j: sympy.Symbol(f"a{i}{j}"))
    A1 = sympy.Matrix(2, 2, lambda i, j: sympy.Symbol(f"b{i}{j}"))
    mu0, mu1 = mc_monodromy(A0, A1, t)
    n = 2
    I = sympy.eye(n)
    assert mu0[:n, :n] == t * A0
    assert mu0[:n, n:] == t * (A1 - I)
    assert mu0[n:, :n] == sympy.zeros(n)
    assert mu0[n:, n:] == I
    assert mu1[:n, :n] == I
    assert mu1[:n, n:] == sympy.zeros(n)
    assert mu1[n:, :n] == A0 - I
    assert mu1[n:, n:] == t * A1


def test_mc_monodromy_determinant(rng):
    t = sympy.Symbol("t")
    for _ in range(3):
        A0 = sympy.Matrix(3, 3, lambda i, j: Fraction(rng.randint(-5, 5), rng.choice((1, 2, 3))))
        A1 = sympy.Matrix(3, 3, lambda i, j: Fraction(rng.randint(-5, 5), rng.choice((1, 2, 3))))
        mu0, _ = mc_monodromy(A0, A1, t)
        assert sympy.expand(mu0.det() - t ** 3 * A0.det()) == 0


def test_mc_monodromy_size_mismatch():
    from fuchsian_ops.transforms import SizeMismatch

    with pytest.raises(SizeMismatch):
        mc_monodromy(sympy.eye(2), sympy.eye(3), 2)
