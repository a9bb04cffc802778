"""Gauge transforms, middle convolution, and the conjugation pipelines.

The addition Ad(f)P = f o P o f^{-1} with f = x^l0 (x-1)^l1 substitutes
d -> d - l0/x - l1/(x-1).  The middle convolution mc_mu rewrites d^k o P in
pure (theta, d)-form, replaces theta by theta - mu, and strips the maximal
left power of d.  The pipelines connect the order-3 specialization with the
order-6/order-5 ones by exactly these two moves plus a conjugation by a
symbolic power of d.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import RiemannScheme, riemann_scheme
from .params import ParamFrac, frac, ratx
from .weyl import (
    D,
    DiffOp,
    NonPolynomialCoefficients,
    ONE_OP,
    clear_param_content,
    clear_x_denominators,
    from_mixed,
    op_ldivmod,
    op_mul,
    proportional,
    theta_shift,
    to_mixed,
)

__all__ = [
    "GaugeFactor",
    "McParams",
    "NoThetaForm",
    "NotLeftDivisible",
    "SizeMismatch",
    "addition",
    "mc",
    "order_drop",
    "theta_conjugate",
    "se3_to_se6",
    "se6_to_se3",
    "se5_to_se3",
    "mc_monodromy",
]


class NoThetaForm(ValueError):
    """No left power of d up to the search bound yields a pure theta-form."""


class NotLeftDivisible(ValueError):
    """A pipeline step expected an exact left division by d."""


class SizeMismatch(ValueError):
    """Monodromy blocks must be square matrices of one size."""


@dataclass(frozen=True)
class GaugeFactor:
    """Exponents of the gauge function x^lam0 (x-1)^lam1."""

    lam0: ParamFrac
    lam1: ParamFrac

    def __post_init__(self):
        object.__setattr__(self, "lam0", _pf(self.lam0))
        object.__setattr__(self, "lam1", _pf(self.lam1))

    def inverse(self) -> "GaugeFactor":
        return GaugeFactor(-self.lam0, -self.lam1)


@dataclass(frozen=True)
class McParams:
    """Audit record of a middle convolution run."""

    mu: ParamFrac
    k: int
    ell: int


def _pf(v) -> ParamFrac:
    return v if isinstance(v, ParamFrac) else frac(v)


def addition(A: DiffOp, f) -> DiffOp:
    """Conjugate by x^lam0 (x-1)^lam1 (exact, in closed form)."""
    if not isinstance(f, GaugeFactor):
        f = GaugeFactor(*f)
    x = ratx("x")
    dnew = D - DiffOp([f.lam0 / x + f.lam1 / (x - 1)])
    out = DiffOp([])
    power = ONE_OP
    for j, c in enumerate(A.coeffs):
        if j:
            power = op_mul(power, dnew)
        if not c.is_zero():
            out = out + power.scale(c)
    return out


def _least_theta_power(A: DiffOp):
    """Least k <= 2*order with d^k o A in pure (theta, d)-form."""
    bound = 2 * max(A.order, 1)
    cur = A
    for k in range(bound + 1):
        M = to_mixed(cur)
        if M.is_theta_form():
            return k, M
        cur = op_mul(D, cur)
    return None


def _strip_left_d(A: DiffOp, times=None):
    """Divide from the left by d as often as possible (or exactly `times`)."""
    ell = 0
    while A and (times is None or ell < times):
        quo, rem = op_ldivmod(A, D)
        if not rem.is_zero():
            break
        A, ell = quo, ell + 1
    if times is not None and ell != times:
        raise NotLeftDivisible(f"expected d^{times} on the left, got d^{ell}")
    return A, ell


def mc(A: DiffOp, mu) -> tuple[DiffOp, McParams]:
    """Middle convolution with parameter mu.

    Returns the operator (content-cleared) and the audit record; asserts the
    result is independent of the padding power k by recomputing with k+1.
    """
    mu = _pf(mu)
    if not A.is_polynomial():
        raise NonPolynomialCoefficients("mc needs polynomial coefficients; clear first")

    found = _least_theta_power(A)
    if found is None:
        raise NoThetaForm(f"no theta-form for d^k o A with k <= {2 * max(A.order, 1)}")
    k, M = found

    def convolve(mixed):
        shifted = theta_shift(mixed, -mu)
        op = from_mixed(shifted)
        op, ell = _strip_left_d(op)
        return clear_param_content(op), ell

    result, ell = convolve(M)
    # k-independence: one extra left power of d must give the same operator
    again, _ = convolve(to_mixed(op_mul(D, from_mixed(M))))
    assert proportional(result, again), "mc result depends on the padding power"
    return result, McParams(mu, k, ell)


def order_drop(A: DiffOp, mu) -> int:
    """Predicted order drop of mc_mu from the Riemann scheme of A."""
    mu = _pf(mu)
    scheme = riemann_scheme(A)
    d = -A.order
    for v in scheme.at0:
        d += _is_int(v)
    for v in scheme.at1:
        d += _is_int(v)
    for v in scheme.at_inf:
        d += _is_int(v - mu)
    return d


def _is_int(v: ParamFrac) -> bool:
    return v.is_const() and v.as_rat().denominator == 1


def theta_conjugate(A: DiffOp, c) -> DiffOp:
    """d^c o A o d^{-c} for a symbolic exponent c, when the result lies in D.

    Implemented as: pad with the least d^k giving a theta-form, substitute
    theta -> theta + c, and strip d^k back off the left.
    """
    found = _least_theta_power(A)
    if found is None:
        raise NoThetaForm("operator has no theta-form under left d-padding")
    k, M = found
    shifted = from_mixed(theta_shift(M, _pf(c)))
    out, _ = _strip_left_d(shifted, times=k)
    return out


def se3_to_se6(a, b, c, g, p, q, r) -> DiffOp:
    """The order-6 specialization from the order-3 one.

    Gauge the Dotsenko-Fateev operator by x^p (x-1)^q, clear denominators,
    and apply mc_{r+1}.  Proportional to make("SE6") at the same parameters.
    """
    from .catalog import make

    base = make("SE3", {"a": a, "b": b, "c": c, "g": g}).op
    gauged = addition(base, GaugeFactor(p, q))
    cleared, _ = clear_x_denominators(gauged, side="left")
    out, _info = mc(cleared, _pf(r) + 1)
    return out


def se6_to_se3(A: DiffOp, p, q, r) -> DiffOp:
    """Invert the pipeline: theta -> theta + r + 1, strip d^3, ungauge.

    A must be the order-6 specialization at the given parameters; returns
    the order-3 operator exactly.
    """
    conj = theta_conjugate(A, _pf(r) + 1)
    stripped, _ = _strip_left_d(conj, times=3)
    ungauged = addition(stripped, GaugeFactor(-_pf(p), -_pf(q)))
    x = ratx("x")
    return ungauged.scale(1 / (x * (x - 1)))


def se5_to_se3(A: DiffOp, p, q, r) -> DiffOp:
    """Same inversion for the order-5 specialization.

    Here the theta-form needs one d of left padding, so d o (d^r A d^{-r})
    is the operator divisible by d^3.
    """
    conj = theta_conjugate(A, _pf(r))
    stripped, _ = _strip_left_d(op_mul(D, conj), times=3)
    ungauged = addition(stripped, GaugeFactor(-_pf(p), -_pf(q)))
    x = ratx("x")
    return ungauged.scale(1 / (x * (x - 1)))


# ---------------------------------------------------------------------------
# monodromy blocks


def mc_monodromy(A0, A1, t):
    """Doubled-size monodromy generators of the convolved system.

    A0, A1 are square matrices over any commutative ring with 1 (lists of
    lists or sympy Matrix); t is the convolution scalar.  Returns (mu0, mu1):

        mu0 = [[t*A0, t*(A1 - I)], [0, I]]
        mu1 = [[I, 0], [A0 - I, t*A1]]
    """
    import sympy as sp

    M0, M1 = sp.Matrix(A0), sp.Matrix(A1)
    if not (M0.is_square and M1.is_square and M0.shape == M1.shape):
        raise SizeMismatch(f"blocks must be square and equal-sized: {M0.shape} vs {M1.shape}")
    n = M0.shape[0]
    I = sp.eye(n)
    Z = sp.zeros(n)
    mu0 = sp.Matrix(sp.BlockMatrix([[t * M0, t * (M1 - I)], [Z, I]]))
    mu1 = sp.Matrix(sp.BlockMatrix([[I, Z], [M0 - I, t * M1]]))
    return mu0, mu1
