"""Built-in shift pairs, routes and round-trip constants per family.

Each entry of ``table(family)`` is a ShiftPair (explicit operator data), a
ShiftRoute (composition of steps) or a MappedRoute (a specialized family
shifted through its generic family).  The operator data comes in three
flavours:

* closed-form first-order pairs such as (x-1)d - r;
* mixed-form tables of theta-polynomial slots, including slots that are
  only determined implicitly and are recovered here by exact theta
  division;
* pairs derived on the fly: reverses via the Bezout identity
  (derive_reverse), the differentiation pair d with its quotient reverse
  (E - p0 = R o d), reflection images under x -> 1-x, and exponent-block
  exchanges that leave the operator invariant.

``svalue_cases(family)`` lists the known round-trip constants as
(minus label, plus label, closed formula); the formulas hold up to a
single parameter-free rational factor fixed by each pair's normalization.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import sympy

from .catalog import _e6_blocks, make, param_map
from .params import _FIELD, _THETA_IDX, RatFuncX, frac, ratx
from .weyl import (
    D,
    DiffOp,
    MixedForm,
    THETA,
    ThetaPoly,
    clear_param_content,
    clear_x_denominators,
    from_mixed,
    op_mul,
    op_rdivmod,
    subs_x,
)
from .shifts import (
    AnsatzShape,
    MappedRoute,
    NotConstantRemainder,
    ShiftPair,
    ShiftRoute,
    derive_reverse,
    solve_shift,
)

__all__ = ["table", "svalue_cases", "SvalueCase"]

_T = THETA
_X = ratx("x")


def _tdiv(numer: ThetaPoly, denom: ThetaPoly) -> ThetaPoly:
    """Exact division of theta-polynomials (raises if inexact)."""
    quo = ThetaPoly(numer.raw / denom.raw)
    if any(m[_THETA_IDX] for m in quo.raw.denom.monoms()):
        raise NotConstantRemainder("inexact theta division in a table entry")
    return quo


def _mixed(xparts, diag, dparts) -> DiffOp:
    return from_mixed(MixedForm(xparts, diag, dparts))


def _letters(family, shift=None):
    from .catalog import _PARAM_NAMES

    out = {n: frac(n) for n in _PARAM_NAMES[family]}
    for name, step in (shift or {}).items():
        out[name] = out[name] + Fraction(step)
    return out


def _d_pair(family, shift, with_q=True) -> ShiftPair:
    Q = D if with_q else None
    return ShiftPair(family, shift, D, Q, source="differentiation")


def _d_reverse(family, d_shift, source) -> ShiftPair:
    """Reverse of the differentiation pair from  E - p0 = R o d."""
    E = make(family).op
    p0 = E.coeff(0)
    if not p0.x_free():
        raise NotConstantRemainder(f"{family} has a non-constant order-0 term")
    R, rem = op_rdivmod(E - DiffOp([p0]), D)
    if not rem.is_zero():
        raise NotConstantRemainder(f"{family} - p0 is not divisible by d")
    subs = {name: frac(name) - step for name, step in d_shift.items()}
    reverse = R.subs_params(subs)
    return ShiftPair(family, {n: -s for n, s in d_shift.items()}, reverse,
                     source=source)


@dataclass(frozen=True)
class SvalueCase:
    """A round-trip whose constant has a known closed formula."""

    name: str
    minus: str
    plus: str
    formula: object  # ParamFrac in the family parameters


# ---------------------------------------------------------------------------
# E2: Gauss contiguity


def _e2_table():
    A = frac("A")
    up = ShiftPair("E2", {"A": 1}, DiffOp([A, _X]), source="theta + A")
    return {"A+1": up}


# ---------------------------------------------------------------------------
# E4: the differentiation pair and its reverse


_E4_DSHIFT = {"e1": -1, "e2": -1, "e3": -1, "e4": -1,
              "e5": 1, "e6": 1, "e7": 1}


def _e4_table():
    down = _d_pair("E4", _E4_DSHIFT)
    up = _d_reverse("E4", _E4_DSHIFT, "quotient of E - p0 by d")
    return {"d": down, "d-rev": up}


def _e4_svalues():
    e5, e6, e7 = frac("e5"), frac("e6"), frac("e7")
    e8 = 4 - (frac("e1") + frac("e2") + frac("e3") + frac("e4") + e5 + e6 + e7)
    return [SvalueCase("d-roundtrip", "d", "d-rev", e5 * e6 * e7 * e8)]


# ---------------------------------------------------------------------------
# E5: the two first-order block pairs and their reverses


def _e5_r():
    total = frac(0)
    for i in range(1, 9):
        total = total + frac(f"e{i}")
    return total / 3 - 2


def _e5_table():
    r = _e5_r()
    m123 = ShiftPair("E5", {"e1": -1, "e2": -1, "e3": -1},
                     DiffOp([1 - r, _X - 1]), source="(x-1)d + 1 - r")
    m456 = ShiftPair("E5", {"e4": -1, "e5": -1, "e6": -1},
                     DiffOp([1 - r, _X]), source="x d + 1 - r")
    out = {"e123-": m123, "e456-": m456}
    out["e123+"] = derive_reverse("E5", m123, source="reverse of e123-")
    out["e456+"] = derive_reverse("E5", m456, source="reverse of e456-")
    return out


def _e5_svalues():
    r = _e5_r()
    e = {i: frac(f"e{i}") for i in range(1, 7)}
    return [
        SvalueCase("e123", "e123-", "e123+",
                   (r - 1) * (r - 2) * (e[4] - r) * (e[5] - r) * (e[6] - r)),
        SvalueCase("e456", "e456-", "e456+",
                   -(r - 1) * (r - 2) * (e[1] - r) * (e[2] - r) * (e[3] - r)),
    ]


# ---------------------------------------------------------------------------
# E6: first-order block pairs, the differentiation pair, reverses


_E6_DSHIFT = {**{f"e{i}": -1 for i in range(1, 7)},
              **{f"e{j}": 1 for j in range(7, 10)}}


def _e6_r():
    total = frac(0)
    for i in range(1, 10):
        total = total + frac(f"e{i}")
    return (total - 6) / 3


def _e6_table():
    r = _e6_r()
    m123 = ShiftPair("E6", {"e1": -1, "e2": -1, "e3": -1},
                     DiffOp([-r, _X - 1]), source="(x-1)d - r")
    m456 = ShiftPair("E6", {"e4": -1, "e5": -1, "e6": -1},
                     DiffOp([-r, _X]), source="x d - r")
    out = {"e123-": m123, "e456-": m456, "r-": _d_pair("E6", _E6_DSHIFT)}
    out["r+"] = _d_reverse("E6", _E6_DSHIFT, "quotient of E - p0 by d")
    out["e123+"] = derive_reverse("E6", m123, source="reverse of e123-")
    out["e456+"] = derive_reverse("E6", m456, source="reverse of e456-")
    return out


def _e6_svalues():
    s = -_e6_r()
    e = {i: frac(f"e{i}") for i in range(1, 10)}
    sss = s * (s + 1) * (s + 2)
    return [
        SvalueCase("r", "r-", "r+", -sss * e[7] * e[8] * e[9]),
        SvalueCase("e123", "e123-", "e123+",
                   -sss * (s + e[4]) * (s + e[5]) * (s + e[6])),
        SvalueCase("e456", "e456-", "e456+",
                   sss * (s + e[1]) * (s + e[2]) * (s + e[3])),
    ]


# ---------------------------------------------------------------------------
# SE6: the order-6 specialization


def _se6_env(shift=None):
    """Exponents and the two middle theta-cubics at (shifted) letters."""
    e = param_map("SE6", _letters("SE6", shift))
    _s, _B0, B1, B2, _T3 = _e6_blocks(*(e[f"e{i}"] for i in range(1, 10)))
    return e, B1, B2


def _se6_a_plus():
    e, B1, B2 = _se6_env()
    _es, B1s, B2s = _se6_env({"a": 1})
    a, b, c, g, p, q = (frac(n) for n in "abcgpq")
    r = e["r"]
    e1, e2, e3, e7, e8, e9 = (e[k] for k in ("e1", "e2", "e3", "e7", "e8", "e9"))
    T = _T
    K = -e1 * e8 + a * (e9 + p + q + r) - (4 * a + 3 * b + 4 * c + 2 * g + q + 6)
    M1 = (e8 - 1) * (e9 - r - 1)
    M0 = (e8 - 1) * ((e9 - 1) * (e9 - r) + r * (r - 2))
    N = r * (r - 1) * (e8 - 1) * (e9 - 1) * (e9 - 2)
    X = T * (-M1) + (e8 - 1) * (-(r + 2) * e9 + 4 * r + 2)
    # the trailing c - b is required for the exact division below
    # (cross-checked against sampled solutions of the shift relation)
    U2 = (T + 2 - e2) * (T + 2 + e9) + K + e1 * e8 + c - b

    P_nn = (T * M1 + M0) * (T - r) * (T + 1 - r) * (T + e7) * (T + e8)
    Q_nn = (T * M1 + M0) * (T + 3 - r) * (T + 4 - r) * (T + e7 + 2) * (T + e8 + 1)
    P0 = (-K * (T - r) * (T + 1 - r) * B1.shift(-1)
          - (T - r) * X.shift(-3) * B2.shift(-2) + N * (T - e2) * (T - e3))
    Q0 = (-K * (T + 1 - r) * (T + 2 - r) * B1s
          - (T + 2 - r) * X.shift(-1) * B2s + N * (T + 2 - e2) * (T + 1 - e3))
    P1 = (-K * (T + 1 - r) * B2.shift(-1)
          + (T + 1 - e1) * (T + 1 - e2) * (T + 1 - e3) * X.shift(-3))
    Q1 = (-K * (T + 2 - r) * B2s
          + (T + 3 - e1) * (T + 2 - e2) * (T + 1 - e3) * X)
    P2 = K * (T + 2 - e1) * (T + 2 - e2) * (T + 2 - e3)
    Q2 = K * (T + 3 - e1) * (T + 2 - e2) * (T + 1 - e3)
    CP4 = _tdiv(
        N * ((T - e3) * U2.shift(-3) - B2.shift(-2))
        - K * (T + 1 - e1) * (T + 1 - r) * (T + 2 - r)
        * (T + e7) * (T + e8) * (T + e9)
        - (T + 1 - e1) * (T + 1 - r) * X.shift(-2) * B1.shift(-1),
        (T + 1) * (T + 1 - e1))
    P_n = (T - r) * CP4
    CQ4 = _tdiv(
        N * ((T + 2 - e3) * U2 - B2s.shift(1))
        - K * (T + 3 - e1) * (T + 1 - r) * (T + 2 - r)
        * (T + e7 + 1) * (T + e8) * (T + e9 - 1)
        - (T + 3 - e1) * (T + 2 - r) * X.shift(-1) * B1s.shift(1),
        (T + 1) * (T + 3 - e1))
    Q_n = (T + 3 - r) * CQ4
    P = _mixed({2: P_nn, 1: P_n}, P0, {1: P1, 2: P2})
    Q = _mixed({2: Q_nn, 1: Q_n}, Q0, {1: Q1, 2: Q2})
    return ShiftPair("SE6", {"a": 1}, P, Q, source="a+1 table")


def _se6_a_minus():
    e, B1, B2 = _se6_env()
    _es, B1s, B2s = _se6_env({"a": -1})
    a, b, c, g, p, q = (frac(n) for n in "abcgpq")
    r = e["r"]
    e1, e2, e3, e7, e8, e9 = (e[k] for k in ("e1", "e2", "e3", "e7", "e8", "e9"))
    T = _T
    K1 = -(e2 - r - 1) * (e3 - 2 * r - 1)
    K0 = (e2 - r - 1) * ((e3 - r - 3) ** 2 + 3 * r - 4)
    M = (2 * a ** 2 + 2 * a * b + 3 * a * g - p * a - q * a + g * b
         - 2 * c ** 2 + c * g - 3 * c * p - c * q + g ** 2 - p ** 2 - q * p
         - 4 * c + g - 3 * p - q - 2)
    N = r * (r - 1) * (e2 - r - 1) * (e3 - r - 1) * (e3 - r - 2)
    X = T * (-K1) - (r - 1) * (e2 - r - 1) * (2 * e3 - 3 * r - 2)
    V2 = ((T + e8) * (T - e3 + 4) + (e2 - r - 2) * (e7 + r - 2) - M + b - c)

    P_nn = M * (T - r) * (T + 1 - r) * (T + e7) * (T + e8) * (T + e9)
    Q_nn = M * (T + 3 - r) * (T + 4 - r) * (T + e7 + 2) * (T + e8 + 3) * (T + e9 + 4)
    P_n = (M * T * (T - r) * B1.shift(-1)
           + (T - r) * (T + e7) * (T + e8) * (T + e9) * X)
    Q_n = (M * (T + 2) * (T + 3 - r) * B1s.shift(1)
           + (T + 3 - r) * (T + e7 + 1) * (T + e8 + 2) * (T + e9 + 3) * X)
    P0 = (T * X.shift(-1) * B1.shift(-1) + M * T * (T - 1) * B2.shift(-2)
          + N * (T + e8) * (T + e9))
    Q0 = ((T + 1) * X * B1s + M * (T + 1) * (T + 2) * B2s
          + N * (T + e8 + 1) * (T + e9 + 2))
    P2 = (K1 * (T - 3) + K0) * (T + 2 - e1) * (T + 2 - e2)
    Q2 = (K1 * T + K0) * (T + 3 - e1) * (T + 4 - e2)
    # the minus sign on the last addend of each dividend is required for
    # the exact divisions (cross-checked against sampled solutions)
    P1 = _tdiv(
        N * (B1 + (T + e9 + 1) * V2)
        + T * X.shift(-1) * B2.shift(-1) * (T + e7)
        - T * (T - 1) * (T + 1 - e1) * (T + 1 - e2) * (T + 1 - e3) * M * (T + e7),
        (T - r) * (T + e7))
    Q1 = _tdiv(
        N * (B1s + (T + e9 + 2) * V2)
        + (T + 2) * X.shift(1) * B2s * (T + e7 + 1)
        - (T + 2) * (T + 3) * (T + 3 - e1) * (T + 4 - e2) * (T + 5 - e3)
        * M * (T + e7 + 1),
        (T + 3 - r) * (T + e7 + 1))
    P = _mixed({2: P_nn, 1: P_n}, P0, {1: P1, 2: P2})
    Q = _mixed({2: Q_nn, 1: Q_n}, Q0, {1: Q1, 2: Q2})
    return ShiftPair("SE6", {"a": -1}, P, Q, source="a-1 table")


def _se6_cpq_ops(e, B1, B2, B1s, B2s):
    """The (c+1, p-1, q-1)-type slot formulas over a given exponent dict."""
    r = e["r"]
    e1, e2, e3, e4 = (e[k] for k in ("e1", "e2", "e3", "e4"))
    e7, e8, e9 = (e[k] for k in ("e7", "e8", "e9"))
    T = _T
    K = e1 - r - 1
    M = e1 + e4 - 2 * r - 2
    V = -M * (T + 2) * (T + 3 - K) + K * r * (M + r - 1)
    W1 = ((T - e2 + 3) * (T - M - r + 3) * (T - M - r + 2)
          - (e4 - r - 1) * (M + e7 + r - 1) * (M + e9 + r - 1) / 2)
    W = r * (r - 1) * (e1 - r - 1) * W1

    P2 = K * (T + 2 - e1) * (T + 2 - e2) * (T + 2 - e3)
    Q2 = K * (T + 4 - e1) * (T + 3 - e2) * (T + 2 - e3)
    P_nn = M * (T - r) * (T + 1 - r) * (T + e7) * (T + e8) * (T + e9)
    Q_nn = M * (T + 3 - r) * (T + 4 - r) * (T + e7 + 2) * (T + e8 + 2) * (T + e9 + 2)
    P_n = (M * T * (T - r) * B1.shift(-1)
           - K * (T - r) * (T + 2 - 2 * r) * (T + e7) * (T + e8) * (T + e9))
    Q_n = (M * (T + 2) * (T + 3 - r) * B1s.shift(1)
           - K * (T + 3 - r) * (T + 2 - 2 * r)
           * (T + e7 + 1) * (T + e8 + 1) * (T + e9 + 1))
    P1 = (-K * (T + 1 - r) * B2.shift(-1)
          + (T + 1 - e2) * (T + 1 - e3) * V.shift(-3))
    Q1 = -K * (T + 2 - r) * B2s + (T + 3 - e2) * (T + 2 - e3) * V
    P0 = _tdiv(
        (T + 3 - e3) * W
        - K * (T + 3 - r) * (T + 4 - r) * (T + 4 - e1) * B1.shift(2)
        - (T + 3 - r) * B2.shift(1) * V,
        T + 4 - e1).shift(-3)
    Q0 = _tdiv(
        (T + 2 - e3) * W
        - K * (T + 1 - r) * (T + 2 - r) * (T + 3 - e1) * B1s
        - (T + 2 - r) * B2s * V.shift(-1),
        T + 3 - e1)
    P = _mixed({2: P_nn, 1: P_n}, P0, {1: P1, 2: P2})
    Q = _mixed({2: Q_nn, 1: Q_n}, Q0, {1: Q1, 2: Q2})
    return P, Q


def _se6_cpq_plus():
    e, B1, B2 = _se6_env()
    _es, B1s, B2s = _se6_env({"c": 1, "p": -1, "q": -1})
    P, Q = _se6_cpq_ops(e, B1, B2, B1s, B2s)
    return ShiftPair("SE6", {"c": 1, "p": -1, "q": -1}, P, Q,
                     source="cpq+ table")


def _se6_cpq_minus():
    # the operator is invariant under the exponent-triple exchange
    # e1<->e3, e4<->e6; the exchanged formulas realize the opposite step
    e, B1, B2 = _se6_env()
    _es, B1s, B2s = _se6_env({"c": -1, "p": 1, "q": 1})
    swapped = dict(e)
    swapped["e1"], swapped["e3"] = e["e3"], e["e1"]
    swapped["e4"], swapped["e6"] = e["e6"], e["e4"]
    P, Q = _se6_cpq_ops(swapped, B1, B2, B1s, B2s)
    return ShiftPair("SE6", {"c": -1, "p": 1, "q": 1}, P, Q,
                     source="cpq- by exponent exchange")


def _se6_cg_plus():
    e, B1, B2 = _se6_env()
    _es, B1s, B2s = _se6_env({"c": 1, "g": -2})
    r = e["r"]
    e1, e2, e3, e4, e6 = (e[k] for k in ("e1", "e2", "e3", "e4", "e6"))
    e7, e8, e9 = (e[k] for k in ("e7", "e8", "e9"))
    T = _T
    K = ((e1 - 1) * (e7 - e8 - 1)
         - (e1 + e6 + e7 - r - 3) * (e1 + e4 + e7 - r - 3) / 2)
    M1 = (e7 - e8 - 1) * (r + 1 - e7)
    M0 = -(e7 - e8 - 1) * (e7 * (e7 - r - 1) + r ** 2 - r)
    X = T * (-M1) - (e7 - e8 - 1) * (-(r + 2) * e7 + 4 * r + 2)
    # the +4 (not +2) in the inner bracket is required for the exact
    # intertwining (cross-checked against sampled solutions of the relation)
    V = (-r * (r - 1) * (e7 - 1) * (e7 - 2)
         * (K + (e7 - e8 - 1) * (T - e1 - e3 + 4)))
    U3 = (-K * (T + e7 - 1) * (T - r + 1) * (T + e7 - r + 1)
          + K * (r - 1) * (e7 - 1) * (T - r - 1 + e7)
          - r * (r - 1) * (e7 - 1) * (e7 - 2) * (e7 - e8 - 1))

    P2 = K * (T + 2 - e1) * (T + 2 - e2) * (T + 2 - e3)
    Q2 = K * (T + 3 - e1) * (T + 2 - e2) * (T + 3 - e3)
    P_nn = (T * M1 + M0) * (T - r) * (T + 1 - r) * (T + e8) * (T + e9)
    Q_nn = (T * M1 + M0) * (T + 3 - r) * (T + 4 - r) * (T + e8 + 2) * (T + e9 + 2)
    P0 = (-K * (T - r) * (T + 1 - r) * B1.shift(-1)
          - (T - r) * X.shift(-3) * B2.shift(-2) + (T - e2) * V.shift(-3))
    Q0 = (-K * (T + 1 - r) * (T + 2 - r) * B1s
          - (T + 2 - r) * X.shift(-1) * B2s + (T + 2 - e2) * V)
    P1 = (-K * (T + 1 - r) * B2.shift(-1)
          + (T + 1 - e1) * (T + 1 - e2) * (T + 1 - e3) * X.shift(-3))
    Q1 = (-K * (T + 2 - r) * B2s
          + (T + 3 - e1) * (T + 2 - e2) * (T + 3 - e3) * X)
    CP4 = _tdiv(T * (M1 * (T - 1) + M0) * B1.shift(-1)
                + (T + e8) * (T + e9) * U3, T + e7 - 1)
    P_n = (T - r) * CP4
    CQ4 = _tdiv((T + 2) * (T * M1 + M0) * B1s.shift(1)
                + (T + e8 + 1) * (T + e9 + 1) * U3, T + e7)
    Q_n = (T + 3 - r) * CQ4
    P = _mixed({2: P_nn, 1: P_n}, P0, {1: P1, 2: P2})
    Q = _mixed({2: Q_nn, 1: Q_n}, Q0, {1: Q1, 2: Q2})
    return ShiftPair("SE6", {"c": 1, "g": -2}, P, Q, source="cg+ table")


def _se6_cg_minus():
    e, B1, B2 = _se6_env()
    _es, B1s, B2s = _se6_env({"c": -1, "g": 2})
    g = frac("g")
    r = e["r"]
    e1, e2, e3, e5 = (e[k] for k in ("e1", "e2", "e3", "e5"))
    e7, e8, e9 = (e[k] for k in ("e7", "e8", "e9"))
    T = _T
    K = e2 - r - 1
    M = e2 + e5 - 2 * r - 2
    # the first factor must carry e9, not e8 (cross-checked against sampled
    # solutions of the shift relation: the diagonal slots fail otherwise)
    N = (T + e9) * (T - e2 - g + 1) - (e5 - r - 1) * (g + 1)
    U2 = (T ** 2 * (-M) + T * (M * (K - 5))
          + (r + 2) * K * (M + r - 3) - 6 * (M - K))

    P2 = K * (T + 2 - e1) * (T + 2 - e2) * (T + 2 - e3)
    Q2 = K * (T + 3 - e1) * (T + 4 - e2) * (T + 3 - e3)
    P_nn = M * (T - r) * (T + 1 - r) * (T + e7) * (T + e8) * (T + e9)
    Q_nn = M * (T + 3 - r) * (T + 4 - r) * (T + e7 + 4) * (T + e8 + 2) * (T + e9 + 2)
    P_n = (M * T * (T - r) * B1.shift(-1)
           - K * (T - r) * (T + 2 - 2 * r) * (T + e7) * (T + e8) * (T + e9))
    Q_n = (M * (T + 2) * (T + 3 - r) * B1s.shift(1)
           - K * (T + 2 - 2 * r) * (T + 3 - r)
           * (T + e7 + 3) * (T + e8 + 1) * (T + e9 + 1))
    P0 = (-K * T * (T + 1 - 2 * r) * B1.shift(-1)
          + M * T * (T - 1) * B2.shift(-2)
          + K * r * (r - 1) * (T + e7) * N)
    Q0 = (-K * (T + 1) * (T + 2 - 2 * r) * B1s
          + M * (T + 1) * (T + 2) * B2s
          + K * r * (r - 1) * (T + e7 + 2) * N)
    P1 = (-K * (T + 1 - r) * B2.shift(-1)
          + (T + 1 - e1) * (T + 1 - e3) * U2.shift(-3))
    Q1 = -K * (T + 2 - r) * B2s + (T + 3 - e1) * (T + 3 - e3) * U2
    P = _mixed({2: P_nn, 1: P_n}, P0, {1: P1, 2: P2})
    Q = _mixed({2: Q_nn, 1: Q_n}, Q0, {1: Q1, 2: Q2})
    return ShiftPair("SE6", {"c": -1, "g": 2}, P, Q, source="cg- table")


def _reflect(pair, family, shift, source):
    """Image of a pair under (a,b)->(b,a), (p,q)->(q,p), x->1-x."""
    swap = {"a": frac("b"), "b": frac("a"), "p": frac("q"), "q": frac("p")}
    moved = subs_x(pair.P.subs_params(swap), 1 - _X)
    cleared, _ = clear_x_denominators(moved, side="left")
    return ShiftPair(family, shift, clear_param_content(cleared),
                     source=source)


def _se6_table():
    e6 = table("E6")
    a_plus = _stored_pair("SE6", {"a": 1}, "se6_a_plus", _se6_a_plus,
                          source="a+1 table (stored)")
    a_minus = _stored_pair("SE6", {"a": -1}, "se6_a_minus", _se6_a_minus,
                           source="a-1 table (stored)")
    cpq_plus = _stored_pair("SE6", {"c": 1, "p": -1, "q": -1},
                            "se6_cpq_plus", _se6_cpq_plus,
                            source="cpq+ table (stored)")
    cpq_minus = _stored_pair("SE6", {"c": -1, "p": 1, "q": 1},
                             "se6_cpq_minus", _se6_cpq_minus,
                             source="cpq- table (stored)")
    out = {
        "a+": a_plus,
        "a-": a_minus,
        "b+": _reflect(a_plus, "SE6", {"b": 1}, "b+1 by reflection"),
        "b-": _reflect(a_minus, "SE6", {"b": -1}, "b-1 by reflection"),
        "cpq+": cpq_plus,
        "cpq-": cpq_minus,
        "cg+": _stored_pair("SE6", {"c": 1, "g": -2}, "se6_cg_plus",
                            _se6_cg_plus, source="cg+ table (stored)"),
        "cg-": _stored_pair("SE6", {"c": -1, "g": 2}, "se6_cg_minus",
                            _se6_cg_minus, source="cg- table (stored)"),
    }
    emap = {k: v for k, v in param_map("SE6").items() if k.startswith("e")}

    def through_e6(shift, inner, source):
        return MappedRoute("SE6", shift, inner, emap, source=source)

    out["r-"] = through_e6({"r": -1}, e6["r-"], "differentiation")
    out["r+"] = through_e6({"r": 1}, e6["r+"], "reverse differentiation")
    out["p-"] = through_e6({"p": -1},
                           ShiftRoute("E6", [e6["r-"], e6["e456+"]]),
                           "p-1 through the generic family")
    out["p+"] = through_e6({"p": 1},
                           ShiftRoute("E6", [e6["e456-"], e6["r+"]]),
                           "p+1 through the generic family")
    out["q-"] = through_e6({"q": -1},
                           ShiftRoute("E6", [e6["r-"], e6["e123+"]]),
                           "q-1 through the generic family")
    out["q+"] = through_e6({"q": 1},
                           ShiftRoute("E6", [e6["e123-"], e6["r+"]]),
                           "q+1 through the generic family")
    out["c+"] = ShiftRoute("SE6", [out["cpq+"], out["p+"], out["q+"]],
                           source="c+1 via the cpq detour")
    out["c-"] = ShiftRoute("SE6", [out["cpq-"], out["p-"], out["q-"]],
                           source="c-1 via the cpq detour")
    out["g-2"] = ShiftRoute("SE6", [out["cg+"], out["c-"]],
                            source="g-2 via the cg detour")
    out["g+2"] = ShiftRoute("SE6", [out["cg-"], out["c+"]],
                            source="g+2 via the cg detour")
    return out


def _se6_svalues():
    e = param_map("SE6")
    a, b, c, g, p, q = (frac(n) for n in "abcgpq")
    r = e["r"]
    e2, e3, e5, e6 = (e[k] for k in ("e2", "e3", "e5", "e6"))
    e7, e8, e9 = (e[k] for k in ("e7", "e8", "e9"))
    rr = r ** 2 * (r - 1) ** 2
    s1 = a + b + c + g + 1
    s2 = 2 * a + 2 * b + 2 * c + g + 2
    return [
        SvalueCase("a", "a-", "a+",
                   -rr * a * (2 * a + g) * (e2 - r - 1) * s1 * s2
                   * (e3 - r - 1) * (e3 - r - 2) * e8 * e9 * (e9 + 1)),
        SvalueCase("b", "b-", "b+",
                   -rr * b * (2 * b + g) * (e5 - r - 1) * s1 * s2
                   * (e6 - r - 1) * (e6 - r - 2) * e8 * e9 * (e9 + 1)),
        SvalueCase("c", "c-", "c+",
                   rr * c * (2 * c + g) * (e2 - r - 1) * (e5 - r - 1) * s1 * s2
                   * (e3 - r - 1) * (e3 - r - 2) * (e6 - r - 1) * (e6 - r - 2)
                   * e7 * (e7 + 1) * e8 * (e8 + 1) * e9 * (e9 + 1)),
        SvalueCase("g", "g-2", "g+2",
                   rr * (g - 1) * (2 * a + g) * (2 * b + g) * (2 * c + g)
                   * (a + b + c + g) * s1 * s2
                   * (e3 - 1 - r) * (e3 - 2 - r) * (e6 - 1 - r) * (e6 - 2 - r)
                   * e8 * (e8 + 1) * e9 * (e9 + 1)),
        SvalueCase("p", "p-", "p+",
                   -rr * p * (e2 - r - 1) * (e3 - r - 1) * e7 * e8 * e9),
        SvalueCase("q", "q-", "q+",
                   -rr * q * (e5 - r - 1) * (e6 - r - 1) * e7 * e8 * e9),
        SvalueCase("r", "r-", "r+", r * (r - 1) * (r - 2) * e7 * e8 * e9),
    ]


# ---------------------------------------------------------------------------
# SE5: the order-5 specialization


def _se5_env(shift=None):
    e = param_map("SE5", _letters("SE5", shift))
    _s, _B0, B51, B52, _T3 = _e6_blocks(
        *(e[f"e{i}"] for i in range(1, 9)), frac(0))
    return e, B51, B52


def _se5_a_plus():
    e, _B51, _B52 = _se5_env()
    a, b, c, g, q = (frac(n) for n in "abcgq")
    r = e["r"]
    e2, e3, e7, e8 = (e[k] for k in ("e2", "e3", "e7", "e8"))
    T = _T
    P13 = (T ** 2 * (-2) - (4 * a + 7 * b + c + 2 * g + 2 * q + 12) * T
           - (6 * a * b + 3 * a * q + 6 * b ** 2 + 2 * b * c + 3 * b * g
              + 3 * b * q + g * q + 8 * a + 20 * b + 2 * c + 4 * g
              + 6 * q + 16))
    Q13 = P13 - 2 * T - (5 + a + 3 * b + q)
    P0 = (T - r + 1) * (T - r + 2) * (T + e7 + 1) * (T + e8 + 1)
    Q0 = (T - r + 3) * (T - r + 4) * (T + e7 + 2) * (T + e8 + 1)
    P = _mixed({}, P0, {1: (T - r + 2) * P13,
                        2: (T + 3 - e2) * (T + 3 - e3)})
    Q = _mixed({}, Q0, {1: (T - r + 4) * Q13,
                        2: (T + 4 - e2) * (T + 3 - e3)})
    return ShiftPair("SE5", {"a": 1}, P, Q, source="a+1 table")


def _se5_b_plus():
    e, _B51, _B52 = _se5_env()
    a, b, c, g, q = (frac(n) for n in "abcgq")
    r = e["r"]
    e7, e8 = e["e7"], e["e8"]
    T = _T
    P13 = (T ** 2 * (-2) - (6 * a + 9 * b + 3 * c + 3 * g + 2 * q + 16) * T
           - (4 * a ** 2 + 14 * a * b + 4 * a * c + 4 * a * g + 3 * a * q
              + 10 * b ** 2 + 6 * b * c + 7 * b * g + 3 * b * q + 2 * c * g
              + g ** 2 + g * q + 24 * a + 36 * b + 10 * c + 12 * g
              + 6 * q + 32))
    Q13 = P13 - 5 * T - (7 * a + 9 * b + 2 * c + 3 * g + q + 19)
    P2 = (T ** 2 + (3 * a + 6 * b + 3 * c + 2 * g + 2 * q + 11) * T
          + (2 * a ** 2 + 10 * a * b + 4 * a * c + 3 * a * g + 3 * a * q
             + 10 * b ** 2 + 10 * b * c + 7 * b * g + 6 * b * q + 2 * c ** 2
             + 3 * c * g + 3 * c * q + g ** 2 + 2 * g * q + q ** 2
             + 17 * a + 36 * b + 17 * c + 12 * g + 11 * q + 32))
    P0 = (T - r + 1) * (T - r + 2) * (T + e7 + 1) * (T + e8 + 1)
    Q0 = (T - r + 3) * (T - r + 4) * (T + e7 + 2) * (T + e8 + 1)
    P = _mixed({}, P0, {1: (T - r + 2) * P13, 2: P2})
    Q = _mixed({}, Q0, {1: (T - r + 4) * Q13, 2: P2.shift(2)})
    return ShiftPair("SE5", {"b": 1}, P, Q, source="b+1 table")


def _se5_c_plus():
    e, _B51, _B52 = _se5_env()
    a, b, c, g, q = (frac(n) for n in "abcgq")
    r = e["r"]
    e2, e3 = e["e2"], e["e3"]
    T = _T
    F = (T ** 2 + (a + b + 1 - 2 * c) * T
         + (2 * c + g) * (c + 1) + a + b + 2)
    P13 = (T ** 2 * (-2) - (2 * a + 5 * b - c + g + 2 * q + 8) * T
           - (2 * a * b + a * q + 2 * b ** 2 - 2 * b * c + b * q + b * g
              - 2 * c * q + 4 * a + 8 * b - 2 * c + 2 * g + 2 * q + 8))
    Q13 = P13 + T + (a + 3 * b + 2 * c + g + 2 * q + 6)
    P = _mixed({}, F * (T - r + 1) * (T - r + 2),
               {1: (T - r + 2) * P13, 2: (T + 3 - e2) * (T + 3 - e3)})
    Q = _mixed({}, F.shift(-1) * (T - r + 3) * (T - r + 4),
               {1: (T - r + 4) * Q13, 2: (T + 4 - e2) * (T + 3 - e3)})
    return ShiftPair("SE5", {"c": 1}, P, Q, source="c+1 table")


def _se5_g_plus():
    e, _B51, _B52 = _se5_env()
    a, b, c, g, q = (frac(n) for n in "abcgq")
    r = e["r"]
    e3, e7 = e["e3"], e["e7"]
    T = _T
    X = ((2 * a + 2 * b + 2 * c + 3 * g + 6) * T
         + 4 * a ** 2 + 8 * a * b + 8 * a * c + 8 * a * g + 2 * a * q
         + 4 * b ** 2 + 8 * b * c + 10 * b * g + 2 * b * q + 4 * c ** 2
         + 8 * c * g + 2 * c * q + 4 * g ** 2 + 3 * g * q
         + 26 * a + 28 * b + 26 * c + 30 * g + 6 * q + 44)
    Y = ((2 * a + 2 * b + 2 * c + 3 * g + 6) * T
         - (2 * c * g + g ** 2 - 2 * a - 2 * b - 4))
    P13 = (T ** 2 * (-(6 * g + 12 + 4 * a + 4 * b + 4 * c))
           - (8 * a ** 2 + 20 * a * b + 12 * a * c + 34 * c + 12 * b ** 2
              + 16 * b * c + 62 * b + 4 * c ** 2 + 48 * a + 72
              + 6 * q * g + 6 * g ** 2 + (4 * a + 4 * b + 12 + 4 * c) * q
              + (16 * a + 48 + 8 * c + 24 * b) * g) * T
           - (96 + 8 * c ** 2 + 80 * a + 16 * b ** 2 * c + 76 * a * b
              + 8 * b ** 3 + 16 * c * a * b + 16 * a ** 2 + 52 * c
              + 8 * a ** 2 * b + 60 * b * c + 8 * b * c ** 2 + 136 * b
              + 24 * a * c + 16 * a * b ** 2 + 60 * b ** 2
              + (18 + 8 * a + 8 * b) * q * g + (12 + 8 * b) * g ** 2
              + 2 * q * g ** 2
              + (8 * a * b + 28 + 4 * b ** 2 + 22 * a + 8 * c + 4 * b * c
                 + 22 * b + 4 * a * c + 4 * a ** 2) * q
              + (12 * b * c + 20 * b ** 2 + 20 * a * b + 72 + 32 * a
                 + 16 * c + 78 * b) * g))
    Q13 = (P13 - (6 * g + 12 + 4 * a + 4 * b + 4 * c) * T
           + 2 * g ** 2 + (4 * a - 4 * b + 4 * c) * g
           - 8 + 6 * a - 4 * b * c - 4 * b ** 2 - 14 * b
           + 4 * a * c + 4 * a ** 2)
    P = _mixed({}, Y * (T - r + 1) * (T - r + 2) * (T + e7 + 1),
               {1: (T - r + 2) * P13, 2: X.shift(-2) * (T + 3 - e3)})
    Q = _mixed({}, Y.shift(-1) * (T - r + 3) * (T - r + 4) * (T + e7 + 2),
               {1: (T - r + 4) * Q13, 2: X * (T + 3 - e3)})
    return ShiftPair("SE5", {"g": 2}, P, Q, source="g+2 table")


def _se5_p_minus():
    e, B51, B52 = _se5_env()
    _es, B51s, B52s = _se5_env({"p": -1})
    a, b, c, g, p, q = (frac(n) for n in "abcgpq")
    r = e["r"]
    e1, e2, e3, e7, e8 = (e[k] for k in ("e1", "e2", "e3", "e7", "e8"))
    T = _T
    p3 = e2 + e3 + p - 1
    p2 = -e3 * (e2 + p) - p * (a + c + p + 1) + 1
    p1 = (p ** 3 + (g + 4 + 3 * a + 3 * c) * p ** 2
          + (2 + c * g - 2 * b + 2 * a ** 2 + 5 * a + 2 * c ** 2
             + 4 * a * c + a * g + 5 * c + g - q) * p
          + (1 + q + 2 * b) * (2 * b + g + 2 + q + a + c))
    p0 = p * (a + c + p + 1) * (2 * a + 2 * c + g + p + 2) * (e1 - p - 2)
    P0 = -T ** 4 + p3 * T ** 3 + p2 * T ** 2 + p1 * T + p0
    P = _mixed({3: (T - r + 1) * (T - r + 2) * (T + e7 + 1) * (T + e8 + 1),
                2: (T - r + 1) * B51,
                1: T * B52.shift(-1)}, P0, {})
    Q = _mixed({3: (T - r + 3) * (T - r + 4) * (T + e7 + 3) * (T + e8 + 3),
                2: (T - r + 3) * B51s.shift(2),
                1: (T + 2) * B52s.shift(1)}, P0.shift(2), {})
    return ShiftPair("SE5", {"p": -1}, P, Q, source="p-1 table")


def _se5_q_minus():
    e, B51, B52 = _se5_env()
    _es, B51s, B52s = _se5_env({"q": -1})
    p = frac("p")
    r = e["r"]
    e1, e2, e3, e7, e8 = (e[k] for k in ("e1", "e2", "e3", "e7", "e8"))
    T = _T
    trip = (T + 2 - e1) * (T + 2 - e2) * (T + 2 - e3)
    P_nnn = (T - r + 1) * (T - r + 2) * (T + e7 + 1) * (T + e8 + 1)
    P_nn = (P_nnn * 0 + (T - r + 1) * B51
            - (T - 2 * e1 + 2 * p + 5) * (T - r + 1) * (T + e7 + 1) * (T + e8 + 1))
    P_n = (T * B52.shift(-1) - (T - 2 * e1 + 2 * p + 4) * B51
           + (e1 - 2 - p) * (e1 - 1 - p) * (T + e7 + 1) * (T + e8 + 1))
    P0 = (-(T + e1 - p - 2) * (T + 1 - e1) * (T + 1 - e2) * (T + 1 - e3)
          - (T - r + 1) * B52.shift(-1))
    Q_nnn = (T - r + 3) * (T - r + 4) * (T + e7 + 3) * (T + e8 + 3)
    Q_nn = ((T - r + 3) * B51s.shift(2)
            - (T - 2 * e1 + 2 * p + 4) * (T - r + 3) * (T + e7 + 2) * (T + e8 + 2))
    Q_n = ((T + 2) * B52s.shift(1) - (T - 2 * e1 + 2 * p + 4) * B51s.shift(1)
           + (e1 - 2 - p) * (e1 - 1 - p) * (T + e7 + 1) * (T + e8 + 1))
    Q0 = (-(T + e1 - p) * (T + 2 - e1) * (T + 2 - e2) * (T + 2 - e3)
          - (T - r + 1) * B52s)
    P = _mixed({3: P_nnn, 2: P_nn, 1: P_n}, P0, {1: trip})
    Q = _mixed({3: Q_nnn, 2: Q_nn, 1: Q_n}, Q0, {1: trip})
    return ShiftPair("SE5", {"q": -1}, P, Q, source="q-1 table")


def _se5_cpq_minus():
    e, B51, B52 = _se5_env()
    _es, B51s, B52s = _se5_env({"c": -1, "p": 1, "q": 1})
    a, b, c, g, p, q = (frac(n) for n in "abcgpq")
    r = e["r"]
    e1, e2, e7, e8 = (e[k] for k in ("e1", "e2", "e7", "e8"))
    T = _T
    M = 2 * a + 2 * b + 4 * c + 2 * g + p + q + 4
    V = -(2 * a + 2 * c + g + p + 2) * (2 * a + 2 * b + 2 * c + g + p + q + 4)
    K = (2 * a * g + 4 * (a * c + c ** 2 + c * g) + 2 * c * p + g ** 2
         + g * p - 4 * a - 4 * b - 4 * c - 2 * g - 2 * p - 2 * q - 8)
    p4 = 3 * M
    p3 = (88 + 80 * b * c + 96 * a + 26 * a ** 2 + 120 * c + 104 * b
          + 30 * b ** 2 + 32 * c ** 2 + 64 * a * c + 56 * a * b
          + (19 * b + 30 + 14 * c + 17 * a) * p
          + (40 * c + 44 * b + 68 + 36 * a) * g
          + (27 * b + 46 + 34 * c + 25 * a) * q
          + 19 * g * q + 9 * g * p + 8 * p * q + 2 * p ** 2 + 6 * q ** 2
          + 12 * g ** 2)
    p2 = (212 + 93 * p + 75 * q * g * b + 54 * c * g * q + 354 * a
          + 110 * q * a * b + 12 * q * g * p + 50 * b * c * p
          + 252 * b * c * a + 61 * q * g * a + 34 * b * g * p
          + 15 * c * g * p + 152 * c * g * b + 29 * q * b * p
          + 126 * b * c * q + 26 * q * a * p + 15 * q * c * p
          + 210 * g + 336 * c + 390 * b + 153 * q + 109 * g * q
          + 2 * g * p ** 2 + 176 * a * q + 49 * g * p + 43 * p * q
          + 173 * c * q + 30 * a ** 2 * p + 6 * a * p ** 2
          + 6 * c ** 2 * p + c * p ** 2 + 434 * a * b + 106 * a * p
          + 474 * b * c + 282 * b * g + 119 * b * p + 65 * c * p
          + 193 * b * q + 68 * a * b * p + 238 * b ** 2 + 27 * a * g * p
          + 196 * a ** 2 + 136 * c ** 2 + 10 * p ** 2 + 37 * q ** 2
          + 36 * a * c * p + 98 * a * c * q + 150 * b * g * a
          + 98 * c * g * a + 196 * c * g + 222 * a * g + 354 * a * c
          + 64 * g ** 2 + 120 * a ** 2 * b + 92 * a ** 2 * c
          + 58 * a ** 2 * g + 132 * b ** 2 * a + 38 * b ** 2 * p
          + 7 * b * p ** 2 + 68 * c ** 2 * a + 32 * g ** 2 * a
          + 6 * g ** 2 * p + 94 * b ** 2 * g + 164 * b ** 2 * c
          + 47 * g ** 2 * b + 50 * q * a ** 2 + 60 * q * b ** 2
          + 116 * c ** 2 * b + 36 * c ** 2 * q + 18 * g ** 2 * q
          + 22 * q ** 2 * a + 24 * q ** 2 * b + 14 * q ** 2 * g
          + 22 * c * q ** 2 + 36 * c ** 2 * g + 27 * c * g ** 2
          + 2 * q * p ** 2 + 36 * a ** 3 + 48 * b ** 3 + 3 * q ** 3
          + 12 * c ** 3 + 6 * g ** 3 + 5 * p * q ** 2)
    p1 = (168 + 12 * b * c ** 2 * g + 90 * p + 172 * q * g * b
          + 18 * b * c * g ** 2 + 50 * c * g * q + 376 * a
          - 12 * b * c ** 2 * p + 24 * b ** 2 * p * q
          + g * p * q ** 2 - 4 * c * g * p ** 2 + 25 * b * g ** 2 * q
          + 26 * b ** 2 * g * p + 38 * a * b * g ** 2
          - 24 * a * c ** 2 * p - 24 * c ** 2 * g * p
          + 312 * q * a * b + 36 * b ** 2 * c * p + 17 * q * g * p
          + 76 * b * c * p + 3 * a * p ** 2 * q + 3 * b * p ** 2 * q
          + 552 * b * c * a + 125 * q * g * a + 6 * a * p * q ** 2
          + 92 * a ** 2 * b * q + 67 * b * g * p + 15 * a * g * q ** 2
          + 12 * a * g ** 2 * q - 25 * c * g * p - 2 * c * p ** 2 * q
          + 248 * c * g * b + 70 * q * b * p - 2 * c * p * q ** 2
          + 8 * a ** 2 * c * p - 12 * c ** 2 * p * q
          + 136 * a ** 2 * b * c + 216 * a * b ** 2 * c
          + 64 * b ** 2 * g * q + 256 * b * c * q + 26 * b * c * q ** 2
          + 4 * c * g * q ** 2 + 104 * b ** 2 * c * q
          + 19 * b * g * q ** 2 + 92 * a ** 2 * b * g + 6 * b * p * q ** 2
          + 34 * a * b * q ** 2 + 18 * a * c * q ** 2 + 3 * b * g ** 2 * p
          + 100 * a * b ** 2 * q + 36 * b * c ** 2 * q
          + 10 * a * b * p ** 2 + 120 * b ** 2 * c * g
          + 56 * a ** 2 * b * p + 65 * q * a * p - 2 * a * g ** 2 * p
          + 20 * a ** 2 * p * q + 5 * q * c * p - 22 * a * c * g ** 2
          + 164 * g + 228 * c + 412 * b + 134 * q + 44 * a ** 2 * c * q
          + 112 * g * q + g * p ** 2 + 243 * a * q + 42 * g * p
          + 51 * p * q + 143 * c * q + 86 * a ** 2 * p + 14 * a * p ** 2
          - 42 * c ** 2 * p - 5 * c * p ** 2 + 694 * a * b + 153 * a * p
          + 554 * b * c + 358 * b * g + 174 * b * p + 31 * c * p
          + 260 * b * q - 2 * a * c * p ** 2 + 198 * a * b * p
          + 56 * a * b * c ** 2 - 2 * b * c * p ** 2 + 380 * b ** 2
          + 15 * b * g * p * q - 12 * c ** 2 * g * q + 12 * a ** 2 * g * p
          + 34 * a ** 2 * g * q - 12 * c * g ** 2 * p
          + 132 * a * b ** 2 * g + 45 * a * g * p + 314 * a ** 2
          + 16 * c ** 2 + 12 * p ** 2 + 35 * q ** 2 + 32 * a * c * p
          + 162 * a * c * q + b * g * p ** 2 + 364 * b * g * a
          - 52 * a * c ** 2 * g + 64 * a * b ** 2 * p + a * g * p ** 2
          + 50 * c * g * a + 92 * c * g + 246 * a * g + 330 * a * c
          + 42 * g ** 2 + 388 * a ** 2 * b + 156 * a ** 2 * c
          + 122 * a ** 2 * g + 428 * b ** 2 * a + 112 * b ** 2 * p
          + 17 * b * p ** 2 - 20 * c ** 2 * a + 30 * g ** 2 * a
          - 2 * g ** 2 * p + 256 * b ** 2 * g + 424 * b ** 2 * c
          + 87 * g ** 2 * b + 144 * q * a ** 2 + 168 * q * b ** 2
          + 148 * c ** 2 * b + 25 * g ** 2 * q + 49 * q ** 2 * a
          + 51 * q ** 2 * b + 22 * q ** 2 * g + 22 * c * q ** 2
          - 64 * c ** 2 * g - 19 * c * g ** 2 + 4 * q * p ** 2
          + 116 * a ** 3 + 156 * b ** 3 + 3 * q ** 3 - 60 * c ** 3
          - g ** 3 + 16 * a ** 4 - 16 * c ** 4 - g ** 4 + 24 * b ** 4
          + 7 * p * q ** 2 + g * q ** 3 + g ** 3 * q - g ** 2 * p ** 2
          + 24 * a ** 3 * c + 20 * a ** 3 * g - 16 * a ** 2 * c ** 2
          + 4 * a ** 2 * g ** 2 - 40 * a * c ** 3 - 3 * a * g ** 3
          + 104 * b ** 3 * c + 60 * b ** 3 * g + 88 * b ** 2 * c ** 2
          + 38 * b ** 2 * g ** 2 - 8 * b * c ** 3 + 5 * b * g ** 3
          - 32 * c ** 3 * g - 16 * c ** 3 * p - 16 * c ** 3 * q
          - 24 * c ** 2 * g ** 2 - 4 * c ** 2 * p ** 2
          - 4 * c ** 2 * q ** 2 - 8 * c * g ** 3 - 2 * g ** 3 * p
          + 104 * a * b * c * g + 144 * a * b * c * q
          + 36 * a * b * g * p + 96 * a * b * g * q - 16 * a * c * g * p
          + 24 * a * c * g * q + 6 * a * c * p * q + 11 * a * g * p * q
          + 68 * b * c * g * q + 14 * b * c * p * q + 40 * a * b * c * p
          + 3 * g ** 2 * q ** 2 + 72 * a ** 3 * b + 16 * a ** 3 * p
          + 28 * a ** 3 * q + 120 * a ** 2 * b ** 2 + 4 * a ** 2 * p ** 2
          + 16 * a ** 2 * q ** 2 + 88 * a * b ** 3 + 3 * a * q ** 3
          + 24 * b ** 3 * p + 36 * b ** 3 * q + 6 * b ** 2 * p ** 2
          + 18 * b ** 2 * q ** 2 + 3 * b * q ** 3 - 6 * c * g * p * q
          + 44 * a * b * p * q)
    p0 = (-(2 * c + g)
          * (2 * c ** 2 + 4 * a * c + 8 * c + c * q + 6 * b * c + 3 * c * g
             + 12 * b + 9 + 6 * a * b + 3 * a * g + 3 * q + 2 * q * a
             + 2 * q * b + q * g + 6 * g + 4 * b ** 2 + 2 * a ** 2 + 9 * a
             + 4 * b * g + g ** 2)
          * (2 + 2 * a + g + 2 * c + p)
          * (p + 4 + 2 * a + q + 2 * c + 2 * b + g))
    P0 = p4 * T ** 4 + p3 * T ** 3 + p2 * T ** 2 + p1 * T + p0
    P_nn = M * (T - r + 1) * (T - r + 2) * (T + e7 + 1) * (T + e8 + 1)
    P_n = M * (T - r + 1) * B51 + V * (T - r + 1) * (T + e7 + 1) * (T + e8 + 1)
    P1 = (-M * (T - 2) + K) * (T + 2 - e1) * (T + 2 - e2)
    Q_nn = M * (T - r + 3) * (T - r + 4) * (T + e7 + 2) * (T + e8 + 2)
    Q_n = (M * (T - r + 3) * B51s.shift(1)
           + V * (T - r + 3) * (T + e7 + 1) * (T + e8 + 1))
    Q0 = (P0.shift(-1) + V * B51s + M * (T + 1) * B52s
          - V * B51.shift(-1) - M * (T - 1) * B52.shift(-2))
    Q1 = (-M * T + K) * (T + 2 - e1) * (T + 3 - e2)
    P = _mixed({2: P_nn, 1: P_n}, P0, {1: P1})
    Q = _mixed({2: Q_nn, 1: Q_n}, Q0, {1: Q1})
    return ShiftPair("SE5", {"c": -1, "p": 1, "q": 1}, P, Q,
                     source="cpq- table")


def _se5_cpq_plus():
    e, B51, B52 = _se5_env()
    _es, B51s, B52s = _se5_env({"c": 1, "p": -1, "q": -1})
    a, b, c, g, p, q = (frac(n) for n in "abcgpq")
    r = e["r"]
    e1, e2, e3, e7, e8 = (e[k] for k in ("e1", "e2", "e3", "e7", "e8"))
    T = _T
    F = (-(p + q) * T
         - (2 * a * p + 2 * b * p + 2 * c * p + g * p + 6 * p + 2 * q))
    V = -p * (2 * a + 2 * b + 2 * c + p + q + g + 4)
    p3 = ((13 * a + 19 * b + 26 + 10 * c) * p
          + (9 * a + 6 * c + 15 * b + 18) * q
          + 5 * g * q + 7 * g * p + 8 * p * q + 2 * p ** 2 + 6 * q ** 2)
    p2 = ((81 + 44 * b * c + 58 * a * b + 18 * a ** 2 + 42 * b ** 2
           + 8 * c ** 2 + 26 * a * c + 78 * a + 117 * b + 55 * c) * p
          + 11 * q * g * p
          + (20 * b * c + 28 * a * b + 57 * b + 33 + 19 * c + 30 * a
             + 24 * b ** 2 + 2 * c ** 2 + 8 * a * c + 6 * a ** 2) * q
          + (16 * b + 5 * c + 17 + 7 * a) * g * q
          + 3 * g * p ** 2
          + (41 + 14 * c + 19 * a + 31 * b) * g * p
          + (41 + 31 * b + 13 * c + 22 * a) * p * q
          + (3 * c + 12 + 9 * b + 6 * a) * p ** 2
          + (6 * c + 21 + 12 * a + 18 * b) * q ** 2
          + 5 * g ** 2 * p + 2 * g ** 2 * q + 6 * q ** 2 * g
          + 2 * q * p ** 2 + 3 * q ** 3 + 5 * p * q ** 2)
    p1 = ((106 + 48 * a ** 2 * b + 20 * c ** 2 + 20 * c ** 2 * b
           + 145 * a + 224 * b + 93 * c + 68 * b * c * a
           + 56 * b ** 2 * c + 8 * c ** 2 * a + 8 * a ** 3 + 36 * b ** 3
           + 76 * b ** 2 * a + 62 * a ** 2 + 146 * b * c + 156 * b ** 2
           + 82 * a * c + 212 * a * b + 16 * a ** 2 * c) * p
          + 3 * g * p * q ** 2
          + (34 + 25 * b + 17 * a + 10 * c) * q * g * p
          + (20 * b ** 2 * a + 48 * b + 8 * a ** 2 * b + 18 + 30 * b * c
             + 8 * a * c + 2 * c ** 2 + 21 * a + 42 * a * b + 12 * b ** 3
             + 4 * c ** 2 * b + 16 * b ** 2 * c + 6 * a ** 2
             + 42 * b ** 2 + 13 * c + 12 * b * c * a) * q
          + (12 + 10 * a * b + 25 * b + 8 * b * c + 5 * c + 7 * a
             + 12 * b ** 2) * g * q
          + (10 + 4 * a + 2 * c + 8 * b) * g * p ** 2
          + (16 * a * c + 12 * a ** 2 + 74 + 42 * c + 63 * a
             + 4 * c ** 2 + 36 * b * c + 40 * b ** 2 + 110 * b
             + 50 * a * b) * g * p
          + (34 * b ** 2 + 30 * b * c + 22 * a * c + 69 + 18 * a ** 2
             + 73 * a + 52 * a * b + 96 * b + 4 * c ** 2 + 39 * c) * p * q
          + (8 * b * c + 4 * a * c + 20 * a + 9 * c + 22 + 4 * a ** 2
             + 16 * a * b + 33 * b + 12 * b ** 2) * p ** 2
          + (8 * b * c + 4 * a ** 2 + 27 * b + 15 + 12 * b ** 2 + 6 * c
             + 17 * a + 4 * a * c + 16 * a * b) * q ** 2
          + (13 * b + 4 * c + 6 * a + 16) * g ** 2 * p
          + (2 + 3 * b) * g ** 2 * q
          + (8 * b + 8 + 4 * a + 2 * c) * q ** 2 * g
          + (5 * a + 8 + 5 * b + 2 * c) * q * p ** 2
          + (3 + 3 * a + 3 * b) * q ** 3
          + (11 + 2 * c + 8 * a + 8 * b) * p * q ** 2
          + g * q ** 3 + g ** 2 * p ** 2 + g ** 3 * p + g ** 2 * q ** 2
          + 4 * g ** 2 * p * q + 2 * g * p ** 2 * q)
    p0 = (p * (4 + 2 * a + 2 * b + 2 * c + g)
          * (a * q + 2 * a + 2 * a * b + 3 + g + q + 5 * b + 2 * b ** 2
             + b * g + b * q - c * q)
          * (2 * a + 2 * b + 2 * c + p + q + g + 4))
    P0 = 3 * (p + q) * T ** 4 + p3 * T ** 3 + p2 * T ** 2 + p1 * T + p0
    P_nn = (p + q) * (T - r + 1) * (T - r + 2) * (T + e7 + 1) * (T + e8 + 1)
    P_n = ((p + q) * (T - r + 1) * B51
           + V * (T - r + 1) * (T + e7 + 1) * (T + e8 + 1))
    P1 = F.shift(-2) * (T + 2 - e3) * (T + 2 - e2)
    Q_nn = (p + q) * (T - r + 3) * (T - r + 4) * (T + e7 + 2) * (T + e8 + 2)
    Q_n = ((p + q) * (T - r + 3) * B51s.shift(1)
           + V * (T - r + 3) * (T + e7 + 1) * (T + e8 + 1))
    Q0 = (P0.shift(-1) + V * B51s - V * B51.shift(-1)
          + (p + q) * (T + 1) * B52s - (p + q) * (T - 1) * B52.shift(-2))
    Q1 = F * (T + 2 - e3) * (T + 3 - e2)
    P = _mixed({2: P_nn, 1: P_n}, P0, {1: P1})
    Q = _mixed({2: Q_nn, 1: Q_n}, Q0, {1: Q1})
    return ShiftPair("SE5", {"c": 1, "p": -1, "q": -1}, P, Q,
                     source="cpq+ table")


def _se5_ag_plus():
    e, B51, B52 = _se5_env()
    _es, B51s, B52s = _se5_env({"a": 1, "g": -2})
    a, b, c, g, p, q = (frac(n) for n in "abcgpq")
    r = e["r"]
    e1, e2, e3, e7, e8 = (e[k] for k in ("e1", "e2", "e3", "e7", "e8"))
    T = _T
    M = (2 * c + g) * (a + 1)
    K = ((b + c) * (p + q) + (a + 3 + 3 * b + 3 * c + g + p + q) * g
         + 2 * a * b + 4 * b + 2 * c + 2 * (b + c) ** 2)
    v = p + 2 * a + 2 * b + 2 * c + q + g + 4
    F = v * ((b + c + g) * T
             + (a + 4 + 3 * b + 3 * c + g + q) * g + (b + c) * q
             + 2 * (b + c) ** 2 + 3 * b + 5 * c + 2 * a * c)
    g3 = b + c + g
    g2 = ((3 * a + 2 * b + 9 + q) * g + (b + c) * q + 2 * b * c + 8 * b
          + 10 * c + 4 * a * c + 2 * b ** 2 + 2 * a * b)
    g1 = (26 * a * c + 4 * a ** 2 * c + 10 * b * c + 17 * b + 33 * c
          + 6 * b ** 2 + 6 * a * b + 4 * b * c * a
          + (-2 * a * c + 25 + 2 * a ** 2 + 16 * a + 2 * a * b - 2 * c
             + 8 * b) * g
          + (4 * a * c + 3 * b + 7 * c) * q
          + (2 * a + 5) * g * q + (-a - 1) * g ** 2)
    g0 = (36 * c + 10 * b + 24 * b * c + 28 * b * c * a + 42 * a * c
          + 4 * a * b + 4 * b ** 2 + 8 * a ** 2 * b * c
          + 8 * a * b ** 2 * c + 8 * a * b * c ** 2 + 12 * a ** 2 * c
          + 8 * c ** 2 * b + 8 * b ** 2 * c
          + (23 + 12 * b * c * a + 4 * c ** 2 * a + 23 * a
             + 4 * b ** 2 * a + 14 * a * b + 12 * b * c + 14 * b
             + 4 * b ** 2 + 4 * c ** 2 + 6 * a ** 2 + 4 * a ** 2 * b) * g
          + (14 * a * c + 4 * b * c + 12 * c + 4 * b * c * a
             + 4 * a ** 2 * c + 2 * b) * q
          + (2 * a ** 2 + 2 * c + 2 * a * c + 7 + 7 * a + 2 * a * b
             + 2 * b) * g * q
          + (4 * b + 4 * a * c + 4 * a * b + 4 * c) * g ** 2
          + (1 + a) * (g + q) * g ** 2)
    G = v * (g3 * T ** 3 + g2 * T ** 2 + g1 * T + g0)
    P_nn = K * (T - r + 1) * (T - r + 2) * (T + e7 + 1) * (T + e8 + 1)
    P_n = (T - r + 1) * (K * B51 + F * (T + e7 + 1) * (T + e8 + 1))
    P0 = -M * (T - r + 1) * B52.shift(-1) + G.shift(-2) * (T + 1 - e2)
    P1 = M * (T + 2 - e1) * (T + 2 - e2) * (T + 2 - e3)
    Q_nn = K * (T - r + 3) * (T - r + 4) * (T + e7 + 2) * (T + e8 + 3)
    Q_n = (T - r + 3) * (K * B51s.shift(1)
                         + F.shift(-1) * (T + e7 + 1) * (T + e8 + 2))
    Q0 = -M * (T - r + 2) * B52s + G * (T + 2 - e2)
    Q1 = M * (T + 3 - e1) * (T + 2 - e2) * (T + 3 - e3)
    P = _mixed({2: P_nn, 1: P_n}, P0, {1: P1})
    Q = _mixed({2: Q_nn, 1: Q_n}, Q0, {1: Q1})
    return ShiftPair("SE5", {"a": 1, "g": -2}, P, Q, source="ag+ table")


def _se5_ag_minus():
    e, B51, B52 = _se5_env()
    _es, B51s, B52s = _se5_env({"a": -1, "g": 2})
    a, b, c, g, p, q = (frac(n) for n in "abcgpq")
    r = e["r"]
    e1, e2, e3, e7, e8 = (e[k] for k in ("e1", "e2", "e3", "e7", "e8"))
    T = _T
    V = -T + a + c + p - 1
    F = (a + c + p + 1) * (2 * a + 2 * b + 2 * c + p + q + g + 4)
    p3 = 9 * a + 15 * b + 6 * c + 5 * g + 6 * q + 18
    p2 = (25 + 16 * b * c + 18 * a + 2 * a ** 2 + 7 * c + 53 * b
          + 24 * b ** 2 - 2 * c ** 2 + 24 * a * b
          + (-4 * b - 6 * a - 10 - 6 * c) * p
          + (3 * c + 16 * b + 15 + 5 * a) * g
          + (18 * b + 19 + 4 * c + 10 * a) * q
          + 6 * g * q - 2 * g * p - 2 * p * q - 2 * p ** 2 + 3 * q ** 2
          + 2 * g ** 2)
    p1 = (-14 - 43 * a - 4 * q * g * p - 24 * b * c * a - 43 * c + 8 * b
          - 2 * g * p ** 2 - 18 * a * b - 26 * b * c + 30 * b ** 2
          - 34 * a ** 2 - 26 * c ** 2 - 60 * a * c - 12 * a ** 2 * b
          - 20 * a ** 2 * c + 8 * b ** 2 * a - 16 * c ** 2 * a
          - 2 * g ** 2 * p + 4 * b ** 2 * c - 12 * c ** 2 * b
          + g ** 2 * q + q ** 2 * g - 2 * q * p ** 2 - 8 * a ** 3
          + 12 * b ** 3 - 4 * c ** 3 - 2 * p * q ** 2
          + (-2 * c + 8 * b + 4) * g * q
          + (-10 * a - 8 * c - 18 - 10 * b) * g * p
          + (-10 * a - 8 * c - 18 - 10 * b) * p * q
          + (-40 - 22 * b * c - 6 * c ** 2 - 12 * b ** 2 - 34 * c
             - 26 * a * b - 44 * a - 18 * a * c - 12 * a ** 2
             - 46 * b) * p
          + (12 * b ** 2 - 8 * a ** 2 - 17 * a + 15 * b - 17 * c
             - 6 * c ** 2 - 2 * b * c - 4 - 14 * a * c) * g
          + (-2 * b * c + 6 * a * b + 12 * b ** 2 - 6 * c ** 2 - 7 * a
             + 17 * b - 16 * c - 10 * a * c - 1 - 4 * a ** 2) * q
          + (-2 * c - 4 * a - 8 - 6 * b) * p ** 2
          + (-2 * c + 1 + a + 3 * b) * q ** 2
          + (-2 * a + 3 * b - 2 * c) * g ** 2)
    p0 = (-(2 * b * q + 4 * a * b + 4 * b * c + g ** 2 + 8 + g * q
            + 4 * b ** 2 + 4 * a + 12 * b + 2 * a * q + 4 * b * g
            + 2 * c * g + 4 * c + 5 * g + 3 * q)
          * (p + a + 1 + c)
          * (p + 2 * a + 2 * b + 2 * c + q + g + 4))
    P0 = 3 * T ** 4 + p3 * T ** 3 + p2 * T ** 2 + p1 * T + p0
    P_nn = (T - r + 1) * (T - r + 2) * (T + e7 + 1) * (T + e8 + 1)
    P_n = (T - r + 1) * (B51 + F * (T + e7 + 1))
    P1 = V.shift(-2) * (T + 2 - e1) * (T + 2 - e3)
    Q_nn = (T - r + 3) * (T - r + 4) * (T + e7 + 2) * (T + e8 + 1)
    Q_n = (T - r + 3) * (B51s.shift(1) + F * (T + e7 + 1))
    Q0 = _tdiv(
        (T + 4 - e2) * P0.shift(2)
        + (T - r + 3) * V * B52.shift(1)
        - (T - r + 2) * V.shift(-1) * B52s,
        T + 3 - e2)
    Q1 = V * (T + 3 - e1) * (T + 3 - e3)
    P = _mixed({2: P_nn, 1: P_n}, P0, {1: P1})
    Q = _mixed({2: Q_nn, 1: Q_n}, Q0, {1: Q1})
    return ShiftPair("SE5", {"a": -1, "g": 2}, P, Q, source="ag- table")


_DATA_DIR = Path(__file__).with_name("data")


def _raw_to_terms(raw_poly):
    """[(monomial exponents, "p/q"), ...] for a raw PolyElement."""
    return [[list(monom), f"{c.numerator}/{c.denominator}"]
            for monom, c in sorted(raw_poly.terms())]


def _terms_to_raw(terms):
    ring = _FIELD.ring
    data = {}
    for monom, c in terms:
        num, den = c.split("/")
        data[tuple(monom)] = ring.domain(int(num), int(den))
    return ring.from_dict(data)


def _op_to_json(op: DiffOp):
    return [{"numer": _raw_to_terms(c.raw.numer),
             "denom": _raw_to_terms(c.raw.denom)} for c in op.coeffs]


def _op_from_json(data) -> DiffOp:
    coeffs = []
    for entry in data:
        num = _terms_to_raw(entry["numer"])
        den = _terms_to_raw(entry["denom"])
        coeffs.append(RatFuncX(_FIELD(num) / _FIELD(den)))
    return DiffOp(coeffs)


def _stored_pair(family, shift, stem, fallback, source):
    """Load a precomputed explicit pair, deriving and caching it if absent.

    Derived operators that are expensive to recompute are kept as exact
    coefficient data under ``data/``; loading still runs the usual sampled
    intertwining check, so a stale file cannot pass silently.
    """
    path = _DATA_DIR / f"{stem}.json"
    if path.exists():
        data = json.loads(path.read_text())
        if isinstance(data, list):  # older layout: P coefficient strings
            P = DiffOp([RatFuncX(_FIELD.from_expr(sympy.sympify(s)))
                        for s in data])
            Q = None
        else:
            P = _op_from_json(data["P"])
            Q = _op_from_json(data["Q"]) if data.get("Q") else None
        return ShiftPair(family, shift, P, Q, source=source)
    pair = fallback()
    _DATA_DIR.mkdir(exist_ok=True)
    payload = {"P": _op_to_json(pair.P)}
    if pair.Q is not None:
        payload["Q"] = _op_to_json(pair.Q)
    path.write_text(json.dumps(payload))
    return pair


def _se5_aminus_upstairs():
    """Explicit a-1 operator built through the order-6 specialization.

    At r = -2a-2b-2c-g-p-q-3 the order-6 operator factors as L o d with L
    the order-5 operator, so an a-1 step downstairs lifts to the route
    (a-1, r+1, r+1) upstairs.  Composing those explicit operators
    (reducing after each product), specializing r, and conjugating by d
    gives the explicit order-5 intertwiner.
    """
    E0 = make("SE6").op
    R = _se6_a_minus().P
    r_plus = table("E6")["r+"].P
    for step in ({"a": -1}, {"a": -1, "r": 1}):
        emap = param_map("SE6", _letters("SE6", step))
        lift = r_plus.subs_params(
            {f"e{i}": emap[f"e{i}"] for i in range(1, 10)})
        R = op_rdivmod(op_mul(lift, R), E0)[1]
    R = R.subs_params({"r": param_map("SE5")["r"]})
    S, rem = op_rdivmod(op_mul(D, R), D)
    if not rem.is_zero():
        raise NotConstantRemainder("conjugation by d left a remainder")
    S = op_rdivmod(S, make("SE5").op)[1]
    cleared, _ = clear_x_denominators(S, side="left")
    return ShiftPair("SE5", {"a": -1}, clear_param_content(cleared),
                     source="through the order-6 specialization")


def _se5_a_minus():
    return _stored_pair(
        "SE5", {"a": -1}, "se5_a_minus", _se5_aminus_upstairs,
        source="through the order-6 specialization (stored)")


def _se5_table():
    e = param_map("SE5")
    r = e["r"]
    out = {
        "a+": _se5_a_plus(),
        "b+": _se5_b_plus(),
        "c+": _se5_c_plus(),
        "g+2": _se5_g_plus(),
        "p-": _se5_p_minus(),
        "q-": _se5_q_minus(),
        "cpq-": _se5_cpq_minus(),
        "cpq+": _se5_cpq_plus(),
        "ag+": _se5_ag_plus(),
        "ag-": _se5_ag_minus(),
        "p+": ShiftPair("SE5", {"p": 1}, DiffOp([1 - r, _X]),
                        source="x d + 1 - r"),
        "q+": ShiftPair("SE5", {"q": 1}, DiffOp([1 - r, _X - 1]),
                        source="(x-1)d + 1 - r"),
    }
    out["a-"] = _se5_a_minus()
    out["b-"] = _reflect(out["a-"], "SE5", {"b": -1}, "b-1 by reflection")
    out["c-"] = ShiftRoute("SE5", [out["cpq-"], out["p-"], out["q-"]],
                           source="c-1 via cpq- then p-, q-")
    out["g-2"] = ShiftRoute("SE5", [out["ag+"], out["a-"]],
                            source="g-2 via ag+ then a-")
    return out


def _se5_svalues():
    e = param_map("SE5")
    a, b, c, g, p, q = (frac(n) for n in "abcgpq")
    r = e["r"]
    e1, e2, e3, e4, e5, e6 = (e[f"e{i}"] for i in range(1, 7))
    return [
        SvalueCase("p", "p-", "p+",
                   (e1 - r) * (e2 - r) * (e3 - r) * (1 - r) * (2 - r)),
        SvalueCase("q", "q-", "q+",
                   (e4 - r) * (e5 - r) * (e6 - r) * (1 - r) * (2 - r)),
        SvalueCase("a", "a+", "a-",
                   (a + 1) * (2 * a + g + 2) * (2 * a + 2 * b + g + 3)
                   * (a + b + c + g + 2) * (1 - r) * (2 - r)
                   * (2 * a + 2 * b + 2 * c + g + 4) * (3 - r)
                   * (e2 - r) * (e3 - r) * (e3 - r + 1)),
        SvalueCase("b", "b+", "b-",
                   (b + 1) * (2 * b + g + 2) * (2 * a + 2 * b + g + 3)
                   * (a + b + c + g + 2) * (1 - r) * (2 - r)
                   * (2 * a + 2 * b + 2 * c + g + 4) * (3 - r)
                   * (e5 - r) * (e6 - r) * (e6 - r + 1)),
        SvalueCase("cpq", "cpq-", "cpq+",
                   c * (p + 1) * (q + 1) * (2 * c + g)
                   * (a + b + c + g + 1)
                   * (2 * a + 2 * b + 2 * c + g + 2)
                   * (e3 - r - 1) * (e6 - r - 1) * (1 - r) ** 2),
        SvalueCase("ag", "ag+", "ag-",
                   (a + 1) * (g - 1) * (2 * c + g) * (2 * b + g)
                   * (a + b + c + g + 1)
                   * (e6 - r - 1) * (e6 - r - 2) * (e2 - r) * (1 - r) ** 2),
        SvalueCase("c", "c+", "c-",
                   (p + 1) * (q + 1) * (c + 1) * (2 * c + g + 2)
                   * (2 * a + 2 * b + 2 * c + g + 4)
                   * (a + b + c + g + 2) * (e2 - r) * (e3 - r + 1)
                   * (e3 - r) * (e5 - r) * (e6 - r + 1) * (e6 - r)
                   * (1 - r) * (2 - r) ** 2 * (3 - r) ** 2),
        SvalueCase("g", "g+2", "g-2",
                   (g + 1) * (2 * a + g + 2) * (2 * b + g + 2)
                   * (2 * c + g + 2) * (2 * a + 2 * b + g + 3)
                   * (a + b + c + g + 3) * (a + b + c + g + 2)
                   * (2 * a + 2 * b + 2 * c + g + 4)
                   * (e3 - r + 1) * (e3 - r) * (e6 - r + 1) * (e6 - r)
                   * (1 - r) * (2 - r) * (3 - r)),
    ]


# ---------------------------------------------------------------------------
# SE4: the order-4 specialization


def _se4_exponents(shift=None):
    return param_map("SE4", _letters("SE4", shift))


def _se4_a_minus():
    e = _se4_exponents()
    a, b, c, g, u = (frac(n) for n in "abcgu")
    e1, e2, e3, e4 = (e[k] for k in ("e1", "e2", "e3", "e4"))
    e6, e7, e8 = (e[k] for k in ("e6", "e7", "e8"))
    p_n = (-2 * u ** 2 + (g + 5 * c + 3 * b + 2 * a) * u
           + 4 * a ** 2 + (6 + 2 * b + 2 * c + 4 * g) * a
           - 2 * c ** 2 + (g + 3 - 2 * b) * c + g ** 2 + (3 + b) * g
           + 2 + 3 * b)
    q_n = (-2 * u ** 2 + (g + 5 * c + 3 * b - 4 + 2 * a) * u
           + 4 * a ** 2 + (4 + 2 * c + 4 * g + 2 * b) * a
           - 2 * c ** 2 + (g + 6 - 2 * b) * c + g ** 2 + (2 + b) * g
           - 2 + 4 * b)
    x = _X
    P = DiffOp([
        e6 * e8 * (e1 + e7 + u - 1),
        (1 - e3) * (1 - e4) * x - p_n * (x - 1),
        (x - 1) * ((e6 - 2 * e4 + 4) * x + e2 - 2),
        x * (x - 1) ** 2,
    ])
    Q = DiffOp([
        (e6 + 1) * (e8 + 2) * (e1 + e7 + u - 1),
        (2 - e3) * (2 - e4) * x - q_n * (x - 1),
        (x - 1) * ((e6 - 2 * e4 + 7) * x + e2 - 3),
        x * (x - 1) ** 2,
    ])
    return ShiftPair("SE4", {"a": -1}, P, Q, source="a-1 table")


def _se4_a_plus():
    e = _se4_exponents()
    T1 = make("SE4").mixed.dPart[1]
    T1s = make("SE4", _letters("SE4", {"a": 1})).mixed.dPart[1]
    a, b, c, g, u = (frac(n) for n in "abcgu")
    e1, e2, e5, e6, e7 = (e[k] for k in ("e1", "e2", "e5", "e6", "e7"))
    T = _T
    m = -3 - 2 * a - 2 * c - g - b + u
    k = 2 - u + a + 2 * c + g + b
    w1 = k
    w0 = ((u - g - 5 - 2 * a - 2 * b - 2 * c)
          * (-2 - a - 2 * c - g - b + u))
    p3 = 3 * u - 3 * g - 7 - 4 * a - 6 * c - 3 * b
    p2 = (9 - 23 * u + 22 * c ** 2 + 19 * a + 27 * a * c - 10 * u * b
          - 27 * u * c - 17 * u * a + 8 * u ** 2 + 5 * g * b
          + 10 * a * b + 10 * a * g - 11 * u * g + 15 * b * c
          + 17 * g * c + 34 * c + 11 * g + 10 * b + 8 * a ** 2
          + 3 * g ** 2 + 2 * b ** 2)
    p1 = (10 + 10 * u - 28 * c ** 2 - 9 * g * c * b + 31 * u * b * c
          + 16 * a + 57 * u * a * c - 18 * a * c * b + 9 * u * g * b
          - 33 * u ** 2 * c - 20 * u ** 2 * a - 18 * a * c + 16 * u * b
          + 60 * u * c + 28 * u * a - 12 * u ** 2 * g - 34 * a * c ** 2
          + 48 * u * c ** 2 - 23 * u ** 2 + 34 * u * g * c
          - 4 * b ** 2 * c + 4 * u * b ** 2 + 4 * g * b + 8 * a * b
          + 7 * a * g - 18 * c ** 2 * b - 20 * c ** 2 * g
          - 14 * a ** 2 * c + 5 * u * g ** 2 - 11 * u ** 2 * b
          + 16 * u * g - 10 * b * c - 10 * g * c - 17 * a * c * g
          + 17 * u * a * g + 4 * c + 9 * g + 10 * b + 18 * u * a * b
          - 20 * c ** 3 + 6 * a ** 2 + 2 * g ** 2 + 2 * b ** 2
          - 5 * g ** 2 * c + 14 * u * a ** 2 + 7 * u ** 3)
    p0 = ((u + 1) * (-2 * c + u)
          * (2 * u ** 2 - 8 * u * c - 7 * u * a - 4 * u * g - 4 * u * b
             - 9 * u + 18 * c + 9 * g + 8 * c ** 2 + 4 * g * b + 10
             + 8 * g * c + 14 * a * c + 8 * b * c + 8 * a * b + 10 * b
             + 6 * a ** 2 + 16 * a + 2 * b ** 2 + 2 * g ** 2 + 7 * a * g))
    q3 = p3
    q2 = (-10 - 14 * u + 22 * c ** 2 + 9 * a + 27 * a * c - 10 * u * b
          - 27 * u * c - 17 * u * a + 8 * u ** 2 + 5 * g * b
          + 10 * a * b + 10 * a * g - 11 * u * g + 15 * b * c
          + 17 * g * c + 16 * c + 2 * g + b + 8 * a ** 2 + 3 * g ** 2
          + 2 * b ** 2)
    q1 = (23 - 26 * u + 18 * c ** 2 - 9 * g * c * b + 31 * u * b * c
          + 61 * a + 57 * u * a * c - 18 * a * c * b + 9 * u * g * b
          - 33 * u ** 2 * c - 20 * u ** 2 * a + 41 * a * c - 3 * u * b
          + 7 * u * c - 5 * u * a - 12 * u ** 2 * g - 34 * a * c ** 2
          + 48 * u * c ** 2 - 8 * u ** 2 + 34 * u * g * c
          - 4 * b ** 2 * c + 4 * u * b ** 2 + 16 * g * b + 32 * a * b
          + 33 * a * g - 18 * c ** 2 * b - 20 * c ** 2 * g
          - 14 * a ** 2 * c + 5 * u * g ** 2 - 11 * u ** 2 * b
          - 7 * u * g + 21 * b * c + 29 * g * c - 17 * a * c * g
          + 17 * u * a * g + 62 * c + 31 * g + 26 * b + 18 * u * a * b
          - 20 * c ** 3 + 26 * a ** 2 + 10 * g ** 2 + 6 * b ** 2
          - 5 * g ** 2 * c + 14 * u * a ** 2 + 7 * u ** 3)
    q0 = (30 + 7 * u - 52 * c ** 2 - 18 * g * c * b + 26 * u * b * c
          + 54 * a + 54 * u * a * c - 36 * a * c * b + 14 * u * g * b
          - 6 * u ** 2 * c + 24 * u ** 2 * c ** 2 - 4 * u ** 3 * g
          - 16 * u * c ** 3 - 10 * u ** 2 * a - 7 * u ** 3 * a
          + 2 * u ** 2 * g ** 2 - 26 * a * c - 12 * u ** 3 * c
          + 20 * u * b + 54 * u * c + 35 * u * a + 6 * u ** 2 * a ** 2
          - 7 * u ** 2 * g - 68 * a * c ** 2 + 36 * u * c ** 2
          - 14 * u ** 2 + 2 * u ** 4 + 34 * u * g * c - 8 * b ** 2 * c
          + 6 * u * b ** 2 + 12 * g * b + 24 * a * b + 26 * a * g
          - 36 * c ** 2 * b - 40 * c ** 2 * g - 28 * a ** 2 * c
          + 8 * u * g ** 2 - 4 * u ** 2 * b - 4 * u ** 3 * b
          + 17 * u * g - 18 * b * c - 10 * g * c - 34 * a * c * g
          + 27 * u * a * g + 4 * u ** 2 * g * b - 28 * u * a * c ** 2
          + 12 * c + 30 * g + 24 * b + 28 * u ** 2 * a * c
          - 16 * u * b * c ** 2 - 12 * u * a ** 2 * c
          + 7 * u ** 2 * a * g + 16 * u ** 2 * g * c
          + 16 * u ** 2 * b * c + 8 * u ** 2 * a * b
          - 16 * u * g * c ** 2 - 4 * u * b ** 2 * c
          - 4 * u * g ** 2 * c + 28 * u * a * b - 40 * c ** 3
          + 20 * a ** 2 + 8 * g ** 2 - 10 * g ** 2 * c + 4 * b ** 2
          + 22 * u * a ** 2 + 2 * u ** 2 * b ** 2 - 8 * u * g * c * b
          - 14 * u * g * a * c - 16 * u * a * c * b - u ** 3)
    P_nn = k * (T + e5) * (T + e6) * (T + e7)
    Q_nn = k * (T + e5 + 2) * (T + e6 + 1) * (T + e7 + 2)
    P_n = p3 * T ** 3 + p2 * T ** 2 + p1 * T + p0
    Q_n = q3 * T ** 3 + q2 * T ** 2 + q1 * T + q0
    P0 = (m * T1.shift(-1)
          + (w1 * (T - 2) + w0) * (T - e1) * (T - e2))
    Q0 = m * T1s + (w1 * T + w0) * (T - e1) * (T + 1 - e2)
    P1 = m * (T + 1 - e1) * (T + 1 - e2)
    Q1 = m * (T - e1) * (T + 1 - e2)
    P = _mixed({2: P_nn, 1: P_n}, P0, {1: P1})
    Q = _mixed({2: Q_nn, 1: Q_n}, Q0, {1: Q1})
    return ShiftPair("SE4", {"a": 1}, P, Q, source="a+1 table")


def _se4_u_minus():
    E = make("SE4").op
    p0 = E.coeff(0)
    R, rem = op_rdivmod(E - DiffOp([p0]), D)
    if not rem.is_zero():
        raise NotConstantRemainder("SE4 - p0 is not divisible by d")
    reverse = R.subs_params({"u": frac("u") - 1})
    return ShiftPair("SE4", {"u": -1}, reverse,
                     source="quotient of E - p0 by d")


_SE4_SHAPES = [AnsatzShape(x, d, t)
               for x, d, t in ((0, 2, 4), (1, 2, 4), (2, 2, 5),
                               (2, 3, 6), (3, 3, 7))]


def _se4_solved(shift, label):
    last = None
    for shape in _SE4_SHAPES:
        try:
            return solve_shift("SE4", shift, shape, mode="symbolic")
        except Exception as exc:  # try the next shape
            last = exc
    raise last


def _se4_table():
    out = {
        "a-": _se4_a_minus(),
        "a+": _se4_a_plus(),
        "u+": ShiftPair("SE4", {"u": 1}, D, D, source="differentiation"),
        "u-": _se4_u_minus(),
        "c+": _se4_solved({"c": 1}, "c+1"),
        "g+2": _se4_solved({"g": 2}, "g+2"),
    }
    out["c-"] = derive_reverse("SE4", out["c+"], source="reverse of c+")
    out["g-2"] = derive_reverse("SE4", out["g+2"], source="reverse of g+2")
    return out


def _se4_svalues():
    a, b, c, g, u = (frac(n) for n in "abcgu")
    return [
        SvalueCase("u", "u+", "u-",
                   (u + 1) * (1 + a + 2 * c + g + b - u) * (2 * c - u)
                   * (2 + 2 * b + 2 * a + g + 2 * c - u)),
        SvalueCase("a", "a+", "a-",
                   (a + 1) * (2 * a + g + 2) * (2 * a + 2 * c + g + 3)
                   * (a + b + c + g + 2)
                   * (-u + 3 + g + 2 * c + 2 * b + 2 * a)
                   * (a + b + 2 * c + g - u + 2)
                   * (4 + 2 * b + 2 * a + g + 2 * c - u)),
        SvalueCase("c", "c+", "c-",
                   (2 * c + g + 2) * (2 * b + 2 * c + g + 3)
                   * (2 * a + 2 * c + g + 3) * (a + b + c + g + 2)
                   * (2 * c + 2 - u) * (2 * c - u + 1)
                   * (4 + 2 * b + 2 * a + g + 2 * c - u)
                   * (3 + a + 2 * c + g + b - u)
                   * (a + b + 2 * c + g - u + 2)
                   * (-u + 3 + g + 2 * c + 2 * b + 2 * a)),
        SvalueCase("g", "g+2", "g-2",
                   -(g + 1) * (g + 2 * c + 2) * (2 * b + g + 2)
                   * (2 * b + 2 * c + g + 3) * (2 * a + g + 2)
                   * (2 * a + 2 * c + g + 3) * (g + 3 + c + b + a)
                   * (a + b + c + g + 2)
                   * (-u + 3 + g + 2 * c + 2 * b + 2 * a)
                   * (3 + a + 2 * c + g + b - u)
                   * (a + b + 2 * c + g - u + 2)
                   * (4 + 2 * b + 2 * a + g + 2 * c - u)),
    ]


# ---------------------------------------------------------------------------
# dispatch


_BUILDERS = {
    "E2": _e2_table,
    "E4": _e4_table,
    "E5": _e5_table,
    "E6": _e6_table,
    "SE6": _se6_table,
    "SE5": _se5_table,
    "SE4": _se4_table,
}

_SVALUES = {
    "E4": _e4_svalues,
    "E5": _e5_svalues,
    "E6": _e6_svalues,
    "SE6": _se6_svalues,
    "SE5": _se5_svalues,
    "SE4": _se4_svalues,
}


@lru_cache(maxsize=None)
def table(family: str):
    """Built-in shift pairs and routes of a family, keyed by shift label."""
    if family not in _BUILDERS:
        raise KeyError(f"no built-in shift table for {family!r}")
    return _BUILDERS[family]()


@lru_cache(maxsize=None)
def svalue_cases(family: str):
    """Round trips of a family whose constants have closed formulas."""
    if family not in _SVALUES:
        return ()
    return tuple(_SVALUES[family]())
