"""Integrality loci, divisibility witnesses, and factor-type checks.

Each catalog family carries a list of linear parameter expressions (loci);
when one of them takes an integer value the operator becomes reducible with
a known factorization type.  This module stores those lists, searches for
explicit factorization witnesses by exact division — first-order factors
read off the local exponents, order-two hypergeometric factors read off the
exponents at 0 and infinity, both from the right and (via the adjoint) from
the left — and classifies a factorization into its type multiset.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import sympy

from .catalog import (
    IndicialDoesNotSplit,
    NonFuchsian,
    RiemannScheme,
    make,
    param_map,
    riemann_scheme,
)
from .params import ParamFrac, RatFuncX, Rat, frac, ratx, specialize
from .sampling import sample_assignment
from .weyl import D, DiffOp, adjoint, op_mul, op_rdivmod

__all__ = [
    "Locus",
    "FactorWitness",
    "locus_table",
    "on_locus_assignment",
    "first_order_witnesses",
    "gauss_witnesses",
    "all_witnesses",
    "factor_type_witness",
    "apparent_flag",
    "NotDivisible",
]

_XR = ratx("x").raw
_SP_X = sympy.Symbol("x")


class NotDivisible(ValueError):
    """The requested exact factorization does not exist."""


@dataclass(frozen=True)
class Locus:
    """A linear parameter expression whose integrality forces reducibility."""

    family: str
    name: str
    expression: ParamFrac
    factor_type: tuple  # unordered multiset of factor orders, sorted
    witness_at: Rat  # a value of the expression where a witness exists
    description: str = ""


@dataclass(frozen=True)
class FactorWitness:
    """An exact two-factor decomposition  target = left o right."""

    left: DiffOp
    right: DiffOp
    mechanism: str  # "first-right", "first-left", "gauss-right", "gauss-left"
    gauss_params: tuple | None = None  # (A, B, C) when a hypergeometric factor
    left_sub: "FactorWitness | None" = None
    right_sub: "FactorWitness | None" = None

    @property
    def orders(self):
        return (self.left.order, self.right.order)

    def recompose(self) -> DiffOp:
        return op_mul(self.left, self.right)

    def leaf_factors(self):
        """The fully refined factor operators, outermost-left first."""
        out = []
        for op, sub in ((self.left, self.left_sub), (self.right, self.right_sub)):
            out.extend(sub.leaf_factors() if sub is not None else [op])
        return out

    def factor_orders(self):
        """Fully refined order multiset."""
        return tuple(sorted(op.order for op in self.leaf_factors()))

    def quotient_scheme(self):
        try:
            return riemann_scheme(self.left)
        except (NonFuchsian, IndicialDoesNotSplit, ValueError):
            return None


# ---------------------------------------------------------------------------
# locus tables


def _f(expr) -> ParamFrac:
    return expr if isinstance(expr, ParamFrac) else frac(expr)


def _half(expr) -> ParamFrac:
    return _f(expr) / 2


def _letters(names):
    return {n: frac(n) for n in names}


def _e6_loci():
    e = {i: frac(f"e{i}") for i in range(1, 10)}
    s = -(sum(e.values(), frac(0)) - 6) / 3
    out = [Locus("E6", "s", s, (1, 1, 1, 3), 0)]
    for i in range(1, 7):
        out.append(Locus("E6", f"e{i}+s", e[i] + s, (1, 5), 0))
    for j in (7, 8, 9):
        out.append(Locus("E6", f"e{j}", e[j], (1, 5), 0))
    return tuple(out)


def _e5_loci():
    e = {i: frac(f"e{i}") for i in range(1, 9)}
    r = (sum(e.values(), frac(0)) - 6) / 3
    out = [Locus("E5", "r", r, (1, 1, 3), 0)]
    for i in range(1, 7):
        out.append(Locus("E5", f"e{i}-r", e[i] - r, (1, 4), 0))
    return tuple(out)


def _e4_loci():
    e = {i: frac(f"e{i}") for i in range(1, 8)}
    e8 = frac(4) - sum(e.values(), frac(0))
    out = [Locus("E4", f"e{j}", e[j], (1, 3), 0) for j in (5, 6, 7)]
    out.append(Locus("E4", "e8", e8, (1, 3), 0))
    return tuple(out)


def _se6_loci():
    L = _letters("abcgpqr")
    a, b, c, g, p, q, r = (L[n] for n in "abcgpqr")
    e = param_map("SE6")
    out = [
        Locus("SE6", "A1", -a, (2, 4), 0, "a = 0"),
        Locus("SE6", "A1'", -b, (2, 4), 0, "b = 0"),
        Locus("SE6", "A2", -c, (2, 4), 0, "c = 0"),
        Locus("SE6", "A3", (1 - g) / 2, (2, 4), 0, "g = 1"),
        Locus("SE6", "A4", (2 * a + g + 2) / 2, (2, 4), 0, "g = -2a-2"),
        Locus("SE6", "A4'", (2 * b + g + 2) / 2, (2, 4), 0, "g = -2b-2"),
        Locus("SE6", "A5", (2 * c + g + 2) / 2, (2, 4), 0, "g = -2c-2"),
        Locus("SE6", "A6", a + b + c + g + 2, (2, 4), 0, "g = -a-b-c-2"),
        Locus("SE6", "A7", -(2 * a + 2 * b + 2 * c + g + 2) / 2, (2, 4), 0,
              "g = -2a-2b-2c-2"),
        Locus("SE6", "r", r, (1, 1, 1, 3), 0),
    ]
    for i in range(1, 7):
        out.append(Locus("SE6", f"e{i}-r", e[f"e{i}"] - r, (1, 5), 0))
    for j in (7, 8, 9):
        out.append(Locus("SE6", f"e{j}", e[f"e{j}"], (1, 5), 0))
    return tuple(out)


def _se5_loci():
    L = _letters("abcgpq")
    a, b, c, g, p, q = (L[n] for n in "abcgpq")
    r = param_map("SE5")["r"]
    e = param_map("SE5")
    out = [
        Locus("SE5", "a", a, (1, 4), 0),
        Locus("SE5", "b", b, (1, 4), 0),
        Locus("SE5", "c", c, (2, 3), 0, "C1: divisible by E2"),
        Locus("SE5", "(g+1)/2", (g + 1) / 2, (2, 3), 1, "C5: g = 1"),
        Locus("SE5", "(2a+g)/2", (2 * a + g) / 2, (2, 3), -1, "C3: g = -2a-2"),
        Locus("SE5", "(2b+g)/2", (2 * b + g) / 2, (2, 3), -1, "C2: g = -2b-2"),
        Locus("SE5", "(2c+g)/2", (2 * c + g) / 2, (1, 4), -1),
        Locus("SE5", "a+b+c+g", a + b + c + g, (2, 3), -2,
              "C4: g = -a-b-c-2"),
        Locus("SE5", "(2a+2b+2c+g)/2", (2 * a + 2 * b + 2 * c + g) / 2,
              (1, 4), -1),
        Locus("SE5", "(2a+2b+g+1)/2", (2 * a + 2 * b + g + 1) / 2, (1, 4), -1,
              "g = -2a-2b-3"),
        Locus("SE5", "r", r, (1, 1, 3), -1),
    ]
    for i in range(1, 7):
        out.append(Locus("SE5", f"e{i}-r", e[f"e{i}"] - r, (1, 4), 0))
    return tuple(out)


def _se4_loci():
    L = _letters("abcgu")
    a, b, c, g, u = (L[n] for n in "abcgu")
    e = param_map("SE4")
    out = [
        Locus("SE4", "a", a, (1, 3), 0),
        Locus("SE4", "b", b, (1, 3), 0),
        Locus("SE4", "(g+1)/2", (g + 1) / 2, (2, 2), 0, "g = -1"),
        Locus("SE4", "(2a+g)/2", (2 * a + g) / 2, (1, 3), -1),
        Locus("SE4", "(2b+g)/2", (2 * b + g) / 2, (1, 3), -1),
        Locus("SE4", "(2c+g)/2", (2 * c + g) / 2, (2, 2), -1),
        Locus("SE4", "a+b+c+g", a + b + c + g, (2, 2), -1),
        Locus("SE4", "(2a+2c+g+1)/2", (2 * a + 2 * c + g + 1) / 2, (1, 3), -1),
        Locus("SE4", "(2b+2c+g+1)/2", (2 * b + 2 * c + g + 1) / 2, (1, 3), -1),
    ]
    for j in (5, 6, 7, 8):
        out.append(Locus("SE4", f"e{j}", e[f"e{j}"], (1, 3), 0))
    return tuple(out)


def _se3_loci():
    L = _letters("abcg")
    a, b, c, g = (L[n] for n in "abcg")
    specs = [
        ("a", a), ("b", b), ("c", c), ("(g+1)/2", (g + 1) / 2),
        ("(2a+g)/2", (2 * a + g) / 2), ("(2b+g)/2", (2 * b + g) / 2),
        ("(2c+g)/2", (2 * c + g) / 2), ("a+b+c+g", a + b + c + g),
        ("(2a+2b+2c+g)/2", (2 * a + 2 * b + 2 * c + g) / 2),
    ]
    return tuple(Locus("SE3", n, x, (1, 2), 0) for n, x in specs)


_LOCI = {
    "E6": _e6_loci, "E5": _e5_loci, "E4": _e4_loci,
    "SE6": _se6_loci, "SE5": _se5_loci, "SE4": _se4_loci, "SE3": _se3_loci,
}


def locus_table(family: str):
    """All recorded integrality loci of a family, with factor types."""
    if family not in _LOCI:
        raise KeyError(f"no locus table for {family!r}")
    return _LOCI[family]()


def on_locus_assignment(locus: Locus, rng: random.Random, value=None,
                        param_names=None):
    """Random rational parameters with locus.expression == value (exact).

    Every parameter is sampled first; then one parameter occurring linearly
    in the expression is adjusted so the expression takes the requested
    value (default: the locus's recorded witness value).
    """
    from .catalog import _PARAM_NAMES

    names = param_names or _PARAM_NAMES[locus.family]
    target = Rat(locus.witness_at if value is None else value)
    for _ in range(200):
        asg = sample_assignment(names, rng)
        for name in names:
            bumped = dict(asg)
            bumped[name] = asg[name] + 1
            try:
                base = specialize(locus.expression, asg).as_rat()
                slope = specialize(locus.expression, bumped).as_rat() - base
            except ValueError:
                continue
            if slope == 0:
                continue
            asg[name] = asg[name] + Rat(target - base, slope)
            return asg
    raise RuntimeError(f"could not hit locus {locus.name}")


# ---------------------------------------------------------------------------
# witness search


def _scheme_of(op: DiffOp):
    try:
        return riemann_scheme(op)
    except (NonFuchsian, IndicialDoesNotSplit, ValueError):
        return None


def _first_order_candidates(scheme: RiemannScheme):
    """Operators d + u/x + v/(x-1) whose solution exponents match the scheme.

    The solution x^alpha (x-1)^beta must realize exponents of the target at
    all three singular points, so alpha + beta has to be the negative of an
    infinity exponent; candidates failing that cannot divide.
    """
    at_inf = [_f(x) for x in scheme.at_inf]
    out = []
    for alpha in scheme.at0:
        for beta in scheme.at1:
            total = -(_f(alpha) + _f(beta))
            if not any(total == x for x in at_inf):
                continue
            u, v = -_f(alpha), -_f(beta)
            coeff = RatFuncX(u.raw / _XR + v.raw / (_XR - 1))
            out.append((DiffOp([coeff, 1]), (alpha, beta)))
    return out


def _gauss_candidates(scheme: RiemannScheme):
    """Hypergeometric factors E2(A,B,C) consistent with the scheme.

    E2(A,B,C) has exponents (0, 1-C), (0, C-A-B), (A, B); a right factor's
    exponents must all occur among the target's, which prunes most triples
    before any division is attempted.
    """
    at1 = [_f(x) for x in scheme.at1]
    out = []
    for A, B in itertools.combinations(scheme.at_inf, 2):
        for alpha in scheme.at0:
            C = 1 - _f(alpha)
            gap = C - _f(A) - _f(B)
            if not any(gap == x for x in at1):
                continue
            op = make("E2", {"A": _f(A), "B": _f(B), "C": C}).op
            out.append((op, (_f(A), _f(B), C)))
    return out


def _iter_right(target: DiffOp, candidates, mechanism, gauss):
    for op, tag in candidates:
        try:
            quo, rem = op_rdivmod(target, op)
        except ZeroDivisionError:
            continue
        if rem.is_zero():
            yield FactorWitness(quo, op, mechanism,
                                gauss_params=tag if gauss else None)


def _iter_left(target: DiffOp, mechanism, gauss):
    """Left factors via the adjoint:  T = F o Q  iff  T* = Q* o F*."""
    adj = adjoint(target)
    scheme = _scheme_of(adj)
    if scheme is None:
        return
    cands = _gauss_candidates(scheme) if gauss else _first_order_candidates(scheme)
    for op, tag in cands:
        try:
            quo, rem = op_rdivmod(adj, op)
        except ZeroDivisionError:
            continue
        if rem.is_zero():
            yield FactorWitness(adjoint(op), adjoint(quo), mechanism,
                                gauss_params=tag if gauss else None)


def iter_witnesses(target: DiffOp, mechanisms=("first", "gauss"), side="both"):
    """Lazily yield exact two-factor splits, cheapest mechanisms first."""
    seen = set()

    def emit(stream):
        for w in stream:
            key = (str(w.left), str(w.right))
            if key not in seen:
                seen.add(key)
                yield w

    scheme = _scheme_of(target)
    if "first" in mechanisms:
        if side in ("right", "both"):
            if scheme is not None:
                yield from emit(_iter_right(
                    target, _first_order_candidates(scheme),
                    "first-right", gauss=False))
            yield from emit(_iter_right(target, [(D, (0, 0))],
                                        "first-right", gauss=False))
        if side in ("left", "both"):
            yield from emit(_iter_left(target, "first-left", gauss=False))
    if "gauss" in mechanisms:
        if side in ("right", "both") and scheme is not None:
            yield from emit(_iter_right(target, _gauss_candidates(scheme),
                                        "gauss-right", gauss=True))
        if side in ("left", "both"):
            yield from emit(_iter_left(target, "gauss-left", gauss=True))


def first_order_witnesses(target: DiffOp, side="both"):
    """Exact splits with a first-order factor on the requested side."""
    return list(iter_witnesses(target, mechanisms=("first",), side=side))


def gauss_witnesses(target: DiffOp, side="both"):
    """Exact splits with a hypergeometric factor on the requested side."""
    return list(iter_witnesses(target, mechanisms=("gauss",), side=side))


def all_witnesses(target: DiffOp):
    return list(iter_witnesses(target))


def factor_type_witness(target: DiffOp, expected):
    """A witness (with nested sub-witnesses) realizing the expected multiset.

    ``expected`` is an iterable of factor orders, order-insensitive.  The
    search peels one first-order or hypergeometric factor at a time and
    recurses into the larger cofactor.
    """
    want = tuple(sorted(expected))
    if sum(want) != target.order:
        raise NotDivisible(
            f"type {want} does not sum to the operator order {target.order}")
    if len(want) == 1:
        return FactorWitness(target, DiffOp([1]), "trivial")
    # only the mechanisms that can peel off a wanted factor order are tried
    mechanisms = []
    if 1 in want or target.order - 1 in want:
        mechanisms.append("first")
    if 2 in want or target.order - 2 in want:
        mechanisms.append("gauss")
    for w in iter_witnesses(target, mechanisms=tuple(mechanisms)):
        for kept, cofactor in ((w.left, w.right), (w.right, w.left)):
            if kept.order not in want:
                continue
            rest = list(want)
            rest.remove(kept.order)
            if sum(rest) != cofactor.order:
                continue
            if len(rest) == 1:
                return w
            try:
                sub = factor_type_witness(cofactor, rest)
            except NotDivisible:
                continue
            if cofactor is w.left:
                return FactorWitness(w.left, w.right, w.mechanism,
                                     w.gauss_params, left_sub=sub)
            return FactorWitness(w.left, w.right, w.mechanism,
                                 w.gauss_params, right_sub=sub)
    raise NotDivisible(f"no factorization of type {want} found")


# ---------------------------------------------------------------------------
# the A0 flag


def _x_poly_only_01(expr) -> bool:
    """True iff an x-polynomial (sympy expr) vanishes only at x in {0,1}."""
    p = sympy.Poly(sympy.together(expr), _SP_X)
    for root in (0, 1):
        while p.degree() > 0 and p.eval(root) == 0:
            p = p.quo(sympy.Poly(_SP_X - root, _SP_X))
    return p.degree() <= 0


def _op_singularities_in_01(op: DiffOp) -> bool:
    from .catalog import _raw_poly_to_expr

    lead = op.coeff(op.order)
    lead_num = _raw_poly_to_expr(lead.raw.numer)
    if not _x_poly_only_01(lead_num):
        return False
    for j in range(op.order):
        c = op.coeff(j)
        if not c:
            continue
        den = _raw_poly_to_expr((c / lead).raw.denom)
        if not _x_poly_only_01(den):
            return False
    return True


def apparent_flag(witness: FactorWitness) -> bool:
    """True iff every factor is singular only at x in {0, 1, infinity}."""
    return all(_op_singularities_in_01(op) for op in witness.leaf_factors()
               if op.order > 0)
