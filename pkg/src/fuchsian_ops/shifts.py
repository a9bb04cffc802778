"""Shift operators between neighboring members of the operator families.

A shift pair (P, Q) for a parameter step sigma of a family E satisfies the
intertwining relation  E(sigma a) o P = Q o E(a), so P maps solutions of
E(a) to solutions of E(sigma a).  This module provides:

* ShiftPair / ShiftRoute / MappedRoute - concrete shift data, composable
  and specializable at exact rational parameter points;
* verify_shift - symbolic or seeded-sample checks of the intertwining
  relation, with per-slot isolation of any residual;
* solve_shift - a nullspace solver for the intertwining relation over a
  finite mixed-form ansatz, with numeric support detection before the
  symbolic elimination;
* svalue / svalue_samples / svalue_matches - the constant remainder of a
  round trip  P_plus(sigma a) o P_minus(a)  modulo E(a), and its comparison
  against closed formulas up to a parameter-free rational;
* derive_reverse - the canonical polynomial inverse shift operator from
  the Bezout identity of E and P, content-normalized;
* builtin_shift_table - the per-family catalog of known pairs (data in
  the companion table module).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .catalog import _PARAM_NAMES, make
from .params import (
    DenominatorVanishes,
    ParamFrac,
    RatFuncX,
    _FIELD,
    _X_IDX,
    frac,
    specialize,
)
from .sampling import sample_stream
from .weyl import (
    D,
    DiffOp,
    MixedForm,
    ONE_OP,
    THETA,
    clear_param_content,
    clear_x_denominators,
    from_mixed,
    op_mul,
    op_rdivmod,
    to_mixed,
)

__all__ = [
    "ShiftPair",
    "ShiftRoute",
    "MappedRoute",
    "AnsatzShape",
    "VerifyResult",
    "SampledSolution",
    "ShapeMismatch",
    "NoSolution",
    "AmbiguousSolution",
    "NotConstantRemainder",
    "shifted_assignment",
    "verify_shift",
    "solve_shift",
    "svalue",
    "svalue_samples",
    "svalue_matches",
    "svalue_symmetry_check",
    "derive_reverse",
    "builtin_shift_table",
]


class ShapeMismatch(ValueError):
    """The ansatz shape cannot hold the requested operator."""


class NoSolution(ValueError):
    """The intertwining relation has no solution in the given shape."""


class AmbiguousSolution(ValueError):
    """The solution space has dimension greater than one."""


class NotConstantRemainder(ValueError):
    """A round-trip remainder failed to be an x-free constant."""


# ---------------------------------------------------------------------------
# parameter bookkeeping


def _coerce_shift(shift) -> dict:
    return {name: Fraction(step) for name, step in dict(shift).items() if step}


def shifted_assignment(family: str, shift, base=None):
    """Family parameters moved by the shift; symbolic when base is None."""
    shift = _coerce_shift(shift)
    names = _PARAM_NAMES[family]
    unknown = set(shift) - set(names)
    if unknown:
        raise ShapeMismatch(f"{family} has no parameters {sorted(unknown)}")
    if base is None:
        base = {name: frac(name) for name in names}
    out = {}
    for name in names:
        value = base[name]
        step = shift.get(name)
        out[name] = value + step if step else value
    return out


def _merge_shifts(first, second):
    out = dict(first)
    for name, step in second.items():
        out[name] = out.get(name, Fraction(0)) + step
    return {name: step for name, step in out.items() if step}


def _rat_assignment(assignment):
    out = {}
    for name, value in assignment.items():
        if isinstance(value, (ParamFrac,)):
            out[name] = value.as_rat()
        else:
            out[name] = Fraction(value)
    return out


# ---------------------------------------------------------------------------
# shift data


class ShiftPair:
    """One shift operator P (and optionally its companion Q) for a family.

    When Q is None the pair is 'implicit': verification checks that
    E(sigma a) o P is exactly right-divisible by E(a) instead of comparing
    against Q o E(a).  Construction runs a seeded sampled check of the
    relation unless check=False (used when the relation was just verified
    by the caller, e.g. by the symbolic solver).
    """

    __slots__ = ("family", "shift", "P", "Q", "source")

    def __init__(self, family, shift, P, Q=None, source="", check=True,
                 check_count=3, seed=11):
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "shift", _coerce_shift(shift))
        object.__setattr__(self, "P", P)
        object.__setattr__(self, "Q", Q)
        object.__setattr__(self, "source", source)
        shifted_assignment(family, self.shift)  # validates the names
        if check:
            result = verify_shift(self, mode=f"sampled:{check_count}", seed=seed)
            if not result.ok:
                raise ShapeMismatch(
                    f"shift pair {source or self.shift} for {family} fails the "
                    f"intertwining relation in slots {result.slots}")

    def __setattr__(self, *_):
        raise AttributeError("immutable value")

    def __repr__(self):
        return f"ShiftPair({self.family}, {self.shift}, source={self.source!r})"

    def P_at(self, assignment) -> DiffOp:
        return self.P.specialize(assignment)

    def P_family(self) -> DiffOp:
        return self.P


class ShiftRoute:
    """Composition of shift steps, applied left to right.

    Each step is specialized at the running parameter point, so the route
    only offers numeric specialization (P_at); its net shift is the sum of
    the member shifts.
    """

    __slots__ = ("family", "steps", "shift", "source")

    def __init__(self, family, steps, source=""):
        steps = tuple(steps)
        shift = {}
        for step in steps:
            if step.family != family:
                raise ShapeMismatch(
                    f"route over {family} cannot contain a {step.family} step")
            shift = _merge_shifts(shift, step.shift)
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "steps", steps)
        object.__setattr__(self, "shift", shift)
        object.__setattr__(self, "source", source)

    def __setattr__(self, *_):
        raise AttributeError("immutable value")

    def __repr__(self):
        inner = " -> ".join(s.source or str(s.shift) for s in self.steps)
        return f"ShiftRoute({self.family}, {self.shift}: {inner})"

    @property
    def Q(self):
        return None

    def P_at(self, assignment) -> DiffOp:
        running = _rat_assignment(assignment)
        total = None
        for step in self.steps:
            factor = step.P_at(running)
            total = factor if total is None else op_mul(factor, total)
            running = {k: v.as_rat() if isinstance(v, ParamFrac) else v
                       for k, v in shifted_assignment(
                           self.family, step.shift, running).items()}
        return total if total is not None else DiffOp([1])

    def P_family(self):
        return None


class MappedRoute:
    """A shift of a specialized family realized through its generic family.

    The inner pair or route lives over the generic family (its parameters
    are the exponents); param_values maps an assignment of the specialized
    family to exponent values.  Needed when intermediate points of a route
    leave the specialization subvariety.
    """

    __slots__ = ("family", "shift", "inner", "param_values", "source")

    def __init__(self, family, shift, inner, param_values, source=""):
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "shift", _coerce_shift(shift))
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "param_values", dict(param_values))
        object.__setattr__(self, "source", source)

    def __setattr__(self, *_):
        raise AttributeError("immutable value")

    def __repr__(self):
        return f"MappedRoute({self.family}, {self.shift}, inner={self.inner!r})"

    @property
    def Q(self):
        return None

    def P_at(self, assignment) -> DiffOp:
        inner_assignment = {
            name: specialize(value, assignment).as_rat()
            for name, value in self.param_values.items()}
        return self.inner.P_at(inner_assignment)

    def P_family(self):
        return None


# ---------------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    residual: DiffOp | None = None
    slots: tuple = ()
    assignment: dict | None = None

    def __bool__(self):
        return self.ok


def _parse_mode(mode):
    if mode == "symbolic":
        return None
    if isinstance(mode, str) and mode.startswith("sampled:"):
        return int(mode.split(":", 1)[1])
    raise ValueError(f"mode must be 'symbolic' or 'sampled:N', got {mode!r}")


def _residual_slots(residual: DiffOp):
    if residual.is_zero():
        return ()
    if not residual.is_polynomial():
        residual, _ = clear_x_denominators(residual, side="left")
    return tuple(key for key, _val in to_mixed(residual).slots())


def _relation_residual(E_sh, E, P, Q):
    lhs = op_mul(E_sh, P)
    if Q is not None:
        return lhs - op_mul(Q, E)
    _quo, rem = op_rdivmod(lhs, E)
    return rem


def verify_shift(pair, mode="sampled:5", seed=7, avoid=()) -> VerifyResult:
    """Check E(sigma a) o P = Q o E(a) (or exact divisibility when Q=None)."""
    count = _parse_mode(mode)
    family = pair.family
    names = _PARAM_NAMES[family]
    if count is None:
        P = pair.P_family()
        if P is None:
            raise ShapeMismatch("routes only support sampled verification")
        E = make(family).op
        E_sh = make(family, shifted_assignment(family, pair.shift)).op
        residual = _relation_residual(E_sh, E, P, pair.Q)
        return VerifyResult(residual.is_zero(), residual,
                            _residual_slots(residual))
    for assignment in sample_stream(names, seed, avoid=avoid, count=count):
        E = make(family, assignment).op
        E_sh = make(family, shifted_assignment(family, pair.shift, assignment)).op
        P = pair.P_at(assignment)
        Q = pair.Q.specialize(assignment) if pair.Q is not None else None
        residual = _relation_residual(E_sh, E, P, Q)
        if not residual.is_zero():
            return VerifyResult(False, residual, _residual_slots(residual),
                                assignment)
    return VerifyResult(True)


# ---------------------------------------------------------------------------
# Svalues


def _remainder_constant(rem: DiffOp):
    if rem.is_zero():
        return frac(0)
    if rem.order > 0:
        raise NotConstantRemainder(f"remainder has order {rem.order}")
    c = rem.coeff(0)
    if not c.x_free():
        raise NotConstantRemainder(f"remainder depends on x: {c}")
    return ParamFrac(c.raw)


def svalue(family, minus, plus, assignment=None) -> ParamFrac:
    """Constant of the round trip  plus(sigma a) o minus(a)  modulo E(a).

    With assignment=None both pairs must carry symbolic operator families;
    otherwise everything is specialized at the given parameter point.
    """
    total = _merge_shifts(minus.shift, plus.shift)
    if total:
        raise ShapeMismatch(f"shifts do not cancel: net {total}")
    if assignment is None:
        P_minus = minus.P_family()
        P_plus = plus.P_family()
        if P_minus is None or P_plus is None:
            raise ShapeMismatch("routes need an explicit assignment")
        E = make(family).op
        shifted = {name: frac(name) + step if step else frac(name)
                   for name, step in
                   ((n, minus.shift.get(n)) for n in _PARAM_NAMES[family])}
        plus_at = P_plus.subs_params(shifted)
        comp = op_mul(plus_at, P_minus)
    else:
        assignment = _rat_assignment(assignment)
        E = make(family, assignment).op
        shifted = _rat_assignment(
            shifted_assignment(family, minus.shift, assignment))
        comp = op_mul(plus.P_at(shifted), minus.P_at(assignment))
    _quo, rem = op_rdivmod(comp, E)
    return _remainder_constant(rem)


def svalue_samples(family, minus, plus, count=10, seed=23, avoid=()):
    """Seeded list of (assignment, Fraction svalue) pairs."""
    out = []
    for assignment in sample_stream(_PARAM_NAMES[family], seed, avoid=avoid,
                                    count=count):
        value = svalue(family, minus, plus, assignment)
        out.append((assignment, value.as_rat()))
    return out


def svalue_matches(family, minus, plus, formula, count=10, seed=23, avoid=()):
    """(ok, ratio): computed svalue vs formula up to one fixed rational.

    The formula is a ParamFrac in the family parameters.  ok means the ratio
    computed/formula is the same nonzero rational at every sample.
    """
    ratio = None
    for assignment, value in svalue_samples(family, minus, plus, count=count,
                                            seed=seed, avoid=avoid):
        expected = specialize(formula, assignment).as_rat()
        if expected == 0 or value == 0:
            if (expected == 0) != (value == 0):
                return False, None
            continue
        current = Fraction(value) / expected
        if ratio is None:
            ratio = current
        elif current != ratio:
            return False, None
    return ratio is not None, ratio


def svalue_symmetry_check(family, minus, plus, count=5, seed=29, avoid=()):
    """Sampled check of  Sv(a) = Sv'(sigma a)  for the two round-trip orders.

    Sv is the constant of plus(sigma a) o minus(a) mod E(a) and Sv' that of
    minus(a) o plus(sigma a) mod E(sigma a).
    """
    for assignment in sample_stream(_PARAM_NAMES[family], seed, avoid=avoid,
                                    count=count):
        forward = svalue(family, minus, plus, assignment).as_rat()
        shifted = _rat_assignment(
            shifted_assignment(family, minus.shift, assignment))
        backward = svalue(family, plus, minus, shifted).as_rat()
        if forward != backward:
            return False
    return True


# ---------------------------------------------------------------------------
# reverse pairs from the Bezout identity


def _joint_clear(rem: DiffOp, cof: DiffOp):
    """Rescale the pair (remainder, cofactor) by one common left factor so
    that both have polynomial coefficients with no collective content.

    Keeping the cofactor fraction-free at every Euclid step is what makes
    the scheme tractable; scaling both by the same factor preserves the
    invariant relating them modulo the family operator.
    """
    coeffs = [c.raw for c in rem.coeffs] + [c.raw for c in cof.coeffs]
    nonzero = [c for c in coeffs if c]
    ring_ = nonzero[0].numer.ring
    lcm = ring_.one
    for c in nonzero:
        lcm = lcm * c.denom // lcm.gcd(c.denom)
    content = None
    for c in nonzero:
        numer = c.numer * (lcm // c.denom)
        content = numer if content is None else content.gcd(numer)
        if content == ring_.one:
            break
    factor = RatFuncX(_FIELD(lcm) / _FIELD(content))
    return rem.scale(factor), cof.scale(factor)


def derive_reverse(family, pair, source="", check=True) -> ShiftPair:
    """Canonical polynomial shift pair for the opposite step of `pair`.

    The right Euclid scheme on (E, P) keeps the invariant
    x_i o E + y_i o P = r_i; once r_i has order 0, y_i is a rational
    inverse of P modulo E(a), mapping Sol(E(sigma a)) back to Sol(E(a)),
    and the polynomial member of its coset is a scalar multiple.  Each
    remainder is denominator- and content-cleared (with the cofactor
    rescaled by the same factor) to keep the divisions polynomial, which
    only changes y_i by a parameter factor that the final clearing absorbs.
    """
    P = pair.P_family()
    if P is None:
        raise ShapeMismatch("can only reverse an explicit pair")
    E = make(family).op
    r_prev, r = E, P
    y_prev, y = DiffOp([]), ONE_OP
    while r.order > 0:
        q, rem = op_rdivmod(r_prev, r)
        if rem.is_zero():
            raise NoSolution("operator and family member share a right factor")
        y_new = y_prev - op_mul(q, y)
        rem, y_new = _joint_clear(rem, y_new)
        r_prev, r = r, rem
        y_prev, y = y, y_new
    cleared, _factor = clear_x_denominators(y, side="left")
    canonical = clear_param_content(cleared)
    unshift = {name: frac(name) - step
               for name, step in pair.shift.items()}
    reverse = canonical.subs_params(unshift) if unshift else canonical
    return ShiftPair(family, {n: -s for n, s in pair.shift.items()}, reverse,
                     source=source or f"reverse of {pair.source or pair.shift}",
                     check=check)


# ---------------------------------------------------------------------------
# the nullspace solver


@dataclass(frozen=True)
class AnsatzShape:
    """Mixed-form ansatz bounds: x-power, d-power and theta-degree limits."""

    x_max: int
    d_max: int
    theta_deg: int

    def slots(self):
        for k in range(self.x_max, 0, -1):
            yield ("x", k)
        yield ("diag", 0)
        for j in range(1, self.d_max + 1):
            yield ("d", j)


@dataclass(frozen=True)
class SampledSolution:
    """Per-sample solutions of the intertwining relation."""

    family: str
    shift: dict
    solutions: tuple  # of (assignment, P, Q)


def _basis_ops(shape: AnsatzShape):
    ops = []
    for slot in shape.slots():
        kind, idx = slot
        for t in range(shape.theta_deg + 1):
            term = THETA ** t
            if kind == "x":
                M = MixedForm({idx: term}, 0, {})
            elif kind == "diag":
                M = MixedForm({}, term, {})
            else:
                M = MixedForm({}, 0, {idx: term})
            ops.append(((kind, idx, t), from_mixed(M)))
    return ops


def _x_rows(op: DiffOp):
    """Map (d-power, x-power) -> x-free field element, for a polynomial op."""
    rows = {}
    for m, c in enumerate(op.coeffs):
        raw = c.raw
        if not raw:
            continue
        den = _FIELD(raw.denom)
        for monom, coeff in raw.numer.terms():
            k = monom[_X_IDX]
            stripped = list(monom)
            stripped[_X_IDX] = 0
            part = _FIELD(raw.numer.ring.from_dict({tuple(stripped): coeff})) / den
            key = (m, k)
            rows[key] = rows.get(key, _FIELD.zero) + part
    return {key: val for key, val in rows.items() if val}


def _nullspace(columns):
    """Basis of the right nullspace; columns are dicts eq-key -> field elt."""
    keys = sorted(set(itertools.chain.from_iterable(columns)))
    nrows, ncols = len(keys), len(columns)
    index = {key: i for i, key in enumerate(keys)}
    zero = _FIELD.zero
    matrix = [[zero] * ncols for _ in range(nrows)]
    for j, col in enumerate(columns):
        for key, val in col.items():
            matrix[index[key]][j] = val
    pivots = []
    row_at = 0
    for j in range(ncols):
        pivot = None
        best = None
        for i in range(row_at, nrows):
            entry = matrix[i][j]
            if entry:
                size = len(entry.numer.terms()) + len(entry.denom.terms())
                if best is None or size < best:
                    pivot, best = i, size
        if pivot is None:
            continue
        matrix[row_at], matrix[pivot] = matrix[pivot], matrix[row_at]
        inv = 1 / matrix[row_at][j]
        matrix[row_at] = [e * inv if e else e for e in matrix[row_at]]
        for i in range(nrows):
            if i != row_at and matrix[i][j]:
                factor = matrix[i][j]
                matrix[i] = [a - factor * b
                             for a, b in zip(matrix[i], matrix[row_at])]
        pivots.append(j)
        row_at += 1
        if row_at == nrows:
            break
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        vec = [_FIELD.zero] * ncols
        vec[f] = _FIELD.one
        for i, j in enumerate(pivots):
            vec[j] = -matrix[i][f]
        basis.append(vec)
    return basis


def _assemble_columns(E_sh, E, basis, support=None):
    columns = []
    labels = []
    for side, base_op in (("P", E_sh), ("Q", E)):
        for label, B in basis:
            key = (side,) + label
            if support is not None and key not in support:
                continue
            prod = op_mul(E_sh, B) if side == "P" else -op_mul(B, E)
            columns.append(_x_rows(prod))
            labels.append(key)
    return columns, labels


def _vector_to_ops(labels, vector):
    parts = {"P": {}, "Q": {}}
    for (side, kind, idx, t), value in zip(labels, vector):
        if not value:
            continue
        slot = parts[side].setdefault((kind, idx), {})
        slot[t] = slot.get(t, _FIELD.zero) + value
    out = {}
    for side in ("P", "Q"):
        xpart, diag, dpart = {}, THETA * 0, {}
        for (kind, idx), coeffs in parts[side].items():
            theta = THETA * 0
            for t, v in coeffs.items():
                theta = theta + THETA ** t * ParamFrac(v)
            if kind == "x":
                xpart[idx] = theta
            elif kind == "diag":
                diag = diag + theta
            else:
                dpart[idx] = theta
        out[side] = from_mixed(MixedForm(xpart, diag, dpart))
    return out["P"], out["Q"]


def _joint_normalize(P: DiffOp, Q: DiffOp):
    """Scale (P, Q) together to the canonical content-free representative."""
    combo = DiffOp._from_raw(list(P._c) + list(Q._c))
    if combo.is_zero():
        return P, Q
    cleared = clear_param_content(combo)
    ratio = None
    for a, b in zip(combo._c, cleared._c):
        if a:
            ratio = b / a
            break
    return P.scale(ratio), Q.scale(ratio)


def solve_shift(family, shift, shape: AnsatzShape, mode="sampled:3", seed=5,
                avoid=()):
    """Solve  E(sigma a) o P = Q o E(a)  over the mixed-form ansatz.

    Sampled mode returns a SampledSolution with the pivot-normalized (P, Q)
    at each sample; symbolic mode first detects the support of the solution
    numerically, then eliminates symbolically on that support, verifies the
    relation exactly, and returns a content-normalized ShiftPair.
    """
    count = _parse_mode(mode)
    names = _PARAM_NAMES[family]
    basis = _basis_ops(shape)
    n_basis = len(basis)
    if 2 * n_basis > 240:
        raise ShapeMismatch(f"ansatz too large ({2 * n_basis} unknowns)")
    E_sym = make(family).op
    E_sh_sym = make(family, shifted_assignment(family, shift)).op

    def solve_at(assignment):
        E = E_sym.specialize(assignment)
        E_sh = E_sh_sym.specialize(assignment)
        columns, labels = _assemble_columns(E_sh, E, basis)
        vectors = _nullspace(columns)
        return labels, vectors

    detect = count if count is not None else 3
    solutions = []
    supports = set()
    for assignment in sample_stream(names, seed, avoid=avoid, count=detect):
        labels, vectors = solve_at(assignment)
        if not vectors:
            raise NoSolution(f"no {family} shift {shift} in shape {shape}")
        if len(vectors) > 1:
            raise AmbiguousSolution(
                f"{len(vectors)}-dimensional solution space for {family} "
                f"shift {shift} in shape {shape}")
        vector = vectors[0]
        supports.update(lab for lab, v in zip(labels, vector) if v)
        P, Q = _vector_to_ops(labels, vector)
        solutions.append((assignment, P, Q))
    if count is not None:
        return SampledSolution(family, _coerce_shift(shift), tuple(solutions))

    columns, labels = _assemble_columns(E_sh_sym, E_sym, basis,
                                        support=supports)
    vectors = _nullspace(columns)
    if not vectors:
        raise NoSolution(f"symbolic elimination lost the {family} shift {shift}")
    if len(vectors) > 1:
        raise AmbiguousSolution("symbolic solution space is not 1-dimensional")
    P, Q = _vector_to_ops(labels, vectors[0])
    P, Q = _joint_normalize(P, Q)
    residual = op_mul(E_sh_sym, P) - op_mul(Q, E_sym)
    if not residual.is_zero():
        raise NoSolution("symbolic candidate fails the intertwining relation")
    return ShiftPair(family, shift, P, Q, source=f"solved in shape {shape}",
                     check=False)


# ---------------------------------------------------------------------------
# builtin tables


def builtin_shift_table(family: str):
    """Known shift pairs and routes of a family, keyed by shift label."""
    from . import shift_tables
    return shift_tables.table(family)
