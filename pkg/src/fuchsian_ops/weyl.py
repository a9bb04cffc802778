"""Noncommutative differential-operator kernel.

Operators live in D = Q(params)(x)[d/dx].  A :class:`DiffOp` stores the
coefficient list of powers of d/dx; products use the Leibniz rule and both
one-sided Euclidean divisions are available, together with the extended
Euclidean algorithm (GCRD with Bezout cofactors).

The mixed (x, theta, d)-form writes a polynomial-coefficient operator
uniquely as

    sum_{k>=1} x^k A_k(theta)  +  A_0(theta)  +  sum_{j>=1} B_j(theta) d^j

with theta = x d/dx.  Conversions both ways are exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .params import (
    DenominatorVanishes,
    ParamFrac,
    RatFuncX,
    _FIELD,
    _FGEN,
    _FX,
    _INDEX,
    _normalize_assignment,
    _poly_is_theta_free,
    _poly_is_x_free,
    _raw_frac,
    _subs_raw_poly,
    _THETA_IDX,
    _X_IDX,
    frac_text,
)

__all__ = [
    "DiffOp",
    "ThetaPoly",
    "MixedForm",
    "DivisionByZeroOperator",
    "NonPolynomialCoefficients",
    "D",
    "X",
    "THETA",
    "op_mul",
    "op_rdivmod",
    "op_ldivmod",
    "to_mixed",
    "from_mixed",
    "theta_shift",
    "adjoint",
    "ext_euclid",
    "subs_x",
]


class DivisionByZeroOperator(ZeroDivisionError):
    """Euclidean division by the zero operator."""


class NonPolynomialCoefficients(ValueError):
    """Mixed-form conversion requires polynomial coefficients in x."""


_FTHETA = _FGEN["theta"]
_ZERO = _FIELD.zero
_ONE = _FIELD.one


def _coerce_coeff(value):
    """Coerce to a raw field element free of theta (an x-coefficient)."""
    raw = _raw_frac(value)
    if not (_poly_is_theta_free(raw.numer) and _poly_is_theta_free(raw.denom)):
        raise ValueError("operator coefficients must not involve theta")
    return raw


def _coerce_theta(value):
    """Coerce to a raw field element free of x with theta-free denominator."""
    raw = value.raw if isinstance(value, ThetaPoly) else _raw_frac(value)
    if not (_poly_is_x_free(raw.numer) and _poly_is_x_free(raw.denom)):
        raise ValueError("theta-polynomials must not involve x")
    if not _poly_is_theta_free(raw.denom):
        raise ValueError("theta-polynomial denominators must be theta-free")
    return raw


# ---------------------------------------------------------------------------
# ThetaPoly


class ThetaPoly:
    """Polynomial in theta with parameter-fraction coefficients."""

    __slots__ = ("raw",)

    def __init__(self, value=0):
        object.__setattr__(self, "raw", _coerce_theta(value))

    def __setattr__(self, *_):
        raise AttributeError("immutable value")

    def __bool__(self):
        return bool(self.raw)

    def __eq__(self, other):
        other = other.raw if isinstance(other, ThetaPoly) else _coerce_theta(other)
        return self.raw == other

    def __hash__(self):
        return hash(self.raw)

    def __str__(self):
        return frac_text(self.raw)

    def __repr__(self):
        return f"ThetaPoly({self})"

    def __add__(self, other):
        return ThetaPoly(self.raw + _coerce_theta(other))

    __radd__ = __add__

    def __sub__(self, other):
        return ThetaPoly(self.raw - _coerce_theta(other))

    def __rsub__(self, other):
        return ThetaPoly(_coerce_theta(other) - self.raw)

    def __mul__(self, other):
        return ThetaPoly(self.raw * _coerce_theta(other))

    __rmul__ = __mul__

    def __neg__(self):
        return ThetaPoly(-self.raw)

    def __pow__(self, k: int):
        return ThetaPoly(self.raw ** k)

    def degree(self) -> int:
        return max((m[_THETA_IDX] for m in self.raw.numer.monoms()), default=0)

    def coeff_dict(self):
        """Map theta-power -> raw ParamFrac element."""
        den = _FIELD(self.raw.denom)
        out = {}
        for monom, coeff in self.raw.numer.terms():
            exp = monom[_THETA_IDX]
            stripped = list(monom)
            stripped[_THETA_IDX] = 0
            term = self.raw.numer.ring.from_dict({tuple(stripped): coeff})
            out[exp] = out.get(exp, _ZERO) + _FIELD(term)
        return {exp: val / den for exp, val in out.items() if val}

    def coeffs(self):
        """ParamFrac coefficients, ascending theta-powers."""
        data = self.coeff_dict()
        top = max(data, default=0)
        return [ParamFrac(data.get(i, _ZERO)) for i in range(top + 1)]

    def shift(self, k) -> "ThetaPoly":
        """Substitute theta -> theta + k."""
        target = _FTHETA + _raw_frac(k)
        acc = _ZERO
        for exp, val in self.coeff_dict().items():
            acc += val * target ** exp
        return ThetaPoly(acc)

    def eval_at(self, value) -> ParamFrac:
        """Evaluate at an x-free value."""
        point = _coerce_theta(value)
        acc = _ZERO
        for exp, val in self.coeff_dict().items():
            acc += val * point ** exp
        return ParamFrac(acc)


THETA = ThetaPoly(_FTHETA)


# ---------------------------------------------------------------------------
# DiffOp


class DiffOp:
    """Differential operator sum_j c_j(x) d^j with rational-function c_j."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        raws = [_coerce_coeff(c) for c in coeffs]
        while raws and not raws[-1]:
            raws.pop()
        object.__setattr__(self, "_c", tuple(raws))

    def __setattr__(self, *_):
        raise AttributeError("immutable value")

    @classmethod
    def _from_raw(cls, raws):
        op = cls.__new__(cls)
        raws = list(raws)
        while raws and not raws[-1]:
            raws.pop()
        object.__setattr__(op, "_c", tuple(raws))
        return op

    @property
    def coeffs(self):
        return tuple(RatFuncX(c) for c in self._c)

    def coeff(self, j: int) -> RatFuncX:
        return RatFuncX(self._c[j] if j < len(self._c) else _ZERO)

    @property
    def order(self) -> int:
        """Order of the operator; -1 for the zero operator."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        return isinstance(other, DiffOp) and self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for j in range(len(self._c) - 1, -1, -1):
            if not self._c[j]:
                continue
            dpart = "" if j == 0 else ("d" if j == 1 else f"d^{j}")
            body = frac_text(self._c[j])
            parts.append(f"({body})*{dpart}" if dpart else f"({body})")
        return " + ".join(parts)

    def __repr__(self):
        return f"DiffOp<{self}>"

    def __add__(self, other):
        if not isinstance(other, DiffOp):
            other = DiffOp([_coerce_coeff(other)])
        n = max(len(self._c), len(other._c))
        return DiffOp._from_raw(
            [(self._c[j] if j < len(self._c) else _ZERO)
             + (other._c[j] if j < len(other._c) else _ZERO) for j in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return DiffOp._from_raw([-c for c in self._c])

    def __sub__(self, other):
        return self + (-other if isinstance(other, DiffOp) else DiffOp([_coerce_coeff(other)]).__neg__())

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, DiffOp):
            return op_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        # scalar-function * operator (left multiplication by a function of x)
        return self.scale(other)

    def scale(self, value) -> "DiffOp":
        """Left-multiply by a function of x (scales every coefficient)."""
        raw = _coerce_coeff(value)
        return DiffOp._from_raw([c * raw for c in self._c])

    def leading(self) -> RatFuncX:
        if not self._c:
            raise ValueError("zero operator has no leading coefficient")
        return RatFuncX(self._c[-1])

    def specialize(self, assignment) -> "DiffOp":
        """Substitute exact rationals (or symbols) for named parameters."""
        idx = _normalize_assignment(assignment)
        out = []
        for raw in self._c:
            num = _subs_raw_poly(raw.numer, idx)
            den = _subs_raw_poly(raw.denom, idx)
            if not den:
                raise DenominatorVanishes("coefficient denominator vanished")
            out.append(_FIELD(num) / _FIELD(den))
        return DiffOp._from_raw(out)

    def subs_params(self, mapping) -> "DiffOp":
        """Substitute arbitrary x-free expressions for named parameters."""
        out = []
        for raw in self._c:
            out.append(_subs_raw_frac(raw, mapping))
        return DiffOp._from_raw(out)

    def is_polynomial(self) -> bool:
        return all(_poly_is_x_free(c.denom) for c in self._c)


def _subs_raw_frac(raw, mapping):
    """Substitute x-free raw field values for named generators in a fraction."""
    values = {_INDEX[name]: _raw_frac(val) for name, val in mapping.items()}

    def sub_poly(p):
        acc = _ZERO
        for monom, coeff in p.terms():
            term = _FIELD.ground_new(coeff)
            for i, exp in enumerate(monom):
                if not exp:
                    continue
                base = values.get(i, _FIELD(p.ring.gens[i]))
                term *= base ** exp
            acc += term
        return acc

    num = sub_poly(raw.numer)
    den = sub_poly(raw.denom)
    if not den:
        raise DenominatorVanishes("substitution killed a denominator")
    return num / den


D = DiffOp([0, 1])
X = DiffOp([_FX])
ONE_OP = DiffOp([1])


def const_op(value) -> DiffOp:
    """The multiplication operator by a function of x."""
    return DiffOp([_coerce_coeff(value)])


def mono_op(coeff, j: int) -> DiffOp:
    """The single-term operator coeff(x) * d^j."""
    raw = _coerce_coeff(coeff)
    return DiffOp._from_raw([_ZERO] * j + [raw])


def _d_compose(coeffs):
    """Raw coefficients of d applied on the left:  d o A."""
    n = len(coeffs)
    out = [_ZERO] * (n + 1)
    for j, c in enumerate(coeffs):
        out[j + 1] += c
        out[j] += c.diff(_FX)
    return out


def op_mul(A: DiffOp, B: DiffOp) -> DiffOp:
    """Exact composition A o B via the Leibniz rule."""
    if A.is_zero() or B.is_zero():
        return DiffOp()
    result = [_ZERO] * (A.order + B.order + 1)
    current = list(B._c)  # raw coefficients of d^i o B
    for i, a in enumerate(A._c):
        if i:
            current = _d_compose(current)
        if a:
            for j, c in enumerate(current):
                if c:
                    result[j] += a * c
    return DiffOp._from_raw(result)


def op_pow(A: DiffOp, k: int) -> DiffOp:
    out = ONE_OP
    for _ in range(k):
        out = op_mul(out, A)
    return out


def op_rdivmod(A: DiffOp, B: DiffOp):
    """Q, R with A = Q o B + R and order(R) < order(B)."""
    if B.is_zero():
        raise DivisionByZeroOperator("right division by zero operator")
    if A.is_zero() or A.order < B.order:
        return DiffOp(), A
    steps = A.order - B.order
    # d^i o B for i = 0..steps
    shifted = [list(B._c)]
    for _ in range(steps):
        shifted.append(_d_compose(shifted[-1]))
    rem = list(A._c)
    quo = [_ZERO] * (steps + 1)
    blead = B._c[-1]
    for k in range(steps, -1, -1):
        top = rem[k + B.order]
        if not top:
            continue
        factor = top / blead
        quo[k] = factor
        row = shifted[k]
        for j, c in enumerate(row):
            if c:
                rem[j] -= factor * c
        rem[k + B.order] = _ZERO  # exact by construction
    return DiffOp._from_raw(quo), DiffOp._from_raw(rem[:B.order if B.order > 0 else 0])


def op_ldivmod(A: DiffOp, B: DiffOp):
    """Q, R with A = B o Q + R and order(R) < order(B)."""
    if B.is_zero():
        raise DivisionByZeroOperator("left division by zero operator")
    rem = A
    quo = DiffOp()
    blead = B._c[-1]
    while rem and rem.order >= B.order:
        k = rem.order - B.order
        term = mono_op(rem._c[-1] / blead, k)
        rem = rem - op_mul(B, term)
        quo = quo + term
        if rem and rem.order >= B.order + k + 1:
            raise AssertionError("left division failed to reduce order")
    return quo, rem


def adjoint(A: DiffOp) -> DiffOp:
    """Formal adjoint sum_j (-1)^j d^j o c_j."""
    out = DiffOp()
    dj = ONE_OP
    for j, c in enumerate(A._c):
        if j:
            dj = op_mul(D, dj)
        if c:
            sign = -1 if j % 2 else 1
            out = out + op_mul(dj, const_op(c * sign))
    return out


def ext_euclid(A: DiffOp, B: DiffOp):
    """(g, xcof, ycof) with xcof o A + ycof o B = g = GCRD(A, B)."""
    if A.is_zero() and B.is_zero():
        raise DivisionByZeroOperator("GCRD of two zero operators")
    r0, r1 = A, B
    x0, x1 = ONE_OP, DiffOp()
    y0, y1 = DiffOp(), ONE_OP
    while r1:
        q, r2 = op_rdivmod(r0, r1)
        r0, r1 = r1, r2
        x0, x1 = x1, x0 - op_mul(q, x1)
        y0, y1 = y1, y0 - op_mul(q, y1)
    return r0, x0, y0


# ---------------------------------------------------------------------------
# mixed (x, theta, d)-form


@lru_cache(maxsize=None)
def _falling_factorial(i: int):
    """Raw theta(theta-1)...(theta-i+1) as a field element."""
    acc = _ONE
    for k in range(i):
        acc *= _FTHETA - k
    return acc


@lru_cache(maxsize=None)
def _stirling2(m: int, j: int) -> int:
    if m == j:
        return 1
    if j == 0 or j > m:
        return 0
    return j * _stirling2(m - 1, j) + _stirling2(m - 1, j - 1)


class MixedForm:
    """Canonical (x, theta, d)-form of a polynomial-coefficient operator."""

    __slots__ = ("xPart", "diag", "dPart")

    def __init__(self, xPart=None, diag=0, dPart=None):
        xp = {int(k): (v if isinstance(v, ThetaPoly) else ThetaPoly(v))
              for k, v in (xPart or {}).items()}
        dp = {int(j): (v if isinstance(v, ThetaPoly) else ThetaPoly(v))
              for j, v in (dPart or {}).items()}
        if any(k < 1 for k in xp) or any(j < 1 for j in dp):
            raise ValueError("xPart/dPart exponents must be >= 1")
        object.__setattr__(self, "xPart", {k: v for k, v in xp.items() if v})
        object.__setattr__(self, "diag", diag if isinstance(diag, ThetaPoly) else ThetaPoly(diag))
        object.__setattr__(self, "dPart", {j: v for j, v in dp.items() if v})

    def __setattr__(self, *_):
        raise AttributeError("immutable value")

    def __eq__(self, other):
        return (isinstance(other, MixedForm) and self.xPart == other.xPart
                and self.diag == other.diag and self.dPart == other.dPart)

    def __str__(self):
        parts = [f"x^{k}*({v})" for k, v in sorted(self.xPart.items(), reverse=True)]
        if self.diag or not (self.xPart or self.dPart):
            parts.append(f"({self.diag})")
        parts += [f"({v})*d^{j}" for j, v in sorted(self.dPart.items())]
        return " + ".join(parts)

    def __repr__(self):
        return f"MixedForm<{self}>"

    def is_theta_form(self) -> bool:
        """True when the xPart is empty (pure (theta, d)-form)."""
        return not self.xPart

    def slots(self):
        """((kind, index), ThetaPoly) pairs; kind in {'x', 'diag', 'd'}."""
        for k, v in sorted(self.xPart.items()):
            yield ("x", k), v
        yield ("diag", 0), self.diag
        for j, v in sorted(self.dPart.items()):
            yield ("d", j), v


def to_mixed(A: DiffOp) -> MixedForm:
    """Rewrite a polynomial-coefficient operator in mixed form."""
    xp, dp = {}, {}
    diag = _ZERO
    for i, c in enumerate(A._c):
        if not c:
            continue
        if not _poly_is_x_free(c.denom):
            raise NonPolynomialCoefficients(
                f"coefficient of d^{i} has x in its denominator: {frac_text(c)}")
        den = _FIELD(c.denom)
        for monom, coeff in c.numer.terms():
            m = monom[_X_IDX]
            stripped = list(monom)
            stripped[_X_IDX] = 0
            kappa = _FIELD(c.numer.ring.from_dict({tuple(stripped): coeff})) / den
            if m >= i:
                contrib = kappa * _falling_factorial(i)
                if m == i:
                    diag += contrib
                else:
                    xp[m - i] = xp.get(m - i, _ZERO) + contrib
            else:
                dp[i - m] = dp.get(i - m, _ZERO) + kappa * _falling_factorial(m)
    return MixedForm({k: ThetaPoly(v) for k, v in xp.items() if v},
                     ThetaPoly(diag),
                     {j: ThetaPoly(v) for j, v in dp.items() if v})


def from_mixed(M: MixedForm) -> DiffOp:
    """Expand a mixed form back into (x, d)-coordinates."""
    acc = {}

    def add_term(xpow, dpow, value):
        key = dpow
        cur = acc.get(key, {})
        cur[xpow] = cur.get(xpow, _ZERO) + value
        acc[key] = cur

    def expand(theta_poly: ThetaPoly, xoff: int, doff: int):
        # theta^t = sum_j S(t, j) x^j d^j with Stirling numbers of the 2nd kind
        for t, val in theta_poly.coeff_dict().items():
            for j in range(t + 1):
                s = _stirling2(t, j)
                if s:
                    add_term(xoff + j, doff + j, val * s)

    for k, v in M.xPart.items():
        expand(v, k, 0)
    expand(M.diag, 0, 0)
    for j, v in M.dPart.items():
        expand(v, 0, j)

    if not acc:
        return DiffOp()
    top = max(acc)
    coeffs = []
    for jj in range(top + 1):
        row = acc.get(jj, {})
        total = _ZERO
        for xpow, val in row.items():
            total += val * _FX ** xpow
        coeffs.append(total)
    return DiffOp._from_raw(coeffs)


def theta_shift(value, k):
    """Substitute theta -> theta + k in a ThetaPoly or every MixedForm slot."""
    if isinstance(value, ThetaPoly):
        return value.shift(k)
    if isinstance(value, MixedForm):
        return MixedForm({i: v.shift(k) for i, v in value.xPart.items()},
                         value.diag.shift(k),
                         {j: v.shift(k) for j, v in value.dPart.items()})
    raise TypeError("theta_shift expects ThetaPoly or MixedForm")


# ---------------------------------------------------------------------------
# normalization helpers


def normalize_monic(A: DiffOp) -> DiffOp:
    """Divide by the leading coefficient (canonical rep up to a unit)."""
    if A.is_zero():
        return A
    lead = A._c[-1]
    return DiffOp._from_raw([c / lead for c in A._c])


def proportional(A: DiffOp, B: DiffOp) -> bool:
    """A = f(x) * B for some nonzero multiplier (covers 'up to constant')."""
    if A.is_zero() or B.is_zero():
        return A.is_zero() and B.is_zero()
    return normalize_monic(A) == normalize_monic(B)


def clear_x_denominators(A: DiffOp, side: str = "left"):
    """(cleared, factor): multiply by the LCM of x-denominators.

    side='left' gives factor o A' ... i.e. cleared = factor * A (coefficient
    scaling); side='right' gives cleared = A o factor.
    """
    lcm = _ONE.numer.ring.one
    for c in A._c:
        if c:
            lcm = lcm * c.denom // lcm.gcd(c.denom)
    factor = _FIELD(lcm)
    if side == "left":
        return A.scale(factor), RatFuncX(factor)
    if side == "right":
        return op_mul(A, const_op(factor)), RatFuncX(factor)
    raise ValueError("side must be 'left' or 'right'")


def _param_content(raw_poly):
    """GCD of the parameter-coefficients of a poly viewed as poly in x."""
    ring_ = raw_poly.ring
    groups = {}
    for monom, coeff in raw_poly.terms():
        m = monom[_X_IDX]
        stripped = list(monom)
        stripped[_X_IDX] = 0
        key = tuple(stripped)
        grp = groups.setdefault(m, {})
        grp[key] = grp.get(key, coeff * 0) + coeff
    content = None
    for grp in groups.values():
        part = ring_.from_dict(grp)
        content = part if content is None else content.gcd(part)
        if content == ring_.one:
            break
    return content if content is not None else ring_.zero


def clear_param_content(A: DiffOp) -> DiffOp:
    """Scale by a parameter-only constant to a canonical representative.

    Writes all coefficients over a common denominator, removes the collective
    parameter content of the numerators and the parameter content of the
    denominator, and fixes the sign of the leading canonical term.
    """
    if A.is_zero():
        return A
    ring_ = A._c[0].numer.ring
    lcm = ring_.one
    for c in A._c:
        if c:
            lcm = lcm * c.denom // lcm.gcd(c.denom)
    numerators = []
    for c in A._c:
        numerators.append(c.numer * (lcm // c.denom) if c else ring_.zero)
    content = None
    for n in numerators:
        if n:
            part = _param_content(n)
            content = part if content is None else content.gcd(part)
            if content == ring_.one:
                break
    den_content = _param_content(lcm)
    scale = _FIELD(den_content) / _FIELD(content)
    scaled = [c * scale for c in A._c]
    # fix sign from the graded-lex-leading term of the top numerator
    top = scaled[-1].numer
    lead = max(top.terms(), key=lambda t: (sum(t[0]), t[0]))
    if lead[1] < 0:
        scaled = [-c for c in scaled]
    return DiffOp._from_raw(scaled)


def clear_full_content(A: DiffOp) -> DiffOp:
    """Scale to coprime polynomial coefficients with a fixed leading sign.

    Like :func:`clear_param_content`, but the removed content may involve x
    as well, so the result has polynomial coefficients with no common factor
    at all (the catalog's display convention).
    """
    if A.is_zero():
        return A
    ring_ = A._c[0].numer.ring
    lcm = ring_.one
    for c in A._c:
        if c:
            lcm = lcm * c.denom // lcm.gcd(c.denom)
    numerators = [c.numer * (lcm // c.denom) if c else ring_.zero for c in A._c]
    content = None
    for n in numerators:
        if n:
            content = n if content is None else content.gcd(n)
            if content == ring_.one:
                break
    scaled = [_FIELD(n) / _FIELD(content) for n in numerators]
    top = scaled[-1].numer
    lead = max(top.terms(), key=lambda t: (sum(t[0]), t[0]))
    if lead[1] < 0:
        scaled = [-c for c in scaled]
    return DiffOp._from_raw(scaled)


# ---------------------------------------------------------------------------
# change of the independent variable


def subs_x(A: DiffOp, phi) -> DiffOp:
    """Pull back the operator under the substitution x -> phi(x).

    If u(x) solves A u = 0 then u(phi(x)) solves subs_x(A, phi) = 0.
    phi must be a rational function of x with nonzero derivative
    (affine and Moebius maps such as 1/x, 1-x, 1/(1-x) are the intended
    uses).  The chain rule turns d/dx into (1/phi'(x)) d/dx; coefficients
    are composed with phi.
    """
    raw_phi = _raw_frac(phi)
    dphi = raw_phi.diff(_FX)
    if not dphi:
        raise ValueError("substitution must have nonzero derivative")
    dop = const_op(1 / dphi) * D
    out = DiffOp([])
    power = ONE_OP
    for j, c in enumerate(A._c):
        if j:
            power = op_mul(power, dop)
        if c:
            out = out + power.scale(_subs_raw_frac(c, {"x": raw_phi}))
    return out
