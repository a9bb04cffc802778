"""Exact arithmetic tower: big rationals, parameter polynomials, and fractions.

Everything downstream computes in a single sparse polynomial ring over QQ whose
generators are the independent variable ``x`` together with every parameter
symbol used by the operator catalog.  Three thin wrappers expose the tower:

* :class:`ParamPoly`  -- polynomial in the parameters only (no ``x``),
* :class:`ParamFrac`  -- fraction of such polynomials,
* :class:`RatFuncX`   -- rational function of ``x`` with ``ParamFrac``
  coefficients (the operator coefficient field).

All values are immutable; operations are pure functions.
"""

from __future__ import annotations

from fractions import Fraction

from sympy.polys.domains import QQ
from sympy.polys.rings import ring

__all__ = [
    "Rat",
    "SYMBOLS",
    "ParamPoly",
    "ParamFrac",
    "RatFuncX",
    "DivisionByZero",
    "InexactDivision",
    "DenominatorVanishes",
    "poly",
    "frac",
    "ratx",
    "specialize",
]

#: Public exact-rational scalar type.
Rat = Fraction


class DivisionByZero(ZeroDivisionError):
    """Division by the zero polynomial or fraction."""


class InexactDivision(ArithmeticError):
    """Exact polynomial division requested but the remainder is nonzero."""


class DenominatorVanishes(ZeroDivisionError):
    """A specialization sent a denominator to zero (caller should resample)."""


# Canonical generator order; ``x`` first, then parameters.  The order fixes
# the graded-lex serialization used everywhere.
SYMBOLS = (
    "x",
    "a", "b", "c", "g", "p", "q", "r", "s", "t", "u", "mu",
    "A", "B", "C", "acc",
    "e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8", "e9",
    "a0", "a1", "a2", "a3", "b1", "b2", "b3",
    "theta",
)

_RING, *_PGENS = ring(",".join(SYMBOLS), QQ)
_FIELD = _RING.to_field()
_FGENS = [_FIELD(gen) for gen in _PGENS]

_PGEN = dict(zip(SYMBOLS, _PGENS))
_FGEN = dict(zip(SYMBOLS, _FGENS))
_INDEX = {name: i for i, name in enumerate(SYMBOLS)}

_PX = _PGEN["x"]
_FX = _FGEN["x"]
_X_IDX = _INDEX["x"]
_THETA_IDX = _INDEX["theta"]


def _to_qq(value):
    """Coerce an int/Fraction/mpq scalar into the QQ domain."""
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, int):
        return QQ(value)
    return QQ.convert(value)


def _qq_to_rat(value) -> Rat:
    return Fraction(int(value.numerator), int(value.denominator))


def _raw_poly(value):
    """Coerce scalars/names/wrappers to a raw PolyElement of the master ring."""
    if isinstance(value, ParamPoly):
        return value._raw
    if isinstance(value, str):
        return _PGEN[value]
    if isinstance(value, (int, Fraction)):
        return _RING.ground_new(_to_qq(value))
    if value.__class__.__name__ == "PolyElement":
        return value
    raise TypeError(f"cannot coerce {value!r} to a parameter polynomial")


def _raw_frac(value):
    """Coerce scalars/names/wrappers to a raw FracElement of the master field."""
    if isinstance(value, (ParamFrac, RatFuncX)):
        return value._raw
    if isinstance(value, ParamPoly):
        return _FIELD(value._raw)
    if isinstance(value, str):
        return _FGEN[value]
    if isinstance(value, (int, Fraction)):
        return _FIELD.ground_new(_to_qq(value))
    name = value.__class__.__name__
    if name == "FracElement":
        return value
    if name == "PolyElement":
        return _FIELD(value)
    raise TypeError(f"cannot coerce {value!r} to a rational function")


def _poly_is_x_free(raw) -> bool:
    return all(monom[_X_IDX] == 0 for monom in raw.monoms())


def _poly_is_theta_free(raw) -> bool:
    return all(monom[_THETA_IDX] == 0 for monom in raw.monoms())


# ---------------------------------------------------------------------------
# serialization


def _monom_str(monom) -> str:
    parts = []
    for name, exp in zip(SYMBOLS, monom):
        if exp == 1:
            parts.append(name)
        elif exp:
            parts.append(f"{name}^{exp}")
    return "*".join(parts)


def _rat_str(coeff) -> str:
    if coeff.denominator == 1:
        return str(coeff.numerator)
    return f"{coeff.numerator}/{coeff.denominator}"


def poly_text(raw) -> str:
    """Canonical graded-lex text of a raw PolyElement."""
    if not raw:
        return "0"
    terms = sorted(raw.terms(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
    chunks = []
    for monom, coeff in terms:
        mono = _monom_str(monom)
        coeff_s = _rat_str(coeff)
        if mono:
            body = mono if coeff == 1 else (f"-{mono}" if coeff == -1 else f"{coeff_s}*{mono}")
        else:
            body = coeff_s
        if chunks and not body.startswith("-"):
            chunks.append("+ " + body)
        elif chunks:
            chunks.append("- " + body[1:])
        else:
            chunks.append(body)
    return " ".join(chunks)


def frac_text(raw) -> str:
    if raw.denom == raw.denom.ring.one:
        return poly_text(raw.numer)
    return f"({poly_text(raw.numer)})/({poly_text(raw.denom)})"


# ---------------------------------------------------------------------------
# wrappers


class _Wrapped:
    """Shared arithmetic shell around a raw sympy element."""

    __slots__ = ("_raw",)

    def __init__(self, raw):
        object.__setattr__(self, "_raw", raw)

    def __setattr__(self, *_):
        raise AttributeError("immutable value")

    @property
    def raw(self):
        return self._raw

    def __bool__(self):
        return bool(self._raw)

    def is_zero(self) -> bool:
        return not self._raw

    def __hash__(self):
        return hash(self._raw)

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class ParamPoly(_Wrapped):
    """Multivariate polynomial in the parameter symbols (never in ``x``)."""

    def __init__(self, value=0):
        raw = _raw_poly(value)
        if not (_poly_is_x_free(raw) and _poly_is_theta_free(raw)):
            raise ValueError("ParamPoly must not involve x or theta")
        super().__init__(raw)

    def __str__(self):
        return poly_text(self._raw)

    def __eq__(self, other):
        return self._raw == _raw_poly(other)

    def __add__(self, other):
        return ParamPoly(self._raw + _raw_poly(other))

    __radd__ = __add__

    def __sub__(self, other):
        return ParamPoly(self._raw - _raw_poly(other))

    def __rsub__(self, other):
        return ParamPoly(_raw_poly(other) - self._raw)

    def __mul__(self, other):
        return ParamPoly(self._raw * _raw_poly(other))

    __rmul__ = __mul__

    def __neg__(self):
        return ParamPoly(-self._raw)

    def __pow__(self, k: int):
        return ParamPoly(self._raw ** k)

    def __truediv__(self, other):
        other_raw = _raw_frac(other)
        if not other_raw:
            raise DivisionByZero("division by zero")
        return ParamFrac(_FIELD(self._raw) / other_raw)

    def exact_div(self, other) -> "ParamPoly":
        """Exact polynomial quotient; raises InexactDivision otherwise."""
        other_raw = _raw_poly(other)
        if not other_raw:
            raise DivisionByZero("division by zero polynomial")
        quo, rem = self._raw.div(other_raw)
        if rem:
            raise InexactDivision(f"{self} is not divisible by {other}")
        return ParamPoly(quo)

    def gcd(self, other) -> "ParamPoly":
        return ParamPoly(self._raw.gcd(_raw_poly(other)))

    def total_degree(self) -> int:
        return max((sum(m) for m in self._raw.monoms()), default=0)

    def symbols(self):
        """Names of parameters actually appearing."""
        used = set()
        for monom in self._raw.monoms():
            for name, exp in zip(SYMBOLS, monom):
                if exp:
                    used.add(name)
        return sorted(used, key=_INDEX.get)

    def as_rat(self) -> Rat:
        """Constant value, if the polynomial is constant."""
        if self._raw and self._raw.monoms() != [(0,) * len(SYMBOLS)]:
            raise ValueError(f"{self} is not constant")
        return _qq_to_rat(self._raw.coeff(1)) if self._raw else Fraction(0)


class _FracBase(_Wrapped):
    """Arithmetic shared by ParamFrac and RatFuncX."""

    def __str__(self):
        return frac_text(self._raw)

    def __eq__(self, other):
        try:
            return self._raw == _raw_frac(other)
        except TypeError:
            return NotImplemented

    def _result_cls(self, other):
        if isinstance(other, RatFuncX) or isinstance(self, RatFuncX):
            return RatFuncX
        return type(self)

    def _binary(self, other, fn, reflected=False):
        if other.__class__.__name__ == "ThetaPoly":
            return NotImplemented  # let ThetaPoly handle mixed arithmetic
        try:
            other_raw = _raw_frac(other)
        except TypeError:
            return NotImplemented
        raw = fn(other_raw, self._raw) if reflected else fn(self._raw, other_raw)
        return self._result_cls(other)(raw)

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binary(other, lambda a, b: a - b, reflected=True)

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __neg__(self):
        return type(self)(-self._raw)

    def __pow__(self, k: int):
        return type(self)(self._raw ** k)

    def __truediv__(self, other):
        if not _raw_frac(other):
            raise DivisionByZero("division by zero")
        return self._binary(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        if not self._raw:
            raise DivisionByZero("division by zero")
        return self._binary(other, lambda a, b: a / b, reflected=True)

    @property
    def numer(self) -> ParamPoly:
        return ParamPoly(self._raw.numer)

    @property
    def denom(self) -> ParamPoly:
        return ParamPoly(self._raw.denom)

    def as_rat(self) -> Rat:
        num, den = self._raw.numer, self._raw.denom
        const = (0,) * len(SYMBOLS)
        for raw in (num, den):
            if raw and raw.monoms() != [const]:
                raise ValueError(f"{self} is not constant")
        if not num:
            return Fraction(0)
        return _qq_to_rat(num.coeff(1)) / _qq_to_rat(den.coeff(1))

    def is_const(self) -> bool:
        try:
            self.as_rat()
        except ValueError:
            return False
        return True


class ParamFrac(_FracBase):
    """Rational function of the parameters (independent of ``x``)."""

    def __init__(self, value=0):
        raw = _raw_frac(value)
        if not (_poly_is_x_free(raw.numer) and _poly_is_x_free(raw.denom)
                and _poly_is_theta_free(raw.numer) and _poly_is_theta_free(raw.denom)):
            raise ValueError("ParamFrac must not involve x or theta")
        super().__init__(raw)



class RatFuncX(_FracBase):
    """Rational function in ``x`` with parameter-fraction coefficients."""

    def __init__(self, value=0):
        raw = _raw_frac(value)
        if not (_poly_is_theta_free(raw.numer) and _poly_is_theta_free(raw.denom)):
            raise ValueError("RatFuncX must not involve theta")
        super().__init__(raw)

    def diff(self) -> "RatFuncX":
        """Derivative with respect to x."""
        return RatFuncX(self._raw.diff(_FX))

    def x_free(self) -> bool:
        return _poly_is_x_free(self._raw.numer) and _poly_is_x_free(self._raw.denom)

    def x_degree(self) -> int:
        """max x-degree of numerator (denominator must be x-free)."""
        return self._raw.numer.degree(_PX)



# ---------------------------------------------------------------------------
# constructors / specialization


def poly(value=0) -> ParamPoly:
    return ParamPoly(value)


def frac(value=0) -> ParamFrac:
    return ParamFrac(value)


def ratx(value=0) -> RatFuncX:
    return RatFuncX(value)


def _subs_raw_poly(raw, assignment):
    """Substitute QQ values for generators in a raw PolyElement."""
    acc = {}
    for monom, coeff in raw.terms():
        new = list(monom)
        for idx, val in assignment.items():
            exp = new[idx]
            if exp:
                coeff = coeff * val ** exp
                new[idx] = 0
        key = tuple(new)
        coeff = acc.get(key, QQ(0)) + coeff
        if coeff:
            acc[key] = coeff
        elif key in acc:
            del acc[key]
    return _RING.from_dict(acc)


def _normalize_assignment(assignment):
    out = {}
    for name, value in assignment.items():
        out[_INDEX[name]] = _to_qq(value if not isinstance(value, Rat) else value)
    return out


def specialize(value, assignment):
    """Substitute exact rationals for named symbols (partial or full).

    Returns the same wrapper kind; use ``.as_rat()`` for a scalar once all
    symbols are assigned.  Raises DenominatorVanishes if a denominator dies.
    """
    idx_assignment = _normalize_assignment(assignment)
    if isinstance(value, ParamPoly):
        return ParamPoly(_subs_raw_poly(value._raw, idx_assignment))
    if isinstance(value, (ParamFrac, RatFuncX)):
        num = _subs_raw_poly(value._raw.numer, idx_assignment)
        den = _subs_raw_poly(value._raw.denom, idx_assignment)
        if not den:
            raise DenominatorVanishes(f"denominator {value.denom} vanished")
        result = _FIELD(num) / _FIELD(den)
        return type(value)(result)
    raise TypeError(f"cannot specialize {value!r}")
