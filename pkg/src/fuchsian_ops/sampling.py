"""Seeded rational parameter sampling that avoids integrality loci.

Many identities in this package hold generically but degenerate when some
linear combination of parameters is an integer (the reducibility loci).
Sampled verification therefore draws exact rationals with denominators in
{1, 2, 3}, rejects any assignment that puts an avoided expression on an
integer, and resamples whenever a substitution kills a denominator.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .params import DenominatorVanishes, ParamFrac, ParamPoly, specialize

__all__ = ["rand_rat", "sample_assignment", "sample_stream", "is_integer_value"]

_NUM_RANGE = (-40, 40)
_DENOMS = (1, 2, 3)
_MAX_TRIES = 500


def rand_rat(rng: random.Random, denoms=_DENOMS) -> Fraction:
    """One random rational with numerator in [-40, 40], denominator in {1,2,3}."""
    return Fraction(rng.randint(*_NUM_RANGE), rng.choice(denoms))


def is_integer_value(value) -> bool:
    """True when a fully specialized expression is an exact integer."""
    try:
        rat = value.as_rat()
    except ValueError:
        return False
    return rat.denominator == 1


def _hits_locus(expr, assignment) -> bool:
    try:
        value = specialize(expr, assignment)
    except DenominatorVanishes:
        return True
    return is_integer_value(value)


def sample_assignment(names, rng: random.Random, avoid=()):
    """A dict name -> Fraction with every avoided expression off the integers.

    ``avoid`` is an iterable of ParamPoly/ParamFrac expressions in (a subset
    of) ``names``; an assignment is rejected when any of them specializes to
    an exact integer or kills a denominator.
    """
    avoid = tuple(avoid)
    for expr in avoid:
        if not isinstance(expr, (ParamPoly, ParamFrac)):
            raise TypeError(f"avoid entries must be parameter expressions, got {expr!r}")
    for attempt in range(_MAX_TRIES):
        # under heavy rejection (many avoided loci), integer-denominator
        # draws almost always land on a locus; switch to strict fractions
        denoms = _DENOMS if attempt < 50 else (2, 3)
        assignment = {name: rand_rat(rng, denoms) for name in names}
        if not any(_hits_locus(expr, assignment) for expr in avoid):
            return assignment
    raise RuntimeError(
        f"could not sample off the {len(avoid)} avoided loci in {_MAX_TRIES} tries")


def sample_stream(names, seed: int, avoid=(), count: int | None = None):
    """Deterministic stream of off-locus assignments for a fixed seed."""
    rng = random.Random(seed)
    produced = 0
    while count is None or produced < count:
        yield sample_assignment(names, rng, avoid)
        produced += 1
