"""Witness search on small operators and locus bookkeeping."""

import random
from fractions import Fraction

import pytest

from fuchsian_ops.catalog import make
from fuchsian_ops.params import specialize
from fuchsian_ops.reducibility import (
    NotDivisible,
    all_witnesses,
    apparent_flag,
    factor_type_witness,
    first_order_witnesses,
    locus_table,
    on_locus_assignment,
)
from fuchsian_ops.sampling import sample_assignment
from fuchsian_ops.weyl import op_mul


def test_locus_tables_exist():
    for family in ("E6", "E5", "E4", "SE6", "SE5", "SE4", "SE3"):
        table = locus_table(family)
        assert table
        for locus in table:
            assert locus.family == family
            assert sum(locus.factor_type) == make(family).order


def test_on_locus_assignment_hits_value(rng):
    for family in ("SE3", "SE4"):
        for locus in locus_table(family):
            asg = on_locus_assignment(locus, rng)
            got = specialize(locus.expression, asg).as_rat()
            assert got == Fraction(locus.witness_at)


def test_se3_locus_witness(rng):
    locus = locus_table("SE3")[0]  # a = 0
    asg = on_locus_assignment(locus, rng)
    target = make("SE3", asg).op
    w = factor_type_witness(target, locus.factor_type)
    assert tuple(sorted(w.factor_orders())) == locus.factor_type
    assert (w.recompose() - target).is_zero()


def test_generic_se3_has_no_witness(rng):
    for _ in range(3):
        asg = sample_assignment(("a", "b", "c", "g"), rng)
        target = make("SE3", asg).op
        assert all_witnesses(target) == []


def test_gauss_witness_exact_product(rng):
    # build a reducible operator by hand and re-discover its factor
    asg = sample_assignment(("A", "B", "C"), rng)
    inner = make("E2", asg).op
    from fuchsian_ops.weyl import D

    target = op_mul(D, inner)
    ws = all_witnesses(target)
    assert any((w.recompose() - target).is_zero() for w in ws)


def test_factor_type_must_sum_to_order(rng):
    asg = sample_assignment(("a", "b", "c", "g"), rng)
    target = make("SE3", asg).op
    with pytest.raises(NotDivisible):
        factor_type_witness(target, (1, 1))


def test_apparent_flag_on_se3_split(rng):
    locus = locus_table("SE3")[0]
    asg = on_locus_assignment(locus, rng)
    target = make("SE3", asg).op
    w = factor_type_witness(target, locus.factor_type)
    assert apparent_flag(w) in (True, False)
