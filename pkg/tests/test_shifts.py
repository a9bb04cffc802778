"""Shift pairs: verification, solving, reversal, round-trip constants."""

import pytest

from fuchsian_ops.catalog import make
from fuchsian_ops.params import frac
from fuchsian_ops.shifts import (
    AnsatzShape,
    ShiftPair,
    builtin_shift_table,
    derive_reverse,
    shifted_assignment,
    solve_shift,
    svalue,
    svalue_matches,
    svalue_symmetry_check,
    verify_shift,
)
from fuchsian_ops.shift_tables import svalue_cases
from fuchsian_ops.weyl import D, DiffOp


def test_gauss_contiguity_up_symbolic():
    pair = builtin_shift_table("E2")["A+1"]
    res = verify_shift(pair, mode="symbolic")
    assert res.ok, res.slots


def test_shift_pair_rejects_wrong_operator():
    from fuchsian_ops.params import ratx

    bad = DiffOp([frac("A") + 1, ratx("x")])  # wrong constant slot
    with pytest.raises(ValueError):
        ShiftPair("E2", {"A": 1}, bad, check=True, check_count=2)


def test_shifted_assignment():
    out = shifted_assignment("E2", {"A": 1}, {"A": 2, "B": 3, "C": 4})
    assert out["A"] == 3 and out["B"] == 3


def test_e4_differentiation_pair_symbolic():
    table = builtin_shift_table("E4")
    res = verify_shift(table["d"], mode="symbolic")
    assert res.ok, res.slots


def test_e4_reverse_pair_sampled():
    table = builtin_shift_table("E4")
    res = verify_shift(table["d-rev"], mode="sampled:2", seed=31)
    assert res.ok, (res.slots, res.assignment)


def test_solve_shift_recovers_gauss_contiguity():
    pair = solve_shift("E2", {"A": 1}, AnsatzShape(1, 0, 1), mode="symbolic")
    known = builtin_shift_table("E2")["A+1"]
    # one-dimensional solution space: proportional to theta + A
    from fuchsian_ops.weyl import proportional

    assert proportional(pair.P, known.P)


def test_derive_reverse_e2():
    up = builtin_shift_table("E2")["A+1"]
    down = derive_reverse("E2", up, check=False)
    assert down.shift == {"A": -1}
    res = verify_shift(down, mode="sampled:3", seed=41)
    assert res.ok


def test_e4_svalue_case():
    cases = svalue_cases("E4")
    assert len(cases) == 1
    table = builtin_shift_table("E4")
    case = cases[0]
    ok, ratio = svalue_matches("E4", table[case.minus], table[case.plus],
                               case.formula, count=3, seed=19)
    assert ok and ratio is not None


def test_svalue_symmetry_e4():
    table = builtin_shift_table("E4")
    assert svalue_symmetry_check("E4", table["d"], table["d-rev"],
                                 count=2, seed=37)


def test_svalue_shift_mismatch_rejected():
    up = builtin_shift_table("E2")["A+1"]
    with pytest.raises(ValueError):
        svalue("E2", up, up)
