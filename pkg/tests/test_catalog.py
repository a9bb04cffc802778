"""Operator catalog: construction, schemes, Fuchs sums, parameter maps."""

import random

import pytest

from fuchsian_ops.catalog import (
    BadParameterCount,
    MissingAccessoryParameter,
    NAMES,
    fuchs_check,
    make,
    param_map,
    riemann_scheme,
    spectral_type,
)
from fuchsian_ops.sampling import sample_assignment


def _make_sym(name):
    from fuchsian_ops.params import frac

    params = {"a00": frac("acc")} if name == "E3" else None
    return make(name, params)


def test_every_family_builds_symbolically():
    for name in NAMES:
        entry = _make_sym(name)
        assert entry.op.order == entry.scheme.order


def test_fuchs_sum_all_families():
    for name in NAMES:
        entry = _make_sym(name)
        assert fuchs_check(entry.scheme, entry.order), name


def test_scheme_recovered_from_operator(rng):
    for name in ("E2", "SE3", "E4", "SE4", "E5"):
        from fuchsian_ops.catalog import _PARAM_NAMES

        asg = sample_assignment(_PARAM_NAMES[name], rng)
        entry = make(name, asg)
        recovered = riemann_scheme(entry.op)
        assert recovered.same_as(entry.scheme), name


def test_param_map_se6_second_difference():
    e = param_map("SE6")
    # the second difference of each exponent row is the same parameter
    g = e["e3"] - 2 * e["e2"] + e["e1"]
    assert (e["e6"] - 2 * e["e5"] + e["e4"] - g).is_zero()
    assert (e["e7"] - 2 * e["e8"] + e["e9"] - g).is_zero()


def test_param_map_se5_specializes_se6():
    from fuchsian_ops.params import frac

    se5 = param_map("SE5")
    letters = {n: frac(n) for n in "abcgpq"}
    se6 = param_map("SE6", {**letters, "r": se5["r"]})
    for key in ("e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8"):
        assert (se6[key] - se5[key]).is_zero(), key


def test_e3_needs_accessory():
    with pytest.raises(MissingAccessoryParameter):
        make("E3", {f"e{i}": i for i in range(1, 7)})


def test_unknown_parameter_rejected():
    with pytest.raises(BadParameterCount):
        make("E2", {"Z": 1})


def test_spectral_type_gauss(rng):
    entry = make("E2", sample_assignment(("A", "B", "C"), rng))
    assert spectral_type(entry.scheme) == [[1, 1], [1, 1], [1, 1]]


def test_unknown_family():
    with pytest.raises(BadParameterCount):
        make("E7")
