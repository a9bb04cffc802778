"""Command-line interface: parsing, serialization, and the check runner."""

import json
import subprocess
import sys

import pytest

from fuchsian_ops.catalog import make
from fuchsian_ops.cli import (
    OperatorDocument,
    ParseError,
    cli_main,
    deserialize,
    serialize,
)


def run_cli(args, capsys):
    code = cli_main(args)
    out = capsys.readouterr().out
    return code, out


def test_document_round_trip_byte_stable():
    entry = make("E2", {"A": 1, "B": 2, "C": 3})
    doc = OperatorDocument.of(entry.op, note="gauss at integers")
    text = serialize(doc)
    again = deserialize(text)
    assert serialize(again) == text
    assert (again.operator - entry.op).is_zero()


def test_document_round_trip_symbolic():
    entry = make("SE3")
    text = serialize(OperatorDocument.of(entry.op))
    again = deserialize(text)
    assert (again.operator - entry.op).is_zero()


def test_deserialize_rejects_garbage():
    with pytest.raises(ParseError):
        deserialize("not an operator file\n")


def test_catalog_list(capsys):
    code, out = run_cli(["catalog", "list"], capsys)
    assert code == 0
    assert "E2" in out and "SE6" in out


def test_catalog_show_json(capsys):
    code, out = run_cli(["catalog", "show", "E2", "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["scheme"]


def test_mul_and_divrem_consistent(capsys, tmp_path):
    code, prod = run_cli(
        ["mul", "--lhs", "E2", "--rhs", "ddx",
         "--param", "A=1", "--param", "B=2", "--param", "C=3"], capsys)
    assert code == 0
    f = tmp_path / "prod.op"
    f.write_text(prod)
    code, out = run_cli(
        ["divrem", "--lhs", f"@{f}", "--rhs", "ddx", "--side", "right",
         "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert all(c == "0" for c in data["remainder"]["coeffs"])


def test_shift_verify(capsys):
    code, out = run_cli(
        ["shift", "verify", "--eq", "E2", "--shift", "A+1",
         "--mode", "sampled:2"], capsys)
    assert code == 0
    assert out.startswith("pass")


def test_reduce_table(capsys):
    code, out = run_cli(["reduce", "table", "--eq", "SE3"], capsys)
    assert code == 0
    assert "a" in out


def test_seed_determinism(capsys):
    args = ["svalue", "--eq", "E4", "--count", "2", "--seed", "13"]
    _, first = run_cli(args, capsys)
    _, second = run_cli(args, capsys)
    assert first == second


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fuchsian_ops.cli", "catalog", "list"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "SE5" in proc.stdout
