"""Command-line surface: operator documents, checks, and reproduction runs.

The operator document is a line-oriented text format (with a JSON mirror)
whose polynomial serialization is canonical, so serializing, parsing, and
serializing again is byte-identical.  The ``reproduce`` subcommand runs the
library's sampled and symbolic check suites and emits a deterministic
report for a fixed seed.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .catalog import (
    NAMES,
    RiemannScheme,
    _PARAM_NAMES,
    make,
    riemann_scheme,
    spectral_type,
)
from .params import (
    _FIELD,
    _INDEX,
    SYMBOLS,
    ParamFrac,
    RatFuncX,
    frac,
    frac_text,
    specialize,
)
from .weyl import (
    D,
    DiffOp,
    X,
    adjoint,
    clear_x_denominators,
    op_ldivmod,
    op_mul,
    op_rdivmod,
)

__all__ = [
    "OperatorDocument",
    "RunReport",
    "CheckResult",
    "ParseError",
    "serialize",
    "deserialize",
    "cli_main",
    "main",
]

FORMAT_LINE = "fuchsian-ops operator v1"


class ParseError(ValueError):
    """Malformed operator document; carries line and column (1-based)."""

    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


# ---------------------------------------------------------------------------
# polynomial / fraction text parsing (inverse of params.poly_text)

_RAT_RE = re.compile(r"^-?\d+(?:/\d+)?$")
_POW_RE = re.compile(r"^([A-Za-z]\w*)(?:\^(\d+))?$")


def _parse_rat(tok):
    if "/" in tok:
        num, den = tok.split("/")
        return Fraction(int(num), int(den))
    return Fraction(int(tok))


def _parse_poly(text, line, col0):
    """Raw PolyElement from canonical polynomial text."""
    ring = _FIELD.ring
    text = text.strip()
    if not text:
        raise ParseError("empty polynomial", line, col0)
    # split "a - b + c" into signed terms, tracking source columns
    pieces = re.split(r" ([+-]) ", text)
    terms = [("+", pieces[0], col0)]
    pos = len(pieces[0])
    for i in range(1, len(pieces), 2):
        pos += 3  # the " s " separator
        terms.append((pieces[i], pieces[i + 1], col0 + pos))
        pos += len(pieces[i + 1])
    data = {}
    nsym = len(SYMBOLS)
    for sign, term, col in terms:
        coeff = Fraction(-1 if sign == "-" else 1)
        body = term
        if body.startswith("-"):
            coeff, body = -coeff, body[1:]
        monom = [0] * nsym
        saw_coeff = False
        for factor in body.split("*"):
            if _RAT_RE.match(factor):
                if saw_coeff:
                    raise ParseError(f"two numeric factors in {term!r}", line, col)
                coeff *= _parse_rat(factor)
                saw_coeff = True
                continue
            m = _POW_RE.match(factor)
            if not m or m.group(1) not in _INDEX:
                raise ParseError(f"unknown factor {factor!r}", line, col)
            monom[_INDEX[m.group(1)]] += int(m.group(2) or 1)
        key = tuple(monom)
        total = data.get(key, Fraction(0)) + coeff
        if total:
            data[key] = total
        else:
            data.pop(key, None)
    return ring.from_dict(
        {k: ring.domain(v.numerator, v.denominator) for k, v in data.items()})


def _parse_frac(text, line, col0):
    """Raw FracElement from canonical fraction text '(num)/(den)' or 'num'."""
    text = text.strip()
    if text.startswith("(") and ")/(" in text and text.endswith(")"):
        cut = text.index(")/(")
        num = _parse_poly(text[1:cut], line, col0 + 1)
        den = _parse_poly(text[cut + 3:-1], line, col0 + cut + 4)
        if not den:
            raise ParseError("zero denominator", line, col0 + cut + 4)
        return _FIELD(num) / _FIELD(den)
    return _FIELD(_parse_poly(text, line, col0))


# ---------------------------------------------------------------------------
# operator documents


@dataclass(frozen=True)
class OperatorDocument:
    """A differential operator with optional scheme and provenance note."""

    operator: DiffOp
    note: str = ""
    scheme: RiemannScheme | None = None

    @classmethod
    def of(cls, operator, note="", with_scheme=True):
        scheme = None
        if with_scheme:
            try:
                scheme = riemann_scheme(operator)
            except Exception:
                scheme = None
        return cls(operator, note, scheme)


def serialize(doc: OperatorDocument) -> str:
    lines = [FORMAT_LINE]
    if doc.note:
        lines.append(f"note: {doc.note}")
    for j, c in enumerate(doc.operator.coeffs):
        lines.append(f"coeff {j}: {frac_text(c.raw)}")
    if doc.scheme is not None:
        for name, row in zip(("0", "1", "inf"), doc.scheme.rows):
            lines.append(f"scheme {name}: " + "; ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def deserialize(text: str) -> OperatorDocument:
    lines = text.splitlines()
    if not lines or lines[0].strip() != FORMAT_LINE:
        raise ParseError(f"first line must be {FORMAT_LINE!r}", 1, 1)
    note = ""
    coeffs = {}
    scheme_rows = {}
    for i, raw_line in enumerate(lines[1:], start=2):
        if not raw_line.strip():
            continue
        if ":" not in raw_line:
            raise ParseError("expected 'key: value'", i, 1)
        key, _, value = raw_line.partition(":")
        col0 = len(key) + 2
        key = key.strip()
        if key == "note":
            note = value.strip()
        elif key.startswith("coeff "):
            try:
                j = int(key[6:])
            except ValueError:
                raise ParseError(f"bad coefficient index {key[6:]!r}", i, 7)
            coeffs[j] = RatFuncX(_parse_frac(value, i, col0))
        elif key.startswith("scheme "):
            point = key[7:]
            if point not in ("0", "1", "inf"):
                raise ParseError(f"bad scheme point {point!r}", i, 8)
            row = []
            for part in value.split(";"):
                row.append(ParamFrac(_parse_frac(part, i, col0)))
            scheme_rows[point] = tuple(row)
        else:
            raise ParseError(f"unknown key {key!r}", i, 1)
    if not coeffs:
        raise ParseError("document has no coefficients", len(lines), 1)
    top = max(coeffs)
    op = DiffOp([coeffs.get(j, 0) for j in range(top + 1)])
    scheme = None
    if scheme_rows:
        if set(scheme_rows) != {"0", "1", "inf"}:
            raise ParseError("scheme needs rows for 0, 1 and inf", len(lines), 1)
        scheme = RiemannScheme(scheme_rows["0"], scheme_rows["1"],
                               scheme_rows["inf"])
    return OperatorDocument(op, note, scheme)


def _doc_json(doc: OperatorDocument):
    out = {"format": "fuchsian-ops operator", "version": 1}
    if doc.note:
        out["note"] = doc.note
    out["coeffs"] = [frac_text(c.raw) for c in doc.operator.coeffs]
    if doc.scheme is not None:
        out["scheme"] = {name: [str(v) for v in row] for name, row in
                         zip(("0", "1", "inf"), doc.scheme.rows)}
    return out


# ---------------------------------------------------------------------------
# run reports


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    status: str  # "pass" | "fail" | "skip"
    detail: str = ""


@dataclass
class RunReport:
    suite: str
    seed: int
    rng: str = "python-random-mersenne-twister"
    checks: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def sorted_checks(self):
        return sorted(self.checks, key=lambda c: c.check_id)

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}", f"seed: {self.seed}",
                 f"rng: {self.rng}"]
        for c in self.sorted_checks():
            line = f"{c.status.upper():5s} {c.check_id}"
            if c.detail:
                line += f"  ({c.detail})"
            lines.append(line)
        counts = {"pass": 0, "fail": 0, "skip": 0}
        for c in self.checks:
            counts[c.status] += 1
        lines.append(f"total: {counts['pass']} passed, {counts['fail']} failed,"
                     f" {counts['skip']} skipped"
                     f" in {self.wall_time:.1f}s")
        return "\n".join(lines) + "\n"

    def to_json(self):
        return {
            "suite": self.suite, "seed": self.seed, "rng": self.rng,
            "wall_time": round(self.wall_time, 3),
            "checks": [{"id": c.check_id, "status": c.status,
                        "detail": c.detail} for c in self.sorted_checks()],
        }


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("FUCHSIAN_OPS_WORKERS", "1")))
    except ValueError:
        return 1


def _run_checks(suite, seed, jobs) -> RunReport:
    """jobs: list of (check_id, callable) -> CheckResult list, maybe pooled."""
    report = RunReport(suite=suite, seed=seed)
    start = time.time()

    def run_one(item):
        check_id, fn = item
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failure, not a skip
            return CheckResult(check_id, "fail", f"{type(exc).__name__}: {exc}")
        return CheckResult(check_id, "pass" if ok else "fail", detail)

    workers = _workers()
    if workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            report.checks = list(pool.map(run_one, jobs))
    else:
        report.checks = [run_one(job) for job in jobs]
    report.wall_time = time.time() - start
    return report


# ---------------------------------------------------------------------------
# operand and parameter parsing


def _parse_params(pairs):
    out = {}
    for pair in pairs or ():
        if "=" not in pair:
            raise SystemExit(f"bad parameter {pair!r}: expected name=value")
        name, _, value = pair.partition("=")
        out[name.strip()] = Fraction(value.strip())
    return out


def _operand(spec, params=None):
    """An operator from 'ddx', 'x', a catalog name, or @file."""
    if spec == "ddx":
        return D
    if spec == "x":
        return X
    if spec.startswith("@"):
        with open(spec[1:], "r", encoding="utf-8") as fh:
            return deserialize(fh.read()).operator
    if spec in NAMES:
        return make(spec, params or {}).op
    raise SystemExit(
        f"unknown operand {spec!r}: use ddx, x, a catalog name, or @file")


def _parse_shift(spec):
    """'b+1' / 'g-2' / 'c+1,p-1,q-1' -> shift dict."""
    out = {}
    for part in spec.split(","):
        m = re.match(r"^([a-z]\w*)([+-]\d+)$", part.strip())
        if not m:
            raise SystemExit(f"bad shift {part!r}: expected e.g. b+1 or g-2")
        out[m.group(1)] = int(m.group(2))
    return out


def _emit(args, text_body, json_body):
    body = (json.dumps(json_body, indent=2, sort_keys=True) + "\n"
            if args.format == "json" else text_body)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _emit_doc(args, doc: OperatorDocument):
    _emit(args, serialize(doc), _doc_json(doc))


# ---------------------------------------------------------------------------
# subcommands


def _cmd_catalog(args):
    if args.action == "list":
        _emit(args, "\n".join(NAMES) + "\n", {"families": list(NAMES)})
        return 0
    entry = make(args.name, _parse_params(args.param))
    doc = OperatorDocument(entry.op, note=f"catalog {args.name}", scheme=entry.scheme)
    _emit_doc(args, doc)
    return 0


def _cmd_mul(args):
    params = _parse_params(args.param)
    lhs = _operand(args.lhs, params)
    rhs = _operand(args.rhs, params)
    _emit_doc(args, OperatorDocument.of(op_mul(lhs, rhs), note="product",
                                        with_scheme=False))
    return 0


def _cmd_divrem(args):
    params = _parse_params(args.param)
    lhs = _operand(args.lhs, params)
    rhs = _operand(args.rhs, params)
    div = op_rdivmod if args.side == "right" else op_ldivmod
    quo, rem = div(lhs, rhs)
    qdoc = OperatorDocument.of(quo, note=f"{args.side} quotient", with_scheme=False)
    rdoc = OperatorDocument.of(rem, note=f"{args.side} remainder", with_scheme=False)
    _emit(args, serialize(qdoc) + serialize(rdoc),
          {"quotient": _doc_json(qdoc), "remainder": _doc_json(rdoc)})
    return 0


def _cmd_mc(args):
    from .transforms import mc

    op = _operand(args.operand, _parse_params(args.param))
    if not op.is_polynomial():
        op, _ = clear_x_denominators(op, side="left")
    try:
        mu = Fraction(args.mu)
    except ValueError:
        mu = frac(args.mu)
    result, info = mc(op, mu)
    note = f"mc mu={args.mu} (pad k={info.k}, stripped ell={info.ell})"
    _emit_doc(args, OperatorDocument.of(result, note=note))
    return 0


def _cmd_addition(args):
    from .transforms import GaugeFactor, addition

    op = _operand(args.operand, _parse_params(args.param))
    out = addition(op, GaugeFactor(Fraction(args.lam0), Fraction(args.lam1)))
    _emit_doc(args, OperatorDocument.of(
        out, note=f"addition lam0={args.lam0} lam1={args.lam1}",
        with_scheme=False))
    return 0


def _cmd_pipeline(args):
    from .transforms import se3_to_se6, se6_to_se3

    params = _parse_params(args.param)
    if args.direction == "se3-to-se6":
        vals = [params.get(n, frac(n)) for n in "abcgpqr"]
        out = se3_to_se6(*vals)
        _emit_doc(args, OperatorDocument.of(out, note="se3-to-se6 pipeline"))
        return 0
    # se6-to-se3
    op = _operand(args.operand or "SE6", params)
    p, q, r = (params.get(n, frac(n)) for n in "pqr")
    out = se6_to_se3(op, p, q, r)
    _emit_doc(args, OperatorDocument.of(out, note="se6-to-se3 pipeline"))
    return 0


def _table_entry(family, label):
    from .shift_tables import table

    entries = table(family)
    if label not in entries:
        raise SystemExit(f"no shift {label!r} for {family}: "
                         f"have {sorted(entries)}")
    return entries[label]


def _cmd_shift(args):
    from .shift_tables import table
    from .shifts import AnsatzShape, solve_shift, verify_shift

    if args.action == "table":
        entries = table(args.eq)
        lines = []
        rows = []
        for label in sorted(entries):
            pair = entries[label]
            kind = type(pair).__name__
            lines.append(f"{label}: {kind} ({pair.source})"
                         if getattr(pair, "source", "") else f"{label}: {kind}")
            rows.append({"shift": label, "kind": kind,
                         "source": getattr(pair, "source", "")})
        _emit(args, "\n".join(lines) + "\n", {"family": args.eq, "entries": rows})
        return 0
    if args.action == "verify":
        pair = _table_entry(args.eq, args.shift)
        result = verify_shift(pair, mode=args.mode, seed=args.seed)
        status = "pass" if result.ok else "fail"
        detail = f"slots {list(result.slots)}" if not result.ok else ""
        _emit(args, f"{status} {args.eq} {args.shift} {args.mode}"
              + (f" ({detail})" if detail else "") + "\n",
              {"family": args.eq, "shift": args.shift, "mode": args.mode,
               "status": status, "slots": [list(s) for s in result.slots]})
        return 0 if result.ok else 1
    if args.action == "solve":
        shape = AnsatzShape(*(int(v) for v in args.shape.split(",")))
        sol = solve_shift(args.eq, _parse_shift(args.shift), shape,
                          mode=args.mode, seed=args.seed)
        if args.mode == "symbolic":
            doc = OperatorDocument.of(sol.P, note=f"shift {args.shift} solved",
                                      with_scheme=False)
            _emit_doc(args, doc)
        else:
            body = []
            for assignment, P, _Q in sol.solutions:
                asg = ", ".join(f"{k}={v}" for k, v in sorted(assignment.items()))
                body.append(f"at {asg}:")
                body.append(serialize(OperatorDocument.of(
                    P, with_scheme=False)).rstrip())
            _emit(args, "\n".join(body) + "\n",
                  {"samples": [
                      {"assignment": {k: str(v) for k, v in a.items()},
                       "P": [frac_text(c.raw) for c in P.coeffs]}
                      for a, P, _q in sol.solutions]})
        return 0
    raise SystemExit(f"unknown shift action {args.action!r}")


def _cmd_svalue(args):
    from .shift_tables import svalue_cases, table
    from .shifts import svalue_matches

    cases = {c.name: c for c in svalue_cases(args.eq)}
    wanted = [args.name] if args.name else sorted(cases)
    entries = table(args.eq)
    rows = []
    ok_all = True
    for name in wanted:
        if name not in cases:
            raise SystemExit(f"no round trip {name!r} for {args.eq}: "
                             f"have {sorted(cases)}")
        case = cases[name]
        ok, ratio = svalue_matches(args.eq, entries[case.minus],
                                   entries[case.plus], case.formula,
                                   count=args.count, seed=args.seed)
        ok_all = ok_all and ok
        rows.append((name, ok, ratio, case.formula))
    text = "\n".join(
        f"{'pass' if ok else 'fail'} {args.eq} {name}: ratio {ratio}"
        for name, ok, ratio, _f in rows) + "\n"
    _emit(args, text,
          {"family": args.eq,
           "cases": [{"name": n, "status": "pass" if ok else "fail",
                      "ratio": str(r), "formula": str(f)}
                     for n, ok, r, f in rows]})
    return 0 if ok_all else 1


def _witness_json(witness, target=None):
    out = {
        "mechanism": witness.mechanism,
        "orders": list(witness.factor_orders()),
        "factors": [[frac_text(c.raw) for c in op.coeffs]
                    for op in witness.leaf_factors()],
    }
    if witness.gauss_params:
        out["gauss_params"] = [str(v) for v in witness.gauss_params]
    if target is not None:
        out["recompose_exact"] = bool(witness.recompose() == target)
    return out


def _cmd_reduce(args):
    import random

    from .reducibility import (
        apparent_flag,
        factor_type_witness,
        locus_table,
        on_locus_assignment,
    )

    if args.action == "table":
        loci = locus_table(args.eq)
        lines = [f"{l.name}: {l.expression} integer -> type "
                 f"{list(l.factor_type)}" + (f" ({l.description})"
                                             if l.description else "")
                 for l in loci]
        _emit(args, "\n".join(lines) + "\n",
              {"family": args.eq,
               "loci": [{"name": l.name, "expression": str(l.expression),
                         "factor_type": list(l.factor_type),
                         "description": l.description} for l in loci]})
        return 0
    # reduce check
    loci = {l.name: l for l in locus_table(args.eq)}
    # allow matching by the leading word of the description (e.g. C1)
    for l in list(loci.values()):
        tag = l.description.split(":")[0].strip()
        if tag and tag not in loci:
            loci[tag] = l
    if args.locus not in loci:
        raise SystemExit(f"no locus {args.locus!r} for {args.eq}: "
                         f"have {sorted(loci)}")
    locus = loci[args.locus]
    rng = random.Random(args.seed)
    value = Fraction(args.value) if args.value is not None else None
    assignment = on_locus_assignment(locus, rng, value=value)
    op = make(args.eq, assignment).op
    witness = factor_type_witness(op, locus.factor_type)
    flag = apparent_flag(witness)
    asg_s = ", ".join(f"{k}={v}" for k, v in sorted(assignment.items()))
    text = (f"locus {locus.name} of {args.eq} at {asg_s}\n"
            f"factor orders (left to right): {list(witness.factor_orders())}\n"
            f"mechanism: {witness.mechanism}\n"
            f"singular only at 0, 1, inf: {flag}\n")
    _emit(args, text,
          {"family": args.eq, "locus": locus.name,
           "assignment": {k: str(v) for k, v in sorted(assignment.items())},
           "witness": _witness_json(witness, op),
           "apparent_flag": flag})
    return 0


# ---------------------------------------------------------------------------
# reproduce suites


def _suite_catalog(seed):
    jobs = []

    def check_family(name):
        def run():
            entry = make(name, {"a00": frac("acc")} if name == "E3" else {})
            n = entry.op.order
            total = entry.scheme.fuchs_sum()
            want = frac(Fraction(n * (n - 1), 2))
            return total == want, f"order {n}"
        return run

    for name in NAMES:
        jobs.append((f"catalog:{name}:fuchs", check_family(name)))
    return jobs


def _suite_svalues(seed):
    from .shift_tables import svalue_cases, table
    from .shifts import svalue_matches

    jobs = []

    def check_case(family, case):
        def run():
            entries = table(family)
            ok, ratio = svalue_matches(family, entries[case.minus],
                                       entries[case.plus], case.formula,
                                       count=3, seed=seed)
            return ok, f"ratio {ratio}"
        return run

    for family in ("E4", "E5", "E6", "SE6", "SE5", "SE4"):
        for case in svalue_cases(family):
            jobs.append((f"svalue:{family}:{case.name}", check_case(family, case)))
    return jobs


def _suite_shifts(seed):
    from .shift_tables import table
    from .shifts import verify_shift

    jobs = []

    def check_pair(family, label):
        def run():
            result = verify_shift(table(family)[label], mode="sampled:2",
                                  seed=seed)
            return result.ok, ("" if result.ok else f"slots {list(result.slots)}")
        return run

    for family in ("E4", "E5", "E6", "SE6", "SE5", "SE4"):
        for label in sorted(table(family)):
            jobs.append((f"shift:{family}:{label}", check_pair(family, label)))
    return jobs


def _suite_mc(seed):
    import random

    from .transforms import mc, se3_to_se6
    from .weyl import proportional

    jobs = []

    def pipeline_sample(k):
        def run():
            rng = random.Random(seed + k)
            vals = {n: Fraction(rng.randint(1, 30), rng.choice((2, 3)))
                    for n in "abcgpqr"}
            built = se3_to_se6(*(vals[n] for n in "abcgpqr"))
            target = make("SE6", vals).op
            return proportional(built, target), ""
        return run

    def involution(k):
        def run():
            rng = random.Random(seed + 100 + k)
            mu = Fraction(rng.randint(1, 20), rng.choice((2, 3)))
            base = make("E2", {"A": Fraction(rng.randint(1, 9), 2),
                               "B": Fraction(rng.randint(1, 9), 3),
                               "C": Fraction(rng.randint(1, 9), 2)}).op
            once, _ = mc(base, mu)
            back, _ = mc(once, -mu)
            return proportional(back, base), ""
        return run

    for k in range(2):
        jobs.append((f"mc:pipeline:{k}", pipeline_sample(k)))
        jobs.append((f"mc:involution:{k}", involution(k)))
    return jobs


def _suite_reducibility(seed):
    import random

    from .reducibility import (
        factor_type_witness,
        locus_table,
        on_locus_assignment,
    )

    jobs = []

    def check_locus(family, locus):
        def run():
            rng = random.Random(seed)
            assignment = on_locus_assignment(locus, rng)
            op = make(family, assignment).op
            witness = factor_type_witness(op, locus.factor_type)
            return (witness.recompose() == op,
                    f"orders {list(witness.factor_orders())}")
        return run

    for family in ("E6", "E5", "SE6"):
        for locus in locus_table(family)[:3]:
            jobs.append((f"reduce:{family}:{locus.name}",
                         check_locus(family, locus)))
    return jobs


_SUITES = {
    "catalog": _suite_catalog,
    "svalues": _suite_svalues,
    "shifts": _suite_shifts,
    "mc": _suite_mc,
    "reducibility": _suite_reducibility,
}


def _cmd_reproduce(args):
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    jobs = []
    for name in names:
        jobs.extend(_SUITES[name](args.seed))
    report = _run_checks(args.suite, args.seed, jobs)
    _emit(args, report.to_text(), report.to_json())
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------
# argument parsing


def _add_common(sub):
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--out", default=None)
    sub.add_argument("--seed", type=int, default=7)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="fuchsian-ops",
        description="Exact computations with parametric Fuchsian operators")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("catalog", help="show a catalog operator")
    p.add_argument("action", choices=("show", "list"))
    p.add_argument("name", nargs="?", default=None)
    p.add_argument("--param", action="append", metavar="NAME=VALUE")
    _add_common(p)
    p.set_defaults(fn=_cmd_catalog)

    p = subs.add_parser("mul", help="compose two operators")
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p.add_argument("--param", action="append", metavar="NAME=VALUE")
    _add_common(p)
    p.set_defaults(fn=_cmd_mul)

    p = subs.add_parser("divrem", help="Euclidean division of operators")
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p.add_argument("--side", choices=("right", "left"), default="right")
    p.add_argument("--param", action="append", metavar="NAME=VALUE")
    _add_common(p)
    p.set_defaults(fn=_cmd_divrem)

    p = subs.add_parser("mc", help="middle convolution")
    p.add_argument("operand")
    p.add_argument("--mu", required=True)
    p.add_argument("--param", action="append", metavar="NAME=VALUE")
    _add_common(p)
    p.set_defaults(fn=_cmd_mc)

    p = subs.add_parser("addition", help="gauge by x^lam0 (x-1)^lam1")
    p.add_argument("operand")
    p.add_argument("--lam0", required=True)
    p.add_argument("--lam1", required=True)
    p.add_argument("--param", action="append", metavar="NAME=VALUE")
    _add_common(p)
    p.set_defaults(fn=_cmd_addition)

    p = subs.add_parser("pipeline", help="order-3 <-> order-6 pipelines")
    p.add_argument("direction", choices=("se3-to-se6", "se6-to-se3"))
    p.add_argument("operand", nargs="?", default=None)
    p.add_argument("--param", action="append", metavar="NAME=VALUE")
    _add_common(p)
    p.set_defaults(fn=_cmd_pipeline)

    p = subs.add_parser("shift", help="shift operators of a family")
    p.add_argument("action", choices=("table", "verify", "solve"))
    p.add_argument("--eq", required=True)
    p.add_argument("--shift", default=None)
    p.add_argument("--shape", default="2,2,5",
                   help="ansatz x-degree, d-degree, theta-degree")
    p.add_argument("--mode", default="sampled:5")
    _add_common(p)
    p.set_defaults(fn=_cmd_shift)

    p = subs.add_parser("svalue", help="round-trip constants of a family")
    p.add_argument("--eq", required=True)
    p.add_argument("--name", default=None)
    p.add_argument("--count", type=int, default=5)
    _add_common(p)
    p.set_defaults(fn=_cmd_svalue)

    p = subs.add_parser("reduce", help="reducibility loci and witnesses")
    p.add_argument("action", choices=("table", "check"))
    p.add_argument("--eq", required=True)
    p.add_argument("--locus", default=None)
    p.add_argument("--value", default=None)
    _add_common(p)
    p.set_defaults(fn=_cmd_reduce)

    p = subs.add_parser("reproduce", help="run a deterministic check suite")
    p.add_argument("suite", choices=tuple(_SUITES) + ("all",))
    _add_common(p)
    p.set_defaults(fn=_cmd_reproduce)

    return parser


def cli_main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


def main():
    raise SystemExit(cli_main())


if __name__ == "__main__":
    main()
