"""Command-line interface.

Every subcommand accepts --format {table,json,csv} (default table) and
--out PATH (default stdout). JSON output is a fixed envelope

    {"meta": {"command", "params", "version", "generated_at"},
     "results": [...], "violations": [...]}

in which all integers are decimal strings (arbitrary precision survives
any JSON reader), rationals are {"num", "den"} pairs, polynomials are
constant-first coefficient arrays, and quadratic surds (P + sqrt(D))/Q are
{"P", "D", "Q"} triples. Two runs with the same arguments produce
byte-identical output except for meta.generated_at.

Exit codes: 0 success; 1 a mathematical statement the run was asked to
verify failed; 2 bad usage or parameters; 3 precision or iteration budget
exhausted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from typing import Optional

from . import __version__
from .bigfloat import BigFloat
from .cf import convergents
from .errors import (
    BudgetExceeded,
    DomainError,
    IdentityViolation,
    PrecisionInsufficient,
)
from .families import (
    GF_KINDS,
    InterlaceParams,
    ab_polynomials,
    check_identity_suite,
    convergence_certificate,
    fibonacci_analogy_check,
    gf_check,
    identity_names,
    make_interlaced,
    make_tilde,
    reference_rows,
    tilde_polynomial_spec,
)
from .lab import conjecture_scan, euler_check, f_value, quadratic_pattern
from .polynomial import Polynomial
from .qseries import SELECTORS, stabilization_report
from .surd import QuadraticSurd

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_EXHAUSTED = 3


# ---------------------------------------------------------------------------
# Serialization.
# ---------------------------------------------------------------------------


def ser(value):
    """Recursive JSON-safe encoding with all integers as decimal strings."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, Fraction):
        return {"num": str(value.numerator), "den": str(value.denominator)}
    if isinstance(value, Polynomial):
        return [str(c) for c in value.coeffs]
    if isinstance(value, QuadraticSurd):
        return {"P": str(value.P), "D": str(value.D), "Q": str(value.Q)}
    if isinstance(value, BigFloat):
        return {"decimal": value.decimal_string(max(8, int(value.bits * 0.30103))), "bits": str(value.bits)}
    if isinstance(value, str):
        return value
    if isinstance(value, dict):
        return {k: ser(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [ser(v) for v in value]
    raise TypeError(f"no serialization for {type(value).__name__}")


def cell(value) -> str:
    """Flat text form for table/CSV cells."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(value.numerator)
    if isinstance(value, Polynomial):
        return str(value)
    if isinstance(value, QuadraticSurd):
        return str(value)
    if isinstance(value, (list, tuple)):
        return " ".join(cell(v) for v in value)
    return str(value)


@dataclass
class Report:
    """Uniform result bundle every subcommand hands to the writers."""

    command: str
    params: dict
    columns: list
    rows: list = field(default_factory=list)
    results: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, row_cells: list, result: dict):
        self.rows.append([cell(c) for c in row_cells])
        self.results.append(ser(result))

    def violate(self, kind: str, detail: dict):
        self.violations.append(ser({"kind": kind, **detail}))


def write_report(report: Report, fmt: str, out_path: Optional[str]) -> None:
    if fmt == "json":
        payload = {
            "meta": {
                "command": report.command,
                "params": ser(report.params),
                "version": __version__,
                "generated_at": datetime.now(timezone.utc).isoformat(),
            },
            "results": report.results,
            "violations": report.violations,
        }
        if report.notes:
            payload["meta"]["notes"] = list(report.notes)
        text = json.dumps(payload, indent=2) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(report.columns)
        writer.writerows(report.rows)
        text = buf.getvalue()
    else:
        widths = [len(str(c)) for c in report.columns]
        for row in report.rows:
            for i, c in enumerate(row):
                widths[i] = max(widths[i], len(c))
        lines = []
        header = "  ".join(str(c).ljust(widths[i]) for i, c in enumerate(report.columns))
        lines.append(header)
        lines.append("  ".join("-" * w for w in widths))
        for row in report.rows:
            lines.append("  ".join(c.ljust(widths[i]) for i, c in enumerate(row)))
        for note in report.notes:
            lines.append(f"note: {note}")
        for v in report.violations:
            lines.append(f"VIOLATION: {json.dumps(v)}")
        text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# Subcommand handlers. Each returns a Report.
# ---------------------------------------------------------------------------


def cmd_table1(args) -> Report:
    report = Report(
        command="table1",
        params={},
        columns=["j", "A", "B", "matches_reference"],
    )
    table = ab_polynomials(1, 10)
    for j, (ref_a, ref_b) in enumerate(reference_rows()):
        a, b = table.A[j], table.B[j]
        ok = a == ref_a and b == ref_b
        report.add(
            [j, a, b, ok],
            {"j": j, "A": a, "B": b, "matches_reference": ok},
        )
        if not ok:
            report.violate(
                "reference-table-mismatch",
                {"j": j, "generated_A": a, "generated_B": b, "reference_A": ref_a, "reference_B": ref_b},
            )
    return report


def cmd_convergents(args) -> Report:
    params = {"s": args.s, "jmax": args.jmax, "x": args.x, "family": args.family}
    report = Report(command="convergents", params=params, columns=["j", "A", "B", "value"])
    if args.x is None:
        if args.family != "tilde":
            raise DomainError("symbolic convergents are available for the tilde family only")
        spec = tilde_polynomial_spec(args.s)
        for conv in convergents(spec, args.jmax + 1):
            report.add(
                [conv.index, conv.A, conv.B, ""],
                {"j": conv.index, "A": conv.A, "B": conv.B},
            )
    else:
        params_obj = InterlaceParams(x=args.x, s=args.s)
        spec = make_tilde(params_obj) if args.family == "tilde" else make_interlaced(params_obj)
        for conv in convergents(spec, args.jmax + 1):
            value = conv.value()
            report.add(
                [conv.index, conv.A, conv.B, value],
                {"j": conv.index, "A": Fraction(conv.A), "B": Fraction(conv.B), "value": value},
            )
    return report


def cmd_identities(args) -> Report:
    params = {"s": args.s, "jmax": args.jmax, "suite": args.suite}
    report = Report(
        command="identities",
        params=params,
        columns=["identity", "range", "expected_zero", "all_zero", "consistent", "first_nonzero"],
    )
    names = None if args.suite == "all" else [args.suite]
    if names and names[0] not in identity_names():
        raise DomainError(f"unknown identity {names[0]!r}; known: {', '.join(identity_names())}")
    for rep in check_identity_suite(args.s, args.jmax, names):
        first = rep.nonzero[0] if rep.nonzero else None
        report.add(
            [
                rep.name,
                f"{rep.jmin}..{rep.jmax}",
                rep.expected_zero,
                rep.all_zero,
                rep.consistent,
                f"j={first[0]}: {first[1]}" if first else "",
            ],
            {
                "identity": rep.name,
                "s": rep.s,
                "jmin": rep.jmin,
                "jmax": rep.jmax,
                "checked": rep.checked,
                "expected_zero": rep.expected_zero,
                "all_zero": rep.all_zero,
                "consistent": rep.consistent,
                "first_nonzero": (
                    {"j": first[0], "residual": first[1]} if first else None
                ),
            },
        )
        if not rep.consistent:
            report.violate(
                "identity-residual",
                {"identity": rep.name, "s": rep.s, "expected_zero": rep.expected_zero},
            )
    return report


def cmd_gfcheck(args) -> Report:
    params = {"s": args.s, "order": args.order, "kind": args.kind}
    report = Report(
        command="gfcheck",
        params=params,
        columns=["kind", "order", "residual_zero", "first_nonzero_index"],
    )
    kinds = GF_KINDS if args.kind == "all" else (args.kind,)
    for kind in kinds:
        residual = gf_check(kind, args.s, args.order)
        first = None
        for i in range(residual.order):
            if residual.coeffs[i]:
                first = i
                break
        ok = first is None
        report.add(
            [kind, args.order, ok, first if first is not None else ""],
            {"kind": kind, "order": args.order, "residual_zero": ok, "first_nonzero_index": first},
        )
        if not ok:
            report.violate("generating-function-residual", {"kind": kind, "index": first})
    return report


def cmd_certify(args) -> Report:
    params = {"x": args.x, "s": args.s, "k": args.k, "side": args.side}
    report = Report(
        command="certify",
        params=params,
        columns=["x", "s", "k", "side", "index", "convergent", "residual", "predicted", "above_root"],
    )
    sides = ("odd", "even") if args.side == "both" else (args.side,)
    for side in sides:
        for k in range(1, args.k + 1):
            cert = convergence_certificate(args.x, args.s, k, side)
            report.add(
                [cert.x, cert.s, cert.k, cert.side, cert.index, cert.convergent, cert.residual, cert.predicted, cert.above_root],
                {
                    "x": cert.x,
                    "s": cert.s,
                    "k": cert.k,
                    "side": cert.side,
                    "index": cert.index,
                    "convergent": cert.convergent,
                    "residual": cert.residual,
                    "predicted": cert.predicted,
                    "above_root": cert.above_root,
                },
            )
    return report


def cmd_fib_analogy(args) -> Report:
    params = {"x": args.x, "n": args.n}
    report = Report(
        command="fib-analogy",
        params=params,
        columns=["x", "n", "value", "residual", "predicted", "ok"],
    )
    for n in range(1, args.n + 1):
        check = fibonacci_analogy_check(args.x, n)
        report.add(
            [check.x, check.n, check.value, check.residual, check.predicted, check.ok],
            {
                "x": check.x,
                "n": check.n,
                "value": check.value,
                "residual": check.residual,
                "predicted": check.predicted,
                "ok": check.ok,
            },
        )
        if not check.ok:
            report.violate("constant-fraction-residual", {"x": check.x, "n": check.n})
    return report


def cmd_qseries(args) -> Report:
    params = {"selector": args.selector, "kmax": args.kmax, "order": args.order}
    report = Report(
        command="qseries",
        params=params,
        columns=["selector", "k", "agreement", "companion"],
    )
    selectors = SELECTORS if args.selector == "all" else (args.selector,)
    for selector in selectors:
        rep = stabilization_report(selector, args.kmax, args.order)
        report.notes.append(f"{selector}: {rep.notes}")
        if rep.catalogue_tag:
            report.notes.append(f"{selector}: catalogued coefficient sequence {rep.catalogue_tag}")
        for row in rep.rows:
            report.add(
                [selector, row.k, row.agreement, row.extra if row.extra else ""],
                {
                    "selector": selector,
                    "k": row.k,
                    "agreement": row.agreement,
                    "coefficients": list(row.coefficients),
                    "companion": list(row.extra) if row.extra else None,
                },
            )
        if not rep.nondecreasing:
            report.violate("stabilization-not-monotone", {"selector": selector, "agreements": rep.agreements})
    return report


def cmd_scan(args) -> Report:
    params = {
        "xmin": args.xmin,
        "xmax": args.xmax,
        "ymin": args.ymin,
        "ymax": args.ymax,
        "precision": args.precision,
        "max_terms": args.max_terms,
    }
    report = Report(
        command="scan",
        params=params,
        columns=["x", "y", "validated", "verdict", "preperiod", "period", "max_quotient", "geometric_mean"],
    )
    report.notes.append(
        "periodicity verdicts are heuristic: smallest (preperiod, period) with two "
        "full repetitions consistent across the whole validated digit prefix"
    )
    cells = conjecture_scan(
        range(args.xmin, args.xmax + 1),
        range(args.ymin, args.ymax + 1),
        args.precision,
        args.max_terms,
    )
    for c in cells:
        report.add(
            [c.x, c.y, c.validated, c.verdict, c.preperiod, c.period, c.max_quotient,
             f"{c.geometric_mean:.6g}" if c.geometric_mean is not None else None],
            {
                "x": c.x,
                "y": c.y,
                "precision": c.precision,
                "validated": c.validated,
                "verdict": c.verdict,
                "preperiod": c.preperiod,
                "period": c.period,
                "max_quotient": c.max_quotient,
                "geometric_mean": c.geometric_mean,
                "quotients": list(c.quotients),
            },
        )
    return report


def cmd_euler(args) -> Report:
    params = {"x": args.x, "terms": args.terms, "precision": args.precision}
    report = Report(
        command="euler",
        params=params,
        columns=["i", "digit", "predicted", "match"],
    )
    check = euler_check(args.x, args.terms, args.precision)
    for i, (digit, predicted) in enumerate(zip(check.digits, check.predicted)):
        ok = digit == predicted
        report.add(
            [i, digit, predicted, ok],
            {"i": i, "digit": digit, "predicted": predicted, "match": ok},
        )
    if check.first_mismatch is not None:
        report.violate(
            "quotient-pattern-mismatch",
            {"x": check.x, "first_mismatch": check.first_mismatch},
        )
    return report


def cmd_quadratic_pattern(args) -> Report:
    params = {"a": args.a, "terms": args.terms}
    report = Report(
        command="quadratic-pattern",
        params=params,
        columns=["root", "surd", "shift", "quotients"],
    )
    result = quadratic_pattern(args.a, args.terms)
    report.notes.append(
        "the larger-root expansion is taken after subtracting floor-1, placing the "
        "value in (1, 2) where its structured quotient run begins"
    )
    report.add(
        ["minus-smaller-root", result.minus_smaller_root, 0, list(result.minus_smaller_expansion.terms)],
        {
            "root": "minus-smaller-root",
            "surd": result.minus_smaller_root,
            "shift": 0,
            "quotients": list(result.minus_smaller_expansion.terms),
            "discriminant": result.discriminant,
        },
    )
    report.add(
        ["shifted-larger-root", result.shifted_larger_root, result.shift, list(result.shifted_larger_expansion.terms)],
        {
            "root": "shifted-larger-root",
            "surd": result.shifted_larger_root,
            "shift": result.shift,
            "quotients": list(result.shifted_larger_expansion.terms),
            "discriminant": result.discriminant,
        },
    )
    return report


def cmd_fvalue(args) -> Report:
    params = {"x": args.x, "y": args.y, "precision": args.precision}
    report = Report(
        command="fvalue",
        params=params,
        columns=["x", "y", "depth", "value", "bound"],
    )
    result = f_value(args.x, args.y, args.precision)
    digits = max(8, int(args.precision * 0.30103))
    report.add(
        [args.x, args.y, result.depth, result.value.decimal_string(digits), result.bound.decimal_string(8)],
        {
            "x": args.x,
            "y": args.y,
            "depth": result.depth,
            "value": {"decimal": result.value.decimal_string(digits), "bits": str(result.value.bits)},
            "bound": {"decimal": result.bound.decimal_string(8), "bits": str(result.bound.bits)},
        },
    )
    return report


# ---------------------------------------------------------------------------
# Parser.
# ---------------------------------------------------------------------------


def _add_output_flags(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("table", "json", "csv"), default="table", help="output format")
    p.add_argument("--out", default=None, metavar="PATH", help="write output to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geomcf",
        description=(
            "Exact arithmetic for continued fractions with interlaced geometric "
            "quotients: convergent polynomial tables, identity and generating-"
            "function checks, truncation-error certificates, quadratic-surd "
            "expansions, q-series truncations, and validated numeric scans."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "table1",
        help="reference table of the first 11 convergent polynomial pairs",
        description=(
            "Generate A_0..A_10 and B_0..B_10 at s=1 from the four-term "
            "recurrence and diff each row against the frozen reference table."
        ),
    )
    _add_output_flags(p)
    p.set_defaults(handler=cmd_table1)

    p = sub.add_parser(
        "convergents",
        help="convergent numerators and denominators of the fraction family",
        description=(
            "Forward-recurrence convergents. Without --x, emits the symbolic "
            "polynomial rows of the integer-term (tilde) family at parameter s; "
            "with --x, emits exact rational convergents of the tilde or "
            "interlaced family at that x."
        ),
    )
    p.add_argument("--s", type=int, default=1, help="family parameter s >= 1 (default 1)")
    p.add_argument("--jmax", type=int, default=10, help="largest convergent index (default 10)")
    p.add_argument("--x", type=int, default=None, help="evaluate numerically at integer x")
    p.add_argument("--family", choices=("tilde", "interlaced"), default="tilde")
    _add_output_flags(p)
    p.set_defaults(handler=cmd_convergents)

    p = sub.add_parser(
        "identities",
        help="exact residual checks for the convergent-polynomial identities",
        description=(
            "Verify the catalogue of exact relations among the convergent "
            "polynomials: parity cross-links (odd rows from even rows), "
            "weighted partial sums, second-order gap products equal to "
            "monomials, and the quadratic forms certifying the limit equation. "
            "The historical (2x-1) quadratic-form variants are expected to be "
            "nonzero away from s=1 and are reported, not failed."
        ),
    )
    p.add_argument("--s", type=int, default=1, help="family parameter s >= 1 (default 1)")
    p.add_argument("--jmax", type=int, default=50, help="largest index checked (default 50)")
    p.add_argument("--suite", default="all", help="identity name, or 'all' (default)")
    _add_output_flags(p)
    p.set_defaults(handler=cmd_identities)

    p = sub.add_parser(
        "gfcheck",
        help="generating-function residuals of the polynomial tables",
        description=(
            "Check that each parity class of convergent polynomials has the "
            "rational generating function with denominator "
            "1 - ((s+1)x+1)t + xt^2; the emitted residual series must vanish."
        ),
    )
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--order", type=int, default=16, help="truncation order in t (default 16)")
    p.add_argument("--kind", choices=GF_KINDS + ("all",), default="all")
    _add_output_flags(p)
    p.set_defaults(handler=cmd_gfcheck)

    p = sub.add_parser(
        "certify",
        help="exact truncation-error certificates for convergents",
        description=(
            "For each k up to --k, evaluate s A^2 - ((s+1)x-1) A B - x B^2 at "
            "the odd (A_{2k-1}, B_{2k-1}) or even (A_{2k-2}, B_{2k-2}) "
            "convergent; the result must equal s x^k resp. -x^(k+1) exactly, "
            "and the convergent must sit on the matching side of the limit."
        ),
    )
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--k", type=int, default=10, help="certify k = 1..K (default 10)")
    p.add_argument("--side", choices=("odd", "even", "both"), default="both")
    _add_output_flags(p)
    p.set_defaults(handler=cmd_certify)

    p = sub.add_parser(
        "fib-analogy",
        help="residual law of constant-quotient fractions",
        description=(
            "Evaluate u^2 - xu - 1 at the n-term fraction [x; x, ..., x]; the "
            "exact value is (-1)^n divided by the squared Fibonacci polynomial "
            "f_n(x)^2, checked for n = 1..N."
        ),
    )
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--n", type=int, default=20, help="check n = 1..N (default 20)")
    _add_output_flags(p)
    p.set_defaults(handler=cmd_fib_analogy)

    p = sub.add_parser(
        "qseries",
        help="q-series stabilization of the symbolic truncations [1, x, 1, x^2, ...]",
        description=(
            "Measure how the reduced truncation numerators/denominators of "
            "[1, x, 1, x^2, ...] stabilize onto partition-style series "
            "computed by direct summation, coefficient by coefficient."
        ),
    )
    p.add_argument("--selector", choices=SELECTORS + ("all",), default="all")
    p.add_argument("--kmax", type=int, default=24, help="largest truncation length (default 24)")
    p.add_argument("--order", type=int, default=30, help="series truncation order (default 30)")
    _add_output_flags(p)
    p.set_defaults(handler=cmd_qseries)

    p = sub.add_parser(
        "scan",
        help="periodicity scan over validated digits of interlaced values",
        description=(
            "For each (x, y) in the given rectangle, compute the value of "
            "[x, 1/y, x^2, 1/y^2, ...] at two precisions, keep the agreeing "
            "quotient prefix, and search it for a repeating tail. Diagonal "
            "cells are quadratic irrationals and serve as period-positive "
            "controls."
        ),
    )
    p.add_argument("--xmin", type=int, default=1)
    p.add_argument("--xmax", type=int, required=True)
    p.add_argument("--ymin", type=int, default=1)
    p.add_argument("--ymax", type=int, required=True)
    p.add_argument("--precision", type=int, default=4096, help="bits (default 4096)")
    p.add_argument("--max-terms", type=int, default=200, dest="max_terms")
    _add_output_flags(p)
    p.set_defaults(handler=cmd_scan)

    p = sub.add_parser(
        "euler",
        help="quotient pattern of exp(1/x)",
        description=(
            "Sum exp(1/x) exactly, extract validated quotients, and compare "
            "with the known regular pattern 1; (2n+1)x-1, 1, 1 repeating."
        ),
    )
    p.add_argument("--x", type=int, required=True, help="integer x >= 2")
    p.add_argument("--terms", type=int, default=12)
    p.add_argument("--precision", type=int, default=1024, help="bits (default 1024)")
    _add_output_flags(p)
    p.set_defaults(handler=cmd_euler)

    p = sub.add_parser(
        "quadratic-pattern",
        help="structured quotients of a quadratic-root family",
        description=(
            "Expand (exactly) the roots of x^2 + (3a+3)x + (3a+5): the negated "
            "root near 1 and the negated large root shifted into (1, 2). Their "
            "leading quotients follow powers of 3 against (a-ish) cofactors "
            "until the exact divisibility breaks."
        ),
    )
    p.add_argument("--a", type=int, required=True, help="integer a >= 2")
    p.add_argument("--terms", type=int, default=24)
    _add_output_flags(p)
    p.set_defaults(handler=cmd_quadratic_pattern)

    p = sub.add_parser(
        "fvalue",
        help="high-precision value of one interlaced fraction",
        description=(
            "Evaluate [x, 1/y, x^2, 1/y^2, ...] tail-first along a doubling "
            "depth ladder until two rungs agree to the requested precision; "
            "reports the value, the last rung movement as the error bound, "
            "and the depth used."
        ),
    )
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--precision", type=int, default=256, help="bits (default 256)")
    _add_output_flags(p)
    p.set_defaults(handler=cmd_fvalue)

    return parser


def entry(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        report = args.handler(args)
    except (DomainError,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PrecisionInsufficient, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except IdentityViolation as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    write_report(report, args.format, args.out)
    return EXIT_VIOLATION if report.violations else EXIT_OK


def main() -> None:
    sys.exit(entry())


if __name__ == "__main__":
    main()
