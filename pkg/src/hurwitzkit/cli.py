"""Command-line front end: expand, classify, verify, gen, selfcheck.

Coefficients are comma-separated exact rationals in descending powers
("1,-3/2,0,2"); files use the same grammar, one polynomial per line, tagged
"h:" (numerator) or "g:" (denominator), with blank lines and "#" comments
ignored.  Rationals are always printed as "p/q" or "p", never as decimals.

Exit codes: 0 Hurwitz / all checks pass, 1 NotHurwitz / a check failed,
2 usage or input error, 3 non-coprime input without --reduce.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .polynomials import Polynomial, parse_rational
from .series import NotCoprimeError, RationalFunction, laurent_expand, make_rational_function
from .stability import (
    IdentityReport,
    StabilityReport,
    classify_polynomial,
    classify_rational,
    verify_determinant_identities,
    verify_rational_hankel_relations,
)
from .selfcheck import run_selfcheck
from .testgen import Tamper, generate_instance, truth_verdict

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_NOT_COPRIME = 3

MAX_GEN_DEGREE = 8


def parse_coeff_list(text: str) -> Polynomial:
    """Parse a comma-separated descending coefficient list; leading entry must be nonzero."""
    tokens = [tok.strip() for tok in text.split(",")]
    if not tokens or tokens == [""]:
        raise ValueError("empty coefficient list")
    values = [parse_rational(tok) for tok in tokens]
    if values[0] == 0:
        raise ValueError(f"leading coefficient is zero in {text!r}")
    return Polynomial(tuple(values))


def format_coeffs(poly: Polynomial) -> str:
    return ",".join(str(c) for c in poly.coeffs)


def _read_tagged_file(path: str) -> dict[str, Polynomial]:
    found: dict[str, Polynomial] = {}
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise ValueError(f"untagged line in {path!r}: {line!r}")
        tag, payload = line.split(":", 1)
        tag = tag.strip()
        if tag not in ("h", "g"):
            raise ValueError(f"unknown tag {tag!r} in {path!r}")
        if tag in found:
            raise ValueError(f"duplicate tag {tag!r} in {path!r}")
        found[tag] = parse_coeff_list(payload)
    return found


def _load_pair(args: argparse.Namespace) -> tuple[Polynomial, Polynomial]:
    if args.file:
        if args.num or args.den:
            raise ValueError("give either --file or --num/--den, not both")
        tagged = _read_tagged_file(args.file)
        if "h" not in tagged or "g" not in tagged:
            raise ValueError(f"file {args.file!r} must carry one h: line and one g: line")
        return tagged["h"], tagged["g"]
    if not args.num or not args.den:
        raise ValueError("both --num and --den are required (or use --file)")
    return parse_coeff_list(args.num), parse_coeff_list(args.den)


def _emit(doc: dict, text: str, as_json: bool) -> None:
    if as_json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(text)


def _table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip()]
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return "\n".join(lines)


def _stability_doc(report: StabilityReport) -> dict:
    doc: dict = {
        "verdict": report.verdict.value,
        "order": report.order,
        "hurwitz_minors": [str(v) for v in report.hurwitz_minors],
        "first_failure": report.first_failure,
    }
    if report.interleaved_minors is not None:
        doc["interleaved_minors"] = [str(v) for v in report.interleaved_minors]
    if report.hankel is not None:
        doc["hankel"] = {
            "constant_term": str(report.hankel.constant_term),
            "minors": [str(v) for v in report.hankel.minors],
            "shifted_minors": [str(v) for v in report.hankel.shifted_minors],
        }
    return doc


def _stability_text(report: StabilityReport) -> str:
    lines = [f"verdict: {report.verdict.value}", f"order: {report.order}"]
    if report.first_failure is not None:
        lines.append(f"first non-positive minor: {report.first_failure}")
    headers = ["j", "hurwitz_minor"]
    if report.interleaved_minors is not None:
        headers.append("interleaved_minor")
    rows = []
    for j, value in enumerate(report.hurwitz_minors, start=1):
        row = [str(j), str(value)]
        if report.interleaved_minors is not None:
            row.append(str(report.interleaved_minors[j - 1]))
        rows.append(row)
    lines.append(_table(headers, rows))
    if report.hankel is not None:
        lines.append(f"associated constant term: {report.hankel.constant_term}")
        if report.hankel.minors:
            rows = [
                [str(j), str(d), str(s)]
                for j, (d, s) in enumerate(
                    zip(report.hankel.minors, report.hankel.shifted_minors), start=1
                )
            ]
            lines.append(_table(["j", "hankel_minor", "shifted_hankel_minor"], rows))
    return "\n".join(lines)


def _identity_doc(report: IdentityReport, finding: str) -> dict:
    return {
        "all_passed": report.all_passed,
        "records": [
            {
                "name": r.name,
                "order": r.order,
                "left": None if r.left is None else str(r.left),
                "right": None if r.right is None else str(r.right),
                "passed": r.passed,
                "applicable": r.applicable,
            }
            for r in report.records
        ],
        "sign_probes": [
            {
                "order": p.order,
                "minor": str(p.minor),
                "plain": str(p.plain),
                "alternating": str(p.alternating),
                "matches_plain": p.matches_plain,
                "matches_alternating": p.matches_alternating,
                "informative": p.informative,
            }
            for p in report.probes
        ],
        "sign_probe_finding": finding,
    }


def _identity_text(report: IdentityReport, finding: str) -> str:
    rows = []
    for r in report.records:
        if not r.applicable:
            rows.append([r.name, str(r.order), "-", "-", "n/a"])
        else:
            rows.append([r.name, str(r.order), str(r.left), str(r.right), "pass" if r.passed else "FAIL"])
    lines = [_table(["identity", "j", "left", "right", "status"], rows)]
    if report.probes:
        probe_rows = [
            [
                str(p.order),
                str(p.minor),
                str(p.plain),
                str(p.alternating),
                ("alternating" if p.matches_alternating else "plain" if p.matches_plain else "neither")
                if p.informative
                else "uninformative",
            ]
            for p in report.probes
        ]
        lines.append(_table(["probe_j", "minor", "plain", "alternating", "matches"], probe_rows))
    lines.append(f"even-order sign probe finding: {finding}")
    lines.append(f"asserted identities: {'all pass' if report.all_passed else 'FAILURES'}")
    return "\n".join(lines)


def _cmd_expand(args: argparse.Namespace) -> int:
    num, den = _load_pair(args)
    function = make_rational_function(num, den, auto_reduce=args.reduce)
    depth = args.terms if args.terms is not None else 2 * function.order - 1
    if depth < 0:
        raise ValueError("number of terms must be >= 0")
    prefix = laurent_expand(function, depth)
    doc = {
        "command": "expand",
        "order": function.order,
        "leading_exponent": prefix.leading_exponent,
        "coefficients": [str(c) for c in prefix.coeffs],
    }
    text = "\n".join(
        [
            f"order: {function.order}",
            f"leading exponent: {prefix.leading_exponent}",
            "coefficients: " + ",".join(str(c) for c in prefix.coeffs),
        ]
    )
    _emit(doc, text, args.json)
    return EXIT_OK


def _cmd_classify(args: argparse.Namespace) -> int:
    if args.kind == "poly":
        poly = parse_coeff_list(args.coeffs)
        report = classify_polynomial(poly)
    else:
        num, den = _load_pair(args)
        function = make_rational_function(num, den, auto_reduce=args.reduce)
        report = classify_rational(
            function, include_interleaved=args.omega, include_hankel=args.hankel
        )
    doc = {"command": "classify", "kind": args.kind, **_stability_doc(report)}
    if args.kind == "poly" and not args.hankel:
        doc.pop("hankel", None)
        report_text = StabilityReport(
            report.verdict,
            report.order,
            report.hurwitz_minors,
            interleaved_minors=report.interleaved_minors,
            first_failure=report.first_failure,
        )
    else:
        report_text = report
    _emit(doc, _stability_text(report_text), args.json)
    return EXIT_OK if report.is_hurwitz else EXIT_FAIL


def _cmd_verify(args: argparse.Namespace) -> int:
    num, den = _load_pair(args)
    function = make_rational_function(num, den, auto_reduce=args.reduce)
    identities = verify_determinant_identities(function, extra=args.extra)
    relations = verify_rational_hankel_relations(function)
    combined = IdentityReport(identities.records + relations.records, relations.probes)
    finding = combined.probe_finding()
    doc = {"command": "verify", "order": function.order, **_identity_doc(combined, finding)}
    _emit(doc, _identity_text(combined, finding), args.json)
    return EXIT_OK if combined.all_passed else EXIT_FAIL


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.num_degree > MAX_GEN_DEGREE or args.den_degree > MAX_GEN_DEGREE:
        raise ValueError(f"degree limit exceeded (max {MAX_GEN_DEGREE})")
    tamper = Tamper(args.tamper)
    instance = generate_instance(args.seed, args.num_degree, args.den_degree, tamper)
    truth = truth_verdict(instance)
    doc = {
        "command": "gen",
        "seed": args.seed,
        "num_degree": args.num_degree,
        "den_degree": args.den_degree,
        "tamper": tamper.value,
        "numerator": format_coeffs(instance.numerator),
        "denominator": format_coeffs(instance.denominator),
        "numerator_roots": _root_doc(instance.numerator_spec),
        "denominator_roots": _root_doc(instance.denominator_spec),
        "truth": truth,
    }
    text_lines = [
        f"# seed {args.seed}  degrees {args.num_degree}/{args.den_degree}  tamper {tamper.value}",
        f"# numerator roots: {_root_text(instance.numerator_spec)}",
        f"# denominator roots: {_root_text(instance.denominator_spec)}",
        f"# truth: {'Hurwitz' if truth else 'NotHurwitz'}",
        f"h: {format_coeffs(instance.numerator)}",
        f"g: {format_coeffs(instance.denominator)}",
    ]
    _emit(doc, "\n".join(text_lines), args.json)
    return EXIT_OK


def _root_doc(spec) -> dict:
    return {
        "leading": str(spec.leading),
        "real_roots": [str(r) for r in spec.real_roots],
        "complex_pairs": [
            {"real": str(p.real), "modulus_sq": str(p.modulus_sq)} for p in spec.complex_pairs
        ],
    }


def _root_text(spec) -> str:
    parts = [f"leading {spec.leading}"]
    if spec.real_roots:
        parts.append("real " + ", ".join(str(r) for r in spec.real_roots))
    if spec.complex_pairs:
        parts.append(
            "pairs " + ", ".join(f"(re={p.real}, |z|^2={p.modulus_sq})" for p in spec.complex_pairs)
        )
    return "; ".join(parts)


def _cmd_selfcheck(args: argparse.Namespace) -> int:
    results, finding = run_selfcheck(args.cases, args.seed)
    for result in results:
        print(result.summary_line())
        for failure in result.failures:
            print(f"    {failure}")
    print(f"sign probe finding: {finding}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def _add_pair_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--num", "-n", help="numerator coefficients, descending powers")
    parser.add_argument("--den", "-d", help="denominator coefficients, descending powers")
    parser.add_argument("--file", "-f", help="read h:/g: tagged coefficient lines from a file")
    parser.add_argument(
        "--reduce", action="store_true", help="divide out a shared factor instead of failing"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitzkit",
        description="Exact Hurwitz stability certification for polynomials and rational functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", help="expansion of a rational function at infinity")
    _add_pair_arguments(p_expand)
    p_expand.add_argument("-K", "--terms", type=int, default=None,
                          help="last coefficient index (default 2*order-1)")
    p_expand.add_argument("--json", action="store_true", help="emit one JSON document")
    p_expand.set_defaults(handler=_cmd_expand)

    p_classify = sub.add_parser("classify", help="decide Hurwitz stability")
    classify_sub = p_classify.add_subparsers(dest="kind", required=True)
    p_poly = classify_sub.add_parser("poly", help="classify a polynomial")
    p_poly.add_argument("coeffs", help="coefficients, descending powers")
    p_poly.add_argument("--hankel", action="store_true",
                        help="show the associated-function Hankel evidence")
    p_poly.add_argument("--json", action="store_true", help="emit one JSON document")
    p_poly.set_defaults(handler=_cmd_classify, kind="poly", omega=False)
    p_rat = classify_sub.add_parser("rational", help="classify a rational function")
    _add_pair_arguments(p_rat)
    p_rat.add_argument("--omega", action="store_true",
                       help="also evaluate the interleaved coefficient determinants")
    p_rat.add_argument("--hankel", action="store_true",
                       help="show the associated-function Hankel evidence")
    p_rat.add_argument("--json", action="store_true", help="emit one JSON document")
    p_rat.set_defaults(handler=_cmd_classify, kind="rational")

    p_verify = sub.add_parser("verify", help="verify the determinant identities of a pair")
    _add_pair_arguments(p_verify)
    p_verify.add_argument("--extra", type=int, default=0,
                          help="how many orders past the function order to check for vanishing")
    p_verify.add_argument("--json", action="store_true", help="emit one JSON document")
    p_verify.set_defaults(handler=_cmd_verify)

    p_gen = sub.add_parser("gen", help="generate a ground-truth instance")
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--num-degree", type=int, required=True)
    p_gen.add_argument("--den-degree", type=int, required=True)
    p_gen.add_argument("--tamper", choices=[t.value for t in Tamper], default=Tamper.NONE.value,
                       help="flip the real part of one root of the named factor")
    p_gen.add_argument("--json", action="store_true", help="emit one JSON document")
    p_gen.set_defaults(handler=_cmd_gen)

    p_self = sub.add_parser("selfcheck", help="run the seeded property suite")
    p_self.add_argument("--cases", type=int, default=200)
    p_self.add_argument("--seed", type=int, default=0)
    p_self.set_defaults(handler=_cmd_selfcheck)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except NotCoprimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_COPRIME
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
