"""Command line surface.

Subcommands: reduce, frobenius, certify, scan, torus-orders, reproduce.
All output is exact (rationals as strings, densities as fraction plus a
decimal rendering) and deterministic: the same inputs and flags produce
byte-identical bytes.  Exit codes: 0 all checks pass, 1 mathematical
precondition or certification failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from typing import Any

from . import __version__
from .arith import primes_up_to
from .certify import (
    VERDICT_CERTIFIED,
    CertificationReport,
    certify_prime,
    scan,
)
from .errors import ExcludedPrimeError, G2CertError, NotPalindromicError
from .golden import EXPECTED, INDEPENDENT, TORUS_TABLE
from .palindromic import (
    TAG_D6,
    classify_galois,
    g2_lift_check,
    independence_check,
    palindromic_reduce,
    ramified_primes,
    temperedness_check,
)
from .poly import RatPoly, deflate_root_one, format_poly
from .polyfile import (
    BUNDLED_NAMES,
    PolyFile,
    PolyFileError,
    bundled_polyfile,
    digest,
    load_polyfile,
)
from .reduction import element_order, excluded_primes, frobenius_class
from .weyl import CLASS_LABELS, torus_order, torus_poly_str

SCHEMA = "g2cert-report-1"


# ---------------------------------------------------------------------------
# shared plumbing


def _load_input(arg: str) -> PolyFile:
    """A path, or one of the bundled names as a convenience."""
    if arg in BUNDLED_NAMES:
        return bundled_polyfile(arg)
    return load_polyfile(arg)


def _sextic_of(pf: PolyFile) -> RatPoly:
    """The palindromic sextic: strip the eigenvalue-1 linear factor if present."""
    poly = pf.poly()
    if poly.degree == 7:
        try:
            return deflate_root_one(poly)
        except ValueError as e:
            raise NotPalindromicError(f"{pf.name}: {e}") from e
    return poly


def _decimal(fr: Fraction, places: int = 6) -> str:
    sign = "-" if fr < 0 else ""
    fr = abs(fr)
    scaled = (fr.numerator * 10**places * 2 + fr.denominator) // (2 * fr.denominator)
    whole, part = divmod(scaled, 10**places)
    return f"{sign}{whole}.{part:0{places}d}"


def _density_doc(fr: Fraction) -> dict:
    return {"fraction": f"{fr.numerator}/{fr.denominator}", "decimal": _decimal(fr)}


def _input_doc(pf: PolyFile) -> dict:
    return {
        "name": pf.name,
        "steinberg_prime": pf.steinberg_prime,
        "digest": digest(pf),
    }


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def _emit_json(doc: Any, out) -> None:
    json.dump(doc, out, indent=2)
    out.write("\n")


# ---------------------------------------------------------------------------
# reduce


def _analysis_doc(pf: PolyFile) -> dict:
    sextic = _sextic_of(pf)
    pair = palindromic_reduce(sextic)
    classification = classify_galois(pair)
    tempered = temperedness_check(pair)
    lift = g2_lift_check(pair.q)
    exset = excluded_primes(sextic, pf.steinberg_prime) if classification.tag == TAG_D6 else None
    doc = {
        "input": _input_doc(pf),
        "characteristic_poly": list(pf.coefficients),
        "sextic": sextic.to_strings(),
        "sextic_str": format_poly(sextic.coeffs, "x"),
        "cubic": pair.q.to_strings(),
        "cubic_str": format_poly(pair.q.coeffs, "y"),
        "cubic_at_2": str(pair.q_at_2),
        "cubic_at_minus_2": str(pair.q_at_minus_2),
        "discriminant": str(pair.delta),
        "discriminant_product": str(pair.delta_prime),
        "squarefree_kernels": sorted(
            {_sf(pair.delta), _sf(pair.delta_prime), _sf(pair.delta * pair.delta_prime)}
        ),
        "ramified_primes": sorted(ramified_primes(pair)),
        "classification": classification.tag,
        "evidence": dict(classification.evidence),
        "tempered": tempered,
        "unit_product": lift,
    }
    if exset is not None:
        doc["excluded_primes"] = [{"p": p, "reason": exset.reason(p)} for p in exset]
    return doc


def _sf(value: Fraction) -> int:
    from .arith import squarefree_kernel

    return squarefree_kernel(value)


def cmd_reduce(args: argparse.Namespace) -> int:
    pf = _load_input(args.input)
    doc = {"schema": SCHEMA, "version": __version__, "command": "reduce"}
    doc.update(_analysis_doc(pf))
    out, close = _open_out(args.out)
    try:
        _emit_json(doc, out)
    finally:
        if close:
            out.close()
    return 0 if doc["classification"] == TAG_D6 and doc["tempered"] else 1


# ---------------------------------------------------------------------------
# frobenius


def _frobenius_record(sextic: RatPoly, p: int, order_bound: int) -> dict:
    cls = frobenius_class(sextic, p)
    report = element_order(sextic, p, cls, bounds=(3, order_bound))
    return {
        "p": p,
        "y_pattern": list(cls.y_pattern),
        "chi_delta_prime": cls.chi_delta_prime,
        "chi_delta": cls.chi_delta,
        "weyl_class": cls.weyl_class,
        "torus_order": cls.torus_order,
        "x_pattern": list(cls.x_pattern),
        "exact_order": report.exact_order,
        "order_divides_torus": report.order_divides_torus,
        "exceeds": {str(b): flag for b, flag in sorted(report.exceeds.items())},
    }


def cmd_frobenius(args: argparse.Namespace) -> int:
    pf = _load_input(args.input)
    sextic = _sextic_of(pf)
    exset = excluded_primes(sextic, pf.steinberg_prime)
    if args.prime is not None:
        targets = [args.prime]
    else:
        targets = primes_up_to(args.limit)
    records = []
    for p in targets:
        if p in exset:
            records.append({"p": p, "excluded": exset.reason(p)})
            continue
        try:
            records.append(_frobenius_record(sextic, p, args.order_bound))
        except (ExcludedPrimeError, ValueError) as e:
            records.append({"p": p, "excluded": str(e)})
    out, close = _open_out(args.out)
    try:
        if args.format == "csv":
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(
                ["p", "y_pattern", "chi_delta_prime", "chi_delta", "weyl_class",
                 "torus_order", "exact_order", "excluded"]
            )
            for r in records:
                if "excluded" in r:
                    writer.writerow([r["p"], "", "", "", "", "", "", r["excluded"]])
                else:
                    writer.writerow(
                        [r["p"], "+".join(map(str, r["y_pattern"])), r["chi_delta_prime"],
                         r["chi_delta"], r["weyl_class"], r["torus_order"],
                         r["exact_order"], ""]
                    )
        else:
            doc = {
                "schema": SCHEMA,
                "version": __version__,
                "command": "frobenius",
                "input": _input_doc(pf),
                "records": records,
            }
            _emit_json(doc, out)
    finally:
        if close:
            out.close()
    return 0


# ---------------------------------------------------------------------------
# certify


def _certification_doc(report: CertificationReport) -> dict:
    doc: dict[str, Any] = {
        "p": report.p,
        "class_a": report.class_a,
        "class_b": report.class_b,
        "order_a": report.order_a,
        "order_b": report.order_b,
        "verdict": report.verdict,
        "reasons": [f"{label}: {why}" for label, why in report.excluded_subgroups],
    }
    if report.note:
        doc["note"] = report.note
    for side, ev in (("a", report.evidence_a), ("b", report.evidence_b)):
        if ev is not None:
            doc[f"y_pattern_{side}"] = list(ev.y_pattern)
            doc[f"x_pattern_{side}"] = list(ev.x_pattern)
            doc[f"chi_delta_{side}"] = ev.chi_delta
            doc[f"chi_delta_prime_{side}"] = ev.chi_delta_prime
            doc[f"torus_order_{side}"] = ev.torus_order
    return doc


def cmd_certify(args: argparse.Namespace) -> int:
    pf_a = _load_input(args.input_a)
    pf_b = _load_input(args.input_b)
    sextic_a, sextic_b = _sextic_of(pf_a), _sextic_of(pf_b)
    exset = excluded_primes(sextic_a, pf_a.steinberg_prime).union(
        excluded_primes(sextic_b, pf_b.steinberg_prime)
    )
    report = certify_prime(sextic_a, sextic_b, args.prime, exset)
    doc = {
        "schema": SCHEMA,
        "version": __version__,
        "command": "certify",
        "inputs": {"a": _input_doc(pf_a), "b": _input_doc(pf_b)},
    }
    doc.update(_certification_doc(report))
    if report.order_a is not None:
        for side, sextic, ev in (("a", sextic_a, report.evidence_a), ("b", sextic_b, report.evidence_b)):
            rep = element_order(sextic, args.prime, ev, bounds=(3, args.order_bound))
            doc[f"order_evidence_{side}"] = {
                "exact_order": rep.exact_order,
                "order_divides_torus": rep.order_divides_torus,
                "exceeds": {str(b): flag for b, flag in sorted(rep.exceeds.items())},
            }
    out, close = _open_out(args.out)
    try:
        _emit_json(doc, out)
    finally:
        if close:
            out.close()
    return 0 if report.verdict == VERDICT_CERTIFIED else 1


# ---------------------------------------------------------------------------
# scan


def _scan_record_doc(r: CertificationReport) -> dict:
    doc: dict[str, Any] = {
        "p": r.p,
        "class_a": r.class_a,
        "class_b": r.class_b,
        "order_a": r.order_a,
        "order_b": r.order_b,
        "verdict": r.verdict,
    }
    if r.evidence_a is not None and r.evidence_b is not None:
        doc["y_pattern_a"] = list(r.evidence_a.y_pattern)
        doc["y_pattern_b"] = list(r.evidence_b.y_pattern)
        doc["chi_delta_a"] = r.evidence_a.chi_delta
        doc["chi_delta_b"] = r.evidence_b.chi_delta
        doc["chi_delta_prime_a"] = r.evidence_a.chi_delta_prime
        doc["chi_delta_prime_b"] = r.evidence_b.chi_delta_prime
    if r.excluded_subgroups:
        doc["reasons"] = [f"{label}: {why}" for label, why in r.excluded_subgroups]
    return doc


def _summary_doc(summary) -> dict:
    return {
        "limit": summary.limit,
        "primes_total": summary.primes_total,
        "excluded_count": summary.excluded_count,
        "scanned": summary.scanned,
        "verdict_counts": dict(summary.verdict_counts),
        "class_counts_a": dict(summary.class_counts_a),
        "class_counts_b": dict(summary.class_counts_b),
        "pattern_count": summary.pattern_count,
        "certified_count": len(summary.certified),
        "certified": list(summary.certified),
        "density": _density_doc(summary.density),
        "density_all": _density_doc(summary.density_all),
        "pattern_density": _density_doc(summary.pattern_density),
        "predicted_pattern_density": _density_doc(summary.predicted_density),
    }


def cmd_scan(args: argparse.Namespace) -> int:
    pf_a = _load_input(args.input_a)
    pf_b = _load_input(args.input_b)
    sextic_a, sextic_b = _sextic_of(pf_a), _sextic_of(pf_b)
    exset = excluded_primes(sextic_a, pf_a.steinberg_prime).union(
        excluded_primes(sextic_b, pf_b.steinberg_prime)
    )
    out, close = _open_out(args.out)
    try:
        if args.format == "csv":
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(["p", "class_A", "class_B", "order_A", "order_B", "verdict"])

            def sink(r: CertificationReport) -> None:
                writer.writerow(
                    [r.p, r.class_a, r.class_b,
                     "" if r.order_a is None else r.order_a,
                     "" if r.order_b is None else r.order_b,
                     r.verdict]
                )

            summary = scan(
                sextic_a, sextic_b, args.limit,
                excluded=exset, record_sink=sink, jobs=args.jobs,
            )
            out.write("# " + json.dumps(_summary_doc(summary)) + "\n")
        else:
            out.write("{\n")
            out.write(f'  "schema": {json.dumps(SCHEMA)},\n')
            out.write(f'  "version": {json.dumps(__version__)},\n')
            out.write('  "command": "scan",\n')
            inputs = {"a": _input_doc(pf_a), "b": _input_doc(pf_b)}
            out.write(f'  "inputs": {json.dumps(inputs)},\n')
            params = {
                "limit": args.limit,
                "order_bound": args.order_bound,
                "excluded_primes": [
                    {"p": p, "reason": exset.reason(p)} for p in exset
                ],
            }
            out.write(f'  "parameters": {json.dumps(params)},\n')
            out.write('  "records": [\n')
            first = True

            def sink(r: CertificationReport) -> None:
                nonlocal first
                prefix = "    " if first else ",\n    "
                first = False
                out.write(prefix + json.dumps(_scan_record_doc(r)))

            summary = scan(
                sextic_a, sextic_b, args.limit,
                excluded=exset, record_sink=sink, jobs=args.jobs,
            )
            out.write("\n  ],\n")
            out.write(f'  "summary": {json.dumps(_summary_doc(summary))}\n')
            out.write("}\n")
    finally:
        if close:
            out.close()
    return 0


# ---------------------------------------------------------------------------
# torus-orders


def cmd_torus_orders(args: argparse.Namespace) -> int:
    if args.q is not None and args.q < 2:
        raise ValueError("q must be at least 2")
    rows = []
    for label in CLASS_LABELS:
        row: dict[str, Any] = {"class": label, "polynomial": torus_poly_str(label)}
        if args.q is not None:
            row["value"] = torus_order(label, args.q)
        rows.append(row)
    out, close = _open_out(args.out)
    try:
        if args.format == "json":
            doc = {
                "schema": SCHEMA, "version": __version__, "command": "torus-orders",
                "q": args.q, "rows": rows,
            }
            _emit_json(doc, out)
        else:
            width = max(len(r["polynomial"]) for r in rows)
            for row in rows:
                line = f'{row["class"]}  {row["polynomial"]:<{width}}'
                if args.q is not None:
                    line += f'  {row["value"]}'
                out.write(line.rstrip() + "\n")
    finally:
        if close:
            out.close()
    return 0


# ---------------------------------------------------------------------------
# reproduce


def _compare(name: str, field: str, expected, got, failures: list[str], out) -> None:
    if expected == got:
        out.write(f"ok {name}.{field}\n")
    else:
        failures.append(f"{name}.{field}")
        out.write(f"MISMATCH {name}.{field}: expected {expected!r}, got {got!r}\n")


def cmd_reproduce(args: argparse.Namespace) -> int:
    if args.inputs and len(args.inputs) != 2:
        raise ValueError("reproduce takes either no inputs or exactly two")
    names = args.inputs if args.inputs else list(BUNDLED_NAMES)
    out, close = _open_out(args.out)
    failures: list[str] = []
    pairs = []
    try:
        for arg in names:
            pf = _load_input(arg)
            if pf.name not in EXPECTED:
                raise PolyFileError(f"no expected values for input named {pf.name!r}")
            want = EXPECTED[pf.name]
            try:
                sextic = _sextic_of(pf)
                pair = palindromic_reduce(sextic)
            except G2CertError as e:
                failures.append(f"{pf.name}.pipeline")
                out.write(f"MISMATCH {pf.name}.pipeline: {e}\n")
                continue
            pairs.append(pair)
            _compare(pf.name, "sextic_coefficients", want["sextic_coefficients"],
                     sextic.coeffs, failures, out)
            _compare(pf.name, "cubic_coefficients", want["cubic_coefficients"],
                     pair.q.coeffs, failures, out)
            _compare(pf.name, "cubic_at_2", want["cubic_at_2"], pair.q_at_2, failures, out)
            _compare(pf.name, "cubic_at_minus_2", want["cubic_at_minus_2"],
                     pair.q_at_minus_2, failures, out)
            _compare(pf.name, "discriminant", want["discriminant"], pair.delta, failures, out)
            _compare(pf.name, "discriminant_product", want["discriminant_product"],
                     pair.delta_prime, failures, out)
            tag = classify_galois(pair).tag
            _compare(pf.name, "classification", want["classification"], tag, failures, out)
            _compare(pf.name, "tempered", want["tempered"], temperedness_check(pair), failures, out)
            _compare(pf.name, "unit_product", want["unit_product"], g2_lift_check(pair.q),
                     failures, out)
            kernels = frozenset(
                {_sf(pair.delta), _sf(pair.delta_prime), _sf(pair.delta * pair.delta_prime)}
            )
            _compare(pf.name, "squarefree_kernels", want["squarefree_kernels"], kernels,
                     failures, out)
            if tag == TAG_D6:
                _compare(pf.name, "excluded_primes", want["excluded_primes"],
                         excluded_primes(sextic, pf.steinberg_prime).primes, failures, out)
            else:
                failures.append(f"{pf.name}.excluded_primes")
                out.write(
                    f"MISMATCH {pf.name}.excluded_primes: not computable, "
                    f"classification is {tag}\n"
                )
        if len(pairs) == 2:
            try:
                verdict = independence_check(pairs[0], pairs[1])
                _compare("pair", "independent", INDEPENDENT, verdict.independent,
                         failures, out)
            except G2CertError as e:
                failures.append("pair.independent")
                out.write(f"MISMATCH pair.independent: {e}\n")
        for label, (poly_str, at2, at5) in TORUS_TABLE.items():
            _compare("torus", f"{label}.polynomial", poly_str, torus_poly_str(label), failures, out)
            _compare("torus", f"{label}.at_2", at2, torus_order(label, 2), failures, out)
            _compare("torus", f"{label}.at_5", at5, torus_order(label, 5), failures, out)
        if failures:
            out.write(f"FAILED: {len(failures)} mismatched field(s): {', '.join(failures)}\n")
            return 1
        out.write("all values reproduced exactly\n")
        return 0
    finally:
        if close:
            out.close()


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="g2cert",
        description="Exact certification pipeline for Frobenius class data "
        "of palindromic characteristic polynomials.",
    )
    ap.add_argument("--version", action="version", version=f"g2cert {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common_out(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("reduce", help="palindromic reduction and Galois analysis of one input")
    p.add_argument("input", help="polynomial file path or bundled name")
    common_out(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("frobenius", help="per-prime Frobenius class records for one input")
    p.add_argument("input")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--prime", type=int, help="single prime")
    group.add_argument("--limit", type=int, help="all primes up to this bound")
    p.add_argument("--order-bound", type=int, default=19)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    common_out(p)
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("certify", help="generation certificate for a pair at one prime")
    p.add_argument("input_a")
    p.add_argument("input_b")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--order-bound", type=int, default=19)
    common_out(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("scan", help="certify all primes up to a bound")
    p.add_argument("input_a")
    p.add_argument("input_b")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (output unchanged)")
    p.add_argument("--order-bound", type=int, default=19)
    common_out(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("torus-orders", help="the six finite torus orders, symbolic or at q")
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    common_out(p)
    p.set_defaults(func=cmd_torus_orders)

    p = sub.add_parser("reproduce", help="recompute the bundled tables and diff against "
                       "the frozen expected values")
    p.add_argument("inputs", nargs="*", help="override the two bundled inputs")
    common_out(p)
    p.set_defaults(func=cmd_reproduce)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except (PolyFileError, OSError) as e:
        print(f"g2cert: {e}", file=sys.stderr)
        return 2
    except G2CertError as e:
        print(f"g2cert: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"g2cert: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
