"""Command-line front end: ``qgl2 {decompose,char,expand,table,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .characters import chi_decompose, chi_expand, dimension, monomial, multiply, weyl_character
from .decompose import (
    Decomposition,
    VerificationReport,
    general_tensor_decompose,
    simple_character,
    simple_dimension,
    summand_dimension,
    tensor_decompose,
    verify_decomposition,
)
from .errors import QGL2Error
from .tilting import TiltingLabel, tilting_character
from .weights import DominantWeight, ModularParams, lp_expansion, parse_weight

CSV_HEADER = ["a", "b", "ell", "p", "num_summands", "summands", "dim", "verified"]


def _weight_arg(text: str) -> tuple[DominantWeight, bool]:
    """Return the parsed weight and whether it was given as an explicit pair."""
    return parse_weight(text), "," in text


def _decompose_inputs(args):
    params = ModularParams(args.ell, args.p)
    lam, lam_pair = _weight_arg(args.a)
    mu, mu_pair = _weight_arg(args.b)
    if lam_pair or mu_pair:
        d = general_tensor_decompose(lam, mu, params)
        return d, [lam.a, lam.b], [mu.a, mu.b]
    return tensor_decompose(lam.a, mu.a, params), lam.a, mu.a


def summand_record(s) -> dict:
    w = s.lambda_neg1.weight
    return {
        "multiplicity": s.multiplicity,
        "quantum_weight": [w.a, w.b],
        "classical_levels": [[t.weight.a, t.weight.b] for t in s.levels],
    }


def build_record(d: Decomposition, a, b, verify: bool = True) -> tuple[dict, VerificationReport | None]:
    if verify:
        report = verify_decomposition(d)
        lhs, rhs, ok = report.lhs_dim, report.rhs_dim, report.passed
    else:
        report = None
        lhs = simple_dimension(d.a, d.params) * simple_dimension(d.b, d.params)
        rhs = sum(summand_dimension(s) for s in d.summands)
        ok = False
    record = {
        "a": a,
        "b": b,
        "ell": d.params.ell,
        "p": d.params.p,
        "summands": [summand_record(s) for s in d.summands],
        "dimensions": {"lhs": lhs, "rhs": rhs},
        "verified": ok,
    }
    return record, report


def _dump(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"), ensure_ascii=False)


def cmd_decompose(args) -> int:
    d, a, b = _decompose_inputs(args)
    record, report = build_record(d, a, b, verify=not args.no_verify)
    if args.format == "json":
        print(_dump(record))
    elif args.format == "latex":
        print(d.to_latex())
    else:
        print(d.to_text())
    if report is not None and not report.passed:
        print(f"verification failed: {report.summary()}", file=sys.stderr)
        return 1
    return 0


def cmd_verify(args) -> int:
    d, _, _ = _decompose_inputs(args)
    report = verify_decomposition(d)
    print(report.summary())
    return 0 if report.passed else 1


def cmd_expand(args) -> int:
    params = ModularParams(args.ell, args.p)
    exp = lp_expansion(args.a, params)
    print(f"tau={exp.tau} digits=[{','.join(map(str, exp.digits))}]")
    return 0


def cmd_char(args) -> int:
    if args.weyl is not None:
        char = weyl_character(parse_weight(args.weyl))
        expansion = chi_decompose(char)
    elif args.tilting is not None:
        if args.modulus is None:
            raise QGL2Error("--tilting requires --modulus")
        expansion = tilting_character(TiltingLabel(parse_weight(args.tilting), args.modulus))
        char = chi_expand(expansion)
    else:
        if args.ell is None or args.p is None:
            raise QGL2Error("--simple requires --ell and --p")
        lam = parse_weight(args.simple)
        char = simple_character(lam.diff, ModularParams(args.ell, args.p))
        if lam.b:
            char = multiply(char, monomial(lam.b, lam.b))
        expansion = chi_decompose(char)
    print(f"{char.to_string()} (dim {dimension(char)})")
    print(expansion.to_string())
    return 0


def _table_cell(job: tuple[int, int, int, int, bool]) -> dict:
    a, b, ell, p, verify = job
    d = tensor_decompose(a, b, ModularParams(ell, p))
    record, _ = build_record(d, a, b, verify=verify)
    record["_text"] = d.to_text().replace(" ⊕ ", " + ")
    return record


def render_table(records: list[dict], fmt: str) -> str:
    if fmt == "json":
        body = ",\n".join(_dump({k: v for k, v in r.items() if k != "_text"}) for r in records)
        return "[\n" + body + "\n]\n" if records else "[]\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow([
            r["a"], r["b"], r["ell"], r["p"], len(r["summands"]), r["_text"],
            r["dimensions"]["lhs"], "true" if r["verified"] else "false",
        ])
    return buf.getvalue()


def cmd_table(args) -> int:
    params = ModularParams(args.ell, args.p)
    if args.a_max < 0 or args.b_max < 0:
        raise QGL2Error("--a-max and --b-max must be nonnegative")
    verify = not args.no_verify
    jobs = [
        (a, b, params.ell, params.p, verify)
        for a in range(args.a_max + 1)
        for b in range(min(a, args.b_max) + 1)
    ]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(_table_cell, jobs, chunksize=max(1, len(jobs) // (4 * args.jobs))))
    else:
        records = [_table_cell(j) for j in jobs]
    text = render_table(records, args.format)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    failed = [(r["a"], r["b"]) for r in records if verify and not r["verified"]]
    if failed:
        print(f"verification failed for {len(failed)} cell(s): {failed[:10]}", file=sys.stderr)
        return 1
    return 0


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("QGL2_JOBS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgl2",
        description="Tensor products of simple quantum GL2 modules as twisted tilting summands.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(p, required=True):
        p.add_argument("--ell", type=int, required=required, help="order of the root of unity")
        p.add_argument("--p", type=int, required=required, help="characteristic of the field")

    def add_pair(p):
        p.add_argument("--a", required=True, help="first highest weight: 'a' or 'a1,a2'")
        p.add_argument("--b", required=True, help="second highest weight: 'b' or 'b1,b2'")
        add_params(p)

    p = sub.add_parser("decompose", help="decompose L(a) ⊗ L(b)")
    add_pair(p)
    p.add_argument("--format", choices=["json", "text", "latex"], default="text")
    p.add_argument("--no-verify", action="store_true", help="skip the character check")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check a decomposition by character arithmetic")
    add_pair(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("expand", help="print the (ell, p) expansion of an integer")
    p.add_argument("--a", type=int, required=True)
    add_params(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("char", help="print a character")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--simple", metavar="A", help="simple module L(A) (needs --ell, --p)")
    group.add_argument("--weyl", metavar="a,b", help="Weyl character chi(a,b)")
    group.add_argument("--tilting", metavar="a,b", help="special tilting T(a,b) (needs --modulus)")
    p.add_argument("--modulus", type=int)
    add_params(p, required=False)
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("table", help="decompose every cell a >= b of a grid")
    p.add_argument("--a-max", type=int, required=True)
    p.add_argument("--b-max", type=int, required=True)
    add_params(p)
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--jobs", type=int, default=_default_jobs(), help="worker processes (env QGL2_JOBS)")
    p.add_argument("--no-verify", action="store_true")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except QGL2Error as exc:
        print(f"qgl2: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
