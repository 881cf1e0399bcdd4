"""Command-line driver.

Commands: ``factor``, ``analyze``, ``enumerate``, ``search``,
``paper-suite``.  Every command accepts ``--format {text,json,csv}``,
``--max-size`` (word-count budget for enumeration) and ``--workers``.
Exit codes: 0 success, 1 a check or fixture failed, 2 invalid input,
3 a resource guard tripped.

Polynomial arguments use the shared text grammar (``3 + x + 2x^2``);
binary and quaternary positions are fixed per argument, never inferred
from the coefficients.  The only environment variable honoured is
``Z2Z4_WORKERS``, a default for ``--workers``.
"""

import argparse
import csv
import io
import json
import os
import sys

from .code import DEFAULT_MAX_WORDS, AdditiveCode, Word, gray_array
from .cyclic import (
    CyclicSpec,
    cardinality,
    cyclic_spec,
    enumerate_cyclic_specs,
    kernel_dim_candidates,
    kernel_spec,
    materialize,
    gray_linear,
    rank_candidates,
    rank_spec,
    spec_to_dict,
    type_from_degrees,
)
from .errors import SizeGuardError, SpecError
from .gf2 import BinPoly, factor_xn1_gf2, xn_minus_1
from .verify import (
    cross_check,
    paper_suite,
    suite_json,
    suite_text,
    sweep,
    sweep_rows_csv,
    sweep_rows_json,
    sweep_text,
)
from .z4 import QuatPoly, factor_xn1_z4, xn_minus_1_z4

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID = 2
EXIT_GUARD = 3


def _odd_int(text: str) -> int:
    n = int(text)
    if n < 1 or n % 2 == 0:
        raise argparse.ArgumentTypeError(f"{n} is not an odd positive integer")
    return n


def _positive_int(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"{n} is not a positive integer")
    return n


def _default_workers() -> int:
    raw = os.environ.get("Z2Z4_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format", choices=("text", "json", "csv"), default="text",
        help="output format (default text)",
    )
    p.add_argument(
        "--max-size", type=_positive_int, default=DEFAULT_MAX_WORDS,
        metavar="N", help="refuse to enumerate more than N words (exit 3)",
    )
    p.add_argument(
        "--workers", type=_positive_int, default=_default_workers(),
        metavar="K", help="worker processes for search (default $Z2Z4_WORKERS or 1)",
    )


def _spec_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--alpha", type=_positive_int, required=True,
                   help="number of binary coordinates")
    p.add_argument("--beta", type=_odd_int, required=True,
                   help="number of quaternary coordinates (odd)")
    p.add_argument("--b", default="1", metavar="POLY",
                   help="binary generator, a divisor of x^alpha - 1 (default 1)")
    p.add_argument("--ell", default="0", metavar="POLY",
                   help="binary mixing polynomial, degree below deg b (default 0)")
    p.add_argument("--f", required=True, metavar="POLY",
                   help="quaternary cofactor f, with f h g = x^beta - 1")
    p.add_argument("--h", required=True, metavar="POLY",
                   help="quaternary cofactor h")
    p.add_argument("--g", required=True, metavar="POLY",
                   help="quaternary cofactor g")


def _spec_from_args(args: argparse.Namespace) -> CyclicSpec:
    return cyclic_spec(
        args.alpha,
        args.beta,
        BinPoly.parse(args.b),
        BinPoly.parse(args.ell),
        QuatPoly.parse(args.f),
        QuatPoly.parse(args.h),
        QuatPoly.parse(args.g),
    )


def _nospace(p) -> str:
    return str(p).replace(" ", "")


# ---------------------------------------------------------------------------
# factor


def cmd_factor(args: argparse.Namespace) -> int:
    n = args.n
    if args.ring == "gf2":
        pairs = factor_xn1_gf2(n)
        whole = xn_minus_1(n)
    else:
        pairs = factor_xn1_z4(n)
        whole = xn_minus_1_z4(n)
    if args.format == "json":
        print(json.dumps({
            "n": n,
            "ring": args.ring,
            "modulus": str(whole),
            "factors": [
                {"coset": list(coset.exps), "poly": str(q)} for coset, q in pairs
            ],
        }))
    elif args.format == "csv":
        print("coset_leader,coset,poly")
        for coset, q in pairs:
            orbit = ";".join(str(e) for e in coset.exps)
            print(f"{coset.leader},{orbit},{_nospace(q)}")
    else:
        product = "".join(f"({q})" for _, q in pairs)
        print(f"x^{n} - 1 = {product}  over {'Z2' if args.ring == 'gf2' else 'Z4'}")
        for coset, q in pairs:
            orbit = "{" + ", ".join(str(e) for e in coset.exps) + "}"
            print(f"  coset {orbit}: {q}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# analyze


def _analysis(spec: CyclicSpec) -> dict:
    t = type_from_degrees(spec)
    kres = kernel_spec(spec)
    rres = rank_spec(spec)
    return {
        "spec": spec_to_dict(spec),
        "type": [t.alpha, t.beta, t.gamma, t.delta, t.kappa],
        "kappa_split": [t.kappa1, t.kappa2],
        "log2_size": t.gamma + 2 * t.delta,
        "size": cardinality(spec),
        "gray_linear": gray_linear(spec),
        "kernel": {
            "dim": kres.dimension,
            "k_prime": str(kres.k_prime),
            "minimal_divisors": [str(k) for k in kres.minimal_divisors],
            "spec": spec_to_dict(kres.spec),
            "candidates": list(kernel_dim_candidates(t)),
        },
        "rank": {
            "rank": rres.rank,
            "r": str(rres.r),
            "spec": spec_to_dict(rres.spec),
            "candidates": list(rank_candidates(t)),
        },
    }


def _analysis_text(a: dict) -> str:
    s = a["spec"]
    t = a["type"]
    lines = [
        "spec: alpha={alpha} beta={beta} b=({b}) ell=({ell}) "
        "f=({f}) h=({h}) g=({g})".format(**s),
        f"type ({t[0]}, {t[1]}; {t[2]}, {t[3]}; {t[4]})"
        f"  kappa split {a['kappa_split'][0]} + {a['kappa_split'][1]}",
        f"size 2^{a['log2_size']} = {a['size']} words",
        f"gray image linear: {'yes' if a['gray_linear'] else 'no'}",
        f"kernel dim {a['kernel']['dim']}, k' = ({a['kernel']['k_prime']}), "
        "minimal divisors "
        + ", ".join(f"({k})" for k in a["kernel"]["minimal_divisors"]),
        "kernel pair: b=({b}) ell=({ell}) f=({f}) h=({h}) g=({g})".format(
            **a["kernel"]["spec"]),
        f"rank {a['rank']['rank']}, r = ({a['rank']['r']})",
        "span pair: b=({b}) ell=({ell}) f=({f}) h=({h}) g=({g})".format(
            **a["rank"]["spec"]),
        "kernel dim candidates: "
        + ", ".join(str(d) for d in a["kernel"]["candidates"]),
        "rank candidates: " + ", ".join(str(d) for d in a["rank"]["candidates"]),
    ]
    return "\n".join(lines)


_CSV_HEADER = ("alpha,beta,b,ell,f,h,g,gamma,delta,kappa,"
               "kernel_dim,rank,k_prime,r,verdict")


def _csv_row(spec: CyclicSpec, kernel_dim, rank, k_prime, r, verdict: str) -> str:
    t = type_from_degrees(spec)
    cells = (
        spec.alpha, spec.beta,
        _nospace(spec.b), _nospace(spec.ell),
        _nospace(spec.f), _nospace(spec.h), _nospace(spec.g),
        t.gamma, t.delta, t.kappa,
        kernel_dim, rank, _nospace(k_prime), _nospace(r), verdict,
    )
    return ",".join(str(c) for c in cells)


def cmd_analyze(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    a = _analysis(spec)
    code = EXIT_OK
    if args.verify:
        rep = cross_check(spec, max_words=args.max_size)
        a["verify"] = {
            "passed": rep.passed,
            "checks": [{"name": n, "passed": ok} for n, ok in rep.checks],
            "skipped": list(rep.skipped),
            "witness": rep.witness,
        }
        if not rep.passed:
            code = EXIT_CHECK_FAILED
    if args.format == "json":
        print(json.dumps(a))
    elif args.format == "csv":
        verdict = "unchecked"
        if args.verify:
            verdict = "pass" if a["verify"]["passed"] else "fail"
        print(_CSV_HEADER)
        print(_csv_row(
            spec, a["kernel"]["dim"], a["rank"]["rank"],
            a["kernel"]["k_prime"], a["rank"]["r"], verdict,
        ))
    else:
        print(_analysis_text(a))
        if args.verify:
            v = a["verify"]
            for check in v["checks"]:
                print(f"  {'pass' if check['passed'] else 'FAIL'}  {check['name']}")
            for name in v["skipped"]:
                print(f"  skip  {name}")
            if v["witness"]:
                print(f"  witness: {v['witness']}")
            print("verify: all checks passed" if v["passed"]
                  else "verify: FAILED")
    return code


# ---------------------------------------------------------------------------
# enumerate


def _gray_bits(mask: int, width: int) -> str:
    return "".join(str((mask >> i) & 1) for i in range(width))


def cmd_enumerate(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    code = materialize(spec, max_words=args.max_size)
    packed = code.words()
    grays = gray_array(packed, code.alpha, code.beta)
    width = code.alpha + 2 * code.beta
    rows = [
        (str(Word.from_packed(int(p), code.alpha, code.beta)),
         _gray_bits(int(m), width))
        for p, m in zip(packed, grays)
    ]
    if args.format == "json":
        print(json.dumps({
            "spec": spec_to_dict(spec),
            "size": len(rows),
            "words": [{"word": w, "gray": g} for w, g in rows],
        }))
    elif args.format == "csv":
        print("word,gray")
        for w, g in rows:
            print(f"{w},{g}")
    else:
        print(f"{len(rows)} words of {spec}")
        for w, g in rows:
            print(f"  {w}  ->  {g}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# search


def _parse_type_filter(text: str, alpha: int, beta: int) -> tuple[int, ...]:
    """Accept ``G,D``, ``G,D,K`` or the prefixed ``A,B:G,D[,K]`` form."""
    body = text
    if ":" in text:
        prefix, body = text.split(":", 1)
        stated = tuple(int(p) for p in prefix.split(","))
        if stated != (alpha, beta):
            raise SpecError(
                "type-filter-prefix",
                f"filter names lengths {stated}, search runs at ({alpha}, {beta})",
            )
    parts = tuple(int(p) for p in body.split(","))
    if len(parts) not in (2, 3) or any(p < 0 for p in parts):
        raise SpecError(
            "type-filter-shape",
            "expected gamma,delta or gamma,delta,kappa",
        )
    return parts


def _dedupe(specs: list[CyclicSpec], max_words: int) -> list[CyclicSpec]:
    seen = set()
    keep = []
    for spec in specs:
        key = materialize(spec, max_words=max_words).howell()
        if key not in seen:
            seen.add(key)
            keep.append(spec)
    return keep


def cmd_search(args: argparse.Namespace) -> int:
    type_filter = None
    if args.type is not None:
        type_filter = _parse_type_filter(args.type, args.alpha, args.beta)

    if args.verify and not args.dedupe:
        summary = sweep(
            alpha_max=args.alpha, alpha_min=args.alpha, betas=(args.beta,),
            max_words=args.max_size, workers=args.workers,
            type_filter=type_filter,
        )
        if args.format == "json":
            print(json.dumps(sweep_rows_json(summary)))
        elif args.format == "csv":
            print(sweep_rows_csv(summary), end="")
        else:
            print(sweep_text(summary), end="")
        return EXIT_OK if summary.passed else EXIT_CHECK_FAILED

    specs = list(enumerate_cyclic_specs(args.alpha, args.beta,
                                        type_filter=type_filter))
    if args.dedupe:
        specs = _dedupe(specs, args.max_size)

    failures = 0
    rows = []
    for spec in specs:
        kres = kernel_spec(spec)
        rres = rank_spec(spec)
        verdict = "unchecked"
        if args.verify:
            rep = cross_check(spec, max_words=args.max_size)
            verdict = "pass" if rep.passed else "fail"
            failures += 0 if rep.passed else 1
        rows.append((spec, kres, rres, verdict))

    if args.format == "json":
        out = []
        for spec, kres, rres, verdict in rows:
            t = type_from_degrees(spec)
            d = {
                "alpha": spec.alpha, "beta": spec.beta,
                "b": str(spec.b), "ell": str(spec.ell),
                "f": str(spec.f), "h": str(spec.h), "g": str(spec.g),
                "type": [t.alpha, t.beta, t.gamma, t.delta, t.kappa],
                "kernel_dim": kres.dimension, "rank": rres.rank,
                "k_prime": str(kres.k_prime), "r": str(rres.r),
            }
            if args.verify:
                d["verdict"] = verdict
            out.append(d)
        print(json.dumps(out))
    elif args.format == "csv":
        print(_CSV_HEADER)
        for spec, kres, rres, verdict in rows:
            print(_csv_row(spec, kres.dimension, rres.rank,
                           kres.k_prime, rres.r, verdict))
    else:
        for spec, kres, rres, verdict in rows:
            t = type_from_degrees(spec)
            tail = f"  {verdict}" if args.verify else ""
            print(f"{spec}  type {t}  ker={kres.dimension} rank={rres.rank} "
                  f"k'=({kres.k_prime}) r=({rres.r}){tail}")
        print(f"{len(rows)} specs")
    return EXIT_CHECK_FAILED if failures else EXIT_OK


# ---------------------------------------------------------------------------
# paper-suite


def cmd_paper_suite(args: argparse.Namespace) -> int:
    report = paper_suite()
    strict = args.strict_erratum
    if args.format == "json":
        print(json.dumps(suite_json(report, strict=strict)))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("id", "title", "passed", "flagged"))
        for f in report.fixtures:
            writer.writerow((
                f.fixture_id, f.title,
                str(f.passed).lower(), str(f.flagged).lower(),
            ))
        print(buf.getvalue(), end="")
    else:
        print(suite_text(report, strict=strict), end="")
    return EXIT_OK if report.ok(strict=strict) else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# driver


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="z2z4",
        description="Additive codes over Z2 x Z4: Gray images, kernels, ranks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", help="factor x^n - 1 over Z2 or Z4")
    p.add_argument("--n", type=_odd_int, required=True,
                   help="length (odd positive)")
    p.add_argument("--ring", choices=("gf2", "z4"), required=True,
                   help="coefficient ring")
    _common_flags(p)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("analyze", help="type, kernel and rank of one code")
    _spec_flags(p)
    p.add_argument("--verify", action="store_true",
                   help="also run every enumeration cross-check")
    _common_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate",
                       help="list all codewords with their Gray images")
    _spec_flags(p)
    _common_flags(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("search", help="tabulate every code at one length pair")
    p.add_argument("--alpha", type=_positive_int, required=True)
    p.add_argument("--beta", type=_odd_int, required=True)
    p.add_argument("--type", default=None, metavar="FILTER",
                   help="keep only types gamma,delta[,kappa]; "
                        "an alpha,beta: prefix is accepted")
    p.add_argument("--verify", action="store_true",
                   help="cross-check every row against enumeration")
    p.add_argument("--dedupe", action="store_true",
                   help="one row per distinct code rather than per generator pair")
    _common_flags(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("paper-suite", help="run the pinned regression fixtures")
    p.add_argument("--strict-erratum", action="store_true",
                   help="fail if any fixture is flagged, not just failed")
    _common_flags(p)
    p.set_defaults(func=cmd_paper_suite)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
