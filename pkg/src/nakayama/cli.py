"""Command-line surface: single-algebra reports, classification queries,
spectra, censuses, and verification suites.

Exit codes: 0 success (verify: pass), 1 verification counterexample,
2 usage or validation error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .census import (
    EnumSpec,
    SUITES,
    census_stream,
    spectrum,
    spectrum_csv_rows,
    verify,
)
from .classify import (
    DOneParams,
    d1_params,
    make_d1,
    morita_nakayama,
    z_params,
)
from .core import QuiverKind, parse_kupisch
from .errors import NakayamaError
from .reports import compute_report, format_report, report_to_json_line


def _kind(value: str | None) -> QuiverKind | None:
    if value is None:
        return None
    return QuiverKind(value)


def _print_report(algebra, as_json: bool, morita: dict | None = None) -> None:
    report = compute_report(algebra, morita=morita)
    if as_json:
        print(report_to_json_line(report))
    else:
        print(format_report(report))


def _cmd_info(args) -> int:
    algebra = parse_kupisch(args.kupisch, _kind(args.quiver))
    _print_report(algebra, args.json)
    return 0


def _cmd_classify(args) -> int:
    if args.family == "z":
        p = z_params(args.n, args.m)
        algebra = make_d1(p)
        if not args.json:
            print(f"params     n={p.n} a={p.a} s={p.s} (m={args.m})")
        _print_report(algebra, args.json)
        return 0
    algebra = parse_kupisch(args.kupisch, QuiverKind.CYCLE)
    p = d1_params(algebra)
    if p is None:
        print("not a defect-1 cycle algebra", file=sys.stderr)
        return 2
    if not args.json:
        print(f"params     n={p.n} a={p.a} s={p.s}")
    _print_report(make_d1(p), args.json)
    return 0


def _cmd_morita(args) -> int:
    algebra = morita_nakayama(args.n, args.w)
    _print_report(algebra, args.json, morita={"n": args.n, "w": args.w})
    return 0


def _cmd_spectrum(args) -> int:
    result = spectrum(args.n, QuiverKind(args.quiver), cap=args.cap, jobs=args.jobs)
    rows = spectrum_csv_rows(result)
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(out)
        writer.writerow(["n", "kind", "gldim", "witness_kupisch"])
        writer.writerows(rows)
    finally:
        if args.out:
            out.close()
    return 0


def _cmd_enumerate(args) -> int:
    resume = None
    if args.resume:
        resume = tuple(int(x) for x in args.resume.split(","))
    spec = EnumSpec(
        n=args.n,
        kind=QuiverKind(args.quiver),
        cap=args.cap,
        filter=args.filter,
        jobs=args.jobs,
        resume=resume,
    )
    out = open(args.out, "a" if resume else "w") if args.out else sys.stdout
    try:
        for prefix, lines in census_stream(spec):
            for line in lines:
                out.write(line + "\n")
            out.flush()
            if prefix:
                print("completed prefix " + ",".join(map(str, prefix)), file=sys.stderr)
    finally:
        if args.out:
            out.close()
    return 0


def _cmd_verify(args) -> int:
    params = {}
    if args.n_max is not None:
        params["n_max"] = args.n_max
    if args.cap is not None:
        params["cap"] = args.cap
    if args.w_max is not None:
        params["w_max"] = args.w_max
    if args.samples is not None:
        params["samples"] = args.samples
    report = verify(args.suite, jobs=args.jobs,
                    max_counterexamples=args.max_counterexamples, **params)
    if args.json:
        print(json.dumps(report.to_dict()))
    else:
        status = "PASS" if report.passed else "FAIL"
        print(f"{status} suite={report.suite} scanned={report.scanned} params={report.params}")
        for ce in report.counterexamples:
            print(f"  counterexample: {ce}")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nakayama",
        description="Homological invariants of Nakayama algebras from Kupisch series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="full invariant report for one algebra")
    p_info.add_argument("--kupisch", required=True, help="comma-separated series, e.g. 2,4,3,3,3")
    p_info.add_argument("--quiver", choices=["line", "cycle"], help="force the quiver kind")
    p_info.add_argument("--json", action="store_true", help="emit one JSON line")
    p_info.set_defaults(func=_cmd_info)

    p_classify = sub.add_parser("classify", help="classification queries")
    csub = p_classify.add_subparsers(dest="family", required=True)
    p_z = csub.add_parser("z", help="the unique extremal defect-1 cycle algebra")
    p_z.add_argument("--n", type=int, required=True)
    p_z.add_argument("--m", type=int, required=True)
    p_z.add_argument("--json", action="store_true")
    p_z.set_defaults(func=_cmd_classify)
    p_d1 = csub.add_parser("d1", help="defect-1 parameters of a cycle series")
    p_d1.add_argument("--kupisch", required=True)
    p_d1.add_argument("--json", action="store_true")
    p_d1.set_defaults(func=_cmd_classify)

    p_morita = sub.add_parser("morita", help="endomorphism algebra over a selfinjective base")
    p_morita.add_argument("--n", type=int, required=True, help="simples of the base algebra")
    p_morita.add_argument("--w", type=int, required=True, help="Loewy length of the base algebra")
    p_morita.add_argument("--json", action="store_true")
    p_morita.set_defaults(func=_cmd_morita)

    p_spectrum = sub.add_parser("spectrum", help="higher-Auslander global dimension spectrum")
    p_spectrum.add_argument("--n", type=int, required=True)
    p_spectrum.add_argument("--quiver", choices=["line", "cycle"], required=True)
    p_spectrum.add_argument("--cap", type=int, help="entry cap (default 2n for cycles)")
    p_spectrum.add_argument("--jobs", type=int, default=1)
    p_spectrum.add_argument("--out", help="write CSV here instead of stdout")
    p_spectrum.set_defaults(func=_cmd_spectrum)

    p_enum = sub.add_parser("enumerate", help="JSONL census of isomorphism classes")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--quiver", choices=["line", "cycle"], required=True)
    p_enum.add_argument("--cap", type=int)
    p_enum.add_argument("--filter", default="all",
                        choices=["all", "non-selfinjective", "finite-gldim", "defect-1"])
    p_enum.add_argument("--jobs", type=int, default=1)
    p_enum.add_argument("--out", help="write JSONL here instead of stdout")
    p_enum.add_argument("--resume", help="last completed prefix, e.g. 2,5")
    p_enum.set_defaults(func=_cmd_enumerate)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", required=True, choices=sorted(SUITES))
    p_verify.add_argument("--n-max", type=int, dest="n_max")
    p_verify.add_argument("--cap", type=int)
    p_verify.add_argument("--w-max", type=int, dest="w_max")
    p_verify.add_argument("--samples", type=int,
                          help="random series above the cap (inequality suite)")
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--max-counterexamples", type=int, default=10)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except NakayamaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
