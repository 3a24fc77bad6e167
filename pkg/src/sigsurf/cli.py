"""Command line interface: ``sigsurf <command> ...``.

Exit codes: 0 on success, 1 for computational or consensus failures, 2 for
unreadable or invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from sigsurf import formats, kernels
from sigsurf.algebra import format_rational
from sigsurf.brieskorn import BrieskornExponents
from sigsurf.errors import ComputationError, InputError, SigsurfError
from sigsurf.polynomial import parse_polynomial
from sigsurf.portfolio import (JobSpec, SignatureResult, engine_tasks, run_engine,
                               race_signature, run_benchmarks, verify_signature)

EXIT_OK, EXIT_COMPUTE, EXIT_INPUT = 0, 1, 2


def _print_result(result: SignatureResult, as_json: bool, out):
    if as_json:
        json.dump(result.to_dict(), out, indent=2)
        out.write("\n")
        return
    out.write(f"signature: {result.value}\n")
    out.write(f"approach:  {result.approach} ({result.wall_time:.4f} s)\n")
    if result.eta_N is not None:
        out.write(f"eta(N={result.N}): {format_rational(result.eta_N)}\n")
        out.write(f"eta(1):   {format_rational(result.eta_1)}\n")
    for approach, latency in sorted(result.stop_latencies.items()):
        out.write(f"cancelled: {approach} stopped {latency * 1000:.1f} ms after signal\n")
    for note in result.notes:
        out.write(f"note: {note}\n")


def _print_report(report, as_json, out):
    if as_json:
        json.dump(report.to_dict(), out, indent=2)
        out.write("\n")
        return
    for r in report.results:
        etas = ""
        if r.eta_N is not None:
            etas = f"  eta(N)={format_rational(r.eta_N)} eta(1)={format_rational(r.eta_1)}"
        out.write(f"{r.approach:<11} {r.value:>8}  {r.wall_time:.4f} s{etas}\n")
    for approach, exc in report.errors.items():
        out.write(f"{approach:<11} error: {exc}\n")
    out.write(f"consensus: {'yes' if report.consensus else 'NO'}")
    if report.consensus:
        out.write(f" (signature {report.value})")
    out.write("\n")


def _job_from_args(args) -> JobSpec:
    if args.pairs:
        return JobSpec(N=args.N, pairs=formats.load_pairs(args.pairs))
    if args.graph:
        return JobSpec(N=args.N, graph=formats.load_graph(args.graph))
    if args.sppairs:
        return JobSpec(N=args.N, sppairs=formats.load_spectral(args.sppairs))
    if args.brieskorn:
        return JobSpec(N=args.N, brieskorn=BrieskornExponents(*args.brieskorn))
    return JobSpec(N=args.N, poly=parse_polynomial(args.poly))


_APPROACH = {"pairs": "puiseux", "graph": "resolution", "sppairs": "spectral",
             "brieskorn": "brieskorn"}


def _single(kind):
    """One engine on one input file; errors propagate with their own type."""
    def run(args, out):
        fields = dict.fromkeys(("pairs", "graph", "sppairs", "brieskorn", "poly"))
        fields[kind] = getattr(args, kind)
        job = _job_from_args(argparse.Namespace(N=args.N, **fields))
        approach = _APPROACH[kind]
        result = run_engine(approach, engine_tasks(job)[approach], None, job.N)
        _print_result(result, args.json, out)
    return run


def _cmd_race(args, out):
    _print_result(race_signature(_job_from_args(args)), args.json, out)


def _cmd_verify(args, out):
    report = verify_signature(_job_from_args(args), raise_on_failure=False)
    _print_report(report, args.json, out)
    return EXIT_OK if report.consensus else EXIT_COMPUTE


def _cmd_bench(args, out):
    try:
        suite = json.loads(Path(args.suite).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {args.suite}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{args.suite} is not valid JSON: {exc}") from None
    if isinstance(suite, dict):
        suite = suite.get("fixtures", [])
    report = run_benchmarks(suite, repeats=args.repeats)
    text = json.dumps(report, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    for row in report["rows"]:
        if "skipped" in row:
            label = row.get("approach") or row.get("kernel") or "-"
            out.write(f"{row['fixture']:<18} {label:<14} skipped: {row['skipped']}\n")
        elif "kernel" in row:
            label = f"{row['kernel']}/{row['backend']}"
            out.write(f"{row['fixture']:<18} {label:<14} "
                      f"{row['seconds']:.4f} s  sigma={row['value']}\n")
        else:
            out.write(f"{row['fixture']:<18} {row['approach']:<14} {row['seconds']:.4f} s  "
                      f"sigma={row['value']}\n")
    if args.out:
        out.write(f"report written to {args.out}\n")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sigsurf", description="Signature of the surface singularity z^N + g(x,y) = 0.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s 0.1.0 (kernels: {kernels.BACKEND})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("puiseux", help="Puiseux-pair reduction to Brieskorn signatures")
    p.add_argument("--pairs", required=True, metavar="FILE")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_single("pairs"))

    p = sub.add_parser("resolution", help="eta invariant from a resolution graph")
    p.add_argument("--graph", required=True, metavar="FILE")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_single("graph"))

    p = sub.add_parser("spectral", help="eta invariant from spectral pairs")
    p.add_argument("--sppairs", required=True, metavar="FILE")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_single("sppairs"))

    p = sub.add_parser("brieskorn", help="signature of x^C1 + y^C2 + z^C3")
    p.add_argument("c", nargs=3, type=int, metavar="C")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=lambda args, out: _single("brieskorn")(
        argparse.Namespace(brieskorn=args.c, N=None, json=args.json), out))

    for name, func, help_text in (("race", _cmd_race, "fastest applicable engine wins"),
                                  ("verify", _cmd_verify, "run every engine and compare")):
        p = sub.add_parser(name, help=help_text)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--pairs", metavar="FILE")
        src.add_argument("--graph", metavar="FILE")
        src.add_argument("--sppairs", metavar="FILE")
        src.add_argument("--poly", metavar="EXPR")
        src.add_argument("--brieskorn", nargs=3, type=int, metavar=("C1", "C2", "C3"))
        p.add_argument("-N", type=int)
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("bench", help="time engines on a fixture suite")
    p.add_argument("--suite", required=True, metavar="FILE")
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--repeats", type=int, default=1)
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args, out)
    except InputError as exc:
        print(f"sigsurf: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ComputationError, SigsurfError) as exc:
        print(f"sigsurf: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except ValueError as exc:
        print(f"sigsurf: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
