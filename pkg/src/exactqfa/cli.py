"""Command-line front end: ``exactqfa {simulate,verify,search,table}``.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 unitarity violation.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .core import Mcqfa, PromiseSpec, UnaryDfa, UnitarityError, mcqfa_counterexample, run_mcqfa, dfa_counterexample
from .exact import exact_run, verify_family_exactness, OutcomeKind
from .family import TABLE_HEADER, FamilyParams, build_mcqfa, build_min_dfa, family_table
from .oracle import MAX_SEARCH_STATES, min_dfa_search
from .serialize import MachineFormatError, load_machine

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2, 3
MAX_LENGTH = 10**9
MAX_FLOAT_STEPS = 10**6

_EXACT_LABEL = {OutcomeKind.ACCEPT: "ACCEPT", OutcomeKind.REJECT: "REJECT", OutcomeKind.INTERMEDIATE: "INTERMEDIATE"}


class InputError(Exception):
    pass


def _fmt_prob(p: float) -> str:
    return f"{p:.12g}"


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _params(args) -> FamilyParams | None:
    if args.k is None:
        if args.l:
            raise InputError("--l requires --k")
        return None
    try:
        return FamilyParams(args.k, args.l or 0)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def cmd_simulate(args) -> int:
    m = args.length
    if not 0 <= m <= MAX_LENGTH:
        raise InputError(f"--length must lie in [0, {MAX_LENGTH}]")
    params = _params(args)
    if args.machine:
        machine = load_machine(args.machine)
    elif params is not None:
        machine = None
    else:
        raise InputError("give --machine FILE or --k")
    promise = params.promise if params else None

    record: dict = {"length": m}
    lines = []
    qfa = build_mcqfa(params)[0] if machine is None else machine
    if isinstance(qfa, UnaryDfa):
        accepted = qfa.accepts(m)
        record["dfa"] = "ACCEPT" if accepted else "REJECT"
        lines.append(f"dfa: {record['dfa']}")
    elif m > MAX_FLOAT_STEPS:
        print(f"warning: float simulation skipped above {MAX_FLOAT_STEPS} steps", file=sys.stderr)
        record["float_probability"] = None
    else:
        p = run_mcqfa(qfa, m).accept_probability
        record["float_probability"] = p
        lines.append(f"float: prob {_fmt_prob(p)}")

    exact_part = None
    if machine is None:
        outcome = exact_run(build_mcqfa(params)[1], m)
        record["exact"] = str(outcome.kind)
        record["exact_probability"] = outcome.probability
        exact_part = f"exact: {_EXACT_LABEL[outcome.kind]} (prob {_fmt_prob(outcome.probability)})"
    if promise is not None:
        record["promise"] = str(promise.classify(m))
        promise_part = f"promise: {promise.classify(m)}"
        lines.append(f"{exact_part}, {promise_part}" if exact_part else promise_part)
    elif exact_part:
        lines.append(exact_part)

    if args.format == "json":
        _emit(json.dumps(record, indent=2) + "\n", args.output)
    else:
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_blocks < 1:
        raise InputError("--max-blocks must be >= 1")
    params = _params(args)
    if params is None:
        raise InputError("--k is required")
    horizon = args.max_blocks * params.two_n
    label = f"N={params.n} (k={params.k}, l={params.l}), lengths 0..{horizon}"
    failures = []
    if args.machine:
        machine = load_machine(args.machine)
        if isinstance(machine, UnaryDfa):
            cex = dfa_counterexample(machine, params.promise)
            checks = [("dfa machine file", cex)]
        else:
            checks = [("mcqfa machine file (float, tol 1e-9)",
                       mcqfa_counterexample(machine, params.promise, horizon))]
    else:
        exact = verify_family_exactness(params.k, args.max_blocks, params.l)
        checks = [
            ("two-state rotation automaton (exact)", exact.counterexample),
            (f"{2 ** (params.k + 1)}-state cycle DFA", dfa_counterexample(build_min_dfa(params), params.promise)),
        ]
    out = [f"verify {label}"]
    for name, cex in checks:
        if cex is None:
            out.append(f"PASS {name}")
        else:
            out.append(f"FAIL {name}: counterexample m={cex} ({params.promise.classify(cex)})")
            failures.append(cex)
    _emit("\n".join(out) + "\n", args.output)
    return EXIT_FAIL if failures else EXIT_OK


def cmd_search(args) -> int:
    if args.n < 1:
        raise InputError("--n must be positive")
    if not 1 <= args.max_states <= MAX_SEARCH_STATES:
        raise InputError(f"--max-states must lie in [1, {MAX_SEARCH_STATES}]")
    if args.workers < 1:
        raise InputError("--workers must be >= 1")
    report = min_dfa_search(args.n, args.max_states, workers=args.workers)
    if args.format == "json":
        _emit(json.dumps(report.to_dict(timing=True), indent=2) + "\n", args.output)
    else:
        w = report.witness
        out = [
            f"n: {report.n}",
            f"minimal_states: {report.minimal_states if report.found else f'NotFoundWithin({report.max_states})'}",
            (f"witness: tail_len={w.tail_len} cycle_len={w.cycle_len} accepting={sorted(w.accepting)}"
             if w else "witness: none"),
            f"machines_checked: {report.machines_checked}",
            "size machines solvers",
        ]
        out += [f"{s} {report.machines_per_size[s]} {report.solvers_per_size[s]}" for s in report.machines_per_size]
        _emit("\n".join(out) + "\n", args.output)
    return EXIT_OK if report.found else EXIT_FAIL


def cmd_table(args) -> int:
    if args.k_max < 1:
        raise InputError("--k-max must be >= 1")
    rows = family_table(args.k_max)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(TABLE_HEADER)
        for r in rows:
            writer.writerow([r.k, r.N, r.qfa_states, r.dfa_states, r.provenance])
        text = buf.getvalue()
    elif args.format == "json":
        text = json.dumps([r.as_dict() for r in rows], indent=2) + "\n"
    else:
        cells = [list(TABLE_HEADER)] + [[str(v) for v in r.as_dict().values()] for r in rows]
        widths = [max(len(c[i]) for c in cells) for i in range(len(TABLE_HEADER))]
        text = "".join("  ".join(c.rjust(w) for c, w in zip(line, widths)).rstrip() + "\n" for line in cells)
    _emit(text, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="exactqfa",
                                     description="Two-state exact QFAs versus DFAs on the unary promise family A^N.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def family_flags(p, k_required=False):
        p.add_argument("--k", type=int, required=k_required, help="N = 2^k (2l+1)")
        p.add_argument("--l", type=int, default=0)
        p.add_argument("-o", "--output", help="write to this path instead of stdout")

    p = sub.add_parser("simulate", help="run a machine on a^m")
    family_flags(p)
    p.add_argument("--machine", help="JSON machine file (mcqfa or dfa)")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="check exact solution of A^N up to a length bound")
    family_flags(p, k_required=True)
    p.add_argument("--machine", help="verify this machine file instead of the built-in family")
    p.add_argument("--max-blocks", type=int, default=8)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive minimal-DFA search for A^n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-states", type=int, default=16)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("table", help="succinctness table for k = 1..k_max")
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UnitarityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (InputError, MachineFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
