"""Exit criteria. Each test appends one PASS/FAIL line to the terminal summary.

Run alone with ``pytest tests/test_acceptance.py``.
"""
import json
import math
import subprocess
import sys
import time

import numpy as np
import pytest

from exactqfa.cli import main
from exactqfa.core import PromiseSpec, Verdict, iter_mcqfa
from exactqfa.exact import OutcomeKind, RotationMachine, exact_run, max_float_deviation
from exactqfa.family import FamilyParams, build_mcqfa
from exactqfa.oracle import analytic_min_states, cycle_solvable, min_dfa_search

from conftest import ACCEPTANCE_LINES


@pytest.fixture
def record(request):
    def _record(label, ok, detail=""):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
        print(ACCEPTANCE_LINES[-1])
        assert ok, detail
    return _record


def test_ac1_exactness(record):
    start = time.perf_counter()
    mismatches = 0
    for k in range(11):
        n = 2**k
        rot = RotationMachine(2 * n)
        for m in range(16 * n + 1):
            kind = exact_run(rot, m).kind
            mismatches += (kind is OutcomeKind.ACCEPT) != (m % (2 * n) == 0)
            mismatches += (kind is OutcomeKind.REJECT) != (m % (2 * n) == n)
    elapsed = time.perf_counter() - start
    record("AC1 two-state automaton exact for k=0..10, m<=16*2^k",
           mismatches == 0 and elapsed < 1.0, f"{mismatches} mismatches in {elapsed:.3f}s")


def _exhausted(report, expected):
    return (report.minimal_states == expected
            and all(report.solvers_per_size[s] == 0 for s in range(1, expected))
            and all(report.machines_per_size[s] == s * 2**s for s in range(1, expected + 1)))


def test_ac2_minimality(record):
    start = time.perf_counter()
    got = {n: min_dfa_search(n, 16) for n in (2, 4, 8)}
    elapsed = time.perf_counter() - start
    ok = all(_exhausted(got[n], e) for n, e in ((2, 4), (4, 8), (8, 16))) and elapsed < 120
    record("AC2 minimal DFA sizes for n=2,4,8", ok,
           f"{[got[n].minimal_states for n in (2, 4, 8)]} in {elapsed:.2f}s")


def test_ac3_corollary(record):
    start = time.perf_counter()
    cases = {1: 2, 3: 2, 5: 2, 6: 4, 12: 8}
    found = {n: min_dfa_search(n, 16) for n in cases}
    elapsed = time.perf_counter() - start
    ok = (all(_exhausted(found[n], e) and analytic_min_states(n) == e for n, e in cases.items())
          and elapsed < 60)
    record("AC3 corollary sizes for n=1,3,5,6,12", ok,
           f"{[found[n].minimal_states for n in cases]} in {elapsed:.2f}s")


def test_ac4_lemma_consistency(record):
    mismatches = 0
    for t in range(1, 65):
        for n in range(1, 65):
            yes = {(i * 2 * n) % t for i in range(t)}
            no = {(n + i * 2 * n) % t for i in range(t)}
            mismatches += cycle_solvable(t, n).solvable != yes.isdisjoint(no)
    record("AC4 gcd predicate vs residue sets, 4096 cases", mismatches == 0, f"{mismatches} mismatches")


def test_ac5_float_exact_agreement(record):
    worst = max(max_float_deviation(RotationMachine(d), 1000) for d in range(1, 65))
    record("AC5 |cos^2 - float| <= 1e-9, D<=64, m<=1000", worst <= 1e-9, f"max deviation {worst:.3e}")


def test_ac6_norm_conservation(record):
    worst = 0.0
    for k in range(11):
        qfa, _ = build_mcqfa(FamilyParams(k))
        for res in iter_mcqfa(qfa, 10_000):
            worst = max(worst, abs(np.linalg.norm(res.final_vector) - 1.0))
    record("AC6 norm drift over 1e4 steps, k=0..10", worst <= 1e-6, f"max drift {worst:.3e}")


def test_ac7_negative_control(record, sabotaged_machine, capsys):
    outcomes = []
    for k in (1, 2, 3):
        n = 2**k
        code = main(["verify", "--k", str(k), "--machine", str(sabotaged_machine(n)), "--max-blocks", "8"])
        out = capsys.readouterr().out
        outcomes.append(code == 1 and f"counterexample m={n} " in out)
    record("AC7 pi/3N machine fails verify at m=N", all(outcomes), f"k=1,2,3 -> {outcomes}")


def test_ac8_determinism(record):
    def witness(workers):
        cp = subprocess.run([sys.executable, "-m", "exactqfa", "search", "--n", "4", "--max-states", "10",
                             "--workers", str(workers), "--format", "json"],
                            capture_output=True, text=True, check=True)
        report = json.loads(cp.stdout)
        report.pop("ms_per_size")
        return report

    runs = [witness(w) for w in (1, 1, 4)]
    ok = runs[0] == runs[1] == runs[2] and runs[0]["witness"] is not None
    record("AC8 search --n 4 --max-states 10 deterministic across workers", ok,
           f"witness {runs[0]['witness']}")
