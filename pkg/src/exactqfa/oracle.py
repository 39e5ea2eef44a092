"""Lower-bound verification for unary DFAs solving A^N.

Two independent routes to the minimal state count:

* the cycle predicate: a cycle of length t can separate Yes- from No-lengths
  iff N is not divisible by gcd(2N, t), i.e. iff 2^(v2(N)+1) divides t;
* an exhaustive search over every rho-shaped unary DFA and every accepting set.
"""
from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .core import PromiseSpec, UnaryDfa, Verdict, check_horizon, dfa_solves_exactly

MAX_SEARCH_STATES = 20
BRUTE_FORCE_CUTOFF = 16


def v2(n: int) -> int:
    """2-adic valuation of a positive integer."""
    if n < 1:
        raise ValueError("n must be positive")
    return (n & -n).bit_length() - 1


@dataclass(frozen=True)
class CycleVerdict:
    t: int
    n: int
    solvable: bool
    d: int

    @property
    def t_reduced(self) -> int:
        return self.t // self.d


def residue_sets(t: int, n: int) -> tuple[set[int], set[int]]:
    """Cycle positions reached by Yes-lengths and by No-lengths."""
    yes = {(i * 2 * n) % t for i in range(t)}
    no = {(n + i * 2 * n) % t for i in range(t)}
    return yes, no


def cycle_solvable(t: int, n: int) -> CycleVerdict:
    if t < 1 or n < 1:
        raise ValueError("t and n must be positive")
    d = math.gcd(2 * n, t)
    solvable = n % d != 0
    yes, no = residue_sets(t, n)
    if solvable != yes.isdisjoint(no):
        raise AssertionError(f"gcd predicate and residue sets disagree at t={t}, n={n}")
    return CycleVerdict(t, n, solvable, d)


def analytic_min_states(n: int) -> int:
    return 2 ** (v2(n) + 1)


@dataclass
class SearchReport:
    n: int
    max_states: int
    minimal_states: int | None
    witness: UnaryDfa | None
    machines_checked: int
    machines_per_size: dict[int, int] = field(default_factory=dict)
    solvers_per_size: dict[int, int] = field(default_factory=dict)
    ms_per_size: dict[int, float] = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.minimal_states is not None

    def to_dict(self, timing: bool = True) -> dict:
        from .serialize import machine_to_dict

        out = {
            "n": self.n,
            "max_states": self.max_states,
            "minimal_states": self.minimal_states if self.found else f"NotFoundWithin({self.max_states})",
            "witness": machine_to_dict(self.witness) if self.witness else None,
            "machines_checked": self.machines_checked,
            "machines_per_size": {str(k): v for k, v in self.machines_per_size.items()},
            "solvers_per_size": {str(k): v for k, v in self.solvers_per_size.items()},
        }
        if timing:
            out["ms_per_size"] = {str(k): round(v, 3) for k, v in self.ms_per_size.items()}
        return out


def constraint_masks(tail_len: int, cycle_len: int, n: int) -> tuple[int, int]:
    """Bitmasks of states that must accept / must reject for shape (p, t) on A^n."""
    probe = UnaryDfa(tail_len, cycle_len)
    spec = PromiseSpec(n)
    must_accept = must_reject = 0
    for m in range(0, check_horizon(probe, spec), n):
        bit = 1 << probe.state_after(m)
        if spec.classify(m) is Verdict.YES:
            must_accept |= bit
        else:
            must_reject |= bit
    return must_accept, must_reject


def _scan_shape(args: tuple[int, int, int]) -> tuple[int, int, int, int | None]:
    """Test every accepting subset of shape (p, t); returns (p, t, #solvers, smallest solving mask)."""
    tail_len, cycle_len, n = args
    size = tail_len + cycle_len
    must_accept, must_reject = constraint_masks(tail_len, cycle_len, n)
    subsets = np.arange(1 << size, dtype=np.int64)
    ok = ((subsets & must_accept) == must_accept) & ((subsets & must_reject) == 0)
    hits = np.flatnonzero(ok)
    first = int(hits[0]) if hits.size else None
    return tail_len, cycle_len, int(hits.size), first


def _mask_to_states(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def min_dfa_search(n: int, max_states: int, workers: int = 1) -> SearchReport:
    """Smallest unary DFA solving A^n exactly, by exhausting sizes 1, 2, ... max_states.

    Every size up to and including the minimal one is scanned completely, so
    counts and the witness do not depend on ``workers``. Among solvers of the
    minimal size the witness minimises (tail_len, cycle_len, accepting mask).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 1 <= max_states <= MAX_SEARCH_STATES:
        raise ValueError(f"max_states must lie in [1, {MAX_SEARCH_STATES}]")
    report = SearchReport(n, max_states, None, None, 0)
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for size in range(1, max_states + 1):
            start = time.perf_counter()
            shapes = [(p, size - p, n) for p in range(size)]
            results = list(pool.map(_scan_shape, shapes) if pool else map(_scan_shape, shapes))
            report.ms_per_size[size] = (time.perf_counter() - start) * 1000.0
            report.machines_per_size[size] = size * (1 << size)
            report.machines_checked += size * (1 << size)
            report.solvers_per_size[size] = sum(r[2] for r in results)
            candidates = [(p, t, mask) for p, t, _, mask in results if mask is not None]
            if candidates:
                p, t, mask = min(candidates)
                witness = UnaryDfa(p, t, _mask_to_states(mask))
                if not dfa_solves_exactly(witness, PromiseSpec(n)):
                    raise AssertionError(f"search witness {witness} fails the direct check")
                report.minimal_states = size
                report.witness = witness
                break
    finally:
        if pool:
            pool.shutdown()
    return report


@dataclass(frozen=True)
class OracleComparison:
    ok: bool
    offending_n: int | None = None
    reports: tuple[SearchReport, ...] = ()

    def __bool__(self):
        return self.ok


def oracle_vs_analytic(n_max: int, max_states: int, workers: int = 1) -> OracleComparison:
    reports = []
    for n in range(1, n_max + 1):
        report = min_dfa_search(n, max_states, workers)
        reports.append(report)
        if report.minimal_states != analytic_min_states(n):
            return OracleComparison(False, n, tuple(reports))
    return OracleComparison(True, None, tuple(reports))
