"""The promise family A^N with N = 2^k (2l+1) and its witnessing machines."""
from __future__ import annotations

from dataclasses import asdict, dataclass

from .core import Mcqfa, PromiseSpec, UnaryDfa, dfa_solves_exactly
from .exact import RotationMachine
from .oracle import BRUTE_FORCE_CUTOFF, analytic_min_states, min_dfa_search

BRUTE_FORCE = "brute-force"
ANALYTIC = "analytic"


@dataclass(frozen=True)
class FamilyParams:
    k: int
    l: int = 0

    def __post_init__(self):
        if self.k < 0 or self.l < 0:
            raise ValueError("k and l must be nonnegative")

    @property
    def n(self) -> int:
        return 2**self.k * (2 * self.l + 1)

    @property
    def two_n(self) -> int:
        return 2 * self.n

    @property
    def promise(self) -> PromiseSpec:
        return PromiseSpec(self.n)


def build_rotation(params: FamilyParams) -> RotationMachine:
    return RotationMachine(params.two_n)


def build_mcqfa(params: FamilyParams) -> tuple[Mcqfa, RotationMachine]:
    """Two-state MCQFA rotating by pi/2N per ``a``, with its exact twin."""
    rot = build_rotation(params)
    return rot.to_mcqfa(), rot


def build_min_dfa(params: FamilyParams) -> UnaryDfa:
    """Cycle of 2^(k+1) states accepting only state 0.

    Length m lands on m mod 2^(k+1): Yes-lengths (multiples of 2N) hit 0 and
    No-lengths hit 2^k, because 2l+1 is odd.
    """
    dfa = UnaryDfa(0, 2 ** (params.k + 1), frozenset({0}))
    if not dfa_solves_exactly(dfa, params.promise):
        raise AssertionError(f"constructed DFA does not solve A^{params.n}")
    return dfa


@dataclass(frozen=True)
class TableRow:
    k: int
    N: int
    qfa_states: int
    dfa_states: int
    provenance: str

    def as_dict(self) -> dict:
        return asdict(self)


TABLE_HEADER = ("k", "N", "qfa_states", "dfa_states", "provenance")


def family_table(k_max: int, cutoff: int = BRUTE_FORCE_CUTOFF) -> list[TableRow]:
    """Succinctness rows for k = 1..k_max (l = 0).

    The DFA column comes from exhaustive search while 2^(k+1) <= cutoff and
    from the closed form beyond it.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    rows = []
    for k in range(1, k_max + 1):
        params = FamilyParams(k)
        qfa, _ = build_mcqfa(params)
        expected = analytic_min_states(params.n)
        if expected <= cutoff:
            report = min_dfa_search(params.n, cutoff)
            if report.minimal_states != expected:
                raise AssertionError(f"search gave {report.minimal_states} states for N={params.n}, "
                                     f"closed form gives {expected}")
            rows.append(TableRow(k, params.n, qfa.num_states, report.minimal_states, BRUTE_FORCE))
        else:
            rows.append(TableRow(k, params.n, qfa.num_states, expected, ANALYTIC))
    return rows
