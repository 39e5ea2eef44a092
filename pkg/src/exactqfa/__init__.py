"""Exact two-state quantum automata versus minimal DFAs on unary promise problems."""

__version__ = "0.1.0"

from .core import (
    LETTER,
    LMARK,
    RMARK,
    Mcqfa,
    PromiseSpec,
    QuantumRunResult,
    UnaryDfa,
    UnitarityError,
    Verdict,
    check_unitary,
    classify,
    dfa_solves_exactly,
    run_mcqfa,
    run_unary_dfa,
)
from .exact import (
    AngleState,
    ExactOutcome,
    OutcomeKind,
    RotationMachine,
    cross_check_float,
    exact_run,
    verify_family_exactness,
)
from .family import FamilyParams, build_mcqfa, build_min_dfa, family_table
from .oracle import (
    CycleVerdict,
    SearchReport,
    analytic_min_states,
    cycle_solvable,
    min_dfa_search,
    oracle_vs_analytic,
)
