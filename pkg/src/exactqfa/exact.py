"""Exact simulation of the two-state rotation automaton.

With U_a the rotation by pi/D and both end markers the identity, the state
after a^m is (cos(j pi/D), sin(j pi/D)) with j = m mod 2D. Acceptance with
certainty and rejection with certainty are then integer congruences on j, so
no floating point enters the decision.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .core import LETTER, LMARK, RMARK, Mcqfa, PromiseSpec, Verdict, rotation, run_mcqfa, iter_mcqfa


class OutcomeKind(enum.Enum):
    ACCEPT = "ExactlyAccept"
    REJECT = "ExactlyReject"
    INTERMEDIATE = "Intermediate"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class RotationMachine:
    denominator: int

    def __post_init__(self):
        if self.denominator < 1:
            raise ValueError("denominator must be >= 1")

    @property
    def theta(self) -> float:
        return math.pi / self.denominator

    def to_mcqfa(self) -> Mcqfa:
        eye = np.eye(2)
        return Mcqfa(2, {LMARK: eye, LETTER: rotation(self.theta), RMARK: eye}, 0, frozenset({0}))


@dataclass(frozen=True)
class AngleState:
    """State vector (cos(index*pi/D), sin(index*pi/D)), index reduced mod 2D."""

    index: int
    denominator: int

    def __post_init__(self):
        if not 0 <= self.index < 2 * self.denominator:
            raise ValueError("index must lie in [0, 2D)")

    def vector(self) -> np.ndarray:
        a = self.index * math.pi / self.denominator
        return np.array([math.cos(a), math.sin(a)])


@dataclass(frozen=True)
class ExactOutcome:
    kind: OutcomeKind
    state: AngleState
    # informational only, never used to decide kind
    probability: float


def outcome_kind(index: int, denominator: int) -> OutcomeKind:
    if index % denominator == 0:
        return OutcomeKind.ACCEPT
    if (2 * index) % (2 * denominator) == denominator:
        return OutcomeKind.REJECT
    return OutcomeKind.INTERMEDIATE


def exact_run(machine: RotationMachine, input_length: int) -> ExactOutcome:
    if input_length < 0:
        raise ValueError("input_length must be nonnegative")
    d = machine.denominator
    j = input_length % (2 * d)
    kind = outcome_kind(j, d)
    prob = {OutcomeKind.ACCEPT: 1.0, OutcomeKind.REJECT: 0.0}.get(kind)
    if prob is None:
        prob = math.cos(j * math.pi / d) ** 2
    return ExactOutcome(kind, AngleState(j, d), prob)


@dataclass(frozen=True)
class ExactnessCheck:
    ok: bool
    counterexample: int | None = None
    checked_up_to: int = 0

    def __bool__(self):
        return self.ok


def verify_rotation_exactness(machine: RotationMachine, spec: PromiseSpec, max_length: int) -> ExactnessCheck:
    """Check every promise length in [0, max_length] is decided with certainty."""
    for m in range(0, max_length + 1, spec.period_n):
        verdict = spec.classify(m)
        kind = exact_run(machine, m).kind
        if verdict is Verdict.YES and kind is not OutcomeKind.ACCEPT:
            return ExactnessCheck(False, m, max_length)
        if verdict is Verdict.NO and kind is not OutcomeKind.REJECT:
            return ExactnessCheck(False, m, max_length)
    return ExactnessCheck(True, None, max_length)


def verify_family_exactness(k: int, max_blocks: int, l: int = 0) -> ExactnessCheck:
    """Rotation by pi/2N against A^N with N = 2^k (2l+1), lengths up to max_blocks * 2N."""
    if k < 0 or l < 0 or max_blocks < 1:
        raise ValueError("need k >= 0, l >= 0, max_blocks >= 1")
    n = 2**k * (2 * l + 1)
    return verify_rotation_exactness(RotationMachine(2 * n), PromiseSpec(n), max_blocks * 2 * n)


def cross_check_float(machine: RotationMachine, input_length: int, tolerance: float) -> bool:
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    j = input_length % (2 * machine.denominator)
    exact_prob = math.cos(j * math.pi / machine.denominator) ** 2
    float_prob = run_mcqfa(machine.to_mcqfa(), input_length).accept_probability
    return abs(exact_prob - float_prob) <= tolerance


def max_float_deviation(machine: RotationMachine, max_length: int) -> float:
    """Largest |cos^2(j pi/D) - simulated probability| over lengths 0..max_length."""
    worst = 0.0
    d = machine.denominator
    for m, result in enumerate(iter_mcqfa(machine.to_mcqfa(), max_length)):
        j = m % (2 * d)
        worst = max(worst, abs(math.cos(j * math.pi / d) ** 2 - result.accept_probability))
    return worst
