"""Measure-once quantum finite automata and unary DFAs over the alphabet {a}.

Inputs are unary, so a string a^m is identified with its length m. Every run
is framed by the end markers: the left-marker unitary is applied first and the
right-marker unitary last, even when both are the identity.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterator, Mapping

import numpy as np

LMARK = "lmark"
LETTER = "a"
RMARK = "rmark"
SYMBOLS = (LMARK, LETTER, RMARK)

UNITARY_TOL = 1e-9
EXACT_TOL = 1e-9


class UnitarityError(ValueError):
    """A transition matrix is not orthogonal within tolerance."""


def check_unitary(matrix, tolerance: float = UNITARY_TOL) -> bool:
    """True iff ``max |(M M^T - I)_ij| <= tolerance`` for a square real matrix."""
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix must be square, got shape {m.shape}")
    deviation = m @ m.T - np.eye(m.shape[0])
    return bool(np.max(np.abs(deviation), initial=0.0) <= tolerance)


def rotation(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


@dataclass(frozen=True, eq=False)
class Mcqfa:
    """Measure-once QFA with real unitaries for the left marker, ``a`` and the right marker."""

    num_states: int
    unitaries: Mapping[str, np.ndarray]
    initial_state: int = 0
    accepting: frozenset[int] = frozenset({0})

    def __post_init__(self):
        if self.num_states < 1:
            raise ValueError("num_states must be positive")
        if set(self.unitaries) != set(SYMBOLS):
            raise ValueError(f"unitaries must be given for exactly {SYMBOLS}, got {sorted(self.unitaries)}")
        frozen = {}
        for sym in SYMBOLS:
            u = np.array(self.unitaries[sym], dtype=float)
            if u.shape != (self.num_states, self.num_states):
                raise ValueError(f"unitary for {sym!r} has shape {u.shape}, expected "
                                 f"{(self.num_states, self.num_states)}")
            if not check_unitary(u, UNITARY_TOL):
                raise UnitarityError(f"unitary for {sym!r} is not orthogonal within {UNITARY_TOL}")
            u.setflags(write=False)
            frozen[sym] = u
        object.__setattr__(self, "unitaries", frozen)
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        if not 0 <= self.initial_state < self.num_states:
            raise ValueError("initial_state out of range")
        if any(not 0 <= q < self.num_states for q in self.accepting):
            raise ValueError("accepting states out of range")

    @property
    def accept_projector(self) -> np.ndarray:
        diag = np.zeros(self.num_states)
        diag[sorted(self.accepting)] = 1.0
        return np.diag(diag)


@dataclass(frozen=True)
class QuantumRunResult:
    final_vector: np.ndarray
    accept_probability: float

    @property
    def reject_probability(self) -> float:
        return 1.0 - self.accept_probability


def _measure(machine: Mcqfa, v: np.ndarray) -> QuantumRunResult:
    projected = v[sorted(machine.accepting)]
    return QuantumRunResult(v, float(projected @ projected))


def iter_mcqfa(machine: Mcqfa, max_length: int) -> Iterator[QuantumRunResult]:
    """Yield the run result for a^0, a^1, ..., a^max_length.

    Performs the same floating-point operations, in the same order, as
    :func:`run_mcqfa` for each length, so results are bit-identical.
    """
    u_l, u_a, u_r = (machine.unitaries[s] for s in SYMBOLS)
    v = np.zeros(machine.num_states)
    v[machine.initial_state] = 1.0
    v = u_l @ v
    for m in range(max_length + 1):
        yield _measure(machine, u_r @ v)
        if m < max_length:
            v = u_a @ v


def run_mcqfa(machine: Mcqfa, input_length: int) -> QuantumRunResult:
    if input_length < 0:
        raise ValueError("input_length must be nonnegative")
    u_l, u_a, u_r = (machine.unitaries[s] for s in SYMBOLS)
    v = np.zeros(machine.num_states)
    v[machine.initial_state] = 1.0
    v = u_l @ v
    for _ in range(input_length):
        v = u_a @ v
    return _measure(machine, u_r @ v)


@dataclass(frozen=True)
class UnaryDfa:
    """Unary DFA in rho shape: a tail 0..p-1 feeding the cycle p..p+t-1."""

    tail_len: int
    cycle_len: int
    accepting: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.tail_len < 0 or self.cycle_len < 1:
            raise ValueError("need tail_len >= 0 and cycle_len >= 1")
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        if any(not 0 <= q < self.num_states for q in self.accepting):
            raise ValueError("accepting states out of range")

    @property
    def num_states(self) -> int:
        return self.tail_len + self.cycle_len

    def step(self, state: int) -> int:
        return state + 1 if state + 1 < self.num_states else self.tail_len

    def state_after(self, input_length: int) -> int:
        p, t = self.tail_len, self.cycle_len
        if input_length < p:
            return input_length
        return p + (input_length - p) % t

    def accepts(self, input_length: int) -> bool:
        return self.state_after(input_length) in self.accepting


def run_unary_dfa(machine: UnaryDfa, input_length: int) -> bool:
    if input_length < 0:
        raise ValueError("input_length must be nonnegative")
    return machine.accepts(input_length)


class Verdict(enum.Enum):
    YES = "Yes"
    NO = "No"
    OUTSIDE = "OutsidePromise"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class PromiseSpec:
    """Promise problem A^N: a^{iN} is Yes for even i >= 0, No for odd i."""

    period_n: int

    def __post_init__(self):
        if self.period_n < 1:
            raise ValueError("period_n must be positive")

    def classify(self, input_length: int) -> Verdict:
        r = input_length % (2 * self.period_n)
        if r == 0:
            return Verdict.YES
        if r == self.period_n:
            return Verdict.NO
        return Verdict.OUTSIDE


def classify(spec: PromiseSpec, input_length: int) -> Verdict:
    return spec.classify(input_length)


def check_horizon(machine: UnaryDfa, spec: PromiseSpec) -> int:
    # DFA output is t-periodic from p on and the promise is 2N-periodic.
    return machine.tail_len + math.lcm(machine.cycle_len, 2 * spec.period_n)


def dfa_counterexample(machine: UnaryDfa, spec: PromiseSpec, horizon: int | None = None) -> int | None:
    """Smallest promise length the DFA gets wrong, or None."""
    if horizon is None:
        horizon = check_horizon(machine, spec)
    n = spec.period_n
    # only multiples of N carry a constraint
    for m in range(0, horizon, n):
        verdict = spec.classify(m)
        if machine.accepts(m) != (verdict is Verdict.YES):
            return m
    return None


def dfa_solves_exactly(machine: UnaryDfa, spec: PromiseSpec) -> bool:
    return dfa_counterexample(machine, spec) is None


def mcqfa_counterexample(machine: Mcqfa, spec: PromiseSpec, max_length: int,
                         tolerance: float = EXACT_TOL) -> int | None:
    """Smallest promise length in [0, max_length] not decided with probability 1 (within tolerance)."""
    for m, result in enumerate(iter_mcqfa(machine, max_length)):
        verdict = spec.classify(m)
        if verdict is Verdict.YES and result.accept_probability < 1.0 - tolerance:
            return m
        if verdict is Verdict.NO and result.accept_probability > tolerance:
            return m
    return None
