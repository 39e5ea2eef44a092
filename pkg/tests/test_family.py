import math

import numpy as np
import pytest

from exactqfa.core import LETTER, LMARK, RMARK, check_unitary, dfa_solves_exactly
from exactqfa.exact import verify_rotation_exactness
from exactqfa.family import (
    ANALYTIC, BRUTE_FORCE, FamilyParams, build_mcqfa, build_min_dfa, family_table,
)


def test_m1_structure():
    qfa, rot = build_mcqfa(FamilyParams(1))
    assert qfa.num_states == 2 and qfa.accepting == {0} and qfa.initial_state == 0
    assert rot.denominator == 4
    assert rot.theta == pytest.approx(math.pi / 4)
    np.testing.assert_array_equal(qfa.unitaries[LMARK], np.eye(2))
    np.testing.assert_array_equal(qfa.unitaries[RMARK], np.eye(2))
    c = math.cos(math.pi / 4)
    np.testing.assert_allclose(qfa.unitaries[LETTER], [[c, -c], [c, c]])


def test_k0_is_quarter_turn():
    qfa, rot = build_mcqfa(FamilyParams(0))
    assert rot.theta == pytest.approx(math.pi / 2)
    np.testing.assert_allclose(qfa.unitaries[LETTER] @ [1.0, 0.0], [0.0, 1.0], atol=1e-15)


def test_generalized_params():
    params = FamilyParams(1, 1)
    assert params.n == 6
    _, rot = build_mcqfa(params)
    assert rot.theta == pytest.approx(math.pi / 12)


def test_params_validation():
    with pytest.raises(ValueError):
        FamilyParams(-1)


@pytest.mark.parametrize("k, l, size", [(1, 0, 4), (0, 1, 2), (2, 0, 8)])
def test_min_dfa_shape(k, l, size):
    dfa = build_min_dfa(FamilyParams(k, l))
    assert (dfa.tail_len, dfa.cycle_len, dfa.accepting) == (0, size, {0})
    assert dfa_solves_exactly(dfa, FamilyParams(k, l).promise)


def test_family_machines_over_grid():
    for k in range(11):
        for l in range(4):
            params = FamilyParams(k, l)
            assert dfa_solves_exactly(build_min_dfa(params), params.promise)
            qfa, rot = build_mcqfa(params)
            assert verify_rotation_exactness(rot, params.promise, 8 * params.two_n)
            for u in qfa.unitaries.values():
                assert check_unitary(u, 1e-12)


def test_family_table_rows():
    rows = family_table(5)
    assert [(r.k, r.N, r.qfa_states, r.dfa_states) for r in rows] == [
        (1, 2, 2, 4), (2, 4, 2, 8), (3, 8, 2, 16), (4, 16, 2, 32), (5, 32, 2, 64)]
    assert [r.provenance for r in rows] == [BRUTE_FORCE] * 3 + [ANALYTIC] * 2


def test_family_table_requires_positive_kmax():
    with pytest.raises(ValueError):
        family_table(0)
