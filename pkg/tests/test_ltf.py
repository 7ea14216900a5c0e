from fractions import Fraction

import numpy as np
import pytest

from goldilocks.boolfn import BooleanFunction, all_functions, is_ample, is_positive
from goldilocks.errors import ClassError, InvalidRealizationError, NotAmpleError
from goldilocks.ltf import (
    AMPLE,
    POSITIVE,
    SMALL,
    AsummabilityWitness,
    Infeasible,
    Realization,
    amplify,
    find_realization,
    is_goldilocks,
    is_semi_goldilocks,
    is_threshold,
    phi_inverse,
    phi_nondegenerate,
)
from goldilocks.oracle import integer_ltf_tables

from conftest import AND2, CONST0_2, MAJ3, OR2, XOR2, X


def test_realize_and2():
    r = find_realization(AND2, {POSITIVE, SMALL})
    assert r.realizes(AND2) and r.positive and r.small


def test_realize_maj3_all_flags():
    r = find_realization(MAJ3, {POSITIVE, SMALL, AMPLE})
    assert r.realizes(MAJ3) and r.positive and r.small and r.ample


def test_xor_is_infeasible_with_witness():
    r = find_realization(XOR2)
    assert isinstance(r, Infeasible) and not r
    assert r.witness.verify(XOR2)
    assert AsummabilityWitness((1, 1, 1, 1)).verify(XOR2)
    assert not AsummabilityWitness((1, 0, 0, 1)).verify(XOR2)


def test_constraint_infeasible_for_ltf():
    # OR2 is a threshold function but no realization has small weights
    r = find_realization(OR2, {SMALL})
    assert isinstance(r, Infeasible)
    assert r.status != "infeasible" or r.witness is None


def test_unknown_constraint_rejected():
    with pytest.raises(ValueError):
        find_realization(AND2, {"huge"})


def test_is_threshold_examples():
    assert is_threshold(MAJ3)
    assert not is_threshold(XOR2)


def test_ltf_count_three():
    assert sum(is_threshold(f) for f in all_functions(3)) == 104


def test_monotone_three_variable_functions_are_threshold():
    for f in all_functions(3):
        if is_positive(f):
            assert is_threshold(f)


def test_lp_agrees_with_integer_oracle():
    for n in range(5):
        ref = integer_ltf_tables(n)
        for f in all_functions(n):
            assert is_threshold(f) == (f.bits in ref)


def test_every_realization_is_valid():
    for n in range(4):
        for f in all_functions(n):
            r = find_realization(f)
            if r:
                assert r.realizes(f)
            else:
                assert r.witness.verify(f)


def test_amplify_examples():
    r = Realization((1, 1, 1), Fraction(3, 2))
    assert r.realizes(MAJ3) and not r.ample
    out = amplify(r, MAJ3)
    assert out.theta == 1 and out.ample and out.realizes(MAJ3)
    already = Realization((1, 1, 1), 1)
    assert amplify(already, MAJ3) == already
    one = BooleanFunction.const(1, 1)
    r = Realization((1,), -1)  # empty false set
    assert r.realizes(one) and amplify(r, one) == r and r.ample


def test_amplify_errors():
    with pytest.raises(NotAmpleError):
        amplify(Realization((1, 1), 1), AND2)
    with pytest.raises(InvalidRealizationError):
        amplify(Realization((1, 1, 1), 5), MAJ3)


def test_amplify_random_ample():
    rng = np.random.default_rng(7)
    done = 0
    while done < 300:
        w = tuple(int(v) for v in rng.integers(-5, 6, size=4))
        r = Realization(w, Fraction(int(rng.integers(-10, 11)), 2))
        f = r.function()
        if is_ample(f):
            out = amplify(r, f)
            assert out.realizes(f) and out.ample
            done += 1


def test_phi_examples():
    assert phi_nondegenerate(CONST0_2) == OR2
    assert phi_nondegenerate(AND2) == AND2
    assert phi_inverse(OR2) == CONST0_2
    with pytest.raises(ClassError):
        phi_nondegenerate(OR2)
    with pytest.raises(ClassError):
        phi_inverse(CONST0_2)


def test_phi_is_a_bijection_onto_nondegenerate_positive_ltfs():
    from goldilocks.chow import degree
    from goldilocks.oracle import semi_goldilocks_oracle

    for n in range(5):
        image = {phi_nondegenerate(BooleanFunction(n, b)).bits for b in semi_goldilocks_oracle(n)}
        target = {b for b in integer_ltf_tables(n)
                  if is_positive(BooleanFunction(n, b)) and degree(BooleanFunction(n, b)) == n}
        assert image == target
        assert len(image) == len(semi_goldilocks_oracle(n))


def test_class_predicates():
    assert is_semi_goldilocks(AND2) and not is_goldilocks(AND2)
    assert is_goldilocks(MAJ3)
    assert not is_semi_goldilocks(OR2) and not is_semi_goldilocks(XOR2)
    assert is_semi_goldilocks(X("0000")) and not is_goldilocks(X("0000"))


def test_realization_json_and_normalize():
    r = Realization((2, 2), 2)
    assert r.to_json() == {"w": ["2/1", "2/1"], "theta": "2/1"}
    assert r.normalized().theta == 1
    with pytest.raises(ValueError):
        Realization((1,), 0).normalized()
