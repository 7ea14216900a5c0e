import pytest
from hypothesis import given, strategies as st

from goldilocks.boolfn import (
    ARITY_MAX,
    BooleanFunction,
    Point,
    all_functions,
    anti_self_dualize,
    compose,
    dual,
    evaluate,
    format_truth_table,
    inverse_perm,
    is_ample,
    is_positive,
    is_self_dual,
    is_small,
    orbit,
    parse_truth_table,
    permute,
    reduce,
    self_dualize,
    u_complement,
)
from goldilocks.errors import ArityError, NotSelfDualError, ParseError, PermError

from conftest import AND2, CONST0_2, CONST1_2, DICT1_2, DICT2_2, MAJ3, OR2, XOR2, X


def functions(max_n=5):
    return st.integers(0, max_n).flatmap(
        lambda n: st.integers(0, (1 << (1 << n)) - 1).map(lambda b: BooleanFunction(n, b)))


def perms(n):
    return st.permutations(list(range(1, n + 1))).map(tuple)


def test_evaluate_examples():
    assert evaluate(AND2, (1, 1)) == 1
    assert evaluate(AND2, (1, 0)) == 0
    assert evaluate(MAJ3, (1, 1, 0)) == 1
    assert MAJ3(Point((0, 0, 1))) == 0


def test_evaluate_arity_mismatch():
    with pytest.raises(ArityError):
        evaluate(AND2, (1, 0, 1))


def test_arity_bounds():
    with pytest.raises(ArityError):
        BooleanFunction(ARITY_MAX + 1, 0)
    with pytest.raises(ArityError):
        self_dualize(BooleanFunction(ARITY_MAX, 0))


def test_truth_table_parsing():
    assert parse_truth_table("0001") == AND2
    assert parse_truth_table("0xe8") == MAJ3  # hex is the table value, most significant code first
    assert format_truth_table(MAJ3, hex=True) == "0xe8"
    for bad in ("", "012", "000", "0xZZ"):
        with pytest.raises(ParseError):
            parse_truth_table(bad)


@given(functions())
def test_truth_table_round_trip(f):
    assert parse_truth_table(format_truth_table(f)) == f
    if f.arity >= 2:
        assert parse_truth_table(format_truth_table(f, hex=True), arity=f.arity) == f


def test_dual_examples():
    assert dual(CONST0_2) == CONST1_2
    assert dual(AND2) == OR2
    assert dual(MAJ3) == MAJ3 and is_self_dual(MAJ3)


def test_self_dualize_examples():
    assert self_dualize(AND2) == MAJ3
    assert self_dualize(BooleanFunction.const(0, 0)) == BooleanFunction.dictator(1, 1)
    assert self_dualize(CONST0_2) == BooleanFunction.dictator(1, 3)
    F = self_dualize(MAJ3)
    assert reduce(F, 1, 0) == MAJ3 and reduce(F, 1, 1) == MAJ3


def test_anti_self_dualize_examples():
    assert anti_self_dualize(MAJ3) == AND2
    assert anti_self_dualize(BooleanFunction.dictator(1, 1)) == BooleanFunction.const(0, 0)
    assert anti_self_dualize(self_dualize(OR2)) == OR2
    with pytest.raises(NotSelfDualError):
        anti_self_dualize(AND2)


def test_u_complement_examples():
    assert u_complement(AND2, (1, 1)) == X("1000")
    assert u_complement(MAJ3, 0) == MAJ3
    assert u_complement(OR2, (1, 0)) == X("1011")


def test_permute_examples():
    assert permute(AND2, (1, 2)) == AND2
    assert permute(DICT1_2, (2, 1)) == DICT2_2
    for sigma in [(2, 3, 1), (3, 1, 2), (2, 1, 3)]:
        assert permute(MAJ3, sigma) == MAJ3
    with pytest.raises(PermError):
        permute(MAJ3, (1, 1, 2))


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.integers(0, (1 << (1 << n)) - 1).map(lambda b: BooleanFunction(n, b)), perms(n), perms(n))))
def test_permutation_action_law(case):
    f, sigma, tau = case
    assert permute(permute(f, sigma), tau) == permute(f, compose(sigma, tau))
    assert permute(permute(f, sigma), inverse_perm(sigma)) == f


def test_reduce_examples():
    assert reduce(MAJ3, 1, 0) == AND2
    assert reduce(MAJ3, 1, 1) == OR2
    assert reduce(DICT1_2, 1, 1) == BooleanFunction.const(1, 1)
    with pytest.raises(IndexError):
        reduce(AND2, 3, 0)


def test_predicates():
    assert is_positive(AND2) and not is_positive(X("10")) and not is_positive(XOR2)
    assert is_small(AND2) and not is_small(OR2) and is_small(MAJ3)
    assert is_ample(MAJ3) and not is_ample(AND2) and is_ample(CONST1_2)


def test_dual_preserves_positivity_and_swaps_ample_small():
    # ample is f >= dual f pointwise; a non-self-dual dual of an ample function is not ample
    for n in range(4):
        for f in all_functions(n):
            assert is_positive(dual(f)) == is_positive(f)
            assert is_ample(f) == (f.bits | dual(f).bits == f.bits)


@given(functions())
def test_dual_involution(f):
    assert dual(dual(f)) == f


def test_orbit_of_dictator():
    assert orbit(BooleanFunction.dictator(1, 3)) == {0b10101010, 0b11001100, 0b11110000}
