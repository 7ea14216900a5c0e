import itertools
from math import factorial

import pytest

from goldilocks.boolfn import BooleanFunction, all_functions, is_positive, orbit, permute
from goldilocks.chow import (
    ChowParameters,
    canonicalize,
    chow,
    degree,
    orbit_size,
    orbit_size_from_chow,
    sorting_permutation,
    weak_variables,
)
from goldilocks.errors import ClassError, NotThresholdError
from goldilocks.ltf import is_threshold
from goldilocks.oracle import integer_ltf_tables

from conftest import AND2, CONST0_2, DICT1_2, DICT2_2, MAJ3, XOR2, X


def brute_chow(f):
    n = f.arity
    pts = list(itertools.product((0, 1), repeat=n))
    vals = [f(p) for p in pts]
    m = sum(vals)
    a = tuple(sum(1 for p, v in zip(pts, vals) if (v and p[i]) or (not v and not p[i]))
              for i in range(n))
    return m, a


def test_examples():
    assert chow(AND2) == ChowParameters(1, (3, 3))
    assert chow(MAJ3) == ChowParameters(4, (6, 6, 6))
    assert chow(CONST0_2) == ChowParameters(0, (2, 2))
    assert chow(DICT1_2) == ChowParameters(2, (4, 2))


def test_matches_brute_count():
    for n in range(4):
        for f in all_functions(n):
            c = chow(f)
            assert (c.m, c.a) == brute_chow(f)


def test_string_round_trip():
    c = chow(MAJ3)
    assert str(c) == "4;6,6,6"
    assert ChowParameters.parse(str(c)) == c


def test_weak_variables_and_degree():
    assert weak_variables(CONST0_2) == {1, 2} and degree(CONST0_2) == 0
    assert weak_variables(MAJ3) == frozenset() and degree(MAJ3) == 3
    assert weak_variables(DICT1_2) == {2} and degree(DICT1_2) == 1


def test_canonicalize():
    c = canonicalize(DICT2_2)
    assert c.representative == DICT1_2
    c = canonicalize(MAJ3)
    assert c.representative == MAJ3 and c.sorting_permutation == (1, 2, 3)
    f = X("00000011")  # x2 x3, a = (4, 6, 6)
    assert chow(f).a == (4, 6, 6)
    assert chow(canonicalize(f).representative).a == (6, 6, 4)
    with pytest.raises(NotThresholdError):
        canonicalize(XOR2)


def test_canonical_representative_is_orbit_invariant():
    for n in range(1, 5):
        for b in integer_ltf_tables(n):
            f = BooleanFunction(n, b)
            if not is_positive(f):
                continue
            reps = {canonicalize(BooleanFunction(n, g), check=False).representative for g in orbit(f)}
            assert len(reps) == 1


def test_sorting_permutation_orders_descending():
    a = (4, 6, 5, 6)
    s = sorting_permutation(a)
    assert [a[i - 1] for i in s] == [6, 6, 5, 4]


def test_orbit_sizes():
    assert orbit_size(MAJ3) == 1
    assert orbit_size(AND2) == 1
    assert orbit_size(X("00000011")) == 3
    assert orbit_size_from_chow((6, 6, 4)) == factorial(3) // (factorial(2) * factorial(1))
    with pytest.raises(NotThresholdError):
        orbit_size(XOR2)


def test_orbit_size_matches_orbit_listing():
    for n in range(1, 5):
        for b in integer_ltf_tables(n):
            f = BooleanFunction(n, b)
            assert orbit_size(f, check=False) == len(orbit(f))


def test_chow_uniqueness_exhaustive():
    for n in range(5):
        ltf = integer_ltf_tables(n)
        seen = {}
        for f in all_functions(n):
            seen.setdefault(chow(f), []).append(f.bits in ltf)
        for flags in seen.values():
            # an LTF shares its parameters with no other function at all
            assert not any(flags) or len(flags) == 1


def test_non_threshold_collisions_exist():
    collisions = {}
    for f in all_functions(4):
        if not is_threshold(f):
            collisions.setdefault(chow(f), []).append(f)
    assert any(len(v) > 1 for v in collisions.values())


def test_permutation_law_on_examples():
    f = X("00000011")
    g = permute(f, (3, 1, 2))
    assert chow(g).a == tuple(chow(f).a[s - 1] for s in (3, 1, 2))


def test_class_error_on_nonpositive():
    with pytest.raises(ClassError):
        canonicalize(X("10"))
