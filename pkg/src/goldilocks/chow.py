"""Chow parameters, weak variables and canonical forms under variable permutation."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import groupby

from .boolfn import BooleanFunction, is_positive, permute, var_mask
from .errors import ClassError, NotThresholdError, ParseError


@dataclass(frozen=True)
class ChowParameters:
    m: int
    a: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.a)

    def __str__(self):
        return f"{self.m};" + ",".join(map(str, self.a))

    @classmethod
    def parse(cls, s: str) -> "ChowParameters":
        try:
            m, _, rest = s.partition(";")
            a = tuple(int(v) for v in rest.split(",") if v.strip())
            return cls(int(m), a)
        except ValueError as exc:
            raise ParseError(f"bad Chow parameters {s!r}") from exc

    def sorted_key(self) -> tuple[int, ...]:
        return (self.m, *sorted(self.a, reverse=True))


def chow(f: BooleanFunction) -> ChowParameters:
    """m = |T| and a_i = |T with x_i = 1| + |F with x_i = 0|."""
    n = f.arity
    m = f.popcount()
    half = (1 << n) >> 1
    a = tuple(2 * bin(f.bits & var_mask(n, i)).count("1") - m + half for i in range(1, n + 1))
    return ChowParameters(m, a)


def weak_variables(f: BooleanFunction) -> frozenset[int]:
    """Indices i with a_i = 2^(n-1); for an LTF these carry zero weight."""
    half = (1 << f.arity) >> 1
    return frozenset(i for i, ai in enumerate(chow(f).a, start=1) if ai == half)


def degree(f: BooleanFunction) -> int:
    return f.arity - len(weak_variables(f))


@dataclass(frozen=True)
class CanonicalForm:
    representative: BooleanFunction
    sorting_permutation: tuple[int, ...]
    multiplicities: tuple[int, ...]


def _require_positive_ltf(f: BooleanFunction) -> None:
    from .ltf import is_threshold

    if not is_threshold(f):
        raise NotThresholdError(f"{f} is not a threshold function")
    if not is_positive(f):
        raise ClassError(f"{f} is not positive")


def sorting_permutation(a: tuple[int, ...]) -> tuple[int, ...]:
    """sigma with a_sigma(1) >= a_sigma(2) >= ...; ties keep the original index order."""
    return tuple(i + 1 for i in sorted(range(len(a)), key=lambda i: (-a[i], i)))


def multiplicities(a) -> tuple[int, ...]:
    return tuple(len(list(g)) for _, g in groupby(sorted(a, reverse=True)))


def canonicalize(f: BooleanFunction, check: bool = True) -> CanonicalForm:
    if check:
        _require_positive_ltf(f)
    params = chow(f)
    sigma = sorting_permutation(params.a)
    return CanonicalForm(permute(f, sigma), sigma, multiplicities(params.a))


def orbit_size_from_chow(a) -> int:
    size = math.factorial(len(a))
    for mult in Counter(a).values():
        size //= math.factorial(mult)
    return size


def orbit_size(f: BooleanFunction, check: bool = True) -> int:
    """Number of distinct truth tables among the permutations of a positive LTF."""
    if check:
        _require_positive_ltf(f)
    return orbit_size_from_chow(chow(f).a)
