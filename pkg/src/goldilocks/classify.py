"""Goldilocks classification with checkable non-membership certificates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import boolfn
from .boolfn import BooleanFunction, Point, dual, is_ample, is_positive, is_small, u_complement
from .chow import ChowParameters, chow, degree
from .ltf import (
    AMPLE,
    POSITIVE,
    SMALL,
    AsummabilityWitness,
    Realization,
    find_realization,
    is_goldilocks,
    is_threshold,
)


@dataclass(frozen=True)
class NotSeparable:
    witness: AsummabilityWitness

    def to_json(self) -> dict:
        return {"type": "NotSeparable", **self.witness.to_json()}


@dataclass(frozen=True)
class NotPositive:
    x: Point
    y: Point

    def to_json(self) -> dict:
        return {"type": "NotPositive", "x": list(self.x.coords), "y": list(self.y.coords)}


@dataclass(frozen=True)
class NotSmall:
    i: int

    def to_json(self) -> dict:
        return {"type": "NotSmall", "i": self.i}


@dataclass(frozen=True)
class NotAmple:
    x: Point

    def to_json(self) -> dict:
        return {"type": "NotAmple", "x": list(self.x.coords)}


Certificate = Union[NotSeparable, NotPositive, NotSmall, NotAmple]


@dataclass(frozen=True)
class ClassReport:
    is_ltf: bool
    positive: bool
    small: bool
    ample: bool
    semi_goldilocks: bool
    goldilocks: bool
    degree: int
    chow: ChowParameters
    realization: Realization | None = None
    certificate: Certificate | None = None

    def to_json(self) -> dict:
        return {
            "is_ltf": self.is_ltf,
            "positive": self.positive,
            "small": self.small,
            "ample": self.ample,
            "semi_goldilocks": self.semi_goldilocks,
            "goldilocks": self.goldilocks,
            "degree": self.degree,
            "chow": str(self.chow),
            "realization": self.realization.to_json() if self.realization else None,
            "certificate": self.certificate.to_json() if self.certificate else None,
        }


def classify(f: BooleanFunction, target: str = "goldilocks") -> ClassReport:
    """All three criteria, a realization when Semi-Goldilocks, and a certificate
    when f falls outside ``target`` ("goldilocks" or "semi_goldilocks").

    Certificates are reported in the order separability, positivity,
    smallness, ampleness, each the smallest witness by cube code.
    """
    if target not in ("goldilocks", "semi_goldilocks"):
        raise ValueError(f"unknown target class {target!r}")
    n = f.arity
    small = is_small(f)
    positive = is_positive(f)
    ltf = is_threshold(f)
    ample = is_ample(f)
    semi = ltf and positive and small
    gold = semi and ample

    realization = None
    if gold:
        realization = find_realization(f, {POSITIVE, SMALL, AMPLE})
    elif semi:
        realization = find_realization(f, {POSITIVE, SMALL})

    certificate = None
    fails = not (gold if target == "goldilocks" else semi)
    if fails:
        if not ltf:
            certificate = NotSeparable(find_realization(f).witness)
        elif not positive:
            x, y = boolfn.first_nonpositive_pair(f)
            certificate = NotPositive(Point.from_code(x, n), Point.from_code(y, n))
        elif not small:
            certificate = NotSmall(boolfn.first_large_singleton(f))
        else:
            certificate = NotAmple(Point.from_code(boolfn.first_false_negation_pair(f), n))
    return ClassReport(ltf, positive, small, ample, semi, gold, degree(f), chow(f),
                       realization, certificate)


def verify_certificate(f: BooleanFunction, c: Certificate) -> bool:
    n = f.arity
    if isinstance(c, NotSeparable):
        return c.witness.verify(f)
    if isinstance(c, NotPositive):
        if c.x.n != n or c.y.n != n:
            return False
        below = all(a <= b for a, b in zip(c.x.coords, c.y.coords))
        return below and f[c.x.code] > f[c.y.code]
    if isinstance(c, NotSmall):
        return 1 <= c.i <= n and f[1 << (c.i - 1)] == 1
    if isinstance(c, NotAmple):
        return c.x.n == n and f[c.x.code] == 0 and f[c.x.negation().code] == 0
    return False


def _nonseparable_gadget(n: int) -> BooleanFunction:
    """x1 x2 or x3 x4 on max(n, 4) variables: positive, small, not separable."""
    n = max(n, 4)
    return BooleanFunction.from_callable(n, lambda x: (x[0] and x[1]) or (x[2] and x[3]))


def reduce_thres_to_sgold(f: BooleanFunction) -> BooleanFunction:
    """A positive, small function that is a threshold function exactly when f is.

    Negates the variables with a_i < 2^(n-1), then pins to 0 every variable
    whose singleton is true. When the negation step leaves a non-monotone
    function (f is not unate, hence not separable) the zeroing step can land on
    a separable function, so a fixed non-separable gadget is returned instead;
    every positive function on at most 3 variables is separable, so the gadget
    may have more variables than f.
    """
    n = f.arity
    half = (1 << n) >> 1
    u = sum(1 << i for i, ai in enumerate(chow(f).a) if ai < half)
    fp = u_complement(f, u)
    if not is_positive(fp):
        return _nonseparable_gadget(n)
    if fp[0]:
        # constant true: zeroing would keep it constant true, which is not small
        return BooleanFunction.const(0, n)
    large = sum(1 << i for i in range(n) if fp[1 << i])
    bits = 0
    for k in range(f.size):
        if fp[k & ~large]:
            bits |= 1 << k
    return BooleanFunction(n, bits)


def reduce_sgold_to_gold(f: BooleanFunction) -> bool:
    """Gold(f) or Gold(dual f)."""
    return is_goldilocks(f) or is_goldilocks(dual(f))
