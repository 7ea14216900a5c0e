"""Threshold-function decision, realizations and the constructions built on them.

A realization (w, theta) of f satisfies f(x) = 1 exactly when w.x > theta. The
feasibility problem is homogeneous in (w, theta), so strict inequalities are
encoded with unit margins: w.x >= theta + 1 on the true set, w.x <= theta on
the false set. Everything is exact rational arithmetic.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .boolfn import BooleanFunction, is_positive, is_small, is_ample, var_mask
from .errors import ClassError, InvalidRealizationError, NotAmpleError
from .lp import solve_inequalities


class Constraint(enum.Enum):
    POSITIVE = "positive"
    SMALL = "small"
    AMPLE = "ample"


POSITIVE, SMALL, AMPLE = Constraint.POSITIVE, Constraint.SMALL, Constraint.AMPLE


def _constraints(cs) -> frozenset[Constraint]:
    return frozenset(c if isinstance(c, Constraint) else Constraint(str(c).lower()) for c in cs)


def _subset_sums(w) -> list:
    """w.x for every cube code x."""
    sums = [0] * (1 << len(w))
    for k in range(1, len(sums)):
        low = (k & -k).bit_length() - 1
        sums[k] = sums[k & (k - 1)] + w[low]
    return sums


@dataclass(frozen=True)
class Realization:
    w: tuple[Fraction, ...]
    theta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "w", tuple(Fraction(v) for v in self.w))
        object.__setattr__(self, "theta", Fraction(self.theta))

    @property
    def n(self) -> int:
        return len(self.w)

    def function(self) -> BooleanFunction:
        bits = 0
        for k, s in enumerate(_subset_sums(self.w)):
            if s > self.theta:
                bits |= 1 << k
        return BooleanFunction(self.n, bits)

    def realizes(self, f: BooleanFunction) -> bool:
        return f.arity == self.n and self.function().bits == f.bits

    @property
    def positive(self) -> bool:
        return all(v > 0 for v in self.w)

    @property
    def small(self) -> bool:
        return all(v <= self.theta for v in self.w)

    @property
    def ample(self) -> bool:
        return sum(self.w) > 2 * self.theta

    def normalized(self) -> "Realization":
        """Scaled to theta = 1; requires theta > 0."""
        if self.theta <= 0:
            raise ValueError("cannot normalize a realization with theta <= 0")
        return Realization(tuple(v / self.theta for v in self.w), Fraction(1))

    def to_json(self) -> dict:
        return {"w": [_frac(v) for v in self.w], "theta": _frac(self.theta)}


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class AsummabilityWitness:
    """Nonnegative integer weights on the cube equating true-set and false-set sums."""

    c: tuple[int, ...]

    def verify(self, f: BooleanFunction) -> bool:
        if len(self.c) != f.size or any(v < 0 for v in self.c):
            return False
        n = f.arity
        total = [0, 0]
        vec = [[0] * n, [0] * n]
        for k, ck in enumerate(self.c):
            if not ck:
                continue
            side = f[k]
            total[side] += ck
            for i in range(n):
                if (k >> i) & 1:
                    vec[side][i] += ck
        return total[1] > 0 and total[0] == total[1] and vec[0] == vec[1]

    def to_json(self) -> dict:
        return {"c": {str(k): v for k, v in enumerate(self.c) if v}}


@dataclass(frozen=True)
class Infeasible:
    status: str = "infeasible"
    witness: AsummabilityWitness | None = None

    def __bool__(self):
        return False


def minimal_true_codes(f: BooleanFunction) -> list[int]:
    bits = f.bits
    out = []
    for k in range(f.size):
        if (bits >> k) & 1:
            j = k
            while j:
                low = j & -j
                if (bits >> (k ^ low)) & 1:
                    break
                j ^= low
            else:
                out.append(k)
    return out


def maximal_false_codes(f: BooleanFunction) -> list[int]:
    bits = f.bits
    full = f.size - 1
    out = []
    for k in range(f.size):
        if not (bits >> k) & 1:
            j = full ^ k
            while j:
                low = j & -j
                if not (bits >> (k | low)) & 1:
                    break
                j ^= low
            else:
                out.append(k)
    return out


def _system(f: BooleanFunction, cs: frozenset[Constraint], monotone: bool, nonneg: bool):
    n = f.arity
    G, h, rows = [], [], []
    if monotone:
        trues, falses = minimal_true_codes(f), maximal_false_codes(f)
    else:
        trues, falses = f.true_codes(), f.false_codes()
    for k in trues:
        G.append([(k >> i) & 1 for i in range(n)] + [-1])
        h.append(1)
        rows.append(k)
    for k in falses:
        G.append([-((k >> i) & 1) for i in range(n)] + [1])
        h.append(0)
        rows.append(k)
    for i in range(n):
        if POSITIVE in cs or nonneg:
            G.append([int(j == i) for j in range(n)] + [0])
            h.append(1 if POSITIVE in cs else 0)
        if SMALL in cs:
            G.append([-int(j == i) for j in range(n)] + [1])
            h.append(0)
    if AMPLE in cs:
        G.append([1] * n + [-2])
        h.append(1)
    return G, h, rows


def find_realization(f: BooleanFunction, constraints: Iterable = ()):
    """An exact realization of f meeting the requested flags, or ``Infeasible``.

    With no constraints an infeasible answer carries an asummability witness
    read off the Farkas certificate.
    """
    cs = _constraints(constraints)
    monotone = POSITIVE in cs and is_positive(f)
    G, h, rows = _system(f, cs, monotone=monotone, nonneg=False)
    z, y = solve_inequalities(G, h)
    if z is None:
        witness = None
        if not cs:
            witness = _witness_from_farkas(f, rows, y)
        return Infeasible("infeasible", witness)
    r = Realization(tuple(z[:-1]), z[-1])
    if not r.realizes(f) or (POSITIVE in cs and not r.positive) or (
        SMALL in cs and not r.small
    ) or (AMPLE in cs and not r.ample):
        raise AssertionError(f"LP returned an invalid realization for {f}")
    return r


def _witness_from_farkas(f: BooleanFunction, rows: list[int], y) -> AsummabilityWitness:
    denom = 1
    for v in y:
        denom = math.lcm(denom, v.denominator)
    c = [0] * f.size
    for k, v in zip(rows, y):
        c[k] += int(v * denom)
    g = 0
    for v in c:
        g = math.gcd(g, v)
    if g > 1:
        c = [v // g for v in c]
    return AsummabilityWitness(tuple(c))


def unate_orientation(f: BooleanFunction) -> int | None:
    """Code u such that x -> f(x XOR u) is positive, or None if f is not unate."""
    n = f.arity
    bits = f.bits
    full = f.full
    u = 0
    for i in range(1, n + 1):
        m = var_mask(n, i)
        step = 1 << (i - 1)
        up = (bits & ~m & full) << step      # f true at x, x_i = 0, lifted to x + e_i
        down = (bits & m) >> step            # f true at x + e_i, dropped to x
        inc = not (up & ~bits)
        dec = not (down & ~bits)
        if not inc:
            if not dec:
                return None
            u |= step
    return u


def is_threshold(f: BooleanFunction) -> bool:
    """Exact LP decision, restricted to the boundary points of the positive orientation."""
    u = unate_orientation(f)
    if u is None:
        return False
    if u:
        from .boolfn import u_complement

        f = u_complement(f, u)
    G, h, _ = _system(f, frozenset(), monotone=True, nonneg=True)
    z, _ = solve_inequalities(G, h)
    return z is not None


def amplify(r: Realization, f: BooleanFunction) -> Realization:
    """Lower theta to the largest false-set value, which makes the realization ample."""
    if not is_ample(f):
        raise NotAmpleError(f"{f} is not ample")
    if not r.realizes(f):
        raise InvalidRealizationError("realization does not realize the function")
    if r.ample:
        return r
    sums = _subset_sums(r.w)
    falses = [sums[k] for k in range(f.size) if not f[k]]
    if not falses:
        return r
    out = Realization(r.w, max(falses))
    assert out.realizes(f) and out.ample
    return out


def is_semi_goldilocks(f: BooleanFunction) -> bool:
    return is_small(f) and is_positive(f) and is_threshold(f)


def is_goldilocks(f: BooleanFunction) -> bool:
    return is_semi_goldilocks(f) and is_ample(f)


def phi_nondegenerate(f: BooleanFunction) -> BooleanFunction:
    """Give every weak variable of a Semi-Goldilocks function a weight above threshold."""
    from .chow import weak_variables

    if not is_semi_goldilocks(f):
        raise ClassError(f"{f} is not Semi-Goldilocks")
    bits = f.bits
    for i in weak_variables(f):
        bits |= var_mask(f.arity, i)
    return BooleanFunction(f.arity, bits)


def phi_inverse(h: BooleanFunction) -> BooleanFunction:
    """Zero out the coordinates whose singleton is true."""
    from .chow import degree

    if not (is_positive(h) and is_threshold(h)) or degree(h) != h.arity:
        raise ClassError(f"{h} is not a nondegenerate positive threshold function")
    large = 0
    for i in range(h.arity):
        if h[1 << i]:
            large |= 1 << i
    keep = ~large
    bits = 0
    for k in range(h.size):
        if h[k & keep]:
            bits |= 1 << k
    return BooleanFunction(h.arity, bits)
