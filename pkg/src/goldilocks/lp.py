"""Exact phase-one simplex over the rationals.

Solves the feasibility problem  A y = b, y >= 0  (with b >= 0) by minimizing the
sum of artificial variables, using Bland's rule so degenerate problems cannot
cycle. On infeasibility the optimal simplex multipliers are returned; they form
a Farkas certificate  pi  with  A^T pi <= 0  and  b . pi > 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction


def to_fraction(q) -> Fraction:
    if isinstance(q, Fraction):
        return q
    return Fraction(int(q.numerator), int(q.denominator))


@dataclass
class PhaseOneResult:
    feasible: bool
    y: list | None = None       # a solution of A y = b, y >= 0
    pi: list | None = None      # Farkas multipliers when infeasible
    pivots: int = 0

    @property
    def status(self) -> str:
        return "feasible" if self.feasible else "infeasible"


def phase_one(A: Sequence[Sequence[int]], b: Sequence[int]) -> PhaseOneResult:
    r = len(A)
    m = len(A[0]) if r else 0
    if any(v < 0 for v in b):
        raise ValueError("phase_one expects a nonnegative right-hand side")
    width = m + r
    zero = _Q(0)
    one = _Q(1)
    rows = []
    for i in range(r):
        row = [_Q(v) for v in A[i]] + [zero] * r
        row[m + i] = one
        rows.append(row)
    rhs = [_Q(v) for v in b]
    basis = [m + i for i in range(r)]
    # reduced costs of the artificial objective
    d = [zero] * width
    for j in range(m):
        d[j] = -sum((rows[i][j] for i in range(r)), zero)
    obj = sum(rhs, zero)

    pivots = 0
    while True:
        enter = next((j for j in range(width) if d[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(r):
            a = rows[i][enter]
            if a > 0:
                ratio = rhs[i] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:  # pragma: no cover - phase one is bounded below by 0
            raise RuntimeError("unbounded phase-one problem")
        prow = rows[leave]
        piv = prow[enter]
        if piv != 1:
            inv = 1 / piv
            prow = [v * inv for v in prow]
            rows[leave] = prow
            rhs[leave] *= inv
        nz = [j for j in range(width) if prow[j] != 0]
        for i in range(r):
            if i == leave:
                continue
            factor = rows[i][enter]
            if factor != 0:
                row = rows[i]
                for j in nz:
                    row[j] -= factor * prow[j]
                rhs[i] -= factor * rhs[leave]
        factor = d[enter]
        for j in nz:
            d[j] -= factor * prow[j]
        obj += factor * rhs[leave]
        basis[leave] = enter
        pivots += 1

    if obj == 0:
        y = [zero] * m
        for i, j in enumerate(basis):
            if j < m:
                y[j] = rhs[i]
        return PhaseOneResult(True, y=y, pivots=pivots)
    pi = [one - d[m + i] for i in range(r)]
    return PhaseOneResult(False, pi=pi, pivots=pivots)


def solve_inequalities(G: Sequence[Sequence[int]], h: Sequence[int]):
    """Decide  G z >= h  for free z by running phase one on its Farkas alternative.

    Returns ``(z, None)`` with an exact solution, or ``(None, y)`` where
    ``y >= 0``, ``G^T y = 0`` and ``h . y = 1``.
    """
    k = len(G[0])
    A = [[row[c] for row in G] for c in range(k)]
    A.append(list(h))
    b = [0] * k + [1]
    res = phase_one(A, b)
    if res.feasible:
        return None, [to_fraction(v) for v in res.y]
    scale = res.pi[k]
    z = [to_fraction(-p / scale) for p in res.pi[:k]]
    return z, None
