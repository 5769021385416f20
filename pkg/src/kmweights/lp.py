"""Exact rational feasibility for ``A x = b, x >= 0`` (phase-one simplex, Bland's rule)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def feasible_point(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Return a non-negative solution of ``A x = b`` or ``None`` if none exists."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    T = []
    for r in range(rows):
        row = [Fraction(x) for x in A[r]]
        rhs = Fraction(b[r])
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        art = [Fraction(int(k == r)) for k in range(rows)]
        T.append(row + art + [rhs])
    width = cols + rows
    basis = [cols + r for r in range(rows)]
    # objective: minimise the sum of artificials, written as reduced costs
    obj = [Fraction(0)] * (width + 1)
    for r in range(rows):
        for k in range(width + 1):
            obj[k] -= T[r][k]
    for r in range(rows):
        obj[cols + r] += 1

    while True:
        enter = next((k for k in range(width) if obj[k] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for r in range(rows):
            a = T[r][enter]
            if a > 0:
                ratio = T[r][-1] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best = ratio
                    leave = r
        if leave is None:
            # unbounded phase-one objective cannot happen (bounded below by 0)
            raise ArithmeticError("phase-one simplex is unbounded")
        piv = T[leave][enter]
        T[leave] = [x / piv for x in T[leave]]
        for r in range(rows):
            if r != leave and T[r][enter]:
                f = T[r][enter]
                T[r] = [x - f * y for x, y in zip(T[r], T[leave])]
        if obj[enter]:
            f = obj[enter]
            obj = [x - f * y for x, y in zip(obj, T[leave])]
        basis[leave] = enter

    if -obj[-1] != 0:
        return None
    x = [Fraction(0)] * cols
    for r, k in enumerate(basis):
        if k < cols:
            x[k] = T[r][-1]
    return x


def is_feasible(A, b) -> bool:
    return feasible_point(A, b) is not None
