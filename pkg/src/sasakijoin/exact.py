"""Exact integer helpers shared by the other modules.

Integers are plain Python ``int`` (arbitrary precision) and rationals are
:class:`fractions.Fraction`; nothing in the package touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import InvalidInput, NoSolution, NotUnique

IntVec = tuple[int, ...]


def gcd_all(v: Iterable[int]) -> int:
    v = list(v)
    if not v:
        raise InvalidInput("gcd_all of an empty vector")
    return reduce(gcd, v, 0)


def lcm_all(v: Iterable[int]) -> int:
    v = list(v)
    if not v:
        raise InvalidInput("lcm_all of an empty vector")
    if any(x <= 0 for x in v):
        raise InvalidInput(f"lcm_all needs positive entries, got {v}")
    return reduce(lcm, v, 1)


def as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _content(row: list[int]) -> int:
    return reduce(gcd, row, 0)


def _echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over the integers.

    Elimination is fraction free: ``r <- p*r - r[c]*pivot`` followed by
    division by the row content, so entries stay small integers.
    Returns the nonzero rows and their pivot columns.
    """
    rows = [list(r) for r in rows]
    ncols = len(rows[0])
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        piv = next((i for i in range(top, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[top], rows[piv] = rows[piv], rows[top]
        prow = rows[top]
        if prow[col] < 0:
            prow[:] = [-x for x in prow]
        for i, r in enumerate(rows):
            if i == top or r[col] == 0:
                continue
            f = r[col]
            new = [prow[col] * a - f * b for a, b in zip(r, prow)]
            g = _content(new)
            rows[i] = [x // g for x in new] if g > 1 else new
        pivots.append(col)
        top += 1
        if top == len(rows):
            break
    return rows[:top], pivots


def solve_primitive_ray(exponents: Sequence[Sequence[int]]) -> tuple[IntVec, int]:
    """Solve ``E @ w == d * 1`` for the primitive positive ray ``(w, d)``.

    ``exponents`` is the m x n exponent matrix (one row per monomial). The
    homogeneous system ``(E | -1) (w, d)^T = 0`` must have a one
    dimensional kernel spanned by a vector with all entries positive.

    >>> solve_primitive_ray([(5, 0, 0), (0, 3, 0), (0, 0, 2)])
    ((6, 10, 15), 30)
    """
    if not exponents or not exponents[0]:
        raise InvalidInput("exponent matrix must have at least one row and column")
    n = len(exponents[0])
    if any(len(r) != n for r in exponents):
        raise InvalidInput("ragged exponent matrix")
    if any(e < 0 for r in exponents for e in r):
        raise InvalidInput("exponents must be nonnegative")

    rows = [list(r) + [-1] for r in exponents]
    reduced, pivots = _echelon(rows)
    free = [c for c in range(n + 1) if c not in pivots]
    if not free:
        raise NoSolution("only the trivial solution w = 0, d = 0")
    if len(free) > 1:
        raise NotUnique(f"solution space has dimension {len(free)}")

    f = free[0]
    scale = lcm_all([abs(r[p]) for r, p in zip(reduced, pivots)]) if pivots else 1
    sol = [0] * (n + 1)
    sol[f] = scale
    for r, p in zip(reduced, pivots):
        # r[p] * x_p + r[f] * x_f == 0
        sol[p] = -r[f] * scale // r[p]
    g = gcd_all(sol)
    sol = [x // g for x in sol]
    if sol[-1] < 0:
        sol = [-x for x in sol]
    if any(x <= 0 for x in sol):
        raise NoSolution(f"kernel ray {tuple(sol)} is not positive")
    return tuple(sol[:-1]), sol[-1]
