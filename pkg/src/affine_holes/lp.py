"""A small dense two-phase simplex over ``Fraction``.

Only meant for the tiny feasibility and bounding-box problems that come up
in this package; Bland's rule keeps it finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None = None
    x: tuple | None = None


def _pivot(T, basis, r, c):
    row = T[r]
    p = row[c]
    if p != 1:
        inv = 1 / p
        row = T[r] = [v * inv for v in row]
    for i, other in enumerate(T):
        if i != r:
            f = other[c]
            if f:
                T[i] = [a - f * b for a, b in zip(other, row)]
    basis[r] = c


def _run(T, basis, ncols):
    # objective row is T[-1], holding reduced costs; minimise.
    while True:
        obj = T[-1]
        col = next((j for j in range(ncols) if obj[j] < 0), None)
        if col is None:
            return True
        best = None
        for i in range(len(T) - 1):
            a = T[i][col]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return False
        _pivot(T, basis, best[1], col)


def linprog(c, eq=(), le=(), free=False) -> LPResult:
    """Maximise ``c . x`` subject to ``a . x == b`` for ``(a, b)`` in ``eq`` and
    ``a . x <= b`` for ``(a, b)`` in ``le``.  Variables are non-negative unless
    ``free`` is set."""
    n = len(c)
    eq = [(list(map(Fraction, a)), Fraction(b)) for a, b in eq]
    le = [(list(map(Fraction, a)), Fraction(b)) for a, b in le]
    if free:
        c = list(c) + [-v for v in c]
        eq = [(a + [-v for v in a], b) for a, b in eq]
        le = [(a + [-v for v in a], b) for a, b in le]
    nv = len(c)
    ns = len(le)
    rows = []
    for k, (a, b) in enumerate(le):
        rows.append((a + [Fraction(int(j == k)) for j in range(ns)], b))
    for a, b in eq:
        rows.append((a + [Fraction(0)] * ns, b))
    m = len(rows)
    ncols = nv + ns
    T = []
    for i, (a, b) in enumerate(rows):
        if b < 0:
            a, b = [-v for v in a], -b
        T.append(a + [Fraction(int(j == i)) for j in range(m)] + [b])
    basis = [ncols + i for i in range(m)]
    total = ncols + m
    # phase 1: minimise the sum of artificials
    obj = [Fraction(0)] * (total + 1)
    for row in T:
        for j in range(ncols):
            obj[j] -= row[j]
        obj[-1] -= row[-1]
    T.append(obj)
    _run(T, basis, ncols)
    if T[-1][-1] != 0:
        return LPResult("infeasible")
    # drive artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(T) - 1:
        if basis[i] >= ncols:
            col = next((j for j in range(ncols) if T[i][j] != 0), None)
            if col is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, basis, i, col)
        i += 1
    T = [row[:ncols] + [row[-1]] for row in T[:-1]]
    cost = [Fraction(-v) for v in c] + [Fraction(0)] * ns
    obj = cost + [Fraction(0)]
    for i, b in enumerate(basis):
        f = obj[b]
        if f:
            obj = [o - f * t for o, t in zip(obj, T[i])]
    T.append(obj)
    if not _run(T, basis, ncols):
        return LPResult("unbounded")
    x = [Fraction(0)] * ncols
    for i, b in enumerate(basis):
        x[b] = T[i][-1]
    x = x[:nv]
    if free:
        x = [x[j] - x[j + n] for j in range(n)]
    return LPResult("optimal", T[-1][-1], tuple(x))
