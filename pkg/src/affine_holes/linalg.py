"""Exact integer linear algebra.

Matrices are stored row-major as tuples of Python ints, so there is no
overflow.  Columns play the role of generators everywhere in the package,
which is why the Hermite normal form here is the column-style one:
``H = M @ U`` with ``U`` unimodular.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError

IntVec = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class IntMat:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if not rows or not rows[0]:
            raise DimensionError("matrix must have at least one row and one column")
        width = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != width:
                raise DimensionError(f"row {i + 1} has {len(r)} entries, expected {width}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_columns(cls, columns: Iterable[Sequence[int]]) -> "IntMat":
        cols = [tuple(c) for c in columns]
        if not cols:
            raise DimensionError("need at least one column")
        return cls(tuple(zip(*cols)))

    @classmethod
    def identity(cls, n: int) -> "IntMat":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple:
        return (self.m, self.n)

    def column(self, j: int) -> IntVec:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list:
        return [tuple(c) for c in zip(*self.rows)]

    def transpose(self) -> "IntMat":
        return IntMat(tuple(zip(*self.rows)))

    def __matmul__(self, other):
        if isinstance(other, IntMat):
            if self.n != other.m:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.columns()
            return IntMat(tuple(tuple(dot(r, c) for c in cols) for r in self.rows))
        return matvec(self, other)

    def tolist(self) -> list:
        return [list(r) for r in self.rows]


def as_intmat(M) -> IntMat:
    return M if isinstance(M, IntMat) else IntMat(tuple(M))


def dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def matvec(M: IntMat, x: Sequence[int]) -> IntVec:
    if len(x) != M.n:
        raise DimensionError(f"vector of length {len(x)} for matrix with {M.n} columns")
    return tuple(dot(r, x) for r in M.rows)


def vadd(u, v) -> IntVec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v) -> IntVec:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v) -> IntVec:
    return tuple(c * a for a in v)


def primitive(v) -> IntVec:
    """Divide an integer vector by the gcd of its entries."""
    g = math.gcd(*v) if v else 0
    if g <= 1:
        return tuple(v)
    return tuple(a // g for a in v)


def xgcd(a: int, b: int) -> tuple:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def _col_op(rows, k, j, s, t, u, v):
    # (col_k, col_j) <- (s*col_k + t*col_j, u*col_k + v*col_j)
    for r in rows:
        ck, cj = r[k], r[j]
        r[k] = s * ck + t * cj
        r[j] = u * ck + v * cj


def _hnf_work(M: IntMat):
    H = [list(r) for r in M.rows]
    n = M.n
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    pivots = []
    k = 0
    for i in range(M.m):
        if k == n:
            break
        row = H[i]
        for j in range(k + 1, n):
            b = row[j]
            if b == 0:
                continue
            a = row[k]
            g, s, t = xgcd(a, b)
            _col_op(H, k, j, s, t, -b // g, a // g)
            _col_op(U, k, j, s, t, -b // g, a // g)
        p = row[k]
        if p == 0:
            continue
        if p < 0:
            for r in H:
                r[k] = -r[k]
            for r in U:
                r[k] = -r[k]
            p = -p
        for j in range(k):
            q = row[j] // p
            if q:
                for r in H:
                    r[j] -= q * r[k]
                for r in U:
                    r[j] -= q * r[k]
        pivots.append((i, k))
        k += 1
    return H, U, pivots


def hermite_normal_form(M) -> tuple:
    """Column-style Hermite normal form.

    Returns ``(H, U)`` with ``H == M @ U``, ``U`` unimodular, ``H`` lower
    triangular echelon with positive pivots and every entry left of a pivot
    reduced into ``[0, pivot)``.
    """
    M = as_intmat(M)
    H, U, _ = _hnf_work(M)
    return IntMat(tuple(map(tuple, H))), IntMat(tuple(map(tuple, U)))


class Lattice:
    """The lattice spanned by the columns of ``M``, kept in Hermite form."""

    def __init__(self, M):
        M = as_intmat(M)
        self.matrix = M
        H, U, pivots = _hnf_work(M)
        self.H = H
        self.U = U
        self.pivots = pivots
        self.rank = len(pivots)
        self.basis = [tuple(r[k] for r in H) for _, k in pivots]

    def reduce(self, b) -> tuple:
        """Reduce ``b`` modulo the lattice.

        Returns ``(coeffs, residue)`` where ``b - residue`` equals the
        combination of the basis columns given by ``coeffs``.  The residue is
        zero exactly when ``b`` lies in the lattice.
        """
        if len(b) != self.matrix.m:
            raise DimensionError(f"vector of length {len(b)}, lattice lives in Z^{self.matrix.m}")
        res = list(b)
        coeffs = []
        for (i, k), col in zip(self.pivots, self.basis):
            q = res[i] // col[i]
            coeffs.append(q)
            if q:
                res = [x - q * c for x, c in zip(res, col)]
        return coeffs, tuple(res)

    def __contains__(self, b) -> bool:
        return not any(self.reduce(b)[1])

    def coordinates(self, b):
        """Integer coordinates of ``b`` in :attr:`basis`, or None."""
        coeffs, res = self.reduce(b)
        if any(res):
            return None
        return tuple(coeffs)

    def solve(self, b):
        coeffs, res = self.reduce(b)
        if any(res):
            return None
        n = self.matrix.n
        y = [0] * n
        for (_, k), q in zip(self.pivots, coeffs):
            y[k] = q
        x = tuple(dot(r, y) for r in self.U)
        assert matvec(self.matrix, x) == tuple(b)
        return x

    def index(self):
        if self.rank < self.matrix.m:
            return math.inf
        return math.prod(col[i] for (i, _), col in zip(self.pivots, self.basis))


def solve_integer(M, b):
    """Some integer ``x`` with ``M @ x == b``, or None if ``b`` is not in the
    column lattice.  The witness is not canonical."""
    M = as_intmat(M)
    if len(b) != M.m:
        raise DimensionError(f"right-hand side has length {len(b)}, matrix has {M.m} rows")
    return Lattice(M).solve(tuple(b))


def lattice_rank_index(M) -> tuple:
    """``(rank, index)``; index is ``math.inf`` unless the lattice has full rank."""
    L = Lattice(M)
    return L.rank, L.index()


def integer_kernel(M) -> list:
    """A lattice basis of ``{x in Z^n : M @ x == 0}``."""
    M = as_intmat(M)
    _, U, pivots = _hnf_work(M)
    r = len(pivots)
    return [tuple(row[k] for row in U) for k in range(r, M.n)]


def determinant(rows) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    a = [list(r) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise DimensionError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ri, rk = a[i], a[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
        prev = akk
    return sign * a[-1][-1]


def rank(vectors) -> int:
    """Rank of a list of vectors (treated as columns)."""
    vectors = [v for v in vectors if any(v)]
    if not vectors:
        return 0
    return Lattice(IntMat.from_columns(vectors)).rank


def rational_solve(M, b):
    """A rational solution of ``M @ x == b`` (free variables set to 0), or None."""
    M = as_intmat(M)
    m, n = M.shape
    a = [[Fraction(v) for v in r] + [Fraction(bi)] for r, bi in zip(M.rows, b)]
    where = []
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, m) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = 1 / a[row][col]
        a[row] = [v * inv for v in a[row]]
        for i in range(m):
            if i != row and a[i][col] != 0:
                f = a[i][col]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[row])]
        where.append(col)
        row += 1
        if row == m:
            break
    for i in range(row, m):
        if a[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, col in enumerate(where):
        x[col] = a[i][n]
    return tuple(x)


def saturated_lattice_basis(vectors) -> list:
    """A basis of ``Z^m ∩ span(vectors)``."""
    vectors = [tuple(v) for v in vectors]
    m = len(vectors[0])
    left = integer_kernel(IntMat.from_columns(vectors).transpose())
    if not left:
        return [tuple(int(i == j) for i in range(m)) for j in range(m)]
    return integer_kernel(IntMat(tuple(left)))
