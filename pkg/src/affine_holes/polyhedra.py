"""Exact rational polyhedral geometry.

Cones are converted between generator and inequality form with the double
description method on primitive integer vectors.  Lattice points of bounded
regions are enumerated inside an exact LP bounding box with interval
pruning.  The placing triangulation and the simplicial parallelepiped
enumeration at the bottom are what the semigroup code uses to find
candidate holes and Hilbert basis elements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, NotPointedError, UnboundedRegionError
from .linalg import (
    IntMat,
    Lattice,
    as_intmat,
    determinant,
    hermite_normal_form,
    dot,
    integer_kernel,
    primitive,
    rank,
)
from .lp import linprog


@dataclass(frozen=True)
class ConeDescription:
    generators: tuple
    facets: tuple
    lineality_dim: int
    implicit_equations: tuple = field(default=())

    @property
    def pointed(self) -> bool:
        return self.lineality_dim == 0

    def contains(self, z) -> bool:
        return all(dot(e, z) == 0 for e in self.implicit_equations) and all(
            dot(h, z) >= 0 for h in self.facets
        )

    def violated(self, z):
        """First equation or facet that ``z`` violates, or None."""
        for e in self.implicit_equations:
            if dot(e, z) != 0:
                return e
        for h in self.facets:
            if dot(h, z) < 0:
                return h
        return None


def _sign_normal(v):
    for a in v:
        if a:
            return v if a > 0 else tuple(-x for x in v)
    return v


def double_description(inequalities: Sequence[Sequence[int]], dim: int) -> tuple:
    """H-to-V conversion for ``{x : a . x >= 0 for a in inequalities}``.

    Returns ``(lineality_basis, rays)`` with primitive integer vectors; the
    rays are the extreme rays of the cone modulo its lineality space.
    """
    lin = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    rays = []  # [vector, mask of tight inequalities]
    for idx, a in enumerate(inequalities):
        a = tuple(a)
        if len(a) != dim:
            raise DimensionError(f"inequality of length {len(a)} in dimension {dim}")
        bit = 1 << idx
        pi = next((k for k, l in enumerate(lin) if dot(a, l) != 0), None)
        if pi is not None:
            piv = lin[pi]
            al = dot(a, piv)
            if al < 0:
                piv, al = tuple(-x for x in piv), -al
            new_lin = []
            for k, l in enumerate(lin):
                if k == pi:
                    continue
                v = primitive(tuple(al * x - dot(a, l) * y for x, y in zip(l, piv)))
                new_lin.append(v)
            lin = new_lin
            new_rays = []
            for r, mask in rays:
                ar = dot(a, r)
                v = primitive(tuple(al * x - ar * y for x, y in zip(r, piv)))
                new_rays.append([v, mask | bit])
            # the lineality vector was tight on every earlier inequality
            new_rays.append([primitive(piv), bit - 1])
            rays = new_rays
            continue
        pos, zero, neg = [], [], []
        for k, item in enumerate(rays):
            s = dot(a, item[0])
            if s > 0:
                pos.append((k, s))
            elif s < 0:
                neg.append((k, s))
            else:
                zero.append(k)
        if not neg:
            for k in zero:
                rays[k][1] |= bit
            continue
        need = dim - len(lin) - 2
        masks = [item[1] for item in rays]
        combos = []
        for kp, sp in pos:
            p, mp = rays[kp]
            for kq, sq in neg:
                q, mq = rays[kq]
                common = mp & mq
                if bin(common).count("1") < need:
                    continue
                if any(
                    k != kp and k != kq and mk & common == common
                    for k, mk in enumerate(masks)
                ):
                    continue
                v = primitive(tuple(sp * y - sq * x for x, y in zip(p, q)))
                combos.append([v, common | bit])
        for k in zero:
            rays[k][1] |= bit
        rays = [rays[k] for k, _ in pos] + [rays[k] for k in zero] + combos
    return lin, [tuple(r) for r, _ in rays]


def dual_description(generators: Sequence[Sequence[int]]) -> ConeDescription:
    """Facets and implicit equations of the cone spanned by ``generators``."""
    gens = [tuple(int(x) for x in g) for g in generators]
    if not gens:
        raise ValueError("need at least one generator")
    dim = len(gens[0])
    if any(len(g) != dim for g in gens):
        raise DimensionError("generators of different lengths")
    if not any(any(g) for g in gens):
        raise ValueError("all generators are zero")
    nonzero = [g for g in gens if any(g)]
    lin, rays = double_description(nonzero, dim)
    # canonical equation basis: Hermite form of the left kernel
    eqs = integer_kernel(IntMat.from_columns(nonzero).transpose()) if len(lin) else []
    if eqs:
        eqs = [_sign_normal(primitive(e)) for e in _row_hnf(eqs)]
    dual_dim = rank(list(lin) + list(rays))
    facets = sorted(set(_reduce_mod_equations(r, eqs) for r in rays))
    return ConeDescription(
        generators=tuple(gens),
        facets=tuple(facets),
        lineality_dim=dim - dual_dim,
        implicit_equations=tuple(sorted(eqs)),
    )


def _row_hnf(vectors):
    """Echelon basis of the lattice spanned by ``vectors``."""
    H, _ = hermite_normal_form(IntMat.from_columns(vectors))
    return [c for c in H.columns() if any(c)]


def _reduce_mod_equations(h, eqs):
    """Pick a canonical representative of a facet normal modulo equations."""
    h = list(h)
    for e in eqs:
        p = next(i for i, x in enumerate(e) if x)
        q = h[p] // e[p]
        if q:
            h = [x - q * y for x, y in zip(h, e)]
    return primitive(tuple(h))


def is_pointed(generators) -> bool:
    gens = [tuple(g) for g in generators]
    if not any(any(g) for g in gens):
        return True
    return dual_description(gens).lineality_dim == 0


# ---------------------------------------------------------------------------
# lattice points


def _as_constraints(items):
    out = []
    for a, b in items or ():
        out.append((tuple(Fraction(x) for x in a), Fraction(b)))
    return out


def bounding_box(equations, inequalities, dim):
    """Exact integer box ``[(lo, hi), ...]`` around the region, None if empty."""
    box = []
    for i in range(dim):
        e = [0] * dim
        e[i] = 1
        hi = linprog(e, eq=equations, le=inequalities, free=True)
        if hi.status == "infeasible":
            return None
        if hi.status == "unbounded":
            raise UnboundedRegionError(f"coordinate {i + 1} is unbounded above")
        e[i] = -1
        lo = linprog(e, eq=equations, le=inequalities, free=True)
        if lo.status == "unbounded":
            raise UnboundedRegionError(f"coordinate {i + 1} is unbounded below")
        box.append((math.ceil(-lo.value), math.floor(hi.value)))
    return box


def enumerate_lattice_points(equations=(), inequalities=(), strict_upper=(), dim=None, box=None):
    """All integer points with ``a.x == b`` (equations), ``a.x <= b``
    (inequalities) and ``a.x < b`` (strict_upper), sorted lexicographically.

    Coefficients may be ints or Fractions.  The region must be bounded; an
    exact bounding box is computed by LP unless ``box`` is given.
    """
    eqs = _as_constraints(equations)
    les = _as_constraints(inequalities)
    lts = _as_constraints(strict_upper)
    if dim is None:
        for a, _ in eqs + les + lts:
            dim = len(a)
            break
        else:
            raise DimensionError("cannot infer the dimension of an unconstrained region")
    if box is None:
        box = bounding_box(eqs, les + lts, dim)
        if box is None:
            return []
    if any(lo > hi for lo, hi in box):
        return []
    # checks as (coeffs, rhs, kind): kind 0 is ==, 1 is <=, 2 is <
    checks = [(a, b, 0) for a, b in eqs] + [(a, b, 1) for a, b in les] + [(a, b, 2) for a, b in lts]
    # suffix interval bounds of a . x over the remaining box coordinates
    suffix = []
    for a, b, kind in checks:
        lo_s = [Fraction(0)] * (dim + 1)
        hi_s = [Fraction(0)] * (dim + 1)
        for i in range(dim - 1, -1, -1):
            lo_i, hi_i = box[i]
            c = a[i]
            lo_s[i] = lo_s[i + 1] + min(c * lo_i, c * hi_i)
            hi_s[i] = hi_s[i + 1] + max(c * lo_i, c * hi_i)
        suffix.append((lo_s, hi_s))

    out = []
    x = [0] * dim
    partial = [Fraction(0)] * len(checks)

    def ok(depth):
        for k, (a, b, kind) in enumerate(checks):
            lo_s, hi_s = suffix[k]
            lo = partial[k] + lo_s[depth]
            hi = partial[k] + hi_s[depth]
            if kind == 0:
                if lo > b or hi < b:
                    return False
            elif kind == 1:
                if lo > b:
                    return False
            elif lo >= b:
                return False
        return True

    def rec(i):
        if i == dim:
            out.append(tuple(x))
            return
        lo, hi = box[i]
        for v in range(lo, hi + 1):
            x[i] = v
            for k, (a, _, _) in enumerate(checks):
                partial[k] += a[i] * v
            if ok(i + 1):
                rec(i + 1)
            for k, (a, _, _) in enumerate(checks):
                partial[k] -= a[i] * v

    if ok(0):
        rec(0)
    return out


def in_halfopen_parallelepiped(A, z) -> bool:
    """Is there a rational ``lam`` in ``[0, 1)^n`` with ``A @ lam == z``?

    Decided exactly: maximise ``t`` subject to ``A lam = z``, ``lam >= 0``,
    ``lam_i + t <= 1``; strict feasibility holds iff the optimum is positive.
    """
    A = as_intmat(A)
    n = A.n
    eq = [(list(r) + [0], zi) for r, zi in zip(A.rows, z)]
    le = [([int(j == i) for j in range(n)] + [1], 1) for i in range(n)]
    res = linprog([0] * n + [1], eq=eq, le=le)
    return res.status == "optimal" and res.value > 0


def parallelepiped_points(A) -> list:
    """Lattice points of the half-open zonotope ``{A lam : 0 <= lam < 1}``.

    Every integer point of the box around the zonotope that lies in the cone
    is tested with :func:`in_halfopen_parallelepiped`.  No lattice condition
    is imposed.  Intended for small matrices.
    """
    A = as_intmat(A)
    cols = A.columns()
    cone = dual_description(cols)
    if not cone.pointed:
        raise NotPointedError("columns do not generate a pointed cone")
    box = []
    for row in A.rows:
        box.append((sum(min(0, v) for v in row), sum(max(0, v) for v in row)))
    eqs = [(e, 0) for e in cone.implicit_equations]
    les = [(tuple(-x for x in h), 0) for h in cone.facets]
    pts = enumerate_lattice_points(eqs, les, dim=A.m, box=box)
    return [p for p in pts if in_halfopen_parallelepiped(A, p)]


# ---------------------------------------------------------------------------
# simplicial machinery (full-dimensional cones in Z^r)


def facet_normal(vectors, inside):
    """Primitive normal of the hyperplane through ``vectors`` (r-1 of them in
    R^r), oriented so that ``inside`` is on the positive side."""
    ker = integer_kernel(IntMat(tuple(vectors)))
    if len(ker) != 1:
        raise ValueError("facet vectors are not independent")
    n = primitive(ker[0])
    s = dot(n, inside)
    if s == 0:
        raise ValueError("reference point lies on the hyperplane")
    return n if s > 0 else tuple(-x for x in n)


def placing_triangulation(points) -> list:
    """Triangulate the cone over ``points`` (full-dimensional, pointed).

    Points are placed one at a time; each new point is coned over the
    boundary facets it sees.  Returns simplices as sorted index tuples.
    """
    points = [tuple(p) for p in points]
    r = len(points[0])
    chosen = []
    for i, p in enumerate(points):
        if not any(p):
            continue
        if rank([points[j] for j in chosen] + [p]) > len(chosen):
            chosen.append(i)
            if len(chosen) == r:
                break
    if len(chosen) < r:
        raise ValueError("points do not span the space")
    if r == 1:
        return [tuple(chosen)]
    simplices = [tuple(sorted(chosen))]
    boundary = {}
    for drop in chosen:
        facet = tuple(j for j in chosen if j != drop)
        boundary[facet] = facet_normal([points[j] for j in facet], points[drop])
    placed = set(chosen)
    for i, p in enumerate(points):
        if i in placed or not any(p):
            continue
        visible = [f for f, nrm in boundary.items() if dot(nrm, p) < 0]
        placed.add(i)
        for f in visible:
            del boundary[f]
            simplex = tuple(sorted(f + (i,)))
            simplices.append(simplex)
            for drop in f:
                g = tuple(j for j in simplex if j != drop)
                if g in boundary:
                    del boundary[g]
                else:
                    boundary[g] = facet_normal([points[j] for j in g], points[drop])
    return simplices


def simplex_parallelepiped_points(basis) -> list:
    """Integer points of the half-open parallelepiped spanned by the columns
    of the square nonsingular ``basis`` (given as a list of columns)."""
    cols = [tuple(c) for c in basis]
    r = len(cols)
    S = IntMat.from_columns(cols)
    D = determinant(S.rows)
    if D == 0:
        raise ValueError("singular simplex")
    if abs(D) == 1:
        return [tuple([0] * r)]
    adj = _adjugate(S.rows, D)
    H = Lattice(S)
    diag = [col[i] for (i, _), col in zip(H.pivots, H.basis)]
    out = []

    def reps(i, v):
        if i == r:
            yield tuple(v)
            return
        for t in range(diag[i]):
            v[i] = t
            yield from reps(i + 1, v)
        v[i] = 0

    for v in reps(0, [0] * r):
        # lam = S^{-1} v = adj v / D ; point = v - S floor(lam)
        fl = [_floordiv(dot(row, v), D) for row in adj]
        p = tuple(vi - dot(srow, fl) for vi, srow in zip(v, S.rows))
        out.append(p)
    return out


def _floordiv(a, b):
    return a // b if b > 0 else (-a) // (-b)


def _adjugate(rows, D):
    """Integer adjugate of a square matrix with determinant ``D``."""
    r = len(rows)
    if r == 1:
        return [[1]]
    inv = _fraction_inverse(rows)
    return [[int(v * D) for v in row] for row in inv]


def _fraction_inverse(rows):
    r = len(rows)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(r)] for i, row in enumerate(rows)]
    for col in range(r):
        piv = next(i for i in range(col, r) if a[i][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for i in range(r):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [row[r:] for row in a]
