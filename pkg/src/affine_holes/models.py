"""Generators for the worked examples: common diagonal effect model matrices,
linear ordering polytopes and lattice polytopes lifted to height one."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .linalg import IntMat, vadd
from .polyhedra import dual_description, enumerate_lattice_points
from .semigroup import HoleFamily, SemigroupProblem, fundamental_holes, is_saturated

BOX_LIMIT = 10**6


@dataclass(frozen=True)
class CdemInstance:
    d: int
    matrix: IntMat

    def index(self, i: int, j: int) -> int:
        """0-based column of the cell ``(i, j)`` (both 1-based)."""
        return (i - 1) * self.d + (j - 1)

    def column(self, i: int, j: int) -> tuple:
        return self.matrix.column(self.index(i, j))


def cdem_matrix(d: int) -> CdemInstance:
    """Row sums, column sums and the diagonal sum of a ``d x d`` table."""
    if d < 2:
        raise ValueError(f"d must be at least 2, got {d}")
    cols = []
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            c = [0] * (2 * d + 1)
            c[j - 1] = 1
            c[d + i - 1] = 1
            if i == j:
                c[2 * d] = 1
            cols.append(tuple(c))
    return CdemInstance(d, IntMat.from_columns(cols))


def cdem_hole(inst: CdemInstance, k: int, l: int) -> tuple:
    """``(a_kk + a_kl + a_lk + a_ll) / 2`` for ``k < l`` (1-based)."""
    s = (0,) * inst.matrix.m
    for i, j in ((k, k), (k, l), (l, k), (l, l)):
        s = vadd(s, inst.column(i, j))
    return tuple(v // 2 for v in s)


def cdem_expected(d: int) -> tuple:
    """Predicted fundamental holes and their two hole monoids each."""
    inst = cdem_matrix(d)
    diag = tuple(sorted(inst.index(i, i) for i in range(1, d + 1)))
    holes, fams = [], []
    for k, l in itertools.combinations(range(1, d + 1), 2):
        h = cdem_hole(inst, k, l)
        holes.append(h)
        block = tuple(sorted(inst.index(i, j) for i in (k, l) for j in (k, l)))
        zero = (0,) * inst.matrix.n
        fams.append(HoleFamily(h, h, block, zero))
        fams.append(HoleFamily(h, h, diag, zero))
    return sorted(holes), sorted(fams)


def hall_condition(z, d: int) -> bool:
    """``z_i + z_{d+i} <= z_1 + ... + z_d`` for every ``i``."""
    z = tuple(z)
    if len(z) != 2 * d + 1:
        raise ValueError(f"expected a vector of length {2 * d + 1}, got {len(z)}")
    S = sum(z[:d])
    return all(z[i] + z[d + i] <= S for i in range(d))


# ---------------------------------------------------------------------------
# lattice polytopes


@dataclass(frozen=True)
class PolytopeInstance:
    dim: int
    vertices: tuple
    lifted_generators: IntMat

    @property
    def points(self) -> list:
        return [c[:-1] for c in self.lifted_generators.columns()]


def _lift(points) -> IntMat:
    return IntMat.from_columns([tuple(p) + (1,) for p in points])


def lop_matrix(n: int) -> PolytopeInstance:
    """Linear ordering polytope: one 0/1 vertex per permutation, indexed by
    the pairs ``i < j``, with a 1 where the permutation inverts the pair."""
    if not 2 <= n <= 8:
        raise ValueError(f"n must be between 2 and 8, got {n}")
    pairs = list(itertools.combinations(range(n), 2))
    verts = []
    for perm in itertools.permutations(range(1, n + 1)):
        verts.append(tuple(int(perm[i] > perm[j]) for i, j in pairs))
    return PolytopeInstance(len(pairs), tuple(verts), _lift(verts))


def _integral(v) -> tuple:
    out = []
    for x in v:
        if isinstance(x, bool) or not isinstance(x, (int, Fraction)) and not float(x).is_integer():
            raise ValueError(f"vertex {tuple(v)} is not integral")
        if isinstance(x, Fraction) and x.denominator != 1:
            raise ValueError(f"vertex {tuple(v)} is not integral")
        out.append(int(x))
    return tuple(out)


def polytope_lift(vertices) -> PolytopeInstance:
    """All lattice points of ``conv(vertices)``, lifted to height 1."""
    verts = [_integral(v) for v in vertices]
    if not verts:
        raise ValueError("empty vertex list")
    dim = len(verts[0])
    if any(len(v) != dim for v in verts):
        raise ValueError("vertices of different lengths")
    box = [(min(v[i] for v in verts), max(v[i] for v in verts)) for i in range(dim)]
    volume = math.prod(hi - lo + 1 for lo, hi in box)
    if volume > BOX_LIMIT:
        raise ValueError(f"bounding box has {volume} points, limit is {BOX_LIMIT}")
    cone = dual_description([v + (1,) for v in verts])
    # h . (z, 1) >= 0  and  e . (z, 1) == 0
    les = [(tuple(-x for x in h[:-1]), h[-1]) for h in cone.facets]
    eqs = [(e[:-1], -e[-1]) for e in cone.implicit_equations]
    pts = enumerate_lattice_points(eqs, les, dim=dim, box=box)
    return PolytopeInstance(dim, tuple(verts), _lift(pts))


def idp_check(P: PolytopeInstance) -> tuple:
    """``(holds, certificate)``.  When the property fails the certificate is
    a fundamental hole of the lifted semigroup, lowest height first."""
    prob = SemigroupProblem(P.lifted_generators, "ambient")
    if is_saturated(prob):
        return True, None
    holes = fundamental_holes(prob)
    return False, min(holes, key=lambda z: (z[-1], z))


__all__ = [
    "CdemInstance",
    "PolytopeInstance",
    "cdem_expected",
    "cdem_hole",
    "cdem_matrix",
    "hall_condition",
    "idp_check",
    "lop_matrix",
    "polytope_lift",
]
