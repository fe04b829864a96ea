"""Holes of the affine semigroup generated by the columns of an integer matrix.

Pipeline for a pointed matrix ``A``:

1. Fundamental holes.  They all lie among the lattice points of the
   half-open simplicial parallelepipeds of a triangulation of the cone, and
   a hole ``f`` is fundamental exactly when no ``f - a_i`` lies in the
   saturation.
2. For each fundamental hole ``f`` the standard pairs ``(u, S)`` of the
   non-hole ideal ``{lam : f + A lam in Q}``.  Each gives the hole family
   ``f + A u + sum_{j in S} N a_j``.

The pairs come from splitting on one column at a time (:func:`_hole_pairs`).
Everything rests on one test: with ``F`` the smallest face of the cone
containing the columns in ``S``, the family ``g + sum_{j in S} N a_j`` meets
``Q`` iff ``g`` lies in ``Q + Z A_F``, which is a bounded search over the
columns outside ``F``.  :func:`hole_ideal` finds the generators of the ideal
directly, degree by degree, and serves as a cross-check.
"""

from __future__ import annotations

import enum
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from operator import sub

from .diophantine import (
    LATTICES,
    MembershipOracle,
    SaturationFrame,
    saturation_hilbert_basis,
)
from .errors import DimensionError, GcdNotOneError, MultiRowError
from .linalg import IntMat, Lattice, as_intmat, dot, matvec, vadd, vsub
from .polyhedra import enumerate_lattice_points, parallelepiped_points
from .stdpairs import MonomialIdeal, minimalize, standard_pairs


class Tag(enum.Enum):
    OUTSIDE_CONE = "OutsideCone"
    OUTSIDE_LATTICE = "OutsideLattice"
    HOLE = "Hole"
    IN_Q = "InQ"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class PointClass:
    tag: Tag
    witness: tuple | None = None


@dataclass(frozen=True, order=True)
class HoleFamily:
    fundamental: tuple
    base: tuple
    free_columns: tuple  # 0-based column indices, sorted
    root: tuple = ()  # lam with base = fundamental + A lam


@dataclass(frozen=True)
class HoleReport:
    matrix_dims: tuple
    fundamental_holes: tuple
    families: tuple
    saturated: bool


class SemigroupProblem:
    """A matrix whose columns generate a pointed cone, with its caches."""

    def __init__(self, A, lattice: str = "ambient"):
        self.A = as_intmat(A)
        self.frame = SaturationFrame(self.A, lattice)
        self.cone = self.frame.cone
        self.columns = self.frame.columns
        self.oracle = MembershipOracle(self.A, self.cone)
        self.lattice_kind = lattice
        self._fundamental = None
        self._faces = {}
        self._pair_memo = {}

    @property
    def lattice_hnf(self) -> IntMat:
        return IntMat.from_columns(self.frame.basis)

    def in_q(self, b) -> bool:
        return tuple(b) in self.oracle

    def in_saturation(self, b) -> bool:
        return self.frame.contains(tuple(b))

    def is_hole(self, b) -> bool:
        b = tuple(b)
        return self.frame.contains(b) and b not in self.oracle

    def image(self, lam, cols=None):
        """``A lam``, or ``A[:, cols] lam`` when ``cols`` is given."""
        cols = range(self.A.n) if cols is None else cols
        out = [0] * self.A.m
        for c, j in zip(lam, cols):
            if c:
                a = self.columns[j]
                for i in range(self.A.m):
                    out[i] += c * a[i]
        return tuple(out)

    # -- the test behind the stopping rule --------------------------------

    def _face(self, S):
        key = frozenset(S)
        if key not in self._faces:
            tight = [h for h in self.cone.facets if all(dot(h, self.columns[s]) == 0 for s in S)]
            inside = [j for j, a in enumerate(self.columns) if all(dot(h, a) == 0 for h in tight)]
            outside = [j for j in range(self.A.n) if j not in inside]
            w = tuple(sum(h[i] for h in tight) for i in range(self.A.m))
            group = Lattice(IntMat.from_columns([self.columns[j] for j in inside]))
            # w vanishes on the face, so it is well defined on cosets
            steps = [(self.columns[j], dot(w, self.columns[j])) for j in outside]
            self._faces[key] = (w, group, steps, {})
        return self._faces[key]

    def family_meets_q(self, g, S) -> bool:
        """Does ``g + sum_{j in S} N a_j`` meet Q?  ``S`` must be nonempty.

        Searches ``g - A_O x`` over the columns ``O`` outside the face,
        keeping one canonical representative per coset of ``Z A_F``.
        """
        w, group, steps, memo = self._face(S)
        start = group.reduce(tuple(g))[1]
        if start in memo:
            return memo[start]
        # iterative DFS; memo[r] is True/False once decided, None while open.
        # The weight w.r drops along every step, so the graph is acyclic.
        stack = [[start, 0, dot(w, start)]]
        memo[start] = None
        reduce = group.reduce
        nsteps = len(steps)
        while stack:
            top = stack[-1]
            r, k, budget = top
            if k == 0 and not any(r):
                memo[r] = True
            if memo[r] is True or k == nsteps:
                if memo[r] is None:
                    memo[r] = False
                stack.pop()
                if stack and memo[r]:
                    memo[stack[-1][0]] = True
                continue
            top[1] += 1
            a, wa = steps[k]
            if wa > budget:
                continue
            child = reduce(tuple(map(sub, r, a)))[1]
            seen = memo.get(child, "new")
            if seen == "new":
                memo[child] = None
                stack.append([child, 0, budget - wa])
            elif seen:
                memo[r] = True
        return memo[start]


# ---------------------------------------------------------------------------
# classification and fundamental holes


def classify_point(P: SemigroupProblem, b) -> PointClass:
    b = tuple(b)
    if len(b) != P.A.m:
        raise DimensionError(f"point has length {len(b)}, matrix has {P.A.m} rows")
    bad = P.cone.violated(b)
    if bad is not None:
        return PointClass(Tag.OUTSIDE_CONE, tuple(bad))
    _, residue = P.frame.lattice.reduce(b)
    if any(residue):
        return PointClass(Tag.OUTSIDE_LATTICE, residue)
    x = P.oracle.witness(b)
    if x is None:
        return PointClass(Tag.HOLE)
    return PointClass(Tag.IN_Q, x)


def _is_fundamental(P, f) -> bool:
    return P.is_hole(f) and not any(P.in_saturation(vsub(f, a)) for a in P.columns)


def fundamental_holes(P: SemigroupProblem, method: str = "triangulation") -> list:
    """The fundamental holes, sorted.

    ``method="zonotope"`` scans the full half-open zonotope of all columns
    and checks fundamentality by enumerating ``K ∩ (f - K)``; it is slow and
    kept as an independent cross-check.
    """
    if method == "triangulation":
        if P._fundamental is None:
            P._fundamental = [f for f in P.frame.candidates() if _is_fundamental(P, f)]
        return list(P._fundamental)
    if method != "zonotope":
        raise ValueError(f"unknown method {method!r}")
    holes = [z for z in parallelepiped_points(P.A) if P.is_hole(z)]
    out = []
    for f in holes:
        eqs = [(e, 0) for e in P.cone.implicit_equations]
        les = [(tuple(-x for x in h), 0) for h in P.cone.facets]
        les += [(h, dot(h, f)) for h in P.cone.facets]
        below = enumerate_lattice_points(eqs, les, dim=P.A.m)
        if not any(z != f and P.is_hole(z) and P.in_q(vsub(f, z)) for z in below):
            out.append(f)
    return out


def is_saturated(P: SemigroupProblem) -> bool:
    """Checked twice: no fundamental holes, and the Hilbert basis of the
    saturation lies in Q."""
    by_holes = not fundamental_holes(P)
    hb = saturation_hilbert_basis(P.A, P.lattice_kind, frame=P.frame)
    by_basis = all(P.in_q(h) for h in hb)
    if by_holes != by_basis:
        raise AssertionError("saturation tests disagree")
    return by_holes


def droppable_columns(P: SemigroupProblem, f) -> dict:
    """``{i: x}`` for every column with ``f + a_i`` in Q, ``x`` a witness."""
    out = {}
    for i, a in enumerate(P.columns):
        x = P.oracle.witness(vadd(f, a))
        if x is not None:
            assert matvec(P.A, x) == vadd(f, a)
            out[i] = x
    return out


# ---------------------------------------------------------------------------
# the non-hole ideal and its standard pairs


def hole_ideal(P: SemigroupProblem, f, kept_columns=None) -> MonomialIdeal:
    """The monomial ideal of all ``lam`` (indexed by ``kept_columns``) with
    ``f + A' lam`` in Q.  ``labels`` records the original columns."""
    f = tuple(f)
    cols = list(range(P.A.n)) if kept_columns is None else sorted(kept_columns)
    n = len(cols)
    zero = (0,) * n
    if P.in_q(f):
        return MonomialIdeal(n, (zero,), tuple(cols))
    gens = []
    level = {zero: f}  # standard monomials of the current degree -> f + A' lam
    degree = 0
    fresh = True
    in_q = {}
    steps = [P.columns[j] for j in cols]
    while True:
        # the stopping test only runs after a level without new generators;
        # once the ideal is complete every later level is such a level
        if not level:
            return MonomialIdeal(n, minimalize(gens, n).generators, tuple(cols))
        if not fresh:
            ideal = minimalize(gens, n)
            if _certified(P, f, cols, ideal, degree):
                return MonomialIdeal(n, ideal.generators, tuple(cols))
        found = len(gens)
        nxt = {}
        for lam, point in level.items():
            for i in range(n):
                mu = lam[:i] + (lam[i] + 1,) + lam[i + 1 :]
                if mu in nxt:
                    continue
                # every generator so far has degree <= degree, so mu lies in
                # the ideal found so far iff some lower neighbour left the level
                if any(mu[j] and mu[:j] + (mu[j] - 1,) + mu[j + 1 :] not in level for j in range(n) if j != i):
                    continue
                p = vadd(point, steps[i])
                hit = in_q.get(p)
                if hit is None:
                    hit = in_q[p] = p in P.oracle
                if hit:
                    gens.append(mu)
                else:
                    nxt[mu] = p
        level = nxt
        degree += 1
        fresh = len(gens) > found


def _certified(P, f, cols, ideal, degree) -> bool:
    """Every standard monomial of ``ideal`` gives a hole."""
    for pair in standard_pairs(ideal):
        g = vadd(f, P.image(pair.root, cols))
        if pair.free:
            if P.family_meets_q(g, [cols[i] for i in pair.free]):
                return False
        elif sum(pair.root) > degree and P.in_q(g):
            return False
    return True


def _meets(P, g, V) -> bool:
    """Does the family ``g + sum_{j in V} N a_j`` meet Q?"""
    if not V:
        return P.in_q(g)
    return P.family_meets_q(g, V)


def _hole_pairs(P, g, V, R) -> tuple:
    """Standard pairs, over the variables ``R``, of the ideal of all ``lam``
    whose family ``g + A lam + sum_{j in V} N a_j`` meets Q.  Roots are full
    length vectors; free sets exclude ``V``."""
    key = (g, V, R)
    memo = P._pair_memo
    if key in memo:
        return memo[key]
    zero = (0,) * P.A.n
    if _meets(P, g, V):
        out = ()  # the unit ideal
    elif not _meets(P, g, V | R):
        out = ((zero, R),)  # the zero ideal
    else:
        i = min(R)
        rest = R - {i}
        a = P.columns[i]
        pairs = [(u, S | {i}) for u, S in _hole_pairs(P, g, V | {i}, rest)]
        # slices of x_i-degree e grow with e up to the ideal with x_i
        # inverted; a slice adds nothing new once all of its pairs stay
        # standard with x_i free
        e, ge = 0, g
        while True:
            kept = []
            for u, S in _hole_pairs(P, ge, V, rest):
                if _meets(P, vadd(g, P.image(u)), V | S | {i}):
                    kept.append((u[:i] + (e,) + u[i + 1 :], S))
            if not kept:
                break
            pairs.extend(kept)
            e += 1
            ge = vadd(ge, a)
        out = tuple(pairs)
    memo[key] = out
    return out


def holes_above(P: SemigroupProblem, f, use_trick: bool = True) -> list:
    """Hole families coming from the standard pairs of the non-hole ideal of
    ``f``, sorted."""
    f = tuple(f)
    kept = range(P.A.n)
    if use_trick:
        drop = droppable_columns(P, f)
        kept = [i for i in range(P.A.n) if i not in drop]
    out = []
    for root, S in _hole_pairs(P, f, frozenset(), frozenset(kept)):
        base = vadd(f, P.image(root))
        out.append(HoleFamily(f, base, tuple(sorted(S)), root))
    return sorted(out)


def _worker(args):
    rows, lattice, f, use_trick = args
    return holes_above(SemigroupProblem(IntMat(rows), lattice), f, use_trick)


def default_jobs() -> int:
    env = os.environ.get("HASE_JOBS", "").strip()
    if not env:
        return 1
    try:
        jobs = int(env)
    except ValueError:
        raise ValueError(f"HASE_JOBS must be a positive integer, got {env!r}") from None
    if jobs < 1:
        raise ValueError(f"HASE_JOBS must be a positive integer, got {env!r}")
    return jobs


def hole_report(P: SemigroupProblem, use_trick: bool = True, jobs: int | None = None, only=None) -> HoleReport:
    """Fundamental holes and all hole families.

    ``only`` restricts the family computation to the listed fundamental
    holes (0-based positions or vectors); the fundamental holes themselves
    are always reported in full.
    """
    F = fundamental_holes(P)
    chosen = F
    if only is not None:
        chosen = []
        for item in only:
            if isinstance(item, int):
                if not 0 <= item < len(F):
                    raise IndexError(f"there are only {len(F)} fundamental holes")
                chosen.append(F[item])
            else:
                item = tuple(item)
                if item not in F:
                    raise ValueError(f"{list(item)} is not a fundamental hole")
                chosen.append(item)
        chosen = sorted(set(chosen))
    jobs = default_jobs() if jobs is None else jobs
    families = []
    if jobs > 1 and len(chosen) > 1:
        tasks = [(P.A.rows, P.lattice_kind, f, use_trick) for f in chosen]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            for fams in ex.map(_worker, tasks):
                families.extend(fams)
    else:
        for f in chosen:
            families.extend(holes_above(P, f, use_trick))
    return HoleReport(P.A.shape, tuple(F), tuple(sorted(families)), not F)


# ---------------------------------------------------------------------------
# checks against brute force


class FamilyCover:
    """Decides whether a point lies in one of a list of hole families."""

    def __init__(self, P: SemigroupProblem, families):
        self.P = P
        self.families = list(families)
        self._oracles = {}

    def _oracle(self, S):
        if S not in self._oracles:
            sub = IntMat.from_columns([self.P.columns[j] for j in S])
            self._oracles[S] = MembershipOracle(sub)
        return self._oracles[S]

    def __contains__(self, z) -> bool:
        z = tuple(z)
        for fam in self.families:
            d = vsub(z, fam.base)
            if not any(d):
                return True
            if fam.free_columns and d in self._oracle(fam.free_columns):
                return True
        return False


def saturation_points(P: SemigroupProblem, max_degree: int) -> list:
    """Points of the saturation of degree at most ``max_degree``, sorted."""
    eqs = [(e, 0) for e in P.cone.implicit_equations]
    les = [(tuple(-x for x in h), 0) for h in P.cone.facets]
    les.append((P.frame.grading, max_degree))
    pts = enumerate_lattice_points(eqs, les, dim=P.A.m)
    return [z for z in pts if z in P.frame.lattice]


def degree_check(P: SemigroupProblem, report: HoleReport, max_degree: int = 8) -> list:
    """Points up to ``max_degree`` where brute-force classification and the
    report's families disagree.  Empty when the report is right there."""
    cover = FamilyCover(P, report.families)
    bad = []
    for z in saturation_points(P, max_degree):
        if P.is_hole(z) != (z in cover):
            bad.append(z)
    return bad


def frobenius_number(P) -> int:
    """Largest integer outside the numerical semigroup; -1 when every
    positive integer is representable."""
    if not isinstance(P, SemigroupProblem):
        P = SemigroupProblem(P)
    if P.A.m != 1:
        raise MultiRowError(f"Frobenius numbers need a single row, got {P.A.m}")
    row = P.A.rows[0]
    if any(v <= 0 for v in row):
        raise ValueError("Frobenius numbers need positive generators")
    if math.gcd(*row) != 1:
        raise GcdNotOneError(f"generators have gcd {math.gcd(*row)}")
    report = hole_report(P, use_trick=True, jobs=1)
    best = -1
    for fam in report.families:
        assert not fam.free_columns
        best = max(best, fam.base[0])
    return best


__all__ = [
    "LATTICES",
    "FamilyCover",
    "HoleFamily",
    "HoleReport",
    "PointClass",
    "SemigroupProblem",
    "Tag",
    "classify_point",
    "degree_check",
    "droppable_columns",
    "frobenius_number",
    "fundamental_holes",
    "hole_ideal",
    "hole_report",
    "holes_above",
    "is_saturated",
    "saturation_points",
]
