"""Exact solvers for non-negative integer systems.

* :class:`MembershipOracle` decides ``b in Q(A)`` by memoised search over
  points, subtracting one generator at a time and never leaving the cone.
* :func:`minimal_nonneg_solutions` enumerates the coordinatewise-minimal
  non-negative solutions of ``B x = c`` breadth first, extending a partial
  vector only along columns that point back toward the solution set
  (Contejean-Devie).  With ``c != 0`` this is the homogenised search cut at
  ``t = 1``.
* :func:`saturation_hilbert_basis` triangulates the cone, collects the
  lattice points of every simplicial half-open parallelepiped and keeps the
  irreducible ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from operator import mul, sub

from .errors import DimensionError, NotPointedError, ZeroColumnError
from .linalg import (
    IntMat,
    Lattice,
    as_intmat,
    dot,
    matvec,
    saturated_lattice_basis,
    vsub,
)
from .polyhedra import (
    ConeDescription,
    dual_description,
    placing_triangulation,
    simplex_parallelepiped_points,
)

LATTICES = ("ambient", "generated")


@dataclass(frozen=True)
class MinimalSolutionSet:
    solutions: tuple  # sorted; (lam, mu) pairs for inhomogeneous hole systems


@dataclass(frozen=True)
class HilbertBasis:
    elements: tuple  # sorted lexicographically

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _nonzero_columns(A: IntMat) -> list:
    cols = A.columns()
    for j, c in enumerate(cols):
        if not any(c):
            raise ZeroColumnError(f"column {j + 1} is zero")
    return cols


def positive_grading(columns, cone: ConeDescription) -> tuple:
    """An integral functional that is positive on every nonzero point of the
    (pointed) cone: the coordinate sum when every generator has positive
    coordinate sum, otherwise the sum of the facet normals."""
    m = len(columns[0])
    if all(sum(c) > 0 for c in columns):
        return (1,) * m
    g = tuple(sum(h[i] for h in cone.facets) for i in range(m))
    if not all(dot(g, c) > 0 for c in columns):
        raise NotPointedError("no positive grading found; is the cone pointed?")
    return g


class MembershipOracle:
    """Decides membership in the semigroup generated by the columns of ``A``.

    ``memo[b]`` holds the index of a column ``j`` with ``b - a_j`` in Q
    (``-1`` for the zero vector) or None when ``b`` is not in Q.
    """

    def __init__(self, A, cone: ConeDescription | None = None):
        self.A = as_intmat(A)
        self.cols = _nonzero_columns(self.A)
        self.cone = cone or dual_description(self.cols)
        if not self.cone.pointed:
            raise NotPointedError("columns do not generate a pointed cone")
        seen = {}
        for j, c in enumerate(self.cols):
            seen.setdefault(c, j)
        self._order = sorted(seen.values())
        self.memo = {}

    def _resolve(self, root):
        memo = self.memo
        if root in memo:
            return
        if not any(root):
            memo[root] = -1
            return
        cols = [self.cols[j] for j in self._order]
        order = self._order
        facets = self.cone.facets
        # children of a point in the span stay there, so only the
        # inequalities need checking below
        stack = [[root, 0]]
        while stack:
            top = stack[-1]
            node, k = top
            if k == len(order):
                memo[node] = None
                stack.pop()
                continue
            child = tuple(map(sub, node, cols[k]))
            hit = memo.get(child, False)
            if hit is False:
                if not any(child):
                    memo[child] = hit = -1
                elif all(sum(map(mul, h, child)) >= 0 for h in facets):
                    stack.append([child, 0])
                    continue
                else:
                    top[1] += 1
                    continue
            if hit is None:
                top[1] += 1
            else:
                memo[node] = order[k]
                stack.pop()

    def __contains__(self, b) -> bool:
        b = tuple(b)
        if not self.cone.contains(b):
            return False
        self._resolve(b)
        return self.memo[b] is not None

    def witness(self, b):
        """Non-negative ``x`` with ``A x = b``, or None."""
        b = tuple(b)
        if len(b) != self.A.m:
            raise DimensionError(f"vector of length {len(b)} for a matrix with {self.A.m} rows")
        if b not in self:
            return None
        x = [0] * self.A.n
        node = b
        while any(node):
            j = self.memo[node]
            x[j] += 1
            node = vsub(node, self.cols[j])
        return tuple(x)


def integer_feasible(A, b, cone: ConeDescription | None = None):
    """Some ``x >= 0`` integral with ``A x = b``, or None."""
    oracle = MembershipOracle(A, cone)
    x = oracle.witness(b)
    if x is not None:
        assert matvec(oracle.A, x) == tuple(b)
    return x


# ---------------------------------------------------------------------------
# minimal solutions


def _dominated(x, solutions) -> bool:
    for s in solutions:
        if all(a <= b for a, b in zip(s, x)):
            return True
    return False


def minimal_nonneg_solutions(B, c=None, exclusive=()) -> list:
    """All coordinatewise-minimal ``x >= 0`` with ``B x = c`` (``x != 0`` when
    ``c`` is zero), sorted.

    ``exclusive`` lists index pairs that may not both be positive; any
    solution violating this is assumed to dominate one that does not.
    """
    B = as_intmat(B)
    m, n = B.shape
    c = tuple(c) if c is not None else (0,) * m
    if len(c) != m:
        raise DimensionError(f"right-hand side has length {len(c)}, matrix has {m} rows")
    cols = B.columns()
    partner = {}
    for i, j in exclusive:
        partner.setdefault(i, []).append(j)
        partner.setdefault(j, []).append(i)
    solutions = []
    zero = (0,) * n
    blocked = []
    if any(c):
        # anything above a homogeneous solution h is useless: subtracting h
        # from a solution above it gives a smaller one.  This also makes the
        # search finite when there is no solution at all.
        blocked = minimal_nonneg_solutions(B, None, exclusive)
        frontier = {zero: tuple(-v for v in c)}
    else:
        frontier = {}
        for j, col in enumerate(cols):
            e = tuple(int(i == j) for i in range(n))
            if not any(col):
                solutions.append(e)
            else:
                frontier[e] = col
    while frontier:
        found = []
        nxt = {}
        for x, r in frontier.items():
            for j, col in enumerate(cols):
                if dot(r, col) >= 0:
                    continue
                if any(x[p] for p in partner.get(j, ())):
                    continue
                y = x[:j] + (x[j] + 1,) + x[j + 1 :]
                if y in nxt:
                    continue
                if _dominated(y, solutions) or _dominated(y, blocked):
                    continue
                r2 = tuple(a + b for a, b in zip(r, col))
                if any(r2):
                    nxt[y] = r2
                elif y not in found:
                    found.append(y)
        solutions.extend(found)
        frontier = nxt
    return sorted(solutions)


def minimal_nonneg_kernel(B) -> HilbertBasis:
    """Hilbert basis of ``{x in Z^n_{>=0} : B x = 0}``."""
    return HilbertBasis(tuple(minimal_nonneg_solutions(B)))


def minimal_inhomogeneous(A, f, lambda_columns=None) -> MinimalSolutionSet:
    """Minimal ``(lam, mu) >= 0`` with ``f + A' lam = A mu``.

    ``A'`` holds the columns listed in ``lambda_columns`` (all by default);
    ``lam`` is indexed like that list.  Minimal solutions never use the same
    column on both sides, which prunes the search.
    """
    A = as_intmat(A)
    f = tuple(f)
    if len(f) != A.m:
        raise DimensionError(f"f has length {len(f)}, matrix has {A.m} rows")
    lam_cols = list(range(A.n)) if lambda_columns is None else list(lambda_columns)
    k = len(lam_cols)
    if not any(f):
        # the zero solution lies below every other one
        return MinimalSolutionSet((((0,) * k, (0,) * A.n),))
    cols = [tuple(-v for v in A.column(j)) for j in lam_cols] + A.columns()
    B = IntMat.from_columns(cols)
    exclusive = [(i, k + j) for i, j in enumerate(lam_cols)]
    sols = minimal_nonneg_solutions(B, f, exclusive)
    pairs = sorted((s[:k], s[k:]) for s in sols)
    return MinimalSolutionSet(tuple(pairs))


# ---------------------------------------------------------------------------
# saturation


class SaturationFrame:
    """The cone of ``A`` together with the lattice that defines saturation.

    ``lattice="ambient"`` saturates with respect to ``Z^m ∩ span(A)``;
    ``lattice="generated"`` uses the lattice spanned by the columns.
    """

    def __init__(self, A, lattice: str = "ambient", cone: ConeDescription | None = None):
        if lattice not in LATTICES:
            raise ValueError(f"lattice must be one of {LATTICES}, got {lattice!r}")
        self.A = as_intmat(A)
        self.columns = _nonzero_columns(self.A)
        self.cone = cone or dual_description(self.columns)
        if not self.cone.pointed:
            raise NotPointedError("columns do not generate a pointed cone")
        self.lattice_kind = lattice
        if lattice == "generated":
            basis = Lattice(self.A).basis
        else:
            basis = saturated_lattice_basis(self.columns)
        self.lattice = Lattice(IntMat.from_columns(basis))
        # coordinates are always taken in the Hermite basis
        self.basis = self.lattice.basis
        self.grading = positive_grading(self.columns, self.cone)
        self._candidates = None

    def contains(self, z) -> bool:
        """Membership in ``K ∩ L``."""
        return self.cone.contains(z) and z in self.lattice

    def degree(self, z) -> int:
        return dot(self.grading, z)

    def lift(self, coords):
        return tuple(sum(c * b[i] for c, b in zip(coords, self.basis)) for i in range(self.A.m))

    def candidates(self) -> list:
        """Lattice points of the half-open parallelepipeds of a triangulation
        of the cone by the columns of ``A``, zero included, sorted.

        Together with the columns they generate ``K ∩ L`` as a monoid, and
        every fundamental hole is among them.
        """
        if self._candidates is None:
            coords = [self.lattice.coordinates(c) for c in self.columns]
            pts = set()
            for simplex in placing_triangulation(coords):
                for p in simplex_parallelepiped_points([coords[j] for j in simplex]):
                    pts.add(self.lift(p))
            self._candidates = sorted(pts)
        return self._candidates


def saturation_hilbert_basis(A, lattice: str = "ambient", frame: SaturationFrame | None = None) -> HilbertBasis:
    """Minimal Hilbert basis of ``K(A) ∩ L``."""
    frame = frame or SaturationFrame(A, lattice)
    cands = set(frame.columns) | set(frame.candidates())
    cands.discard((0,) * frame.A.m)
    ordered = sorted(cands, key=lambda z: (frame.degree(z), z))
    basis = []
    for z in ordered:
        dz = frame.degree(z)
        if not any(frame.degree(h) < dz and frame.contains(vsub(z, h)) for h in basis):
            basis.append(z)
    return HilbertBasis(tuple(sorted(basis)))
