import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from affine_holes.errors import NotPointedError, UnboundedRegionError
from affine_holes.linalg import IntMat, determinant
from affine_holes.models import cdem_matrix
from affine_holes.polyhedra import (
    dual_description,
    enumerate_lattice_points,
    in_halfopen_parallelepiped,
    is_pointed,
    parallelepiped_points,
    placing_triangulation,
    simplex_parallelepiped_points,
)

from oracles import in_cone, rank


def test_dual_description_examples():
    c = dual_description([(1, 0), (1, 3)])
    assert set(c.facets) == {(0, 1), (3, -1)}
    assert c.pointed and c.lineality_dim == 0
    assert dual_description([(1, 0), (-1, 0)]).lineality_dim == 1


def test_cdem_hyperplane_is_implicit():
    c = dual_description(cdem_matrix(3).matrix.columns())
    eqs = list(c.implicit_equations)
    target = (1, 1, 1, -1, -1, -1, 0)
    assert eqs and rank(eqs + [target]) == rank(eqs)
    assert all(math.gcd(*h) == 1 for h in c.facets)


def test_is_pointed_examples():
    assert is_pointed([(1, 0), (1, 3)])
    assert not is_pointed([(1, 0), (-1, 0)])
    assert is_pointed([(0,)])


def test_enumerate_examples():
    sq = [((1, 0), 1), ((0, 1), 1), ((-1, 0), 0), ((0, -1), 0)]
    assert enumerate_lattice_points((), sq) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    seg = [((1,), 3), ((-1,), 0)]
    assert enumerate_lattice_points((), seg) == [(0,), (1,), (2,), (3,)]
    assert enumerate_lattice_points((), [((-1,), -1), ((1,), 0)]) == []


def test_enumerate_strict_and_rational():
    # 0 <= x < 3, 2y <= 3
    pts = enumerate_lattice_points((), [((-1, 0), 0), ((0, -1), 0), ((0, 2), 3)], strict_upper=[((1, 0), 3)])
    assert pts == [(x, y) for x in range(3) for y in range(2)]
    pts = enumerate_lattice_points((), [((-1,), 0), ((1,), Fraction(7, 2))])
    assert pts == [(0,), (1,), (2,), (3,)]


def test_enumerate_unbounded():
    with pytest.raises(UnboundedRegionError):
        enumerate_lattice_points((), [((-1, 0), 0), ((0, -1), 0)])


def test_parallelepiped_examples():
    assert parallelepiped_points(IntMat(((1, 1), (0, 3)))) == [(0, 0), (1, 1), (1, 2)]
    assert parallelepiped_points(IntMat(((1,),))) == [(0,)]
    pts = parallelepiped_points(IntMat(((1, 1, 1), (0, 1, 3))))
    assert (1, 2) in pts
    assert in_halfopen_parallelepiped(IntMat(((1, 1, 1), (0, 1, 3))), (1, 2))
    assert not in_halfopen_parallelepiped(IntMat(((1, 1), (0, 3))), (1, 0))


def test_parallelepiped_not_pointed():
    with pytest.raises(NotPointedError):
        parallelepiped_points(IntMat(((1, -1),)))


small_cols = st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=5)


@settings(max_examples=80, deadline=None)
@given(small_cols, st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4)), min_size=1, max_size=6))
def test_farkas_consistency(cols, points):
    cols = [c for c in cols if any(c)]
    if not cols:
        return
    cone = dual_description(cols)
    for z in points:
        assert cone.contains(z) == in_cone(cols, z), z
    for c in cols:
        assert cone.contains(c)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=5), st.integers(0, 12))
def test_enumerate_matches_box_filter(ineq_normals, r):
    # region: |x|,|y| <= 4 cut by random half-planes h.z <= r
    box = [((1, 0), 4), ((-1, 0), 4), ((0, 1), 4), ((0, -1), 4)]
    cons = box + [(h, r) for h in ineq_normals]
    pts = enumerate_lattice_points((), cons)
    naive = [z for z in itertools.product(range(-4, 5), repeat=2)
             if all(h[0] * z[0] + h[1] * z[1] <= b for h, b in cons)]
    assert pts == sorted(naive)


nonneg2 = st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)).filter(any), min_size=2, max_size=2)


@settings(max_examples=60, deadline=None)
@given(nonneg2)
def test_simplicial_parallelepiped_agrees(cols):
    if determinant([[cols[0][0], cols[1][0]], [cols[0][1], cols[1][1]]]) == 0:
        return
    A = IntMat.from_columns(cols)
    pts = parallelepiped_points(A)
    assert (0, 0) in pts
    assert pts == sorted(simplex_parallelepiped_points(cols))
    assert len(pts) == abs(determinant(A.rows))
    for z in pts:
        assert in_halfopen_parallelepiped(A, z)
    # sums of columns lie on the closed boundary only
    for c in cols:
        assert c not in pts


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(1, 3)), min_size=3, max_size=6))
def test_placing_triangulation_covers(points):
    if rank(points) < 3:
        return
    simplices = placing_triangulation(points)
    for s in simplices:
        assert rank([points[j] for j in s]) == 3
    # every point of the cone lies in some simplex cone
    for z in itertools.product(range(4), range(4), range(1, 4)):
        if in_cone(points, z):
            assert any(in_cone([points[j] for j in s], z) for s in simplices)
