import itertools
import math
from fractions import Fraction

import pytest

from affine_holes.diophantine import integer_feasible, saturation_hilbert_basis
from affine_holes.models import (
    cdem_expected,
    cdem_hole,
    cdem_matrix,
    hall_condition,
    idp_check,
    lop_matrix,
    polytope_lift,
)
from affine_holes.polyhedra import parallelepiped_points
from affine_holes.semigroup import SemigroupProblem, fundamental_holes

from oracles import in_cone, make_member

D3 = [
    (1, 0, 0, 1, 0, 0, 1, 0, 0),
    (0, 1, 0, 0, 1, 0, 0, 1, 0),
    (0, 0, 1, 0, 0, 1, 0, 0, 1),
    (1, 1, 1, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 1, 1, 1, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 1, 1, 1),
    (1, 0, 0, 0, 1, 0, 0, 0, 1),
]


def test_cdem_matrix_examples():
    inst = cdem_matrix(3)
    assert inst.matrix.shape == (7, 9)
    # rows: column sums (j), row sums (i), diagonal
    for i, j in itertools.product(range(1, 4), repeat=2):
        c = inst.column(i, j)
        assert c[j - 1] == 1 and c[3 + i - 1] == 1 and c[6] == int(i == j) and sum(c) == 2 + (i == j)
    assert inst.column(1, 1) == (1, 0, 0, 1, 0, 0, 1)
    two = cdem_matrix(2).matrix
    assert two.columns() == [(1, 0, 1, 0, 1), (0, 1, 1, 0, 0), (1, 0, 0, 1, 0), (0, 1, 0, 1, 1)]
    with pytest.raises(ValueError):
        cdem_matrix(1)


def test_cdem_matrix_d3_table():
    assert cdem_matrix(3).matrix.rows == tuple(D3)


def test_cdem_hyperplane():
    for d in (2, 3, 4, 5):
        for c in cdem_matrix(d).matrix.columns():
            assert sum(c[:d]) == sum(c[d:2 * d])


def test_cdem_expected_examples():
    holes, fams = cdem_expected(3)
    assert len(holes) == 3 and len(fams) == 6
    assert cdem_hole(cdem_matrix(3), 1, 2) == (1, 1, 0, 1, 1, 0, 1)
    assert len(cdem_expected(4)[0]) == 6
    for d in (2, 3, 4):
        assert len(cdem_expected(d)[0]) == math.comb(d, 2)
    with pytest.raises(ValueError):
        cdem_expected(1)


@pytest.mark.parametrize("d", [2, 3])
def test_cdem_fundamental_matches_theory(d):
    P = SemigroupProblem(cdem_matrix(d).matrix)
    assert fundamental_holes(P) == cdem_expected(d)[0]


@pytest.mark.parametrize("d", [2, 3, 4])
def test_cdem_hilbert_basis(d):
    inst = cdem_matrix(d)
    hb = saturation_hilbert_basis(inst.matrix)
    assert set(hb) == set(inst.matrix.columns()) | set(cdem_expected(d)[0])
    assert len(hb) == d * d + math.comb(d, 2)


def test_hall_examples():
    assert hall_condition((2, 2, 0, 2, 2, 0, 2), 3)
    assert not hall_condition((1, 0, 0, 1, 0, 0, 1), 3)
    assert hall_condition((0,) * 7, 3)
    with pytest.raises(ValueError):
        hall_condition((0,) * 6, 3)


@pytest.mark.slow
def test_hall_on_parallelepiped_points():
    # the inequality is claimed for the nonzero lattice points of the
    # half-open parallelepiped; check it exactly there
    inst = cdem_matrix(3)
    pts = [z for z in parallelepiped_points(inst.matrix) if any(z)]
    assert pts
    for z in pts:
        assert hall_condition(z, 3), z


def test_hall_points_generated_by_basis():
    # every non-negative integer point on the hyperplane, inside the cone and
    # satisfying the inequality is a sum of Hilbert basis elements (degree <= 8)
    d = 3
    inst = cdem_matrix(d)
    P = SemigroupProblem(inst.matrix)
    hb = list(saturation_hilbert_basis(inst.matrix))
    member = make_member(hb)
    count = 0
    for z in itertools.product(range(5), repeat=2 * d + 1):
        if sum(z) > 8 or sum(z[:d]) != sum(z[d:2 * d]):
            continue
        if not P.cone.contains(z) or not hall_condition(z, d):
            continue
        count += 1
        assert member(z), z
    assert count > 50


def test_lop_examples():
    lop3 = lop_matrix(3)
    A = lop3.lifted_generators
    assert A.shape == (4, 6)
    assert (0, 0, 0, 1) in A.columns() and (1, 1, 1, 1) in A.columns()
    assert lop3.vertices[0] == (0, 0, 0)
    lop4 = lop_matrix(4)
    assert lop4.lifted_generators.shape == (7, 24)
    for n in (2, 3, 4, 5):
        cols = lop_matrix(n).lifted_generators.columns()
        assert len(set(cols)) == math.factorial(n)
        assert all(set(c) <= {0, 1} and c[-1] == 1 for c in cols)
    for bad in (1, 9):
        with pytest.raises(ValueError):
            lop_matrix(bad)


def test_polytope_lift_examples():
    seg = polytope_lift([(0,), (3,)])
    assert seg.lifted_generators.columns() == [(0, 1), (1, 1), (2, 1), (3, 1)]
    sq = polytope_lift([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert len(sq.lifted_generators.columns()) == 4
    reeve = polytope_lift([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)])
    assert sorted(reeve.points) == sorted([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)])
    # lifting the vertices of lop(3) adds nothing: the vertices are all its lattice points
    assert sorted(polytope_lift(lop_matrix(3).vertices).points) == sorted(lop_matrix(3).vertices)
    with pytest.raises(ValueError):
        polytope_lift([(Fraction(1, 2),), (1,)])
    with pytest.raises(ValueError):
        polytope_lift([])


def test_polytope_lift_vs_box_scan():
    tri = [(0, 0), (4, 1), (1, 3)]
    pts = set(polytope_lift(tri).points)

    # a point is in the triangle iff all three edge orientations agree
    def side(a, b, p):
        return (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])

    brute = set()
    for p in itertools.product(range(5), range(4)):
        s = [side(tri[k], tri[(k + 1) % 3], p) for k in range(3)]
        if all(v >= 0 for v in s) or all(v <= 0 for v in s):
            brute.add(p)
    assert pts == brute


def test_idp_examples():
    assert idp_check(lop_matrix(3)) == (True, None)
    assert idp_check(polytope_lift([(0,), (1,)])) == (True, None)
    holds, cert = idp_check(polytope_lift([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)]))
    assert not holds and cert == (1, 1, 1, 2)


def test_reeve_certificate_is_verifiable():
    reeve = polytope_lift([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)])
    _, cert = idp_check(reeve)
    cols = reeve.lifted_generators.columns()
    assert cert[-1] == 2
    # no two lattice points of the polytope sum to it
    assert not any(tuple(a + b for a, b in zip(x, y)) == cert for x, y in itertools.combinations_with_replacement(cols, 2))
    assert integer_feasible(reeve.lifted_generators, cert) is None
    # yet it lies in the cone: twice it is the sum of the four lifted vertices
    assert tuple(map(sum, zip(*cols))) == tuple(2 * v for v in cert)
    assert in_cone(cols, cert)
