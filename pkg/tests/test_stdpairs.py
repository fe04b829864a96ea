import itertools

import pytest
from hypothesis import given, settings, strategies as st

from affine_holes.errors import DimensionError
from affine_holes.stdpairs import MonomialIdeal, StandardPair, covered, is_standard, minimalize, standard_pairs

from oracles import brute_standard, pair_admissible, pair_maximal


def pairs_of(n, gens):
    return [(p.root, p.free) for p in standard_pairs(minimalize(gens, n))]


def test_minimalize_examples():
    assert minimalize([(1, 0), (1, 1)]).generators == ((1, 0),)
    assert minimalize([(2, 0), (1, 1), (2, 3)]).generators == ((1, 1), (2, 0))
    assert minimalize([], 3).generators == ()
    with pytest.raises(ValueError):
        minimalize([])


def test_is_standard_examples():
    I = MonomialIdeal(2, ((1, 0),))
    assert is_standard(I, (0, 5))
    assert not is_standard(I, (1, 1))
    assert is_standard(MonomialIdeal(2, ()), (7, 7))
    with pytest.raises(DimensionError):
        is_standard(I, (1,))


def test_bad_ideals():
    with pytest.raises(DimensionError):
        MonomialIdeal(2, ((1,),))
    with pytest.raises(ValueError):
        MonomialIdeal(1, ((-1,),))


def test_standard_pairs_examples():
    assert pairs_of(2, [(1, 0), (0, 1)]) == [((0, 0), ())]
    assert pairs_of(2, [(1, 0)]) == [((0, 0), (1,))]
    assert pairs_of(2, [(2, 0), (1, 1)]) == [((0, 0), (1,)), ((1, 0), ())]
    assert pairs_of(3, []) == [((0, 0, 0), (0, 1, 2))]
    assert pairs_of(2, [(0, 0)]) == []


def test_pair_covers():
    p = StandardPair((1, 0, 0), (2,))
    assert p.covers((1, 0, 5)) and not p.covers((1, 1, 5)) and not p.covers((0, 0, 5))
    assert covered([p], (1, 0, 0))


def brute_pairs(n, gens):
    """All maximal admissible pairs, by enumeration; roots are bounded by
    the largest exponents of the generators."""
    top = [max([g[i] for g in gens], default=0) for i in range(n)]
    adm = []
    for S in itertools.chain.from_iterable(itertools.combinations(range(n), k) for k in range(n + 1)):
        ranges = [range(1) if i in S else range(top[i] + 1) for i in range(n)]
        for u in itertools.product(*ranges):
            if pair_admissible(gens, u, S, None):
                adm.append((u, S))
    out = []
    for u, S in adm:
        bigger = any(
            (v, T) != (u, S)
            and all(a <= b for a, b in zip(v, u))
            and set(i for i in range(n) if u[i] > v[i]) | set(S) <= set(T)
            for v, T in adm
        )
        if not bigger:
            out.append((u, S))
    return sorted(out)


ideals = st.integers(1, 5).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(*[st.integers(0, 4)] * n), max_size=6))
)


@settings(max_examples=150, deadline=None)
@given(ideals)
def test_coverage_admissible_maximal(ideal):
    n, gens = ideal
    I = minimalize(gens, n)
    pairs = standard_pairs(I)
    for p in pairs:
        assert not any(p.root[j] for j in p.free)
        assert pair_admissible(I.generators, p.root, p.free, None)
        assert pair_maximal(I.generators, p.root, p.free)
    bound = 6 if n <= 3 else (4 if n == 4 else 3)
    for e in itertools.product(range(bound + 1), repeat=n):
        assert brute_standard(I.generators, e) == covered(pairs, e)
        assert is_standard(I, e) == brute_standard(I.generators, e)
    assert pairs == sorted(pairs) and len(set(pairs)) == len(pairs)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 3).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(*[st.integers(0, 3)] * n), max_size=4))))
def test_pairs_equal_brute(ideal):
    n, gens = ideal
    I = minimalize(gens, n)
    assert [(p.root, p.free) for p in standard_pairs(I)] == brute_pairs(n, list(I.generators))


def test_pairs_deterministic():
    gens = [(2, 1, 0, 3), (0, 2, 2, 1), (1, 1, 1, 1), (3, 0, 0, 0)]
    a = standard_pairs(minimalize(gens, 4))
    b = standard_pairs(minimalize(list(reversed(gens)), 4))
    assert a == b
