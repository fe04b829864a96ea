"""Standard pairs of monomial ideals.

Monomials are exponent tuples.  A pair ``(root, free)`` stands for every
monomial ``root * x^a`` with the support of ``a`` inside ``free``.

The decomposition splits on one variable ``x_i`` at a time.  If ``D`` is the
largest power of ``x_i`` among the generators, the standard monomials of
x_i-degree ``e < D`` come from the colon ideal at that degree, and those of
degree at least ``D`` from the ideal with ``x_i`` set to 1, where ``x_i``
then becomes free.  A pair of the first kind survives only if its family
still meets the ideal once ``x_i`` is set to 1; otherwise a pair of the
second kind contains it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DimensionError


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialIdeal:
    num_vars: int
    generators: tuple  # minimal, sorted
    labels: tuple | None = None  # original column index of each variable

    def __post_init__(self):
        for g in self.generators:
            if len(g) != self.num_vars:
                raise DimensionError(f"generator {g} has {len(g)} exponents, ideal has {self.num_vars} variables")
            if any(e < 0 for e in g):
                raise ValueError(f"negative exponent in {g}")

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def contains(self, e) -> bool:
        return not is_standard(self, e)


@dataclass(frozen=True, order=True)
class StandardPair:
    root: tuple
    free: tuple  # sorted variable indices

    def covers(self, e) -> bool:
        return all(
            x == r if i not in self.free else x >= r
            for i, (x, r) in enumerate(zip(e, self.root))
        )


def minimalize(generators, num_vars=None) -> MonomialIdeal:
    """Keep the divisibility-minimal generators, sorted."""
    gens = sorted({tuple(g) for g in generators}, key=lambda g: (sum(g), g))
    keep = []
    for g in gens:
        if not any(_divides(h, g) for h in keep):
            keep.append(g)
    if num_vars is None:
        if not keep:
            raise ValueError("num_vars is required for the zero ideal")
        num_vars = len(keep[0])
    return MonomialIdeal(num_vars, tuple(sorted(keep)))


def is_standard(I: MonomialIdeal, e) -> bool:
    e = tuple(e)
    if len(e) != I.num_vars:
        raise DimensionError(f"exponent has length {len(e)}, ideal has {I.num_vars} variables")
    return not any(_divides(g, e) for g in I.generators)


def _family_standard(gens, u, S) -> bool:
    """Is every monomial ``u * x^a`` with ``supp(a)`` in ``S`` standard?"""
    for g in gens:
        if all(gj <= uj for j, (gj, uj) in enumerate(zip(g, u)) if j not in S):
            return False
    return True


def _minimal_gens(gens):
    gens = sorted(set(gens), key=sum)
    keep = []
    for g in gens:
        if not any(_divides(h, g) for h in keep):
            keep.append(g)
    return frozenset(keep)


@lru_cache(maxsize=1 << 17)
def _pairs(gens: frozenset, variables: frozenset, n: int):
    # gens only involve ``variables``; all other coordinates are 0
    zero = (0,) * n
    if not gens:
        return ((zero, variables),)
    if zero in gens:
        return ()
    used = frozenset(i for g in gens for i in variables if g[i])
    loose = variables - used
    if loose:
        return tuple((u, S | loose) for u, S in _pairs(gens, used, n))
    i = max(used, key=lambda k: (sum(1 for g in gens if g[k]), -k))
    top = max(g[i] for g in gens)
    rest = variables - {i}

    def drop(g):
        return g[:i] + (0,) + g[i + 1 :]

    full = _minimal_gens(drop(g) for g in gens)
    out = [(u, S | {i}) for u, S in _pairs(full, rest, n)]
    # a pair with x_i fixed at degree e is maximal unless its whole family is
    # standard once x_i is inverted, in which case an x_i-free pair covers it
    for e in range(top):
        sub = _minimal_gens(drop(g) for g in gens if g[i] <= e)
        for u, S in _pairs(sub, rest, n):
            if not _family_standard(full, u, S):
                out.append((u[:i] + (e,) + u[i + 1 :], S))
    return tuple(out)


def standard_pairs(I: MonomialIdeal) -> list:
    """The standard pairs of ``I``, sorted by root then free set."""
    n = I.num_vars
    raw = _pairs(frozenset(I.generators), frozenset(range(n)), n)
    return sorted(StandardPair(u, tuple(sorted(S))) for u, S in raw)


def covered(pairs, e) -> bool:
    return any(p.covers(e) for p in pairs)
