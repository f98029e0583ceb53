"""Newton polyhedra of monomial ideals: facet (Rees) valuations, integral
closure, and Bezout-type degree bounds.

The polyhedron NP(I) = conv(generator exponents) + nonnegative orthant is
an up-closed set, so its nontrivial facets v.x >= r (r > 0) correspond,
after scaling to v/r, to the vertices of the blocking polyhedron
Q = { w >= 0 : a.w >= 1 for every generator exponent a }.  Vertices of Q
are enumerated exactly as basic feasible solutions; a tight-face rank test
then keeps genuine facets only.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .core import DomainError, MonomialIdeal
from .linalg import rank_int, solve_unique


@dataclass(frozen=True)
class Facet:
    """Facet inequality normal.x >= offset with primitive nonnegative
    integer normal and positive offset."""

    normal: tuple
    offset: int


@dataclass(frozen=True, eq=False)
class NewtonPolyhedron:
    ideal: MonomialIdeal
    facets: tuple
    vertices: tuple

    def contains(self, exps):
        if any(x < 0 for x in exps):
            return False
        return all(_dot(f.normal, exps) >= f.offset for f in self.facets)


@dataclass(frozen=True)
class ReesValuation:
    """Monomial valuation attached to a facet of the Newton polyhedron.

    ``center`` is the set of variable indices with positive normal entry;
    the corresponding coordinate subspace has projective dimension
    ``center_dimension`` (-1 when the center is the irrelevant locus).
    """

    normal: tuple
    coefficient: int
    center: frozenset
    center_dimension: int

    def value(self, exps):
        return _dot(self.normal, exps)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _dual_vertices(gens, m):
    """Vertices of { w >= 0 : a.w >= 1 for all generators a }."""
    rows = [(tuple(a), 1) for a in gens]
    for j in range(m):
        e = [0] * m
        e[j] = 1
        rows.append((tuple(e), 0))
    seen = set()
    for combo in combinations(range(len(rows)), m):
        A = [rows[i][0] for i in combo]
        b = [rows[i][1] for i in combo]
        w = solve_unique(A, b)
        if w is None or any(x < 0 for x in w):
            continue
        if all(x == 0 for x in w):
            continue
        if any(_dot(a, w) < 1 for a in gens):
            continue
        seen.add(tuple(w))
    return seen


def _primitive(w):
    denom = 1
    for x in w:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    v = [int(x * denom) for x in w]
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v)


def _is_facet(normal, offset, gens, m):
    tight = [a for a in gens if _dot(normal, a) == offset]
    if not tight:
        return False
    base = tight[0]
    vecs = [tuple(x - y for x, y in zip(a, base)) for a in tight[1:]]
    for j in range(m):
        if normal[j] == 0:
            e = [0] * m
            e[j] = 1
            vecs.append(tuple(e))
    return rank_int(vecs) == m - 1


def newton_polyhedron(ideal):
    """Exact facet description of NP(I) for a nonzero monomial ideal."""
    if ideal.is_zero:
        raise DomainError("the zero ideal has no Newton polyhedron")
    m = ideal.ring.nvars
    if ideal.is_unit:
        return NewtonPolyhedron(ideal, (), (ideal.ring.one(),))
    gens = ideal.gens
    facets = {}
    for w in _dual_vertices(gens, m):
        v = _primitive(w)
        r = min(_dot(v, a) for a in gens)
        if r <= 0 or v in facets:
            continue
        if _is_facet(v, r, gens, m):
            facets[v] = r
    facet_list = tuple(Facet(v, facets[v]) for v in sorted(facets))
    vertices = []
    for a in gens:
        vecs = [f.normal for f in facet_list if _dot(f.normal, a) == f.offset]
        for j in range(m):
            if a[j] == 0:
                e = [0] * m
                e[j] = 1
                vecs.append(tuple(e))
        if rank_int(vecs) == m:
            vertices.append(a)
    np_ = NewtonPolyhedron(ideal, facet_list, tuple(vertices))
    for a in gens:
        if not np_.contains(a):
            raise AssertionError("hull unsound: generator outside its "
                                 "Newton polyhedron")
    return np_


def rees_valuations(ideal):
    """One valuation per nontrivial facet of the Newton polyhedron."""
    np_ = newton_polyhedron(ideal)
    m = ideal.ring.nvars
    out = []
    for f in np_.facets:
        center = frozenset(j for j, x in enumerate(f.normal) if x > 0)
        dim = (m - len(center)) - 1
        out.append(ReesValuation(f.normal, f.offset, center, dim))
    return out


def r_coefficient(ideal):
    """Largest facet coefficient r(I) = max r_i."""
    vals = rees_valuations(ideal)
    if not vals:
        raise DomainError("the unit ideal has no Rees valuations")
    return max(v.coefficient for v in vals)


def closure_contains(ideal, exps):
    """Integral-closure membership: the exponent vector lies in NP(I)."""
    exps = ideal.ring.check_exponents(exps)
    return newton_polyhedron(ideal).contains(exps)


def integral_closure(ideal):
    """Integral closure: minimal lattice points of the Newton polyhedron.

    Minimal generators of the closure lie in the componentwise bounding
    box of the generator exponents, because a lattice point exceeding the
    box in coordinate j stays in NP(I) after subtracting e_j.
    """
    if ideal.is_zero:
        raise DomainError("the zero ideal has no integral closure")
    if ideal.is_unit:
        return ideal
    np_ = newton_polyhedron(ideal)
    m = ideal.ring.nvars
    box = [max(g[j] for g in ideal.gens) for j in range(m)]
    points = []
    current = [0] * m

    def rec(j):
        if j == m:
            e = tuple(current)
            if np_.contains(e):
                points.append(e)
            return
        for x in range(box[j] + 1):
            current[j] = x
            rec(j + 1)
        current[j] = 0

    rec(0)
    return MonomialIdeal(ideal.ring, points)


@dataclass(frozen=True)
class BezoutReport:
    """Degree-bound check sum_i r_i s^{dim Z_i} <= s^n on P^n, with every
    center of degree one.  Valuations centered on the irrelevant locus are
    excluded from the sum and reported separately."""

    s_used: Fraction
    lhs: Fraction
    rhs: Fraction
    satisfied: bool
    excluded: tuple
    distinguished_r: int | None
    corollary_bound: Fraction
    corollary_satisfied: bool | None
    all_facets_r: int


def bezout_check(ideal, s):
    """Bezout-type report for a rational s > 0 against the valuation data."""
    s = Fraction(s)
    if s <= 0:
        raise DomainError("bezout check needs s > 0")
    if ideal.is_zero or ideal.is_unit:
        raise DomainError("bezout check needs a nonzero proper ideal")
    m = ideal.ring.nvars
    n = ideal.ring.projective_dimension
    vals = rees_valuations(ideal)
    proper = [v for v in vals if len(v.center) < m]
    excluded = tuple(v for v in vals if len(v.center) == m)
    lhs = sum((v.coefficient * s ** v.center_dimension for v in proper),
              Fraction(0))
    rhs = s ** n
    distinguished_r = max((v.coefficient for v in proper), default=None)
    bound = max(Fraction(1), s) ** n
    corollary_ok = None if distinguished_r is None else distinguished_r <= bound
    return BezoutReport(
        s_used=s,
        lhs=lhs,
        rhs=rhs,
        satisfied=lhs <= rhs,
        excluded=excluded,
        distinguished_r=distinguished_r,
        corollary_bound=bound,
        corollary_satisfied=corollary_ok,
        all_facets_r=max(v.coefficient for v in vals),
    )
