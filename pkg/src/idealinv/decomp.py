"""Associated primes, irreducible decomposition, standard pairs,
arithmetic-degree profiles, and nilpotency indices of monomial ideals.

Decomposition splits on a generator of mixed support, using
I + (uv) = (I + (u)) cap (I + (v)) for coprime monomials u, v, with
memoization on canonical form.  Standard pairs (a, u) are enumerated over
the bounding box of the generator exponents; a pair is maximal exactly
when no single extra variable can be freed after zeroing its exponent in
the root, so maximality is a local test.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .core import (DomainError, MonomialIdeal, ResourceCapError, minimalize,
                   mono_mul)
from .newton import r_coefficient

NILPOTENCY_CAP = 64


@dataclass(frozen=True, order=True)
class CoordinatePrime:
    """Prime generated by a set of variables; codimension is its size."""

    variables: frozenset = field(compare=False)
    sorted_variables: tuple = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "sorted_variables",
                           tuple(sorted(self.variables)))

    @property
    def codimension(self):
        return len(self.variables)


def irreducible_decomposition(ideal):
    """Irredundant decomposition into monomial ideals generated by pure
    variable powers."""
    if ideal.is_zero or ideal.is_unit:
        raise DomainError("decomposition needs a nonzero proper ideal")
    ring = ideal.ring
    memo = {}

    def decompose(gens):
        if gens in memo:
            return memo[gens]
        mixed = next((g for g in gens
                      if sum(1 for e in g if e > 0) > 1), None)
        if mixed is None:
            result = frozenset([gens])
        else:
            j = next(i for i, e in enumerate(mixed) if e > 0)
            pure = tuple(mixed[i] if i == j else 0 for i in range(len(mixed)))
            rest = tuple(0 if i == j else mixed[i] for i in range(len(mixed)))
            left = minimalize(gens + (pure,))
            right = minimalize(gens + (rest,))
            result = decompose(left) | decompose(right)
        memo[gens] = result
        return result

    components = [MonomialIdeal(ring, gens, _canonical=True)
                  for gens in decompose(ideal.gens)]
    components.sort(key=lambda c: (len(c.gens), c.gens))
    # drop components containing the intersection of the others
    changed = True
    while changed:
        changed = False
        for k, c in enumerate(components):
            rest = components[:k] + components[k + 1:]
            if not rest:
                break
            acc = rest[0]
            for other in rest[1:]:
                acc = acc.intersect(other)
            if c.contains_ideal(acc):
                components.pop(k)
                changed = True
                break
    return components


def associated_primes(ideal):
    """Supports of the irredundant irreducible components, deduplicated."""
    supports = set()
    for comp in irreducible_decomposition(ideal):
        supports.add(frozenset(j for g in comp.gens
                               for j, e in enumerate(g) if e > 0))
    out = [CoordinatePrime(s) for s in supports]
    out.sort(key=lambda p: (p.codimension, p.sorted_variables))
    return out


@dataclass(frozen=True)
class StandardPair:
    """Root monomial a and free variable set u with supp(a) disjoint from
    u, the cell a*k[u] avoiding the ideal, and the cell maximal."""

    root: tuple
    free: frozenset

    def covers(self, exps):
        return all(exps[j] == self.root[j]
                   for j in range(len(exps)) if j not in self.free)


@dataclass(frozen=True, eq=False)
class StandardPairDecomposition:
    ideal: MonomialIdeal
    pairs: tuple
    by_size: dict = field(repr=False)


def standard_pairs(ideal, verify=False):
    """All standard pairs of a nonzero proper monomial ideal.

    Roots are searched inside the bounding box of the generator exponents:
    a root exponent at or above the box in a non-free coordinate would let
    that coordinate be freed, contradicting maximality.
    """
    if ideal.is_zero or ideal.is_unit:
        raise DomainError("standard pairs need a nonzero proper ideal")
    ring = ideal.ring
    m = ring.nvars
    supports = [frozenset(j for j, e in enumerate(g) if e > 0)
                for g in ideal.gens]
    box = [max(g[j] for g in ideal.gens) for j in range(m)]

    localized = {}
    for mask in range(1 << m):
        u = frozenset(j for j in range(m) if mask >> j & 1)
        if any(s <= u for s in supports):
            localized[u] = None  # some generator becomes a unit
        else:
            gens = (tuple(0 if j in u else g[j] for j in range(m))
                    for g in ideal.gens)
            localized[u] = MonomialIdeal(ring, minimalize(gens),
                                         _canonical=True)

    pairs = []
    for u, loc in localized.items():
        if loc is None:
            continue
        outside = [j for j in range(m) if j not in u]
        root = [0] * m

        def rec(pos):
            if pos == len(outside):
                e = tuple(root)
                if loc.contains(e):
                    return
                for j in outside:
                    u2 = u | {j}
                    loc2 = localized[u2]
                    if loc2 is None:
                        continue
                    e2 = tuple(0 if i == j else e[i] for i in range(m))
                    if not loc2.contains(e2):
                        return  # extendable, not maximal
                pairs.append(StandardPair(e, u))
                return
            j = outside[pos]
            for x in range(box[j] + 1):
                root[j] = x
                rec(pos + 1)
            root[j] = 0

        rec(0)

    pairs.sort(key=lambda p: (-len(p.free), sorted(p.free), p.root))
    by_size = dict(Counter(len(p.free) for p in pairs))
    decomposition = StandardPairDecomposition(ideal, tuple(pairs), by_size)
    if verify:
        _verify_cover(decomposition)
    return decomposition


def _verify_cover(decomposition):
    """Every monomial up to twice the top generator degree is standard iff
    some pair's cell covers it."""
    ideal = decomposition.ideal
    through = 2 * ideal.max_gen_degree
    for d in range(through + 1):
        for e in ideal.ring.monomials_of_degree(d):
            covered = any(p.covers(e) for p in decomposition.pairs)
            if covered == ideal.contains(e):
                raise AssertionError(
                    f"standard-pair cover failed at {e}: "
                    f"covered={covered}, member={ideal.contains(e)}")


@dataclass(frozen=True, eq=False)
class AdegProfile:
    """Arithmetic degrees adeg^k = number of standard pairs of the
    saturation whose free set has size (n+1) - k on P^n."""

    by_codim: dict
    computed_on: MonomialIdeal

    def total(self):
        return sum(self.by_codim.values())

    def adeg(self, k):
        return self.by_codim.get(k, 0)


def adeg_profile(ideal):
    if ideal.is_zero:
        raise DomainError("arithmetic degree needs a nonzero proper sheaf")
    sat = ideal.saturate()
    if sat.is_unit:
        raise DomainError("arithmetic degree needs a nonzero proper sheaf")
    decomposition = standard_pairs(sat)
    m = ideal.ring.nvars
    if any(not p.free for p in decomposition.pairs):
        raise RuntimeError(
            "internal inconsistency: a standard pair with empty free set "
            "survived saturation")
    by_codim = dict(Counter(m - len(p.free) for p in decomposition.pairs))
    return AdegProfile(by_codim, sat)


def power_inclusion_holds(base, t, member):
    """Whether every product of t generators of ``base`` (repetition
    allowed) satisfies the membership predicate.

    ``member`` must be closed under multiples; a branch is pruned as soon
    as the accumulated partial product is already a member, so the search
    only walks the staircase boundary.
    """
    if t < 1:
        raise DomainError("power inclusion needs t >= 1")
    gens = base.gens
    if not gens:
        return True
    g = len(gens)
    # (i, acc) -> least remaining budget proven safe; a completion with a
    # larger budget is a multiple of one with the recorded budget.
    proven = {}

    def rec(i, budget, acc):
        if member(acc):
            return True
        key = (i, acc)
        best = proven.get(key)
        if best is not None and budget >= best:
            return True
        if i == g - 1:
            final = tuple(a + budget * b for a, b in zip(acc, gens[i]))
            ok = member(final)
        else:
            ok = True
            for c in range(budget + 1):
                nxt = (tuple(a + c * b for a, b in zip(acc, gens[i]))
                       if c else acc)
                if not rec(i + 1, budget - c, nxt):
                    ok = False
                    break
        if ok:
            proven[key] = budget if best is None else min(best, budget)
        return ok

    return rec(0, t, base.ring.one())


@dataclass(frozen=True, eq=False)
class NilpotencyReport:
    """Least t with (radical)^t inside the saturation, plus verification of
    the effective Nullstellensatz inclusions for small powers.

    ``exponents`` holds r(J)*(n+p-1) and ``alternate_exponents`` the
    (n+1-p)*r(J) reading (None when nonpositive); both are verified at the
    sheaf level, i.e. against saturations.
    """

    index: int
    r_used: int
    projective_dimension: int
    exponents: dict
    inclusions_verified: dict
    alternate_exponents: dict
    alternate_verified: dict


def nilpotency_index(ideal, cap=NILPOTENCY_CAP, theorem_powers=(1, 2, 3)):
    if ideal.is_zero:
        raise DomainError("nilpotency index needs a nonzero proper sheaf")
    sat = ideal.saturate()
    if sat.is_unit:
        raise DomainError("nilpotency index needs a nonzero proper sheaf")
    radical = sat.radical()

    def holds(t):
        return power_inclusion_holds(radical, t, sat.contains)

    if not holds(cap):
        raise ResourceCapError(
            f"nilpotency index exceeds the search cap {cap}", cap=cap)
    lo, hi = 1, cap
    while lo < hi:
        mid = (lo + hi) // 2
        if holds(mid):
            hi = mid
        else:
            lo = mid + 1
    index = lo

    r = r_coefficient(sat)
    n = ideal.ring.projective_dimension
    exponents, verified = {}, {}
    alt_exponents, alt_verified = {}, {}
    for p in theorem_powers:
        t = r * (n + p - 1)
        power_p = sat.power(p)
        exponents[p] = t
        verified[p] = power_inclusion_holds(radical, t,
                                            power_p.saturation_contains)
        t_alt = (n + 1 - p) * r
        if t_alt >= 1:
            alt_exponents[p] = t_alt
            alt_verified[p] = power_inclusion_holds(
                radical, t_alt, power_p.saturation_contains)
        else:
            alt_exponents[p] = None
            alt_verified[p] = None
    return NilpotencyReport(index, r, n, exponents, verified,
                            alt_exponents, alt_verified)
