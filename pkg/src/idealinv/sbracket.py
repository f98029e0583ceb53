"""Certified two-sided brackets for the s-invariant of a monomial ideal
sheaf on projective space.

Upper bounds come from generation degrees of powers: d(I^p)/p bounds the
invariant from above for every p.  Lower bounds come from monomial curve
germs: a nonnegative weight vector w on an affine chart gives the curve
t -> (t^{w_1}, ..., t^{w_m}), whose colength/degree ratio
min_a(w.a) / max(w) never exceeds the invariant.  The bracket is reported
as exact rationals and never collapsed to a point estimate unless the two
sides agree exactly.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd

from .betti import DEFAULT_GENERATOR_CAP, generation_degree, regularity
from .core import DomainError, MonomialIdeal, ResourceCapError
from .newton import integral_closure, rees_valuations


@dataclass(frozen=True)
class PowerEntry:
    d: int
    reg: int
    computed_at: float


@dataclass(frozen=True, eq=False)
class PowerSequence:
    """Generation degrees and regularities of the powers I^p, p <= horizon."""

    ideal: MonomialIdeal
    entries: dict = field(repr=False)
    horizon: int

    def d(self, p):
        return self.entries[p].d

    def reg(self, p):
        return self.entries[p].reg


@dataclass(frozen=True)
class CurveWitness:
    """Best monomial-curve lower bound: chart variable set to one, weight
    vector (gcd one) on the remaining variables, and the colength/degree
    ratio it certifies."""

    chart: int
    weights: tuple
    valuation: int
    degree: int
    bound: Fraction


@dataclass(frozen=True)
class SBracket:
    """Certified enclosure lower <= s <= upper with its evidence."""

    lower: Fraction
    upper: Fraction
    lower_witness: CurveWitness
    upper_witness: tuple  # (p, d_p) attaining the upper bound
    converged: bool
    tolerance: Fraction


def d_sequence(ideal, pmax, cache_dir=None, generator_cap=DEFAULT_GENERATOR_CAP):
    """Compute (d_p, reg_p) for p = 1..pmax, reusing cached entries.

    Subadditivity d_{l+m} <= d_l + d_m and d_p <= reg_p are asserted on the
    result; a violation would be an implementation bug.
    """
    if not isinstance(pmax, int) or pmax < 1:
        raise DomainError("pmax must be a positive integer")
    if ideal.is_zero or ideal.is_unit:
        raise DomainError("the power sequence needs a nonzero proper ideal")
    entries = {}
    if cache_dir is not None:
        from .fileio import read_power_cache
        entries = read_power_cache(cache_dir, ideal)
    changed = False
    for p in range(1, pmax + 1):
        if p in entries:
            continue
        power = ideal.power(p)
        try:
            d = generation_degree(power)
            reg = regularity(power, generator_cap).module_regularity
        except ResourceCapError as exc:
            raise ResourceCapError(f"{exc} (while processing power p={p})",
                                   cap=exc.cap) from exc
        entries[p] = PowerEntry(d, reg, time.time())
        changed = True
    for p, entry in entries.items():
        if entry.d > entry.reg:
            raise AssertionError(f"d_{p} > reg_{p} for {ideal!r}")
    known = {p: e.d for p, e in entries.items()}
    for a in known:
        for b in known:
            if a + b in known and known[a + b] > known[a] + known[b]:
                raise AssertionError(
                    f"subadditivity failed: d_{a + b} > d_{a} + d_{b}")
    if cache_dir is not None and changed:
        from .fileio import write_power_cache
        entries = write_power_cache(cache_dir, ideal, entries)
    return PowerSequence(ideal, dict(entries), pmax)


def _chart_weights(ideal, chart, candidate_weights):
    m = ideal.ring.nvars
    k = m - 1
    cands = set()
    if candidate_weights is not None:
        for w in candidate_weights:
            w = tuple(int(x) for x in w)
            if len(w) != k or any(x < 0 for x in w) or not any(w):
                raise DomainError(
                    "candidate weights must be nonnegative, nonzero, and "
                    "one shorter than the variable count")
            cands.add(w)
        return cands
    try:
        normals = [v.normal for v in rees_valuations(ideal)]
    except DomainError:
        normals = []
    for v in normals:
        w = v[:chart] + v[chart + 1:]
        if any(w):
            cands.add(w)
    for w in product(range(4), repeat=k):
        if any(w):
            cands.add(w)
    return cands


def curve_lower_bound(ideal, candidate_weights=None):
    """Best monomial-curve lower bound over all charts and candidate
    weights (facet normals restricted to the chart, plus all small integer
    vectors).  A zero bound signals a degenerate (unit-sheaf) input."""
    if ideal.is_zero or ideal.is_unit:
        raise DomainError("the curve bound needs a nonzero proper ideal")
    m = ideal.ring.nvars
    best = None
    for chart in range(m):
        local = [g[:chart] + g[chart + 1:] for g in ideal.gens]
        for w in sorted(_chart_weights(ideal, chart, candidate_weights)):
            g = 0
            for x in w:
                g = gcd(g, x)
            w = tuple(x // g for x in w)
            degree = max(w)
            valuation = min(sum(a * b for a, b in zip(w, e)) for e in local)
            bound = Fraction(valuation, degree)
            witness = CurveWitness(chart, w, valuation, degree, bound)
            if best is None or bound > best.bound:
                best = witness
    return best


def s_bracket(ideal, pmax, tolerance=Fraction(1, 10), cache_dir=None,
              generator_cap=DEFAULT_GENERATOR_CAP):
    """Certified bracket from the power sequence and the curve bound."""
    tolerance = Fraction(tolerance)
    if tolerance <= 0:
        raise DomainError("tolerance must be positive")
    seq = d_sequence(ideal, pmax, cache_dir, generator_cap)
    upper = None
    upper_witness = None
    for p in sorted(seq.entries):
        if p > pmax:
            continue
        value = Fraction(seq.d(p), p)
        if upper is None or value < upper:
            upper = value
            upper_witness = (p, seq.d(p))
    witness = curve_lower_bound(ideal)
    lower = witness.bound
    if not 0 < lower <= upper:
        raise AssertionError(
            f"inconsistent bracket [{lower}, {upper}] for {ideal!r}")
    return SBracket(lower, upper, witness, upper_witness,
                    converged=(upper - lower) <= tolerance,
                    tolerance=tolerance)


@dataclass(frozen=True, eq=False)
class PropertyReport:
    """Bracket-level consequences of the product/sum/closure behavior of
    the s-invariant, with all the numbers used."""

    bracket_1: SBracket
    bracket_2: SBracket
    product_bracket: SBracket | None
    sum_bracket: SBracket | None
    closure_bracket_1: SBracket
    closure_bracket_2: SBracket
    product_ok: bool | None
    sum_ok: bool | None
    closure_overlap_1: bool
    closure_overlap_2: bool


def _overlaps(a, b):
    return max(a.lower, b.lower) <= min(a.upper, b.upper)


def property_checks(ideal_1, ideal_2, pmax, tolerance=Fraction(1, 10),
                    cache_dir=None, generator_cap=DEFAULT_GENERATOR_CAP):
    """Check the bracket-level product, sum, and closure inequalities.

    Degenerate derived ideals (unit sheaves) make the corresponding check
    inapplicable and are reported as None.  A computable check that fails
    is raised, since each is a theorem.
    """
    ideal_1._same_ring(ideal_2)

    def bracket(j):
        return s_bracket(j, pmax, tolerance, cache_dir, generator_cap)

    def try_bracket(j):
        try:
            return bracket(j)
        except DomainError:
            return None

    b1, b2 = bracket(ideal_1), bracket(ideal_2)
    bp = try_bracket(ideal_1 * ideal_2)
    bs = try_bracket(ideal_1 + ideal_2)
    c1 = bracket(integral_closure(ideal_1))
    c2 = bracket(integral_closure(ideal_2))
    product_ok = None if bp is None else bp.lower <= b1.upper + b2.upper
    sum_ok = None if bs is None else bs.lower <= max(b1.upper, b2.upper)
    overlap_1 = _overlaps(b1, c1)
    overlap_2 = _overlaps(b2, c2)
    failures = []
    if product_ok is False:
        failures.append("product bound")
    if sum_ok is False:
        failures.append("sum bound")
    if not overlap_1 or not overlap_2:
        failures.append("closure overlap")
    if failures:
        raise AssertionError("property checks failed: " + ", ".join(failures))
    return PropertyReport(b1, b2, bp, bs, c1, c2,
                          product_ok, sum_ok, overlap_1, overlap_2)
