"""Exact monomial-ideal arithmetic over a fixed polynomial ring.

A monomial is an exponent tuple; an ideal stores the unique minimal
monomial generating set, so ideal equality and hashing are exact.  All
values are immutable and every operation is a pure function returning
canonical form.  The grading is by total degree (hyperplane class on
projective space).
"""

from __future__ import annotations

from dataclasses import dataclass


class DomainError(ValueError):
    """Input lies outside an operation's mathematical domain."""


class RingMismatchError(ValueError):
    """Operands from different rings, or exponent vectors of wrong arity."""


class ResourceCapError(RuntimeError):
    """A configurable size cap would be exceeded."""

    def __init__(self, message, cap=None):
        super().__init__(message)
        self.cap = cap


def mono_degree(exps):
    return sum(exps)


def mono_divides(a, b):
    """True when the monomial with exponents a divides the one with b."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_colon(a, m):
    """Exponents of the least u with u*m divisible by the monomial a."""
    return tuple(max(x - y, 0) for x, y in zip(a, m))


def _key(exps):
    return (sum(exps), exps)


def minimalize(gens):
    """Unique minimal basis of the ideal generated by ``gens``.

    Idempotent and independent of input order; result sorted by
    (total degree, exponents).
    """
    out = []
    for e in sorted(set(gens), key=_key):
        if not any(mono_divides(kept, e) for kept in out):
            out.append(e)
    return tuple(out)


@dataclass(frozen=True)
class Ring:
    """Polynomial ring over a field of characteristic zero, given by its
    ordered variable names.  With n+1 variables it is the coordinate ring
    of P^n."""

    variables: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(self.variables) < 1:
            raise DomainError("a ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise DomainError("variable names must be distinct")
        for name in self.variables:
            if not isinstance(name, str) or not name:
                raise DomainError("variable names must be nonempty strings")

    @property
    def nvars(self):
        return len(self.variables)

    @property
    def projective_dimension(self):
        """n for the projective space P^n this ring coordinatizes."""
        return len(self.variables) - 1

    def one(self):
        return (0,) * len(self.variables)

    def variable_exponents(self, j):
        e = [0] * len(self.variables)
        e[j] = 1
        return tuple(e)

    def check_exponents(self, exps):
        exps = tuple(exps)
        if len(exps) != len(self.variables):
            raise RingMismatchError(
                f"exponent vector of length {len(exps)} in a ring with "
                f"{len(self.variables)} variables")
        if any(not isinstance(x, int) or x < 0 for x in exps):
            raise DomainError(f"exponents must be nonnegative integers: {exps!r}")
        return exps

    def format_monomial(self, exps):
        parts = []
        for name, e in zip(self.variables, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def parse_monomial(self, text):
        """Parse ``x^2*y`` style text into an exponent tuple."""
        index = {name: j for j, name in enumerate(self.variables)}
        exps = [0] * len(self.variables)
        text = text.strip()
        if text == "1":
            return tuple(exps)
        for factor in text.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError("empty factor in monomial")
            name, sep, power = factor.partition("^")
            name = name.strip()
            if name not in index:
                raise ValueError(f"unknown variable {name!r}")
            if sep:
                power = power.strip()
                if not power.isdigit() or int(power) < 1:
                    raise ValueError(f"malformed exponent in {factor!r}")
                exps[index[name]] += int(power)
            else:
                exps[index[name]] += 1
        return tuple(exps)

    def monomials_of_degree(self, d):
        """All exponent tuples of total degree d (first coordinate largest
        first, so the order is deterministic)."""
        if d < 0:
            raise DomainError("degree must be nonnegative")

        def rec(remaining, k):
            if k == 1:
                yield (remaining,)
                return
            for i in range(remaining, -1, -1):
                for rest in rec(remaining - i, k - 1):
                    yield (i,) + rest

        yield from rec(d, self.nvars)


class MonomialIdeal:
    """A monomial ideal held as its unique minimal generating set.

    The empty generator set is the zero ideal; the set {1} is the unit
    ideal.  Instances are immutable by convention and hash on (ring, gens).
    """

    __slots__ = ("ring", "gens")

    def __init__(self, ring, gens=(), *, _canonical=False):
        if not isinstance(ring, Ring):
            raise RingMismatchError("first argument must be a Ring")
        self.ring = ring
        if _canonical:
            self.gens = tuple(gens)
        else:
            self.gens = minimalize(ring.check_exponents(g) for g in gens)

    @classmethod
    def from_strings(cls, ring, texts):
        return cls(ring, (ring.parse_monomial(t) for t in texts))

    @classmethod
    def zero(cls, ring):
        return cls(ring, ())

    @classmethod
    def unit(cls, ring):
        return cls(ring, (ring.one(),))

    # -- basic structure -------------------------------------------------

    @property
    def is_zero(self):
        return not self.gens

    @property
    def is_unit(self):
        return len(self.gens) == 1 and sum(self.gens[0]) == 0

    @property
    def max_gen_degree(self):
        return max((sum(g) for g in self.gens), default=0)

    def gens_strings(self):
        return [self.ring.format_monomial(g) for g in self.gens]

    def canonical_text(self):
        head = "ring " + " ".join(self.ring.variables)
        body = ",".join(self.gens_strings()) if self.gens else "0"
        return head + "; " + body

    def _same_ring(self, other):
        if not isinstance(other, MonomialIdeal) or other.ring != self.ring:
            raise RingMismatchError("operands live in different rings")
        return other

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal)
                and self.ring == other.ring and self.gens == other.gens)

    def __hash__(self):
        return hash((self.ring, self.gens))

    def __repr__(self):
        body = ", ".join(self.gens_strings()) if self.gens else "0"
        return f"MonomialIdeal({body}; ring {','.join(self.ring.variables)})"

    # -- membership ------------------------------------------------------

    def contains(self, exps):
        exps = self.ring.check_exponents(exps)
        return any(mono_divides(g, exps) for g in self.gens)

    def contains_ideal(self, other):
        self._same_ring(other)
        return all(self.contains(g) for g in other.gens)

    def saturation_contains(self, exps):
        """Membership of a monomial in the saturation with respect to the
        irrelevant ideal, tested without computing the saturation.

        u lies in the saturation iff for every variable x_k some generator
        divides u after the k-th exponents of both are discarded.
        """
        exps = self.ring.check_exponents(exps)
        if self.is_zero:
            return False
        n = self.ring.nvars
        for k in range(n):
            if not any(all(g[j] <= exps[j] for j in range(n) if j != k)
                       for g in self.gens):
                return False
        return True

    # -- algebra ---------------------------------------------------------

    def __add__(self, other):
        self._same_ring(other)
        return MonomialIdeal(self.ring,
                             minimalize(self.gens + other.gens),
                             _canonical=True)

    def __mul__(self, other):
        self._same_ring(other)
        prods = (mono_mul(a, b) for a in self.gens for b in other.gens)
        return MonomialIdeal(self.ring, minimalize(prods), _canonical=True)

    def power(self, p):
        """p-th power by repeated squaring, minimalizing at each step."""
        if not isinstance(p, int) or p < 1:
            raise DomainError("power expects an integer p >= 1")
        if self.is_zero or self.is_unit:
            return self
        result = None
        base = self
        while p:
            if p & 1:
                result = base if result is None else result * base
            p >>= 1
            if p:
                base = base * base
        return result

    __pow__ = power

    def colon(self, m):
        """(I : m) for a monomial m, by generatorwise division."""
        m = self.ring.check_exponents(m)
        return MonomialIdeal(self.ring,
                             minimalize(mono_colon(g, m) for g in self.gens),
                             _canonical=True)

    def intersect(self, other):
        self._same_ring(other)
        gens = (mono_lcm(a, b) for a in self.gens for b in other.gens)
        return MonomialIdeal(self.ring, minimalize(gens), _canonical=True)

    def variable_saturation(self, j):
        """(I : x_j^infinity): discard the j-th exponent of every generator."""
        gens = (g[:j] + (0,) + g[j + 1:] for g in self.gens)
        return MonomialIdeal(self.ring, minimalize(gens), _canonical=True)

    def saturation_by(self, prime):
        """(I : P^infinity) for P generated by a subset of the variables.

        Equals the intersection of the single-variable saturations over the
        variables of P: a monomial u multiplied by every high power of P
        lands in I exactly when u * x_k^N lands in I for each variable
        x_k of P separately.
        """
        prime = self._same_ring(prime)
        if prime.is_zero:
            raise DomainError("saturation by the zero ideal is undefined")
        variables = []
        for g in prime.gens:
            support = [j for j, e in enumerate(g) if e > 0]
            if len(support) != 1 or g[support[0]] != 1:
                raise DomainError(
                    "saturationBy expects an ideal generated by variables")
            variables.append(support[0])
        result = None
        for j in variables:
            piece = self.variable_saturation(j)
            result = piece if result is None else result.intersect(piece)
        return result

    def saturate(self):
        """Saturation with respect to the irrelevant ideal (all variables)."""
        if self.is_zero:
            return self
        result = None
        for j in range(self.ring.nvars):
            piece = self.variable_saturation(j)
            result = piece if result is None else result.intersect(piece)
        return result

    def radical(self):
        gens = (tuple(1 if e > 0 else 0 for e in g) for g in self.gens)
        return MonomialIdeal(self.ring, minimalize(gens), _canonical=True)

    def graded_piece(self, d):
        """All monomials of total degree d lying in the ideal."""
        if d < 0:
            raise DomainError("degree must be nonnegative")
        return tuple(e for e in self.ring.monomials_of_degree(d)
                     if self.contains(e))
