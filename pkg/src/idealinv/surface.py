"""Exact nef-boundary computations on a Neron-Severi lattice of an
abelian surface.

The lattice is a symmetric integer intersection form of signature
(1, rank-1) with a reference ample class h; a class is nef exactly when
its self-intersection and its pairing with h are both nonnegative (this
criterion is specific to abelian surfaces and is the declared modal
assumption of the module).  Boundary values along a ray sH - C solve a
rational quadratic, so they live in Q(sqrt(D)) and are represented
exactly as a + b*sqrt(D) with D squarefree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import DomainError, RingMismatchError
from .linalg import symmetric_signature


def _square_free_split(n):
    """n = s^2 * f with f squarefree; returns (s, f)."""
    s, f = 1, 1
    d = 2
    while d * d <= n:
        count = 0
        while n % d == 0:
            n //= d
            count += 1
        s *= d ** (count // 2)
        f *= d ** (count % 2)
        d += 1
    return s, f * n


def _sqrt_decompose(x):
    """sqrt(x) = c*sqrt(f) with c rational and f squarefree, for x >= 0."""
    x = Fraction(x)
    if x < 0:
        raise DomainError("square root of a negative rational")
    if x == 0:
        return Fraction(0), 0
    n = x.numerator * x.denominator
    s, f = _square_free_split(n)
    return Fraction(s, x.denominator), f


@dataclass(frozen=True)
class QuadraticIrrational:
    """Exact value a + b*sqrt(d) with rational a, b and squarefree d.

    Rational values normalize to d = 0, b = 0, so equality of values is
    equality of fields.  Mixed-radicand arithmetic is rejected.
    """

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 0

    def __post_init__(self):
        a, b, d = Fraction(self.a), Fraction(self.b), int(self.d)
        if d < 0:
            raise DomainError("negative radicand")
        if d == 1:
            a, b, d = a + b, Fraction(0), 0
        elif d == 0 or b == 0:
            b, d = Fraction(0), 0
        else:
            s, f = _square_free_split(d)
            if f == 1:
                a, b, d = a + b * s, Fraction(0), 0
            else:
                b, d = b * s, f
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    # -- structure -------------------------------------------------------

    @property
    def is_rational(self):
        return self.b == 0

    def rational_value(self):
        if not self.is_rational:
            raise DomainError(f"{self} is irrational")
        return self.a

    def __float__(self):
        return float(self.a) + float(self.b) * self.d ** 0.5

    def __repr__(self):
        if self.is_rational:
            return f"{self.a}"
        return f"{self.a} + {self.b}*sqrt({self.d})"

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(value):
        if isinstance(value, QuadraticIrrational):
            return value
        return QuadraticIrrational(Fraction(value))

    def _align(self, other):
        other = self._coerce(other)
        if self.d and other.d and self.d != other.d:
            raise DomainError("mixed radicands are not supported")
        return other, (self.d or other.d)

    def __add__(self, other):
        other, d = self._align(other)
        return QuadraticIrrational(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticIrrational(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other, d = self._align(other)
        return QuadraticIrrational(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if not other.is_rational:
            if other.a == 0:
                return self * QuadraticIrrational(
                    Fraction(0), 1 / (other.b * other.d), other.d)
            raise DomainError("division by a general quadratic irrational "
                              "is not supported")
        if other.a == 0:
            raise ZeroDivisionError
        return QuadraticIrrational(self.a / other.a, self.b / other.a, self.d)

    # -- ordering --------------------------------------------------------

    def sign(self):
        if self.b == 0:
            return (self.a > 0) - (self.a < 0)
        if self.a == 0:
            return 1 if self.b > 0 else -1
        if self.a > 0 and self.b > 0:
            return 1
        if self.a < 0 and self.b < 0:
            return -1
        # opposite signs: compare a^2 with b^2 d; equality would force
        # sqrt(d) rational, excluded by normalization
        lhs, rhs = self.a * self.a, self.b * self.b * self.d
        if self.a > 0:
            return 1 if lhs > rhs else -1
        return -1 if lhs > rhs else 1

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0


@dataclass(frozen=True)
class DivisorClass:
    """Rational coordinate vector in the lattice basis."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords",
                           tuple(Fraction(x) for x in self.coords))

    def __add__(self, other):
        if len(self.coords) != len(other.coords):
            raise RingMismatchError("divisor classes of different ranks")
        return DivisorClass(tuple(a + b
                                  for a, b in zip(self.coords, other.coords)))

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return DivisorClass(tuple(scalar * a for a in self.coords))

    def __neg__(self):
        return (-1) * self


@dataclass(frozen=True, eq=False)
class NSLattice:
    """Symmetric integer intersection form of hyperbolic signature
    (1, rank-1) with a reference class of positive self-intersection."""

    gram: tuple
    ample: tuple

    def __post_init__(self):
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "ample",
                           tuple(Fraction(x) for x in self.ample))
        rank = len(gram)
        if any(len(row) != rank for row in gram):
            raise DomainError("gram matrix must be square")
        if len(self.ample) != rank:
            raise RingMismatchError("reference class has the wrong rank")
        pos, neg, zero = symmetric_signature(gram)
        if (pos, neg, zero) != (1, rank - 1, 0):
            raise DomainError(
                f"intersection form must have signature (1, {rank - 1}); "
                f"got ({pos}, {neg}) with {zero} radical directions")
        if self.pairing(self.ample, self.ample) <= 0:
            raise DomainError("reference class must have positive square")

    @property
    def rank(self):
        return len(self.gram)

    def _coords(self, cls):
        coords = cls.coords if isinstance(cls, DivisorClass) else tuple(cls)
        if len(coords) != self.rank:
            raise RingMismatchError("divisor class has the wrong rank")
        return tuple(Fraction(x) for x in coords)

    def pairing(self, x, y):
        x, y = self._coords(x), self._coords(y)
        return sum(x[i] * self.gram[i][j] * y[j]
                   for i in range(self.rank) for j in range(self.rank))


def is_nef(lattice, alpha):
    """Abelian-surface nef test: alpha^2 >= 0 and alpha.h >= 0, exactly."""
    alpha = lattice._coords(alpha)
    return (lattice.pairing(alpha, alpha) >= 0
            and lattice.pairing(alpha, lattice.ample) >= 0)


@dataclass(frozen=True)
class SInvariantResult:
    """Least s >= 0 with sH - C nef, as an exact quadratic irrational."""

    value: QuadraticIrrational
    irrational: bool
    nef_for_all_nonneg: bool
    quadratic: tuple  # (H.H, -2*H.C, C.C): coefficients of (sH - C)^2
    discriminant: Fraction  # (H.C)^2 - (H.H)(C.C)


def _nef_along_ray(lattice, hh, hc, cc, hample, cample, s):
    s = QuadraticIrrational._coerce(s)
    square = s * s * hh - s * (2 * hc) + cc
    linear = s * hample - cample
    return square.sign() >= 0 and linear.sign() >= 0


def s_invariant_divisorial(lattice, big_h, curve_c, probe=Fraction(1, 10 ** 6)):
    """Exact boundary value inf{ s >= 0 : sH - C nef } on the lattice.

    H must be ample in the lattice sense (H^2 > 0 and H.h > 0).  The value
    is max of the larger root of (sH - C)^2 = 0 and the rational solution
    of (sH - C).h = 0, verified nef at the value and non-nef just below it.
    """
    hh = lattice.pairing(big_h, big_h)
    hample = lattice.pairing(big_h, lattice.ample)
    if hh <= 0 or hample <= 0:
        raise DomainError("H must be ample: H^2 > 0 and H.h > 0")
    hc = lattice.pairing(big_h, curve_c)
    cc = lattice.pairing(curve_c, curve_c)
    cample = lattice.pairing(curve_c, lattice.ample)
    disc = hc * hc - hh * cc
    if disc < 0:
        raise AssertionError(
            "negative discriminant contradicts the hyperbolic signature")
    coef, radicand = _sqrt_decompose(disc)
    root_plus = QuadraticIrrational(Fraction(hc, hh), coef / hh, radicand)
    linear_bound = QuadraticIrrational(Fraction(cample, hample))
    value = root_plus if (root_plus - linear_bound).sign() >= 0 else linear_bound
    nef_everywhere = value.sign() <= 0
    if nef_everywhere:
        value = QuadraticIrrational(Fraction(0))
    if not _nef_along_ray(lattice, hh, hc, cc, hample, cample, value):
        raise AssertionError("boundary value failed its own nef test")
    if not nef_everywhere:
        below = value - Fraction(probe)
        if below.sign() >= 0 and _nef_along_ray(lattice, hh, hc, cc,
                                                hample, cample, below):
            raise AssertionError("value is not minimal: nef below it")
    return SInvariantResult(
        value=value,
        irrational=not value.is_rational,
        nef_for_all_nonneg=nef_everywhere,
        quadratic=(hh, -2 * hc, cc),
        discriminant=Fraction(disc),
    )


@dataclass(frozen=True)
class RescaleReport:
    """Exact check of s(aH, C + bH) = (s(H, C) + b)/a."""

    base_value: QuadraticIrrational
    rescaled_value: QuadraticIrrational
    expected: QuadraticIrrational
    ok: bool


def rescale_check(lattice, big_h, curve_c, a, b):
    if not isinstance(a, int) or a < 1 or not isinstance(b, int) or b < 0:
        raise DomainError("rescaling needs integers a >= 1 and b >= 0")
    base = s_invariant_divisorial(lattice, big_h, curve_c).value
    big_h = DivisorClass(lattice._coords(big_h))
    curve_c = DivisorClass(lattice._coords(curve_c))
    rescaled = s_invariant_divisorial(lattice, a * big_h,
                                      curve_c + b * big_h).value
    expected = (base + b) / a
    return RescaleReport(base, rescaled, expected, rescaled == expected)
