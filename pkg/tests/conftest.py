import random

import pytest

from idealinv import MonomialIdeal, Ring

SUITE_SEED = 20270314
SUITE_SIZE = 50

VARS = "xyzw"


def ring_of(n):
    return Ring(tuple(VARS[:n]))


def random_exponents(rng, nvars, degree):
    cuts = sorted(rng.randint(0, degree) for _ in range(nvars - 1))
    parts = []
    prev = 0
    for c in cuts + [degree]:
        parts.append(c - prev)
        prev = c
    return tuple(parts)


def random_ideal(rng, max_vars=4, max_deg=4, max_gens=5,
                 require_proper_sheaf=True):
    """Seeded random monomial ideal; degenerate sheaves (empty projective
    zero locus) are redrawn when a proper sheaf is required."""
    while True:
        m = rng.randint(2, max_vars)
        ring = ring_of(m)
        gens = [random_exponents(rng, m, rng.randint(1, max_deg))
                for _ in range(rng.randint(2, max_gens))]
        ideal = MonomialIdeal(ring, gens)
        if ideal.is_zero or ideal.is_unit:
            continue
        if require_proper_sheaf and ideal.saturate().is_unit:
            continue
        return ideal


def pathology_ideal(d):
    """x^2, x*y*z^d, y^2 on P^3: fixed curve bound, d embedded points."""
    ring = ring_of(4)
    return MonomialIdeal(ring, [(2, 0, 0, 0), (1, 1, d, 0), (0, 2, 0, 0)])


def bundled_examples():
    """The worked examples shipped with the package."""
    r3 = ring_of(3)
    out = [
        MonomialIdeal.from_strings(r3, ["x", "y"]),
        MonomialIdeal.from_strings(r3, ["x^2", "x*y", "y^2"]),
        MonomialIdeal.from_strings(r3, ["x^2", "y^2"]),
        MonomialIdeal.from_strings(r3, ["x^2", "x*y"]),
        MonomialIdeal.from_strings(r3, ["x*y", "x*z", "y*z"]),
    ]
    out.extend(pathology_ideal(d) for d in range(1, 7))
    return out


@pytest.fixture(scope="session")
def suite():
    rng = random.Random(SUITE_SEED)
    return [random_ideal(rng) for _ in range(SUITE_SIZE)]
