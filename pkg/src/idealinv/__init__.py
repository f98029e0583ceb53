"""Exact complexity invariants of monomial ideal sheaves on projective
space, plus nef-boundary computations on surface intersection lattices.

Everything is computed with exact integer and rational arithmetic:
canonical monomial-ideal algebra, multigraded Betti numbers and
Castelnuovo-Mumford regularity, Newton polyhedra with their facet (Rees)
valuations and integral closures, standard pairs and arithmetic-degree
profiles, nilpotency indices with effective Nullstellensatz checks, and
certified two-sided brackets for the s-invariant.
"""

from .betti import (BettiTable, LcmLattice, RegularityReport, betti_numbers,
                    generation_degree, lcm_lattice, regularity)
from .core import (DomainError, MonomialIdeal, ResourceCapError, Ring,
                   RingMismatchError, minimalize)
from .decomp import (AdegProfile, CoordinatePrime, NilpotencyReport,
                     StandardPair, StandardPairDecomposition, adeg_profile,
                     associated_primes, irreducible_decomposition,
                     nilpotency_index, power_inclusion_holds, standard_pairs)
from .fileio import (CacheIntegrityError, IdealDocument, ParseError,
                     format_ideal_document, ideal_hash, parse_ideal_document,
                     parse_lattice_document, read_power_cache,
                     write_power_cache)
from .newton import (BezoutReport, Facet, NewtonPolyhedron, ReesValuation,
                     bezout_check, closure_contains, integral_closure,
                     newton_polyhedron, r_coefficient, rees_valuations)
from .sbracket import (CurveWitness, PowerEntry, PowerSequence, PropertyReport,
                       SBracket, curve_lower_bound, d_sequence,
                       property_checks, s_bracket)
from .surface import (DivisorClass, NSLattice, QuadraticIrrational,
                      RescaleReport, SInvariantResult, is_nef, rescale_check,
                      s_invariant_divisorial)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
