"""Unitary Cayley graphs of finite quotient rings.

Builds G_{R/I} for R/I a finite quotient of Z, F_p[x], or Z[i], evaluates
closed-form graph invariants from the prime-ideal factorization, and verifies
them against exact brute-force oracles.
"""

from .rings import (
    Family,
    PrimeFactor,
    QuotientRing,
    RingElement,
    RingSpec,
    build_quotient_ring,
    build_ring,
    parse_ring_spec,
)

__all__ = [
    "Family",
    "PrimeFactor",
    "QuotientRing",
    "RingElement",
    "RingSpec",
    "build_quotient_ring",
    "build_ring",
    "parse_ring_spec",
]

__version__ = "0.1.0"
