"""Schemmel totients on the integers and their two extensions to quotient rings.

The two extensions agree with the classic S_r on Z/n but diverge from each
other on residue fields larger than their characteristic, so they are kept as
separate operations:

* consecutive_unit_count: counts residues a such that a, a+1, ..., a+r-1 are
  all units (the enumeration definition, with a matching product formula).
* clique_extension_count: the product-rule extension whose value at r is the
  number of vertices adjacent to all members of an r-clique of the unitary
  Cayley graph.
"""

from math import gcd

from .errors import Unsupported
from .rings import QuotientRing, factor_int, is_prime

ENUMERATION_R_CAP = 16


def schemmel(r: int, n: int) -> int:
    """Classic Schemmel totient S_r(n); S_0(n) = n and S_1 is Euler's phi."""
    assert r >= 0 and n >= 1
    if r == 0:
        return n
    out = 1
    for p, a in factor_int(n):
        if p <= r:
            return 0
        out *= p ** (a - 1) * (p - r)
    return out


def schemmel_by_scan(r: int, n: int) -> int:
    """S_r(n) straight from the definition, as an independent check."""
    assert r >= 0 and n >= 1
    if r == 0:
        return n
    return sum(
        1 for k in range(1, n + 1) if all(gcd(k + i, n) == 1 for i in range(r))
    )


def phi(ring: QuotientRing) -> int:
    """Order of the unit group, from the prime-ideal factorization."""
    out = 1
    for f in ring.factors:
        out *= f.residue_index ** (f.exponent - 1) * (f.residue_index - 1)
    return out


def unit_count(ring: QuotientRing) -> int:
    """Order of the unit group by testing every residue."""
    return sum(1 for v in ring.elements_raw if ring.is_unit_raw(v))


def consecutive_unit_count(ring: QuotientRing, r: int) -> int:
    """Number of residues a with a, a+1, ..., a+r-1 all units; pure enumeration."""
    assert 1 <= r <= ENUMERATION_R_CAP
    shifts = [ring.from_int_raw(i) for i in range(r)]
    return sum(
        1
        for v in ring.elements_raw
        if all(ring.is_unit_raw(ring.add_raw(v, s)) for s in shifts)
    )


def consecutive_unit_count_formula(ring: QuotientRing, r: int) -> int:
    """Closed form for consecutive_unit_count via multiplicativity over prime powers."""
    assert r >= 1
    out = 1
    for f in ring.factors:
        drop = r if r <= f.residue_char else f.residue_char
        out *= f.residue_index ** (f.exponent - 1) * (f.residue_index - drop)
    return out


def consecutive_unit_count_field(r: int, field_order: int, field_char: int) -> int:
    """The same count for a finite field viewed as the quotient by the zero ideal."""
    if r < 1:
        raise Unsupported("r must be at least 1 for the zero-ideal field count")
    assert is_prime(field_char)
    q = field_order
    while q % field_char == 0:
        q //= field_char
    assert q == 1, "field order must be a power of the characteristic"
    return field_order - min(r, field_char)


def clique_extension_count(ring: QuotientRing, r: int) -> int:
    """Number of vertices adjacent to every member of an r-clique (0 if none fit).

    Defined by the product rule over prime powers: a factor of index q
    contributes q^(e-1) * (q - r), or kills the product when r exceeds q.
    Special values: r=0 gives the ring order, r=1 the unit count.
    """
    assert r >= 0
    out = 1
    for f in ring.factors:
        if r > f.residue_index:
            return 0
        out *= f.residue_index ** (f.exponent - 1) * (f.residue_index - r)
    return out
