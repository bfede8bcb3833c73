"""Closed-form graph invariants computed from the ideal factorization alone.

Every function here works from the prime-ideal factorization (plus ring
arithmetic for constructive witnesses); none of them consult graph adjacency.
The oracle module recomputes the same quantities by brute force so the two
sides can be compared.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import (
    HypothesisNotMet,
    NoIndexTwoPrimes,
    NotPrimePower,
    ShapeMismatch,
    Unsupported,
    WitnessUnavailable,
)
from .rings import QuotientRing, build_quotient_ring
from .totients import clique_extension_count, phi


@dataclass(frozen=True)
class IdealStats:
    """Factorization shape: everything the closed forms below depend on."""

    min_residue_index: int  # smallest |R/P| over prime divisors
    prime_count: int  # number of distinct prime divisors
    index2_count: int  # prime divisors of residue index exactly 2
    index2_with_square: bool  # some index-2 prime divides with exponent > 1
    has_odd_part: bool  # some prime divisor has residue index > 2


@dataclass(frozen=True)
class ComponentStructure:
    component_count: int
    component_diameter: int


def ideal_stats(ring: QuotientRing) -> IdealStats:
    fs = ring.factors
    index2 = [f for f in fs if f.residue_index == 2]
    return IdealStats(
        min_residue_index=min(f.residue_index for f in fs),
        prime_count=len(fs),
        index2_count=len(index2),
        index2_with_square=any(f.exponent > 1 for f in index2),
        has_odd_part=any(f.residue_index > 2 for f in fs),
    )


def is_prime_ideal(ring: QuotientRing) -> bool:
    return len(ring.factors) == 1 and ring.factors[0].exponent == 1


def clique_count(ring: QuotientRing, m: int) -> int:
    """Number of cliques of order m, as the telescoping product of extension counts.

    Each partial product is itself a clique count, hence divisible by the next
    k; a full-numerator division guards the final step regardless.
    """
    assert m >= 1
    out = 1
    numerator = 1
    for k in range(1, m + 1):
        numerator *= clique_extension_count(ring, k - 1)
        out *= clique_extension_count(ring, k - 1)
        if out % k == 0:
            out //= k
        else:
            assert numerator % factorial(k) == 0
            out = numerator // factorial(k)
    return out


def clique_number(ring: QuotientRing) -> int:
    """Largest clique order: the minimum residue index of the prime divisors."""
    return ideal_stats(ring).min_residue_index


def chromatic_number(ring: QuotientRing) -> int:
    """Equal to the clique number for these graphs."""
    return clique_number(ring)


def coloring_witness(ring: QuotientRing) -> list[int]:
    """A proper coloring with chromatic_number colors: classes are cosets of a
    minimal-index prime divisor."""
    target = clique_number(ring)
    gen = next(f.generator for f in ring.factors if f.residue_index == target)
    sub = build_quotient_ring(_residue_field_spec(ring, gen))
    colors = [sub.index_raw(sub.canon_raw(v)) for v in ring.elements_raw]
    assert len(set(colors)) == target
    return colors


def _residue_field_spec(ring: QuotientRing, gen):
    """RingSpec for the base ring modulo a single prime generator."""
    from .rings import Family, RingSpec

    if ring.spec.family is Family.INTEGER_MOD:
        return RingSpec(Family.INTEGER_MOD, gen)
    if ring.spec.family is Family.POLY_MOD:
        return RingSpec(Family.POLY_MOD, (ring.p, gen))
    return RingSpec(Family.GAUSSIAN_MOD, gen)


def is_bipartite(ring: QuotientRing) -> bool:
    return clique_number(ring) == 2


def bipartition_witness(ring: QuotientRing) -> tuple[tuple, tuple]:
    """Vertex-index parts (inside P, outside P) for an index-2 prime divisor P."""
    if not is_bipartite(ring):
        raise WitnessUnavailable("graph is not bipartite: no index-2 prime divisor is minimal")
    gen = next(f.generator for f in ring.factors if f.residue_index == 2)
    inside, outside = [], []
    for i, v in enumerate(ring.elements_raw):
        (inside if ring.divides_base(gen, v) else outside).append(i)
    return tuple(inside), tuple(outside)


def chromatic_index(ring: QuotientRing) -> int:
    """Degree if some residue index is a power of two, else degree plus one."""
    d = phi(ring)
    if any(f.residue_index & (f.residue_index - 1) == 0 for f in ring.factors):
        return d
    return d + 1


def dominating_clique_order(ring: QuotientRing):
    """Smallest order of a dominating clique, or None when no clique dominates."""
    if is_prime_ideal(ring):
        return 1
    st = ideal_stats(ring)
    if st.min_residue_index > st.prime_count:
        return st.prime_count + 1
    return None


def girth_zmod(n: int) -> int:
    """Girth of the graph on Z/n: 3 for odd n, 6 for n = 6, else 4."""
    if n < 3:
        raise Unsupported("girth is undefined below 3 vertices (the graph is acyclic)")
    if n % 2 == 1:
        return 3
    if n == 6:
        return 6
    return 4


def four_cycle_hypothesis(ring: QuotientRing, factor_index: int) -> bool:
    """Whether the constructive 4-cycle exists for the chosen prime divisor."""
    f = ring.factors[factor_index]
    if f.exponent > 1:
        return True
    gen_j = _complement_generator(ring, factor_index)
    p = f.generator
    p_minus = ring.base_add_int(p, -1)
    p_plus = ring.base_add_int(p, 1)
    return not ring.divides_base(gen_j, p_minus) and not ring.divides_base(gen_j, p_plus)


def _complement_generator(ring: QuotientRing, factor_index: int):
    """Generator of the product of all other prime-power factors."""
    gen = ring.base_one()
    for i, f in enumerate(ring.factors):
        if i == factor_index:
            continue
        for _ in range(f.exponent):
            gen = ring.base_mul(gen, f.generator)
    return gen


def four_cycle_witness(ring: QuotientRing, factor_index: int) -> tuple[int, int, int, int]:
    """Vertex indices of a 4-cycle built from a prime divisor P = (p) and its
    complementary factor J: (0, p^2 - y, p^2 + p, p - y) with y generating J.

    Raises HypothesisNotMet unless the prime's exponent exceeds 1 or neither
    p-1 nor p+1 lies in J.
    """
    if not four_cycle_hypothesis(ring, factor_index):
        raise HypothesisNotMet("needs exponent > 1 or p-1, p+1 both outside the complementary factor")
    p = ring.factors[factor_index].generator
    y = _complement_generator(ring, factor_index)
    p2 = ring.base_mul(p, p)
    verts = (
        ring.from_int_raw(0),
        ring.canon_raw(ring.base_sub(p2, y)),
        ring.canon_raw(ring.base_add(p2, p)),
        ring.canon_raw(ring.base_sub(p, y)),
    )
    idx = tuple(ring.index_raw(v) for v in verts)
    assert len(set(idx)) == 4, "witness vertices must be distinct"
    for a, b in zip(verts, verts[1:] + verts[:1]):
        assert ring.is_unit_raw(ring.sub_raw(ring.canon_raw(a), ring.canon_raw(b)))
    return idx


def common_neighbor_count(ring: QuotientRing, s) -> int:
    """Common-neighbor count of any vertex pair whose difference is s.

    Product over prime divisors of (1 - eps/index) scaled by the order, where
    eps is 1 inside the prime and 2 outside; exact rationals collapse to an int.
    """
    sval = ring._raw(s)
    out = Fraction(ring.order)
    for f in ring.factors:
        eps = 1 if ring.divides_base(f.generator, sval) else 2
        out *= 1 - Fraction(eps, f.residue_index)
    assert out.denominator == 1
    return int(out)


def component_structure(ring: QuotientRing) -> ComponentStructure:
    """Component count and per-component diameter from the factorization shape."""
    st = ideal_stats(ring)
    if st.index2_count == 0:
        diameter = 1 if is_prime_ideal(ring) else 2
        return ComponentStructure(1, diameter)
    count = 2 ** (st.index2_count - 1)
    if st.has_odd_part:
        diameter = 3
    elif st.index2_with_square:
        diameter = 2
    else:
        diameter = 1
    return ComponentStructure(count, diameter)


def parity_signature(ring: QuotientRing, a) -> tuple[int, ...]:
    """Bit per index-2 prime divisor: 0 inside the prime, 1 outside.

    Constant or fully complemented across each connected component.
    """
    gens = [f.generator for f in ring.factors if f.residue_index == 2]
    if not gens:
        raise NoIndexTwoPrimes("no prime divisor of residue index 2")
    aval = ring._raw(a)
    return tuple(0 if ring.divides_base(g, aval) else 1 for g in gens)


def strong_chromatic_number(ring: QuotientRing) -> int:
    """Strong chromatic number for a prime-power modulus: the ring order."""
    if len(ring.factors) != 1:
        raise NotPrimePower("strong chromatic closed form needs a prime-power modulus")
    return ring.order


def strong_edge_chromatic_number(ring: QuotientRing) -> int:
    """Strong chromatic index for a prime-power modulus: the edge count."""
    if len(ring.factors) != 1:
        raise NotPrimePower("strong edge chromatic closed form needs a prime-power modulus")
    q = ring.factors[0].residue_index
    a = ring.factors[0].exponent
    return q ** (2 * a - 1) * (q - 1) // 2


def paired_strong_edge_coloring(ring: QuotientRing):
    """Strong edge coloring for a modulus of shape Q*M, Q an index-2 prime not
    dividing M and M a proper ideal: edges are paired by translation.

    Returns (coloring dict keyed by sorted vertex-index pairs, color count);
    the count is exactly |R/M| * phi(R/M) / 2.
    """
    q_index = next(
        (i for i, f in enumerate(ring.factors) if f.residue_index == 2 and f.exponent == 1),
        None,
    )
    if q_index is None:
        raise ShapeMismatch("needs an index-2 prime divisor with exponent 1")
    if len(ring.factors) < 2:
        raise ShapeMismatch("needs a nontrivial complementary factor")
    q_gen = ring.factors[q_index].generator

    # mu: first element (enumeration order) inside M = I/Q but outside Q
    m_gen = _complement_generator(ring, q_index)
    mu = next(
        v
        for v in ring.elements_raw
        if ring.divides_base(m_gen, v) and not ring.divides_base(q_gen, v)
    )

    n = ring.order
    ev = ring.elements_raw
    unit = [ring.is_unit_raw(v) for v in ev]
    shift = [ring.index_raw(ring.add_raw(v, mu)) for v in ev]

    coloring = {}
    color = 0
    for u in range(n):
        for v in range(u + 1, n):
            if not unit[ring.index_raw(ring.sub_raw(ev[u], ev[v]))]:
                continue
            e = (u, v)
            if e in coloring:
                continue
            partner = tuple(sorted((shift[u], shift[v])))
            assert partner != e and partner not in coloring
            coloring[e] = color
            coloring[partner] = color
            color += 1

    m_order = ring.order // 2
    expected = m_order * _phi_of_complement(ring, q_index) // 2
    assert color == expected
    return coloring, color


def _phi_of_complement(ring: QuotientRing, skip_index: int) -> int:
    out = 1
    for i, f in enumerate(ring.factors):
        if i == skip_index:
            continue
        out *= f.residue_index ** (f.exponent - 1) * (f.residue_index - 1)
    return out
