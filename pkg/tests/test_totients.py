from math import gcd

import pytest

from utg.errors import Unsupported
from utg.rings import build_ring
from utg.totients import (
    clique_extension_count,
    consecutive_unit_count,
    consecutive_unit_count_field,
    consecutive_unit_count_formula,
    phi,
    schemmel,
    schemmel_by_scan,
    unit_count,
)

POOL = [
    "Z/2",
    "Z/12",
    "Z/45",
    "GF(2)[x]/(x^2+x+1)",
    "GF(2)[x]/(x^3+x)",
    "GF(3)[x]/(x^2+1)",
    "GF(3)[x]/(x^2+x)",
    "Zi/(2)",
    "Zi/(3)",
    "Zi/(1+2i)",
    "Zi/(3+3i)",
]


def brute_schemmel(r, n):
    # straight from the definition, independent of the library scan helper
    return sum(1 for k in range(1, n + 1) if all(gcd(k + i, n) == 1 for i in range(r)))


def test_classic_anchor_values():
    assert schemmel(2, 7) == 5
    assert schemmel(0, 12) == 12
    assert schemmel(2, 15) == brute_schemmel(2, 15) == 3


def test_classic_matches_definition_scan():
    for n in range(1, 61):
        for r in range(1, 5):
            assert schemmel(r, n) == brute_schemmel(r, n) == schemmel_by_scan(r, n)


def test_classic_multiplicative():
    pairs = [(4, 9), (8, 15), (9, 25), (5, 16), (27, 35)]
    for m, n in pairs:
        assert gcd(m, n) == 1
        for r in range(0, 7):
            assert schemmel(r, m * n) == schemmel(r, m) * schemmel(r, n)


def test_phi_anchors():
    assert phi(build_ring("Z/12")) == 4
    assert phi(build_ring("Zi/(1+2i)")) == 4
    assert phi(build_ring("GF(2)[x]/(x^2+x+1)")) == 3


def test_phi_matches_unit_count():
    for text in POOL:
        ring = build_ring(text)
        assert phi(ring) == unit_count(ring)


def test_consecutive_count_r1_is_phi():
    for text in POOL:
        ring = build_ring(text)
        assert consecutive_unit_count(ring, 1) == phi(ring)


def test_consecutive_count_anchors():
    f4 = build_ring("GF(2)[x]/(x^2+x+1)")
    assert consecutive_unit_count(f4, 3) == 2
    assert consecutive_unit_count_formula(f4, 3) == 2
    r45 = build_ring("Z/45")
    assert consecutive_unit_count(r45, 2) == 9
    assert schemmel(2, 9) * schemmel(2, 5) == 9
    r3 = build_ring("Z/3")
    assert consecutive_unit_count_formula(r3, 5) == 0
    assert consecutive_unit_count(r3, 5) == 0


def test_consecutive_formula_matches_enumeration():
    for text in POOL:
        ring = build_ring(text)
        for r in range(1, 7):
            assert consecutive_unit_count(ring, r) == consecutive_unit_count_formula(ring, r)


def test_extension_count_anchors():
    r12 = build_ring("Z/12")
    assert clique_extension_count(r12, 0) == 12
    assert clique_extension_count(r12, 2) == 0
    f4 = build_ring("GF(2)[x]/(x^2+x+1)")
    assert clique_extension_count(f4, 3) == 1  # differs from the consecutive count (2)
    assert clique_extension_count(f4, 1) == phi(f4)


def test_extension_count_vanishes_exactly_past_min_index():
    for text in POOL:
        ring = build_ring(text)
        q = min(f.residue_index for f in ring.factors)
        for r in range(0, q + 3):
            value = clique_extension_count(ring, r)
            assert (value == 0) == (q <= r)


def test_all_three_agree_on_integers():
    for n in range(2, 201):
        ring = build_ring(f"Z/{n}")
        for r in range(1, 7):
            s = schemmel(r, n)
            assert clique_extension_count(ring, r) == s
            assert consecutive_unit_count(ring, r) == s


def test_field_zero_ideal_count():
    assert consecutive_unit_count_field(1, 4, 2) == 3
    assert consecutive_unit_count_field(3, 4, 2) == 2
    assert consecutive_unit_count_field(2, 5, 5) == 3
    # matches enumeration over the prime field realized as Z/5
    assert consecutive_unit_count(build_ring("Z/5"), 2) == 3


def test_field_zero_ideal_rejects_r_zero():
    with pytest.raises(Unsupported):
        consecutive_unit_count_field(0, 4, 2)


def test_field_zero_ideal_requires_prime_power():
    with pytest.raises(AssertionError):
        consecutive_unit_count_field(1, 12, 2)
