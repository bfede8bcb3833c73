import pytest

from utg import closed_form as cf
from utg import oracle as orc
from utg.errors import (
    HypothesisNotMet,
    NoIndexTwoPrimes,
    NotPrimePower,
    ShapeMismatch,
    Unsupported,
    WitnessUnavailable,
)
from utg.graphs import build_graph
from utg.rings import build_ring

POOL = [
    "Z/2",
    "Z/6",
    "Z/9",
    "Z/12",
    "Z/15",
    "Z/30",
    "Z/45",
    "GF(2)[x]/(x^2+x+1)",
    "GF(2)[x]/(x^2+x)",
    "GF(2)[x]/(x^3+x)",
    "GF(3)[x]/(x^2+1)",
    "Zi/(2)",
    "Zi/(3)",
    "Zi/(3+3i)",
    "Zi/(4+2i)",
]


def test_ideal_stats_examples():
    st = cf.ideal_stats(build_ring("Z/15"))
    assert (st.min_residue_index, st.prime_count, st.index2_count) == (3, 2, 0)
    st = cf.ideal_stats(build_ring("Z/30"))
    assert (st.min_residue_index, st.prime_count, st.index2_count) == (2, 3, 1)
    st = cf.ideal_stats(build_ring("GF(2)[x]/(x^2+x)"))
    assert (st.min_residue_index, st.prime_count, st.index2_count) == (2, 2, 2)
    assert not st.has_odd_part


# ---------------------------------------------------------------------------
# clique counts


def test_clique_count_examples():
    assert cf.clique_count(build_ring("Z/15"), 3) == 60
    assert cf.clique_count(build_ring("Z/12"), 3) == 0
    for text in POOL:
        ring = build_ring(text)
        assert cf.clique_count(ring, 1) == ring.order


def test_clique_count_matches_census():
    for text in POOL:
        ring = build_ring(text)
        census = orc.clique_census(build_graph(ring), 6)
        for m in range(1, 7):
            assert cf.clique_count(ring, m) == census.counts[m], (text, m)


def test_clique_count_vanishes_past_clique_number():
    for text in POOL:
        ring = build_ring(text)
        q = cf.clique_number(ring)
        assert cf.clique_count(ring, q) > 0
        assert cf.clique_count(ring, q + 1) == 0


def test_clique_number_examples():
    assert cf.clique_number(build_ring("Z/15")) == 3
    assert cf.clique_number(build_ring("Z/7")) == 7
    assert cf.chromatic_number(build_ring("Z/6")) == 2


def test_coloring_witness_proper_and_tight():
    for text in POOL:
        ring = build_ring(text)
        colors = cf.coloring_witness(ring)
        g = build_graph(ring)
        assert len(set(colors)) == cf.chromatic_number(ring)
        assert all(colors[u] != colors[v] for u, v in g.edges())


# ---------------------------------------------------------------------------
# bipartiteness


def test_bipartite_examples():
    assert cf.is_bipartite(build_ring("Z/12"))
    assert not cf.is_bipartite(build_ring("Z/15"))
    assert cf.is_bipartite(build_ring("Zi/(2)"))


def test_bipartition_witness_has_no_internal_edges():
    for text in ["Z/2", "Z/12", "Zi/(2)", "GF(2)[x]/(x^2+x)", "Z/30"]:
        ring = build_ring(text)
        part0, part1 = cf.bipartition_witness(ring)
        assert sorted(part0 + part1) == list(range(ring.order))
        g = build_graph(ring)
        for part in (part0, part1):
            members = set(part)
            assert all(v not in members for u in part for v in g.neighbors(u))


def test_bipartition_witness_unavailable():
    with pytest.raises(WitnessUnavailable):
        cf.bipartition_witness(build_ring("Z/15"))


# ---------------------------------------------------------------------------
# chromatic index


def test_chromatic_index_examples():
    assert cf.chromatic_index(build_ring("Z/12")) == 4
    assert cf.chromatic_index(build_ring("Z/15")) == 9
    assert cf.chromatic_index(build_ring("GF(2)[x]/(x^2+x+1)")) == 3  # K4


def test_chromatic_index_power_of_two_index_counts():
    # index 4 = 2^2 qualifies even though it is not 2
    ring = build_ring("GF(2)[x]/(x^2+x+1)")
    from utg.totients import phi

    assert cf.chromatic_index(ring) == phi(ring)
    ring9 = build_ring("Zi/(3)")  # index 9, odd
    assert cf.chromatic_index(ring9) == phi(ring9) + 1


# ---------------------------------------------------------------------------
# clique domination


def test_dominating_clique_order_examples():
    assert cf.dominating_clique_order(build_ring("Z/7")) == 1
    assert cf.dominating_clique_order(build_ring("Z/15")) == 3
    assert cf.dominating_clique_order(build_ring("Z/30")) is None


def test_dominating_clique_order_prime_power_not_prime():
    # (9) is not a prime ideal, so the answer is lambda+1 = 2
    assert cf.dominating_clique_order(build_ring("Z/9")) == 2


# ---------------------------------------------------------------------------
# girth and four-cycles


def test_girth_zmod_cases():
    assert cf.girth_zmod(9) == 3
    assert cf.girth_zmod(8) == 4
    assert cf.girth_zmod(6) == 6
    with pytest.raises(Unsupported):
        cf.girth_zmod(2)


def test_four_cycle_witness_z12():
    ring = build_ring("Z/12")
    assert cf.four_cycle_witness(ring, 0) == (0, 1, 6, 11)


def test_four_cycle_witness_z4():
    assert cf.four_cycle_witness(build_ring("Z/4"), 0) == (0, 3, 2, 1)


def test_four_cycle_hypothesis_fails_on_z6():
    ring = build_ring("Z/6")
    assert not cf.four_cycle_hypothesis(ring, 0)
    with pytest.raises(HypothesisNotMet):
        cf.four_cycle_witness(ring, 0)


def test_four_cycle_witness_valid_when_produced():
    for text in POOL:
        ring = build_ring(text)
        g = build_graph(ring)
        for i in range(len(ring.factors)):
            if not cf.four_cycle_hypothesis(ring, i):
                continue
            verts = cf.four_cycle_witness(ring, i)
            assert len(set(verts)) == 4
            for a, b in zip(verts, verts[1:] + verts[:1]):
                assert g.adjacent(a, b)


# ---------------------------------------------------------------------------
# common neighbors


def test_common_neighbor_count_examples():
    r12 = build_ring("Z/12")
    assert cf.common_neighbor_count(r12, 6) == 4
    assert cf.common_neighbor_count(r12, 1) == 0
    assert cf.common_neighbor_count(build_ring("Z/15"), 1) == 3


def test_common_neighbor_count_matches_oracle_everywhere():
    for text in ["Z/12", "Z/30", "GF(2)[x]/(x^3+x)", "Zi/(3+3i)"]:
        ring = build_ring(text)
        g = build_graph(ring)
        for u in range(g.n):
            for v in range(g.n):
                diff = ring.sub_raw(ring.elements_raw[u], ring.elements_raw[v])
                assert cf.common_neighbor_count(ring, diff) == orc.common_neighbors(g, u, v)


# ---------------------------------------------------------------------------
# components and diameters


def test_component_structure_examples():
    assert cf.component_structure(build_ring("Z/30")) == cf.ComponentStructure(1, 3)
    assert cf.component_structure(build_ring("Zi/(2)")) == cf.ComponentStructure(1, 2)
    assert cf.component_structure(build_ring("GF(2)[x]/(x^2+x)")) == cf.ComponentStructure(2, 1)
    assert cf.component_structure(build_ring("Z/7")) == cf.ComponentStructure(1, 1)
    assert cf.component_structure(build_ring("Z/9")) == cf.ComponentStructure(1, 2)


def test_component_structure_matches_bfs():
    for text in POOL:
        ring = build_ring(text)
        metrics = orc.graph_metrics(build_graph(ring))
        structure = cf.component_structure(ring)
        assert metrics.component_count == structure.component_count, text
        assert all(d == structure.component_diameter for d in metrics.diameters), text


# ---------------------------------------------------------------------------
# parity signatures


def test_parity_signature_examples():
    r6 = build_ring("Z/6")
    assert cf.parity_signature(r6, 3) == (1,)
    assert cf.parity_signature(r6, 4) == (0,)
    rxx = build_ring("GF(2)[x]/(x^2+x)")
    assert cf.parity_signature(rxx, (0, 1)) == (0, 1)


def test_parity_signature_requires_index_two_prime():
    with pytest.raises(NoIndexTwoPrimes):
        cf.parity_signature(build_ring("Z/15"), 1)


def test_parity_signature_additive():
    for text in ["Z/30", "GF(2)[x]/(x^2+x)", "Zi/(4+2i)"]:
        ring = build_ring(text)
        for a in ring.elements_raw[:8]:
            for b in ring.elements_raw[:8]:
                sa = cf.parity_signature(ring, a)
                sb = cf.parity_signature(ring, b)
                ssum = cf.parity_signature(ring, ring.add_raw(a, b))
                assert ssum == tuple((x + y) % 2 for x, y in zip(sa, sb))


def test_parity_signature_constant_or_complemented_on_components():
    for text in ["Z/30", "GF(2)[x]/(x^2+x)", "Z/12"]:
        ring = build_ring(text)
        g = build_graph(ring)
        metrics = orc.graph_metrics(g)
        sigs = [cf.parity_signature(ring, v) for v in ring.elements_raw]
        # group vertices by component via BFS reachability
        from collections import deque

        seen = set()
        for start in range(g.n):
            if start in seen:
                continue
            comp = {start}
            q = deque([start])
            while q:
                u = q.popleft()
                for w in g.neighbors(u):
                    if w not in comp:
                        comp.add(w)
                        q.append(w)
            seen |= comp
            base = sigs[start]
            flipped = tuple(1 - b for b in base)
            assert all(sigs[v] in (base, flipped) for v in comp)
        assert metrics.component_count == cf.component_structure(ring).component_count


# ---------------------------------------------------------------------------
# strong colorings


def test_strong_chromatic_formula():
    assert cf.strong_chromatic_number(build_ring("Z/4")) == 4
    assert cf.strong_chromatic_number(build_ring("Z/9")) == 9
    assert cf.strong_chromatic_number(build_ring("Z/3")) == 3
    with pytest.raises(NotPrimePower):
        cf.strong_chromatic_number(build_ring("Z/6"))


def test_strong_edge_formula():
    assert cf.strong_edge_chromatic_number(build_ring("Z/3")) == 3
    assert cf.strong_edge_chromatic_number(build_ring("Z/5")) == 10
    assert cf.strong_edge_chromatic_number(build_ring("Z/9")) == 27
    with pytest.raises(NotPrimePower):
        cf.strong_edge_chromatic_number(build_ring("Z/10"))


def test_strong_edge_formula_equals_edge_count():
    for text in ["Z/3", "Z/5", "Z/9", "Zi/(2)", "GF(2)[x]/(x^2+x+1)"]:
        ring = build_ring(text)
        g = build_graph(ring)
        assert cf.strong_edge_chromatic_number(ring) == g.edge_count()


def test_paired_strong_edge_coloring_z6():
    ring = build_ring("Z/6")
    coloring, count = cf.paired_strong_edge_coloring(ring)
    assert count == 3
    assert orc.verify_strong_edge_coloring(build_graph(ring), coloring)


def test_paired_strong_edge_coloring_z10():
    ring = build_ring("Z/10")
    coloring, count = cf.paired_strong_edge_coloring(ring)
    assert count == 10
    assert orc.verify_strong_edge_coloring(build_graph(ring), coloring)


def test_paired_strong_edge_coloring_two_index2_primes():
    ring = build_ring("GF(2)[x]/(x^2+x)")
    coloring, count = cf.paired_strong_edge_coloring(ring)
    assert count == 1  # two disjoint edges, one shared color
    assert orc.verify_strong_edge_coloring(build_graph(ring), coloring)


def test_paired_strong_edge_coloring_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        cf.paired_strong_edge_coloring(build_ring("Z/15"))
    with pytest.raises(ShapeMismatch):
        cf.paired_strong_edge_coloring(build_ring("Z/4"))
    with pytest.raises(ShapeMismatch):
        cf.paired_strong_edge_coloring(build_ring("Z/2"))
