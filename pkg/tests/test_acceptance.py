"""Acceptance gate: one test per criterion, printing a pass/fail line each.

All comparisons are exact integer (or boolean) equality.  Run with -s to see
the per-criterion lines; the whole module is expected to finish well inside
ten minutes on a laptop.
"""

import random
from math import factorial

from utg import closed_form as cf
from utg import oracle as orc
from utg import totients as tot
from utg.errors import HypothesisNotMet
from utg.graphs import build_graph, edge_pair_automorphism, permute_is_automorphism
from utg.report import (
    AUTOMORPHISM_POOL_10,
    NON_Z_POOL_10,
    counterexample_report,
    gauss_pool_specs,
    poly_pool_specs,
)
from utg.rings import build_ring, is_prime


def _finish(num, label, mismatches):
    status = "PASS" if not mismatches else f"FAIL ({len(mismatches)} mismatches)"
    print(f"criterion {num:2d} [{label}]: {status}")
    assert not mismatches, f"criterion {num} ({label}): first failures: {mismatches[:5]}"


def _census_pool():
    specs = [f"Z/{n}" for n in range(2, 61)]
    specs += poly_pool_specs((2, 3), 3)
    specs += gauss_pool_specs(50)
    return specs


def test_criterion_01_clique_census():
    bad = []
    for spec in _census_pool():
        ring = build_ring(spec)
        census = orc.clique_census(build_graph(ring), 6)
        for m in range(1, 7):
            formula = cf.clique_count(ring, m)
            if formula != census.counts[m]:
                bad.append((spec, m, formula, census.counts[m]))
    _finish(1, "clique census, all families", bad)


def test_criterion_02_triangle_identity():
    bad = []
    for n in range(2, 201):
        ring = build_ring(f"Z/{n}")
        lhs = cf.clique_count(ring, 3)
        rhs = n * tot.schemmel(1, n) * tot.schemmel(2, n) // 6
        if lhs != rhs:
            bad.append((n, lhs, rhs))
    _finish(2, "triangle count identity", bad)


def test_criterion_03_totient_equivalence():
    bad = []
    for spec in _census_pool():
        ring = build_ring(spec)
        for r in range(1, 7):
            enum = tot.consecutive_unit_count(ring, r)
            formula = tot.consecutive_unit_count_formula(ring, r)
            if enum != formula:
                bad.append((spec, r, enum, formula))
    for n in range(2, 201):
        ring = build_ring(f"Z/{n}")
        for r in range(1, 7):
            classic = tot.schemmel(r, n)
            ext = tot.clique_extension_count(ring, r)
            enum = tot.consecutive_unit_count(ring, r)
            if not classic == ext == enum:
                bad.append((n, r, classic, ext, enum))
    _finish(3, "totient equivalences", bad)


def test_criterion_04_clique_and_chromatic_number():
    bad = []
    specs = [f"Z/{n}" for n in range(2, 41)] + list(NON_Z_POOL_10)
    for spec in specs:
        ring = build_ring(spec)
        g = build_graph(ring)
        q = cf.clique_number(ring)
        omega = orc.max_clique(g)[0]
        chi = orc.chromatic_number(g)
        if omega != q or chi != q:
            bad.append((spec, q, omega, chi))
    _finish(4, "clique number = chromatic number = min index", bad)


def test_criterion_05_chromatic_index():
    bad = []
    specs = [f"Z/{n}" for n in (3, 4, 5, 6, 8, 9, 10, 12, 15)] + ["GF(2)[x]/(x^2+x+1)"]
    for spec in specs:
        ring = build_ring(spec)
        formula = cf.chromatic_index(ring)
        oracle = orc.chromatic_index(build_graph(ring))
        if formula != oracle:
            bad.append((spec, formula, oracle))
    _finish(5, "chromatic index", bad)


def test_criterion_06_girth_and_four_cycles():
    bad = []
    for n in range(3, 101):
        ring = build_ring(f"Z/{n}")
        g = build_graph(ring)
        formula = cf.girth_zmod(n)
        oracle = orc.graph_metrics(g).girth
        if formula != oracle:
            bad.append((n, formula, oracle))
        for i in range(len(ring.factors)):
            try:
                verts = cf.four_cycle_witness(ring, i)
            except HypothesisNotMet:
                continue
            ok = len(set(verts)) == 4 and all(
                g.adjacent(verts[j], verts[(j + 1) % 4]) for j in range(4)
            )
            if not ok:
                bad.append((n, "four_cycle", verts))
    _finish(6, "girth and four-cycle witnesses", bad)


def test_criterion_07_components_diameters_common_neighbors():
    bad = []
    specs = [f"Z/{n}" for n in range(2, 101)] + list(NON_Z_POOL_10)
    for spec in specs:
        ring = build_ring(spec)
        g = build_graph(ring)
        metrics = orc.graph_metrics(g)
        structure = cf.component_structure(ring)
        if metrics.component_count != structure.component_count:
            bad.append((spec, "components", structure.component_count, metrics.component_count))
        if any(d != structure.component_diameter for d in metrics.diameters):
            bad.append((spec, "diameter", structure.component_diameter, metrics.diameters))
        if ring.order <= 60:
            ev = ring.elements_raw
            for u in range(g.n):
                for v in range(g.n):
                    diff = ring.sub_raw(ev[u], ev[v])
                    if cf.common_neighbor_count(ring, diff) != orc.common_neighbors(g, u, v):
                        bad.append((spec, "common", u, v))
    _finish(7, "components, diameters, common neighbors", bad)


def test_criterion_08_clique_domination():
    bad = []
    for n in range(4, 61):
        if is_prime(n):
            continue
        ring = build_ring(f"Z/{n}")
        g = build_graph(ring)
        st = cf.ideal_stats(ring)
        lam, q = st.prime_count, st.min_residue_index
        if q > lam:
            for verts in orc.cliques_of_order(g, lam + 1):
                if not orc.dominates(g, verts):
                    bad.append((n, "big clique fails", verts))
            for t in range(1, lam + 1):
                for verts in orc.cliques_of_order(g, t):
                    if orc.dominates(g, verts):
                        bad.append((n, "small clique dominates", verts))
        else:
            found = None
            for t in range(1, q + 1):
                for verts in orc.cliques_of_order(g, t):
                    if orc.dominates(g, verts):
                        found = verts
                        break
                if found:
                    break
            if found is not None:
                bad.append((n, "dominating clique exists", found))
    _finish(8, "clique domination law", bad)


def test_criterion_09_strong_domination_counterexample():
    bad = []
    g30 = build_graph(build_ring("Z/30"))
    if not orc.dominates(g30, (0, 7, 10, 12, 15)):
        bad.append("known witness fails to dominate")
    rep = counterexample_report(30)
    if rep["claimed_value"] != 6:
        bad.append(("claim", rep["claimed_value"]))
    if not rep["oracle_min_dominating_set"] <= 5:
        bad.append(("oracle size", rep["oracle_min_dominating_set"]))
    if not rep["contradiction"]:
        bad.append("contradiction flag not raised")
    _finish(9, "strong domination counterexample", bad)


def test_criterion_10_strong_chromatic():
    bad = []
    g4 = build_graph(build_ring("Z/4"))
    if not orc.strong_k_colorable(g4, 4):
        bad.append("Z/4 not strongly 4-colorable")
    if orc.strong_k_colorable(g4, 3):
        bad.append("Z/4 strongly 3-colorable")
    g3 = build_graph(build_ring("Z/3"))
    if not orc.strong_k_colorable(g3, 3):
        bad.append("K3 not strongly 3-colorable")
    if orc.strong_k_colorable(g3, 2):
        bad.append("K3 strongly 2-colorable")
    _finish(10, "strong chromatic spot checks", bad)


def test_criterion_11_strong_edge_chromatic():
    bad = []
    for spec, want in [("Z/3", 3), ("Z/5", 10)]:
        ring = build_ring(spec)
        oracle = orc.strong_edge_chromatic(build_graph(ring))
        formula = cf.strong_edge_chromatic_number(ring)
        if not oracle == formula == want:
            bad.append((spec, formula, oracle, want))
    ring6 = build_ring("Z/6")
    g6 = build_graph(ring6)
    coloring, count = cf.paired_strong_edge_coloring(ring6)
    if count != 3:
        bad.append(("Z/6 pairing colors", count))
    if not orc.verify_strong_edge_coloring(g6, coloring):
        bad.append("Z/6 pairing not a strong coloring")
    if orc.strong_edge_chromatic(g6) != count:
        bad.append(("Z/6 oracle", orc.strong_edge_chromatic(g6)))
    _finish(11, "strong edge chromatic", bad)


def test_criterion_12_factorial_divisibility():
    bad = []
    for n in range(2, 101):
        ring = build_ring(f"Z/{n}")
        for m in range(1, 9):
            prod = 1
            for k in range(1, m + 1):
                prod *= tot.clique_extension_count(ring, k - 1)
            if prod % factorial(m) != 0:
                bad.append((n, m, prod))
    _finish(12, "factorial divisibility", bad)


def test_criterion_13_automorphisms_and_regularity():
    bad = []
    rng = random.Random(13)
    for spec in AUTOMORPHISM_POOL_10:
        ring = build_ring(spec)
        g = build_graph(ring)
        edges = list(g.edges())
        for _ in range(100):
            a, b = rng.choice(edges)
            c, d = rng.choice(edges)
            if rng.random() < 0.5:
                a, b = b, a
            if rng.random() < 0.5:
                c, d = d, c
            perm = edge_pair_automorphism(g, a, b, c, d)
            if not (permute_is_automorphism(g, perm) and perm[a] == c and perm[b] == d):
                bad.append((spec, (a, b, c, d)))
        if {g.degree(u) for u in range(g.n)} != {tot.phi(ring)}:
            bad.append((spec, "degree histogram not a single spike"))
    _finish(13, "edge-transitive automorphisms and regularity", bad)
