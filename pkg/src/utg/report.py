"""Invariant reports and verification sweeps.

A report compares every closed-form invariant with its brute-force oracle on a
single ring.  The JSON payload is fully deterministic (fixed entry order,
deterministic witnesses); per-entry wall times are kept outside the payload so
reruns stay byte-identical.
"""

import random
import time
from dataclasses import dataclass
from math import factorial, gcd

from . import closed_form as cf
from . import oracle as orc
from . import totients as tot
from .errors import HypothesisNotMet, LimitExceeded, NotPrimePower, ShapeMismatch, Unsupported
from .graphs import build_graph, edge_pair_automorphism, permute_is_automorphism
from .oracle import DEFAULT_LIMITS, OracleLimits
from .rings import Family, QuotientRing, build_ring, is_prime

SCHEMA_VERSION = 1

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "utg invariant report",
    "type": "object",
    "required": ["schema_version", "payload", "timings_ms"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "payload": {
            "type": "object",
            "required": ["ring", "order", "factors", "stats", "limits", "oracle", "invariants"],
            "properties": {
                "ring": {"type": "string"},
                "order": {"type": "integer"},
                "factors": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["generator", "exponent", "residue_index", "residue_char"],
                    },
                },
                "stats": {"type": "object"},
                "limits": {"type": "object"},
                "oracle": {"type": "boolean"},
                "invariants": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["name", "formula"],
                        "properties": {
                            "name": {"type": "string"},
                            "agree": {"type": "boolean"},
                            "skipped": {"type": "string"},
                        },
                    },
                },
            },
        },
        "timings_ms": {"type": "object"},
    },
}


def _factor_dicts(ring: QuotientRing):
    return [
        {
            "generator": ring.format_base(f.generator),
            "exponent": f.exponent,
            "residue_index": f.residue_index,
            "residue_char": f.residue_char,
        }
        for f in ring.factors
    ]


class _EntryBuilder:
    def __init__(self):
        self.entries = []
        self.timings = {}

    def add(self, name, fn):
        t0 = time.perf_counter()
        entry = {"name": name}
        entry.update(fn())
        if "formula" not in entry:
            entry["formula"] = None
        if "oracle" in entry and entry["formula"] is not None:
            entry["agree"] = entry["formula"] == entry["oracle"]
        self.entries.append(entry)
        self.timings[name] = round((time.perf_counter() - t0) * 1000, 3)


def build_invariant_report(
    spec_text: str,
    with_oracle: bool = False,
    m_max: int = 6,
    limits: OracleLimits = DEFAULT_LIMITS,
) -> dict:
    """Evaluate every closed form on one ring, optionally against the oracles."""
    ring = build_ring(spec_text)
    g = build_graph(ring) if with_oracle else None
    stats = cf.ideal_stats(ring)
    b = _EntryBuilder()

    def guarded(limit_name, fn):
        """Run an oracle computation, mapping a blown cap to a 'skipped' marker."""
        try:
            return {"oracle": fn()}
        except LimitExceeded:
            return {"skipped": limit_name}

    b.add("phi", lambda: {"formula": tot.phi(ring), **({"oracle": tot.unit_count(ring)} if with_oracle else {})})

    def capped_max_clique():
        if g.n > limits.max_vertices_coloring:
            raise LimitExceeded(f"max clique capped at {limits.max_vertices_coloring} vertices")
        return orc.max_clique(g)[0]

    def omega():
        out = {"formula": cf.clique_number(ring)}
        if with_oracle:
            out.update(guarded("max_vertices_coloring", capped_max_clique))
        return out

    b.add("clique_number", omega)

    def chrom():
        out = {"formula": cf.chromatic_number(ring)}
        if with_oracle:
            out.update(guarded("max_vertices_coloring", lambda: orc.chromatic_number(g, limits)))
        return out

    b.add("chromatic_number", chrom)

    def chrom_index():
        out = {"formula": cf.chromatic_index(ring)}
        if with_oracle:
            out.update(guarded("max_edges_edge_coloring", lambda: orc.chromatic_index(g, limits)))
        return out

    b.add("chromatic_index", chrom_index)

    metrics = orc.graph_metrics(g) if with_oracle else None

    b.add(
        "bipartite",
        lambda: {
            "formula": cf.is_bipartite(ring),
            **({"oracle": metrics.bipartite} if with_oracle else {}),
        },
    )

    def girth():
        formula = None
        if ring.spec.family is Family.INTEGER_MOD and ring.order >= 3:
            formula = cf.girth_zmod(ring.order)
        out = {"formula": formula}
        if with_oracle:
            out["oracle"] = metrics.girth
        return out

    b.add("girth", girth)

    structure = cf.component_structure(ring)

    def comps():
        out = {"formula": structure.component_count}
        if with_oracle:
            out["oracle"] = metrics.component_count
        return out

    b.add("component_count", comps)

    def diam():
        out = {"formula": structure.component_diameter}
        if with_oracle:
            ds = set(metrics.diameters)
            out["oracle"] = metrics.diameters[0] if len(ds) == 1 else list(metrics.diameters)
        return out

    b.add("component_diameter", diam)

    census_m = min(m_max, limits.max_clique_order)
    census = orc.clique_census(g, census_m, limits) if with_oracle else None
    for m in range(1, m_max + 1):

        def cliques(m=m):
            out = {"formula": cf.clique_count(ring, m)}
            if with_oracle:
                if m <= census_m:
                    out["oracle"] = census.counts[m]
                else:
                    out["skipped"] = "max_clique_order"
            return out

        b.add(f"clique_count_m{m}", cliques)

    def dom_clique():
        out = {"formula": cf.dominating_clique_order(ring)}
        if with_oracle:
            got = guarded("max_dominating_search", lambda: orc.minimum_dominating_clique(g, limits))
            if "oracle" in got:
                found = got["oracle"]
                out["oracle"] = None if found is None else found[0]
                if found is not None:
                    out["witness"] = list(found[1])
                out["agree"] = out["formula"] == out["oracle"]
            else:
                out.update(got)
        return out

    b.add("clique_domination", dom_clique)

    def dom_set():
        out = {"formula": None}
        if with_oracle:
            got = guarded("max_dominating_search", lambda: orc.minimum_dominating_set(g, limits))
            if "oracle" in got:
                size, witness = got["oracle"]
                out["oracle"] = size
                out["witness"] = list(witness)
            else:
                out.update(got)
        return out

    b.add("min_dominating_set", dom_set)

    def four_cycle():
        for i in range(len(ring.factors)):
            try:
                return {"formula": None, "witness": list(cf.four_cycle_witness(ring, i))}
            except HypothesisNotMet:
                continue
        return {"formula": None, "witness": None}

    b.add("four_cycle", four_cycle)

    def strong_chrom():
        try:
            out = {"formula": cf.strong_chromatic_number(ring)}
        except NotPrimePower:
            out = {"formula": None}
        if with_oracle:
            got = _oracle_strong_chromatic(g, limits)
            if got is None:
                out["skipped"] = "max_vertices_strong"
            else:
                out["oracle"] = got
        return out

    b.add("strong_chromatic", strong_chrom)

    def strong_edge():
        try:
            out = {"formula": cf.strong_edge_chromatic_number(ring)}
        except NotPrimePower:
            out = {"formula": None}
        if with_oracle:
            out.update(guarded("max_edges_edge_coloring", lambda: orc.strong_edge_chromatic(g, limits)))
        return out

    b.add("strong_edge_chromatic", strong_edge)

    def strong_pairing():
        try:
            coloring, count = cf.paired_strong_edge_coloring(ring)
        except ShapeMismatch:
            return {"formula": None, "witness": None}
        valid = True
        if with_oracle:
            valid = orc.verify_strong_edge_coloring(g, coloring)
        return {"formula": count, "witness": {"colors": count, "valid": valid}}

    b.add("strong_edge_pairing_colors", strong_pairing)

    payload = {
        "ring": ring.spec.text(),
        "order": ring.order,
        "factors": _factor_dicts(ring),
        "stats": {
            "min_residue_index": stats.min_residue_index,
            "prime_count": stats.prime_count,
            "index2_count": stats.index2_count,
        },
        "limits": {
            "max_vertices_coloring": limits.max_vertices_coloring,
            "max_edges_edge_coloring": limits.max_edges_edge_coloring,
            "max_vertices_strong": limits.max_vertices_strong,
            "max_dominating_search": limits.max_dominating_search,
            "max_clique_order": limits.max_clique_order,
        },
        "oracle": with_oracle,
        "invariants": b.entries,
    }
    return {"schema_version": SCHEMA_VERSION, "payload": payload, "timings_ms": b.timings}


def _oracle_strong_chromatic(g, limits: OracleLimits):
    """Smallest k making the graph strongly k-colorable, or None past the cap."""
    delta = max(g.degree(u) for u in range(g.n)) if g.n else 0
    k = delta + 1
    while k <= g.n:
        pad = (-g.n) % k
        if g.n + pad > limits.max_vertices_strong:
            return None
        if orc.strong_k_colorable(g, k, limits):
            return k
        k += 1
    return None


def describe_ring(spec_text: str) -> dict:
    """Order, factorization, and headline stats for one ring."""
    ring = build_ring(spec_text)
    stats = cf.ideal_stats(ring)
    return {
        "ring": ring.spec.text(),
        "order": ring.order,
        "factors": _factor_dicts(ring),
        "min_residue_index": stats.min_residue_index,
        "prime_count": stats.prime_count,
        "phi": tot.phi(ring),
    }


# ---------------------------------------------------------------------------
# verification sweeps


@dataclass
class SuiteResult:
    suite: str
    cases: int
    failures: list
    elapsed: float

    def merge(self, other: "SuiteResult") -> "SuiteResult":
        return SuiteResult(
            self.suite,
            self.cases + other.cases,
            self.failures + other.failures,
            self.elapsed + other.elapsed,
        )

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": self.failures,
            "elapsed_s": round(self.elapsed, 3),
        }


@dataclass(frozen=True)
class SweepRanges:
    """Sweep bounds; zmod None means each suite uses its own default range."""

    zmod: tuple[int, int] | None = None
    gf_primes: tuple[int, ...] = (2, 3)
    max_deg: int = 3
    gauss_norm_max: int = 50
    m_max: int = 6

    def zmod_or(self, lo: int, hi: int) -> tuple[int, int]:
        return self.zmod if self.zmod is not None else (lo, hi)


def poly_pool_specs(primes=(2, 3), max_deg=3):
    """Spec strings for every monic modulus of degree 1..max_deg over the primes."""
    from .rings import poly_from_int, poly_str

    out = []
    for p in primes:
        for d in range(1, max_deg + 1):
            for v in range(p**d, 2 * p**d):
                coeffs = poly_from_int(v, p)
                if coeffs[-1] == 1:
                    out.append(f"GF({p})[x]/({poly_str(coeffs)})")
    return out


def gauss_pool_specs(norm_max=50):
    """Spec strings for one associate per Gaussian modulus with norm in [2, norm_max]."""
    from .rings import gauss_str

    out = []
    for a in range(1, int(norm_max**0.5) + 1):
        for bb in range(0, int(norm_max**0.5) + 1):
            if 2 <= a * a + bb * bb <= norm_max:
                out.append(f"Zi/({gauss_str((a, bb))})")
    return out


NON_Z_POOL_10 = (
    "GF(2)[x]/(x^2+x+1)",
    "GF(2)[x]/(x^2+x)",
    "GF(2)[x]/(x^3+x+1)",
    "GF(2)[x]/(x^3+x)",
    "GF(3)[x]/(x^2+1)",
    "GF(3)[x]/(x^2)",
    "Zi/(2)",
    "Zi/(3)",
    "Zi/(1+2i)",
    "Zi/(3+i)",
)

AUTOMORPHISM_POOL_10 = (
    "Z/6",
    "Z/8",
    "Z/9",
    "Z/10",
    "Z/12",
    "Z/15",
    "Z/16",
    "Z/21",
    "GF(2)[x]/(x^2+x+1)",
    "Zi/(3+i)",
)

CHI_PRIME_POOL = ("Z/3", "Z/4", "Z/5", "Z/6", "Z/8", "Z/9", "Z/10", "Z/12", "Z/15", "GF(2)[x]/(x^2+x+1)")


def _all_pool_specs(ranges: SweepRanges, default=(2, 60)):
    lo, hi = ranges.zmod_or(*default)
    specs = [f"Z/{n}" for n in range(max(lo, 2), hi + 1)]
    specs += poly_pool_specs(ranges.gf_primes, ranges.max_deg)
    specs += gauss_pool_specs(ranges.gauss_norm_max)
    return specs


def verify_totients(ranges: SweepRanges = SweepRanges(), limits: OracleLimits = DEFAULT_LIMITS) -> SuiteResult:
    """Classic Schemmel values and both ring extensions must coincide where they should."""
    t0 = time.perf_counter()
    cases = 0
    failures = []
    lo, hi = ranges.zmod_or(2, 200)
    for n in range(max(lo, 2), hi + 1):
        ring = build_ring(f"Z/{n}")
        for r in range(1, 7):
            classic = tot.schemmel(r, n)
            ext = tot.clique_extension_count(ring, r)
            enum = tot.consecutive_unit_count(ring, r)
            cases += 1
            if not classic == ext == enum:
                failures.append(
                    {"ring": f"Z/{n}", "invariant": f"totient_r{r}", "formula": classic, "oracle": [ext, enum]}
                )
    for spec in _all_pool_specs(ranges):
        ring = build_ring(spec)
        for r in range(1, 7):
            formula = tot.consecutive_unit_count_formula(ring, r)
            enum = tot.consecutive_unit_count(ring, r)
            cases += 1
            if formula != enum:
                failures.append(
                    {"ring": spec, "invariant": f"consecutive_units_r{r}", "formula": formula, "oracle": enum}
                )
    return SuiteResult("totients", cases, failures, time.perf_counter() - t0)


def verify_cliques(ranges: SweepRanges = SweepRanges(), limits: OracleLimits = DEFAULT_LIMITS) -> SuiteResult:
    """Clique censuses, the triangle identity, and the factorial divisibility law."""
    t0 = time.perf_counter()
    cases = 0
    failures = []
    m_max = min(ranges.m_max, limits.max_clique_order)
    for spec in _all_pool_specs(ranges):
        ring = build_ring(spec)
        census = orc.clique_census(build_graph(ring), m_max, limits)
        for m in range(1, m_max + 1):
            formula = cf.clique_count(ring, m)
            cases += 1
            if formula != census.counts[m]:
                failures.append(
                    {"ring": spec, "invariant": f"clique_count_m{m}", "formula": formula, "oracle": census.counts[m]}
                )
    tri_lo, tri_hi = ranges.zmod_or(2, 200)
    for n in range(max(tri_lo, 2), tri_hi + 1):
        ring = build_ring(f"Z/{n}")
        formula = cf.clique_count(ring, 3)
        triangles = n * tot.schemmel(1, n) * tot.schemmel(2, n) // 6
        cases += 1
        if formula != triangles:
            failures.append({"ring": f"Z/{n}", "invariant": "triangle_identity", "formula": formula, "oracle": triangles})
    div_lo, div_hi = ranges.zmod_or(2, 100)
    for n in range(max(div_lo, 2), div_hi + 1):
        ring = build_ring(f"Z/{n}")
        for m in range(1, 9):
            prod = 1
            for k in range(1, m + 1):
                prod *= tot.clique_extension_count(ring, k - 1)
            cases += 1
            if prod % factorial(m) != 0:
                failures.append(
                    {"ring": f"Z/{n}", "invariant": f"divisibility_m{m}", "formula": 0, "oracle": prod % factorial(m)}
                )
    return SuiteResult("cliques", cases, failures, time.perf_counter() - t0)


def verify_coloring(ranges: SweepRanges = SweepRanges(), limits: OracleLimits = DEFAULT_LIMITS) -> SuiteResult:
    """Clique number, chromatic number, and chromatic index against exact search."""
    t0 = time.perf_counter()
    cases = 0
    failures = []
    lo, hi = ranges.zmod_or(2, 40)
    specs = [f"Z/{n}" for n in range(max(lo, 2), hi + 1)] + list(NON_Z_POOL_10)
    for spec in specs:
        ring = build_ring(spec)
        g = build_graph(ring)
        q = cf.clique_number(ring)
        omega = orc.max_clique(g)[0]
        chi = orc.chromatic_number(g, limits)
        cases += 2
        if omega != q:
            failures.append({"ring": spec, "invariant": "clique_number", "formula": q, "oracle": omega})
        if chi != q:
            failures.append({"ring": spec, "invariant": "chromatic_number", "formula": q, "oracle": chi})
    for spec in CHI_PRIME_POOL:
        ring = build_ring(spec)
        g = build_graph(ring)
        formula = cf.chromatic_index(ring)
        oracle = orc.chromatic_index(g, limits)
        cases += 1
        if formula != oracle:
            failures.append({"ring": spec, "invariant": "chromatic_index", "formula": formula, "oracle": oracle})
    return SuiteResult("coloring", cases, failures, time.perf_counter() - t0)


def verify_domination(ranges: SweepRanges = SweepRanges(), limits: OracleLimits = DEFAULT_LIMITS) -> SuiteResult:
    """Dominating-clique law: order lambda+1 when it exists, every such clique dominates."""
    t0 = time.perf_counter()
    cases = 0
    failures = []
    lo, hi = ranges.zmod_or(2, 60)
    for n in range(max(lo, 2), hi + 1):
        if is_prime(n):
            continue
        ring = build_ring(f"Z/{n}")
        g = build_graph(ring)
        st = cf.ideal_stats(ring)
        lam, q = st.prime_count, st.min_residue_index
        if q > lam:
            for verts in orc.cliques_of_order(g, lam + 1):
                cases += 1
                if not orc.dominates(g, verts):
                    failures.append(
                        {"ring": f"Z/{n}", "invariant": "clique_dominates", "formula": list(verts), "oracle": False}
                    )
            for t in range(1, lam + 1):
                for verts in orc.cliques_of_order(g, t):
                    cases += 1
                    if orc.dominates(g, verts):
                        failures.append(
                            {"ring": f"Z/{n}", "invariant": "small_clique_dominates", "formula": list(verts), "oracle": True}
                        )
        else:
            found = orc.minimum_dominating_clique(g, limits) if g.n <= limits.max_dominating_search else _scan_dominating_clique(g)
            cases += 1
            if found is not None:
                failures.append(
                    {"ring": f"Z/{n}", "invariant": "no_dominating_clique", "formula": None, "oracle": list(found[1])}
                )
    return SuiteResult("domination", cases, failures, time.perf_counter() - t0)


def _scan_dominating_clique(g):
    """Uncapped dominating-clique scan for sweep rings above the search cap."""
    for t in range(1, g.n + 1):
        any_clique = False
        for verts in orc.cliques_of_order(g, t):
            any_clique = True
            if orc.dominates(g, verts):
                return t, verts
        if not any_clique:
            return None
    return None


def verify_metrics(ranges: SweepRanges = SweepRanges(), limits: OracleLimits = DEFAULT_LIMITS) -> SuiteResult:
    """Girth, components, diameters, bipartiteness, common neighbors, automorphisms."""
    t0 = time.perf_counter()
    cases = 0
    failures = []

    lo, hi = ranges.zmod_or(2, 100)
    for n in range(max(lo, 3), hi + 1):
        g = build_graph(build_ring(f"Z/{n}"))
        formula = cf.girth_zmod(n)
        oracle = orc.graph_metrics(g).girth
        cases += 1
        if formula != oracle:
            failures.append({"ring": f"Z/{n}", "invariant": "girth", "formula": formula, "oracle": oracle})

    structural = [f"Z/{n}" for n in range(max(lo, 2), hi + 1)] + list(NON_Z_POOL_10)
    for spec in structural:
        ring = build_ring(spec)
        g = build_graph(ring)
        metrics = orc.graph_metrics(g)
        structure = cf.component_structure(ring)
        cases += 3
        if structure.component_count != metrics.component_count:
            failures.append(
                {"ring": spec, "invariant": "component_count", "formula": structure.component_count, "oracle": metrics.component_count}
            )
        if any(d != structure.component_diameter for d in metrics.diameters):
            failures.append(
                {"ring": spec, "invariant": "component_diameter", "formula": structure.component_diameter, "oracle": list(metrics.diameters)}
            )
        if cf.is_bipartite(ring) != metrics.bipartite:
            failures.append(
                {"ring": spec, "invariant": "bipartite", "formula": cf.is_bipartite(ring), "oracle": metrics.bipartite}
            )
        for i in range(len(ring.factors)):
            try:
                verts = cf.four_cycle_witness(ring, i)
            except HypothesisNotMet:
                continue
            cases += 1
            cycle_ok = len(set(verts)) == 4 and all(
                g.adjacent(verts[j], verts[(j + 1) % 4]) for j in range(4)
            )
            if not cycle_ok:
                failures.append({"ring": spec, "invariant": "four_cycle", "formula": list(verts), "oracle": False})

    pair_specs = [f"Z/{n}" for n in range(max(lo, 2), min(hi, 60) + 1)] + list(NON_Z_POOL_10)
    for spec in pair_specs:
        ring = build_ring(spec)
        g = build_graph(ring)
        bad = 0
        for u in range(g.n):
            for v in range(g.n):
                diff = ring.sub_raw(ring.elements_raw[u], ring.elements_raw[v])
                if cf.common_neighbor_count(ring, diff) != orc.common_neighbors(g, u, v):
                    bad += 1
        cases += 1
        if bad:
            failures.append({"ring": spec, "invariant": "common_neighbors", "formula": 0, "oracle": bad})

    rng = random.Random(20250810)
    for spec in AUTOMORPHISM_POOL_10:
        ring = build_ring(spec)
        g = build_graph(ring)
        edges = list(g.edges())
        ok = True
        for _ in range(100):
            a, b = rng.choice(edges)
            c, d = rng.choice(edges)
            if rng.random() < 0.5:
                a, b = b, a
            if rng.random() < 0.5:
                c, d = d, c
            perm = edge_pair_automorphism(g, a, b, c, d)
            if not (permute_is_automorphism(g, perm) and perm[a] == c and perm[b] == d):
                ok = False
        degrees = {g.degree(u) for u in range(g.n)}
        cases += 2
        if not ok:
            failures.append({"ring": spec, "invariant": "edge_pair_automorphism", "formula": True, "oracle": False})
        if degrees != {tot.phi(ring)}:
            failures.append({"ring": spec, "invariant": "regular_degree", "formula": tot.phi(ring), "oracle": sorted(degrees)})

    return SuiteResult("metrics", cases, failures, time.perf_counter() - t0)


def verify_strong(ranges: SweepRanges = SweepRanges(), limits: OracleLimits = DEFAULT_LIMITS) -> SuiteResult:
    """Strong colorability on the fixed small cases plus the edge-pairing construction."""
    t0 = time.perf_counter()
    cases = 0
    failures = []

    def check(name, ring_spec, got, want):
        nonlocal cases
        cases += 1
        if got != want:
            failures.append({"ring": ring_spec, "invariant": name, "formula": want, "oracle": got})

    g4 = build_graph(build_ring("Z/4"))
    check("strongly_4_colorable", "Z/4", orc.strong_k_colorable(g4, 4, limits), True)
    check("strongly_3_colorable", "Z/4", orc.strong_k_colorable(g4, 3, limits), False)
    g3 = build_graph(build_ring("Z/3"))
    check("strongly_3_colorable", "Z/3", orc.strong_k_colorable(g3, 3, limits), True)
    check("strongly_2_colorable", "Z/3", orc.strong_k_colorable(g3, 2, limits), False)

    for spec in ("Z/3", "Z/5", "Z/9"):
        ring = build_ring(spec)
        check(
            "strong_edge_chromatic",
            spec,
            orc.strong_edge_chromatic(build_graph(ring), limits),
            cf.strong_edge_chromatic_number(ring),
        )

    ring6 = build_ring("Z/6")
    g6 = build_graph(ring6)
    coloring, count = cf.paired_strong_edge_coloring(ring6)
    check("pairing_colors", "Z/6", count, 3)
    check("pairing_valid", "Z/6", orc.verify_strong_edge_coloring(g6, coloring), True)
    check("pairing_matches_oracle", "Z/6", orc.strong_edge_chromatic(g6, limits), count)

    ring10 = build_ring("Z/10")
    coloring10, count10 = cf.paired_strong_edge_coloring(ring10)
    check("pairing_colors", "Z/10", count10, 10)
    check("pairing_valid", "Z/10", orc.verify_strong_edge_coloring(build_graph(ring10), coloring10), True)

    return SuiteResult("strong", cases, failures, time.perf_counter() - t0)


SUITES = {
    "totients": verify_totients,
    "cliques": verify_cliques,
    "coloring": verify_coloring,
    "domination": verify_domination,
    "metrics": verify_metrics,
    "strong": verify_strong,
}


def run_suite(name: str, ranges: SweepRanges = SweepRanges(), limits: OracleLimits = DEFAULT_LIMITS) -> SuiteResult:
    """Run one named suite, or all of them merged."""
    if name == "all":
        out = SuiteResult("all", 0, [], 0.0)
        for fn in SUITES.values():
            out = out.merge(fn(ranges, limits))
        return out
    if name not in SUITES:
        raise Unsupported(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    return SUITES[name](ranges, limits)


# ---------------------------------------------------------------------------
# the strong-domination counterexample


KNOWN_WITNESS_30 = (0, 7, 10, 12, 15)


def longest_shared_factor_run(n: int) -> int:
    """Longest run of consecutive integers each sharing a prime factor with n."""
    best = run = 0
    for k in range(1, 2 * n + 1):
        if gcd(k, n) > 1:
            run += 1
            best = max(best, run)
        else:
            run = 0
    return best


def counterexample_report(n: int = 30, limits: OracleLimits = DEFAULT_LIMITS) -> dict:
    """Refute the published strong-domination value for G_{Z/n}.

    The refuted claim: for composite n not twice a prime, the minimum
    dominating set has size exactly one more than the longest run of
    consecutive integers sharing a factor with n.
    """
    if n < 4 or is_prime(n):
        raise Unsupported("the claim concerns composite n; primes are out of scope")
    if n % 2 == 0 and is_prime(n // 2):
        raise Unsupported("the claim excludes n equal to twice a prime")
    ring = build_ring(f"Z/{n}")
    g = build_graph(ring)
    run = longest_shared_factor_run(n)
    claim = run + 1
    size, witness = orc.minimum_dominating_set(g, limits)
    out = {
        "n": n,
        "longest_run": run,
        "claimed_value": claim,
        "oracle_min_dominating_set": size,
        "oracle_witness": list(witness),
        "contradiction": size < claim,
    }
    if n == 30:
        out["known_witness"] = list(KNOWN_WITNESS_30)
        out["known_witness_dominates"] = orc.dominates(g, KNOWN_WITNESS_30)
    return out
