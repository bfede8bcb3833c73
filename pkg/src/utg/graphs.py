"""Unitary Cayley graph construction, the edge-pair automorphism, and exports.

Adjacency rows are Python ints used as bitsets: bit v of adj[u] is set iff the
residues at indices u and v differ by a unit.  Vertex order is the ring's
element enumeration order, which makes every export byte-deterministic.
"""

import json

from .errors import FormatUnsupported, NotAnEdge, NotAPermutation, OrderCapExceeded
from .rings import IntegerQuotientRing, QuotientRing, max_order_cap
from .totients import phi

GRAPH6_MAX_VERTICES = 258047  # largest n encodable in the 4-byte size prefix


class Graph:
    """A plain immutable simple graph: vertex count plus bitset adjacency rows."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: list[int]):
        self.n = n
        self.adj = adj

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            assert u != v and 0 <= u < n and 0 <= v < n
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self):
        """Edges as (u, v) pairs with u < v, in lexicographic order."""
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            while row:
                v = (row & -row).bit_length() - 1
                yield (u, v)
                row &= row - 1

    def neighbors(self, u: int):
        row = self.adj[u]
        while row:
            v = (row & -row).bit_length() - 1
            yield v
            row &= row - 1


class UnitaryCayleyGraph(Graph):
    """The unitary Cayley graph of a quotient ring; regular of degree phi(R/I)."""

    __slots__ = ("ring", "reg_degree")

    def __init__(self, ring: QuotientRing, adj: list[int], reg_degree: int):
        super().__init__(ring.order, adj)
        self.ring = ring
        self.reg_degree = reg_degree


def build_graph(ring: QuotientRing, max_order: int | None = None) -> UnitaryCayleyGraph:
    """Materialize the graph: u ~ v iff the difference of their residues is a unit."""
    n = ring.order
    cap = max_order_cap(max_order)
    if n > cap:
        raise OrderCapExceeded(f"graph on {n} vertices exceeds cap {cap}")
    unit_mask = 0
    for i, v in enumerate(ring.elements_raw):
        if ring.is_unit_raw(v):
            unit_mask |= 1 << i

    adj = [0] * n
    if isinstance(ring, IntegerQuotientRing):
        # index arithmetic is ring arithmetic here, so every row is a rotation
        full = (1 << n) - 1
        for u in range(n):
            adj[u] = ((unit_mask << u) | (unit_mask >> (n - u))) & full
    else:
        units = [ring.elements_raw[i] for i in range(n) if unit_mask >> i & 1]
        index = ring.index_raw
        add = ring.add_raw
        for u, uval in enumerate(ring.elements_raw):
            row = 0
            for s in units:
                row |= 1 << index(add(uval, s))
            adj[u] = row

    expected = phi(ring)
    assert all(row.bit_count() == expected for row in adj), "graph must be phi-regular"
    assert all(not (adj[u] >> u & 1) for u in range(n)), "graph must be loop-free"
    return UnitaryCayleyGraph(ring, adj, expected)


def edge_pair_automorphism(g: UnitaryCayleyGraph, a: int, b: int, c: int, d: int) -> list[int]:
    """The automorphism mapping edge (a, b) onto edge (c, d).

    Sends vertex z to c - (a - z) * (c - d) * (a - b)^-1; returns it as a
    vertex permutation.  Requires a~b and c~d so both differences are units.
    """
    if not g.adjacent(a, b):
        raise NotAnEdge(f"vertices {a} and {b} are not adjacent")
    if not g.adjacent(c, d):
        raise NotAnEdge(f"vertices {c} and {d} are not adjacent")
    ring = g.ring
    ev = ring.elements_raw
    scale = ring.mul_raw(
        ring.sub_raw(ev[c], ev[d]), ring.unit_inverse_raw(ring.sub_raw(ev[a], ev[b]))
    )
    perm = [
        ring.index_raw(ring.sub_raw(ev[c], ring.mul_raw(ring.sub_raw(ev[a], z), scale)))
        for z in ev
    ]
    assert perm[a] == c and perm[b] == d
    return perm


def permute_is_automorphism(g: Graph, perm: list[int]) -> bool:
    """True iff perm is a permutation preserving adjacency in both directions."""
    if sorted(perm) != list(range(g.n)):
        raise NotAPermutation("vertex map is not a bijection on the vertex set")
    for u in range(g.n):
        row = g.adj[u]
        mapped = 0
        while row:
            v = (row & -row).bit_length() - 1
            mapped |= 1 << perm[v]
            row &= row - 1
        if mapped != g.adj[perm[u]]:
            return False
    return True


# ---------------------------------------------------------------------------
# export formats


def _graph6_bytes(g: Graph) -> bytes:
    n = g.n
    if n > GRAPH6_MAX_VERTICES:
        raise FormatUnsupported(f"graph6 size prefix supports at most {GRAPH6_MAX_VERTICES} vertices")
    if n <= 62:
        head = bytes([n + 63])
    else:
        head = bytes([126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    bits = []
    for v in range(1, n):
        col = g.adj[v]
        for u in range(v):
            bits.append(col >> u & 1)
    while len(bits) % 6:
        bits.append(0)
    body = bytes(
        (bits[i] << 5 | bits[i + 1] << 4 | bits[i + 2] << 3 | bits[i + 3] << 2 | bits[i + 4] << 1 | bits[i + 5]) + 63
        for i in range(0, len(bits), 6)
    )
    return head + body + b"\n"


def _dimacs_bytes(g: Graph) -> bytes:
    lines = [f"p edge {g.n} {g.edge_count()}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return ("\n".join(lines) + "\n").encode("ascii")


def _dot_bytes(g: Graph) -> bytes:
    lines = ["graph G {"]
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("ascii")


def _json_bytes(g: UnitaryCayleyGraph) -> bytes:
    payload = {
        "ring": g.ring.spec.text(),
        "n": g.n,
        "edges": [[u, v] for u, v in g.edges()],
        "degree": g.reg_degree,
    }
    return (json.dumps(payload, separators=(",", ":")) + "\n").encode("ascii")


EXPORT_FORMATS = ("g6", "dimacs", "dot", "json")


def export_graph(g: UnitaryCayleyGraph, fmt: str) -> bytes:
    """Serialize the graph; fmt is one of g6, dimacs, dot, json."""
    if fmt in ("g6", "graph6"):
        return _graph6_bytes(g)
    if fmt == "dimacs":
        return _dimacs_bytes(g)
    if fmt == "dot":
        return _dot_bytes(g)
    if fmt == "json":
        return _json_bytes(g)
    raise FormatUnsupported(f"unknown export format {fmt!r}")


def import_graph_json(data) -> Graph:
    """Rebuild a plain graph from the JSON export (accepts str or bytes)."""
    if isinstance(data, bytes):
        data = data.decode("ascii")
    payload = json.loads(data)
    return Graph.from_edges(payload["n"], payload["edges"])
