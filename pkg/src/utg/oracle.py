"""Exact brute-force graph computations used as ground truth for every closed form.

Everything here works purely on bitset adjacency; nothing consults ring
factorizations.  All searches are deterministic (fixed vertex order,
lexicographic branching) so witnesses are reproducible.
"""

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import IncompleteColoring, LimitExceeded
from .graphs import Graph, permute_is_automorphism

DOMINATION_WITNESS_CAP = 8


@dataclass(frozen=True)
class OracleLimits:
    max_vertices_coloring: int = 64
    max_edges_edge_coloring: int = 60
    max_vertices_strong: int = 12
    max_dominating_search: int = 40
    max_clique_order: int = 8


DEFAULT_LIMITS = OracleLimits()


@dataclass(frozen=True)
class CliqueCensus:
    counts: tuple  # counts[k] = number of cliques of order k, k = 0..m_max
    max_order: int


@dataclass(frozen=True)
class GraphMetrics:
    girth: int | None
    component_count: int
    diameters: tuple
    bipartite: bool


@dataclass(frozen=True)
class DominationResult:
    min_size: int
    witness: tuple
    clique_order: int | None
    clique_witness: tuple | None


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _is_clique_mask(adj, mask: int) -> bool:
    rest = mask
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        rest ^= low
        if adj[v] & mask != mask ^ low:
            return False
    return True


def clique_census(g: Graph, m_max: int, limits: OracleLimits = DEFAULT_LIMITS) -> CliqueCensus:
    """Count cliques of each order 1..m_max by candidate-set recursion.

    When the candidate set induces a clique the remaining counts collapse to
    binomials, which keeps dense graphs (complete quotients) tractable.
    """
    if m_max > limits.max_clique_order:
        raise LimitExceeded(f"clique census capped at order {limits.max_clique_order}")
    adj = g.adj
    counts = [0] * (m_max + 1)
    counts[0] = 1

    def rec(cand: int, size: int):
        if size >= m_max or not cand:
            return
        if _is_clique_mask(adj, cand):
            c = cand.bit_count()
            for j in range(1, min(c, m_max - size) + 1):
                counts[size + j] += comb(c, j)
            return
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            counts[size + 1] += 1
            rec(rest & adj[v], size + 1)

    rec((1 << g.n) - 1, 0)
    return CliqueCensus(tuple(counts), max_clique(g)[0])


def max_clique(g: Graph) -> tuple[int, tuple]:
    """Exact maximum clique (order, lexicographically first witness found)."""
    adj = g.adj
    best_size = 0
    best_mask = 0

    def color_bound(cand: int):
        order, bounds = [], []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                order.append(v)
                bounds.append(color)
                avail &= ~adj[v]
                avail ^= low
                rest ^= low
        return order, bounds

    def expand(rmask: int, size: int, cand: int):
        nonlocal best_size, best_mask
        if not cand:
            if size > best_size:
                best_size, best_mask = size, rmask
            return
        order, bounds = color_bound(cand)
        local = cand
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best_size:
                return
            v = order[i]
            vbit = 1 << v
            nxt = local & adj[v]
            if nxt:
                expand(rmask | vbit, size + 1, nxt)
            elif size + 1 > best_size:
                best_size, best_mask = size + 1, rmask | vbit
            local ^= vbit

    expand(0, 0, (1 << g.n) - 1)
    return best_size, tuple(_bits(best_mask))


def k_colorable(n: int, adj, k: int):
    """A proper vertex coloring with at most k colors, or None.

    Backtracking with saturation-first vertex selection and a cap on opening
    new colors; deterministic.
    """
    if n == 0:
        return []
    if k <= 0:
        return None
    colors = [-1] * n
    sat = [0] * n  # bitmask of colors on colored neighbors

    def pick():
        best, key = -1, None
        for v in range(n):
            if colors[v] < 0:
                k2 = (sat[v].bit_count(), adj[v].bit_count(), -v)
                if key is None or k2 > key:
                    key, best = k2, v
        return best

    def rec(left: int, used: int):
        if left == 0:
            return True
        v = pick()
        avail = ~sat[v] & ((1 << min(k, used + 1)) - 1)
        while avail:
            low = avail & -avail
            c = low.bit_length() - 1
            avail ^= low
            colors[v] = c
            touched = []
            for u in _bits(adj[v]):
                if colors[u] < 0 and not sat[u] >> c & 1:
                    sat[u] |= low
                    touched.append(u)
            if rec(left - 1, max(used, c + 1)):
                return True
            for u in touched:
                sat[u] ^= low
            colors[v] = -1
        return False

    return colors if rec(n, 0) else None


def chromatic_number(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Exact chromatic number, seeded with the maximum clique as lower bound."""
    if g.n > limits.max_vertices_coloring:
        raise LimitExceeded(f"coloring capped at {limits.max_vertices_coloring} vertices")
    if g.edge_count() == 0:
        return 1 if g.n else 0
    lb = max_clique(g)[0]
    k = lb
    while k_colorable(g.n, g.adj, k) is None:
        k += 1
    return k


def _line_graph(edges):
    m = len(edges)
    ladj = [0] * m
    for i in range(m):
        u1, v1 = edges[i]
        for j in range(i + 1, m):
            u2, v2 = edges[j]
            if u1 == u2 or u1 == v2 or v1 == u2 or v1 == v2:
                ladj[i] |= 1 << j
                ladj[j] |= 1 << i
    return ladj


def chromatic_index(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Exact chromatic index: maximum degree if the line graph admits it, else one more.

    A color class is a matching of at most floor(n/2) edges, which settles
    odd-order regular graphs without any search.
    """
    edges = list(g.edges())
    m = len(edges)
    if m == 0:
        return 0
    if m > limits.max_edges_edge_coloring:
        raise LimitExceeded(f"edge coloring capped at {limits.max_edges_edge_coloring} edges")
    delta = max(g.degree(u) for u in range(g.n))
    if delta * (g.n // 2) < m:
        return delta + 1
    if k_colorable(m, _line_graph(edges), delta) is not None:
        return delta
    return delta + 1


def oracle_coloring(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> tuple[int, int]:
    """Exact (chromatic number, chromatic index) in one call."""
    return chromatic_number(g, limits), chromatic_index(g, limits)


def graph_metrics(g: Graph) -> GraphMetrics:
    """Girth (None for forests), components, per-component diameters, bipartiteness."""
    n = g.n
    adj = g.adj

    def bfs(src):
        dist = {src: 0}
        q = deque([src])
        while q:
            u = q.popleft()
            for v in _bits(adj[u]):
                if v not in dist:
                    dist[v] = dist[u] + 1
                    q.append(v)
        return dist

    # components in order of smallest vertex
    seen = set()
    comps = []
    for v in range(n):
        if v not in seen:
            comp = bfs(v)
            seen.update(comp)
            comps.append(sorted(comp))

    diameters = []
    for comp in comps:
        ecc = 0
        for v in comp:
            dist = bfs(v)
            ecc = max(ecc, max(dist.values()))
        diameters.append(ecc)

    # bipartite via 2-coloring
    color = {}
    bipartite = True
    for comp in comps:
        src = comp[0]
        color[src] = 0
        q = deque([src])
        while q and bipartite:
            u = q.popleft()
            for v in _bits(adj[u]):
                if v not in color:
                    color[v] = color[u] ^ 1
                    q.append(v)
                elif color[v] == color[u]:
                    bipartite = False
                    break
        if not bipartite:
            break

    # girth: shortest cycle over BFS trees from every vertex
    girth = None
    for s in range(n):
        dist = {s: 0}
        parent = {s: -1}
        q = deque([s])
        while q:
            u = q.popleft()
            if girth is not None and 2 * dist[u] >= girth:
                break
            for v in _bits(adj[u]):
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    q.append(v)
                elif v != parent[u]:
                    cyc = dist[u] + dist[v] + 1
                    if girth is None or cyc < girth:
                        girth = cyc

    return GraphMetrics(girth, len(comps), tuple(diameters), bipartite)


def common_neighbors(g: Graph, u: int, v: int) -> int:
    """Number of common neighbors; equals the degree when u == v."""
    return (g.adj[u] & g.adj[v]).bit_count()


def dominates(g: Graph, verts) -> bool:
    """True iff every vertex is in verts or adjacent to a member of verts."""
    covered = 0
    for v in verts:
        covered |= g.adj[v] | 1 << v
    return covered == (1 << g.n) - 1


def cliques_of_order(g: Graph, t: int):
    """All cliques of order t as ascending vertex tuples, lexicographic order."""
    adj = g.adj

    def rec(prefix, cand, need):
        if need == 0:
            yield tuple(prefix)
            return
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            if rest.bit_count() + 1 < need:
                return
            prefix.append(v)
            yield from rec(prefix, rest & adj[v], need - 1)
            prefix.pop()

    yield from rec([], (1 << g.n) - 1, t)


def minimum_dominating_set(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> tuple[int, tuple]:
    """Exact minimum dominating set by increasing-size search with pruning."""
    n = g.n
    if n > limits.max_dominating_search:
        raise LimitExceeded(f"domination search capped at {limits.max_dominating_search} vertices")
    closed = [g.adj[v] | 1 << v for v in range(n)]
    full = (1 << n) - 1
    max_cover = max(c.bit_count() for c in closed)

    def search(budget: int, dominated: int, chosen: list):
        if dominated == full:
            return tuple(chosen)
        if budget == 0:
            return None
        if (full ^ dominated).bit_count() > budget * max_cover:
            return None
        u = ((full ^ dominated) & -(full ^ dominated)).bit_length() - 1
        for w in _bits(closed[u]):
            chosen.append(w)
            got = search(budget - 1, dominated | closed[w], chosen)
            if got:
                return got
            chosen.pop()
        return None

    for size in range(1, DOMINATION_WITNESS_CAP + 1):
        got = search(size, 0, [])
        if got:
            return size, got
    raise LimitExceeded(f"no dominating set of size <= {DOMINATION_WITNESS_CAP} found")


def minimum_dominating_clique(g: Graph, limits: OracleLimits = DEFAULT_LIMITS):
    """Smallest dominating clique (order, witness), or None when none exists.

    Cliques are enumerated in increasing order; absence is certified once some
    order has no cliques at all.
    """
    n = g.n
    if n > limits.max_dominating_search:
        raise LimitExceeded(f"domination search capped at {limits.max_dominating_search} vertices")
    for t in range(1, n + 1):
        any_clique = False
        for verts in cliques_of_order(g, t):
            any_clique = True
            if dominates(g, verts):
                return t, verts
        if not any_clique:
            return None
    return None


def oracle_domination(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> DominationResult:
    size, witness = minimum_dominating_set(g, limits)
    cl = minimum_dominating_clique(g, limits)
    if cl is None:
        return DominationResult(size, witness, None, None)
    return DominationResult(size, witness, cl[0], cl[1])


def _rainbow_colorable(n: int, adj, blocks) -> bool:
    """Proper coloring where every block of the partition uses all k colors once."""
    k = len(blocks[0])
    colors = [-1] * n
    block_of = [0] * n
    for b, block in enumerate(blocks):
        for v in block:
            block_of[v] = b
    order = [v for block in blocks for v in block]
    used_in_block = [0] * len(blocks)
    sat = [0] * n

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        avail = ~(sat[v] | used_in_block[block_of[v]]) & ((1 << k) - 1)
        while avail:
            low = avail & -avail
            avail ^= low
            colors[v] = low.bit_length() - 1
            used_in_block[block_of[v]] |= low
            touched = []
            for u in _bits(adj[v]):
                if colors[u] < 0 and not sat[u] & low:
                    sat[u] |= low
                    touched.append(u)
            if rec(i + 1):
                return True
            for u in touched:
                sat[u] ^= low
            used_in_block[block_of[v]] ^= low
            colors[v] = -1
        return False

    return rec(0)


def strong_k_colorable(g: Graph, k: int, limits: OracleLimits = DEFAULT_LIMITS) -> bool:
    """Whether every size-k partition of the padded graph admits a rainbow proper coloring.

    Pads with isolated vertices to a multiple of k, then enumerates partitions
    canonically (smallest unassigned vertex opens each block).
    """
    pad = (-g.n) % k
    n = g.n + pad
    if n > limits.max_vertices_strong:
        raise LimitExceeded(f"strong colorability capped at {limits.max_vertices_strong} vertices")
    adj = list(g.adj) + [0] * pad
    full = (1 << n) - 1

    def partitions(mask, blocks):
        if not mask:
            yield blocks
            return
        low = mask & -mask
        u = low.bit_length() - 1
        rest_bits = list(_bits(mask ^ low))
        for combo in combinations(rest_bits, k - 1):
            block = (u, *combo)
            sub = mask ^ low
            for w in combo:
                sub ^= 1 << w
            yield from partitions(sub, blocks + [block])

    for blocks in partitions(full, []):
        if not _rainbow_colorable(n, adj, blocks):
            return False
    return True


def _edges_conflict(adj, e1, e2) -> bool:
    u1, v1 = e1
    u2, v2 = e2
    if u1 == u2 or u1 == v2 or v1 == u2 or v1 == v2:
        return True
    pair = 1 << u2 | 1 << v2
    return bool((adj[u1] | adj[v1]) & pair)


def strong_edge_chromatic(g: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Exact strong chromatic index: chromatic number of the edge conflict graph."""
    edges = list(g.edges())
    m = len(edges)
    if m > limits.max_edges_edge_coloring:
        raise LimitExceeded(f"strong edge coloring capped at {limits.max_edges_edge_coloring} edges")
    if m == 0:
        return 0
    cadj = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if _edges_conflict(g.adj, edges[i], edges[j]):
                cadj[i] |= 1 << j
                cadj[j] |= 1 << i
    conflict = Graph(m, cadj)
    k = max_clique(conflict)[0]
    while k_colorable(m, cadj, k) is None:
        k += 1
    return k


def verify_strong_edge_coloring(g: Graph, coloring) -> bool:
    """Check that no two conflicting edges share a color.

    coloring maps each edge (u, v) with u < v to a color; a missing edge
    raises IncompleteColoring.
    """
    edges = list(g.edges())
    for e in edges:
        if e not in coloring:
            raise IncompleteColoring(f"edge {e} has no color")
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            if coloring[edges[i]] == coloring[edges[j]] and _edges_conflict(g.adj, edges[i], edges[j]):
                return False
    return True


# adjacency-preservation check for vertex maps lives with the graph type
is_automorphism = permute_is_automorphism
