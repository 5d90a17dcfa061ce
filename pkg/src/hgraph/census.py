"""Triangle and clique listing plus the four-vertex induced-subgraph census.

The global census evaluates ten linear identities whose left-hand sides
need only degrees, edge degrees, edge-neighbourhood sizes and the
four-cycle triples, fixes the number of K4's by listing them, and solves
the remaining 10x10 system exactly.
"""

from __future__ import annotations

from dataclasses import astuple, dataclass, fields
from fractions import Fraction
from functools import lru_cache
from math import comb, lcm

from .core import HGraph
from .errors import BadArity, InternalInconsistency

__all__ = [
    "CENSUS_FIELDS",
    "C4Triple",
    "CensusReport",
    "VertexCensus",
    "all_vertex_census",
    "cliques_containing",
    "edge_degrees",
    "enumerate_c4_triples",
    "global_census",
    "list_cliques",
    "list_triangles",
    "solve_exact",
    "triangles_containing",
    "vertex_census",
]


@dataclass(frozen=True)
class CensusReport:
    """Induced counts of every graph on four vertices.

    ``k d s p q y`` are K4, diamond, square, P4, paw and claw; the ``bar``
    fields count their complements (P4 is self-complementary).
    """

    k: int = 0
    d: int = 0
    s: int = 0
    p: int = 0
    q: int = 0
    y: int = 0
    kbar: int = 0
    dbar: int = 0
    sbar: int = 0
    qbar: int = 0
    ybar: int = 0

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def total(self):
        return sum(astuple(self))


CENSUS_FIELDS = tuple(f.name for f in fields(CensusReport))


@dataclass(frozen=True)
class VertexCensus:
    """Induced K4/diamond/paw/claw counts through one vertex.

    The digit is the degree of that vertex inside the subgraph, e.g.
    ``q1`` counts paws where it is the pendant.
    """

    k3: int = 0
    d2: int = 0
    d3: int = 0
    q1: int = 0
    q2: int = 0
    q3: int = 0
    y1: int = 0
    y3: int = 0

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class C4Triple:
    low: int
    far: int
    common: frozenset


def _tri(*vs):
    return tuple(sorted(vs))


# -- listing -------------------------------------------------------------


def triangles_containing(g, v):
    return {_tri(v, w, z) for w, z, _ in g._edge_neighborhood(v)}


def list_triangles(g):
    """All triangles, found while re-inserting the vertices one at a time.

    Each triangle is reported by the insertion of its last vertex.
    """
    scratch = HGraph()
    out = set()
    for v in sorted(g):
        scratch.vertex_insert(v, [u for u in g.neighbors(v) if u in scratch])
        out |= triangles_containing(scratch, v)
    return out


def _rank_order(g):
    return sorted(g, key=lambda v: (-g.degree(v), v))


def _cliques_in(adj, k):
    """Every k-clique of a small adjacency-set graph, as tuples.

    Vertices are taken in non-increasing degree; each is expanded into its
    neighbourhood and then deleted.
    """
    if k == 1:
        for v in adj:
            yield (v,)
        return
    if k == 2:
        for v, nb in adj.items():
            for w in nb:
                if v < w:
                    yield (v, w)
        return
    adj = {v: set(nb) for v, nb in adj.items()}
    for u in sorted(adj, key=lambda v: (-len(adj[v]), v)):
        nb = adj.pop(u)
        if len(nb) >= k - 1:
            sub = {w: adj[w] & nb for w in nb}
            for c in _cliques_in(sub, k - 1):
                yield (u,) + c
        for w in nb:
            adj[w].discard(u)


def cliques_containing(g, v, k):
    if k < 2:
        raise BadArity(f"clique size must be >= 2, got {k}")
    if k == 2:
        return {_tri(v, w) for w in g.neighbors(v)}
    sub = g.induced_neighborhood_graph(v)
    return {_tri(v, *c) for c in _cliques_in(sub, k - 1)}


def list_cliques(g, k):
    """All k-cliques; each reported at its first vertex in degree rank order."""
    if k < 2:
        raise BadArity(f"clique size must be >= 2, got {k}")
    scratch = g.copy()
    out = set()
    for v in _rank_order(g):
        out |= cliques_containing(scratch, v, k)
        scratch.vertex_remove(v)
    return out


# -- edge degrees and four-cycles ----------------------------------------


def _edge_degree_table(g):
    """``payload -> d(uv)``: every triangle found from each apex bumps its far edge."""
    table = dict.fromkeys(g.edge_payloads(), 0)
    for v in g:
        for _, _, p in g._edge_neighborhood(v):
            table[p] += 1
    return table


def edge_degrees(g):
    return {p.ends: d for p, d in _edge_degree_table(g).items()}


def enumerate_c4_triples(g):
    """Four-cycle triples ``(v, w, L)``.

    Vertices are ranked by non-increasing degree (ties by id).  ``L`` holds
    the common neighbours of ``v`` and ``w`` ranked after ``v``, and only
    triples with ``|L| >= 2`` are kept.  ``sum C(|L|, 2) = 3k + d + s``.
    """
    adj = {v: set(g.neighbors(v)) for v in g}
    out = []
    for v in _rank_order(g):
        walks = {}
        for u in adj[v]:
            for w in adj[u]:
                if w != v:
                    walks.setdefault(w, []).append(u)
        for w, mids in walks.items():
            if len(mids) >= 2:
                out.append(C4Triple(v, w, frozenset(mids)))
        for u in adj.pop(v):
            adj[u].discard(v)
    return out


# -- exact linear algebra ------------------------------------------------


def solve_exact(a, b):
    """Solve ``a x = b`` over the rationals by Gaussian elimination.

    Pivots on the entry of largest magnitude in each column.  Raises
    ``ValueError`` for singular systems.
    """
    n = len(a)
    rows = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(rows[r][col]))
        if rows[piv][col] == 0:
            raise ValueError("singular system")
        rows[col], rows[piv] = rows[piv], rows[col]
        pr = rows[col]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col] / pr[col]
                rows[r] = [x - f * y for x, y in zip(rows[r], pr)]
    return [rows[i][n] / rows[i][i] for i in range(n)]


# coefficient rows for the unknowns k d s p q y kbar dbar sbar qbar ybar
_SYSTEM = (
    (3, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    (6, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 4, 1, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 1, 3, 0, 0, 0, 0, 0),
    (6, 5, 4, 1, 3, 3, 0, 0, 0, 0, 0),
    (12, 6, 0, 0, 3, 0, 0, 0, 0, 0, 3),
    (12, 8, 4, 2, 5, 3, 0, 0, 0, 1, 3),
    (3, 2, 2, 1, 1, 0, 0, 0, 1, 0, 0),
    (0, 0, 1, 1, 0, 0, 3, 2, 2, 1, 0),
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
)


@lru_cache(maxsize=None)
def _reduced_inverse():
    """Integer matrix ``M`` and denominator ``q`` with ``x = M b / q``.

    ``b`` is the right-hand side once the K4 column has been moved over.
    Obtained by solving the reduced system against each unit vector.
    """
    a = [row[1:] for row in _SYSTEM]
    n = len(a)
    cols = [solve_exact(a, [int(i == j) for i in range(n)]) for j in range(n)]
    q = 1
    for col in cols:
        for x in col:
            q = lcm(q, x.denominator)
    mat = tuple(tuple(int(cols[j][i] * q) for j in range(n)) for i in range(n))
    return mat, q


def census_lhs(g, k4=None):
    """The ten left-hand sides, in equation order."""
    n, m = g.n, g.m
    deg = g.degrees()
    table = _edge_degree_table(g)
    l1 = sum(comb(len(t.common), 2) for t in enumerate_c4_triples(g))
    l2 = l3 = l4 = l5 = 0
    tri_sum = 0
    for p, dvw in table.items():
        a, b = p.ends
        da, db = deg[a], deg[b]
        # vertices adjacent to one endpoint and not to the other, neither endpoint counted
        dab = da - dvw - 1
        dba = db - dvw - 1
        l2 += comb(dvw, 2)
        l3 += dab * dba
        l4 += comb(dab, 2) + comb(dba, 2)
        l5 += comb(da + db - dvw - 2, 2)
        tri_sum += dvw
    # sum over v of d'(v) = (1/2) sum_v sum_w d(vw) = sum over edges of d(vw)
    l6 = tri_sum * (n - 3)
    pairs = sum(comb(d, 2) for d in deg.values())
    l7 = pairs * (n - 3)
    l8 = comb(m, 2) - pairs
    mbar = comb(n, 2) - m
    l9 = comb(mbar, 2) - sum(comb(n - 1 - d, 2) for d in deg.values())
    l10 = comb(n, 4)
    return [l1, l2, l3, l4, l5, l6, l7, l8, l9, l10]


def global_census(g):
    k = len(list_cliques(g, 4)) if g.n >= 4 else 0
    lhs = census_lhs(g)
    rhs = [y - row[0] * k for y, row in zip(lhs, _SYSTEM)]
    mat, q = _reduced_inverse()
    vals = [k]
    for row in mat:
        num = sum(c * y for c, y in zip(row, rhs))
        if num % q:
            raise InternalInconsistency(f"non-integral census value {Fraction(num, q)}")
        vals.append(num // q)
    if min(vals) < 0:
        raise InternalInconsistency(f"negative census value in {vals}")
    report = CensusReport(*vals)
    if report.total() != comb(g.n, 4):
        raise InternalInconsistency("census does not sum to C(n, 4)")
    return report


# -- per-vertex census ---------------------------------------------------


def _vertex_census(g, v, edge_degree_of, dprime_of):
    rec = g.record(v)
    dv = rec.degree
    nbhd = g._edge_neighborhood(v)
    inner = {c.neighbor: 0 for c in rec.cells()}  # d(vw) = degree of w in G[N(v)]
    d2_sum = 0
    for w, z, p in nbhd:
        inner[w] += 1
        inner[z] += 1
        d2_sum += edge_degree_of(p) - 1
    k3 = len(cliques_containing(g, v, 4)) if dv >= 3 else 0
    s_d3 = s_q3 = s_q2 = s_q1 = s_y3 = s_y1 = 0
    for c in rec.cells():
        w = c.neighbor
        dvw = inner[w]
        out_v = dv - dvw - 1
        out_w = c.node.degree - dvw - 1
        s_d3 += comb(dvw, 2)
        s_q3 += dvw * out_v
        s_q2 += dvw * out_w
        s_q1 += dprime_of(w) - dvw
        s_y3 += comb(out_v, 2)
        s_y1 += comb(out_w, 2)
    d3 = s_d3 - 3 * k3
    d2 = d2_sum - 3 * k3
    q3, r3 = divmod(s_q3 - 2 * d3, 2)
    q2 = s_q2 - 2 * d2
    q1 = s_q1 - 3 * k3 - 2 * d2
    y3, r4 = divmod(s_y3 - q3, 3)
    y1 = s_y1 - q1
    if r3 or r4:
        raise InternalInconsistency(f"vertex {v}: non-integral paw or claw count")
    out = VertexCensus(k3, d2, d3, q1, q2, q3, y1, y3)
    if min(astuple(out)) < 0:
        raise InternalInconsistency(f"vertex {v}: negative count in {out}")
    return out


def _dprime_table(g, table):
    dp = dict.fromkeys(g, 0)
    for p, d in table.items():
        a, b = p.ends
        dp[a] += d
        dp[b] += d
    return {v: x // 2 for v, x in dp.items()}


def vertex_census(g, v, edge_degree=None, edge_nbhd_size=None):
    """Counts of induced K4, diamonds, paws and claws through ``v``.

    ``edge_degree`` maps sorted edge pairs to common-neighbour counts and
    ``edge_nbhd_size`` maps vertices to ``|N'(w)|``; both are computed for
    the whole graph when omitted (O(n + a(G) m)), otherwise the call costs
    O(d(v) h(G)) plus the K4 listing.
    """
    g.record(v)
    if edge_degree is None:
        table = _edge_degree_table(g)
        edge_degree = {p.ends: d for p, d in table.items()}
        if edge_nbhd_size is None:
            edge_nbhd_size = _dprime_table(g, table)
    if edge_nbhd_size is None:
        edge_nbhd_size = dict.fromkeys(g, 0)
        for (a, b), d in edge_degree.items():
            edge_nbhd_size[a] += d
            edge_nbhd_size[b] += d
        edge_nbhd_size = {x: s // 2 for x, s in edge_nbhd_size.items()}
    return _vertex_census(
        g, v, lambda p: edge_degree[p.ends], edge_nbhd_size.__getitem__
    )


def all_vertex_census(g):
    table = _edge_degree_table(g)
    dp = _dprime_table(g, table)
    return {v: _vertex_census(g, v, table.__getitem__, dp.__getitem__) for v in g}
