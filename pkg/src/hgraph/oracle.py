"""Brute-force reference implementations.

Deliberately naive: dense boolean adjacency matrices, subset enumeration
and direct set-containment tests.  Nothing here touches the bucketed
structure, so the oracles stay independent of the code they check.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .errors import BadArity, SizeLimit

CENSUS_FIELDS = ("k", "d", "s", "p", "q", "y", "kbar", "dbar", "sbar", "qbar", "ybar")

# (edge count, sorted degree sequence) -> census field, for 4-vertex graphs
_FINGERPRINTS = {
    (6, (3, 3, 3, 3)): "k",
    (5, (2, 2, 3, 3)): "d",
    (4, (2, 2, 2, 2)): "s",
    (3, (1, 1, 2, 2)): "p",
    (4, (1, 2, 2, 3)): "q",
    (3, (1, 1, 1, 3)): "y",
    (0, (0, 0, 0, 0)): "kbar",
    (1, (0, 0, 1, 1)): "dbar",
    (2, (1, 1, 1, 1)): "sbar",
    (2, (0, 1, 1, 2)): "qbar",
    (3, (0, 2, 2, 2)): "ybar",
}


class DenseGraph:
    """Graph on vertices ``0..n-1`` stored as a symmetric boolean matrix."""

    def __init__(self, n, edges=()):
        self.n = n
        self.adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            self.add_edge(u, v)

    @classmethod
    def from_matrix(cls, adj):
        adj = np.asarray(adj, dtype=bool)
        if adj.shape[0] != adj.shape[1] or (adj != adj.T).any() or adj.diagonal().any():
            raise ValueError("adjacency matrix must be square, symmetric, zero diagonal")
        g = cls(adj.shape[0])
        g.adj = adj.copy()
        return g

    def add_edge(self, u, v):
        if u == v:
            raise ValueError("self-loop")
        self.adj[u, v] = self.adj[v, u] = True

    def edges(self):
        iu, iv = np.nonzero(np.triu(self.adj, 1))
        return list(zip(iu.tolist(), iv.tolist()))

    def nbr_sets(self):
        return [set(np.flatnonzero(self.adj[v]).tolist()) for v in range(self.n)]

    def m(self):
        return int(np.triu(self.adj, 1).sum())

    def complement(self):
        c = ~self.adj
        np.fill_diagonal(c, False)
        return DenseGraph.from_matrix(c)

    def induced(self, verts):
        """Induced subgraph relabelled ``0..len(verts)-1`` plus the label map."""
        verts = list(verts)
        return DenseGraph.from_matrix(self.adj[np.ix_(verts, verts)]), verts


def _four_type(nb, quad):
    degs = []
    e2 = 0
    for a in quad:
        da = 0
        for b in quad:
            if b in nb[a]:
                da += 1
        degs.append(da)
        e2 += da
    degs.sort()
    return _FINGERPRINTS[(e2 // 2, tuple(degs))]


def bf_four_census(dg):
    """Counts of all 11 induced four-vertex graphs, keyed like ``CENSUS_FIELDS``."""
    nb = dg.nbr_sets()
    out = dict.fromkeys(CENSUS_FIELDS, 0)
    for quad in combinations(range(dg.n), 4):
        out[_four_type(nb, quad)] += 1
    return out


def bf_vertex_census(dg, v):
    """Per-vertex counts, keyed ``k3 d2 d3 q1 q2 q3 y1 y3``.

    A key like ``q2`` counts induced paws containing ``v`` in which ``v``
    has degree 2.
    """
    nb = dg.nbr_sets()
    out = dict.fromkeys(("k3", "d2", "d3", "q1", "q2", "q3", "y1", "y3"), 0)
    others = [u for u in range(dg.n) if u != v]
    for trio in combinations(others, 3):
        kind = _four_type(nb, (v,) + trio)
        if kind in ("k", "d", "q", "y"):
            dv = sum(1 for u in trio if u in nb[v])
            key = "k" if kind == "k" else kind
            out[f"{key}{dv}"] = out.get(f"{key}{dv}", 0) + 1
    return out


def bf_cliques(dg, k):
    """All k-subsets inducing a complete graph.

    Subsets are grown in increasing vertex order and abandoned as soon as
    the newest vertex misses an earlier one.
    """
    if k < 2:
        raise BadArity(f"clique size must be >= 2, got {k}")
    adj = dg.adj
    found = set()

    def grow(sub, cand):
        if len(sub) == k:
            found.add(tuple(sub))
            return
        for v in np.flatnonzero(cand).tolist():
            nxt = cand & adj[v]
            nxt[: v + 1] = False
            grow(sub + [v], nxt)

    grow([], np.ones(dg.n, dtype=bool))
    return found


def bf_triangles(dg):
    return bf_cliques(dg, 3)


def bf_edge_degrees(dg):
    nb = dg.nbr_sets()
    return {(u, v): len(nb[u] & nb[v]) for u, v in dg.edges()}


def bf_diamond(dg):
    """First four-subset (lexicographic) inducing a diamond, else None."""
    nb = dg.nbr_sets()
    for quad in combinations(range(dg.n), 4):
        if _four_type(nb, quad) == "d":
            return quad
    return None


def bf_maximal_cliques(dg):
    """All maximal cliques with at least two vertices (Bron-Kerbosch, no pivot)."""
    nb = dg.nbr_sets()
    out = set()

    def expand(r, p, x):
        if not p and not x:
            if len(r) >= 2:
                out.add(frozenset(r))
            return
        for v in sorted(p):
            expand(r | {v}, p & nb[v], x & nb[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(range(dg.n)), set())
    return out


def _closed(nb, v):
    return nb[v] | {v}


def _dominates(nb, w, v):
    """True when ``v`` is dominated by its neighbour ``w``."""
    return w in nb[v] and _closed(nb, v) <= _closed(nb, w)


def bf_dominated(dg):
    nb = dg.nbr_sets()
    return {v for v in range(dg.n) if any(_dominates(nb, w, v) for w in nb[v])}


def bf_simplicial(dg):
    nb = dg.nbr_sets()
    return {v for v in range(dg.n) if all(_dominates(nb, w, v) for w in nb[v])}


def _comparable(nb, a, b):
    ca, cb = _closed(nb, a), _closed(nb, b)
    return ca <= cb or cb <= ca


def bf_simple(dg):
    nb = dg.nbr_sets()
    out = set()
    for v in bf_simplicial(dg):
        if all(_comparable(nb, a, b) for a, b in combinations(sorted(nb[v]), 2)):
            out.add(v)
    return out


def bf_mu(dg):
    """For every vertex, the number of incomparable adjacent pairs in N(v)."""
    nb = dg.nbr_sets()
    mu = {}
    for v in range(dg.n):
        mu[v] = sum(
            1
            for a, b in combinations(sorted(nb[v]), 2)
            if b in nb[a] and not _comparable(nb, a, b)
        )
    return mu


def bf_edge_nbhd_sizes(dg):
    nb = dg.nbr_sets()
    return {
        v: sum(1 for a, b in combinations(sorted(nb[v]), 2) if b in nb[a])
        for v in range(dg.n)
    }


def _greedy_removal(nb, alive, pick):
    order = []
    while alive:
        sub = {v: nb[v] & alive for v in alive}
        cand = sorted(v for v in alive if pick(sub, v))
        if not cand:
            break
        order.append(cand[0])
        alive = alive - {cand[0]}
    return order, alive


def _is_dominated(sub, v):
    cv = sub[v] | {v}
    return any(cv <= (sub[w] | {w}) for w in sub[v])


def _is_simple(sub, v):
    cv = sub[v] | {v}
    if not all(cv <= (sub[w] | {w}) for w in sub[v]):
        return False
    return all(
        (sub[a] | {a}) <= (sub[b] | {b}) or (sub[b] | {b}) <= (sub[a] | {a})
        for a, b in combinations(sorted(sub[v]), 2)
    )


def bf_copwin(dg):
    """Greedy dismantling with definition-level domination checks."""
    order, rest = _greedy_removal(dg.nbr_sets(), set(range(dg.n)), _is_dominated)
    return len(rest) == 1


def bf_strongly_chordal(dg):
    order, rest = _greedy_removal(dg.nbr_sets(), set(range(dg.n)), _is_simple)
    return not rest


def is_dominated_in(nb, v, alive):
    """Whether ``v`` is dominated inside ``G[alive]`` (``nb`` are full neighbour sets)."""
    return _is_dominated({u: nb[u] & alive for u in alive}, v)


def is_simple_in(nb, v, alive):
    return _is_simple({u: nb[u] & alive for u in alive}, v)


def gen_random(n, p, seed):
    """Erdos-Renyi G(n, p), deterministic for a fixed seed."""
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < p, 1)
    return DenseGraph.from_matrix(upper | upper.T)


def gen_all(n):
    """Every labelled graph on ``n`` vertices, ``2 ** C(n, 2)`` of them."""
    if n > 8:
        raise SizeLimit(f"gen_all supports n <= 8, got {n}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield DenseGraph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
