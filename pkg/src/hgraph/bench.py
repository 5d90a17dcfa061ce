"""Operation-count measurements for build, edge degrees and teardown."""

from __future__ import annotations

from .census import _edge_degree_table
from .core import HGraph, degeneracy, h_index

PHASES = ("build", "edge_degrees", "teardown")


def measure(edges, n):
    """Counter totals per phase on the graph ``0..n-1`` with ``edges``.

    The graph is built by vertex insertions in id order and torn down by
    vertex removals in id order.  ``bound`` is ``n + (degeneracy + 1) m``.
    """
    later = [[] for _ in range(n)]
    for u, v in edges:
        a, b = (u, v) if u < v else (v, u)
        later[b].append(a)
    g = HGraph()
    for v in range(n):
        g.vertex_insert(v, later[v])
    out = {"n": n, "m": g.m, "build": g.counters.total}
    out["degeneracy"] = degeneracy(g)
    out["h_index"] = h_index(g.degrees().values())
    g.counters.reset()
    _edge_degree_table(g)
    out["edge_degrees"] = g.counters.total
    g.counters.reset()
    for v in range(n):
        g.vertex_remove(v)
    out["teardown"] = g.counters.total
    out["bound"] = n + (out["degeneracy"] + 1) * out["m"]
    return out
