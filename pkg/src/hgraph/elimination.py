"""Dominated, simplicial and simple vertices under vertex updates.

``v`` is dominated by a neighbour ``w`` when ``N[v]`` is inside ``N[w]``,
which for adjacent vertices reads ``d(v) - d(vw) == 1``.  Edge degrees
live in the edge payloads and are patched on every insertion or removal
by one walk over the edge neighbourhood of the changed vertex.  Each
vertex also stores ``mu``, the number of edges of its edge neighbourhood
whose endpoints are incomparable, so that simple vertices (simplicial
with ``mu == 0``) can be tracked without rescanning the graph.

Greedy removal of dominated vertices gives dismantlings and cop-win
orders; greedy removal of simple vertices gives simple elimination
orderings (strongly chordal recognition).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .census import _edge_degree_table, _vertex_census
from .core import HGraph
from .errors import DuplicateVertex, EmptyGraph, SelfLoop, UnknownNeighbor

__all__ = [
    "EliminationState",
    "OrderResult",
    "VertexData",
    "copwin_order",
    "dismantling",
    "elim_build",
    "simple_elimination_ordering",
]


class VertexData:
    __slots__ = ("dprime", "mu")

    def __init__(self, dprime=0, mu=0):
        self.dprime = dprime
        self.mu = mu

    def __repr__(self):
        return f"VertexData(dprime={self.dprime}, mu={self.mu})"


def _comparable(da, db, dab):
    return min(da, db) - dab == 1


class EliminationState:
    """An :class:`HGraph` with maintained edge degrees and the D/S/Q sets.

    ``fires`` counts pairs that stopped being comparable during insertions;
    over a replay of a whole graph it never exceeds the number of edges.
    """

    def __init__(self):
        self.graph = HGraph()
        self.D = set()
        self.S = set()
        self.Q = set()
        self.fires = 0
        self.unfires = 0
        self.touched = set()  # vertices refreshed by the last update

    @classmethod
    def from_graph(cls, g, replay=True):
        """Build from ``g``.

        With ``replay`` the vertices are inserted one at a time in id order;
        otherwise everything is computed from scratch on a copy.
        """
        if replay:
            s = cls()
            for v in sorted(g):
                s.vertex_insert(v, [u for u in g.neighbors(v) if u in s.graph])
            return s
        return cls._static(g)

    @classmethod
    def _static(cls, g):
        s = cls()
        h = s.graph = g.copy()
        for p, d in _edge_degree_table(h).items():
            p.edge_degree = d
        for v in h:
            rec = h.record(v)
            rec.payload = VertexData()
        for v in h:
            rec = h.record(v)
            data = rec.payload
            for w, z, p in h._edge_neighborhood(v):
                data.dprime += 1
                if not _comparable(h.degree(w), h.degree(z), p.edge_degree):
                    data.mu += 1
            dv = rec.degree
            doms = sum(1 for c in rec.cells() if dv - c.payload.edge_degree == 1)
            if doms:
                s.D.add(v)
            if doms == dv:
                s.S.add(v)
                if data.mu == 0:
                    s.Q.add(v)
        return s

    def copy(self):
        return EliminationState.from_graph(self.graph)

    # -- queries -------------------------------------------------------

    def dominated(self):
        """The live set of dominated vertices; do not mutate."""
        return self.D

    def simplicial(self):
        return self.S

    def simple(self):
        return self.Q

    def mu(self, v):
        return self.graph.record(v).payload.mu

    def edge_nbhd_size(self, v):
        return self.graph.record(v).payload.dprime

    def edge_degree(self, u, v):
        return self.graph.payload(u, v).edge_degree

    def vertex_census(self, v):
        """Per-vertex four-vertex census in O(d(v) h(G)) plus the K4 listing."""
        g = self.graph
        return _vertex_census(
            g, v, lambda p: p.edge_degree, lambda w: g.record(w).payload.dprime
        )

    # -- updates -------------------------------------------------------

    def vertex_insert(self, v, nbrs=()):
        g = self.graph
        if v in g:
            raise DuplicateVertex(f"vertex {v} already present")
        nbrs = list(dict.fromkeys(nbrs))
        for u in nbrs:
            if u == v:
                raise SelfLoop(f"vertex {v} listed as its own neighbour")
            if u not in g:
                raise UnknownNeighbor(f"neighbour {u} of {v} is not in the graph")
        nbset = set(nbrs)
        nprime = g.edges_among(nbrs)
        touched = set(nbrs)
        k = g.counters

        # pairs w in N(v), z outside, with N[w] strictly inside N[z]
        # lose comparability; then N(wz) = N(w) - {z}
        for w in nbrs:
            rw = g.record(w)
            dw = rw.degree
            cell = rw.high.head
            while cell is not None:
                k.h_steps += 1
                z = cell.node
                if z.id not in nbset:
                    p = cell.payload
                    dwz = p.edge_degree
                    if dw - dwz == 1 and z.degree - dwz > 1:
                        p.mark += 1
                        self.fires += 1
                        for c2 in rw.cells():
                            if c2.node is not z:
                                c2.node.payload.mu += 1
                                touched.add(c2.neighbor)
                cell = cell.next

        g.vertex_insert(v, nbrs)
        rv = g.record(v)
        rv.payload = VertexData(dprime=len(nprime))
        inner = {w: [] for w in nbrs}  # neighbours of w inside N(v)
        for w, z, p in nprime:
            inner[w].append(z)
            inner[z].append(w)
            p.edge_degree += 1
        dv = rv.degree
        cells = list(rv.cells())
        for c in cells:
            c.payload.edge_degree = len(inner[c.neighbor])
            c.node.payload.dprime += c.payload.edge_degree

        mu_v = 0
        for w, z, p in nprime:
            if not _comparable(g.degree(w), g.degree(z), p.edge_degree):
                mu_v += 1
        rv.payload.mu = mu_v
        # new edges vw enter N'(x) for every common neighbour x
        for c in cells:
            if not _comparable(dv, c.node.degree, c.payload.edge_degree):
                for x in inner[c.neighbor]:
                    g.record(x).payload.mu += 1

        dom = {}
        v_dom = 0
        for c in cells:
            w = c.node
            dvw = c.payload.edge_degree
            dom[w.id] = w.degree - dvw == 1
            if dv - dvw == 1:
                v_dom += 1
            if not dom[w.id]:
                self.S.discard(w.id)
        for w, z, p in nprime:
            if g.degree(w) - p.edge_degree == 1:
                dom[w] = True
            if g.degree(z) - p.edge_degree == 1:
                dom[z] = True
        for w, flag in dom.items():
            if flag:
                self.D.add(w)
            else:
                self.D.discard(w)
        if v_dom:
            self.D.add(v)
        if v_dom == dv:
            self.S.add(v)
        touched.add(v)
        self._refresh_simple(touched)
        self.touched = touched

    def vertex_remove(self, v):
        g = self.graph
        rv = g.record(v)
        dv = rv.degree
        cells = list(rv.cells())
        nbset = {c.neighbor for c in cells}
        nprime = g._edge_neighborhood(v)
        touched = set(nbset)
        k = g.counters

        # pairs w in N(v), z outside, that become comparable once v is gone;
        # afterwards N[w] is inside N[z], so N(wz) = N(w) - {v, z}
        for c in cells:
            rw = c.node
            dw = rw.degree
            cell = rw.high.head
            while cell is not None:
                k.h_steps += 1
                z = cell.node
                if z is not rv and z.id not in nbset:
                    dwz = cell.payload.edge_degree
                    if dw - dwz == 2 and z.degree - dwz > 1:
                        self.unfires += 1
                        for c2 in rw.cells():
                            x = c2.node
                            if x is not z and x is not rv:
                                x.payload.mu -= 1
                                touched.add(x.id)
                cell = cell.next

        inner = {w: [] for w in nbset}
        for w, z, _ in nprime:
            inner[w].append(z)
            inner[z].append(w)
        for c in cells:
            if not _comparable(dv, c.node.degree, c.payload.edge_degree):
                for x in inner[c.neighbor]:
                    g.record(x).payload.mu -= 1
        for _, _, p in nprime:
            p.edge_degree -= 1
        for c in cells:
            c.node.payload.dprime -= c.payload.edge_degree

        g.vertex_remove(v)
        self.D.discard(v)
        self.S.discard(v)
        self.Q.discard(v)
        for c in cells:
            rw = c.node
            dw = rw.degree
            dominated = False
            simplicial = rw.first is None
            cell = rw.high.head
            while cell is not None:
                k.h_steps += 1
                if dw - cell.payload.edge_degree == 1:
                    dominated = True
                else:
                    simplicial = False
                cell = cell.next
            w = rw.id
            if dominated:
                self.D.add(w)
            else:
                self.D.discard(w)
            if simplicial:
                self.S.add(w)
            else:
                self.S.discard(w)
        touched.discard(v)
        self._refresh_simple(touched)
        self.touched = touched

    def _refresh_simple(self, verts):
        g = self.graph
        for x in verts:
            if x in self.S and g.record(x).payload.mu == 0:
                self.Q.add(x)
            else:
                self.Q.discard(x)

    def check(self):
        """Consistency of the maintained values against a fresh recomputation."""
        issues = []
        fresh = EliminationState._static(self.graph)
        g = self.graph
        for p in g.edge_payloads():
            q = fresh.graph.payload(*p.ends)
            if p.edge_degree != q.edge_degree:
                issues.append(f"edge {p.ends}: degree {p.edge_degree} != {q.edge_degree}")
        for v in g:
            a, b = g.record(v).payload, fresh.graph.record(v).payload
            if (a.dprime, a.mu) != (b.dprime, b.mu):
                issues.append(f"vertex {v}: {a} != {b}")
        for name in ("D", "S", "Q"):
            if getattr(self, name) != getattr(fresh, name):
                issues.append(f"set {name} differs")
        return issues


def elim_build(g, replay=True):
    return EliminationState.from_graph(g, replay=replay)


@dataclass
class OrderResult:
    """Outcome of a greedy elimination.

    ``found`` says whether a full order exists.  ``order`` is then the whole
    ordering; otherwise it is the removal sequence that led to ``residual``,
    the graph nothing more could be removed from.
    """

    found: bool
    order: list
    residual: HGraph

    def __bool__(self):
        return self.found


def _greedy(state, pool):
    heap = list(pool)
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        if v not in pool:
            continue
        state.vertex_remove(v)
        order.append(v)
        # simplicity can appear two steps away, so push every vertex whose status was refreshed
        for w in state.touched:
            if w in pool:
                heapq.heappush(heap, w)
    return order


def dismantling(g):
    """Remove dominated vertices (smallest id first) until none is left.

    Returns ``(residual graph, removal order)``.
    """
    state = EliminationState.from_graph(g)
    order = _greedy(state, state.D)
    return state.graph, order


def copwin_order(g):
    if not len(g):
        raise EmptyGraph("cop-win order of an empty graph")
    residual, order = dismantling(g)
    if residual.n == 1:
        return OrderResult(True, order + residual.vertices(), residual)
    return OrderResult(False, order, residual)


def simple_elimination_ordering(g):
    if not len(g):
        raise EmptyGraph("simple elimination ordering of an empty graph")
    state = EliminationState.from_graph(g)
    order = _greedy(state, state.Q)
    return OrderResult(state.graph.n == 0, order, state.graph)
