"""Fully dynamic diamond-free graphs with their maximal-clique partition.

A graph is diamond-free exactly when every edge lies in one maximal
clique, so an accepted state keeps every edge's payload pointing at the
clique that contains it.  Every update either keeps the graph
diamond-free or is refused with four vertices inducing a diamond; a
refused update leaves the state untouched.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import HGraph
from .errors import (
    DuplicateEdge,
    DuplicateVertex,
    HGraphError,
    SelfLoop,
    UnknownNeighbor,
)

__all__ = [
    "CliqueRecord",
    "DiamondCertificate",
    "DiamondFreeGraph",
    "NotDiamondFree",
    "df_new",
    "recognize_diamond_free",
]


@dataclass(frozen=True)
class DiamondCertificate:
    """Four vertices inducing a diamond; ``missing`` is its one non-edge."""

    vertices: tuple
    missing: tuple

    @classmethod
    def of(cls, a, b, c, d, missing):
        return cls(tuple(sorted((a, b, c, d))), tuple(sorted(missing)))

    def __str__(self):
        return " ".join(map(str, self.vertices))


class NotDiamondFree(HGraphError):
    def __init__(self, certificate):
        super().__init__(f"induced diamond on {certificate}")
        self.certificate = certificate


class CliqueRecord:
    __slots__ = ("id", "edges", "vertices", "c")

    def __init__(self, cid):
        self.id = cid
        self.edges = set()  # EdgePayload objects
        self.vertices = set()
        self.c = 0

    def __repr__(self):
        return f"CliqueRecord({self.id}, {sorted(self.vertices)})"


class DiamondFreeGraph:
    """An :class:`HGraph` kept diamond-free, with its maximal cliques.

    The clique family is available in O(1) and the clique of an edge is one
    payload dereference away.  Isolated vertices belong to no clique.
    """

    def __init__(self):
        self.graph = HGraph()
        self.cliques = {}
        self._next_id = 0

    @classmethod
    def from_graph(cls, g):
        """Insert the vertices of ``g`` in id order; raises :class:`NotDiamondFree`."""
        s = cls()
        for v in sorted(g):
            cert = s.vertex_insert(v, [u for u in g.neighbors(v) if u in s.graph])
            if cert is not None:
                raise NotDiamondFree(cert)
        return s

    def _clique(self):
        rec = CliqueRecord(self._next_id)
        self._next_id += 1
        self.cliques[rec.id] = rec
        return rec

    def _drop(self, rec):
        del self.cliques[rec.id]

    # -- vertices ----------------------------------------------------

    def vertex_insert(self, v, nbrs=()):
        """Insert ``v``; returns None, or a certificate and leaves the state alone.

        The edge neighbourhood of ``v`` is computed before ``v`` is added:
        every edge among ``nbrs`` is found by scanning the high buckets of
        its endpoints, so nothing has to be undone on refusal.
        """
        g = self.graph
        if v in g:
            raise DuplicateVertex(f"vertex {v} already present")
        nbrs = list(dict.fromkeys(nbrs))
        for u in nbrs:
            if u == v:
                raise SelfLoop(f"vertex {v} listed as its own neighbour")
            if u not in g:
                raise UnknownNeighbor(f"neighbour {u} of {v} is not in the graph")
        nprime = g.edges_among(nbrs)
        touched = []
        for _, _, p in nprime:
            rec = p.clique_ref
            if rec.c == 0:
                touched.append(rec)
            rec.c += 1
        try:
            for rec in touched:
                if rec.c != len(rec.edges):
                    # v sees some edge of rec but misses one of its vertices
                    nbset = set(nbrs)
                    x = min(u for u in rec.vertices if u not in nbset)
                    w, z = next((w, z) for w, z, p in nprime if p.clique_ref is rec)
                    return DiamondCertificate.of(v, x, w, z, missing=(v, x))
            owner = {}
            for w, z, p in nprime:
                rec = p.clique_ref
                for a in (w, z):
                    prev = owner.get(a)
                    if prev is None:
                        owner[a] = rec
                    elif prev is not rec:
                        # a is the only shared vertex; the other members never meet
                        x = min(u for u in rec.vertices if u != a)
                        y = min(u for u in prev.vertices if u != a)
                        return DiamondCertificate.of(v, a, x, y, missing=(x, y))
        finally:
            for rec in touched:
                rec.c = 0
        g.vertex_insert(v, nbrs)
        for cell in g.record(v).cells():
            rec = owner.get(cell.neighbor)
            if rec is None:
                rec = self._clique()
                rec.vertices.add(cell.neighbor)
            rec.edges.add(cell.payload)
            rec.vertices.add(v)
            cell.payload.clique_ref = rec
        return None

    def vertex_remove(self, v):
        rec_v = self.graph.record(v)
        for cell in rec_v.cells():
            rec = cell.payload.clique_ref
            rec.edges.discard(cell.payload)
            rec.vertices.discard(v)
            if not rec.edges and rec.id in self.cliques:
                self._drop(rec)
        self.graph.vertex_remove(v)

    # -- edges -------------------------------------------------------

    def edge_insert(self, u, v):
        g = self.graph
        if u == v:
            raise SelfLoop(f"self-loop on {u}")
        ru, rv = g.record(u), g.record(v)
        if g._find_cell(ru, rv) is not None:
            raise DuplicateEdge(f"edge {u}-{v} already present")
        at_u = {c.neighbor: c.payload for c in ru.cells()}
        common = [(c.neighbor, at_u[c.neighbor], c.payload) for c in rv.cells() if c.neighbor in at_u]
        if len(common) >= 2:
            (z1, _, _), (z2, _, _) = sorted(common)[:2]
            return DiamondCertificate.of(u, v, z1, z2, missing=(z1, z2))
        if common:
            z, puz, pvz = common[0]
            cuz, cvz = puz.clique_ref, pvz.clique_ref
            if len(cuz.edges) > 1:
                x = min(cuz.vertices - {u, z})
                return DiamondCertificate.of(u, v, z, x, missing=(v, x))
            if len(cvz.edges) > 1:
                x = min(cvz.vertices - {v, z})
                return DiamondCertificate.of(u, v, z, x, missing=(u, x))
        p = g._insert_edge(ru, rv)
        if common:
            rec = cuz
            rec.edges |= cvz.edges
            rec.vertices.add(v)
            pvz.clique_ref = rec
            self._drop(cvz)
        else:
            rec = self._clique()
            rec.vertices.update((u, v))
        rec.edges.add(p)
        p.clique_ref = rec
        return None

    def edge_remove(self, u, v):
        g = self.graph
        p = g.payload(u, v)
        rec = p.clique_ref
        extra = len(rec.vertices) - 2  # equals d(uv)
        if extra >= 2:
            z1, z2 = sorted(rec.vertices - {u, v})[:2]
            return DiamondCertificate.of(u, v, z1, z2, missing=(u, v))
        if extra == 1:
            self._drop(rec)
            for q in sorted(rec.edges, key=lambda e: e.ends):
                if q is not p:
                    part = self._clique()
                    part.edges.add(q)
                    part.vertices.update(q.ends)
                    q.clique_ref = part
        else:
            self._drop(rec)
        g.edge_remove(u, v)
        return None

    # -- queries -----------------------------------------------------

    def clique_family(self):
        return {frozenset(rec.vertices) for rec in self.cliques.values()}

    def clique_of_edge(self, u, v):
        return self.graph.payload(u, v).clique_ref.id

    def clique(self, cid):
        return frozenset(self.cliques[cid].vertices)

    def check(self):
        """Registry diagnostics: partition, completeness, counters at rest."""
        issues = []
        g = self.graph
        covered = 0
        for cid, rec in self.cliques.items():
            vs = sorted(rec.vertices)
            k = len(vs)
            if k < 2 or len(rec.edges) != k * (k - 1) // 2:
                issues.append(f"clique {cid}: {len(rec.edges)} edges on {k} vertices")
            if rec.c:
                issues.append(f"clique {cid}: counter left at {rec.c}")
            for p in rec.edges:
                if p.clique_ref is not rec:
                    issues.append(f"clique {cid}: edge {p.ends} points elsewhere")
                if not set(p.ends) <= rec.vertices:
                    issues.append(f"clique {cid}: edge {p.ends} leaves the vertex set")
            for i, a in enumerate(vs):
                for b in vs[i + 1:]:
                    if not g.adjacent(a, b):
                        issues.append(f"clique {cid}: {a} and {b} are not adjacent")
            covered += len(rec.edges)
        if covered != g.m:
            issues.append(f"cliques cover {covered} edges, graph has {g.m}")
        for p in g.edge_payloads():
            rec = p.clique_ref
            if rec is None or self.cliques.get(rec.id) is not rec:
                issues.append(f"edge {p.ends}: stale clique reference")
        return issues

    def snapshot(self):
        """Canonical serialisation of everything observable, bucket layout included."""
        g = self.graph
        layout = []
        for v in sorted(g):
            rec = g.record(v)
            fam = tuple((b.key, tuple(c.neighbor for c in b)) for b in rec.low_buckets())
            layout.append((v, rec.degree, fam, tuple(c.neighbor for c in rec.high)))
        cl = sorted((cid, tuple(sorted(r.vertices)), r.c) for cid, r in self.cliques.items())
        refs = sorted((p.ends, p.clique_ref.id) for p in g.edge_payloads())
        return repr((layout, cl, refs, self._next_id)).encode()


def df_new():
    return DiamondFreeGraph()


def recognize_diamond_free(g):
    """None if ``g`` is diamond-free, else a certificate from the first refusal."""
    try:
        DiamondFreeGraph.from_graph(g)
    except NotDiamondFree as exc:
        return exc.certificate
    return None
