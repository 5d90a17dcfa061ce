"""Degree-bucketed dynamic adjacency (the h-graph).

Every vertex ``v`` keeps its neighbours split by degree.  Neighbours of
degree ``i < d(v)`` live in a bucket keyed ``i``; the buckets form a
doubly linked family ordered by key.  Neighbours of degree ``>= d(v)``
share a single *high* bucket ``H(v)``.  A request for key ``i >= d(v)``
resolves to the high bucket.

Each neighbour entry (a :class:`Cell`) knows its twin (the entry for the
reverse direction), the bucket holding that twin, the record of the
neighbour and the payload shared by both directions of the edge.  With
these references every splice done while degrees change is O(1), so
inserting or removing an edge costs O(h(G)) and building a whole graph
costs O(n + a(G) m), for a(G) the arboricity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DuplicateEdge,
    DuplicateVertex,
    SelfLoop,
    UnknownEdge,
    UnknownNeighbor,
    UnknownVertex,
)

__all__ = [
    "Bucket",
    "Cell",
    "EdgePayload",
    "HGraph",
    "OpCounters",
    "VertexRecord",
    "degeneracy",
    "h_index",
    "new_graph",
]


class EdgePayload:
    """Data shared by both directions of an edge.

    ``edge_degree`` and ``clique_ref`` are slots owned by higher modules;
    the core structure never reads them.
    """

    __slots__ = ("ends", "edge_degree", "clique_ref", "mark")

    def __init__(self, ends):
        self.ends = ends
        self.edge_degree = 0
        self.clique_ref = None
        self.mark = 0

    def __repr__(self):
        return f"EdgePayload({self.ends}, d={self.edge_degree})"


class Cell:
    __slots__ = ("neighbor", "node", "twin", "bucket", "payload", "prev", "next")

    def __init__(self, node, payload):
        self.neighbor = node.id
        self.node = node
        self.payload = payload
        self.twin = None
        self.bucket = None  # bucket physically holding ``twin``
        self.prev = None
        self.next = None

    def __repr__(self):
        return f"Cell(->{self.neighbor})"


class Bucket:
    """Doubly linked list of cells; also a node of the owner's bucket family.

    ``key`` is ``None`` for the high bucket.
    """

    __slots__ = ("key", "owner", "head", "tail", "size", "prev", "next")

    def __init__(self, key, owner):
        self.key = key
        self.owner = owner
        self.head = None
        self.tail = None
        self.size = 0
        self.prev = None
        self.next = None

    def append(self, cell):
        cell.prev = self.tail
        cell.next = None
        if self.tail is None:
            self.head = cell
        else:
            self.tail.next = cell
        self.tail = cell
        self.size += 1

    def unlink(self, cell):
        if cell.prev is None:
            self.head = cell.next
        else:
            cell.prev.next = cell.next
        if cell.next is None:
            self.tail = cell.prev
        else:
            cell.next.prev = cell.prev
        cell.prev = cell.next = None
        self.size -= 1

    def absorb(self, other):
        """Append every cell of ``other`` in O(1), leaving ``other`` empty."""
        if other.head is None:
            return
        if self.tail is None:
            self.head = other.head
        else:
            self.tail.next = other.head
            other.head.prev = self.tail
        self.tail = other.tail
        self.size += other.size
        other.head = other.tail = None
        other.size = 0

    def __iter__(self):
        cell = self.head
        while cell is not None:
            yield cell
            cell = cell.next

    def __len__(self):
        return self.size

    def __repr__(self):
        key = "H" if self.key is None else self.key
        return f"Bucket({self.owner.id}, {key}, size={self.size})"


class VertexRecord:
    __slots__ = ("id", "degree", "first", "last", "high", "payload")

    def __init__(self, vid):
        self.id = vid
        self.degree = 0
        self.first = None  # low bucket with the smallest key
        self.last = None
        self.high = Bucket(None, self)
        self.payload = None

    def low_buckets(self):
        b = self.first
        while b is not None:
            yield b
            b = b.next

    def cells(self):
        for b in self.low_buckets():
            yield from b
        yield from self.high

    def _insert_bucket_before(self, ref, bucket):
        """Insert ``bucket`` before ``ref`` (or at the tail if ``ref`` is None)."""
        if ref is None:
            bucket.prev = self.last
            bucket.next = None
            if self.last is None:
                self.first = bucket
            else:
                self.last.next = bucket
            self.last = bucket
            return
        bucket.next = ref
        bucket.prev = ref.prev
        if ref.prev is None:
            self.first = bucket
        else:
            ref.prev.next = bucket
        ref.prev = bucket

    def _remove_bucket(self, bucket):
        if bucket.prev is None:
            self.first = bucket.next
        else:
            bucket.prev.next = bucket.next
        if bucket.next is None:
            self.last = bucket.prev
        else:
            bucket.next.prev = bucket.prev
        bucket.prev = bucket.next = None

    def __repr__(self):
        return f"VertexRecord({self.id}, d={self.degree})"


@dataclass
class OpCounters:
    """Instrumentation tallies.

    ``h_steps`` counts cells visited while walking high buckets (and cells
    re-homed between buckets), ``family_steps`` counts buckets visited
    while walking a bucket family, ``probes`` counts cells inspected by
    adjacency queries.
    """

    h_steps: int = 0
    family_steps: int = 0
    probes: int = 0

    @property
    def total(self):
        return self.h_steps + self.family_steps + self.probes

    def reset(self):
        self.h_steps = self.family_steps = self.probes = 0

    def snapshot(self):
        return OpCounters(self.h_steps, self.family_steps, self.probes)

    def __sub__(self, other):
        return OpCounters(
            self.h_steps - other.h_steps,
            self.family_steps - other.family_steps,
            self.probes - other.probes,
        )


def _edge_key(u, v):
    return (u, v) if u < v else (v, u)


class HGraph:
    """Dynamic simple undirected graph on caller-supplied integer ids.

    Mutations require exclusive access; concurrent readers are fine while
    no mutation is running.
    """

    def __init__(self):
        self._v = {}
        self.m = 0
        self.counters = OpCounters()

    @classmethod
    def from_edges(cls, edges, vertices=()):
        g = cls()
        for v in vertices:
            if v not in g._v:
                g.vertex_insert(v)
        for u, v in edges:
            for x in (u, v):
                if x not in g._v:
                    g.vertex_insert(x)
            g.edge_insert(u, v)
        return g

    def copy(self):
        g = HGraph()
        for v in sorted(self._v):
            g.vertex_insert(v)
        for u, v in self.edges():
            g.edge_insert(u, v)
        return g

    # -- basic queries -------------------------------------------------

    @property
    def n(self):
        return len(self._v)

    def __len__(self):
        return len(self._v)

    def __contains__(self, v):
        return v in self._v

    def __iter__(self):
        return iter(self._v)

    def vertices(self):
        return list(self._v)

    def record(self, v):
        try:
            return self._v[v]
        except KeyError:
            raise UnknownVertex(f"vertex {v} is not in the graph") from None

    def degree(self, v):
        return self.record(v).degree

    def neighbors(self, v):
        """All neighbours of ``v``: low buckets in key order, then ``H(v)``."""
        return [c.neighbor for c in self.record(v).cells()]

    def edges(self):
        """Every edge once, as a sorted ``(u, v)`` pair with ``u < v``."""
        out = []
        for rec in self._v.values():
            for c in rec.cells():
                if rec.id < c.neighbor:
                    out.append((rec.id, c.neighbor))
        out.sort()
        return out

    def edge_payloads(self):
        """Every edge payload once (unordered)."""
        for rec in self._v.values():
            for c in rec.cells():
                if rec.id < c.neighbor:
                    yield c.payload

    def degrees(self):
        return {v: r.degree for v, r in self._v.items()}

    # -- vertex operations ---------------------------------------------

    def vertex_insert(self, v, nbrs=()):
        """Insert ``v`` adjacent to every vertex of ``nbrs``."""
        if v in self._v:
            raise DuplicateVertex(f"vertex {v} already present")
        nbrs = list(dict.fromkeys(nbrs))
        for u in nbrs:
            if u == v:
                raise SelfLoop(f"vertex {v} listed as its own neighbour")
            if u not in self._v:
                raise UnknownNeighbor(f"neighbour {u} of {v} is not in the graph")
        self._v[v] = VertexRecord(v)
        for u in nbrs:
            self.edge_insert(v, u)

    def vertex_remove(self, v):
        rec = self.record(v)
        while rec.high.head is not None or rec.first is not None:
            cell = rec.first.head if rec.first is not None else rec.high.head
            self._remove_edge(rec, cell)
        del self._v[v]

    # -- edge operations -----------------------------------------------

    def edge_insert(self, u, v):
        if u == v:
            raise SelfLoop(f"self-loop on {u}")
        ru, rv = self.record(u), self.record(v)
        if self._find_cell(ru, rv) is not None:
            raise DuplicateEdge(f"edge {u}-{v} already present")
        self._insert_edge(ru, rv)

    def edge_remove(self, u, v):
        ru, rv = self.record(u), self.record(v)
        cell = self._find_cell(ru, rv)
        if cell is None:
            raise UnknownEdge(f"edge {u}-{v} is not in the graph")
        self._remove_edge(ru if cell.node is rv else rv, cell)

    def _insert_edge(self, ru, rv):
        du, dv = ru.degree, rv.degree
        self._lift(ru)
        self._lift(rv)
        payload = EdgePayload(_edge_key(ru.id, rv.id))
        cu = Cell(rv, payload)  # lives with u, stands for v
        cv = Cell(ru, payload)
        cu.twin, cv.twin = cv, cu
        bu = self._bucket_for(ru, dv + 1, du + 1)
        bv = self._bucket_for(rv, du + 1, dv + 1)
        bu.append(cu)
        bv.append(cv)
        cu.bucket = bv
        cv.bucket = bu
        ru.degree = du + 1
        rv.degree = dv + 1
        self.m += 1
        return payload

    def _lift(self, x):
        """Reorganise buckets around ``x`` before ``d(x)`` grows by one.

        Neighbours of degree ``d(x)`` leave ``H(x)`` for a new low bucket
        keyed ``d(x)``; inside each ``z`` of ``H(x)`` the entry for ``x``
        moves from key ``d(x)`` to key ``d(x) + 1``.
        """
        d = x.degree
        fresh = None
        k = self.counters
        cell = x.high.head
        while cell is not None:
            nxt = cell.next
            k.h_steps += 1
            z = cell.node
            zd = z.degree
            if zd == d:
                # both keys alias H(z): x's entry stays put
                if fresh is None:
                    fresh = Bucket(d, x)
                    x._insert_bucket_before(None, fresh)
                x.high.unlink(cell)
                fresh.append(cell)
                cell.twin.bucket = fresh
            else:
                src = cell.bucket
                if d + 1 == zd:
                    dst = z.high
                else:
                    dst = src.next
                    if dst is None or dst.key != d + 1:
                        dst = Bucket(d + 1, z)
                        z._insert_bucket_before(src.next, dst)
                twin = cell.twin
                src.unlink(twin)
                dst.append(twin)
                cell.bucket = dst
                if src.size == 0:
                    z._remove_bucket(src)
            cell = nxt

    def _bucket_for(self, x, key, xdeg):
        """Bucket of ``x`` for neighbours of degree ``key`` once ``d(x) == xdeg``."""
        if key >= xdeg:
            return x.high
        k = self.counters
        b = x.first
        while b is not None and b.key < key:
            k.family_steps += 1
            b = b.next
        if b is not None and b.key == key:
            k.family_steps += 1
            return b
        nb = Bucket(key, x)
        x._insert_bucket_before(b, nb)
        return nb

    def _remove_edge(self, ru, cu):
        """Remove the edge whose entry in ``ru``'s structure is ``cu``."""
        rv = cu.node
        cv = cu.twin
        bu = cv.bucket  # holds cu
        bv = cu.bucket  # holds cv
        bu.unlink(cu)
        if bu.size == 0 and bu.key is not None:
            ru._remove_bucket(bu)
        bv.unlink(cv)
        if bv.size == 0 and bv.key is not None:
            rv._remove_bucket(bv)
        self._lower(ru)
        self._lower(rv)
        self.m -= 1
        return cu.payload

    def _lower(self, x):
        """Inverse of :meth:`_lift`, run after x lost an incident edge."""
        big = x.degree  # still the old degree
        small = big - 1
        k = self.counters
        cell = x.high.head
        while cell is not None:
            k.h_steps += 1
            z = cell.node
            src = cell.bucket
            if src is z.high:
                # d(z) == big: the target key small < d(z) is z's top low key
                dst = z.last
                if dst is None or dst.key != small:
                    dst = Bucket(small, z)
                    z._insert_bucket_before(None, dst)
            else:
                dst = src.prev
                if dst is None or dst.key != small:
                    dst = Bucket(small, z)
                    z._insert_bucket_before(src, dst)
            twin = cell.twin
            src.unlink(twin)
            dst.append(twin)
            cell.bucket = dst
            if src.size == 0 and src.key is not None:
                z._remove_bucket(src)
            cell = cell.next
        top = x.last
        if top is not None and top.key == small:
            x._remove_bucket(top)
            cell = top.head
            while cell is not None:
                k.h_steps += 1
                cell.twin.bucket = x.high
                cell = cell.next
            x.high.absorb(top)
        x.degree = small

    # -- adjacency -----------------------------------------------------

    def _find_cell(self, ru, rv):
        """Entry for the edge in the smaller-degree endpoint, or None.

        Equal degrees scan ``ru``.
        """
        a, b = (rv, ru) if rv.degree < ru.degree else (ru, rv)
        k = self.counters
        cell = a.high.head
        while cell is not None:
            k.probes += 1
            if cell.node is b:
                return cell
            cell = cell.next
        return None

    def adjacent(self, u, v):
        return self._find_cell(self.record(u), self.record(v)) is not None

    def payload(self, u, v):
        """The :class:`EdgePayload` of edge ``uv`` (O(h) lookup)."""
        cell = self._find_cell(self.record(u), self.record(v))
        if cell is None:
            raise UnknownEdge(f"edge {u}-{v} is not in the graph")
        return cell.payload

    def high_neighbors(self, v):
        return [c.neighbor for c in self.record(v).high]

    def low_neighbors(self, v):
        rec = self.record(v)
        return [c.neighbor for b in rec.low_buckets() for c in b]

    # -- neighbourhood structure ---------------------------------------

    def edges_among(self, verts):
        """Edges of ``G[verts]`` as ``(w, z, payload)`` triples, each once.

        ``w`` is reached by scanning ``H(w)`` for members of ``verts``.  An
        edge between equal-degree vertices is seen from both sides and is
        kept only from the endpoint earlier in ``verts``.  Costs
        ``O(|verts| h(G))``.
        """
        order = {}
        recs = []
        for w in verts:
            if w not in order:
                order[w] = len(recs)
                recs.append(self.record(w))
        out = []
        k = self.counters
        for i, rw in enumerate(recs):
            dw = rw.degree
            cell = rw.high.head
            while cell is not None:
                k.h_steps += 1
                j = order.get(cell.neighbor)
                if j is not None and (j > i or cell.node.degree > dw):
                    out.append((rw.id, cell.neighbor, cell.payload))
                cell = cell.next
        return out

    def _edge_neighborhood(self, v):
        return self.edges_among([c.neighbor for c in self.record(v).cells()])

    def edge_neighborhood(self, v):
        """``N'(v)``: edges with both ends adjacent to ``v``, as sorted pairs."""
        return {_edge_key(w, z) for w, z, _ in self._edge_neighborhood(v)}

    def induced_neighborhood_graph(self, v):
        """Adjacency sets of ``G[N(v)]``."""
        adj = {c.neighbor: set() for c in self.record(v).cells()}
        for w, z, _ in self.edges_among(list(adj)):
            adj[w].add(z)
            adj[z].add(w)
        return adj

    # -- diagnostics ---------------------------------------------------

    def check_structure(self):
        """Every violated structural invariant, as a human readable line."""
        issues = []
        holder = {}  # id(cell) -> bucket physically containing it
        pending = []  # (vertex, twin cell, bucket claimed to hold it)
        total = 0
        verts = self._v
        hg = h_index(r.degree for r in verts.values())
        for vid, rec in verts.items():
            if rec.id != vid:
                issues.append(f"vertex {vid}: record carries id {rec.id}")
            d = rec.degree
            size = 0
            prev_key = 0
            prev = None
            nonempty = 0
            b = rec.first
            while b is not None:
                if b.prev is not prev:
                    issues.append(f"vertex {vid}: bucket {b.key} has a broken back link")
                if b.owner is not rec:
                    issues.append(f"vertex {vid}: bucket {b.key} owned by another vertex")
                if b.key is None or not (prev_key < b.key <= d - 1):
                    issues.append(
                        f"vertex {vid}: bucket key {b.key} out of order or range"
                        f" (previous {prev_key}, degree {d})"
                    )
                if b.size == 0:
                    issues.append(f"vertex {vid}: empty bucket {b.key} stored")
                else:
                    nonempty += 1
                size += self._check_bucket(rec, b, holder, pending, issues)
                if b.key is not None:
                    prev_key = b.key
                prev = b
                b = b.next
            if rec.last is not prev:
                issues.append(f"vertex {vid}: family tail pointer is stale")
            if rec.high.owner is not rec or rec.high.key is not None:
                issues.append(f"vertex {vid}: high bucket is malformed")
            size += self._check_bucket(rec, rec.high, holder, pending, issues)
            if any(c.node.degree == d for c in rec.high):
                nonempty += 1
            if size != d:
                issues.append(f"vertex {vid}: degree {d} but buckets hold {size} cells")
            if nonempty > 2 * hg:
                issues.append(
                    f"vertex {vid}: {nonempty} nonempty degree classes exceed 2h = {2 * hg}"
                )
            total += d
        if total != 2 * self.m:
            issues.append(f"degree sum {total} != 2m = {2 * self.m}")
        for vid, t, b in pending:
            if holder.get(id(t)) is not b:
                issues.append(f"edge {vid}-{t.twin.neighbor}: bucket reference does not hold the twin")
        return issues

    def _check_bucket(self, rec, b, holder, pending, issues):
        vid = rec.id
        d = rec.degree
        verts = self._v
        count = 0
        seen = set()
        prev = None
        c = b.head
        while c is not None:
            count += 1
            if count > b.size + 1:
                issues.append(f"vertex {vid}: bucket {b.key} list is longer than its size")
                break
            if c.prev is not prev:
                issues.append(f"vertex {vid}: cell {c.neighbor} has a broken back link")
            holder[id(c)] = b
            w = c.neighbor
            if w == vid:
                issues.append(f"vertex {vid}: self-loop entry")
            if verts.get(w) is not c.node:
                issues.append(f"vertex {vid}: cell {w} points at a stale vertex record")
            if w in seen:
                issues.append(f"vertex {vid}: neighbour {w} stored twice in bucket {b.key}")
            seen.add(w)
            dw = c.node.degree
            if b.key is None:
                if dw < d:
                    issues.append(
                        f"vertex {vid}: neighbour {w} of degree {dw} sits in H"
                        f" but d({vid}) = {d}"
                    )
            elif dw != b.key:
                issues.append(
                    f"vertex {vid}: neighbour {w} of degree {dw} sits in bucket {b.key}"
                )
            t = c.twin
            if t is None or t.twin is not c:
                issues.append(f"vertex {vid}: entry for {w} lacks a mutual twin")
            else:
                if t.neighbor != vid:
                    issues.append(f"vertex {vid}: twin of entry {w} names {t.neighbor}")
                if t.payload is not c.payload:
                    issues.append(f"edge {vid}-{w}: twins reference different payloads")
                if c.payload.ends != ((vid, w) if vid < w else (w, vid)):
                    issues.append(f"edge {vid}-{w}: payload labelled {c.payload.ends}")
                pending.append((vid, t, c.bucket))
            prev = c
            c = c.next
        if count != b.size:
            issues.append(f"vertex {vid}: bucket {b.key} size {b.size} but holds {count}")
        if b.tail is not prev:
            issues.append(f"vertex {vid}: bucket {b.key} tail pointer is stale")
        return count

    # -- statistics ----------------------------------------------------

    def stats(self):
        """``(n, m, min degree, h-index, degeneracy)``.

        Also checks ``d/2 < m/(n-1) <= h <= sqrt(2m)`` when ``n >= 2``; for
        edgeless graphs the first comparison degenerates to equality.
        """
        n, m = self.n, self.m
        degs = [r.degree for r in self._v.values()]
        delta = min(degs) if degs else 0
        h = h_index(degs)
        core = degeneracy(self)
        if n >= 2:
            if m:
                assert delta * (n - 1) < 2 * m, "min degree bound violated"
            assert m <= h * (n - 1), "m/(n-1) <= h violated"
            assert h * h <= 2 * m, "h <= sqrt(2m) violated"
        return n, m, delta, h, core


def h_index(degrees):
    """Largest h such that at least h of the given degrees are >= h."""
    s = sorted(degrees, reverse=True)
    h = 0
    for i, d in enumerate(s, 1):
        if d >= i:
            h = i
        else:
            break
    return h


def degeneracy(g):
    """Largest minimum degree over subgraphs, by repeated min-degree removal.

    Works on plain degree counts with bucket queues, O(n + m).
    """
    deg = g.degrees()
    if not deg:
        return 0
    adj = {v: g.neighbors(v) for v in deg}
    maxd = max(deg.values())
    buckets = [set() for _ in range(maxd + 1)]
    for v, d in deg.items():
        buckets[d].add(v)
    removed = set()
    best = 0
    lo = 0
    for _ in range(len(deg)):
        while not buckets[lo]:
            lo += 1
        v = buckets[lo].pop()
        best = max(best, lo)
        removed.add(v)
        for w in adj[v]:
            if w not in removed:
                dw = deg[w]
                buckets[dw].discard(w)
                deg[w] = dw - 1
                buckets[dw - 1].add(w)
                if dw - 1 < lo:
                    lo = dw - 1
    return best


def new_graph():
    return HGraph()
