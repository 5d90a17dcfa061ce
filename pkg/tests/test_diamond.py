import random
from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import from_dense, small_graphs, to_dense
from hgraph import (
    DiamondFreeGraph,
    DuplicateEdge,
    DuplicateVertex,
    NotDiamondFree,
    UnknownEdge,
    UnknownNeighbor,
    df_new,
    recognize_diamond_free,
)
from hgraph import generators as gen
from hgraph import oracle as O


def fam(s):
    return sorted(sorted(c) for c in s.clique_family())


def induces_diamond(adj, cert):
    vs = cert.vertices
    present = sum(1 for a, b in combinations(vs, 2) if adj(a, b))
    return len(set(vs)) == 4 and present == 5 and not adj(*cert.missing)


def built(edges):
    return DiamondFreeGraph.from_graph(gen.build(edges))


def test_new_state():
    s = df_new()
    assert s.graph.n == 0 and s.cliques == {}
    s.vertex_insert(0)
    assert s.clique_family() == set()
    s.vertex_insert(1, [0])
    assert fam(s) == [[0, 1]]


def test_vertex_insert_examples():
    s = built(gen.complete(3))
    cert = s.vertex_insert(9, [0, 1])
    assert cert.vertices == (0, 1, 2, 9) and cert.missing == (2, 9)
    assert 9 not in s.graph
    assert s.vertex_insert(9, [0, 1, 2]) is None
    assert fam(s) == [[0, 1, 2, 9]]

    s = built([(0, 1), (2, 3)])
    assert s.vertex_insert(9, [0, 1, 2, 3]) is None
    assert fam(s) == [[0, 1, 9], [2, 3, 9]]


def test_vertex_insert_two_cliques_sharing_a_vertex():
    # triangles 0 1 2 and 2 3 4 share 2; a vertex on 0 1 2 3 4 sees both
    s = built([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    before = s.snapshot()
    cert = s.vertex_insert(9, [0, 1, 2, 3, 4])
    assert cert is not None and s.snapshot() == before
    adj = lambda a, b: (9 in (a, b) and ({a, b} - {9}) <= {0, 1, 2, 3, 4}) or (
        9 not in (a, b) and s.graph.adjacent(a, b))
    assert induces_diamond(adj, cert)


def test_vertex_insert_errors():
    s = built(gen.path(3))
    with pytest.raises(DuplicateVertex):
        s.vertex_insert(0, [])
    with pytest.raises(UnknownNeighbor):
        s.vertex_insert(5, [8])


def test_vertex_remove_examples():
    s = built(gen.complete(4))
    s.vertex_remove(0)
    assert fam(s) == [[1, 2, 3]]
    s = built([(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    s.vertex_remove(0)
    assert fam(s) == [[1, 2], [3, 4]]
    assert s.check() == []


def test_edge_insert_examples():
    s = built(gen.cycle(4))
    cert = s.edge_insert(0, 2)
    assert cert.vertices == (0, 1, 2, 3) and cert.missing == (1, 3)
    s = built([(0, 1), (1, 2)])
    assert s.edge_insert(0, 2) is None
    assert fam(s) == [[0, 1, 2]]
    # triangles u z x and v z y share only z; adding uv is refused
    u, v, z, x, y = range(5)
    s = built([(u, z), (u, x), (z, x), (v, z), (v, y), (z, y)])
    cert = s.edge_insert(u, v)
    adj = lambda a, b: {a, b} == {u, v} or s.graph.adjacent(a, b)
    assert induces_diamond(adj, cert) and set(cert.vertices) >= {u, v, z}
    with pytest.raises(DuplicateEdge):
        s.edge_insert(u, z)


def test_edge_remove_examples():
    s = built(gen.complete(3))
    assert s.edge_remove(0, 1) is None
    assert fam(s) == [[0, 2], [1, 2]]
    s = built(gen.complete(4))
    before = s.snapshot()
    cert = s.edge_remove(0, 1)
    assert cert.vertices == (0, 1, 2, 3) and cert.missing == (0, 1)
    assert s.snapshot() == before
    s.vertex_insert(9)
    with pytest.raises(UnknownEdge):
        s.edge_remove(0, 9)


def test_queries():
    s = built(gen.complete(4))
    assert fam(s) == [[0, 1, 2, 3]]
    cid = s.clique_of_edge(2, 3)
    assert s.clique(cid) == frozenset(range(4))
    s = built([(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    assert fam(s) == [[0, 1, 2], [0, 3, 4]]
    assert s.clique_of_edge(1, 2) != s.clique_of_edge(3, 4)


def test_recognition_examples():
    for n in range(1, 8):
        assert recognize_diamond_free(gen.build(gen.complete(n))) is None
    w = gen.build(gen.wheel(4))
    cert = recognize_diamond_free(w)
    assert induces_diamond(w.adjacent, cert)
    with pytest.raises(NotDiamondFree):
        DiamondFreeGraph.from_graph(w)


@settings(max_examples=300, deadline=None)
@given(small_graphs(max_n=8))
def test_recognition_matches_oracle(dg):
    g = from_dense(dg)
    cert = recognize_diamond_free(g)
    assert (cert is None) == (O.bf_diamond(dg) is None)
    if cert is None:
        s = DiamondFreeGraph.from_graph(g)
        assert s.clique_family() == O.bf_maximal_cliques(dg)
        assert s.check() == []
    else:
        assert induces_diamond(g.adjacent, cert)


def test_random_dynamic_trace():
    rng = random.Random(2)
    s = df_new()
    for _ in range(600):
        live = sorted(s.graph)
        before = s.snapshot()
        r = rng.random()
        if r < 0.3 or len(live) < 2:
            v = rng.randrange(20)
            if v in s.graph:
                continue
            nb = [u for u in live if rng.random() < 0.3]
            cert = s.vertex_insert(v, nb)
            adj = lambda a, b: (v in (a, b) and ({a, b} - {v}) <= set(nb)) or (
                v not in (a, b) and s.graph.adjacent(a, b))
        elif r < 0.4:
            s.vertex_remove(rng.choice(live))
            cert = None
        elif r < 0.7:
            u, v = rng.sample(live, 2)
            if s.graph.adjacent(u, v):
                continue
            cert = s.edge_insert(u, v)
            adj = lambda a, b: {a, b} == {u, v} or s.graph.adjacent(a, b)
        else:
            es = s.graph.edges()
            if not es:
                continue
            u, v = rng.choice(es)
            cert = s.edge_remove(u, v)
            adj = lambda a, b: {a, b} != {u, v} and s.graph.adjacent(a, b)
        if cert is not None:
            assert induces_diamond(adj, cert)
            assert s.snapshot() == before
        assert s.check() == [] and s.graph.check_structure() == []
        dg, ids = to_dense(s.graph)
        assert O.bf_diamond(dg) is None
        assert s.clique_family() == {frozenset(ids[i] for i in c) for c in O.bf_maximal_cliques(dg)}


def test_teardown_empties_registry():
    rng = random.Random(5)
    s = built([(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (3, 5), (5, 6)])
    order = list(s.graph)
    rng.shuffle(order)
    for v in order:
        s.vertex_remove(v)
        assert s.check() == []
    assert s.cliques == {}
