import random

import pytest
from hypothesis import given, settings

from conftest import from_dense, random_graph, small_graphs, to_dense
from hgraph import (
    EliminationState,
    EmptyGraph,
    copwin_order,
    dismantling,
    elim_build,
    simple_elimination_ordering,
)
from hgraph import generators as gen
from hgraph import oracle as O


def mapped(s, ids):
    return {ids[i] for i in s}


def agrees(state):
    dg, ids = to_dense(state.graph)
    assert state.D == mapped(O.bf_dominated(dg), ids)
    assert state.S == mapped(O.bf_simplicial(dg), ids)
    assert state.Q == mapped(O.bf_simple(dg), ids)
    mu = O.bf_mu(dg)
    dp = O.bf_edge_nbhd_sizes(dg)
    ed = O.bf_edge_degrees(dg)
    for i, v in enumerate(ids):
        assert state.mu(v) == mu[i]
        assert state.edge_nbhd_size(v) == dp[i]
    for (a, b), d in ed.items():
        assert state.edge_degree(ids[a], ids[b]) == d
    assert state.check() == []


def test_build_examples():
    s = elim_build(gen.build(gen.path(3)))
    assert s.D == s.S == s.Q == {0, 2}
    s = elim_build(gen.build(gen.cycle(4)))
    assert s.D == s.S == s.Q == set()
    s = elim_build(gen.build(gen.sun3()))
    assert s.S >= {3, 4, 5} and s.Q == set() and s.mu(3) == 1


@pytest.mark.parametrize("replay", [True, False])
def test_build_modes_agree(replay):
    for seed in range(20):
        agrees(elim_build(random_graph(12, 0.4, seed), replay=replay))


def test_insert_examples():
    s = elim_build(gen.build(gen.cycle(4)))
    s.vertex_insert(9, [0, 1, 2, 3])
    assert 9 not in s.S and s.D == {0, 1, 2, 3}
    s = elim_build(gen.build(gen.complete(3)))
    s.vertex_insert(9, [0])
    assert 9 in s.Q and {1, 2} <= s.Q and 0 not in s.S
    agrees(s)


def test_remove_examples():
    s = elim_build(gen.build(gen.complete(4)))
    s.vertex_remove(0)
    assert s.Q == {1, 2, 3}
    s = elim_build(gen.build(gen.star(4)))
    s.vertex_remove(1)
    assert {2, 3, 4} <= s.Q
    agrees(s)


def test_sets_on_families():
    k = elim_build(gen.build(gen.complete(5)))
    assert k.dominated() == k.simplicial() == k.simple() == set(range(5))
    c = elim_build(gen.build(gen.cycle(5)))
    assert c.dominated() == c.simplicial() == c.simple() == set()
    sun = elim_build(gen.build(gen.sun3()))
    assert sun.simplicial() == {3, 4, 5} and sun.simple() == set()


def test_isolated_vertices():
    s = elim_build(gen.build([], 3))
    assert s.D == set() and s.S == s.Q == {0, 1, 2}
    assert not copwin_order(gen.build([], 2)).found
    assert copwin_order(gen.build([], 1)).found


def test_random_traces_against_oracle():
    rng = random.Random(21)
    for _ in range(20):
        s = EliminationState()
        for _ in range(60):
            live = sorted(s.graph)
            if rng.random() < 0.6 or len(live) < 2:
                v = rng.randrange(25)
                if v in s.graph:
                    continue
                s.vertex_insert(v, [u for u in live if rng.random() < 0.4])
            else:
                s.vertex_remove(rng.choice(live))
            agrees(s)


def test_insertion_fires_at_most_m():
    for seed in range(30):
        g = random_graph(30, [0.1, 0.3, 0.6][seed % 3], seed)
        s = elim_build(g)
        assert s.fires <= g.m
        assert all(p.mark <= 1 for p in s.graph.edge_payloads())


def test_vertex_census_from_state():
    from hgraph import vertex_census

    g = random_graph(12, 0.45, 3)
    s = elim_build(g)
    for v in g:
        assert s.vertex_census(v) == vertex_census(g, v)


def test_dismantling_examples():
    residual, order = dismantling(gen.build(gen.random_tree(15, 1)))
    assert residual.n == 1 and len(order) == 14
    residual, order = dismantling(gen.build(gen.cycle(4)))
    assert residual.edges() == gen.build(gen.cycle(4)).edges() and order == []


def test_dismantlings_have_equal_shape():
    rng = random.Random(3)
    for seed in range(10):
        g = random_graph(12, 0.35, seed)
        shapes = set()
        for _ in range(20):
            perm = list(range(12))
            rng.shuffle(perm)
            h = gen.build([(perm[a], perm[b]) for a, b in g.edges()], 12)
            res, _ = dismantling(h)
            shapes.add((res.n, tuple(sorted(res.degrees().values()))))
        assert len(shapes) == 1


def dominated_in(g, order):
    adj = {v: set(g.neighbors(v)) for v in g}
    for i, v in enumerate(order[:-1]):
        if not O.is_dominated_in(adj, v, set(order[i:])):
            return False
    return True


def simple_in(g, order):
    adj = {v: set(g.neighbors(v)) for v in g}
    return all(O.is_simple_in(adj, v, set(order[i:])) for i, v in enumerate(order))


def test_copwin_families():
    t = gen.build(gen.random_tree(20, 4))
    r = copwin_order(t)
    assert r.found and sorted(r.order) == list(range(20)) and dominated_in(t, r.order)
    for n in (4, 5, 8):
        r = copwin_order(gen.build(gen.cycle(n)))
        assert not r.found and r.residual.n == n
    with pytest.raises(EmptyGraph):
        copwin_order(gen.build([]))


def test_strongly_chordal_families():
    for g in (gen.build(gen.random_tree(20, 2)), gen.build(gen.complete(6))):
        r = simple_elimination_ordering(g)
        assert r.found and simple_in(g, r.order)
    for n in (4, 6):
        assert not simple_elimination_ordering(gen.build(gen.cycle(n))).found
    sun = gen.build(gen.sun3())
    r = simple_elimination_ordering(sun)
    assert not r.found and r.residual.n == 6
    assert copwin_order(sun).found
    with pytest.raises(EmptyGraph):
        simple_elimination_ordering(gen.build([]))


@settings(max_examples=300, deadline=None)
@given(small_graphs(max_n=8))
def test_verdicts_match_oracle(dg):
    if dg.n == 0:
        return
    g = from_dense(dg)
    cw = copwin_order(g)
    sc = simple_elimination_ordering(g)
    assert cw.found == O.bf_copwin(dg)
    assert sc.found == O.bf_strongly_chordal(dg)
    if cw.found:
        assert dominated_in(g, cw.order)
    if sc.found:
        assert simple_in(g, sc.order)


def test_simple_vertex_two_steps_from_the_removed_one():
    # removing 2, 3, 5 makes 0 simple although 0 is not adjacent to any of them
    g = gen.build([(0, 1), (0, 3), (0, 4), (0, 6), (1, 6), (2, 6), (4, 6), (5, 6)])
    sc = simple_elimination_ordering(g)
    assert sc.found and simple_in(g, sc.order)


def test_verdicts_exhaustive_small():
    for n in range(1, 7):
        for dg in O.gen_all(n):
            g = from_dense(dg)
            assert copwin_order(g).found == O.bf_copwin(dg)
            assert simple_elimination_ordering(g).found == O.bf_strongly_chordal(dg)


def test_verdicts_independent_of_labels():
    rng = random.Random(9)
    for seed in range(15):
        g = random_graph(10, 0.45, seed)
        base = (copwin_order(g).found, simple_elimination_ordering(g).found)
        for _ in range(5):
            perm = list(range(10))
            rng.shuffle(perm)
            h = gen.build([(perm[a], perm[b]) for a, b in g.edges()], 10)
            assert (copwin_order(h).found, simple_elimination_ordering(h).found) == base
