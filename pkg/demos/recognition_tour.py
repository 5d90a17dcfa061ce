"""Diamond-free maintenance and elimination orderings on a few small graphs."""

from hgraph import DiamondFreeGraph, EliminationState, copwin_order, simple_elimination_ordering
from hgraph import generators as gen

s = DiamondFreeGraph()
for v in range(4):
    print("add", v, "->", s.vertex_insert(v, range(v)))  # K4, always fine
print("cliques:", sorted(sorted(c) for c in s.clique_family()))

s.vertex_insert(4, [0])
cert = s.edge_insert(4, 1)  # 0 1 4 triangle would hang off K4 through edge 01
print("rejected with", cert)
print("graph unchanged:", s.graph.edges())

print("remove 2-3 ->", s.edge_remove(2, 3))  # K4 minus an edge is a diamond
s.vertex_remove(3)
print("remove 1-2 after dropping 3 ->", s.edge_remove(1, 2))  # triangle 012 falls apart
print("cliques now:", sorted(sorted(c) for c in s.clique_family()))

# dominated, simplicial and simple vertices tracked under vertex updates
e = EliminationState.from_graph(gen.build(gen.sun3()))
print("dominated", sorted(e.D), "simplicial", sorted(e.S), "simple", sorted(e.Q))

for name, edges in [("tree", gen.random_tree(8, 1)), ("C5", gen.cycle(5)), ("3-sun", gen.sun3())]:
    g = gen.build(edges)
    cw = copwin_order(g)
    sc = simple_elimination_ordering(g)
    print(f"{name}: copwin={cw.found} order={cw.order} strongly_chordal={sc.found} residual={sorted(sc.residual)}")
