"""Walk through the degree-bucketed graph and the four-vertex census."""

from hgraph import HGraph, edge_degrees, global_census, list_cliques, vertex_census
from hgraph import generators as gen
from hgraph import oracle as O

# a wheel with five rim vertices, hub is 0
g = gen.build(gen.wheel(5))
print(g.stats())

# the hub has degree 5, every rim vertex degree 3
print("hub high neighbours:", sorted(g.high_neighbors(0)))
print("rim 1 high neighbours:", sorted(g.high_neighbors(1)))

# each edge payload keeps the number of triangles through it
for (u, v), d in sorted(edge_degrees(g).items()):
    print(f"edge {u}-{v} lies in {d} triangles")

print("triangles:", list_cliques(g, 3))

rep = global_census(g)
print("census:", rep.as_dict())

# same numbers from the brute-force oracle
dense = O.DenseGraph(g.n, g.edges())
print("oracle agrees:", O.bf_four_census(dense) == rep.as_dict())

# per-vertex view for the hub
print("hub:", vertex_census(g, 0).as_dict())

# updates keep everything consistent
g.edge_remove(0, 3)
g.vertex_insert(9, [1, 2])
print("after updates:", g.edges())
print("diagnostics:", g.check_structure() or "none")
print("operation counters:", g.counters.snapshot())

h = HGraph()
for v in range(6):
    h.vertex_insert(v, range(v))  # grows K6
print("K6 census k =", global_census(h).k)
