"""
Bisimplicial edges of a bipartite graph
=======================================
"""

from disimplicial import all_disimplicial_arcs, is_perfect_elimination_st
from disimplicial.io import parse_bipartite_edge_list

edges = """
u1 w1
u1 w2
u2 w2
u2 w3
u3 w3
u3 w1
u4 w4
u4 w1
"""
bg = parse_bipartite_edge_list(edges.splitlines())
g = bg.to_digraph()

for v, w in all_disimplicial_arcs(g):
    print("bisimplicial:", g.label(v), g.label(w))

ok, scheme = is_perfect_elimination_st(g)
print("perfect elimination bipartite:", ok)
print("scheme:", [(g.label(v), g.label(w)) for v, w in scheme.steps])
print("left over arcs:", scheme.residual.m)

# the 6-cycle u1..u3 / w1..w3 blocks everything once u4 w4 is gone
