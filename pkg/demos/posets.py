"""
Posets, suprema and diclique irreducibility
===========================================
"""

from disimplicial import bounds, build_digraph, classify, is_di, reflexive_closure, split

# x, y below two incomparable tops: no least upper bound
x, y, u1, u2 = range(4)
two_tops = reflexive_closure(build_digraph(4, [(x, u1), (x, u2), (y, u1), (y, u2)]))
print(bounds(two_tops, [x, y]))
print(classify(two_tops).to_json(indent=1))

# slip a middle element m between the bottoms and the tops
m = 4
arcs = [(x, u1), (x, u2), (y, u1), (y, u2), (x, m), (y, m), (m, u1), (m, u2)]
fixed = reflexive_closure(build_digraph(5, arcs))
print(bounds(fixed, [x, y]))
print("dedekind:", classify(fixed).is_dedekind)

# the same answer through the split digraph
print("split is DI:", is_di(split(two_tops)[0]), is_di(split(fixed)[0]))
