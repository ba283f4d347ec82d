"""Disimplicial arcs and transitive vertices.

An arc ``v -> w`` is disimplicial when every in-neighbour of ``w`` points to
every out-neighbour of ``v``; a vertex is transitive when every in-neighbour
points to every out-neighbour.  Joining a graph along a matching turns the
first question into the second, which is how :func:`all_disimplicial_arcs`
works.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .digraph import Arc, Digraph, count_arcs_between, reflexive_closure
from .transforms import join_thin, repr_reduction, split


@dataclass(frozen=True)
class TransitiveReport:
    t: tuple[int, ...]
    transitive: tuple[bool, ...]

    @property
    def vertices(self) -> list[int]:
        return [v for v, ok in enumerate(self.transitive) if ok]


def _count(d: Digraph, tails, heads) -> int:
    hout, hin = d.h_sets()
    return count_arcs_between(tails, heads, hout, hin, d.out_deg, d.in_deg)


def transitivity_count(d: Digraph, v: int) -> int:
    """Number of arcs leaving ``N-(v)`` and entering ``N+(v)``."""
    if not d.in_adj[v] or not d.out_adj[v]:
        return 0
    return _count(d, set(d.in_adj[v]), set(d.out_adj[v]))


def transitive_vertices(d: Digraph, vertices: Iterable[int] | None = None) -> TransitiveReport:
    """Count ``t(v)`` for every vertex and flag ``t(v) == d-(v) * d+(v)``.

    With ``vertices`` given only those are counted; the rest get ``t = 0``
    and a ``False`` flag.
    """
    t = [0] * d.n
    flag = [False] * d.n
    todo = range(d.n) if vertices is None else vertices
    for v in todo:
        t[v] = c = transitivity_count(d, v)
        flag[v] = c == d.in_deg[v] * d.out_deg[v]
    return TransitiveReport(tuple(t), tuple(flag))


def is_transitive_digraph(d: Digraph) -> bool:
    return all(transitive_vertices(d).transitive)


def is_disimplicial(g: Digraph, arc: Arc) -> bool:
    v, w = arc
    if w not in g.out_adj[v]:
        raise KeyError(f"{v}->{w} is not an arc")
    outs, ins = g.out_adj[v], g.in_adj[w]
    return _count(g, set(ins), set(outs)) == len(ins) * len(outs)


def all_disimplicial_arcs(g: Digraph) -> list[Arc]:
    """Every disimplicial arc of ``g``, in lexicographic order.

    Phase one splits ``g``, reduces twins and joins along the thin arcs; the
    disimplicial arcs of the reduced graph are the transitive joined
    vertices.  Phase two pulls each arc of ``g`` through the two maps.
    """
    s, smap = split(g)
    r, rmap = repr_reduction(s)
    j, jmap = join_thin(r)
    matched = [i for i, (a, b) in enumerate(jmap.backward) if a != b]
    report = transitive_vertices(j, matched)
    sf, rf, jf = smap.forward, rmap.forward, jmap.forward
    out = []
    for v in range(g.n):
        if not g.out_adj[v]:
            continue
        rv = rf[sf[("out", v)]]
        for w in g.out_adj[v]:
            i = jf.get((rv, rf[sf[("in", w)]]))
            if i is not None and report.transitive[i]:
                out.append((v, w))
    return out


def is_transitive_via_disimplicial(d: Digraph) -> bool:
    """Transitivity test through the loops of the reflexive closure.

    Every arc ``out(v) -> in(v)`` of the split reflexive closure must be
    disimplicial.  That alone only certifies the closure: ``x -> v -> x``
    also needs the loop ``x -> x``, which the closure supplies for free, so
    non-reflexive vertices on 2-cycles are rejected separately.
    """
    for v in range(d.n):
        if v not in d.out_adj[v] and not set(d.out_adj[v]).isdisjoint(d.in_adj[v]):
            return False
    g, smap = split(reflexive_closure(d))
    return all(is_disimplicial(g, (smap.forward[("out", v)], smap.forward[("in", v)]))
               for v in range(d.n))
