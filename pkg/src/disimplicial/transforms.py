"""Split, Join and twin reduction, each returning a provenance map.

Split turns a digraph into a source/sink graph with one ``out(v)`` vertex per
non-sink and one ``in(w)`` vertex per non-source.  Join collapses every arc of
a matching into a single vertex ``(v, w)`` and keeps every unmatched vertex as
``(v, v)``; ``(v, w) -> (x, y)`` is an arc exactly when ``v -> y`` is.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Literal, Sequence

from .digraph import (Digraph, Matching, is_reflexive, is_st_graph, thin_arcs,
                      twin_partition)


@dataclass(frozen=True)
class TransformMap:
    """Ties the vertices of a transform's output back to its input.

    ``backward[i]`` names the source entity of output vertex ``i``:

    * split: ``("out", v)`` or ``("in", w)``
    * join:  ``(v, w)`` for a matched arc, ``(v, v)`` for an unmatched vertex
    * repr:  the representative vertex of the original graph

    ``forward`` is the inverse lookup.  For repr it is total on the input
    vertices (every twin maps to its block's vertex), so it is only
    injective on representatives.
    """

    kind: Literal["split", "join", "repr"]
    forward: dict[Hashable, int]
    backward: tuple = field(repr=False)


def split(d: Digraph) -> tuple[Digraph, TransformMap]:
    out_ids = [v for v in range(d.n) if d.out_deg[v]]
    in_ids = [w for w in range(d.n) if d.in_deg[w]]
    forward: dict[Hashable, int] = {}
    backward = []
    for v in out_ids:
        forward[("out", v)] = len(backward)
        backward.append(("out", v))
    for w in in_ids:
        forward[("in", w)] = len(backward)
        backward.append(("in", w))
    base = len(out_ids)
    in_pos = {w: base + i for i, w in enumerate(in_ids)}
    adj: list[list[int]] = [[in_pos[w] for w in d.out_adj[v]] for v in out_ids]
    adj.extend([] for _ in in_ids)
    labels = None
    if d.labels is not None:
        labels = [f"{kind}({d.labels[x]})" for kind, x in backward]
    return Digraph(len(backward), adj, labels), TransformMap("split", forward, tuple(backward))


def _check_matching(g: Digraph, m: Iterable[Sequence[int]]) -> Matching:
    mm = m if isinstance(m, Matching) else Matching(m)
    arcs = g.arcs
    for a in mm:
        if a not in arcs:
            raise ValueError(f"matching arc {a[0]}->{a[1]} is not an arc of the graph")
    return mm


def join(g: Digraph, m: Iterable[Sequence[int]]) -> tuple[Digraph, TransformMap]:
    """Join ``g`` along the matching ``m``.

    Matched-arc vertices come first in sorted arc order, then the unmatched
    vertices in ascending order.  Raises ``ValueError`` when ``m`` is not a
    matching of ``g``.
    """
    mm = _check_matching(g, m)
    backward: list[tuple[int, int]] = sorted(mm)
    covered = mm.vertices
    backward.extend((v, v) for v in range(g.n) if v not in covered)
    forward = {pair: i for i, pair in enumerate(backward)}
    # the joined vertex holding each original vertex as its second coordinate
    # matched tails are nobody's second coordinate, so arcs into them vanish
    head_owner = [-1] * g.n
    for i, (_, w) in enumerate(backward):
        head_owner[w] = i
    adj = [sorted({head_owner[y] for y in g.out_adj[v]} - {-1}) for v, _ in backward]
    labels = None
    if g.labels is not None:
        labels = [g.labels[v] if v == w else f"({g.labels[v]},{g.labels[w]})"
                  for v, w in backward]
    return Digraph(len(backward), adj, labels), TransformMap("join", forward, tuple(backward))


def join_thin(g: Digraph) -> tuple[Digraph, TransformMap]:
    """Join ``g`` along its thin arcs."""
    return join(g, thin_arcs(g))


def repr_reduction(g: Digraph) -> tuple[Digraph, TransformMap]:
    """Subdigraph induced by one representative (the smallest id) per twin block."""
    part = twin_partition(g)
    sub, keep = g.induced(part.representative)
    new_of_rep = {v: i for i, v in enumerate(keep)}
    forward = {v: new_of_rep[part.repr_of(v)] for v in range(g.n)}
    return sub, TransformMap("repr", forward, tuple(keep))


def _assert_isomorphism(a: Digraph, b: Digraph, f: list[int]) -> None:
    if a.n != b.n or sorted(f) != list(range(b.n)):
        raise AssertionError("vertex map is not a bijection")
    image = {(f[v], f[w]) for v, w in a.arcs}
    if image != b.arcs:
        raise AssertionError("vertex map does not preserve arcs")


def split_join_roundtrip_check(d: Digraph) -> list[int]:
    """Return the isomorphism ``v -> (out(v), in(v))`` from ``d`` onto
    ``join(split(d), {out(v) -> in(v)})``.

    ``d`` must be reflexive.
    """
    if not is_reflexive(d):
        raise ValueError("digraph is not reflexive")
    g, smap = split(d)
    diag = [(smap.forward[("out", v)], smap.forward[("in", v)]) for v in range(d.n)]
    h, jmap = join(g, diag)
    f = [jmap.forward[p] for p in diag]
    _assert_isomorphism(d, h, f)
    return f


def join_split_roundtrip_check(g: Digraph, m: Iterable[Sequence[int]]) -> list[int]:
    """Return the isomorphism from the ST graph ``g`` onto ``split(join(g, m))``.

    A source ``v`` goes to ``out((v, mate(v)))`` and a sink ``w`` to
    ``in((mate(w), w))``.  ``m`` must be a perfect matching of ``g``.
    """
    if not is_st_graph(g):
        raise ValueError("graph is not an ST graph")
    mm = _check_matching(g, m)
    if len(mm.vertices) != g.n:
        raise ValueError("matching is not perfect")
    d, jmap = join(g, mm)
    h, smap = split(d)
    mate = mm.mate()
    f = []
    for v in range(g.n):
        if g.out_deg[v]:
            f.append(smap.forward[("out", jmap.forward[(v, mate[v])])])
        else:
            f.append(smap.forward[("in", jmap.forward[(mate[v], v)])])
    _assert_isomorphism(g, h, f)
    return f
