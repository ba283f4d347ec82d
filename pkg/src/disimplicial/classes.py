"""Recognition of order, dedekind, WDI and DI digraphs.

WDI and DI inputs are first normalised to a twin-free ST graph (split, then
twin reduction); both properties survive that normalisation, and the
thin-arc join of the result is then checked for transitivity, midpoints and
suprema.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable

from .arcs import transitive_vertices
from .digraph import (Digraph, is_oriented, is_reflexive, is_st_graph, thin_arcs,
                      twin_partition)
from .transforms import join, join_thin, repr_reduction, split


@dataclass(frozen=True)
class BoundSets:
    upper: frozenset[int]
    lower: frozenset[int]
    supremum: int | None
    infimum: int | None


@dataclass
class ClassReport:
    is_st: bool
    is_twin_free: bool
    is_reflexive: bool
    is_oriented: bool
    is_transitive: bool
    is_order: bool
    is_dedekind: bool
    is_wdi: bool
    is_di: bool
    witness: dict[str, Any] | None = field(default=None)

    def to_json(self, **kw) -> str:
        return json.dumps(asdict(self), **kw)


def is_order_graph(d: Digraph) -> bool:
    return is_reflexive(d) and is_oriented(d) and all(transitive_vertices(d).transitive)


def _common(sets: Iterable[Iterable[int]]) -> set[int]:
    it = iter(sets)
    acc = set(next(it))
    for s in it:
        acc.intersection_update(s)
        if not acc:
            break
    return acc


def bounds(d: Digraph, vertices: Iterable[int]) -> BoundSets:
    """Upper and lower bounds of a nonempty vertex set, with sup and inf.

    When the graph is not oriented several candidates may qualify; the
    smallest id is reported.
    """
    vs = sorted(set(vertices))
    if not vs:
        raise ValueError("bounds of an empty set are not defined")
    upper = _common(d.out_adj[v] for v in vs)
    lower = _common(d.in_adj[v] for v in vs)
    sup = inf = None
    if upper:
        cand = upper & _common(d.in_adj[u] for u in upper)
        sup = min(cand) if cand else None
    if lower:
        cand = lower & _common(d.out_adj[x] for x in lower)
        inf = min(cand) if cand else None
    return BoundSets(frozenset(upper), frozenset(lower), sup, inf)


def _dedekind_witness(d: Digraph) -> tuple[int, int] | None:
    out_deg = d.out_deg
    for v in range(d.n):
        mark = set(d.out_adj[v])
        for w in range(d.n):
            if w == v:
                continue
            upper = [u for u in d.out_adj[w] if u in mark]
            if upper and not any(out_deg[u] == len(upper) for u in upper):
                return (v, w)
    return None


def is_dedekind(d: Digraph) -> bool:
    """Whether the order graph ``d`` is dedekind.

    A pair ``{v, w}`` with upper bounds has a supremum exactly when one of
    its upper bounds has out-degree (loop included) equal to the number of
    upper bounds; pairs suffice in a finite poset.  Raises ``ValueError`` if
    ``d`` is not an order graph.
    """
    if not is_order_graph(d):
        raise ValueError("not an order graph")
    return _dedekind_witness(d) is None


def _normalise(g: Digraph) -> Digraph:
    return repr_reduction(split(g)[0])[0]


def _midpoint_witness(d: Digraph) -> tuple[int, int] | None:
    for a in range(d.n):
        outs = set(d.out_adj[a])
        for b in d.out_adj[a]:
            if outs.isdisjoint(d.in_adj[b]):
                return (a, b)
    return None


def is_wdi(g: Digraph) -> bool:
    """Whether every arc of ``g`` lies in a diclique with a disimplicial arc."""
    d, _ = join_thin(_normalise(g))
    return all(transitive_vertices(d).transitive) and _midpoint_witness(d) is None


def is_di(g: Digraph) -> bool:
    """Whether every maximal diclique of ``g`` contains a disimplicial arc."""
    h = _normalise(g)
    m = thin_arcs(h)
    if len(m.vertices) != h.n:
        return False
    d, _ = join(h, m)
    return is_order_graph(d) and _dedekind_witness(d) is None


def dedekind_via_split_check(d: Digraph) -> bool:
    """Dedekind test for an order graph through ``is_di(split(d))``."""
    if not is_order_graph(d):
        raise ValueError("not an order graph")
    return is_di(split(d)[0])


def classify(g: Digraph) -> ClassReport:
    """Evaluate every class flag; ``witness`` explains the first failure
    among reflexivity, orientation, transitivity and dedekind completeness."""
    reflexive = is_reflexive(g)
    oriented = is_oriented(g)
    report = transitive_vertices(g)
    transitive = all(report.transitive)
    order = reflexive and oriented and transitive
    witness = None
    if not reflexive:
        v = next(v for v in range(g.n) if v not in g.out_adj[v])
        witness = {"property": "reflexive", "vertex": g.label(v)}
    elif not oriented:
        v, w = next((v, w) for v, w in sorted(g.arcs) if v != w and (w, v) in g.arcs)
        witness = {"property": "oriented", "arc": [g.label(v), g.label(w)]}
    elif not transitive:
        v = report.transitive.index(False)
        arcs = g.arcs
        x, y = next((x, y) for x in g.in_adj[v] for y in g.out_adj[v] if (x, y) not in arcs)
        witness = {"property": "transitive", "vertex": g.label(v),
                   "missing_arc": [g.label(x), g.label(y)]}
    dedekind = False
    if order:
        pair = _dedekind_witness(g)
        dedekind = pair is None
        if pair is not None:
            witness = {"property": "dedekind", "pair": [g.label(pair[0]), g.label(pair[1])]}
    return ClassReport(
        is_st=is_st_graph(g),
        is_twin_free=twin_partition(g).is_discrete,
        is_reflexive=reflexive,
        is_oriented=oriented,
        is_transitive=transitive,
        is_order=order,
        is_dedekind=dedekind,
        is_wdi=is_wdi(g),
        is_di=is_di(g),
        witness=witness,
    )
