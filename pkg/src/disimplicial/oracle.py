"""Brute-force reference implementations.

Everything here works straight from the arc set with nested loops or subset
enumeration, sharing no code with the fast paths it is used to check.  Input
sizes are capped; exceeding a cap raises ``ValueError``.
"""
from __future__ import annotations

from itertools import combinations

from .digraph import Arc, Digraph

MAX_DICLIQUE_VERTICES = 20
MAX_DEDEKIND_VERTICES = 12


def _adjacency(g: Digraph) -> tuple[dict[int, set[int]], dict[int, set[int]]]:
    out: dict[int, set[int]] = {v: set() for v in range(g.n)}
    inn: dict[int, set[int]] = {v: set() for v in range(g.n)}
    for v, w in g.arcs:
        out[v].add(w)
        inn[w].add(v)
    return out, inn


def naive_is_disimplicial(g: Digraph, arc: Arc) -> bool:
    v, w = arc
    arcs = g.arcs
    if (v, w) not in arcs:
        raise KeyError(f"{v}->{w} is not an arc")
    tails = [x for x in range(g.n) if (x, w) in arcs]
    heads = [y for y in range(g.n) if (v, y) in arcs]
    return all((x, y) in arcs for x in tails for y in heads)


def naive_disimplicial_arcs(g: Digraph) -> list[Arc]:
    return sorted(a for a in g.arcs if naive_is_disimplicial(g, a))


def naive_transitive_vertices(d: Digraph) -> set[int]:
    arcs = d.arcs
    out = set()
    for v in range(d.n):
        if all((x, y) in arcs
               for x in range(d.n) if (x, v) in arcs
               for y in range(d.n) if (v, y) in arcs):
            out.add(v)
    return out


def enumerate_maximal_dicliques(g: Digraph) -> set[tuple[frozenset[int], frozenset[int]]]:
    """All maximal dicliques ``V -> W`` with ``V`` and ``W`` nonempty.

    Every nonempty set of non-sink vertices is closed to
    ``(lower(upper(V)), upper(V))``; the closed pairs are exactly the maximal
    dicliques.
    """
    if g.n > MAX_DICLIQUE_VERTICES:
        raise ValueError(f"diclique enumeration is capped at {MAX_DICLIQUE_VERTICES} vertices")
    out, inn = _adjacency(g)
    tails = [v for v in range(g.n) if out[v]]
    found = set()
    for k in range(1, len(tails) + 1):
        for vs in combinations(tails, k):
            upper = set.intersection(*(out[v] for v in vs))
            if not upper:
                continue
            lower = set.intersection(*(inn[w] for w in upper))
            found.add((frozenset(lower), frozenset(upper)))
    return found


def naive_is_wdi(g: Digraph) -> bool:
    """Every arc lies in ``N-(y) -> N+(x)`` for some disimplicial ``x -> y``."""
    out, inn = _adjacency(g)
    dis = [a for a in g.arcs if naive_is_disimplicial(g, a)]
    return all(any(a in inn[y] and b in out[x] for x, y in dis) for a, b in g.arcs)


def naive_is_di(g: Digraph) -> bool:
    """Every maximal diclique contains a disimplicial arc."""
    dis = [a for a in g.arcs if naive_is_disimplicial(g, a)]
    return all(any(x in vs and y in ws for x, y in dis)
               for vs, ws in enumerate_maximal_dicliques(g))


def naive_is_dedekind(d: Digraph) -> bool:
    """Every nonempty vertex set with an upper bound has a supremum.

    Assumes ``d`` is an order graph.
    """
    if d.n > MAX_DEDEKIND_VERTICES:
        raise ValueError(f"subset enumeration is capped at {MAX_DEDEKIND_VERTICES} vertices")
    out, inn = _adjacency(d)
    verts = range(d.n)
    for k in range(1, d.n + 1):
        for vs in combinations(verts, k):
            upper = set.intersection(*(out[v] for v in vs))
            if not upper:
                continue
            if not any(all(w in out[u] for w in upper) for u in upper):
                return False
    return True
