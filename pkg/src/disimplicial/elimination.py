"""Disimplicial elimination schemes.

An elimination scheme is a sequence of arcs ``v_i -> w_i`` where each arc is
disimplicial once the endpoints of all earlier arcs are deleted.  It is
maximal when the residual graph has no disimplicial arc left, perfect when
the residual graph has no arcs at all.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .arcs import all_disimplicial_arcs
from .digraph import Arc, Digraph, Matching, is_st_graph
from .hdigraph import HDigraph
from .oracle import naive_disimplicial_arcs, naive_is_disimplicial
from .transforms import _check_matching, join, split


@dataclass(frozen=True)
class EliminationScheme:
    steps: tuple[Arc, ...]
    residual: Digraph = field(repr=False)

    @property
    def perfect(self) -> bool:
        return self.residual.m == 0

    @property
    def vertices(self) -> set[int]:
        return {x for a in self.steps for x in a}

    def __len__(self) -> int:
        return len(self.steps)


@dataclass
class Frontier:
    """Vertices that lost an out-/in-neighbour in the previous round."""

    v_out: list[int]
    v_in: list[int]
    candidates: dict[tuple[int, str], list[int]] = field(default_factory=dict)


def _greedy_matching(arcs: Iterable[Arc]) -> list[Arc]:
    used: set[int] = set()
    out = []
    for v, w in sorted(arcs, key=lambda a: (min(a), max(a), a[0])):
        if v in used or w in used:
            continue
        used.add(v)
        used.add(w)
        out.append((v, w))
    return out


def _next_round(h: HDigraph, frontier: Frontier) -> list[Arc]:
    taken: set[int] = set()
    found: list[Arc] = []
    for direction, group in (("+", frontier.v_out), ("-", frontier.v_in)):
        deg = h.dout if direction == "+" else h.din
        for v in group:
            if v in taken or deg[v] == 0:
                continue
            low = h.min_n(v, direction)
            frontier.candidates[(v, direction)] = low
            probe = (v, low[0]) if direction == "+" else (low[0], v)
            if not h.is_disimplicial(*probe):
                continue
            w = next((z for z in low if z not in taken), None)
            if w is None:
                continue
            taken.add(v)
            taken.add(w)
            found.append((v, w) if direction == "+" else (w, v))
    return found


def maximal_elimination(g: Digraph) -> EliminationScheme:
    """Build a maximal disimplicial elimination of ``g``.

    Round one takes a greedy maximal matching of all disimplicial arcs.
    Later rounds only look at vertices next to the ones just removed and
    probe a single minimum-degree neighbour of each.
    """
    h = HDigraph(g)
    steps: list[Arc] = []
    current = _greedy_matching(all_disimplicial_arcs(g))
    while current:
        steps.extend(current)
        removed = {x for a in current for x in a}
        v_out: set[int] = set()
        v_in: set[int] = set()
        for r in removed:
            v_out.update(h.iter_neighbors(r, "-"))
            v_in.update(h.iter_neighbors(r, "+"))
        for r in removed:
            h.remove(r)
        frontier = Frontier(sorted(v_out - removed), sorted(v_in - removed))
        current = _next_round(h, frontier)
    return EliminationScheme(tuple(steps), g.without({x for a in steps for x in a}))


def transitive_v_elimination(d: Digraph, eligible: Iterable[int]) -> list[int]:
    """Maximal sequence of eligible vertices, each transitive when removed.

    Keeps ``t(v)``, the number of arcs from ``N-(v)`` to ``N+(v)``, up to date
    across removals; the smallest transitive eligible id is removed first.
    """
    return _transitive_elimination(d, eligible)


def _transitive_elimination(d: Digraph, eligible: Iterable[int],
                            companions: dict[int, list[int]] | None = None) -> list[int]:
    # companions[u] are removed together with u; removal never breaks the
    # transitivity of another vertex, so queued entries stay valid
    h = HDigraph(d)
    ok = bytearray(d.n)
    for v in eligible:
        ok[v] = 1
    din, dout = h.din, h.dout
    t = [0] * d.n
    queued = bytearray(d.n)
    heap = []
    for v in range(d.n):
        if din[v] and dout[v]:
            t[v] = h.count_arcs_between(set(d.in_adj[v]), set(d.out_adj[v]))
        if ok[v] and t[v] == din[v] * dout[v]:
            queued[v] = 1
            heap.append(v)
    heapq.heapify(heap)
    order = []
    state = TransitiveEliminationState(h, ok, t)
    while heap:
        u = heapq.heappop(heap)
        order.append(u)
        touched = state.remove(u)
        for c in (companions or {}).get(u, ()):
            touched |= state.remove(c)
        for w in touched:
            if h.alive[w] and ok[w] and not queued[w] and t[w] == din[w] * dout[w]:
                queued[w] = 1
                heapq.heappush(heap, w)
    return order


@dataclass
class TransitiveEliminationState:
    """Live h-digraph plus the per-vertex counters ``t``."""

    graph: HDigraph
    eligible: bytearray
    t: list[int]

    def remove(self, u: int) -> set[int]:
        """Remove ``u``, update ``t`` and return the affected live neighbours."""
        h, t = self.graph, self.t
        ins = h.neighbors(u, "-")
        outs = h.neighbors(u, "+")
        # arcs z -> w inside N-(u) lose their witness w -> u
        for z, w in h.n_prime(u, "-"):
            if z != u and w != u:
                t[w] -= 1
        # arcs w -> z inside N+(u) lose their witness u -> z
        for w, z in h.n_prime(u, "+"):
            if z != u and w != u:
                t[w] -= 1
        if u in outs:
            for w in ins & outs:
                if w != u:
                    t[w] -= 1
        h.remove(u)
        touched = (ins | outs)
        touched.discard(u)
        return touched


def matched_elimination(g: Digraph, m: Iterable[Sequence[int]]) -> EliminationScheme:
    """Maximal disimplicial elimination using only arcs of the matching ``m``.

    Works on ``Split(g)`` so that the joined graph is built from an ST graph;
    a matched head that is not also a tail would otherwise lose its out-arcs
    in the join.  Eliminating ``v -> w`` deletes ``out(v)``, ``in(w)`` and
    the leftover ``in(v)`` and ``out(w)``.  Raises ``ValueError`` if ``m``
    is not a matching of ``g``.
    """
    mm = _check_matching(g, m)
    s, smap = split(g)
    sf = smap.forward
    mp = [(sf[("out", v)], sf[("in", w)]) for v, w in mm]
    d, jmap = join(s, mp)
    jf = jmap.forward
    companions: dict[int, list[int]] = {}
    for v, w in mm:
        rest = [jf[(x, x)] for x in (sf.get(("in", v)), sf.get(("out", w)))
                if x is not None and (x, x) in jf]
        companions[jf[(sf[("out", v)], sf[("in", w)])]] = rest
    # join numbers the matched-arc vertices first
    order = _transitive_elimination(d, range(len(mp)), companions)
    steps = []
    for i in order:
        a, b = jmap.backward[i]
        steps.append((smap.backward[a][1], smap.backward[b][1]))
    return EliminationScheme(tuple(steps), g.without({x for a in steps for x in a}))


def _as_set(m) -> set[Arc]:
    return {tuple(a) for a in m}


def is_perfect_elimination_st(g: Digraph) -> tuple[bool, EliminationScheme]:
    """Decide whether the ST graph ``g`` has a perfect elimination scheme.

    Any maximal scheme of a perfect elimination ST graph is perfect, so one
    run of :func:`maximal_elimination` settles it.  Raises ``ValueError`` on
    non-ST input, where that shortcut does not hold.
    """
    if not is_st_graph(g):
        raise ValueError("perfect elimination decision is only valid for ST graphs")
    scheme = maximal_elimination(g)
    return scheme.perfect, scheme


@dataclass(frozen=True)
class SchemeCheck:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_scheme(g: Digraph, scheme: EliminationScheme | Sequence[Arc],
                  m: Iterable[Sequence[int]] | None = None) -> SchemeCheck:
    """Replay ``scheme`` on ``g`` with brute-force disimplicial tests.

    Checks the matching property, each step's disimplicial status in the
    reduced graph, maximality of the residual (restricted to ``m`` when
    given) and, for an :class:`EliminationScheme`, its residual and
    ``perfect`` flag.
    """
    steps = scheme.steps if isinstance(scheme, EliminationScheme) else tuple(scheme)
    allowed = _as_set(m) if m is not None else None
    used: set[int] = set()
    cur = g
    for i, (v, w) in enumerate(steps):
        if v in used or w in used:
            return SchemeCheck(False, f"step {i} ({v}->{w}) reuses an eliminated vertex")
        if allowed is not None and (v, w) not in allowed:
            return SchemeCheck(False, f"step {i} ({v}->{w}) is not in the matching")
        if (v, w) not in cur.arcs:
            return SchemeCheck(False, f"step {i} ({v}->{w}) is not an arc")
        if not naive_is_disimplicial(cur, (v, w)):
            return SchemeCheck(False, f"step {i} ({v}->{w}) is not disimplicial")
        used.update((v, w))
        cur = cur.without((v, w))
    left = naive_disimplicial_arcs(cur)
    if allowed is not None:
        left = [a for a in left if a in allowed]
    if left:
        return SchemeCheck(False, f"residual still has disimplicial arc {left[0]}")
    if isinstance(scheme, EliminationScheme):
        if scheme.residual != cur:
            return SchemeCheck(False, "stored residual differs from replay")
        if scheme.perfect != (cur.m == 0):
            return SchemeCheck(False, "perfect flag is wrong")
    return SchemeCheck(True)


__all__ = [
    "EliminationScheme", "Frontier", "TransitiveEliminationState", "SchemeCheck",
    "maximal_elimination", "matched_elimination", "transitive_v_elimination",
    "is_perfect_elimination_st", "verify_scheme",
]
