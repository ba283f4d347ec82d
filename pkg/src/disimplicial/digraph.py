"""Immutable dense-id digraphs and the structural queries built on them.

Vertices are the integers ``0..n-1``.  Loops are allowed, parallel arcs are
not.  External string labels are carried along only so that I/O can print
them back.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

Arc = tuple[int, int]


class Digraph:
    """Immutable digraph with sorted out/in adjacency tuples.

    ``deg[v]`` counts the union ``N+(v) | N-(v)``, so a vertex whose only
    arc is a loop has degree 1.
    """

    __slots__ = ("n", "m", "out_adj", "in_adj", "out_deg", "in_deg", "deg",
                 "labels", "_arcs", "_h")

    def __init__(self, n: int, out_adj: Sequence[Sequence[int]],
                 labels: Sequence[str] | None = None):
        # trusted constructor: out_adj must already be sorted and duplicate-free
        self.n = n
        self.out_adj = tuple(tuple(a) for a in out_adj)
        ins: list[list[int]] = [[] for _ in range(n)]
        for v, outs in enumerate(self.out_adj):
            for w in outs:
                ins[w].append(v)
        self.in_adj = tuple(tuple(a) for a in ins)
        self.out_deg = tuple(len(a) for a in self.out_adj)
        self.in_deg = tuple(len(a) for a in self.in_adj)
        self.m = sum(self.out_deg)
        deg = []
        for v in range(n):
            o, i = self.out_adj[v], self.in_adj[v]
            if not o or not i:
                deg.append(len(o) + len(i))
            else:
                deg.append(len(set(o).union(i)))
        self.deg = tuple(deg)
        self.labels = tuple(labels) if labels is not None else None
        self._arcs: frozenset[Arc] | None = None
        self._h: tuple | None = None

    # -- basic views -------------------------------------------------------

    @property
    def arcs(self) -> frozenset[Arc]:
        if self._arcs is None:
            self._arcs = frozenset((v, w) for v in range(self.n) for w in self.out_adj[v])
        return self._arcs

    def arc_list(self) -> list[Arc]:
        """Arcs in lexicographic order."""
        return [(v, w) for v in range(self.n) for w in self.out_adj[v]]

    def has_arc(self, v: int, w: int) -> bool:
        return (v, w) in self.arcs

    def neighbors(self, v: int) -> set[int]:
        return set(self.out_adj[v]).union(self.in_adj[v])

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def h_sets(self) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
        """Return ``(H+, H-)`` for every vertex, computed once and cached.

        ``H+(v)`` holds the out-neighbours ``w`` with ``d+(v) <= d-(w)`` and
        ``H-(v)`` the in-neighbours ``w`` with ``d-(v) <= d+(w)``.
        """
        if self._h is None:
            od, idg = self.out_deg, self.in_deg
            hout = tuple(tuple(w for w in self.out_adj[v] if od[v] <= idg[w])
                         for v in range(self.n))
            hin = tuple(tuple(w for w in self.in_adj[v] if idg[v] <= od[w])
                        for v in range(self.n))
            self._h = (hout, hin)
        return self._h

    def induced(self, vertices: Iterable[int]) -> tuple["Digraph", list[int]]:
        """Subdigraph induced by ``vertices``, relabelled densely.

        Returns the subdigraph and the list mapping new ids to old ids.
        """
        keep = sorted(set(vertices))
        new_id = {v: i for i, v in enumerate(keep)}
        out = [[new_id[w] for w in self.out_adj[v] if w in new_id] for v in keep]
        labels = [self.labels[v] for v in keep] if self.labels is not None else None
        return Digraph(len(keep), out, labels), keep

    def without(self, removed: Iterable[int]) -> "Digraph":
        """Same vertex ids, with every arc touching ``removed`` deleted."""
        gone = set(removed)
        out = [() if v in gone else [w for w in self.out_adj[v] if w not in gone]
               for v in range(self.n)]
        return Digraph(self.n, out, self.labels)

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.out_adj == other.out_adj

    def __hash__(self) -> int:
        return hash((self.n, self.out_adj))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arc_list()})"


def build_digraph(n: int, arcs: Iterable[Sequence[int]] = (),
                  labels: Sequence[str] | None = None) -> Digraph:
    """Build a :class:`Digraph` on ``n`` vertices.

    Repeated arcs are collapsed into one.  Raises ``ValueError`` for an
    endpoint outside ``0..n-1``, for a label list of the wrong length, or for
    a repeated label.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    outs: list[set[int]] = [set() for _ in range(n)]
    for arc in arcs:
        v, w = arc
        if not (0 <= v < n and 0 <= w < n):
            raise ValueError(f"arc {v}->{w} has an endpoint outside 0..{n - 1}")
        outs[v].add(w)
    if labels is not None:
        labels = [str(x) for x in labels]
        if len(labels) != n:
            raise ValueError(f"expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n:
            raise ValueError("duplicate label")
    return Digraph(n, [sorted(s) for s in outs], labels)


def count_arcs_between(tails, heads, h_out, h_in, d_out, d_in) -> int:
    """Count the arcs ``x -> y`` with ``x`` in ``tails`` and ``y`` in ``heads``.

    ``tails``/``heads`` must support fast membership.  Every arc is reached
    through ``x in H-(y)`` or ``y in H+(x)``; an arc seen from both sides has
    ``d+(x) == d-(y)`` and is counted only on the first pass, so no arc marks
    are needed.
    """
    e = 0
    for y in heads:
        for x in h_in[y]:
            if x in tails:
                e += 1
    for x in tails:
        dx = d_out[x]
        for y in h_out[x]:
            if dx < d_in[y] and y in heads:
                e += 1
    return e


def reflexive_closure(d: Digraph) -> Digraph:
    out = []
    for v in range(d.n):
        a = d.out_adj[v]
        out.append(a if v in a else sorted((*a, v)))
    return Digraph(d.n, out, d.labels)


def is_reflexive(d: Digraph) -> bool:
    return all(v in d.out_adj[v] for v in range(d.n))


def is_oriented(d: Digraph) -> bool:
    arcs = d.arcs
    return all(v == w or (w, v) not in arcs for v, w in arcs)


def is_st_graph(d: Digraph) -> bool:
    """True when every vertex is a source or a sink (loops disqualify)."""
    return all(d.in_deg[v] == 0 or d.out_deg[v] == 0 for v in range(d.n))


class Matching(frozenset):
    """A frozen set of pairwise independent arcs.

    A loop ``v -> v`` occupies only ``v``.
    """

    def __new__(cls, arcs: Iterable[Sequence[int]] = ()):
        self = super().__new__(cls, (tuple(a) for a in arcs))
        seen: set[int] = set()
        for v, w in self:
            ends = {v, w}
            if ends & seen:
                raise ValueError(f"arc {v}->{w} shares an endpoint with another arc")
            seen |= ends
        return self

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(x for a in self for x in a)

    def mate(self) -> dict[int, int]:
        """Map every covered vertex to the other endpoint of its arc."""
        out = {}
        for v, w in self:
            out[v] = w
            out[w] = v
        return out

    def __repr__(self) -> str:
        return f"Matching({sorted(self)})"


@dataclass(frozen=True)
class TwinPartition:
    block: tuple[int, ...]
    representative: tuple[int, ...]

    def repr_of(self, v: int) -> int:
        return self.representative[self.block[v]]

    @property
    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.representative]
        for v, b in enumerate(self.block):
            out[b].append(v)
        return out

    @property
    def is_discrete(self) -> bool:
        return len(self.representative) == len(self.block)


def twin_partition(g: Digraph) -> TwinPartition:
    """Group vertices with equal out- and in-neighbourhoods.

    Blocks are numbered by their smallest member, which is also the block
    representative.
    """
    index: dict[tuple, int] = {}
    block = []
    rep = []
    for v in range(g.n):
        key = (g.out_adj[v], g.in_adj[v])
        b = index.get(key)
        if b is None:
            b = index[key] = len(rep)
            rep.append(v)
        block.append(b)
    return TwinPartition(tuple(block), tuple(rep))


def thin_neighbor(g: Digraph, v: int) -> int | None:
    """The unique strictly minimum-degree neighbour of ``v``, or ``None``."""
    deg = g.deg
    best = None
    best_d = math.inf
    tie = False
    if g.in_adj[v] and g.out_adj[v]:
        nbrs = g.neighbors(v)
    else:
        nbrs = g.out_adj[v] or g.in_adj[v]
    for w in nbrs:
        dw = deg[w]
        if dw < best_d:
            best, best_d, tie = w, dw, False
        elif dw == best_d:
            tie = True
    return None if tie else best


def thin_arcs(g: Digraph) -> Matching:
    """Arcs ``v -> w`` whose endpoints are each other's thin neighbour.

    On digraphs with 2-cycles both orientations of a pair can qualify; only
    the one leaving the smaller id is kept so the result stays a matching.
    """
    theta = [thin_neighbor(g, v) for v in range(g.n)]
    out = []
    for v in range(g.n):
        w = theta[v]
        if w is None or theta[w] != v:
            continue
        if w == v:
            out.append((v, v))
        elif v < w:
            out.append((v, w) if w in g.out_adj[v] else (w, v))
    return Matching(out)


@dataclass(frozen=True)
class GraphStats:
    n: int
    m: int
    max_degree: int
    h_index: int


def stats(d: Digraph) -> GraphStats:
    degs = sorted(d.deg, reverse=True)
    h = 0
    for i, x in enumerate(degs, 1):
        if x >= i:
            h = i
        else:
            break
    return GraphStats(d.n, d.m, degs[0] if degs else 0, h)
