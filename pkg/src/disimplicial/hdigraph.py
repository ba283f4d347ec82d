"""Degree-bucketed dynamic digraph supporting vertex removal.

For each live vertex ``v`` and direction ``s`` in ``"+"``/``"-"`` the
structure keeps the degree ``d_s(v)`` and splits ``N_s(v)`` in two:

* buckets ``i -> {z : d_o(z) == i}`` for ``i < d_s(v)``, where ``o`` is the
  opposite direction;
* the overflow set ``H_s(v) = {z : d_o(z) >= d_s(v)}``.

When ``d_o(z)`` drops, ``z`` has to move only inside the structures of the
vertices ``x`` with ``d_s(x) >= d_o(z)``, and those are exactly ``H_o(z)``.
The position of ``z`` in any structure follows from the two degrees, so the
hash sets double as the relocation handles.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Literal

from .digraph import Digraph, count_arcs_between

Direction = Literal["+", "-"]


class HDigraph:
    """Mutable h-digraph over a :class:`Digraph`.

    Vertices keep their ids from the source digraph; removed vertices are
    simply marked dead.
    """

    def __init__(self, d: Digraph, vertices: Iterable[int] | None = None):
        n = d.n
        self.base = d
        if vertices is None:
            alive = [True] * n
        else:
            alive = [False] * n
            for v in vertices:
                alive[v] = True
        self.alive = alive
        if vertices is None:
            dout = list(d.out_deg)
            din = list(d.in_deg)
        else:
            dout = [sum(alive[w] for w in d.out_adj[v]) if alive[v] else 0 for v in range(n)]
            din = [sum(alive[w] for w in d.in_adj[v]) if alive[v] else 0 for v in range(n)]
        self.dout = dout
        self.din = din
        self.bout: list[dict[int, set[int]]] = [{} for _ in range(n)]
        self.bin: list[dict[int, set[int]]] = [{} for _ in range(n)]
        self.hout: list[set[int]] = [set() for _ in range(n)]
        self.hin: list[set[int]] = [set() for _ in range(n)]
        for v in range(n):
            if not alive[v]:
                continue
            dv = dout[v]
            bk, hs = self.bout[v], self.hout[v]
            for w in d.out_adj[v]:
                if not alive[w]:
                    continue
                i = din[w]
                if i < dv:
                    b = bk.get(i)
                    if b is None:
                        bk[i] = {w}
                    else:
                        b.add(w)
                else:
                    hs.add(w)
            dv = din[v]
            bk, hs = self.bin[v], self.hin[v]
            for w in d.in_adj[v]:
                if not alive[w]:
                    continue
                i = dout[w]
                if i < dv:
                    b = bk.get(i)
                    if b is None:
                        bk[i] = {w}
                    else:
                        b.add(w)
                else:
                    hs.add(w)
        self.live_count = sum(alive)

    # -- queries -----------------------------------------------------------

    def _live(self, v: int) -> None:
        if not (0 <= v < len(self.alive)) or not self.alive[v]:
            raise KeyError(f"vertex {v} is not live")

    def degree(self, v: int, direction: Direction) -> int:
        self._live(v)
        return self.dout[v] if direction == "+" else self.din[v]

    def iter_neighbors(self, v: int, direction: Direction) -> Iterator[int]:
        if direction == "+":
            buckets, h = self.bout[v], self.hout[v]
        else:
            buckets, h = self.bin[v], self.hin[v]
        for b in buckets.values():
            yield from b
        yield from h

    def neighbors(self, v: int, direction: Direction) -> set[int]:
        self._live(v)
        return set(self.iter_neighbors(v, direction))

    def vertices(self) -> list[int]:
        return [v for v, a in enumerate(self.alive) if a]

    def has_arc(self, v: int, w: int) -> bool:
        if not (self.alive[v] and self.alive[w]):
            return False
        i = self.din[w]
        if i < self.dout[v]:
            return w in self.bout[v].get(i, ())
        return w in self.hout[v]

    def min_n(self, v: int, direction: Direction) -> list[int]:
        """Neighbours in ``direction`` of minimum opposite degree, ascending."""
        self._live(v)
        if direction == "+":
            buckets, h, other = self.bout[v], self.hout[v], self.din
        else:
            buckets, h, other = self.bin[v], self.hin[v], self.dout
        if buckets:
            return sorted(buckets[min(buckets)])
        if not h:
            raise ValueError(f"vertex {v} has no {direction}-neighbours")
        low = min(other[z] for z in h)
        return sorted(z for z in h if other[z] == low)

    def n_prime(self, v: int, direction: Direction) -> set[tuple[int, int]]:
        """Live arcs with both endpoints in ``N_direction(v)``."""
        self._live(v)
        marked = self.neighbors(v, direction)
        found = set()
        hout, hin = self.hout, self.hin
        for w in marked:
            for z in hout[w]:
                if z in marked:
                    found.add((w, z))
            for z in hin[w]:
                if z in marked:
                    found.add((z, w))
        return found

    def count_arcs_between(self, tails, heads) -> int:
        return count_arcs_between(tails, heads, self.hout, self.hin, self.dout, self.din)

    def is_disimplicial(self, v: int, w: int) -> bool:
        """Whether the live arc ``v -> w`` is disimplicial in the current graph."""
        outs = self.neighbors(v, "+")
        if w not in outs:
            raise KeyError(f"{v}->{w} is not a live arc")
        ins = self.neighbors(w, "-")
        return self.count_arcs_between(ins, outs) == len(ins) * len(outs)

    # -- removal -----------------------------------------------------------

    def remove(self, v: int) -> None:
        self._live(v)
        outs = [y for y in self.iter_neighbors(v, "+") if y != v]
        ins = [x for x in self.iter_neighbors(v, "-") if x != v]
        self.alive[v] = False
        self.live_count -= 1
        dv = self.dout[v]
        for y in outs:
            if dv < self.din[y]:
                _discard(self.bin[y], dv, v)
            else:
                self.hin[y].remove(v)
            self._drop_in_degree(y)
        dv = self.din[v]
        for x in ins:
            if dv < self.dout[x]:
                _discard(self.bout[x], dv, v)
            else:
                self.hout[x].remove(v)
            self._drop_out_degree(x)
        self.bout[v] = {}
        self.bin[v] = {}
        self.hout[v] = set()
        self.hin[v] = set()
        self.dout[v] = self.din[v] = 0

    def _drop_in_degree(self, z: int) -> None:
        k = self.din[z]
        dout, bout, hout = self.dout, self.bout, self.hout
        # z sits in the out-structure of each x in H-(z), where d+(x) >= k
        for x in self.hin[z]:
            if k < dout[x]:
                _discard(bout[x], k, z)
            else:
                hout[x].remove(z)
            _put(bout[x], k - 1, z)
        self.din[z] = k - 1
        moved = self.bin[z].pop(k - 1, None)
        if moved:
            self.hin[z] |= moved

    def _drop_out_degree(self, x: int) -> None:
        k = self.dout[x]
        din, bin_, hin = self.din, self.bin, self.hin
        for y in self.hout[x]:
            if k < din[y]:
                _discard(bin_[y], k, x)
            else:
                hin[y].remove(x)
            _put(bin_[y], k - 1, x)
        self.dout[x] = k - 1
        moved = self.bout[x].pop(k - 1, None)
        if moved:
            self.hout[x] |= moved

    # -- inspection --------------------------------------------------------

    def dump(self) -> dict[int, dict[str, tuple]]:
        """Per live vertex: ``(degree, sorted buckets, sorted H)`` for each direction."""
        out = {}
        for v in self.vertices():
            entry = {}
            for s, deg, buckets, h in (("+", self.dout, self.bout, self.hout),
                                       ("-", self.din, self.bin, self.hin)):
                entry[s] = (deg[v],
                            tuple((i, tuple(sorted(buckets[v][i]))) for i in sorted(buckets[v])),
                            tuple(sorted(h[v])))
            out[v] = entry
        return out

    def validate(self) -> list[str]:
        """Check every structural invariant against the base digraph.

        Returns a list of violations; empty means the structure is sound.
        """
        errs: list[str] = []
        d, alive = self.base, self.alive
        for v in range(d.n):
            if not alive[v]:
                continue
            for s, adj, deg, odeg, buckets, h in (
                    ("+", d.out_adj, self.dout, self.din, self.bout, self.hout),
                    ("-", d.in_adj, self.din, self.dout, self.bin, self.hin)):
                truth = {w for w in adj[v] if alive[w]}
                if deg[v] != len(truth):
                    errs.append(f"d{s}({v})={deg[v]}, expected {len(truth)}")
                seen: list[int] = []
                for i, b in buckets[v].items():
                    if not b:
                        errs.append(f"empty bucket {i} in N{s}({v})")
                    if i >= deg[v]:
                        errs.append(f"bucket {i} of N{s}({v}) not below d{s}={deg[v]}")
                    for z in b:
                        if odeg[z] != i:
                            errs.append(f"{z} in bucket {i} of N{s}({v}) has degree {odeg[z]}")
                    seen.extend(b)
                for z in h[v]:
                    if odeg[z] < deg[v]:
                        errs.append(f"{z} in H{s}({v}) has degree {odeg[z]} < {deg[v]}")
                seen.extend(h[v])
                if len(seen) != len(set(seen)) or set(seen) != truth:
                    errs.append(f"buckets and H{s}({v}) do not partition N{s}({v})")
        for v in range(d.n):
            if not alive[v]:
                continue
            for w in d.out_adj[v]:
                if alive[w] and v not in self.hin[w] and w not in self.hout[v]:
                    errs.append(f"arc {v}->{w} not covered by any H set")
        return errs


def _discard(buckets: dict[int, set[int]], i: int, z: int) -> None:
    b = buckets[i]
    b.remove(z)
    if not b:
        del buckets[i]


def _put(buckets: dict[int, set[int]], i: int, z: int) -> None:
    b = buckets.get(i)
    if b is None:
        buckets[i] = {z}
    else:
        b.add(z)
