"""Readers and writers for edge lists, bipartite edge lists and Matrix Market."""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, TextIO

import numpy as np
import scipy.io
import scipy.sparse

from .digraph import Arc, Digraph, build_digraph


class ParseError(ValueError):
    pass


def _records(lines: Iterable[str], where: str) -> list[tuple[str, str]]:
    out = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(f"{where}:{lineno}: expected 'u v', got {raw.strip()!r}")
        out.append((toks[0], toks[1]))
    return out


def parse_edge_list(lines: Iterable[str], where: str = "<input>") -> Digraph:
    """Digraph from ``u v`` lines; labels get ids in order of first appearance."""
    ids: dict[str, int] = {}
    arcs = []
    for u, v in _records(lines, where):
        a = ids.setdefault(u, len(ids))
        b = ids.setdefault(v, len(ids))
        arcs.append((a, b))
    return build_digraph(len(ids), arcs, list(ids))


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph ``(V, W, E)`` with edges stored left-to-right."""

    left: tuple[str, ...]
    right: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]

    def to_digraph(self) -> Digraph:
        """ST orientation: left vertices first, every edge oriented left to right."""
        nl = len(self.left)
        return build_digraph(nl + len(self.right), [(v, nl + w) for v, w in self.edges],
                             list(self.left) + list(self.right))


def parse_bipartite_edge_list(lines: Iterable[str], where: str = "<input>") -> BipartiteGraph:
    """First token of each line is a left vertex, second a right vertex.

    The two sides have separate label namespaces.
    """
    left: dict[str, int] = {}
    right: dict[str, int] = {}
    edges = []
    for u, v in _records(lines, where):
        edges.append((left.setdefault(u, len(left)), right.setdefault(v, len(right))))
    if set(left) & set(right):
        # keep labels unique in the oriented digraph
        lt = tuple(f"L:{x}" for x in left)
        rt = tuple(f"R:{x}" for x in right)
    else:
        lt, rt = tuple(left), tuple(right)
    return BipartiteGraph(lt, rt, tuple(sorted(set(edges))))


def read_graph(path: str | Path, bipartite: bool = False) -> Digraph:
    try:
        text = Path(path).read_text().splitlines()
    except OSError as exc:
        raise ParseError(str(exc)) from exc
    if bipartite:
        return parse_bipartite_edge_list(text, str(path)).to_digraph()
    return parse_edge_list(text, str(path))


def read_matching(path: str | Path, g: Digraph, bipartite: bool = False) -> list[Arc]:
    """Arcs of a matching file, resolved against the labels of ``g``.

    Raises :class:`ParseError` for malformed lines and ``KeyError`` for a
    label ``g`` does not have.
    """
    try:
        text = Path(path).read_text().splitlines()
    except OSError as exc:
        raise ParseError(str(exc)) from exc
    labels = g.labels or tuple(str(v) for v in range(g.n))
    index = {lab: i for i, lab in enumerate(labels)}
    if bipartite and any(lab.startswith("L:") for lab in labels):
        resolve = [lambda x: index[f"L:{x}"], lambda x: index[f"R:{x}"]]
    else:
        resolve = [index.__getitem__, index.__getitem__]
    out = []
    for u, v in _records(text, str(path)):
        try:
            out.append((resolve[0](u), resolve[1](v)))
        except KeyError as exc:
            raise KeyError(f"unknown vertex {exc.args[0]!r} in matching") from None
    return out


@dataclass(frozen=True)
class SparseMatrixGraph:
    """Row/column digraph of a sparse pattern.

    Row ``i`` is vertex ``i``, column ``j`` is vertex ``nrows + j``, and every
    structural nonzero ``(i, j)`` is the arc ``i -> nrows + j``.
    """

    nrows: int
    ncols: int
    graph: Digraph

    def entry(self, arc: Arc) -> tuple[int, int]:
        return arc[0], arc[1] - self.nrows

    @classmethod
    def from_pattern(cls, nrows: int, ncols: int,
                     entries: Iterable[tuple[int, int]]) -> "SparseMatrixGraph":
        labels = [f"r{i + 1}" for i in range(nrows)] + [f"c{j + 1}" for j in range(ncols)]
        g = build_digraph(nrows + ncols, [(i, nrows + j) for i, j in entries], labels)
        return cls(nrows, ncols, g)


def read_matrix_market(path: str | Path) -> SparseMatrixGraph:
    """Structural pattern of a Matrix Market coordinate file.

    Explicitly stored zeros are dropped; values are otherwise ignored.
    """
    try:
        a = scipy.io.mmread(str(path))
    except (OSError, ValueError, IndexError) as exc:
        raise ParseError(f"{path}: {exc}") from exc
    if not scipy.sparse.issparse(a):
        raise ParseError(f"{path}: only coordinate Matrix Market files are supported")
    a = scipy.sparse.coo_matrix(a)
    keep = a.data != 0
    rows = np.asarray(a.row[keep], dtype=np.int64)
    cols = np.asarray(a.col[keep], dtype=np.int64)
    nrows, ncols = a.shape
    return SparseMatrixGraph.from_pattern(nrows, ncols, zip(rows.tolist(), cols.tolist()))


def write_matrix_market(path: str | Path, nrows: int, ncols: int,
                        entries: Iterable[tuple[int, int]]) -> None:
    """Write a 0-based pattern as a ``coordinate pattern general`` file."""
    entries = sorted(set(entries))
    with open(path, "w") as fh:
        fh.write("%%MatrixMarket matrix coordinate pattern general\n")
        fh.write(f"{nrows} {ncols} {len(entries)}\n")
        for i, j in entries:
            fh.write(f"{i + 1} {j + 1}\n")


def write_scheme(out: TextIO, g: Digraph, steps: Iterable[Arc], perfect: bool,
                 as_json: bool = False) -> None:
    """One step per line ``v w`` after a ``# perfect:`` header, or JSON."""
    steps = list(steps)
    if as_json:
        json.dump({"perfect": perfect,
                   "steps": [[g.label(v), g.label(w)] for v, w in steps]}, out)
        out.write("\n")
        return
    out.write(f"# perfect: {'true' if perfect else 'false'}\n")
    for v, w in steps:
        out.write(f"{g.label(v)}\t{g.label(w)}\n")


def read_scheme(lines: Iterable[str], g: Digraph) -> tuple[list[Arc], bool | None]:
    """Inverse of the text form of :func:`write_scheme`."""
    lines = list(lines)
    perfect = None
    for raw in lines:
        s = raw.strip()
        if s.startswith("# perfect:"):
            perfect = s.split(":", 1)[1].strip() == "true"
    index = {g.label(v): v for v in range(g.n)}
    return [(index[u], index[v]) for u, v in _records(lines, "<scheme>")], perfect
