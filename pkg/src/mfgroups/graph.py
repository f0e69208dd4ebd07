"""Immutable temporal bipartite graph and edge-list I/O.

Vertices on each side and timestamps are relabelled to dense ids
``0..n-1`` in ascending order of their original integer labels; the
original labels are kept so results can be reported in input terms.
"""

from __future__ import annotations

import io
import os
from typing import IO, Iterable, Sequence

U, V = "U", "V"

_EMPTY: tuple[int, ...] = ()


class GraphError(ValueError):
    """Raised for out-of-range vertices/timestamps or side mismatches."""


class ParseError(ValueError):
    def __init__(self, lineno: int, line: str, reason: str):
        super().__init__(f"line {lineno}: {reason}: {line.strip()!r}")
        self.lineno = lineno


class Snapshot:
    """Read-only view of one snapshot G_t as two adjacency dicts."""

    __slots__ = ("adj_u", "adj_v")

    def __init__(self, adj_u: dict[int, Sequence[int]], adj_v: dict[int, Sequence[int]]):
        self.adj_u = adj_u
        self.adj_v = adj_v

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "Snapshot":
        adj_u: dict[int, set[int]] = {}
        adj_v: dict[int, set[int]] = {}
        for u, v in pairs:
            adj_u.setdefault(u, set()).add(v)
            adj_v.setdefault(v, set()).add(u)
        return cls(
            {u: tuple(sorted(vs)) for u, vs in adj_u.items()},
            {v: tuple(sorted(us)) for v, us in adj_v.items()},
        )

    @property
    def n_edges(self) -> int:
        return sum(len(vs) for vs in self.adj_u.values())


class TemporalBipartiteGraph:
    """Temporal bipartite graph with static and per-snapshot adjacency.

    Build with :meth:`from_edges` or :func:`load_edge_list`. All adjacency
    lists are sorted tuples of dense ids.

    Attributes
    ----------
    u_labels, v_labels : tuple of int
        Original label of each dense vertex id.
    t_values : tuple of int
        Original timestamp of each dense timestamp index (ascending).
    static_adj_u, static_adj_v : tuple of tuple of int
        s-neighbors N(w, G).
    edge_ts_u : tuple of dict
        ``edge_ts_u[u][v]`` is the sorted tuple T_(u,v).
    snap_u, snap_v : tuple of tuple of tuple of int
        ``snap_u[t][u]`` is Γ(u, t); likewise for V.
    """

    def __init__(self, u_labels, v_labels, t_values, edges):
        # edges: iterable of dense (u, v, t) triples, duplicates allowed
        self.u_labels = tuple(u_labels)
        self.v_labels = tuple(v_labels)
        self.t_values = tuple(t_values)
        self.n_u = len(self.u_labels)
        self.n_v = len(self.v_labels)
        self.n_t = len(self.t_values)
        self.u_index = {lab: i for i, lab in enumerate(self.u_labels)}
        self.v_index = {lab: i for i, lab in enumerate(self.v_labels)}
        self.t_index = {val: i for i, val in enumerate(self.t_values)}

        ts_u: list[dict[int, set[int]]] = [{} for _ in range(self.n_u)]
        for u, v, t in edges:
            ts_u[u].setdefault(v, set()).add(t)

        snap_u = [[[] for _ in range(self.n_u)] for _ in range(self.n_t)]
        snap_v = [[[] for _ in range(self.n_v)] for _ in range(self.n_t)]
        static_v: list[list[int]] = [[] for _ in range(self.n_v)]
        edge_ts_u = []
        n_edges = 0
        for u in range(self.n_u):
            row = {}
            for v in sorted(ts_u[u]):
                ts = tuple(sorted(ts_u[u][v]))
                row[v] = ts
                static_v[v].append(u)
                n_edges += len(ts)
                for t in ts:
                    snap_u[t][u].append(v)
                    snap_v[t][v].append(u)
            edge_ts_u.append(row)

        self.edge_ts_u = tuple(edge_ts_u)
        self.static_adj_u = tuple(tuple(row) for row in edge_ts_u)
        self.static_adj_v = tuple(tuple(us) for us in static_v)
        self.snap_u = tuple(tuple(tuple(vs) if vs else _EMPTY for vs in row) for row in snap_u)
        self.snap_v = tuple(tuple(tuple(us) if us else _EMPTY for us in row) for row in snap_v)
        self.n_edges = n_edges

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[int, int, int]],
        u_labels: Iterable[int] = (),
        v_labels: Iterable[int] = (),
    ) -> "TemporalBipartiteGraph":
        """Build from ``(u_label, v_label, timestamp)`` triples.

        ``u_labels``/``v_labels`` may declare extra (isolated) vertices.
        Duplicate triples collapse to one temporal edge.
        """
        triples = {(int(u), int(v), int(t)) for u, v, t in edges}
        us = sorted({u for u, _, _ in triples}.union(int(x) for x in u_labels))
        vs = sorted({v for _, v, _ in triples}.union(int(x) for x in v_labels))
        ts = sorted({t for _, _, t in triples})
        ui = {lab: i for i, lab in enumerate(us)}
        vi = {lab: i for i, lab in enumerate(vs)}
        ti = {val: i for i, val in enumerate(ts)}
        return cls(us, vs, ts, ((ui[u], vi[v], ti[t]) for u, v, t in triples))

    def __repr__(self) -> str:
        return (
            f"TemporalBipartiteGraph(n_u={self.n_u}, n_v={self.n_v}, "
            f"n_t={self.n_t}, n_edges={self.n_edges})"
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, TemporalBipartiteGraph):
            return NotImplemented
        return (
            self.u_labels == other.u_labels
            and self.v_labels == other.v_labels
            and self.t_values == other.t_values
            and self.edge_ts_u == other.edge_ts_u
        )

    __hash__ = None  # type: ignore[assignment]

    # -- validation -----------------------------------------------------

    def _check_vertex(self, side: str, w: int) -> None:
        n = self.n_u if side == U else self.n_v if side == V else None
        if n is None:
            raise GraphError(f"unknown side {side!r}")
        if not 0 <= w < n:
            raise GraphError(f"{side}-vertex {w} out of range [0, {n})")

    def _check_timestamp(self, t: int) -> None:
        if not 0 <= t < self.n_t:
            raise GraphError(f"timestamp {t} out of range [0, {self.n_t})")

    # -- accessors ------------------------------------------------------

    def s_neighbors(self, side: str, w: int) -> tuple[int, ...]:
        self._check_vertex(side, w)
        return self.static_adj_u[w] if side == U else self.static_adj_v[w]

    def s_degree(self, side: str, w: int) -> int:
        return len(self.s_neighbors(side, w))

    def m_neighbors(self, side: str, w: int, t: int) -> tuple[int, ...]:
        self._check_vertex(side, w)
        self._check_timestamp(t)
        return self.snap_u[t][w] if side == U else self.snap_v[t][w]

    def m_degree(self, side: str, w: int, t: int) -> int:
        return len(self.m_neighbors(side, w, t))

    def edge_timestamps(self, u: int, v: int) -> tuple[int, ...]:
        self._check_vertex(U, u)
        self._check_vertex(V, v)
        return self.edge_ts_u[u].get(v, _EMPTY)

    def snapshot(self, t: int) -> Snapshot:
        self._check_timestamp(t)
        return Snapshot(
            {u: vs for u, vs in enumerate(self.snap_u[t]) if vs},
            {v: us for v, us in enumerate(self.snap_v[t]) if us},
        )

    def snapshot_edge_count(self, t: int) -> int:
        self._check_timestamp(t)
        return sum(len(vs) for vs in self.snap_u[t])

    def temporal_edges(self) -> list[tuple[int, int, int]]:
        """Dense ``(u, v, t)`` triples in (u, v, t) order."""
        return [
            (u, v, t)
            for u, row in enumerate(self.edge_ts_u)
            for v, ts in row.items()
            for t in ts
        ]

    def labelled_edges(self) -> list[tuple[int, int, int]]:
        ul, vl, tv = self.u_labels, self.v_labels, self.t_values
        return [(ul[u], vl[v], tv[t]) for u, v, t in self.temporal_edges()]


def _open_text(source) -> tuple[IO[str], bool]:
    if isinstance(source, (str, os.PathLike)):
        return open(source, "r", encoding="utf-8"), True
    if isinstance(source, (bytes, bytearray)):
        return io.StringIO(source.decode("utf-8")), False
    if isinstance(source, io.TextIOBase):
        return source, False
    # binary stream
    return io.TextIOWrapper(source, encoding="utf-8"), False


def parse_edge_lines(lines: Iterable[str]) -> list[tuple[int, int, int]]:
    edges = []
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != 3:
            raise ParseError(lineno, line, f"expected 3 tokens, got {len(tokens)}")
        try:
            u, v, t = (int(tok) for tok in tokens)
        except ValueError:
            raise ParseError(lineno, line, "non-integer token") from None
        if u < 0 or v < 0 or t < 0:
            raise ParseError(lineno, line, "negative value")
        edges.append((u, v, t))
    return edges


def load_edge_list(source) -> TemporalBipartiteGraph:
    """Read a ``u v t`` edge list from a path, bytes, or text/binary stream."""
    fh, close = _open_text(source)
    try:
        edges = parse_edge_lines(fh)
    finally:
        if close:
            fh.close()
    return TemporalBipartiteGraph.from_edges(edges)


def loads_edge_list(text: str) -> TemporalBipartiteGraph:
    return TemporalBipartiteGraph.from_edges(parse_edge_lines(text.splitlines()))


def format_edge_list(g: TemporalBipartiteGraph) -> str:
    return "".join(f"{u} {v} {t}\n" for u, v, t in sorted(g.labelled_edges()))


def write_edge_list(g: TemporalBipartiteGraph, dest) -> None:
    text = format_edge_list(g)
    if isinstance(dest, (str, os.PathLike)):
        with open(dest, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        dest.write(text)
