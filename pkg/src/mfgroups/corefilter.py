"""Graph reduction by per-snapshot (alpha, beta)-cores and the temporal core.

:func:`gf_core` removes every (vertex, snapshot) pair that cannot take part
in any maximal frequency group: a U-vertex must have at least ``tau_v``
neighbours and a V-vertex at least ``tau_u`` neighbours inside the snapshot
core, and a V-vertex must survive in at least ``lam`` snapshots. Deletions
cascade through a FIFO worklist until a fixpoint is reached.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph import Snapshot, TemporalBipartiteGraph


def ab_core(snapshot: Snapshot, alpha: int, beta: int) -> tuple[frozenset, frozenset]:
    """Vertices of the (alpha, beta)-core of one snapshot.

    U-vertices need degree >= alpha, V-vertices degree >= beta.
    """
    deg_u = {u: len(vs) for u, vs in snapshot.adj_u.items()}
    deg_v = {v: len(us) for v, us in snapshot.adj_v.items()}
    queue = deque()
    for u, d in deg_u.items():
        if d < alpha:
            deg_u[u] = 0
            queue.append((0, u))
    for v, d in deg_v.items():
        if d < beta:
            deg_v[v] = 0
            queue.append((1, v))
    while queue:
        side, w = queue.popleft()
        if side == 0:
            for x in snapshot.adj_u[w]:
                if deg_v[x] > 0:
                    deg_v[x] -= 1
                    if deg_v[x] < beta:
                        deg_v[x] = 0
                        queue.append((1, x))
        else:
            for x in snapshot.adj_v[w]:
                if deg_u[x] > 0:
                    deg_u[x] -= 1
                    if deg_u[x] < alpha:
                        deg_u[x] = 0
                        queue.append((0, x))
    return (
        frozenset(u for u, d in deg_u.items() if d > 0),
        frozenset(v for v, d in deg_v.items() if d > 0),
    )


@dataclass
class CoreStats:
    n_u_before: int
    n_v_before: int
    n_edges_before: int
    n_t_before: int
    n_u_after: int
    n_v_after: int
    n_edges_after: int
    n_t_after: int

    @property
    def edges_pruned(self) -> int:
        return self.n_edges_before - self.n_edges_after

    @property
    def vertices_pruned(self) -> int:
        return self.n_u_before + self.n_v_before - self.n_u_after - self.n_v_after

    @property
    def pruned_pct(self) -> float:
        if self.n_edges_before == 0:
            return 0.0
        return 100.0 * self.edges_pruned / self.n_edges_before


@dataclass
class ReducedGraph:
    """Output of :func:`gf_core`.

    ``graph`` is the surviving structure re-densified; ``u_map``, ``v_map``
    and ``t_map`` send its dense ids back to ids of the input graph.
    ``alive_u[t]`` / ``alive_v[t]`` hold the surviving input ids per snapshot.
    """

    graph: TemporalBipartiteGraph
    u_map: tuple[int, ...]
    v_map: tuple[int, ...]
    t_map: tuple[int, ...]
    alive_u: list[frozenset]
    alive_v: list[frozenset]
    stats: CoreStats
    max_edge_deletions: int = 0
    edge_deletions: int = 0
    extra: dict = field(default_factory=dict)


def gf_core(g: TemporalBipartiteGraph, tau_u: int, tau_v: int, lam: int) -> ReducedGraph:
    """Compute the (tau_v, tau_u, lam)-core of ``g``."""
    n_t = g.n_t
    snap_u, snap_v = g.snap_u, g.snap_v
    du = [[len(vs) for vs in snap_u[t]] for t in range(n_t)]
    dv = [[len(us) for us in snap_v[t]] for t in range(n_t)]
    su = [sum(1 for t in range(n_t) if du[t][u] > 0) for u in range(g.n_u)]
    sv = [sum(1 for t in range(n_t) if dv[t][v] > 0) for v in range(g.n_v)]
    # deletions per temporal edge, to check each edge is removed at most once
    deleted: dict[tuple[int, int, int], int] = {}
    queue: deque = deque()

    def kill(side: int, w: int, t: int) -> None:
        if side == 0:
            du[t][w] = 0
        else:
            dv[t][w] = 0
        queue.append((side, w, t))

    def drain() -> None:
        while queue:
            side, w, t = queue.popleft()
            if side == 0:
                for x in snap_u[t][w]:
                    if dv[t][x] > 0:
                        key = (w, x, t)
                        deleted[key] = deleted.get(key, 0) + 1
                        dv[t][x] -= 1
                        if dv[t][x] < tau_u:
                            kill(1, x, t)
                if su[w] > 0:
                    su[w] -= 1
                    if su[w] < 1:
                        su[w] = 0
                        for t2 in range(n_t):
                            if du[t2][w] > 0:
                                kill(0, w, t2)
            else:
                for x in snap_v[t][w]:
                    if du[t][x] > 0:
                        key = (x, w, t)
                        deleted[key] = deleted.get(key, 0) + 1
                        du[t][x] -= 1
                        if du[t][x] < tau_v:
                            kill(0, x, t)
                if sv[w] > 0:
                    sv[w] -= 1
                    if sv[w] < lam:
                        sv[w] = 0
                        for t2 in range(n_t):
                            if dv[t2][w] > 0:
                                kill(1, w, t2)

    for t in range(n_t):
        for u in range(g.n_u):
            if 0 < du[t][u] < tau_v:
                kill(0, u, t)
                drain()
        for v in range(g.n_v):
            if 0 < dv[t][v] < tau_u or (dv[t][v] > 0 and 0 < sv[v] < lam):
                kill(1, v, t)
                drain()

    alive_u = [frozenset(u for u, d in enumerate(du[t]) if d > 0) for t in range(n_t)]
    alive_v = [frozenset(v for v, d in enumerate(dv[t]) if d > 0) for t in range(n_t)]
    kept = [
        (u, v, t)
        for t in range(n_t)
        for u in alive_u[t]
        for v in snap_u[t][u]
        if dv[t][v] > 0
    ]
    u_map = tuple(sorted({u for u, _, _ in kept}))
    v_map = tuple(sorted({v for _, v, _ in kept}))
    t_map = tuple(sorted({t for _, _, t in kept}))
    ui = {u: i for i, u in enumerate(u_map)}
    vi = {v: i for i, v in enumerate(v_map)}
    ti = {t: i for i, t in enumerate(t_map)}
    reduced = TemporalBipartiteGraph(
        [g.u_labels[u] for u in u_map],
        [g.v_labels[v] for v in v_map],
        [g.t_values[t] for t in t_map],
        ((ui[u], vi[v], ti[t]) for u, v, t in kept),
    )
    stats = CoreStats(
        g.n_u, g.n_v, g.n_edges, g.n_t,
        reduced.n_u, reduced.n_v, reduced.n_edges, reduced.n_t,
    )
    return ReducedGraph(
        graph=reduced,
        u_map=u_map,
        v_map=v_map,
        t_map=t_map,
        alive_u=alive_u,
        alive_v=alive_v,
        stats=stats,
        max_edge_deletions=max(deleted.values(), default=0),
        edge_deletions=sum(deleted.values()),
    )
