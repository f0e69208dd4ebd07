"""Verification-free enumeration.

Valid candidates are found by sweeping the survived timestamps of the
current group instead of verifying each candidate separately. ``cnt_u``
carries the per-snapshot common-neighbour counts down the recursion, so a
child only adds the contribution of its new vertex. Maximality needs no
check: a group is reported only when no vertex extends it, which the sweep
already tells us, and vertices are expanded in a fixed id order so each
maximal group is reached on exactly one branch.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._common import FrequencyGroup, Params, remap_groups
from ._parallel import run_branches
from .corefilter import gf_core
from .graph import TemporalBipartiteGraph


def degree_reorder(g: TemporalBipartiteGraph) -> list[int]:
    """V ids sorted by ascending s-degree, ties by id."""
    return sorted(range(g.n_v), key=lambda v: (len(g.static_adj_v[v]), v))


class CountingState:
    """Dynamic counters shared by one depth-first search.

    ``cnt_u[t][u]`` counts neighbours of u at t inside the current group.
    ``cnt_v[t][v]`` counts neighbours of v inside ``cand_U`` at t; an entry is
    only meaningful when ``visit[t][v]`` equals the current sweep stamp.
    ``cnt_t[v]`` counts survived timestamps of group + {v}.
    """

    def __init__(self, g: TemporalBipartiteGraph, order: list[int] | None = None):
        n_t, n_u, n_v = g.n_t, g.n_u, g.n_v
        self.cnt_u = [[0] * n_u for _ in range(n_t)]
        self.cnt_v = [[0] * n_v for _ in range(n_t)]
        self.visit = [[0] * n_v for _ in range(n_t)]
        self.cnt_t = [0] * n_v
        self.in_group = [False] * n_v
        self.stamp = 0
        if order is None:
            order = list(range(n_v))
        self.rank = [0] * n_v
        for i, v in enumerate(order):
            self.rank[v] = i
        self.order = list(order)

    def is_idle(self) -> bool:
        return (
            not any(any(row) for row in self.cnt_u)
            and not any(self.cnt_t)
            and not any(self.in_group)
        )


@dataclass
class BranchFrame:
    v_s: list
    c_v: list
    c_t: list


def expand_candidate(
    g: TemporalBipartiteGraph,
    state: CountingState,
    frame: BranchFrame,
    v: int,
    params: Params,
    accepted: list | None = None,
) -> tuple[list, list, bool]:
    """Add ``v`` to ``frame.v_s`` and sweep ``frame.c_t``.

    Returns the survived timestamps of the enlarged group, its valid
    candidates ranked after ``v``, and whether no earlier-ranked vertex
    extends it. ``cnt_u`` stays incremented for ``v`` until
    :func:`retract_candidate`. If ``accepted`` is given it receives every
    vertex that keeps the enlarged group frequent, before the rank split.
    """
    tau_u, lam = params.tau_u, params.lam
    snap_u, snap_v = g.snap_u, g.snap_v
    cnt_u_all, cnt_v_all, visit_all = state.cnt_u, state.cnt_v, state.visit
    cnt_t = state.cnt_t
    in_group = state.in_group
    in_group[v] = True
    size = len(frame.v_s) + 1
    new_ct = []
    cand_v = []
    for t in frame.c_t:
        cnt_u = cnt_u_all[t]
        cand_u = []
        for u in snap_v[t][v]:
            c = cnt_u[u] + 1
            cnt_u[u] = c
            if c == size:
                cand_u.append(u)
        if len(cand_u) < tau_u:
            continue
        new_ct.append(t)
        state.stamp += 1
        stamp = state.stamp
        cnt_v = cnt_v_all[t]
        visit = visit_all[t]
        for u2 in cand_u:
            for w in snap_u[t][u2]:
                if in_group[w]:
                    continue
                if visit[w] != stamp:
                    visit[w] = stamp
                    cnt_v[w] = 1
                else:
                    cnt_v[w] += 1
                if cnt_v[w] == tau_u:
                    if cnt_t[w] == 0:
                        cand_v.append(w)
                    cnt_t[w] += 1
    rank = state.rank
    rv = rank[v]
    not_repeat = True
    new_cv = []
    for w in cand_v:
        c = cnt_t[w]
        cnt_t[w] = 0
        if c < lam:
            continue
        if accepted is not None:
            accepted.append(w)
        if rank[w] < rv:
            not_repeat = False
        else:
            new_cv.append(w)
    new_cv.sort(key=rank.__getitem__)
    return new_ct, new_cv, not_repeat


def retract_candidate(
    g: TemporalBipartiteGraph, state: CountingState, frame: BranchFrame, v: int
) -> None:
    """Undo the ``cnt_u`` increments made by :func:`expand_candidate`."""
    snap_v = g.snap_v
    cnt_u_all = state.cnt_u
    for t in frame.c_t:
        cnt_u = cnt_u_all[t]
        for u in snap_v[t][v]:
            cnt_u[u] -= 1
    state.in_group[v] = False


def _shadow_counts(g: TemporalBipartiteGraph, v_s, c_t) -> dict:
    """cnt_u recomputed from scratch for the timestamps in ``c_t``."""
    out = {}
    for t in c_t:
        row = [0] * g.n_u
        for v in v_s:
            for u in g.snap_v[t][v]:
                row[u] += 1
        out[t] = row
    return out


class _VFree:
    def __init__(self, g: TemporalBipartiteGraph, params: Params, order, debug=False, on_frame=None):
        self.g = g
        self.params = params
        self.state = CountingState(g, order)
        self.debug = debug
        self.on_frame = on_frame
        self.results: list[FrequencyGroup] = []

    def search(self, frame: BranchFrame, candidates=None) -> None:
        g, params, state = self.g, self.params, self.state
        tau_v, lam = params.tau_v, params.lam
        debug = self.debug
        base = len(frame.v_s) + 1
        for v in frame.c_v if candidates is None else candidates:
            accepted = [] if self.on_frame is not None else None
            new_ct, new_cv, not_repeat = expand_candidate(g, state, frame, v, params, accepted)
            child_vs = frame.v_s + [v]
            if debug:
                assert set(new_ct) <= set(frame.c_t)
            if self.on_frame is not None:
                self.on_frame(child_vs, new_ct, frame.c_t, accepted)
            if base + len(new_cv) >= tau_v and len(new_ct) >= lam:
                self.search(BranchFrame(child_vs, new_cv, new_ct))
                if not new_cv and not_repeat:
                    self.results.append(FrequencyGroup(tuple(sorted(child_vs)), tuple(new_ct)))
            if debug:
                shadow = _shadow_counts(g, child_vs, frame.c_t)
                for t, row in shadow.items():
                    assert state.cnt_u[t] == row
            retract_candidate(g, state, frame, v)
            if debug:
                shadow = _shadow_counts(g, frame.v_s, frame.c_t)
                for t, row in shadow.items():
                    assert state.cnt_u[t] == row
                assert not any(state.cnt_t)


def _vfree_worker(payload, indices):
    g, params, order = payload
    run = _VFree(g, params, order)
    run.search(BranchFrame([], order, list(range(g.n_t))), [order[i] for i in indices])
    return run.results


def enumerate_vfree(
    g: TemporalBipartiteGraph,
    params: Params,
    workers: int = 1,
    order: list[int] | None = None,
    debug: bool = False,
    on_frame=None,
) -> list[FrequencyGroup]:
    """All maximal lam-frequency groups of ``g``, sorted by member list.

    ``order`` optionally fixes the processing order as a permutation of the
    V ids of ``g`` (default: ascending s-degree after core filtering).
    ``debug`` asserts the counting invariants on every frame;
    ``on_frame(group, c_t, parent_c_t, accepted)`` is called after every
    candidate sweep, with ids of the core-filtered graph.
    """
    if params.tau_v > g.n_v or params.lam > g.n_t:
        return []
    reduced = gf_core(g, params.tau_u, params.tau_v, params.lam)
    rg = reduced.graph
    if params.tau_v > rg.n_v or params.lam > rg.n_t:
        return []
    if order is None:
        order = degree_reorder(rg)
    else:
        if sorted(order) != list(range(g.n_v)):
            raise ValueError("order must be a permutation of the V ids of g")
        local = {v: i for i, v in enumerate(reduced.v_map)}
        order = [local[v] for v in order if v in local]
    if workers <= 1 or debug or on_frame is not None:
        run = _VFree(rg, params, order, debug=debug, on_frame=on_frame)
        run.search(BranchFrame([], list(order), list(range(rg.n_t))))
        if debug:
            assert run.state.is_idle()
        found = run.results
    else:
        chunks = run_branches(_vfree_worker, (rg, params, list(order)), rg.n_v, workers)
        found = [grp for chunk in chunks for grp in chunk]
    return remap_groups(found, reduced.v_map, reduced.t_map)
