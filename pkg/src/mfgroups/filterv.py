"""Filter-and-verification enumeration and the BK baseline.

FilterV walks a Bron-Kerbosch style search tree over V. At each frame the
candidates are first thinned by intersecting per-vertex timestamp sets, then
each survivor is verified with the Reborn/Update array counter
(:func:`check_fre`). Maximality of a leaf is decided against the set ``X_V``
of already-processed extenders instead of comparing with earlier results.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ._common import FrequencyGroup, Params, current_counters, remap_groups
from ._parallel import run_branches
from .corefilter import gf_core
from .graph import TemporalBipartiteGraph


class FrequencyScratch:
    """Reborn Array (per U-vertex counts) and Update Array (per timestamp)."""

    __slots__ = ("reborn", "update")

    def __init__(self, n_t: int):
        self.reborn = [0] * n_t
        self.update = [0] * n_t

    def is_clean(self) -> bool:
        return not any(self.reborn) and not any(self.update)


def support_count_reborn(
    g: TemporalBipartiteGraph, u: int, v_set, scratch: FrequencyScratch | None = None
) -> list[int]:
    """RA row for ``u``: number of members of ``v_set`` adjacent to ``u`` at each t."""
    row = g.edge_ts_u[u]
    ra = [0] * g.n_t
    for v in v_set:
        for t in row.get(v, ()):
            ra[t] += 1
    return ra


def _fill_update(g, u_set, v_set, ra, ua) -> list[int]:
    """Accumulate UA over ``u_set``; return the timestamps touched in UA.

    RA is zeroed again at exactly the positions touched for each u.
    """
    size = len(v_set)
    edge_ts_u = g.edge_ts_u
    ua_touched = []
    for u in u_set:
        row = edge_ts_u[u]
        touched = []
        for v in v_set:
            ts = row.get(v)
            if ts is None:
                break
            for t in ts:
                if ra[t] == 0:
                    touched.append(t)
                ra[t] += 1
        for t in touched:
            if ra[t] == size:
                if ua[t] == 0:
                    ua_touched.append(t)
                ua[t] += 1
            ra[t] = 0
    return ua_touched


def update_array(g: TemporalBipartiteGraph, u_set, v_set) -> list[int]:
    """Final UA: common m-neighbours of ``v_set`` within ``u_set`` per timestamp."""
    scratch = FrequencyScratch(g.n_t)
    _fill_update(g, u_set, list(v_set), scratch.reborn, scratch.update)
    return scratch.update


def check_fre(
    g: TemporalBipartiteGraph,
    u_set,
    v_set,
    params: Params,
    scratch: FrequencyScratch | None = None,
) -> bool:
    """True iff ``v_set`` has at least ``lam`` support timestamps.

    ``u_set`` must contain the common s-neighbours of ``v_set``.
    """
    counters = current_counters()
    if counters is not None:
        counters.frequency_checks += 1
    if scratch is None:
        scratch = FrequencyScratch(g.n_t)
    v_list = list(v_set)
    if not v_list:
        raise ValueError("v_set must be non-empty")
    ua = scratch.update
    ua_touched = _fill_update(g, u_set, v_list, scratch.reborn, ua)
    tau_u, lam = params.tau_u, params.lam
    found = 0
    result = False
    for t in sorted(ua_touched):
        if ua[t] >= tau_u:
            found += 1
            if found == lam:
                result = True
                break
    for t in ua_touched:
        ua[t] = 0
    return result


def group_support(g: TemporalBipartiteGraph, u_set, v_set, tau_u: int) -> tuple[int, ...]:
    """Support timestamps of ``v_set`` from a full UA pass (no early exit)."""
    ua = update_array(g, u_set, v_set)
    return tuple(t for t, c in enumerate(ua) if c >= tau_u)


class TimestampIndex:
    """For each v, the timestamps where v has at least ``tau_u`` m-neighbours.

    Stored as integer bitmasks so set intersection is a single ``&``.
    """

    def __init__(self, g: TemporalBipartiteGraph, tau_u: int):
        self.tau_u = tau_u
        self.n_t = g.n_t
        masks = [0] * g.n_v
        for t in range(g.n_t):
            bit = 1 << t
            for v, us in enumerate(g.snap_v[t]):
                if len(us) >= tau_u:
                    masks[v] |= bit
        self.masks = masks
        self.full = (1 << g.n_t) - 1

    def timestamps(self, v: int) -> list[int]:
        m = self.masks[v]
        return [t for t in range(self.n_t) if m >> t & 1]

    def common(self, v_set) -> int:
        m = self.full
        for v in v_set:
            m &= self.masks[v]
        return m


def candidate_filter(ts_index: TimestampIndex, v_set, cands, lam: int) -> list[int]:
    """Drop candidates whose timestamp-set intersection with ``v_set`` is < lam."""
    base = ts_index.common(v_set)
    if base.bit_count() < lam:
        return []
    masks = ts_index.masks
    return [c for c in cands if (base & masks[c]).bit_count() >= lam]


@dataclass
class BranchState:
    u_s: frozenset
    v_s: list
    c_v: list
    x_v: list = field(default_factory=list)


def valid_candidate_set(
    g: TemporalBipartiteGraph,
    state: BranchState,
    params: Params,
    ts_index: TimestampIndex | None = None,
    scratch: FrequencyScratch | None = None,
) -> list[int]:
    """Candidates v whose addition keeps ``state.v_s`` lam-frequent."""
    if ts_index is None:
        ts_index = TimestampIndex(g, params.tau_u)
    if scratch is None:
        scratch = FrequencyScratch(g.n_t)
    cands = candidate_filter(ts_index, state.v_s, state.c_v, params.lam)
    u_s = state.u_s
    adj_v = g.static_adj_v
    counters = current_counters()
    before = counters.frequency_checks if counters is not None else 0
    out = []
    for v in cands:
        if check_fre(g, u_s.intersection(adj_v[v]), state.v_s + [v], params, scratch):
            out.append(v)
    if counters is not None:
        counters.frames += 1
        counters.filterv_frames.append((len(cands), counters.frequency_checks - before))
    return out


def check_maximality(
    g: TemporalBipartiteGraph,
    state: BranchState,
    params: Params,
    ts_index: TimestampIndex | None = None,
    scratch: FrequencyScratch | None = None,
) -> bool:
    """True iff no processed vertex in ``state.x_v`` extends ``state.v_s``."""
    if not state.x_v:
        return True
    if ts_index is None:
        ts_index = TimestampIndex(g, params.tau_u)
    if scratch is None:
        scratch = FrequencyScratch(g.n_t)
    adj_v = g.static_adj_v
    for x in candidate_filter(ts_index, state.v_s, state.x_v, params.lam):
        if check_fre(g, state.u_s.intersection(adj_v[x]), state.v_s + [x], params, scratch):
            return False
    return True


class _FilterV:
    def __init__(self, g: TemporalBipartiteGraph, params: Params, debug: bool = False):
        self.g = g
        self.params = params
        self.ts_index = TimestampIndex(g, params.tau_u)
        self.scratch = FrequencyScratch(g.n_t)
        self.debug = debug
        self.results: list[FrequencyGroup] = []

    def root(self) -> BranchState:
        return BranchState(frozenset(range(self.g.n_u)), [], list(range(self.g.n_v)))

    def enum(self, state: BranchState) -> None:
        g, params = self.g, self.params
        c_star = valid_candidate_set(g, state, params, self.ts_index, self.scratch)
        if self.debug:
            assert self.scratch.is_clean()
        if len(state.u_s) < params.tau_u or len(state.v_s) + len(c_star) < params.tau_v:
            return
        if not c_star and check_maximality(g, state, params, self.ts_index, self.scratch):
            self.emit(state)
        self.descend(state, c_star, range(len(c_star)))

    def descend(self, state: BranchState, c_star: list, indices) -> None:
        adj_v = self.g.static_adj_v
        x_v = state.x_v
        entry = len(x_v)
        for i in indices:
            v = c_star[i]
            # earlier siblings join X_V; children truncate back on return
            if len(x_v) != entry + i:
                del x_v[entry:]
                x_v.extend(c_star[:i])
            self.enum(BranchState(state.u_s.intersection(adj_v[v]), state.v_s + [v], c_star[i + 1:], x_v))
            x_v.append(v)
        del x_v[entry:]

    def emit(self, state: BranchState) -> None:
        members = tuple(sorted(state.v_s))
        support = group_support(self.g, state.u_s, members, self.params.tau_u)
        self.results.append(FrequencyGroup(members, support))


def _filterv_worker(payload, indices):
    g, params, c_star = payload
    run = _FilterV(g, params)
    run.descend(run.root(), c_star, indices)
    return run.results


def _degenerate(g: TemporalBipartiteGraph, params: Params) -> bool:
    return params.tau_v > g.n_v or params.lam > g.n_t


def enumerate_filterv(
    g: TemporalBipartiteGraph, params: Params, workers: int = 1, debug: bool = False
) -> list[FrequencyGroup]:
    """All maximal lam-frequency groups of ``g``, sorted by member list."""
    if _degenerate(g, params):
        return []
    reduced = gf_core(g, params.tau_u, params.tau_v, params.lam)
    rg = reduced.graph
    if _degenerate(rg, params):
        return []
    run = _FilterV(rg, params, debug=debug)
    root = run.root()
    c_star = valid_candidate_set(rg, root, params, run.ts_index, run.scratch)
    if len(root.u_s) < params.tau_u or len(c_star) < params.tau_v:
        return []
    if workers <= 1:
        run.descend(root, c_star, range(len(c_star)))
        found = run.results
    else:
        chunks = run_branches(_filterv_worker, (rg, params, c_star), len(c_star), workers)
        found = [grp for chunk in chunks for grp in chunk]
    return remap_groups(found, reduced.v_map, reduced.t_map)


# -- BK-ALG+ baseline -----------------------------------------------------


def naive_is_frequent(g: TemporalBipartiteGraph, v_set, params: Params) -> bool:
    """Per-timestamp intersection of m-neighbour sets; counts as one verification."""
    counters = current_counters()
    if counters is not None:
        counters.frequency_checks += 1
    found = 0
    snap_v = g.snap_v
    first, rest = v_set[0], v_set[1:]
    for t in range(g.n_t):
        row = snap_v[t]
        common = set(row[first])
        for v in rest:
            if len(common) < params.tau_u:
                break
            common.intersection_update(row[v])
        if len(common) >= params.tau_u:
            found += 1
            if found >= params.lam:
                return True
    return False


class _ResultSet:
    """Keeps only maximal sets by pairwise subset comparison."""

    def __init__(self):
        self.items: list[frozenset] = []

    def offer(self, members: frozenset) -> None:
        counters = current_counters()
        keep = []
        for other in self.items:
            if counters is not None:
                counters.subset_comparisons += 1
            if members <= other:
                return
            if not other < members:
                keep.append(other)
        keep.append(members)
        self.items = keep


class _BK:
    def __init__(self, g: TemporalBipartiteGraph, params: Params):
        self.g = g
        self.params = params
        self.leaves: list[frozenset] = []

    def enum(self, u_s: frozenset, v_s: list, c_v: list) -> None:
        g, params = self.g, self.params
        adj_v = g.static_adj_v
        extended = False
        for i, v in enumerate(c_v):
            new_u = u_s.intersection(adj_v[v])
            if len(new_u) < params.tau_u:
                continue
            new_v = v_s + [v]
            if naive_is_frequent(g, new_v, params):
                extended = True
                self.enum(new_u, new_v, c_v[i + 1:])
        if not extended and len(v_s) >= params.tau_v:
            self.leaves.append(frozenset(v_s))


def _bk_worker(payload, indices):
    g, params = payload
    run = _BK(g, params)
    all_u = frozenset(range(g.n_u))
    c_v = list(range(g.n_v))
    adj_v = g.static_adj_v
    for i in indices:
        v = c_v[i]
        new_u = all_u.intersection(adj_v[v])
        if len(new_u) >= params.tau_u and naive_is_frequent(g, [v], params):
            run.enum(new_u, [v], c_v[i + 1:])
    return run.leaves


def enumerate_bk_baseline(
    g: TemporalBipartiteGraph, params: Params, workers: int = 1
) -> list[FrequencyGroup]:
    """BK search with core filtering, check-after-add, and result-set maximality."""
    if _degenerate(g, params):
        return []
    reduced = gf_core(g, params.tau_u, params.tau_v, params.lam)
    rg = reduced.graph
    if _degenerate(rg, params):
        return []
    chunks = run_branches(_bk_worker, (rg, params), rg.n_v, workers)
    results = _ResultSet()
    for chunk in chunks:
        for leaf in chunk:
            results.offer(leaf)
    adj_v = rg.static_adj_v
    found = []
    for members in results.items:
        ordered = tuple(sorted(members))
        u_s = frozenset(range(rg.n_u))
        for v in ordered:
            u_s = u_s.intersection(adj_v[v])
        found.append(FrequencyGroup(ordered, group_support(rg, u_s, ordered, params.tau_u)))
    return remap_groups(found, reduced.v_map, reduced.t_map)
