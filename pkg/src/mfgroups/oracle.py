"""Brute-force reference enumeration, straight from the definitions.

Nothing here prunes; it exists to be obviously correct on small graphs.
"""

from __future__ import annotations

from itertools import combinations

from ._common import FrequencyGroup, Params
from .graph import TemporalBipartiteGraph

DEFAULT_MAX_V = 20


class OracleSizeError(ValueError):
    pass


def support_timestamps(g: TemporalBipartiteGraph, v_set, tau_u: int) -> list[int]:
    """Timestamps where the members of ``v_set`` share >= tau_u m-neighbours."""
    v_set = list(v_set)
    if not v_set:
        raise ValueError("v_set must be non-empty")
    out = []
    for t in range(g.n_t):
        common = set(g.snap_v[t][v_set[0]])
        for v in v_set[1:]:
            common &= set(g.snap_v[t][v])
        if len(common) >= tau_u:
            out.append(t)
    return out


def is_frequency_group(g: TemporalBipartiteGraph, v_set, params: Params) -> bool:
    v_set = list(v_set)
    if len(v_set) < params.tau_v:
        return False
    return len(support_timestamps(g, v_set, params.tau_u)) >= params.lam


def enumerate_bruteforce(
    g: TemporalBipartiteGraph, params: Params, max_v: int = DEFAULT_MAX_V
) -> list[FrequencyGroup]:
    """Every maximal frequency group, found by checking all subsets of V."""
    if g.n_v > max_v:
        raise OracleSizeError(f"|V|={g.n_v} exceeds oracle limit {max_v}")
    frequent = []
    for size in range(params.tau_v, g.n_v + 1):
        for combo in combinations(range(g.n_v), size):
            sup = support_timestamps(g, combo, params.tau_u)
            if len(sup) >= params.lam:
                frequent.append((frozenset(combo), combo, tuple(sup)))
    kept = []
    # larger sets come last; scan backwards so every superset is seen first
    for members, combo, sup in reversed(frequent):
        if not any(members < other for other, _, _ in kept):
            kept.append((members, combo, sup))
    return sorted(FrequencyGroup(combo, sup) for _, combo, sup in kept)
