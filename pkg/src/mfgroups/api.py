from __future__ import annotations

from ._common import FrequencyGroup, Params
from .filterv import enumerate_bk_baseline, enumerate_filterv
from .graph import TemporalBipartiteGraph
from .oracle import DEFAULT_MAX_V, enumerate_bruteforce
from .vfree import enumerate_vfree

ALGORITHMS = ("bk", "filterv", "vfree", "oracle")


def enumerate_mfgs(
    g: TemporalBipartiteGraph,
    params: Params,
    algorithm: str = "vfree",
    workers: int = 1,
    oracle_max_v: int = DEFAULT_MAX_V,
) -> list[FrequencyGroup]:
    """Dispatch to one of the enumerators; all return the same sorted list."""
    if algorithm == "vfree":
        return enumerate_vfree(g, params, workers=workers)
    if algorithm == "filterv":
        return enumerate_filterv(g, params, workers=workers)
    if algorithm == "bk":
        return enumerate_bk_baseline(g, params, workers=workers)
    if algorithm == "oracle":
        return enumerate_bruteforce(g, params, max_v=oracle_max_v)
    raise ValueError(f"unknown algorithm {algorithm!r}; choose from {', '.join(ALGORITHMS)}")


def group_labels(g: TemporalBipartiteGraph, group: FrequencyGroup) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Original V labels and timestamp values of ``group``, both ascending."""
    return (
        tuple(sorted(g.v_labels[v] for v in group.members)),
        tuple(sorted(g.t_values[t] for t in group.support)),
    )
