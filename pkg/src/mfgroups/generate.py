"""Seeded synthetic temporal bipartite graphs with optional planted blocks."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import TemporalBipartiteGraph


@dataclass(frozen=True)
class BlockSpec:
    """A complete |U_B| x |V_B| biclique repeated at ``n_t`` timestamps."""

    n_u: int
    n_v: int
    n_t: int

    @classmethod
    def parse(cls, text: str) -> "BlockSpec":
        parts = text.replace("x", ",").split(",")
        if len(parts) != 3:
            raise ValueError(f"block spec must be 'U,V,T', got {text!r}")
        return cls(*(int(p) for p in parts))


@dataclass(frozen=True)
class PlantedBlock:
    us: tuple[int, ...]
    vs: tuple[int, ...]
    ts: tuple[int, ...]


def generate_edges(
    n_u: int,
    n_v: int,
    n_t: int,
    edge_prob: float,
    seed: int = 0,
    blocks: list[BlockSpec] | tuple = (),
) -> tuple[list[tuple[int, int, int]], list[PlantedBlock]]:
    """Bernoulli(edge_prob) temporal edges plus planted bicliques.

    Labels are ``0..n-1`` per side and timestamps ``0..n_t-1``. Output is
    sorted and depends only on the arguments.
    """
    if min(n_u, n_v, n_t) < 1:
        raise ValueError("n_u, n_v and n_t must be positive")
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError(f"edge_prob must lie in [0, 1], got {edge_prob}")
    for b in blocks:
        if not (1 <= b.n_u <= n_u and 1 <= b.n_v <= n_v and 1 <= b.n_t <= n_t):
            raise ValueError(f"block {b} does not fit in a {n_u}x{n_v}x{n_t} graph")
    rng = np.random.default_rng(seed)
    edges: set[tuple[int, int, int]] = set()
    if edge_prob > 0:
        for t in range(n_t):
            us, vs = np.nonzero(rng.random((n_u, n_v)) < edge_prob)
            edges.update(zip(us.tolist(), vs.tolist(), [t] * len(us)))
    planted = []
    for b in blocks:
        bu = tuple(sorted(rng.choice(n_u, size=b.n_u, replace=False).tolist()))
        bv = tuple(sorted(rng.choice(n_v, size=b.n_v, replace=False).tolist()))
        bt = tuple(sorted(rng.choice(n_t, size=b.n_t, replace=False).tolist()))
        edges.update((u, v, t) for u in bu for v in bv for t in bt)
        planted.append(PlantedBlock(bu, bv, bt))
    return sorted(edges), planted


def generate_graph(n_u, n_v, n_t, edge_prob, seed=0, blocks=()) -> tuple[TemporalBipartiteGraph, list[PlantedBlock]]:
    edges, planted = generate_edges(n_u, n_v, n_t, edge_prob, seed, blocks)
    g = TemporalBipartiteGraph.from_edges(edges, range(n_u), range(n_v))
    return g, planted
