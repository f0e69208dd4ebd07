"""Shared fixtures data and independent reference computations for tests."""

from __future__ import annotations

from itertools import product
from pathlib import Path

import numpy as np
from hypothesis import strategies as st

from mfgroups import Params, TemporalBipartiteGraph, load_edge_list
from mfgroups.generate import generate_graph

DATA = Path(__file__).parent / "data"
SAMPLE = DATA / "sample.txt"

# acceptance criterion number -> (passed, detail), printed in the terminal summary
ACCEPTANCE: dict = {}


def sample() -> TemporalBipartiteGraph:
    return load_edge_list(SAMPLE)


def lab_v(g, *labels):
    return [g.v_index[lab] for lab in labels]


def lab_u(g, *labels):
    return [g.u_index[lab] for lab in labels]


def lab_t(g, *values):
    return [g.t_index[val] for val in values]


def corpus(n: int = 500, seed: int = 2024):
    """Seeded small instances: |U|,|V| <= 8, |T| <= 5, mixed densities and params."""
    rng = np.random.default_rng(seed)
    cases = []
    for i in range(n):
        n_u, n_v = (int(x) for x in rng.integers(1, 9, size=2))
        n_t = int(rng.integers(1, 6))
        p = float(rng.choice([0.3, 0.5, 0.7]))
        tau_u, tau_v, lam = (int(x) for x in rng.integers(1, 4, size=3))
        g, _ = generate_graph(n_u, n_v, n_t, p, seed=int(seed * 1000 + i))
        cases.append((g, Params(tau_u, tau_v, lam)))
    return cases


def naive_support(g, v_set, tau_u):
    """Per-timestamp intersection of m-neighbour sets."""
    out = []
    for t in range(g.n_t):
        common = set(range(g.n_u))
        for v in v_set:
            common &= set(g.snap_v[t][v])
        if len(common) >= tau_u:
            out.append(t)
    return out


def fixpoint_ab_core(pairs, alpha, beta):
    """Delete deficient vertices in whole passes until nothing changes."""
    edges = set(pairs)
    while True:
        deg_u, deg_v = {}, {}
        for u, v in edges:
            deg_u[u] = deg_u.get(u, 0) + 1
            deg_v[v] = deg_v.get(v, 0) + 1
        bad_u = {u for u, d in deg_u.items() if d < alpha}
        bad_v = {v for v, d in deg_v.items() if d < beta}
        if not bad_u and not bad_v:
            return {u for u, _ in edges}, {v for _, v in edges}
        edges = {(u, v) for u, v in edges if u not in bad_u and v not in bad_v}


def fixpoint_core(g, tau_u, tau_v, lam):
    """Temporal core by alternating snapshot peeling and frequency peeling.

    Returns per-snapshot surviving (U set, V set) lists in ids of ``g``.
    """
    edges = {t: {(u, v) for u in range(g.n_u) for v in g.snap_u[t][u]} for t in range(g.n_t)}
    while True:
        changed = False
        alive_v_count = {}
        for t in range(g.n_t):
            us, vs = fixpoint_ab_core(edges[t], tau_v, tau_u)
            kept = {(u, v) for u, v in edges[t] if u in us and v in vs}
            if kept != edges[t]:
                edges[t] = kept
                changed = True
            for v in vs:
                alive_v_count[v] = alive_v_count.get(v, 0) + 1
        weak = {v for v, c in alive_v_count.items() if c < lam}
        if weak:
            for t in range(g.n_t):
                edges[t] = {(u, v) for u, v in edges[t] if v not in weak}
            changed = True
        if not changed:
            break
    alive_u = [frozenset(u for u, _ in edges[t]) for t in range(g.n_t)]
    alive_v = [frozenset(v for _, v in edges[t]) for t in range(g.n_t)]
    return alive_u, alive_v


def all_triples(n_u, n_v, n_t):
    return list(product(range(n_u), range(n_v), range(n_t)))


@st.composite
def temporal_graphs(draw, max_u=6, max_v=6, max_t=4):
    n_u = draw(st.integers(1, max_u))
    n_v = draw(st.integers(1, max_v))
    n_t = draw(st.integers(1, max_t))
    triples = all_triples(n_u, n_v, n_t)
    mask = draw(st.lists(st.booleans(), min_size=len(triples), max_size=len(triples)))
    edges = [e for e, keep in zip(triples, mask) if keep]
    return TemporalBipartiteGraph.from_edges(edges, range(n_u), range(n_v))


params_st = st.builds(Params, st.integers(1, 3), st.integers(1, 3), st.integers(1, 3))
