import pytest
from hypothesis import given, settings

from mfgroups import Params
from mfgroups.corefilter import ab_core, gf_core
from mfgroups.graph import Snapshot, TemporalBipartiteGraph
from mfgroups.oracle import enumerate_bruteforce

from helpers import lab_v, fixpoint_ab_core, fixpoint_core, params_st, temporal_graphs


def test_ab_core_path_collapses():
    # a path u0-v0-u1-v1 has no (2,2)-core
    snap = Snapshot.from_pairs([(0, 0), (1, 0), (1, 1)])
    assert ab_core(snap, 2, 2) == (frozenset(), frozenset())


def test_ab_core_keeps_square_drops_pendant():
    snap = Snapshot.from_pairs([(0, 0), (0, 1), (1, 0), (1, 1), (2, 1)])
    assert ab_core(snap, 2, 2) == (frozenset({0, 1}), frozenset({0, 1}))


def test_ab_core_alpha_beta_are_side_specific():
    # star centred on u0: u0 has degree 3, each v has degree 1
    snap = Snapshot.from_pairs([(0, 0), (0, 1), (0, 2)])
    assert ab_core(snap, 3, 1) == (frozenset({0}), frozenset({0, 1, 2}))
    assert ab_core(snap, 1, 3) == (frozenset(), frozenset())


@given(temporal_graphs(max_u=7, max_v=7, max_t=1))
def test_ab_core_matches_fixpoint(g):
    pairs = [(u, v) for u, v, _ in g.temporal_edges()]
    for alpha in (1, 2, 3):
        for beta in (1, 2, 3):
            us, vs = ab_core(Snapshot.from_pairs(pairs), alpha, beta)
            ref_u, ref_v = fixpoint_ab_core(pairs, alpha, beta)
            assert (set(us), set(vs)) == (ref_u, ref_v)


def test_lambda_above_timestamp_count_gives_empty_core(sample):
    reduced = gf_core(sample, 1, 1, sample.n_t + 1)
    assert reduced.graph.n_edges == 0
    assert reduced.stats.pruned_pct == 100.0


def test_trivial_thresholds_keep_everything(sample):
    reduced = gf_core(sample, 1, 1, 1)
    assert reduced.graph.n_edges == sample.n_edges
    assert reduced.stats.pruned_pct == 0.0


def test_empty_graph_stats():
    reduced = gf_core(TemporalBipartiteGraph.from_edges([]), 2, 2, 2)
    assert reduced.stats.pruned_pct == 0.0
    assert reduced.graph.n_edges == 0


def test_sample_core_keeps_group_vertices(sample):
    reduced = gf_core(sample, 2, 2, 3)
    kept = set(reduced.v_map)
    assert set(lab_v(sample, 1, 2, 3, 4, 5)) <= kept


def _core_edges(reduced):
    rg = reduced.graph
    return {
        (reduced.u_map[u], reduced.v_map[v], reduced.t_map[t]) for u, v, t in rg.temporal_edges()
    }


@settings(max_examples=150)
@given(temporal_graphs(), params_st)
def test_gf_core_matches_fixpoint(g, p):
    reduced = gf_core(g, p.tau_u, p.tau_v, p.lam)
    alive_u, alive_v = fixpoint_core(g, p.tau_u, p.tau_v, p.lam)
    assert reduced.alive_u == alive_u
    assert reduced.alive_v == alive_v
    expected = {
        (u, v, t)
        for u, v, t in g.temporal_edges()
        if u in alive_u[t] and v in alive_v[t]
    }
    assert _core_edges(reduced) == expected
    assert reduced.max_edge_deletions <= 1


@settings(max_examples=150)
@given(temporal_graphs(), params_st)
def test_gf_core_idempotent_and_safe(g, p):
    once = gf_core(g, p.tau_u, p.tau_v, p.lam)
    twice = gf_core(once.graph, p.tau_u, p.tau_v, p.lam)
    assert twice.graph.n_edges == once.graph.n_edges
    kept = set(once.v_map)
    for grp in enumerate_bruteforce(g, p):
        assert set(grp.members) <= kept


@settings(max_examples=100)
@given(temporal_graphs(), params_st)
def test_gf_core_monotone_in_thresholds(g, p):
    base = _core_edges(gf_core(g, p.tau_u, p.tau_v, p.lam))
    for bigger in (
        Params(p.tau_u + 1, p.tau_v, p.lam),
        Params(p.tau_u, p.tau_v + 1, p.lam),
        Params(p.tau_u, p.tau_v, p.lam + 1),
    ):
        assert _core_edges(gf_core(g, bigger.tau_u, bigger.tau_v, bigger.lam)) <= base


def test_core_is_a_subgraph_with_consistent_maps(sample):
    reduced = gf_core(sample, 2, 2, 3)
    assert _core_edges(reduced) <= set(sample.temporal_edges())
    assert list(reduced.v_map) == sorted(reduced.v_map)
    s = reduced.stats
    assert s.edges_pruned == s.n_edges_before - s.n_edges_after
    assert 0.0 <= s.pruned_pct <= 100.0

