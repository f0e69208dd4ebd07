import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings

from mfgroups import Params
from mfgroups._common import counting
from mfgroups.filterv import (
    BranchState,
    FrequencyScratch,
    TimestampIndex,
    candidate_filter,
    check_fre,
    check_maximality,
    enumerate_bk_baseline,
    enumerate_filterv,
    group_support,
    naive_is_frequent,
    support_count_reborn,
    update_array,
    valid_candidate_set,
)
from mfgroups.graph import TemporalBipartiteGraph
from mfgroups.oracle import enumerate_bruteforce

from helpers import lab_u, lab_v, naive_support, params_st, temporal_graphs


def _common_u(g, v_set):
    us = set(range(g.n_u))
    for v in v_set:
        us &= set(g.static_adj_v[v])
    return frozenset(us)


def test_sample_reborn_row(sample):
    vs = lab_v(sample, 1, 2, 3, 5)
    assert support_count_reborn(sample, lab_u(sample, 1)[0], vs) == [1, 3, 0, 4, 0, 3]


def test_sample_update_array(sample):
    vs = lab_v(sample, 1, 2, 3, 5)
    assert update_array(sample, _common_u(sample, vs), vs) == [2, 0, 2, 2, 0, 1]
    sup = group_support(sample, _common_u(sample, vs), vs, 2)
    assert len(sup) == 3
    assert check_fre(sample, _common_u(sample, vs), vs, Params(2, 2, 3))
    assert not check_fre(sample, _common_u(sample, vs), vs, Params(2, 2, 4))


@settings(max_examples=200)
@given(temporal_graphs(), params_st)
def test_check_fre_matches_intersection(g, p):
    scratch = FrequencyScratch(g.n_t)
    rng = random.Random(g.n_edges)
    for size in range(1, g.n_v + 1):
        vs = rng.sample(range(g.n_v), size)
        expected = len(naive_support(g, vs, p.tau_u)) >= p.lam
        assert check_fre(g, _common_u(g, vs), vs, p, scratch) == expected
        assert naive_is_frequent(g, vs, p) == expected
        assert scratch.is_clean()
        assert list(group_support(g, _common_u(g, vs), vs, p.tau_u)) == naive_support(g, vs, p.tau_u)


def test_check_fre_rejects_empty(sample):
    with pytest.raises(ValueError):
        check_fre(sample, frozenset(), [], Params(1, 1, 1))


@settings(max_examples=100)
@given(temporal_graphs(), params_st)
def test_candidate_filter_never_drops_a_valid_candidate(g, p):
    index = TimestampIndex(g, p.tau_u)
    for v_s in itertools.chain([[]], ([v] for v in range(g.n_v))):
        cands = [c for c in range(g.n_v) if c not in v_s]
        kept = set(candidate_filter(index, v_s, cands, p.lam))
        for c in cands:
            if len(naive_support(g, v_s + [c], p.tau_u)) >= p.lam:
                assert c in kept


def test_timestamp_index_sample(sample):
    index = TimestampIndex(sample, 2)
    v1 = lab_v(sample, 1)[0]
    assert [sample.t_values[t] for t in index.timestamps(v1)] == [1, 2, 3, 4]


def _valid(g, v_s, p):
    state = BranchState(_common_u(g, v_s), list(v_s), [c for c in range(g.n_v) if c not in v_s])
    return valid_candidate_set(g, state, p)


def test_sample_valid_candidates(sample):
    p = Params(2, 2, 3)
    assert sorted(_valid(sample, lab_v(sample, 1), p)) == sorted(lab_v(sample, 2, 3, 5))
    assert sorted(_valid(sample, lab_v(sample, 1, 2), p)) == sorted(lab_v(sample, 3, 5))


def test_sample_maximality(sample):
    p = Params(2, 2, 3)
    group = lab_v(sample, 1, 2, 3, 5)
    u_s = _common_u(sample, group)
    assert check_maximality(sample, BranchState(u_s, group, [], lab_v(sample, 4)), p)
    sub = lab_v(sample, 1, 2, 3)
    assert not check_maximality(sample, BranchState(_common_u(sample, sub), sub, [], lab_v(sample, 5)), p)
    assert check_maximality(sample, BranchState(u_s, group, [], []), p)


@pytest.mark.parametrize("enumerate_fn", [enumerate_filterv, enumerate_bk_baseline])
@settings(max_examples=150, deadline=None)
@given(g=temporal_graphs(), p=params_st)
def test_matches_oracle(enumerate_fn, g, p):
    assert enumerate_fn(g, p) == enumerate_bruteforce(g, p)


def test_filterv_debug_keeps_scratch_clean(small_corpus):
    for g, p in small_corpus[:100]:
        assert enumerate_filterv(g, p, debug=True) == enumerate_bruteforce(g, p)


def _biclique_oracle(g, p):
    """V-sides of maximal bicliques of a one-snapshot graph, via clique search."""
    h = nx.Graph()
    us = [("u", u) for u in range(g.n_u)]
    vs = [("v", v) for v in range(g.n_v)]
    h.add_nodes_from(us + vs)
    h.add_edges_from(itertools.combinations(us, 2))
    h.add_edges_from(itertools.combinations(vs, 2))
    h.add_edges_from((("u", u), ("v", v)) for u, v, _ in g.temporal_edges())
    sides = set()
    for clique in nx.find_cliques(h):
        a = [x for s, x in clique if s == "u"]
        b = frozenset(x for s, x in clique if s == "v")
        if len(a) >= p.tau_u and len(b) >= p.tau_v:
            sides.add(b)
    return sorted(tuple(sorted(b)) for b in sides if not any(b < c for c in sides))


@settings(max_examples=150, deadline=None)
@given(temporal_graphs(max_u=7, max_v=7, max_t=1), params_st)
def test_single_snapshot_is_maximal_biclique_enumeration(g, p):
    p = Params(p.tau_u, p.tau_v, 1)
    if g.n_t == 0:
        return
    expected = _biclique_oracle(g, p)
    assert [grp.members for grp in enumerate_bk_baseline(g, p)] == expected
    assert [grp.members for grp in enumerate_filterv(g, p)] == expected


def test_parallel_workers_agree(small_corpus):
    for g, p in small_corpus[:30]:
        expected = enumerate_bruteforce(g, p)
        assert enumerate_filterv(g, p, workers=2) == expected
        assert enumerate_bk_baseline(g, p, workers=2) == expected


def test_counters_record_checks(sample):
    with counting() as c:
        enumerate_filterv(sample, Params(2, 2, 3))
    assert c.frequency_checks > 0
    assert c.frames == len(c.filterv_frames)
    assert all(checks >= cands for cands, checks in c.filterv_frames)
    with counting() as c:
        enumerate_bk_baseline(sample, Params(2, 2, 3))
    assert c.frequency_checks > 0
    assert c.subset_comparisons > 0


def test_degenerate_parameters_return_nothing(sample):
    assert enumerate_filterv(sample, Params(1, 6, 1)) == []
    assert enumerate_bk_baseline(sample, Params(1, 1, 7)) == []
    empty = TemporalBipartiteGraph.from_edges([])
    assert enumerate_filterv(empty, Params(1, 1, 1)) == []
