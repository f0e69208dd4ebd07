"""scikit-learn style wrappers.

``X`` may be a :class:`TemporalBipartiteGraph`, a path to an edge-list
file, or an array of ``(u, v, t)`` rows. Both classes clone and pipeline
like any other estimator::

    Pipeline([("core", TemporalCoreFilter(3, 3, 3)),
              ("mfg", MFGEnumerator(3, 3, 3))]).fit(edges)
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .api import ALGORITHMS, enumerate_mfgs, group_labels
from .corefilter import gf_core
from .validation import check_graph, check_params


class TemporalCoreFilter(TransformerMixin, BaseEstimator):
    """Reduce a temporal bipartite graph to its (tau_v, tau_u, lam)-core.

    Attributes
    ----------
    stats_ : CoreStats
        Sizes before and after filtering for the graph seen in ``fit``.
    """

    def __init__(self, tau_u=3, tau_v=3, lam=3):
        self.tau_u = tau_u
        self.tau_v = tau_v
        self.lam = lam

    def fit(self, X, y=None):
        self._reduce(X)
        return self

    def transform(self, X):
        check_is_fitted(self, "stats_")
        return self._reduce(X).graph

    def fit_transform(self, X, y=None, **fit_params):
        return self._reduce(X).graph

    def _reduce(self, X):
        p = check_params(self.tau_u, self.tau_v, self.lam)
        reduced = gf_core(check_graph(X), p.tau_u, p.tau_v, p.lam)
        self.stats_ = reduced.stats
        return reduced


class MFGEnumerator(TransformerMixin, BaseEstimator):
    """Enumerate maximal lam-frequency groups of the V side.

    Parameters
    ----------
    tau_u, tau_v : int
        Minimum U-side and V-side biclique sizes.
    lam : int
        Minimum number of support timestamps.
    algorithm : {"vfree", "filterv", "bk", "oracle"}
    n_jobs : int
        Worker processes for top-level branches.

    Attributes
    ----------
    groups_ : list of FrequencyGroup
        Results in dense ids of ``graph_``.
    labels_ : list of (tuple, tuple)
        Results as (V labels, timestamp values).
    graph_ : TemporalBipartiteGraph
    """

    def __init__(self, tau_u=3, tau_v=3, lam=3, algorithm="vfree", n_jobs=1):
        self.tau_u = tau_u
        self.tau_v = tau_v
        self.lam = lam
        self.algorithm = algorithm
        self.n_jobs = n_jobs

    def fit(self, X, y=None):
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"algorithm must be one of {ALGORITHMS}, got {self.algorithm!r}")
        params = check_params(self.tau_u, self.tau_v, self.lam)
        g = check_graph(X)
        self.graph_ = g
        self.groups_ = enumerate_mfgs(g, params, self.algorithm, workers=self.n_jobs)
        self.labels_ = [group_labels(g, grp) for grp in self.groups_]
        self.n_groups_ = len(self.groups_)
        return self

    def transform(self, X):
        """Membership indicator: one row per V label of ``X``, one column per group."""
        check_is_fitted(self, "groups_")
        g = check_graph(X)
        out = np.zeros((g.n_v, len(self.labels_)), dtype=np.int8)
        row = {lab: i for i, lab in enumerate(g.v_labels)}
        for j, (members, _) in enumerate(self.labels_):
            for lab in members:
                if lab in row:
                    out[row[lab], j] = 1
        return out
