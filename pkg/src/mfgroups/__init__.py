"""Maximal lambda-frequency group enumeration in temporal bipartite graphs."""

from ._common import Counters, FrequencyGroup, Params, counting
from .api import ALGORITHMS, enumerate_mfgs, group_labels
from .corefilter import ab_core, gf_core
from .estimators import MFGEnumerator, TemporalCoreFilter
from .filterv import check_fre, enumerate_bk_baseline, enumerate_filterv
from .graph import TemporalBipartiteGraph, load_edge_list, loads_edge_list, write_edge_list
from .oracle import enumerate_bruteforce
from .vfree import enumerate_vfree

__all__ = [
    "ALGORITHMS",
    "Counters",
    "FrequencyGroup",
    "MFGEnumerator",
    "Params",
    "TemporalBipartiteGraph",
    "TemporalCoreFilter",
    "ab_core",
    "check_fre",
    "counting",
    "enumerate_bk_baseline",
    "enumerate_bruteforce",
    "enumerate_filterv",
    "enumerate_mfgs",
    "enumerate_vfree",
    "gf_core",
    "group_labels",
    "load_edge_list",
    "loads_edge_list",
    "write_edge_list",
]
