from __future__ import annotations

import os

import numpy as np
from sklearn.utils import check_array

from ._common import Params
from .graph import TemporalBipartiteGraph, load_edge_list


def check_params(tau_u, tau_v, lam) -> Params:
    """Validate thresholds and return them as :class:`Params`."""
    values = []
    for name, value in (("tau_u", tau_u), ("tau_v", tau_v), ("lam", lam)):
        if isinstance(value, (np.integer,)):
            value = int(value)
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"{name} must be an integer, got {type(value).__name__}")
        values.append(value)
    return Params(*values)


def check_edges(X) -> np.ndarray:
    """Validate an ``(n_edges, 3)`` array of non-negative integer labels."""
    arr = check_array(X, dtype=None, ensure_min_samples=0, ensure_all_finite=True)
    if arr.dtype.kind == "f":
        if not np.all(arr == np.floor(arr)):
            raise ValueError("labels and timestamps must be integers")
    elif arr.dtype.kind not in "iub":
        raise ValueError(f"expected an integer array, got dtype {arr.dtype}")
    arr = arr.astype(np.int64)
    if arr.shape[1] != 3:
        raise ValueError(f"expected 3 columns (u, v, t), got {arr.shape[1]}")
    if arr.size and arr.min() < 0:
        raise ValueError("labels and timestamps must be non-negative")
    return arr


def check_graph(X) -> TemporalBipartiteGraph:
    """Coerce a graph, an edge-list path, or an edge array to a graph."""
    if isinstance(X, TemporalBipartiteGraph):
        return X
    if isinstance(X, (str, os.PathLike)):
        return load_edge_list(X)
    arr = check_edges(X)
    return TemporalBipartiteGraph.from_edges(map(tuple, arr.tolist()))
