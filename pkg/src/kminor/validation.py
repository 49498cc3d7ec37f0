"""Input coercion for the estimator: anything graph-like to a Graph."""

from __future__ import annotations

from typing import Any

import numpy as np

from .graph import Graph


def as_graph(X: Any) -> Graph:
    """Coerce X into a Graph.

    Accepts a Graph (returned as-is), a square symmetric adjacency matrix
    with a zero diagonal (dense array-like, or any scipy-style sparse object
    with a ``tocoo`` method; nonzero means edge), rejecting everything else.
    """
    if isinstance(X, Graph):
        return X
    if hasattr(X, "tocoo"):
        return _from_coo(X.tocoo())
    arr = np.asarray(X)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"adjacency matrix must be square, got shape {arr.shape}")
    return _from_dense(arr)


def _from_dense(arr: np.ndarray) -> Graph:
    n = arr.shape[0]
    if np.any(arr.diagonal()):
        raise ValueError("adjacency matrix must have a zero diagonal (no self-loops)")
    mask = arr != 0
    if not np.array_equal(mask, mask.T):
        raise ValueError("adjacency matrix must be symmetric")
    g = Graph(n)
    rows, cols = np.nonzero(mask)
    for u, v in zip(rows.tolist(), cols.tolist()):
        if u < v:
            g.add_edge(u, v)
    return g


def _from_coo(coo: Any) -> Graph:
    n, m = coo.shape
    if n != m:
        raise ValueError(f"adjacency matrix must be square, got shape {coo.shape}")
    entries: dict[tuple[int, int], Any] = {}
    for u, v, w in zip(coo.row.tolist(), coo.col.tolist(), coo.data.tolist()):
        if not w:
            continue
        if u == v:
            raise ValueError("adjacency matrix must have a zero diagonal (no self-loops)")
        entries[(u, v)] = w
    g = Graph(n)
    for (u, v), _ in sorted(entries.items()):
        if (v, u) not in entries:
            raise ValueError("adjacency matrix must be symmetric")
        if u < v:
            g.add_edge(u, v)
    return g
