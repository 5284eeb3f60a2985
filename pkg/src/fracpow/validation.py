"""Input validation: turn the graph encodings users pass around into a :class:`Graph`."""

from __future__ import annotations

import numbers

import numpy as np
import scipy.sparse as sp

from .exceptions import InvalidGraphError
from .graph import Graph


def _from_adjacency(A) -> Graph:
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise InvalidGraphError(f"adjacency matrix must be square, got shape {A.shape}")
    A = sp.coo_matrix(A)
    if (A != A.T).nnz:
        raise InvalidGraphError("adjacency matrix must be symmetric")
    if A.diagonal().any():
        raise InvalidGraphError("adjacency matrix has self-loops")
    edges = {(int(i), int(j)) for i, j, w in zip(A.row, A.col, A.data) if w and i < j}
    return Graph(A.shape[0], sorted(edges))


def check_graph(X) -> Graph:
    """Accept a Graph, a networkx graph, an adjacency matrix (dense or sparse),
    an ``(n, edges)`` pair, or a bare edge list.

    Square numpy arrays are always read as adjacency matrices.
    """
    if isinstance(X, Graph):
        return X
    if hasattr(X, "is_directed") and hasattr(X, "nodes"):
        return Graph.from_networkx(X)
    if sp.issparse(X):
        return _from_adjacency(X)
    if isinstance(X, np.ndarray):
        if X.ndim == 2 and X.shape[0] == X.shape[1]:
            return _from_adjacency(X)
        if X.ndim == 2 and X.shape[1] == 2:
            X = X.tolist()
        else:
            raise InvalidGraphError(f"cannot read a graph from an array of shape {X.shape}")
    if isinstance(X, tuple) and len(X) == 2 and isinstance(X[0], numbers.Integral):
        return Graph(int(X[0]), [tuple(e) for e in X[1]])
    try:
        edges = [tuple(int(x) for x in e) for e in X]
    except TypeError:
        raise InvalidGraphError(f"cannot read a graph from {type(X).__name__}") from None
    if any(len(e) != 2 for e in edges):
        raise InvalidGraphError("edge list entries must be pairs")
    n = 1 + max((max(e) for e in edges), default=-1)
    return Graph(n, edges)


def check_positive_int(name: str, value) -> int:
    if isinstance(value, bool) or not isinstance(value, numbers.Integral) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")
    return int(value)


def check_seed(value) -> int:
    """Seeds are mandatory integers; there is no clock-based default."""
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise ValueError(f"random_state must be an integer seed, got {value!r}")
    return int(value)
