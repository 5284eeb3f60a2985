"""scikit-learn style wrappers.

>>> from fracpow import FractionalPowerColouring, generate
>>> est = FractionalPowerColouring(k=3, random_state=0).fit(generate("cycle", 5))
>>> est.n_colours_ >= est.lower_bound_
True
"""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .colouring import ColouringConfig, colour_kk
from .graph import fractional_power
from .validation import check_graph, check_positive_int, check_seed


class FractionalPowerTransformer(TransformerMixin, BaseEstimator):
    """Map a graph to the adjacency matrix of its fractional power ``G^{m/n}``.

    Stateless: ``fit`` only validates the parameters.  The provenance of the
    last transformed graph is kept in ``power_``.
    """

    def __init__(self, m=3, n=3):
        self.m = m
        self.n = n

    def fit(self, X=None, y=None):
        check_positive_int("m", self.m)
        check_positive_int("n", self.n)
        return self

    def __sklearn_is_fitted__(self):
        return True

    def transform(self, X):
        self.fit()
        g = check_graph(X)
        self.power_ = fractional_power(g, int(self.m), int(self.n))
        h = self.power_.graph
        if not h.edges:
            return sp.csr_matrix((h.n, h.n), dtype=np.int8)
        rows, cols = np.array(h.edges, dtype=np.int64).T
        data = np.ones(2 * len(rows), dtype=np.int8)
        return sp.csr_matrix(
            (data, (np.concatenate([rows, cols]), np.concatenate([cols, rows]))),
            shape=(h.n, h.n),
        )


class FractionalPowerColouring(BaseEstimator):
    """Proper colouring of ``G^{k/k}`` with ``floor(k/2) * Delta + O(log Delta)`` colours.

    Parameters
    ----------
    k : int, default=3
        Power and subdivision order, at least 2.
    random_state : int, default=0
        Seed for list sampling.  Required; runs are reproducible.
    r_min, r_override, max_rounds, max_escalations, compact
        See :class:`fracpow.colouring.ColouringConfig`.

    Attributes
    ----------
    labels_ : ndarray of shape (n_power_vertices,)
        Colour of every vertex of ``G^{k/k}``.
    n_colours_ : int
    lower_bound_ : int
        ``floor(k/2) * Delta + 1``, the size of a clique around a max-degree vertex.
    stats_ : Stats
    """

    def __init__(self, k=3, random_state=0, r_min=4, r_override=None,
                 max_rounds=200, max_escalations=6, compact=False):
        self.k = k
        self.random_state = random_state
        self.r_min = r_min
        self.r_override = r_override
        self.max_rounds = max_rounds
        self.max_escalations = max_escalations
        self.compact = compact

    def _config(self) -> ColouringConfig:
        return ColouringConfig(
            r_min=check_positive_int("r_min", self.r_min),
            r_override=None if self.r_override is None else check_positive_int("r_override", self.r_override),
            max_rounds=self.max_rounds,
            max_escalations=self.max_escalations,
            compact=bool(self.compact),
        )

    def fit(self, X, y=None):
        k = check_positive_int("k", self.k)
        if k < 2:
            raise ValueError("k must be at least 2")
        g = check_graph(X)
        colour, stats = colour_kk(g, k, check_seed(self.random_state), self._config())
        self.labels_ = np.asarray(colour, dtype=np.int64)
        self.n_colours_ = stats.colours_used
        self.stats_ = stats
        self.lower_bound_ = (k // 2) * g.max_degree + 1 if g.n else 0
        self.n_vertices_in_ = g.n
        return self

    def fit_predict(self, X, y=None):
        return self.fit(X).labels_

    def power_graph(self, X):
        """The fractional power the fitted labels refer to."""
        check_is_fitted(self)
        return fractional_power(check_graph(X), int(self.k), int(self.k))
