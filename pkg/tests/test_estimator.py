import networkx as nx
import numpy as np
import pytest
import scipy.sparse as sp
from sklearn.base import clone

from fracpow.estimator import FractionalPowerColouring, FractionalPowerTransformer
from fracpow.exceptions import InvalidGraphError
from fracpow.generators import complete, cycle
from fracpow.graph import Graph
from fracpow.oracles import verify_colouring
from fracpow.validation import check_graph, check_seed


class TestCheckGraph:
    def test_encodings_agree(self):
        g = cycle(4)
        dense = nx.to_numpy_array(g.to_networkx(), dtype=int)
        for X in (g, g.to_networkx(), dense, sp.csr_matrix(dense), (4, list(g.edges)),
                  list(g.edges), np.array(g.edges)):
            assert check_graph(X) == g

    def test_rejections(self):
        with pytest.raises(InvalidGraphError):
            check_graph(np.array([[0, 1], [0, 0]]))
        with pytest.raises(InvalidGraphError):
            check_graph(np.eye(2))
        with pytest.raises(InvalidGraphError):
            check_graph(5)
        with pytest.raises(InvalidGraphError):
            check_graph([(0, 1, 2)])

    def test_seed(self):
        assert check_seed(np.int64(3)) == 3
        with pytest.raises(ValueError):
            check_seed(None)


class TestTransformer:
    def test_k2(self):
        A = FractionalPowerTransformer(m=3, n=3).fit_transform(complete(2))
        assert (A.toarray() == 1 - np.eye(4, dtype=int)).all()

    def test_edgeless(self):
        t = FractionalPowerTransformer()
        assert t.transform(Graph(3)).nnz == 0
        assert t.power_.graph.n == 3

    def test_params(self):
        t = FractionalPowerTransformer(m=2, n=5)
        assert t.get_params() == {"m": 2, "n": 5}
        with pytest.raises(ValueError):
            FractionalPowerTransformer(m=0).fit()


class TestColouring:
    def test_fit(self):
        est = FractionalPowerColouring(k=3, random_state=1).fit(cycle(6))
        h = est.power_graph(cycle(6)).graph
        assert verify_colouring(h, est.labels_.tolist()) == []
        assert est.n_colours_ >= est.lower_bound_ == 3
        assert est.n_vertices_in_ == 6

    def test_clone_and_params(self):
        est = FractionalPowerColouring(k=4, random_state=7, compact=True)
        twin = clone(est)
        assert twin.get_params() == est.get_params()
        assert (twin.fit_predict(cycle(5)) == est.fit_predict(cycle(5))).all()

    def test_invalid(self):
        with pytest.raises(ValueError):
            FractionalPowerColouring(k=1).fit(cycle(4))
        with pytest.raises(ValueError):
            FractionalPowerColouring(random_state=None).fit(cycle(4))
