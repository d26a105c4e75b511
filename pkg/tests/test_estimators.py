import math

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import StandardScaler

from coinfrac import GeometricFamilySpec
from coinfrac.analysis import RamificationClass
from coinfrac.embedding import embed_array
from coinfrac.errors import DomainError
from coinfrac.estimators import CoinDivisionFractal, SimplexEmbedding
from coinfrac.ifs import construct_inductive


def test_embedding_transform_matches_function():
    X = construct_inductive(GeometricFamilySpec(2, 1, 4), 4).points
    emb = SimplexEmbedding().fit(X)
    assert emb.n_features_in_ == 4 and emb.total_ == 15
    assert np.array_equal(emb.transform(X), embed_array(X))
    assert emb.fit_transform(X).shape == (len(X), 3)
    assert list(emb.get_feature_names_out()) == ["v1", "v2", "v3"]


def test_embedding_inverse_round_trip():
    X = construct_inductive(GeometricFamilySpec(3, 2, 3), 3).points
    emb = SimplexEmbedding().fit(X)
    assert emb.inverse_transform(emb.transform(X)) == pytest.approx(X.astype(float), abs=1e-9)


def test_embedding_validation():
    with pytest.raises(NotFittedError):
        SimplexEmbedding().transform([[1, 0]])
    with pytest.raises(DomainError):
        SimplexEmbedding().fit([[1.5, 0.5]])
    with pytest.raises(DomainError):
        SimplexEmbedding().fit([[-1, 2]])
    with pytest.raises(DomainError):
        SimplexEmbedding().fit([[3]])
    emb = SimplexEmbedding().fit([[1, 0, 0], [2, 0, 0]])
    assert emb.total_ is None
    with pytest.raises(DomainError):
        emb.inverse_transform([[0.0, 0.0]])
    with pytest.raises(DomainError):
        emb.transform([[1, 0]])
    assert emb.transform(np.array([[1.0, 0.0, 0.0]])).shape == (1, 2)


def test_embedding_in_pipeline():
    X = construct_inductive(GeometricFamilySpec(2, 1, 5), 3).points
    out = make_pipeline(SimplexEmbedding(), StandardScaler()).fit_transform(X)
    assert out.shape == (243, 2)
    assert out.mean(axis=0) == pytest.approx([0, 0], abs=1e-9)


def test_fractal_fit_attributes():
    est = CoinDivisionFractal(r=3, c=3, m=4, players=3).fit()
    assert est.divisions_.max_multiplicity == 9
    assert est.ramification_ is RamificationClass.INFINITELY_RAMIFIED
    assert not est.dimension_.defined
    assert est.complete_
    assert est.multiplicities_.sum() == 10**4


def test_fractal_methods_agree():
    a = CoinDivisionFractal(r=3, c=2, m=3, method="inductive").fit()
    b = CoinDivisionFractal(r=3, c=2, m=3, method="enumerate").fit()
    assert a.divisions_ == b.divisions_
    with pytest.raises(DomainError):
        CoinDivisionFractal(method="chaos").fit()


def test_fractal_predict_and_score():
    est = CoinDivisionFractal(r=3, c=1, m=2, players=2).fit()
    X = [[0, 4], [1, 3], [2, 2], [3, 1], [4, 0]]
    assert est.predict(X).tolist() == [1, 1, 0, 1, 1]
    assert est.score(X) == pytest.approx(0.8)
    with pytest.raises(DomainError):
        est.predict([[1, 2, 1]])


def test_fractal_transform():
    est = CoinDivisionFractal(r=2, c=1, m=6, players=3).fit()
    assert est.transform().shape == (729, 2)
    assert est.dimension_.value == pytest.approx(math.log(3) / math.log(2), abs=1e-9)
    assert est.transform([[63, 0, 0]]) == pytest.approx(embed_array(np.array([[63, 0, 0]])))


def test_params_and_clone():
    est = CoinDivisionFractal(r=4, c=2, m=3, players=4, cap=10**6)
    params = est.get_params()
    assert params == dict(r=4, c=2, m=3, players=4, method="inductive", cap=10**6)
    twin = clone(est).set_params(m=2)
    assert twin.m == 2 and est.m == 3
    with pytest.raises(NotFittedError):
        est.predict([[1, 0, 0, 0]])
