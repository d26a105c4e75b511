"""scikit-learn compatible wrappers.

:class:`SimplexEmbedding` is a transformer mapping share vectors onto the
isometric ``(s-1)``-dimensional coordinates, so division points can feed
any sklearn pipeline.  :class:`CoinDivisionFractal` fits the division set
of a geometric coin family and predicts the multiplicity of arbitrary share
vectors (zero for impossible divisions).
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_players, check_shares
from .analysis import classify, similarity_dimension
from .coins import GeometricFamilySpec, make_geometric
from .embedding import basis_matrix, embed_array
from .enumeration import DEFAULT_CAP, enumerate_divisions, is_complete
from .errors import DomainError
from .ifs import construct_inductive


class SimplexEmbedding(TransformerMixin, BaseEstimator):
    """Isometric embedding of share vectors into ``R^(s-1)``.

    ``fit`` records the number of players and, when every row carries the
    same total, that total, which :meth:`inverse_transform` needs.
    """

    def fit(self, X, y=None):
        X = check_shares(X)
        if X.shape[1] < 2:
            raise DomainError("embedding needs at least two players")
        self.n_features_in_ = X.shape[1]
        totals = X.sum(axis=1)
        self.total_ = int(totals[0]) if np.all(totals == totals[0]) else None
        self.components_ = basis_matrix(X.shape[1]).T
        return self

    def transform(self, X):
        check_is_fitted(self, "components_")
        X = check_shares(X, players=self.n_features_in_)
        return embed_array(X)

    def inverse_transform(self, X):
        """Recover float share vectors on the fitted total's hyperplane."""
        check_is_fitted(self, "components_")
        if self.total_ is None:
            raise DomainError("inverse_transform needs rows fitted with a common total")
        Y = np.asarray(X, dtype=float)
        if Y.ndim != 2 or Y.shape[1] != self.n_features_in_ - 1:
            raise DomainError(f"expected {self.n_features_in_ - 1} embedded coordinates per row")
        shares = Y @ self.components_
        shares[:, -1] += self.total_
        return shares

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "components_")
        return np.array([f"v{j}" for j in range(1, self.n_features_in_)], dtype=object)


class CoinDivisionFractal(BaseEstimator):
    """Division set of ``S_{r,c,m}`` among ``players`` players.

    Parameters
    ----------
    r, c, m : int
        Geometric family: face values ``1, r, ..., r**(m-1)``, ``c`` coins each.
    players : int
        Number of players sharing the coins.
    method : {"inductive", "enumerate"}
        Translate-and-union construction or brute-force enumeration; both
        give identical results.
    cap : int
        Work cap passed to the construction.

    Attributes
    ----------
    divisions_ : DivisionSet
    points_, multiplicities_ : ndarray
    dimension_ : DimensionResult
    ramification_ : RamificationClass
    complete_ : bool
    """

    def __init__(self, r=2, c=1, m=6, players=3, method="inductive", cap=DEFAULT_CAP):
        self.r = r
        self.c = c
        self.m = m
        self.players = players
        self.method = method
        self.cap = cap

    def fit(self, X=None, y=None):
        spec = GeometricFamilySpec(self.r, self.c, self.m)
        players = check_players(self.players)
        if self.method == "inductive":
            divisions = construct_inductive(spec, players, cap=self.cap)
        elif self.method == "enumerate":
            divisions = enumerate_divisions(make_geometric(spec), players, cap=self.cap)
        else:
            raise DomainError(f"method must be 'inductive' or 'enumerate', got {self.method!r}")
        self.spec_ = spec
        self.divisions_ = divisions
        self.points_ = divisions.points
        self.multiplicities_ = divisions.multiplicities
        self.n_features_in_ = players
        self.dimension_ = similarity_dimension(spec.r, spec.c, players)
        self.ramification_ = classify(spec.r, spec.c)
        self.complete_ = is_complete(make_geometric(spec))
        self._lookup = divisions.as_dict()
        return self

    def predict(self, X):
        """Multiplicity of each row of ``X``; 0 where the division is impossible."""
        check_is_fitted(self, "divisions_")
        X = check_shares(X, players=self.n_features_in_)
        return np.array([self._lookup.get(tuple(row), 0) for row in X.tolist()], dtype=np.int64)

    def transform(self, X=None):
        """Embedded coordinates of ``X``, or of the fitted points when ``X`` is None."""
        check_is_fitted(self, "divisions_")
        X = self.points_ if X is None else check_shares(X, players=self.n_features_in_)
        return embed_array(X)

    def score(self, X, y=None):
        """Fraction of rows of ``X`` that are achievable divisions."""
        return float(np.mean(self.predict(X) > 0))
