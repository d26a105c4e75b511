"""Input validation shared by the library functions and the estimators."""
from __future__ import annotations

import numbers

import numpy as np
from sklearn.utils.validation import check_array

from .errors import DomainError


def check_players(players) -> int:
    if isinstance(players, bool) or not isinstance(players, numbers.Integral):
        raise DomainError(f"player count must be an integer, got {players!r}")
    if players < 1:
        raise DomainError(f"player count must be >= 1, got {players}")
    return int(players)


def check_shares(X, *, players: int | None = None, same_total: bool = False) -> np.ndarray:
    """Validate an ``(n, s)`` array of non-negative integer shares.

    Float input is accepted only when every entry is integral.  With
    ``same_total`` all rows must sum to one common amount.
    """
    arr = check_array(X, dtype=None, ensure_2d=True, ensure_min_samples=1)
    if not np.issubdtype(arr.dtype, np.integer):
        as_float = np.asarray(arr, dtype=float)
        if not np.all(np.isfinite(as_float)) or np.any(as_float != np.round(as_float)):
            raise DomainError("shares must be integers")
        arr = as_float
    arr = arr.astype(np.int64)
    if players is not None and arr.shape[1] != players:
        raise DomainError(f"expected {players} share columns, got {arr.shape[1]}")
    if arr.min() < 0:
        raise DomainError("shares must be non-negative")
    if same_total:
        totals = arr.sum(axis=1)
        if np.any(totals != totals[0]):
            raise DomainError("all rows must share one total amount")
    return arr
