"""Hausdorff distance, similarity dimensions, ramification classes and
base-r digit tests for the two-player Cantor construction."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.spatial import cKDTree
from scipy.spatial.distance import cdist

from .errors import DomainError
from .ifs import RationalPointSet

# Above this many points on either side the nearest-neighbour search uses a k-d tree.
INDEX_THRESHOLD = 10_000
_CDIST_ROWS = 2048


class RamificationClass(enum.Enum):
    TOTALLY_DISCONNECTED = "TotallyDisconnected"
    FINITELY_RAMIFIED = "FinitelyRamified"
    INFINITELY_RAMIFIED = "InfinitelyRamified"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class DimensionResult:
    """``value = ln(n_maps) / ln(1/ratio)`` when ``defined``; ``value`` is None otherwise."""

    value: float | None
    n_maps: int
    ratio: Fraction
    defined: bool


def _as_array(points) -> np.ndarray:
    if isinstance(points, RationalPointSet):
        arr = points.to_array()
    else:
        arr = np.asarray(points, dtype=float)
        if arr.ndim == 1:
            arr = arr.reshape(-1, 1)
    if arr.ndim != 2 or arr.shape[0] == 0:
        raise DomainError("Hausdorff distance needs two non-empty point sets")
    return arr


def _directed(a: np.ndarray, b: np.ndarray) -> float:
    if max(a.shape[0], b.shape[0]) > INDEX_THRESHOLD:
        dist, _ = cKDTree(b).query(a, k=1)
        return float(dist.max())
    worst = 0.0
    for start in range(0, a.shape[0], _CDIST_ROWS):
        block = cdist(a[start:start + _CDIST_ROWS], b)
        worst = max(worst, float(block.min(axis=1).max()))
    return worst


def hausdorff_distance(k1, k2) -> float:
    """Euclidean Hausdorff distance between two finite point sets.

    Accepts :class:`RationalPointSet` instances or ``(n, d)`` arrays.
    Multiplicities are ignored.
    """
    a, b = _as_array(k1), _as_array(k2)
    if a.shape[1] != b.shape[1]:
        raise DomainError(f"dimension mismatch: {a.shape[1]} vs {b.shape[1]}")
    return max(_directed(a, b), _directed(b, a))


def similarity_dimension(r: int, c: int, players: int = 3) -> DimensionResult:
    """Similarity dimension of the attractor for ``S_{r,c,m}`` split ``players`` ways.

    The IFS has ``C(c + players - 1, players - 1)`` maps of ratio ``1/r``;
    for three players that is ``(c+1)(c+2)/2``.  Undefined for ``c > r - 1``,
    where the copies overlap.
    """
    if r < 2 or c < 1 or players < 1:
        raise DomainError(f"need r >= 2, c >= 1, players >= 1; got r={r}, c={c}, players={players}")
    n_maps = math.comb(c + players - 1, players - 1)
    if c > r - 1:
        return DimensionResult(None, n_maps, Fraction(1, r), False)
    return DimensionResult(math.log(n_maps) / math.log(r), n_maps, Fraction(1, r), True)


def cantor_dimension(r: int) -> DimensionResult:
    """Dimension ``ln 2 / ln r`` of the two-player attractor of ``S_{r,1,m}``."""
    if r < 2:
        raise DomainError(f"need r >= 2, got {r}")
    return DimensionResult(math.log(2) / math.log(r), 2, Fraction(1, r), True)


def classify(r: int, c: int) -> RamificationClass:
    if r < 2 or c < 1:
        raise DomainError(f"need r >= 2 and c >= 1; got r={r}, c={c}")
    if c < r - 1:
        return RamificationClass.TOTALLY_DISCONNECTED
    if c == r - 1:
        return RamificationClass.FINITELY_RAMIFIED
    return RamificationClass.INFINITELY_RAMIFIED


def base_digits(x: Fraction, r: int) -> list[int]:
    """Fractional base-``r`` digits of ``x`` in ``[0, 1)``; the denominator must be a power of ``r``."""
    x = Fraction(x)
    if not 0 <= x < 1:
        raise DomainError(f"{x} is outside [0, 1)")
    den = x.denominator
    n = 0
    while den % r == 0:
        den //= r
        n += 1
    if den != 1:
        raise DomainError(f"denominator of {x} is not a power of {r}")
    num = x.numerator
    digits = []
    for k in range(n - 1, -1, -1):
        d, num = divmod(num, r**k)
        digits.append(d)
    return digits


def cantor_phi(m: int, point) -> Fraction:
    """``2 * n_A / 3**m`` for a two-player division ``(n_A, n_B)`` of ``S_{3,1,m}``."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    if len(point) != 2:
        raise DomainError("cantor_phi takes a two-player point")
    n_a, n_b = (int(v) for v in point)
    total = (3**m - 1) // 2
    if not 0 <= n_a <= total or n_a + n_b != total:
        raise DomainError(f"{tuple(point)} is not a division of S_3,1,{m} (total {total})")
    rest = n_a
    while rest:
        rest, digit = divmod(rest, 3)
        if digit > 1:
            raise DomainError(f"n_A = {n_a} cannot be paid with one coin of each power of 3")
    return Fraction(2 * n_a, 3**m)


def is_cantor_digit_string(x, r: int, allowed=None) -> bool:
    """True when every base-``r`` digit of ``x`` lies in ``allowed``.

    ``allowed`` defaults to ``{0, r - 1}``, which for ``r = 3`` is the
    classic middle-thirds test (digits 0 and 2).  ``x = 1`` is read as
    ``0.(r-1)(r-1)...``.
    """
    allowed = {0, r - 1} if allowed is None else set(allowed)
    x = Fraction(x)
    if x == 1:
        return r - 1 in allowed
    return all(d in allowed for d in base_digits(x, r))
