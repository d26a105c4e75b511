"""Isometric embedding of division points into ``R^(s-1)``.

All points of one division set lie on the hyperplane ``sum(n) = total``.
With ``u_i = e_i - e_s`` (``i < s``) and an orthonormal basis ``v_j`` of
their span obtained by Gram-Schmidt, the embedded coordinates are the
scalar products of ``sum_i n_i u_i`` with the ``v_j``.

The Gram-Schmidt step runs over :class:`fractions.Fraction`; each ``v_j`` is
kept as an integer vector ``w_j`` together with the integer ``|w_j|^2``,
so a coordinate is an exact integer dot product divided by one square root.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .enumeration import DivisionSet
from .errors import DomainError

# Above this magnitude int64 dot products might overflow; fall back to Python ints.
_INT64_SAFE = 2**40


@dataclass(frozen=True)
class EmbeddedPoint:
    coordinates: tuple[float, ...]
    source: tuple[int, ...]
    multiplicity: int = 1


@lru_cache(maxsize=None)
def gram_schmidt_basis(players: int) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Integer directions ``w_j`` and squared norms for ``players`` players.

    ``v_j = w_j / sqrt(norms[j])``.  For four players the directions are
    ``u_1``, ``2u_2 - u_1`` and ``3u_3 - u_2 - u_1`` written in the standard basis.
    """
    if players < 2:
        raise DomainError(f"embedding needs at least 2 players, got {players}")
    s = players
    u = []
    for i in range(s - 1):
        vec = [Fraction(0)] * s
        vec[i] = Fraction(1)
        vec[-1] = Fraction(-1)
        u.append(vec)

    def dot(a, b):
        return sum(x * y for x, y in zip(a, b))

    ortho: list[list[Fraction]] = []
    for vec in u:
        w = list(vec)
        for prev in ortho:
            coef = dot(vec, prev) / dot(prev, prev)
            w = [a - coef * b for a, b in zip(w, prev)]
        ortho.append(w)

    directions, norms = [], []
    for w in ortho:
        lcm = math.lcm(*(x.denominator for x in w))
        ints = [int(x * lcm) for x in w]
        g = math.gcd(*ints)
        ints = [x // g for x in ints]
        directions.append(tuple(ints))
        norms.append(sum(x * x for x in ints))
    return tuple(directions), tuple(norms)


def basis_matrix(players: int) -> np.ndarray:
    """Orthonormal basis as an ``(s, s-1)`` float matrix; column ``j`` is ``v_j``."""
    directions, norms = gram_schmidt_basis(players)
    w = np.array(directions, dtype=float)
    return (w / np.sqrt(np.array(norms, dtype=float))[:, None]).T


def _offset(shares) -> list[int]:
    # sum_i n_i u_i written in the standard basis.
    head = [int(x) for x in shares[:-1]]
    return head + [-sum(head)]


def embed(point, players: int | None = None) -> EmbeddedPoint:
    """Embed one division point."""
    shares = tuple(int(x) for x in point)
    s = len(shares) if players is None else players
    if s != len(shares):
        raise DomainError(f"point {shares} does not have {s} shares")
    if s < 2:
        raise DomainError("a one-player division has nothing to embed")
    directions, norms = gram_schmidt_basis(s)
    x = _offset(shares)
    coords = tuple(
        sum(a * b for a, b in zip(x, w)) / math.sqrt(n) for w, n in zip(directions, norms)
    )
    return EmbeddedPoint(coords, shares)


def embed_array(points) -> np.ndarray:
    """Embed the rows of an ``(n, s)`` integer array; returns ``(n, s-1)`` floats."""
    arr = np.asarray(points)
    if arr.ndim != 2:
        raise DomainError("expected a 2-D array of shares")
    s = arr.shape[1]
    if s < 2:
        raise DomainError("a one-player division has nothing to embed")
    directions, norms = gram_schmidt_basis(s)
    w = np.array(directions, dtype=np.int64).T
    if arr.size == 0:
        return np.zeros((0, s - 1))
    if np.abs(arr).max() < _INT64_SAFE // s:
        x = arr.astype(np.int64)
        x[:, -1] = -x[:, :-1].sum(axis=1)
        dots = (x @ w).astype(float)
    else:
        x = arr.astype(object)
        x[:, -1] = -x[:, :-1].sum(axis=1)
        dots = (x @ w.astype(object)).astype(float)
    return dots / np.sqrt(np.array(norms, dtype=float))


def embed_set(divisions: DivisionSet) -> list[EmbeddedPoint]:
    """Embed every point of ``divisions`` in its canonical order, keeping multiplicities."""
    if len(divisions) == 0:
        raise DomainError("cannot embed an empty division set")
    coords = embed_array(divisions.points)
    return [
        EmbeddedPoint(tuple(c), p, k)
        for c, (p, k) in zip(coords.tolist(), divisions)
    ]


def tetrahedral_coordinates(point) -> tuple[float, float, float]:
    """Closed-form four-player embedding ``((2a+b+c)/sqrt2, (3b+c)/sqrt6, 2c/sqrt3)``."""
    a, b, c, _ = (int(x) for x in point)
    return ((2 * a + b + c) / math.sqrt(2), (3 * b + c) / math.sqrt(6), 2 * c / math.sqrt(3))
