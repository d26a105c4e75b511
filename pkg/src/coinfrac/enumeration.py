"""Brute-force enumeration of every way to divide a coin set among players.

Coins of equal face value are indistinguishable, so one *way* of dividing is
a tuple holding, for every denomination, a composition of its coin count
into ``players`` non-negative parts.  The multiplicity of a division point
(the vector of money amounts each player receives) is the number of such
tuples that produce it.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Iterator, Mapping

import numpy as np

from ._validation import check_players
from .coins import CoinSet
from .errors import DomainError, RangeError, ResourceLimitError

DEFAULT_CAP = 10**9
# Leaves materialized per numpy block during the depth-first walk.
_BLOCK_LEAVES = 1 << 18
# Bit budget for the subset-sum table.
DEFAULT_BITSET_CAP = 1 << 32


def canonical_order(points: np.ndarray) -> np.ndarray:
    """Indices sorting ``points`` rows in descending lexicographic order."""
    if points.shape[0] == 0:
        return np.zeros(0, dtype=np.intp)
    keys = tuple(-points[:, j] for j in reversed(range(points.shape[1])))
    return np.lexsort(keys)


def merge_points(points: np.ndarray, weights: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Collapse duplicate rows, summing weights; rows come back canonical."""
    if points.shape[0] == 0:
        return points.reshape(0, points.shape[1]), weights[:0]
    order = canonical_order(points)
    pts = points[order]
    w = weights[order]
    new_row = np.empty(pts.shape[0], dtype=bool)
    new_row[0] = True
    np.any(pts[1:] != pts[:-1], axis=1, out=new_row[1:])
    starts = np.flatnonzero(new_row)
    return pts[starts], np.add.reduceat(w, starts)


class DivisionSet:
    """Finite multiset of division points for ``players`` players.

    Points are held as an ``(n, players)`` int64 array in descending
    lexicographic order, paired with an int64 array of multiplicities.
    Instances are immutable.
    """

    __slots__ = ("players", "total", "points", "multiplicities")

    def __init__(self, players: int, total: int, points, multiplicities, *, canonical=False):
        players = check_players(players)
        pts = np.asarray(points, dtype=np.int64).reshape(-1, players)
        mult = np.asarray(multiplicities, dtype=np.int64).reshape(-1)
        if pts.shape[0] != mult.shape[0]:
            raise DomainError("points and multiplicities differ in length")
        if not canonical:
            pts, mult = merge_points(pts, mult)
        if mult.size and mult.min() < 1:
            raise DomainError("multiplicities must be positive")
        if pts.size and (pts.min() < 0 or np.any(pts.sum(axis=1) != total)):
            raise DomainError(f"every point needs non-negative shares summing to {total}")
        pts.setflags(write=False)
        mult.setflags(write=False)
        object.__setattr__(self, "players", players)
        object.__setattr__(self, "total", int(total))
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "multiplicities", mult)

    def __setattr__(self, name, value):
        raise AttributeError("DivisionSet is immutable")

    @classmethod
    def from_mapping(cls, players: int, total: int, mapping: Mapping[tuple, int]) -> "DivisionSet":
        items = list(mapping.items())
        pts = np.array([p for p, _ in items], dtype=np.int64).reshape(-1, players)
        mult = np.array([k for _, k in items], dtype=np.int64)
        return cls(players, total, pts, mult)

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return {tuple(p): int(k) for p, k in zip(self.points.tolist(), self.multiplicities.tolist())}

    def __len__(self) -> int:
        return self.points.shape[0]

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], int]]:
        for p, k in zip(self.points.tolist(), self.multiplicities.tolist()):
            yield tuple(p), k

    def __contains__(self, point) -> bool:
        return self.multiplicity(point) > 0

    def multiplicity(self, point) -> int:
        """Multiplicity of ``point``, zero when absent."""
        p = np.asarray(point, dtype=np.int64).reshape(-1)
        if p.shape[0] != self.players:
            return 0
        hits = np.flatnonzero(np.all(self.points == p, axis=1))
        return int(self.multiplicities[hits[0]]) if hits.size else 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, DivisionSet):
            return NotImplemented
        return (
            self.players == other.players
            and self.total == other.total
            and np.array_equal(self.points, other.points)
            and np.array_equal(self.multiplicities, other.multiplicities)
        )

    def __hash__(self):
        return hash((self.players, self.total, self.points.tobytes(), self.multiplicities.tobytes()))

    def __repr__(self) -> str:
        return (
            f"DivisionSet(players={self.players}, total={self.total}, "
            f"points={len(self)}, weight={self.weight})"
        )

    @property
    def weight(self) -> int:
        """Sum of all multiplicities: the number of ways of division."""
        return int(sum(self.multiplicities.tolist()))

    @property
    def max_multiplicity(self) -> int:
        return int(self.multiplicities.max()) if len(self) else 0

    def permute(self, permutation: Iterable[int]) -> "DivisionSet":
        """Reorder the player coordinates; ``permutation[j]`` is the source column of column ``j``."""
        perm = list(permutation)
        if sorted(perm) != list(range(self.players)):
            raise DomainError(f"not a permutation of {self.players} players: {perm}")
        return DivisionSet(self.players, self.total, self.points[:, perm], self.multiplicities)


def compositions(n: int, parts: int) -> np.ndarray:
    """All non-negative integer vectors of length ``parts`` summing to ``n``.

    Rows are in descending lexicographic order, e.g. for ``n=2, parts=3``:
    ``(2,0,0), (1,1,0), (1,0,1), (0,2,0), (0,1,1), (0,0,2)``.
    """
    if parts < 1:
        raise DomainError("parts must be >= 1")
    if n < 0:
        raise DomainError("n must be >= 0")
    count = composition_count(n, parts)
    if count > DEFAULT_CAP:
        raise RangeError(f"{count} compositions of {n} into {parts} parts is too many")
    out = np.empty((count, parts), dtype=np.int64)
    row = 0

    def walk(prefix: list[int], remaining: int):
        nonlocal row
        if len(prefix) == parts - 1:
            out[row, :-1] = prefix
            out[row, -1] = remaining
            row += 1
            return
        for first in range(remaining, -1, -1):
            prefix.append(first)
            walk(prefix, remaining - first)
            prefix.pop()

    walk([], n)
    return out


def composition_count(n: int, parts: int) -> int:
    return math.comb(n + parts - 1, parts - 1)


def projected_ways(coins: CoinSet, players: int) -> int:
    """Number of composition tuples, i.e. leaves of the enumeration tree."""
    players = check_players(players)
    return math.prod(composition_count(c, players) for c in coins.counts)


def _expand(prefix: np.ndarray, blocks: list[np.ndarray]) -> np.ndarray:
    acc = prefix[None, :]
    for block in blocks:
        acc = (acc[:, None, :] + block[None, :, :]).reshape(-1, acc.shape[1])
    return acc


def _walk_subtree(prefix: np.ndarray, blocks: list[np.ndarray], sizes: list[int]):
    """Depth-first over ``blocks``; yields merged (points, weights) chunks."""
    if math.prod(sizes) <= _BLOCK_LEAVES:
        leaves = _expand(prefix, blocks)
        yield merge_points(leaves, np.ones(leaves.shape[0], dtype=np.int64))
        return
    head, rest, rest_sizes = blocks[0], blocks[1:], sizes[1:]
    for row in head:
        yield from _walk_subtree(prefix + row, rest, rest_sizes)


def _collect(chunks) -> tuple[np.ndarray, np.ndarray]:
    pts, wts = [], []
    pending = 0
    threshold = 4 * _BLOCK_LEAVES
    for p, w in chunks:
        pts.append(p)
        wts.append(w)
        pending += p.shape[0]
        if pending > threshold and len(pts) > 1:
            merged = merge_points(np.concatenate(pts), np.concatenate(wts))
            pts, wts = [merged[0]], [merged[1]]
            pending = merged[0].shape[0]
            # Doubling keeps re-merging of the accumulated set amortized linear.
            threshold = max(threshold, 2 * pending)
    return merge_points(np.concatenate(pts), np.concatenate(wts))


def enumerate_divisions(
    coins: CoinSet,
    players: int,
    *,
    cap: int = DEFAULT_CAP,
    n_jobs: int | None = None,
) -> DivisionSet:
    """Enumerate every division of ``coins`` among ``players`` players.

    Every composition tuple is visited, largest denomination first, so the
    work is ``projected_ways(coins, players)``; a :class:`ResourceLimitError`
    is raised up front when that exceeds ``cap``.  With ``n_jobs > 1`` the
    subtrees under the largest denomination are walked on a thread pool and
    merged additively.
    """
    players = check_players(players)
    total = coins.amount
    ways = projected_ways(coins, players)
    if ways > cap:
        raise ResourceLimitError(ways, cap)
    if len(coins) == 0:
        return DivisionSet(players, 0, np.zeros((1, players)), [1], canonical=True)

    denominations = sorted(coins.entries, reverse=True)
    blocks = [compositions(c, players) * v for v, c in denominations]
    sizes = [b.shape[0] for b in blocks]
    origin = np.zeros(players, dtype=np.int64)

    if n_jobs is not None and n_jobs > 1 and sizes[0] > 1:
        def subtree(row):
            return _collect(_walk_subtree(origin + row, blocks[1:], sizes[1:]))

        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            parts = list(pool.map(subtree, blocks[0]))
        pts, mult = _collect(parts)
    else:
        pts, mult = _collect(_walk_subtree(origin, blocks, sizes))
    return DivisionSet(players, total, pts, mult, canonical=True)


def multiplicity_stratum(divisions: DivisionSet, k: int) -> DivisionSet:
    """Points of ``divisions`` whose multiplicity is exactly ``k``."""
    if k < 1:
        raise DomainError(f"multiplicity must be >= 1, got {k}")
    keep = divisions.multiplicities == k
    return DivisionSet(
        divisions.players,
        divisions.total,
        divisions.points[keep],
        divisions.multiplicities[keep],
        canonical=True,
    )


def strata(divisions: DivisionSet) -> dict[int, DivisionSet]:
    """Every non-empty multiplicity stratum, keyed by multiplicity."""
    return {int(k): multiplicity_stratum(divisions, int(k)) for k in np.unique(divisions.multiplicities)}


def reachable_amounts(coins: CoinSet, *, bit_cap: int = DEFAULT_BITSET_CAP) -> int:
    """Bitset (as a Python int) of every amount payable with a sub-multiset of ``coins``.

    Bit ``a`` is set when amount ``a`` is reachable.  Counts are split into
    powers of two so each denomination costs ``O(log count)`` shifts.
    """
    if coins.amount + 1 > bit_cap:
        raise ResourceLimitError(coins.amount + 1, bit_cap)
    reach = 1
    for value, count in coins.entries:
        chunk = 1
        while count > 0:
            take = min(chunk, count)
            reach |= reach << (value * take)
            count -= take
            chunk <<= 1
    return reach


def unreachable_amounts(coins: CoinSet, *, limit: int | None = None, bit_cap: int = DEFAULT_BITSET_CAP) -> list[int]:
    """Amounts in ``1..amount(coins)`` that no sub-multiset pays, ascending."""
    reach = reachable_amounts(coins, bit_cap=bit_cap)
    gaps = []
    for a in range(1, coins.amount + 1):
        if not (reach >> a) & 1:
            gaps.append(a)
            if limit is not None and len(gaps) >= limit:
                break
    return gaps


def is_complete(coins: CoinSet, *, bit_cap: int = DEFAULT_BITSET_CAP) -> bool:
    """True when every amount from 1 to ``amount(coins)`` can be paid exactly."""
    reach = reachable_amounts(coins, bit_cap=bit_cap)
    return reach == (1 << (coins.amount + 1)) - 1
