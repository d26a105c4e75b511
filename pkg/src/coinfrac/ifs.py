"""Inductive construction of division sets and their IFS view.

Adding the denomination ``r**(k-1)`` to ``S_{r,c,k-1}`` translates the
previous division set by ``r**(k-1) * q`` for every generator ``q`` (a
composition of ``c`` among the players) and takes the union.  Scaled by
``r**-k`` the same step is one application of the union map ``F`` of the
contractions ``x -> (x + q) / r``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

import numpy as np

from ._validation import check_players
from .coins import GeometricFamilySpec
from .enumeration import (
    DEFAULT_CAP,
    DivisionSet,
    composition_count,
    compositions,
    merge_points,
)
from .errors import DomainError, RangeError, ResourceLimitError


@dataclass(frozen=True, eq=False)
class GeneratorSet:
    """Non-negative integer vectors of length ``players`` summing to ``c``."""

    c: int
    players: int
    points: np.ndarray

    def __len__(self) -> int:
        return self.points.shape[0]

    def __iter__(self):
        return iter(tuple(p) for p in self.points.tolist())

    def __eq__(self, other):
        if not isinstance(other, GeneratorSet):
            return NotImplemented
        return self.c == other.c and self.players == other.players and np.array_equal(self.points, other.points)


def generator_set(c: int, players: int) -> GeneratorSet:
    """The translate offsets of one recursion step, in descending lexicographic order."""
    if c < 1:
        raise DomainError(f"c must be >= 1, got {c}")
    players = check_players(players)
    if composition_count(c, players) > DEFAULT_CAP:
        raise RangeError(f"generator set for c={c}, players={players} is too large")
    pts = compositions(c, players)
    pts.setflags(write=False)
    return GeneratorSet(c, players, pts)


@dataclass(frozen=True, eq=False)
class IfsSystem:
    """Maps ``x -> (x + q) / ratio`` for every generator ``q``."""

    ratio: int
    generators: GeneratorSet

    def __post_init__(self):
        if self.ratio < 2:
            raise DomainError(f"contraction needs ratio >= 2, got {self.ratio}")

    @classmethod
    def for_family(cls, spec: GeometricFamilySpec, players: int) -> "IfsSystem":
        return cls(spec.r, generator_set(spec.c, players))

    @property
    def dimension(self) -> int:
        return self.generators.players

    @property
    def contraction_factor(self) -> Fraction:
        return Fraction(1, self.ratio)

    def __len__(self) -> int:
        return len(self.generators)

    def apply_map(self, q, x) -> tuple[Fraction, ...]:
        """One contraction applied to a single point."""
        return tuple((Fraction(xi) + qi) / self.ratio for xi, qi in zip(x, q))


class RationalPointSet:
    """Multiset of points with exact rational coordinates.

    Stored as integer numerators over one shared positive denominator,
    reduced so that the denominator and all numerators have no common
    factor.  Two sets compare equal exactly when they contain the same
    rational points with the same multiplicities.
    """

    __slots__ = ("dimension", "denominator", "_numerators")

    def __init__(self, dimension: int, numerators: Mapping[tuple[int, ...], int], denominator: int = 1):
        if denominator < 1:
            raise DomainError("denominator must be positive")
        g = denominator
        for p in numerators:
            if len(p) != dimension:
                raise DomainError(f"point {p} is not {dimension}-dimensional")
            for x in p:
                g = math.gcd(g, x)
                if g == 1:
                    break
        if g > 1:
            numerators = {tuple(x // g for x in p): k for p, k in numerators.items()}
        self.dimension = dimension
        self.denominator = denominator // g
        self._numerators = dict(numerators)

    @classmethod
    def from_fractions(cls, points: Mapping[tuple, int] | list) -> "RationalPointSet":
        """Build from ``{point: multiplicity}`` or a list of points (multiplicity 1 each)."""
        if not isinstance(points, Mapping):
            counted: dict[tuple, int] = {}
            for p in points:
                counted[tuple(p)] = counted.get(tuple(p), 0) + 1
            points = counted
        if not points:
            raise DomainError("a point set needs at least one point")
        fracs = {tuple(Fraction(x) for x in p): k for p, k in points.items()}
        dim = len(next(iter(fracs)))
        den = math.lcm(*(x.denominator for p in fracs for x in p)) if dim else 1
        nums: dict[tuple[int, ...], int] = {}
        for p, k in fracs.items():
            key = tuple(x.numerator * (den // x.denominator) for x in p)
            nums[key] = nums.get(key, 0) + k
        return cls(dim, nums, den)

    @property
    def numerators(self) -> dict[tuple[int, ...], int]:
        return dict(self._numerators)

    def __len__(self) -> int:
        return len(self._numerators)

    def __iter__(self) -> Iterator[tuple[tuple[Fraction, ...], int]]:
        d = self.denominator
        for p, k in self._numerators.items():
            yield tuple(Fraction(x, d) for x in p), k

    def points(self) -> dict[tuple[Fraction, ...], int]:
        return dict(iter(self))

    def to_array(self) -> np.ndarray:
        """Float coordinates, one row per distinct point."""
        if not self._numerators:
            return np.zeros((0, self.dimension))
        nums = np.array(list(self._numerators), dtype=object).reshape(len(self), self.dimension)
        return (nums / self.denominator).astype(float)

    def multiplicities(self) -> np.ndarray:
        return np.array(list(self._numerators.values()), dtype=np.int64)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalPointSet):
            return NotImplemented
        return (
            self.dimension == other.dimension
            and self.denominator == other.denominator
            and self._numerators == other._numerators
        )

    def __hash__(self):
        return hash((self.dimension, self.denominator, frozenset(self._numerators.items())))

    def __repr__(self) -> str:
        return f"RationalPointSet(dimension={self.dimension}, points={len(self)}, denominator={self.denominator})"


def _check_cap(projected: int, cap: int):
    if projected > cap:
        raise ResourceLimitError(projected, cap)


def construct_inductive(spec: GeometricFamilySpec, players: int, *, cap: int = DEFAULT_CAP) -> DivisionSet:
    """Division set of ``S_{r,c,m}`` built bottom-up by translate-and-union.

    Starts from the single zero vector and, for ``k = 1..m``, replaces the
    set by the union of its translates by ``r**(k-1) * q`` over the
    generators ``q``.  Multiplicities add where translates overlap.
    """
    players = check_players(players)
    gens = generator_set(spec.c, players).points
    pts = np.zeros((1, players), dtype=np.int64)
    mult = np.ones(1, dtype=np.int64)
    for k in range(spec.m):
        _check_cap(pts.shape[0] * gens.shape[0], cap)
        shift = gens * spec.r**k
        grown = (pts[None, :, :] + shift[:, None, :]).reshape(-1, players)
        pts, mult = merge_points(grown, np.tile(mult, gens.shape[0]))
    return DivisionSet(players, spec.amount, pts, mult, canonical=True)


def scale(divisions: DivisionSet, spec: GeometricFamilySpec) -> RationalPointSet:
    """Divide every coordinate by ``r**m`` exactly."""
    nums = dict(zip(map(tuple, divisions.points.tolist()), divisions.multiplicities.tolist()))
    return RationalPointSet(divisions.players, nums, spec.r**spec.m)


def origin(dimension: int) -> RationalPointSet:
    """The one-point set holding the zero vector."""
    return RationalPointSet(dimension, {(0,) * dimension: 1})


def apply_F(system: IfsSystem, points: RationalPointSet) -> RationalPointSet:
    """Union over generators ``q`` of ``(K + q) / r``, multiplicities summed on coincidence."""
    if len(points) == 0:
        raise DomainError("apply_F needs a non-empty point set")
    if points.dimension != system.dimension:
        raise DomainError(f"{points.dimension}-dimensional set for a {system.dimension}-dimensional system")
    d = points.denominator
    out: dict[tuple[int, ...], int] = {}
    base = points._numerators
    for q in system.generators:
        offset = tuple(qi * d for qi in q)
        for p, k in base.items():
            key = tuple(a + b for a, b in zip(p, offset))
            out[key] = out.get(key, 0) + k
    return RationalPointSet(points.dimension, out, d * system.ratio)


def iterate_F(system: IfsSystem, points: RationalPointSet, times: int) -> RationalPointSet:
    """``F`` applied ``times`` times."""
    for _ in range(times):
        points = apply_F(system, points)
    return points
