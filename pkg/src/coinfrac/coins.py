"""Coin sets, the geometric family ``S_{r,c,m}`` and the US-cent example.

A coin set is a multiset of face values.  It is stored canonically as a
tuple of ``(value, count)`` pairs with strictly increasing values, and can
be written in the text form ``value:count,value:count,...``.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError, RangeError

#: Largest total amount accepted by any coin set.
MAX_AMOUNT = 2**62
_INT63 = 2**63


def _check_int(name: str, value, minimum: int) -> int:
    if isinstance(value, bool):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    try:
        value = operator.index(value)
    except TypeError:
        raise DomainError(f"{name} must be an integer, got {value!r}") from None
    if value < minimum:
        raise DomainError(f"{name} must be >= {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class CoinSet:
    """Canonical multiset of coins.

    Use :meth:`from_pairs` or :meth:`parse` to build one from loose input;
    the constructor itself only accepts entries already in canonical form.
    """

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        entries = tuple(
            (_check_int("coin value", v, 1), _check_int("coin count", c, 1))
            for v, c in self.entries
        )
        previous = 0
        total = 0
        for value, count in entries:
            if value <= previous:
                raise DomainError(
                    "coin values must be strictly increasing; "
                    "use CoinSet.from_pairs to merge and sort"
                )
            previous = value
            total += value * count
            if total > MAX_AMOUNT:
                raise RangeError(f"total amount exceeds 2**62 ({MAX_AMOUNT})")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "CoinSet":
        """Sort by value and merge duplicate values by summing their counts."""
        merged: dict[int, int] = {}
        for value, count in pairs:
            value = _check_int("coin value", value, 1)
            count = _check_int("coin count", count, 1)
            merged[value] = merged.get(value, 0) + count
        return cls(tuple(sorted(merged.items())))

    @classmethod
    def parse(cls, text: str) -> "CoinSet":
        """Parse ``"1:4,5:1,10:2"``.  An empty string is the empty coin set."""
        text = text.strip()
        if not text:
            return cls(())
        pairs = []
        for token in text.split(","):
            value, sep, count = token.strip().partition(":")
            if not sep:
                raise DomainError(f"expected value:count, got {token!r}")
            try:
                pairs.append((int(value), int(count)))
            except ValueError:
                raise DomainError(f"non-integer coin entry {token!r}") from None
        return cls.from_pairs(pairs)

    def __str__(self) -> str:
        return ",".join(f"{v}:{c}" for v, c in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.entries)

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.entries)

    @property
    def n_coins(self) -> int:
        return sum(self.counts)

    @property
    def amount(self) -> int:
        return sum(v * c for v, c in self.entries)


def amount(coins: CoinSet) -> int:
    """Total money in ``coins``: the sum of value times count."""
    return coins.amount


@dataclass(frozen=True)
class GeometricFamilySpec:
    """Parameters of ``S_{r,c,m}``: values ``1, r, ..., r**(m-1)``, ``c`` of each."""

    r: int
    c: int
    m: int

    def __post_init__(self):
        object.__setattr__(self, "r", _check_int("r", self.r, 2))
        object.__setattr__(self, "c", _check_int("c", self.c, 1))
        object.__setattr__(self, "m", _check_int("m", self.m, 0))
        if self.r**self.m >= _INT63:
            raise RangeError(f"r**m = {self.r}**{self.m} does not fit in 63 bits")
        if self.amount > MAX_AMOUNT:
            raise RangeError(f"total amount of {self} exceeds 2**62 ({MAX_AMOUNT})")

    @classmethod
    def parse(cls, text: str) -> "GeometricFamilySpec":
        """Parse ``"r,c,m"``."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise DomainError(f"family must be r,c,m, got {text!r}")
        try:
            r, c, m = (int(p) for p in parts)
        except ValueError:
            raise DomainError(f"non-integer family parameter in {text!r}") from None
        return cls(r, c, m)

    @property
    def amount(self) -> int:
        return self.c * (self.r**self.m - 1) // (self.r - 1)

    def __str__(self) -> str:
        return f"{self.r},{self.c},{self.m}"


def make_geometric(spec: GeometricFamilySpec) -> CoinSet:
    """Instantiate ``S_{r,c,m}``.  ``m == 0`` gives the empty coin set."""
    return CoinSet(tuple((spec.r**k, spec.c) for k in range(spec.m)))


def make_cent() -> CoinSet:
    """Four pennies, a nickel, two dimes, a quarter and a half dollar (104 cents)."""
    return CoinSet(((1, 4), (5, 1), (10, 2), (25, 1), (50, 1)))
