"""CSV interchange format for division sets.

Header ``n_1,...,n_s,multiplicity`` followed by one row per point in
descending lexicographic order.  UTF-8, LF line endings, no trailing
whitespace, so equal sets always serialize to equal bytes.
"""
from __future__ import annotations

import os
from pathlib import Path
from typing import TextIO

import numpy as np

from .enumeration import DivisionSet
from .errors import DomainError


class CsvFormatError(DomainError):
    pass


def to_csv(divisions: DivisionSet) -> str:
    header = ",".join([f"n_{i}" for i in range(1, divisions.players + 1)] + ["multiplicity"])
    lines = [header]
    for point, k in divisions:
        lines.append(",".join(map(str, point)) + f",{k}")
    return "\n".join(lines) + "\n"


def from_csv(text: str) -> DivisionSet:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise CsvFormatError("empty CSV")
    header = lines[0].rstrip("\r").split(",")
    players = len(header) - 1
    expected = [f"n_{i}" for i in range(1, players + 1)] + ["multiplicity"]
    if players < 1 or header != expected:
        raise CsvFormatError(f"bad header {lines[0]!r}")
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        fields = line.rstrip("\r").split(",")
        if len(fields) != players + 1:
            raise CsvFormatError(f"line {lineno}: expected {players + 1} fields")
        try:
            rows.append([int(f) for f in fields])
        except ValueError:
            raise CsvFormatError(f"line {lineno}: non-integer field") from None
    if not rows:
        raise CsvFormatError("CSV holds no points")
    data = np.array(rows, dtype=np.int64)
    totals = data[:, :-1].sum(axis=1)
    if np.any(totals != totals[0]):
        raise CsvFormatError("rows do not share one total")
    try:
        return DivisionSet(players, int(totals[0]), data[:, :-1], data[:, -1])
    except DomainError as exc:
        raise CsvFormatError(str(exc)) from None


def write_csv(divisions: DivisionSet, target: str | os.PathLike | TextIO) -> None:
    text = to_csv(divisions)
    if hasattr(target, "write"):
        target.write(text)
    else:
        Path(target).write_bytes(text.encode("utf-8"))


def read_csv(source: str | os.PathLike | TextIO) -> DivisionSet:
    if hasattr(source, "read"):
        return from_csv(source.read())
    return from_csv(Path(source).read_bytes().decode("utf-8"))
