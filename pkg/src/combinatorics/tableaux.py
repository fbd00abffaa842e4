"""
Multitableaux and the bijection between residue tuples and standard
one-column multitableaux.

Component k of the multitableau attached to lambda is a single column holding
the j with lambda_j = k, in increasing order. Reading the component index of
each number back gives lambda.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from src.combinatorics.residues import Residues, check_residues, compositions
from src.errors import NotInBasisError

Row = tuple[int, ...]
Component = tuple[Row, ...]


@dataclass(frozen=True)
class Multitableau:
    """entries[k] lists the rows of component k+1; the shape is read off the row lengths."""
    entries: tuple[Component, ...]

    @property
    def r(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(len(row) for row in comp) for comp in self.entries)

    @property
    def size(self) -> int:
        return sum(len(row) for comp in self.entries for row in comp)

    def column(self, k: int) -> tuple[int, ...]:
        """First column of component k (1-based)."""
        return tuple(row[0] for row in self.entries[k - 1])

    def is_column_shape(self) -> bool:
        return all(len(row) == 1 for comp in self.entries for row in comp)

    def to_dict(self) -> dict:
        return {"shape": [list(p) for p in self.shape],
                "entries": [[list(row) for row in comp] for comp in self.entries]}

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "Multitableau":
        return cls(tuple(tuple((v,) for v in col) for col in columns))


def is_standard(t: Multitableau) -> bool:
    """Entries are exactly 1..n, rows are partitions, and entries increase along rows and down columns."""
    values = sorted(v for comp in t.entries for row in comp for v in row)
    if values != list(range(1, len(values) + 1)):
        return False
    for comp in t.entries:
        lengths = [len(row) for row in comp]
        if any(a < b for a, b in zip(lengths, lengths[1:])) or 0 in lengths:
            return False
        for row in comp:
            if any(a >= b for a, b in zip(row, row[1:])):
                return False
        for upper, lower in zip(comp, comp[1:]):
            if any(upper[c] >= lower[c] for c in range(len(lower))):
                return False
    return True


def tableau_from_tuple(r: int, lam: Sequence[int]) -> Multitableau:
    lam = check_residues(r, lam)
    columns = [[] for _ in range(r)]
    for j, k in enumerate(lam, start=1):
        columns[k - 1].append(j)
    return Multitableau.from_columns(columns)


def tuple_from_tableau(t: Multitableau) -> Residues:
    if not t.is_column_shape():
        raise NotInBasisError("multitableau is not of one-column shape")
    if not is_standard(t):
        raise NotInBasisError("multitableau is not standard")
    lam = [0] * t.size
    for k in range(1, t.r + 1):
        for j in t.column(k):
            lam[j - 1] = k
    return tuple(lam)


def share_column(t: Multitableau, i: int, j: int) -> bool:
    return any(i in t.column(k) and j in t.column(k) for k in range(1, t.r + 1))


def standard_column_multitableaux(r: int, n: int) -> list[Multitableau]:
    """Every standard one-column multitableau with n boxes (r^n of them)."""
    out = []
    for sizes in compositions(r, n):
        out.extend(_fill(list(range(1, n + 1)), sizes))
    return out


def _fill(remaining: list[int], sizes: Sequence[int]) -> list[Multitableau]:
    if not sizes:
        return [Multitableau(())]
    results = []
    for chosen in combinations(remaining, sizes[0]):
        rest = [v for v in remaining if v not in chosen]
        for tail in _fill(rest, sizes[1:]):
            results.append(Multitableau(((tuple((v,) for v in chosen)),) + tail.entries))
    return results
