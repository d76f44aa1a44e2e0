"""Graded bases, multi-indices and Koszul sign bookkeeping.

A multi-index is a plain tuple of basis labels.  Words are enumerated in
lexicographic order with respect to the basis order; that order is the
column order of every matrix built downstream.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import LabelError

MultiIndex = tuple


class Parity(enum.IntEnum):
    EVEN = 0
    ODD = 1

    def __add__(self, other):
        return Parity((int(self) + int(other)) % 2)

    __radd__ = __add__

    def __str__(self):
        return self.name.lower()


EVEN = Parity.EVEN
ODD = Parity.ODD


@dataclass(frozen=True)
class GradedBasis:
    labels: tuple
    parities: tuple
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        parities = tuple(Parity(p) for p in self.parities)
        if len(labels) != len(parities):
            raise ValueError("need exactly one parity per label")
        if len(set(labels)) != len(labels):
            raise ValueError(f"basis labels must be distinct: {labels}")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "parities", parities)
        object.__setattr__(self, "_index", {a: k for k, a in enumerate(labels)})

    def __len__(self):
        return len(self.labels)

    def __contains__(self, label):
        return label in self._index

    def index(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise LabelError(f"unknown basis label {label!r}") from None

    def parity(self, label) -> Parity:
        return self.parities[self.index(label)]

    @property
    def single_char(self) -> bool:
        return all(len(str(a)) == 1 for a in self.labels)


# W = <e, f> with e even and f odd.
STANDARD = GradedBasis(("e", "f"), (EVEN, ODD))


def parity_of_index(index: Sequence, basis: GradedBasis = STANDARD) -> Parity:
    total = 0
    for label in index:
        total += basis.parity(label)
    return Parity(total % 2)


def koszul_sign(prefix_parity, map_parity) -> int:
    """Sign picked up when a map of parity ``map_parity`` moves past ``prefix_parity``."""
    return -1 if (prefix_parity and map_parity) else 1


def enumerate_indices(basis: GradedBasis, n: int) -> list:
    if n < 0:
        raise ValueError("length must be non-negative")
    return list(itertools.product(basis.labels, repeat=n))


def iter_indices(basis: GradedBasis, n: int) -> Iterator[tuple]:
    return itertools.product(basis.labels, repeat=n)


def index_key(index: Sequence, basis: GradedBasis = STANDARD) -> tuple:
    """Sort key realizing the canonical lexicographic order on words."""
    return tuple(basis.index(a) for a in index)
