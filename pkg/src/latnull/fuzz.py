"""Seeded corpora of random |I_a| = 2 instances and the theorem cross-check."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .characterization import decide_existence, enumerate_idempotent_nullnorms
from .axioms import OpTable
from .lattice import Lattice, random_bounded_lattice

MIN_SIZE = 5  # no bounded lattice with fewer elements has |I_a| = 2


def zeros_with_two_incomparables(L: Lattice) -> list[int]:
    return [
        a for a in L
        if a not in (L.bottom, L.top) and len(L.incomparables(a)) == 2
    ]


def corpus(seed: int, count: int, max_size: int, min_size: int = MIN_SIZE) -> Iterator[tuple[Lattice, list[int]]]:
    """Yield ``count`` random lattices that have at least one zero with |I_a| = 2.

    Sizes cycle through ``min_size..max_size``; each lattice comes with every
    such zero.
    """
    if max_size < MIN_SIZE:
        raise ValueError(f"max_size must be at least {MIN_SIZE}")
    min_size = max(min_size, MIN_SIZE)
    sizes = range(min_size, max_size + 1)
    produced = k = 0
    while produced < count:
        size = sizes[k % len(sizes)]
        L = random_bounded_lattice(seed * 1_000_003 + k, size)
        k += 1
        zeros = zeros_with_two_incomparables(L)
        if zeros:
            produced += 1
            yield L, zeros


@dataclass
class Discrepancy:
    lattice: Lattice
    a: int
    predicted: bool
    tables: list[OpTable]


def cross_check(L: Lattice, a, search_space: str = "lemma_restricted") -> Discrepancy | None:
    """Compare the four-condition verdict against the enumeration oracle."""
    verdict = decide_existence(L, a)
    tables = enumerate_idempotent_nullnorms(L, a, search_space)
    if verdict.exists != bool(tables):
        return Discrepancy(L, L.id(a), verdict.exists, tables)
    return None
