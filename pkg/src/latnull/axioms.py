"""Operation tables and exhaustive checks of the idempotent-nullnorm axioms.

Every checker scans its index space in id order and reports the first
violation found, so witnesses are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lattice import Lattice

__all__ = [
    "AXIOMS",
    "AxiomReport",
    "OpTable",
    "check_associative",
    "check_commutative",
    "check_idempotent",
    "check_monotone",
    "check_zero_element",
    "is_idempotent_nullnorm",
]

AXIOMS = ("commutative", "associative", "monotone", "zero_element", "idempotent")


class OpTable:
    """A total binary operation on the elements of ``lattice``.

    ``cells[x, y]`` is the id of V(x, y).
    """

    def __init__(self, lattice: Lattice, cells):
        cells = np.array(cells, dtype=np.intp)
        n = lattice.n
        if cells.shape != (n, n):
            raise ValueError(f"expected a {n}x{n} table, got shape {cells.shape}")
        if cells.size and (cells.min() < 0 or cells.max() >= n):
            raise ValueError("table cell outside the lattice")
        cells.flags.writeable = False
        self.lattice = lattice
        self.cells = cells

    @classmethod
    def from_function(cls, lattice: Lattice, fn):
        n = lattice.n
        return cls(lattice, [[lattice.id(fn(x, y)) for y in range(n)] for x in range(n)])

    def __call__(self, x, y) -> int:
        L = self.lattice
        return int(self.cells[L.id(x), L.id(y)])

    def __eq__(self, other):
        if not isinstance(other, OpTable):
            return NotImplemented
        return self.lattice == other.lattice and np.array_equal(self.cells, other.cells)

    def __hash__(self):
        return hash(self.cells.tobytes())

    def __repr__(self):
        return f"OpTable(n={self.lattice.n})"

    def key(self) -> tuple[int, ...]:
        """Flattened cells; the canonical sort key for lists of tables."""
        return tuple(int(v) for v in self.cells.ravel())

    def labels(self) -> list[list[str]]:
        names = self.lattice.names
        return [[names[v] for v in row] for row in self.cells]


@dataclass(frozen=True)
class AxiomReport:
    axiom: str
    passed: bool
    witness: tuple[str, ...] | None = None
    detail: str = ""

    def __str__(self):
        if self.passed:
            return f"{self.axiom}: pass"
        return f"{self.axiom}: FAIL at ({', '.join(self.witness)}): {self.detail}"


def _first(mask: np.ndarray):
    hits = np.argwhere(mask)
    return None if len(hits) == 0 else tuple(int(v) for v in hits[0])


def check_commutative(table: OpTable) -> AxiomReport:
    c, names = table.cells, table.lattice.names
    hit = _first(c != c.T)
    if hit is None:
        return AxiomReport("commutative", True)
    x, y = hit
    return AxiomReport(
        "commutative",
        False,
        (names[x], names[y]),
        f"V({names[x]},{names[y]}) = {names[c[x, y]]} but V({names[y]},{names[x]}) = {names[c[y, x]]}",
    )


def check_associative(table: OpTable) -> AxiomReport:
    """Brute-force V(x, V(y, z)) == V(V(x, y), z) over all triples.

    Triples with x = bottom, then x = top, are scanned before the others;
    within each group the order is lexicographic in ids.
    """
    L = table.lattice
    c, names = table.cells, L.names
    x = np.arange(c.shape[0])
    left = c[x[:, None, None], c[None, :, :]]
    right = c[c[:, :, None], x[None, None, :]]
    rows = [L.bottom, L.top] + [i for i in range(L.n) if i not in (L.bottom, L.top)]
    hit = _first((left != right)[rows])
    if hit is None:
        return AxiomReport("associative", True)
    i, j, k = rows[hit[0]], hit[1], hit[2]
    return AxiomReport(
        "associative",
        False,
        (names[i], names[j], names[k]),
        f"V({names[i]},V({names[j]},{names[k]})) = {names[left[i, j, k]]} "
        f"but V(V({names[i]},{names[j]}),{names[k]}) = {names[right[i, j, k]]}",
    )


def check_monotone(table: OpTable) -> AxiomReport:
    """Witness ``(x, y, z)``: x <= y yet V(x, z) > V(y, z) or V(z, x) > V(z, y) fails."""
    c, L = table.cells, table.lattice
    leq, names = L.leq_matrix, L.names
    # first[x, y, z]: V(x, z) <= V(y, z); second[x, y, z]: V(z, x) <= V(z, y)
    first = leq[c[:, None, :], c[None, :, :]]
    second = leq[c.T[:, None, :], c.T[None, :, :]]
    bad = leq[:, :, None] & ~(first & second)
    hit = _first(bad)
    if hit is None:
        return AxiomReport("monotone", True)
    x, y, z = hit
    if not first[x, y, z]:
        detail = f"{names[x]} <= {names[y]} but V({names[x]},{names[z]}) = {names[c[x, z]]} is not <= V({names[y]},{names[z]}) = {names[c[y, z]]}"
    else:
        detail = f"{names[x]} <= {names[y]} but V({names[z]},{names[x]}) = {names[c[z, x]]} is not <= V({names[z]},{names[y]}) = {names[c[z, y]]}"
    return AxiomReport("monotone", False, (names[x], names[y], names[z]), detail)


def check_zero_element(table: OpTable, a) -> AxiomReport:
    """V(x, 0) = x for x <= a and V(x, 1) = x for x >= a; then V(x, a) = a.

    The witness is the offending cell ``(x, y)``. Boundary identities are
    scanned before the absorbing consequence.
    """
    c, L = table.cells, table.lattice
    a = L.check_zero(a)
    names, leq = L.names, L.leq_matrix
    for x in range(L.n):
        if leq[x, a] and c[x, L.bottom] != x:
            return _zero_fail(names, x, L.bottom, c[x, L.bottom], x)
        if leq[a, x] and c[x, L.top] != x:
            return _zero_fail(names, x, L.top, c[x, L.top], x)
    for x in range(L.n):
        if c[x, a] != a:
            return _zero_fail(names, x, a, c[x, a], a)
    return AxiomReport("zero_element", True)


def _zero_fail(names, x, y, got, want):
    return AxiomReport(
        "zero_element",
        False,
        (names[x], names[y]),
        f"V({names[x]},{names[y]}) = {names[got]}, expected {names[want]}",
    )


def check_idempotent(table: OpTable) -> AxiomReport:
    c, names = table.cells, table.lattice.names
    diag = np.diagonal(c)
    hit = _first(diag != np.arange(len(diag)))
    if hit is None:
        return AxiomReport("idempotent", True)
    (x,) = hit
    return AxiomReport(
        "idempotent", False, (names[x],), f"V({names[x]},{names[x]}) = {names[diag[x]]}"
    )


def is_idempotent_nullnorm(table: OpTable, a) -> tuple[bool, list[AxiomReport]]:
    """Run all five checks independently and return (all passed, reports)."""
    reports = [
        check_commutative(table),
        check_associative(table),
        check_monotone(table),
        check_zero_element(table, a),
        check_idempotent(table),
    ]
    return all(r.passed for r in reports), reports
