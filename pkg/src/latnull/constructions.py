"""The forced skeleton of an idempotent nullnorm and the six explicit fills.

With zero element ``a`` the lattice splits into the down-set [0, a], the
up-set [a, 1] and the set I_a of elements incomparable with ``a``. Every
idempotent nullnorm agrees with the skeleton outside the off-diagonal cells
of I_a x I_a; the variants differ only in how those cells are filled.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .axioms import OpTable
from .errors import PreconditionFailed, WrongIaSize
from .lattice import Lattice

__all__ = [
    "UNDETERMINED",
    "PartialOpTable",
    "Variant",
    "applicable_variants",
    "build_skeleton",
    "canonical_pair",
    "construct_variant",
    "precondition",
]

UNDETERMINED = -1


class Variant(enum.Enum):
    V1 = "V1"
    V2 = "V2"
    V3 = "V3"
    V4 = "V4"
    V5 = "V5"
    V6 = "V6"

    @classmethod
    def parse(cls, text: str) -> Variant:
        try:
            return cls(text.upper())
        except ValueError:
            raise ValueError(f"unknown variant {text!r}; expected one of v1..v6") from None


class PartialOpTable:
    """An operation table whose off-diagonal I_a x I_a cells may be unknown.

    Unknown cells hold ``UNDETERMINED``.
    """

    def __init__(self, lattice: Lattice, a: int, cells):
        cells = np.array(cells, dtype=np.intp)
        cells.flags.writeable = False
        self.lattice = lattice
        self.a = a
        self.cells = cells

    def undetermined(self) -> list[tuple[int, int]]:
        """Unknown cells ``(x, y)`` with ``x < y``, row-major."""
        return [(int(x), int(y)) for x, y in np.argwhere(self.cells == UNDETERMINED) if x < y]

    def is_complete(self) -> bool:
        return not (self.cells == UNDETERMINED).any()

    def determined_mask(self) -> np.ndarray:
        return self.cells != UNDETERMINED

    def fill(self, values) -> OpTable:
        """Complete the table symmetrically from ``{(x, y): value}`` with x < y."""
        cells = self.cells.copy()
        for (x, y), v in values.items():
            cells[x, y] = cells[y, x] = v
        if (cells == UNDETERMINED).any():
            raise ValueError("fill leaves cells undetermined")
        return OpTable(self.lattice, cells)


def build_skeleton(L: Lattice, a) -> PartialOpTable:
    a = L.check_zero(a)
    m, j, leq = L.meet_table, L.join_table, L.leq_matrix
    down = leq[:, a]
    up = leq[a, :]
    inc = ~(down | up)
    n = L.n
    cells = np.full((n, n), UNDETERMINED, dtype=np.intp)
    for x in range(n):
        for y in range(n):
            if down[x] and down[y]:
                v = j[x, y]
            elif up[x] and up[y]:
                v = m[x, y]
            elif (down[x] and up[y]) or (up[x] and down[y]):
                v = a
            elif down[x]:  # y in I_a
                v = j[x, m[y, a]]
            elif down[y]:
                v = j[y, m[x, a]]
            elif up[x]:
                v = m[x, j[y, a]]
            elif up[y]:
                v = m[y, j[x, a]]
            elif x == y:
                v = x
            else:
                continue
            cells[x, y] = v
    assert not (cells[np.ix_(~inc, ~inc)] == UNDETERMINED).any()
    return PartialOpTable(L, a, cells)


def canonical_pair(L: Lattice, a) -> tuple[int, int]:
    """The two elements of I_a as ``(p, q)``, p having the smaller id."""
    inc = L.incomparables(L.check_zero(a))
    if len(inc) != 2:
        raise WrongIaSize(
            f"expected exactly 2 elements incomparable with {L.label(a)!r}, found {len(inc)}",
            size=len(inc),
        )
    return inc


@dataclass(frozen=True)
class Precondition:
    """Outcome of one variant precondition, with the evaluated terms."""

    variant: Variant
    holds: bool
    condition: str
    evaluated: str
    lhs: str | None = None
    rhs: str | None = None


def _terms(L: Lattice, a: int, p: int, q: int):
    n = L.names
    pa_m, qa_m = L.meet(p, a), L.meet(q, a)
    pa_j, qa_j = L.join(p, a), L.join(q, a)
    return n, pa_m, qa_m, pa_j, qa_j


def precondition(L: Lattice, a, variant: Variant) -> Precondition:
    """Evaluate the precondition of ``variant`` on the canonical (p, q)."""
    a = L.check_zero(a)
    p, q = canonical_pair(L, a)
    n, pa_m, qa_m, pa_j, qa_j = _terms(L, a, p, q)
    leq = L.leq
    P, Q, A = n[p], n[q], n[a]

    def rel(lhs, rhs, ok, op="="):
        if ok and op == "=":
            return n[lhs]
        neg = {"=": "≠", "≤": "≰"}[op]
        return f"{n[lhs]} {op if ok else neg} {n[rhs]}"

    if variant is Variant.V1:
        lhs = L.join(pa_m, qa_m)
        ok = lhs == a
        return Precondition(variant, ok, f"({P}∧{A})∨({Q}∧{A}) = {A}",
                            f"({P}∧{A})∨({Q}∧{A}) = {rel(lhs, a, ok)}", n[lhs], A)
    if variant is Variant.V2:
        lhs = L.meet(pa_j, qa_j)
        ok = lhs == a
        return Precondition(variant, ok, f"({P}∨{A})∧({Q}∨{A}) = {A}",
                            f"({P}∨{A})∧({Q}∨{A}) = {rel(lhs, a, ok)}", n[lhs], A)
    if variant is Variant.V3:
        ok1, ok2 = leq(pa_j, qa_j), leq(qa_m, pa_m)
        return Precondition(
            variant, ok1 and ok2,
            f"{P}∨{A} ≤ {Q}∨{A} and {Q}∧{A} ≤ {P}∧{A}",
            f"{P}∨{A} = {rel(pa_j, qa_j, ok1, '≤')} = {Q}∨{A}; "
            f"{Q}∧{A} = {rel(qa_m, pa_m, ok2, '≤')} = {P}∧{A}",
            n[pa_j] if not ok1 else n[qa_m], n[qa_j] if not ok1 else n[pa_m],
        )
    if variant is Variant.V4:
        ok1, ok2 = leq(pa_m, qa_m), leq(qa_j, pa_j)
        return Precondition(
            variant, ok1 and ok2,
            f"{P}∧{A} ≤ {Q}∧{A} and {Q}∨{A} ≤ {P}∨{A}",
            f"{P}∧{A} = {rel(pa_m, qa_m, ok1, '≤')} = {Q}∧{A}; "
            f"{Q}∨{A} = {rel(qa_j, pa_j, ok2, '≤')} = {P}∨{A}",
            n[pa_m] if not ok1 else n[qa_j], n[qa_m] if not ok1 else n[pa_j],
        )
    comparable = L.comparable(p, q)
    if not comparable:
        cond = f"{P}∨{A} = {Q}∨{A}" if variant is Variant.V5 else f"{P}∧{A} = {Q}∧{A}"
        return Precondition(variant, False, f"{P} ∦ {Q} and {cond}",
                            f"{P} ∥ {Q} (incomparable)", P, Q)
    if variant is Variant.V5:
        ok = pa_j == qa_j
        return Precondition(variant, ok, f"{P} ∦ {Q} and {P}∨{A} = {Q}∨{A}",
                            f"{P}∨{A} = {rel(pa_j, qa_j, ok)} = {Q}∨{A}", n[pa_j], n[qa_j])
    ok = pa_m == qa_m
    return Precondition(variant, ok, f"{P} ∦ {Q} and {P}∧{A} = {Q}∧{A}",
                        f"{P}∧{A} = {rel(pa_m, qa_m, ok)} = {Q}∧{A}", n[pa_m], n[qa_m])


def _fill_value(L: Lattice, a: int, p: int, q: int, variant: Variant) -> int:
    """Value of V(p, q) = V(q, p) for each variant."""
    if variant is Variant.V1:
        return L.meet(L.join(p, a), L.join(q, a))
    if variant is Variant.V2:
        return L.join(L.meet(p, a), L.meet(q, a))
    if variant is Variant.V3:
        return p
    if variant is Variant.V4:
        return q
    if variant is Variant.V5:
        return L.join(p, q)
    return L.meet(p, q)


def construct_variant(L: Lattice, a, variant: Variant | str, check: bool = True) -> OpTable:
    """Materialize one of the six constructions on a lattice with |I_a| = 2.

    The skeleton diagonal on I_a is kept as V(x, x) = x for every variant;
    for V5 and V6 this is x∨x and x∧x. With ``check=False`` the precondition
    is not enforced, which yields the raw formula table (useful for showing
    how it fails).
    """
    if isinstance(variant, str):
        variant = Variant.parse(variant)
    a = L.check_zero(a)
    p, q = canonical_pair(L, a)
    if check:
        pre = precondition(L, a, variant)
        if not pre.holds:
            raise PreconditionFailed(
                f"{variant.value} requires {pre.condition}, but {pre.evaluated}",
                condition=pre.condition,
                lhs=pre.lhs,
                rhs=pre.rhs,
            )
    skeleton = build_skeleton(L, a)
    return skeleton.fill({(p, q): _fill_value(L, a, p, q, variant)})


def applicable_variants(L: Lattice, a) -> list[Variant]:
    return [v for v in Variant if precondition(L, a, v).holds]
