"""Finite bounded lattices built from Hasse diagrams."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BadBounds,
    BadZero,
    CycleError,
    DuplicateElement,
    GenerationExhausted,
    NotALattice,
    NotComparable,
    RedundantCover,
    UnknownLabel,
)

__all__ = [
    "CoverSpec",
    "Lattice",
    "build_from_covers",
    "random_bounded_lattice",
    "transitive_closure",
    "transitive_reduction",
]

GENERATION_ATTEMPTS = 10_000


@dataclass(frozen=True)
class CoverSpec:
    """Hasse diagram input: ``covers`` holds ``(lower, upper)`` label pairs."""

    names: tuple[str, ...]
    covers: tuple[tuple[str, str], ...]
    bottom: str
    top: str

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "covers", tuple(tuple(c) for c in self.covers))

    def dual(self) -> CoverSpec:
        return CoverSpec(
            self.names, tuple((hi, lo) for lo, hi in self.covers), self.top, self.bottom
        )


def transitive_closure(rel: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a boolean adjacency matrix (Warshall)."""
    r = np.array(rel, dtype=bool)
    np.fill_diagonal(r, True)
    for k in range(r.shape[0]):
        r |= np.outer(r[:, k], r[k, :])
    return r


def transitive_reduction(order: np.ndarray) -> np.ndarray:
    """Cover relation of a partial order given as a reflexive boolean matrix."""
    strict = np.array(order, dtype=bool)
    np.fill_diagonal(strict, False)
    s = strict.astype(np.int64)
    return strict & ~((s @ s) > 0)


def _bound_tables(leq: np.ndarray):
    """Meet and join tables plus existence masks, computed for all pairs at once.

    A lower bound g of {x, y} is the greatest one iff every lower bound lies
    below g, i.e. iff the down-set of g has as many elements as the set of
    common lower bounds.
    """
    n = leq.shape[0]
    down_size = leq.sum(axis=0)
    up_size = leq.sum(axis=1)
    lower = leq.T[:, None, :] & leq.T[None, :, :]  # lower[x, y, g]: g <= x and g <= y
    upper = leq[:, None, :] & leq[None, :, :]  # upper[x, y, g]: x <= g and y <= g
    glb = lower & (down_size[None, None, :] == lower.sum(axis=2)[:, :, None])
    lub = upper & (up_size[None, None, :] == upper.sum(axis=2)[:, :, None])
    meet = glb.argmax(axis=2)
    join = lub.argmax(axis=2)
    return meet, join, glb.any(axis=2), lub.any(axis=2)


class Lattice:
    """An immutable finite bounded lattice.

    Elements are dense integer ids ``0..n-1`` assigned in input order;
    ``names`` maps ids to labels. The order and both operation tables are
    fully materialized, so every query is a lookup.
    """

    def __init__(self, names, leq, meet_table, join_table, bottom, top):
        self.names = tuple(names)
        self.leq_matrix = _frozen(np.asarray(leq, dtype=bool))
        self.meet_table = _frozen(np.asarray(meet_table, dtype=np.intp))
        self.join_table = _frozen(np.asarray(join_table, dtype=np.intp))
        self.bottom = int(bottom)
        self.top = int(top)
        self._index = {name: i for i, name in enumerate(self.names)}

    @property
    def n(self) -> int:
        return len(self.names)

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(range(len(self.names)))

    def __repr__(self):
        return f"Lattice(n={self.n}, names={list(self.names)!r})"

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return (
            self.names == other.names
            and self.bottom == other.bottom
            and self.top == other.top
            and np.array_equal(self.leq_matrix, other.leq_matrix)
        )

    def __hash__(self):
        return hash((self.names, self.leq_matrix.tobytes()))

    def id(self, x) -> int:
        """Resolve a label or an integer id to an id."""
        if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
            if not 0 <= x < self.n:
                raise UnknownLabel(f"element id {x} out of range [0, {self.n})")
            return int(x)
        try:
            return self._index[x]
        except KeyError:
            raise UnknownLabel(f"unknown element {x!r}") from None

    def label(self, x) -> str:
        return self.names[self.id(x)]

    def leq(self, x, y) -> bool:
        return bool(self.leq_matrix[self.id(x), self.id(y)])

    def lt(self, x, y) -> bool:
        x, y = self.id(x), self.id(y)
        return x != y and bool(self.leq_matrix[x, y])

    def comparable(self, x, y) -> bool:
        x, y = self.id(x), self.id(y)
        return bool(self.leq_matrix[x, y] or self.leq_matrix[y, x])

    def meet(self, x, y) -> int:
        return int(self.meet_table[self.id(x), self.id(y)])

    def join(self, x, y) -> int:
        return int(self.join_table[self.id(x), self.id(y)])

    def check_zero(self, a) -> int:
        """Return the id of ``a`` after checking it is neither bottom nor top."""
        a = self.id(a)
        if a in (self.bottom, self.top):
            raise BadZero(f"zero element {self.names[a]!r} must differ from bottom and top")
        return a

    def incomparables(self, a) -> tuple[int, ...]:
        """Ids of the elements incomparable with ``a``, ascending."""
        a = self.id(a)
        mask = ~(self.leq_matrix[:, a] | self.leq_matrix[a, :])
        return tuple(int(i) for i in np.flatnonzero(mask))

    def interval(self, lo, hi) -> tuple[int, ...]:
        lo, hi = self.id(lo), self.id(hi)
        if not self.leq_matrix[lo, hi]:
            raise NotComparable(f"{self.names[lo]!r} is not below {self.names[hi]!r}")
        mask = self.leq_matrix[lo, :] & self.leq_matrix[:, hi]
        return tuple(int(i) for i in np.flatnonzero(mask))

    def is_distributive(self) -> bool:
        m, j = self.meet_table, self.join_table
        x = np.arange(self.n)[:, None, None]
        lhs = m[x, j[None, :, :]]
        rhs = j[m[:, :, None], m[:, None, :]]
        return bool(np.array_equal(lhs, rhs))

    def covers(self) -> list[tuple[int, int]]:
        """The cover relation as ``(lower, upper)`` id pairs in id order."""
        red = transitive_reduction(self.leq_matrix)
        return [(int(x), int(y)) for x, y in np.argwhere(red)]

    def cover_spec(self) -> CoverSpec:
        return CoverSpec(
            self.names,
            tuple((self.names[x], self.names[y]) for x, y in self.covers()),
            self.names[self.bottom],
            self.names[self.top],
        )

    def dual(self) -> Lattice:
        """Same elements with the order reversed."""
        return Lattice(
            self.names, self.leq_matrix.T, self.join_table, self.meet_table, self.top, self.bottom
        )


def _frozen(arr):
    arr = np.array(arr)
    arr.flags.writeable = False
    return arr


def build_from_covers(spec: CoverSpec) -> Lattice:
    """Validate a Hasse diagram and materialize its lattice.

    Raises DuplicateElement, UnknownLabel, CycleError, RedundantCover,
    BadBounds or NotALattice.
    """
    names = tuple(spec.names)
    index = {}
    for i, name in enumerate(names):
        if name in index:
            raise DuplicateElement(f"element {name!r} declared twice")
        index[name] = i
    n = len(names)

    def lookup(label):
        try:
            return index[label]
        except KeyError:
            raise UnknownLabel(f"unknown element {label!r}") from None

    bottom, top = lookup(spec.bottom), lookup(spec.top)
    adj = np.zeros((n, n), dtype=bool)
    for lo, hi in spec.covers:
        x, y = lookup(lo), lookup(hi)
        if x == y:
            raise CycleError(f"self-cover {lo!r} < {hi!r}")
        if adj[x, y]:
            raise RedundantCover(f"cover {lo!r} < {hi!r} listed twice")
        adj[x, y] = True

    leq = transitive_closure(adj)
    both = leq & leq.T
    np.fill_diagonal(both, False)
    if both.any():
        x, y = np.argwhere(both)[0]
        raise CycleError(f"cover graph has a cycle through {names[x]!r} and {names[y]!r}")

    redundant = adj & ~transitive_reduction(leq)
    if redundant.any():
        x, y = np.argwhere(redundant)[0]
        raise RedundantCover(
            f"cover {names[x]!r} < {names[y]!r} is implied by other covers"
        )

    if not leq[bottom, :].all():
        x = int(np.flatnonzero(~leq[bottom, :])[0])
        raise BadBounds(f"declared bottom {spec.bottom!r} is not below {names[x]!r}")
    if not leq[:, top].all():
        x = int(np.flatnonzero(~leq[:, top])[0])
        raise BadBounds(f"declared top {spec.top!r} is not above {names[x]!r}")

    meet, join, has_meet, has_join = _bound_tables(leq)
    bad = ~(has_meet & has_join)
    if bad.any():
        x, y = (int(v) for v in np.argwhere(bad)[0])
        missing = "meet" if not has_meet[x, y] else "join"
        what = "greatest lower bound" if missing == "meet" else "least upper bound"
        raise NotALattice(
            f"{names[x]!r} and {names[y]!r} have no {what}",
            pair=(names[x], names[y]),
            missing=missing,
        )
    return Lattice(names, leq, meet, join, bottom, top)


def _random_order(rng: np.random.Generator, n: int) -> np.ndarray:
    # ids: 0 = bottom, 1..n-2 middle (topologically ordered), n-1 = top
    adj = np.zeros((n, n), dtype=bool)
    rank = np.zeros(n, dtype=np.int64)
    for i in range(1, n - 1):
        rank[i] = rng.integers(1, rank[:i].max() + 2)
        lower = np.flatnonzero(rank[:i] < rank[i])
        k = min(len(lower), int(rng.integers(1, 4)))
        for j in rng.choice(lower, size=k, replace=False):
            adj[j, i] = True
    adj[:, n - 1] = True
    adj[n - 1, n - 1] = False
    return transitive_closure(adj)


def random_bounded_lattice(seed: int, n: int, attempts: int = GENERATION_ATTEMPTS) -> Lattice:
    """Seed-deterministic random bounded lattice with exactly ``n`` elements.

    Samples ranked DAGs and rejects those whose closure is not a lattice.
    Elements are labelled ``0``, ``e1`` ... ``e{n-2}``, ``1``.
    """
    if n < 2:
        raise ValueError("a bounded lattice needs at least 2 elements")
    rng = np.random.default_rng([seed, n])
    names = ("0",) + tuple(f"e{i}" for i in range(1, n - 1)) + ("1",)
    for _ in range(attempts):
        leq = _random_order(rng, n)
        _, _, has_meet, has_join = _bound_tables(leq)
        if not (has_meet.all() and has_join.all()):
            continue
        red = transitive_reduction(leq)
        covers = tuple((names[x], names[y]) for x, y in np.argwhere(red))
        return build_from_covers(CoverSpec(names, covers, "0", "1"))
    raise GenerationExhausted(f"no lattice of size {n} found in {attempts} attempts (seed {seed})")
