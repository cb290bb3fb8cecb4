"""Deciding and counting idempotent nullnorms when |I_a| = 2.

``decide_existence`` and ``classify_uniqueness`` evaluate closed-form order
conditions only. ``enumerate_idempotent_nullnorms`` is the independent
ground truth: it tries every completion of the skeleton and keeps those that
pass all five axiom checks.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .axioms import OpTable, is_idempotent_nullnorm
from .constructions import Variant, build_skeleton, canonical_pair
from .errors import NotApplicable, SearchSpaceTooLarge, WrongIaSize
from .lattice import Lattice

__all__ = [
    "Condition",
    "ExistenceVerdict",
    "SEARCH_SPACES",
    "UniquenessClass",
    "candidate_tables",
    "check_comparable_corollary",
    "check_ia_lemma",
    "check_pro_special",
    "classify_uniqueness",
    "decide_existence",
    "enumerate_idempotent_nullnorms",
]

SEARCH_SPACES = ("lemma_restricted", "full")
# largest |I_a| each search space accepts
IA_LIMITS = {"lemma_restricted": 4, "full": 2}


@dataclass(frozen=True)
class Condition:
    name: str
    holds: bool
    statement: str
    evaluated: str


@dataclass(frozen=True)
class ExistenceVerdict:
    exists: bool
    conditions: tuple[Condition, Condition, Condition, Condition]
    p_label: str
    q_label: str
    a_label: str

    @property
    def c_i(self) -> bool:
        return self.conditions[0].holds

    @property
    def c_ii(self) -> bool:
        return self.conditions[1].holds

    @property
    def c_iii(self) -> bool:
        return self.conditions[2].holds

    @property
    def c_iv(self) -> bool:
        return self.conditions[3].holds

    @property
    def via(self) -> list[str]:
        return [c.name for c in self.conditions if c.holds]


def _rel(names, lhs, rhs, ok, op):
    if ok and lhs == rhs and op == "=":
        return names[lhs]
    neg = {"=": "≠", "≤": "≰"}[op]
    return f"{names[lhs]} {op if ok else neg} {names[rhs]}"


def decide_existence(L: Lattice, a) -> ExistenceVerdict:
    """Existence of an idempotent nullnorm with zero ``a`` iff one of four conditions holds.

    (i)   (p∧a)∨(q∧a) = a
    (ii)  (p∨a)∧(q∨a) = a
    (iii) p∨a ≤ q∨a and q∧a ≤ p∧a
    (iv)  p∧a ≤ q∧a and q∨a ≤ p∨a

    (iii) and (iv) are mirror images under swapping p and q, so evaluating
    both on the canonical labelling covers either labelling.
    """
    a = L.check_zero(a)
    p, q = canonical_pair(L, a)
    n = L.names
    P, Q, A = n[p], n[q], n[a]
    pm, qm, pj, qj = L.meet(p, a), L.meet(q, a), L.join(p, a), L.join(q, a)

    v1 = L.join(pm, qm)
    v2 = L.meet(pj, qj)
    c1 = Condition("i", v1 == a, f"({P}∧{A})∨({Q}∧{A}) = {A}",
                   f"({P}∧{A})∨({Q}∧{A}) = {_rel(n, v1, a, v1 == a, '=')}")
    c2 = Condition("ii", v2 == a, f"({P}∨{A})∧({Q}∨{A}) = {A}",
                   f"({P}∨{A})∧({Q}∨{A}) = {_rel(n, v2, a, v2 == a, '=')}")
    s1, s2 = L.leq(pj, qj), L.leq(qm, pm)
    c3 = Condition("iii", s1 and s2, f"{P}∨{A} ≤ {Q}∨{A} and {Q}∧{A} ≤ {P}∧{A}",
                   f"{_rel(n, pj, qj, s1, '≤')}; {_rel(n, qm, pm, s2, '≤')}")
    t1, t2 = L.leq(pm, qm), L.leq(qj, pj)
    c4 = Condition("iv", t1 and t2, f"{P}∧{A} ≤ {Q}∧{A} and {Q}∨{A} ≤ {P}∨{A}",
                   f"{_rel(n, pm, qm, t1, '≤')}; {_rel(n, qj, pj, t2, '≤')}")
    conds = (c1, c2, c3, c4)
    return ExistenceVerdict(any(c.holds for c in conds), conds, P, Q, A)


@dataclass(frozen=True)
class UniquenessClass:
    kind: str  # unique_v3 | unique_v4 | exactly_two | other
    certified_count: int | None = None
    variants: tuple[Variant, ...] = ()


def classify_uniqueness(L: Lattice, a) -> UniquenessClass:
    """Certify the number of idempotent nullnorms from order conditions alone.

    Exactly one (the V3 table) when p∨a < q∨a with q∧a ≤ p∧a, or p∨a ≤ q∨a
    with q∧a < p∧a; exactly one (V4) in the mirrored situation; exactly two
    (V3 and V4) when p∨a = q∨a and p∧a = q∧a. Nothing is certified otherwise.
    Never consults the enumeration oracle.
    """
    a = L.check_zero(a)
    p, q = canonical_pair(L, a)
    pm, qm, pj, qj = L.meet(p, a), L.meet(q, a), L.join(p, a), L.join(q, a)
    leq, lt = L.leq, L.lt

    if pj == qj and pm == qm:
        return UniquenessClass("exactly_two", 2, (Variant.V3, Variant.V4))
    if (lt(pj, qj) and leq(qm, pm)) or (leq(pj, qj) and lt(qm, pm)):
        return UniquenessClass("unique_v3", 1, (Variant.V3,))
    # the same pattern with p and q swapped singles out V4
    if (lt(qj, pj) and leq(pm, qm)) or (leq(qj, pj) and lt(pm, qm)):
        return UniquenessClass("unique_v4", 1, (Variant.V4,))
    return UniquenessClass("other")


def _candidates(L: Lattice, a: int, x: int, y: int, inc, search_space: str) -> list[int]:
    if search_space == "full":
        return list(range(L.n))
    below = L.join(L.meet(x, a), L.meet(y, a))
    above = L.meet(L.join(x, a), L.join(y, a))
    return sorted({below, above, *inc})


def _search_plan(L: Lattice, a, search_space: str):
    if search_space not in SEARCH_SPACES:
        raise ValueError(f"search_space must be one of {SEARCH_SPACES}, got {search_space!r}")
    a = L.check_zero(a)
    inc = L.incomparables(a)
    skeleton = build_skeleton(L, a)
    cells = skeleton.undetermined()
    options = [_candidates(L, a, x, y, inc, search_space) for x, y in cells]
    bound = math.prod(len(o) for o in options)
    if len(inc) > IA_LIMITS[search_space]:
        raise SearchSpaceTooLarge(
            f"|I_a| = {len(inc)} exceeds {IA_LIMITS[search_space]} for {search_space} search "
            f"({bound} candidate tables)",
            bound=bound,
        )
    return a, skeleton, cells, options


def candidate_tables(L: Lattice, a, search_space: str = "lemma_restricted") -> Iterator[OpTable]:
    """Every symmetric completion of the skeleton, cells row-major, values ascending."""
    a, skeleton, cells, options = _search_plan(L, a, search_space)
    for combo in itertools.product(*options):
        yield skeleton.fill(dict(zip(cells, combo)))


def _scan(L, a, skeleton, cells, options):
    found = []
    for combo in itertools.product(*options):
        table = skeleton.fill(dict(zip(cells, combo)))
        if is_idempotent_nullnorm(table, a)[0]:
            found.append(table.key())
    return found


def enumerate_idempotent_nullnorms(
    L: Lattice, a, search_space: str = "lemma_restricted", workers: int = 1
) -> list[OpTable]:
    """All idempotent nullnorms with zero ``a``, found by exhaustive search.

    Off-diagonal I_a x I_a cells range over (x∧a)∨(y∧a), (x∨a)∧(y∨a) and
    I_a in ``lemma_restricted`` mode, or over all of L in ``full`` mode.
    With ``workers > 1`` the first cell's candidates are split across
    processes; the result is sorted either way so both paths agree exactly.
    """
    a, skeleton, cells, options = _search_plan(L, a, search_space)
    if workers > 1 and cells:
        jobs = [(L, a, skeleton, cells, [[v], *options[1:]]) for v in options[0]]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_scan, *zip(*jobs))
            keys = [k for part in parts for k in part]
    else:
        keys = _scan(L, a, skeleton, cells, options)
    n = L.n
    return [OpTable(L, [key[i * n:(i + 1) * n] for i in range(n)]) for key in sorted(keys)]


def check_ia_lemma(L: Lattice, a, search_space: str = "lemma_restricted") -> bool:
    """If (x∧a)∨(y∧a) < a and (x∨a)∧(y∨a) > a then V(x, y) lies in I_a.

    Checked for every enumerated idempotent nullnorm V and every x, y in I_a.
    """
    a = L.check_zero(a)
    inc = L.incomparables(a)
    if len(inc) < 2:
        raise WrongIaSize(f"need |I_a| >= 2, found {len(inc)}", size=len(inc))
    pairs = [
        (x, y)
        for x in inc
        for y in inc
        if L.lt(L.join(L.meet(x, a), L.meet(y, a)), a)
        and L.lt(a, L.meet(L.join(x, a), L.join(y, a)))
    ]
    inc_set = set(inc)
    for table in enumerate_idempotent_nullnorms(L, a, search_space):
        if any(table(x, y) not in inc_set for x, y in pairs):
            return False
    return True


def check_comparable_corollary(L: Lattice, a) -> bool:
    """For comparable p, q: p∧a = q∧a or p∨a = q∨a."""
    a = L.check_zero(a)
    try:
        p, q = canonical_pair(L, a)
    except WrongIaSize as exc:
        raise NotApplicable(str(exc)) from None
    if not L.comparable(p, q):
        raise NotApplicable(f"{L.label(p)} ∥ {L.label(q)}")
    return L.meet(p, a) == L.meet(q, a) or L.join(p, a) == L.join(q, a)


def check_pro_special(L: Lattice, a, p, q) -> bool:
    """(p∧a)∨(q∧a)∨(p∧q) = p∧q and (p∨a)∧(q∨a)∧(p∨q) = p∨q.

    Requires p, q in I_a, comparable, with p∧a = q∧a and p∨a = q∨a.
    """
    a = L.check_zero(a)
    p, q = L.id(p), L.id(q)
    inc = L.incomparables(a)
    P, Q = L.label(p), L.label(q)
    if p not in inc or q not in inc:
        raise NotApplicable(f"{P} and {Q} must both be incomparable with {L.label(a)}")
    if not L.comparable(p, q):
        raise NotApplicable(f"{P} ∥ {Q}")
    if L.meet(p, a) != L.meet(q, a):
        raise NotApplicable(f"{P}∧a = {L.label(L.meet(p, a))} ≠ {L.label(L.meet(q, a))} = {Q}∧a")
    if L.join(p, a) != L.join(q, a):
        raise NotApplicable(f"{P}∨a = {L.label(L.join(p, a))} ≠ {L.label(L.join(q, a))} = {Q}∨a")
    pq_m, pq_j = L.meet(p, q), L.join(p, q)
    lower = L.join(L.join(L.meet(p, a), L.meet(q, a)), pq_m)
    upper = L.meet(L.meet(L.join(p, a), L.join(q, a)), pq_j)
    return lower == pq_m and upper == pq_j
