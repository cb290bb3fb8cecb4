"""Deciding existence from four order conditions, and counting when possible.

Run: python3 demos/03_existence_decision.py
"""
# %%
from collections import Counter

from latnull import classify_uniqueness, decide_existence, load_fixture, random_bounded_lattice
from latnull.fuzz import zeros_with_two_incomparables

# %% [markdown]
# With I_a = {p, q}, an idempotent nullnorm exists iff one of
#
#   (i)   (p∧a)∨(q∧a) = a
#   (ii)  (p∨a)∧(q∨a) = a
#   (iii) p∨a ≤ q∨a and q∧a ≤ p∧a
#   (iv)  p∧a ≤ q∧a and q∨a ≤ p∨a
#
# holds. Nothing is enumerated here; these are four lattice lookups.

# %%
for name in ("M3", "GRID23", "KITE7", "KITE7_DUAL", "OBSTRUCT9"):
    doc = load_fixture(name)
    v = decide_existence(doc.lattice(), doc.zero)
    verdict = "EXISTS via " + ",".join(f"({c})" for c in v.via) if v.exists else "NOT EXISTS"
    print(f"{name}: {verdict}")
    for c in v.conditions:
        print(f"    ({c.name}) {'T' if c.holds else 'F'}  {c.evaluated}")

# %% [markdown]
# Some inequality patterns also pin down how many there are.

# %%
for name in ("M3", "GRID23", "LADDER7", "LADDER8", "KITE7"):
    doc = load_fixture(name)
    cls = classify_uniqueness(doc.lattice(), doc.zero)
    print(f"{name:8s} {cls.kind:12s} certified count: {cls.certified_count}")

# %%
# how the verdicts are distributed over random lattices
verdicts, kinds = Counter(), Counter()
for seed in range(400):
    L = random_bounded_lattice(seed, 5 + seed % 5)
    for a in zeros_with_two_incomparables(L):
        v = decide_existence(L, a)
        verdicts[",".join(v.via) or "none"] += 1
        kinds[classify_uniqueness(L, a).kind] += 1
print("conditions holding:", dict(verdicts.most_common()))
print("uniqueness classes:", dict(kinds.most_common()))
