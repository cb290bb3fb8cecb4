"""Bounded lattices from Hasse diagrams.

Run: python3 demos/01_lattices_and_hasse.py
"""
# %%
import numpy as np

from latnull import CoverSpec, NotALattice, build_from_covers, emit_dot, load_fixture

# %% [markdown]
# A lattice is given by its cover pairs; everything else (order, meets,
# joins) is derived. M3 is the diamond with three atoms.

# %%
m3 = load_fixture("M3").lattice()
print("elements:", m3.names)
print("order matrix (row <= column):")
print(m3.leq_matrix.astype(int))

# %%
# meet and join tables hold element ids
print("meet table:\n", m3.meet_table)
print("p ∧ q =", m3.label(m3.meet("p", "q")), "  p ∨ q =", m3.label(m3.join("p", "q")))
print("p and q comparable?", m3.comparable("p", "q"))

# %% [markdown]
# I_a, the set of elements incomparable with a, drives everything later.

# %%
for x in m3.names[1:-1]:
    print(f"I_{x} =", [m3.label(i) for i in m3.incomparables(x)])

# %%
# distributivity: M3 is the textbook non-distributive lattice, GRID23 (2 x 3) is distributive
grid = load_fixture("GRID23").lattice()
print("M3 distributive:", m3.is_distributive(), " GRID23 distributive:", grid.is_distributive())

# %% [markdown]
# Covers that do not produce a lattice are rejected with a witness pair.

# %%
bowtie = CoverSpec(
    ("0", "b", "c", "d", "e", "1"),
    (("0", "b"), ("0", "c"), ("b", "d"), ("b", "e"), ("c", "d"), ("c", "e"), ("d", "1"), ("e", "1")),
    "0", "1",
)
try:
    build_from_covers(bowtie)
except NotALattice as exc:
    print("rejected:", exc)

# %%
# the Hasse diagram as DOT, ready for `dot -Tpng`
print(emit_dot(m3, "M3"))

# %%
# counts of comparable pairs per fixture, straight off the order matrices
for name in ("M3", "GRID23", "KITE7", "LADDER8", "OBSTRUCT9"):
    L = load_fixture(name).lattice()
    print(f"{name:10s} n={L.n}  comparable pairs={int(np.triu(L.leq_matrix, 1).sum())}")
