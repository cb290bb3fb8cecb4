"""The forced part of an idempotent nullnorm and the six ways to fill the rest.

Run: python3 demos/02_skeleton_and_constructions.py
"""
# %%
from latnull import (
    PreconditionFailed,
    Variant,
    applicable_variants,
    build_skeleton,
    construct_variant,
    emit_op_table_csv,
    is_idempotent_nullnorm,
    load_fixture,
)
from latnull.constructions import precondition

# %% [markdown]
# With zero element a, every idempotent nullnorm is pinned down everywhere
# except on the pair (p, q) of elements incomparable with a. "?" marks the
# open cell.

# %%
doc = load_fixture("M3")
m3, a = doc.lattice(), doc.zero
skeleton = build_skeleton(m3, a)
print(emit_op_table_csv(skeleton))
print("open cells:", [(m3.label(x), m3.label(y)) for x, y in skeleton.undetermined()])

# %% [markdown]
# Each variant fills V(p, q) with one value and has its own precondition.

# %%
for v in Variant:
    pre = precondition(m3, a, v)
    print(f"{v.value}: {'ok ' if pre.holds else 'no '} {pre.condition:40s} [{pre.evaluated}]")

# %%
v3 = construct_variant(m3, a, "v3")
ok, reports = is_idempotent_nullnorm(v3, a)
print("V3 on M3 is an idempotent nullnorm:", ok)
print(emit_op_table_csv(v3))

# %% [markdown]
# LADDER8: p < q but p∨a ≠ q∨a, so V5 (fill p∨q) is refused. Building the
# raw formula anyway shows exactly where associativity breaks.

# %%
doc = load_fixture("LADDER8")
L8, a8 = doc.lattice(), doc.zero
print("applicable:", [v.value for v in applicable_variants(L8, a8)])
try:
    construct_variant(L8, a8, Variant.V5)
except PreconditionFailed as exc:
    print("refused:", exc)

raw = construct_variant(L8, a8, Variant.V5, check=False)
for r in is_idempotent_nullnorm(raw, a8)[1]:
    print("  ", r)

# %%
# every fixture and the variants that work on it
for name in ("M3", "GRID23", "KITE7", "KITE7_DUAL", "LADDER7", "LADDER8", "OBSTRUCT9"):
    d = load_fixture(name)
    L = d.lattice()
    vs = applicable_variants(L, d.zero)
    sound = all(is_idempotent_nullnorm(construct_variant(L, d.zero, v), d.zero)[0] for v in vs)
    print(f"{name:10s} {', '.join(v.value for v in vs) or '-':20s} all sound: {sound}")
