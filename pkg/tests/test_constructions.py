import pytest

from latnull import (
    Variant,
    applicable_variants,
    build_skeleton,
    construct_variant,
    is_idempotent_nullnorm,
    random_bounded_lattice,
)
from latnull.constructions import UNDETERMINED, canonical_pair
from latnull.errors import BadZero, PreconditionFailed, WrongIaSize
from latnull.fuzz import corpus
from latnull.io import FIXTURES, load_fixture

from oracles import is_idempotent_nullnorm_slow, skeleton_formula, table_dict


def cell(L, table, x, y):
    return L.label(table.cells[L.id(x), L.id(y)])


# skeleton

def test_skeleton_m3(m3):
    sk = build_skeleton(m3, "a")
    assert cell(m3, sk, "0", "p") == "0"  # 0 ∨ (p∧a) = 0
    assert cell(m3, sk, "1", "p") == "1"  # 1 ∧ (p∨a) = 1
    assert sk.undetermined() == [(m3.id("p"), m3.id("q"))]
    assert cell(m3, sk, "p", "p") == "p"


def test_skeleton_chain_complete(chain3):
    sk = build_skeleton(chain3, "a")
    assert sk.is_complete() and sk.undetermined() == []


def test_skeleton_obstruct9(obstruct9):
    sk = build_skeleton(obstruct9, "a")
    assert cell(obstruct9, sk, "z", "p") == "z"  # z ∨ (p∧a) = z ∨ x


def test_skeleton_bad_zero(m3):
    with pytest.raises(BadZero):
        build_skeleton(m3, "0")


def _assert_matches_formula(L, a):
    sk = build_skeleton(L, a)
    formula = skeleton_formula(L, L.label(a))
    inc = set(L.incomparables(a))
    for x in L:
        for y in L:
            v = sk.cells[x, y]
            if v == UNDETERMINED:
                assert x in inc and y in inc and x != y
                assert (L.names[x], L.names[y]) not in formula
            else:
                assert L.names[v] == formula[L.names[x], L.names[y]]


@pytest.mark.parametrize("name", FIXTURES)
def test_skeleton_matches_region_formulas(name):
    doc = load_fixture(name)
    L = doc.lattice()
    _assert_matches_formula(L, L.id(doc.zero))


@pytest.mark.parametrize("seed", range(30))
def test_skeleton_matches_region_formulas_random(seed):
    L = random_bounded_lattice(seed, 4 + seed % 7)
    for a in L:
        if a not in (L.bottom, L.top):
            _assert_matches_formula(L, a)


# constructions

def test_v1_kite7(kite7):
    t = construct_variant(kite7, "a", Variant.V1)
    assert cell(kite7, t, "p", "q") == "1" == cell(kite7, t, "q", "p")


def test_v2_dual_kite7():
    L = load_fixture("KITE7_DUAL").lattice()
    t = construct_variant(L, "a", "v2")
    assert cell(L, t, "p", "q") == "1"  # 1 is the bottom of the dual
    assert is_idempotent_nullnorm(t, "a")[0]


def test_v3_grid23(grid23):
    t = construct_variant(grid23, "a", "V3")
    assert cell(grid23, t, "p", "q") == "p" == cell(grid23, t, "q", "p")


def test_v5_ladder7(ladder7):
    t = construct_variant(ladder7, "a", "V5")
    assert cell(ladder7, t, "p", "q") == "q"  # p ∨ q
    # the diagonal keeps V(x, x) = x
    assert cell(ladder7, t, "p", "p") == "p"
    assert cell(ladder7, t, "q", "q") == "q"


def test_v6_ladder7(ladder7):
    t = construct_variant(ladder7, "a", "V6")
    assert cell(ladder7, t, "p", "q") == "p"


def test_v5_ladder8_precondition(ladder8):
    with pytest.raises(PreconditionFailed) as err:
        construct_variant(ladder8, "a", "V5")
    assert "p∨a = r ≠ w = q∨a" in str(err.value)
    assert (err.value.lhs, err.value.rhs) == ("r", "w")


def test_precondition_messages(m3, kite7):
    with pytest.raises(PreconditionFailed, match=r"\(p∧a\)∨\(q∧a\) = 0 ≠ a"):
        construct_variant(m3, "a", "V1")
    with pytest.raises(PreconditionFailed, match="p ∥ q"):
        construct_variant(m3, "a", "V5")
    with pytest.raises(PreconditionFailed, match="y ≰ x"):
        construct_variant(kite7, "a", "V3")


def test_wrong_ia_size(chain3):
    with pytest.raises(WrongIaSize):
        construct_variant(chain3, "a", "V3")
    with pytest.raises(WrongIaSize):
        applicable_variants(chain3, "a")


def test_unknown_variant(m3):
    with pytest.raises(ValueError):
        construct_variant(m3, "a", "v9")


@pytest.mark.parametrize(
    "name, expected",
    [
        ("M3", ["V3", "V4"]),
        ("LADDER7", ["V3", "V4", "V5", "V6"]),
        ("OBSTRUCT9", []),
        ("GRID23", ["V3", "V6"]),
        ("KITE7", ["V1"]),
        ("KITE7_DUAL", ["V2"]),
        ("LADDER8", ["V3", "V6"]),
    ],
)
def test_applicable_variants(name, expected):
    doc = load_fixture(name)
    got = applicable_variants(doc.lattice(), doc.zero)
    assert [v.value for v in got] == expected


def test_construction_is_deterministic(m3):
    assert construct_variant(m3, "a", "V4") == construct_variant(m3, "a", "V4")


def test_constructions_extend_skeleton(ladder7):
    sk = build_skeleton(ladder7, "a")
    mask = sk.determined_mask()
    for v in applicable_variants(ladder7, "a"):
        t = construct_variant(ladder7, "a", v)
        assert (t.cells[mask] == sk.cells[mask]).all()


def _instances(count=150, max_size=9):
    for L, zeros in corpus(11, count, max_size):
        for a in zeros:
            yield L, a


def test_sufficiency_on_random_corpus():
    built = 0
    for L, a in _instances():
        for v in applicable_variants(L, a):
            t = construct_variant(L, a, v)
            ok, reports = is_idempotent_nullnorm(t, a)
            assert ok, (L.cover_spec(), L.names[a], v, reports)
            built += 1
    assert built > 100


def test_sufficiency_slow_oracle_on_fixtures():
    for name in ("M3", "GRID23", "KITE7", "KITE7_DUAL", "LADDER7", "LADDER8"):
        doc = load_fixture(name)
        L = doc.lattice()
        for v in applicable_variants(L, doc.zero):
            assert is_idempotent_nullnorm_slow(L, table_dict(construct_variant(L, doc.zero, v)), doc.zero)


def test_v5_v6_coincide_with_v3_v4():
    seen = 0
    for L, a in _instances(300):
        p, q = canonical_pair(L, a)
        if not L.comparable(p, q):
            continue
        low, high = (Variant.V3, Variant.V4) if L.leq(p, q) else (Variant.V4, Variant.V3)
        # p <= q: V6 fills p∧q = p like V3, V5 fills p∨q = q like V4
        if L.meet(p, a) == L.meet(q, a):
            assert construct_variant(L, a, "V6") == construct_variant(L, a, low, check=False)
            seen += 1
        if L.join(p, a) == L.join(q, a):
            assert construct_variant(L, a, "V5") == construct_variant(L, a, high, check=False)
            seen += 1
    assert seen > 10


def test_coincidence_on_ladder7(ladder7):
    # p < q with both equalities: V5 = V4 and V6 = V3
    assert construct_variant(ladder7, "a", "V5") == construct_variant(ladder7, "a", "V4")
    assert construct_variant(ladder7, "a", "V6") == construct_variant(ladder7, "a", "V3")
