from itertools import product as cartesian

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracle
from helpers import W, from_oracle, vec
from tridend import quasishuffle as qs
from tridend.algebra import (
    AlgebraError,
    TreeVector,
    atomic_product,
    get_forest,
    left_comb,
    ltl,
    mid,
    prec,
    preceq,
    product,
    right_comb,
    rtl,
    star,
    star_all,
    succ,
    succeq,
)
from tridend.quasishuffle import QuasiShuffle
from tridend.treecode import (
    UNIT,
    ForestCode,
    TreeCode,
    corolla,
    encode_angles,
    enumerate_trees,
    is_valid_code,
    packed_word,
    render_grid,
    restrict,
    vee,
)

Y = corolla(1)
YT = ((), ())
T = from_oracle((YT, (YT, (), ())))
S = from_oracle((((), ((), (), ())), YT, ()))


def trees_upto(n):
    return [t for d in range(n + 1) for t in enumerate_trees(d)]


def fcode(n, *rows):
    return ForestCode(n, [encode_angles(r) for r in rows])


def standardize(seg):
    ranks = {v: i + 1 for i, v in enumerate(sorted(set(seg)))}
    return tuple(ranks[v] for v in seg)


def forest_trees(F: ForestCode) -> list:
    """Trees of a forest code (a single tree keeps its own code)."""
    if F.chain[0] == 0:
        return [TreeCode(F.n, F.chain)]
    w = packed_word(TreeCode(F.n, (0,) + F.chain))
    top = max(w)
    cuts = [-1] + [i for i, x in enumerate(w) if x == top] + [len(w)]
    return [W(standardize(w[cuts[j] + 1:cuts[j + 1]])) for j in range(len(cuts) - 1)]


# ---------------------------------------------------------------- forests and combs

def test_get_forest_examples():
    assert get_forest(Y, 1, 1, 1) == fcode(1, {1})
    assert get_forest(Y, 1, 2, 1) == ForestCode(0, (0,))
    F3 = left_comb(S)[0]
    assert F3 == fcode(2, {2}, {1, 2})
    assert forest_trees(F3) == [Y, UNIT]


def test_get_forest_range_errors():
    with pytest.raises(IndexError):
        get_forest(Y, 2, 1, 1)
    with pytest.raises(IndexError):
        get_forest(Y, 1, 1, 2)


@given(st.integers(0, 5).flatmap(lambda n: st.sampled_from(enumerate_trees(n))), st.data())
def test_get_forest_dedup_against_reference(t, data):
    lev = data.draw(st.integers(0, t.height))
    lo = data.draw(st.integers(1, t.n + 1))
    hi = data.draw(st.integers(lo - 1, t.n))
    F = get_forest(t, lev, lo, hi)
    raw = [restrict(r, lo, hi) for r in t.chain[lev:]]
    collapsed = [r for i, r in enumerate(raw) if i == 0 or raw[i - 1] != r]
    assert list(F.chain) == collapsed
    assert all(a != b and a & ~b == 0 for a, b in zip(F.chain, F.chain[1:]))


def test_comb_examples():
    assert right_comb(T) == (fcode(1, (), {1}), fcode(2, {2}, {1, 2}))
    assert [forest_trees(F) for F in right_comb(T)] == [[Y], [Y, UNIT]]
    assert [forest_trees(F) for F in left_comb(S)] == [[Y, UNIT], [corolla(2)]]
    assert rtl(T) == 2 and ltl(S) == 2
    assert rtl(UNIT) == ltl(UNIT) == 0
    assert right_comb(UNIT) == left_comb(UNIT) == ()
    for m in range(1, 5):
        (F,) = left_comb(corolla(m))
        assert forest_trees(F) == [UNIT] * m


@pytest.mark.parametrize("n", range(5))
def test_combs_against_oracle(n):
    for t in oracle.all_trees(n):
        code = from_oracle(t)
        assert [forest_trees(F) for F in right_comb(code)] == \
            [[from_oracle(x) for x in f] for f in oracle.right_forests(t)]
        assert [forest_trees(F) for F in left_comb(code)] == \
            [[from_oracle(x) for x in f] for f in oracle.left_forests(t)]


@pytest.mark.parametrize("n", range(1, 5))
def test_right_comb_reconstructs(n):
    for t in enumerate_trees(n):
        node = UNIT
        for F in reversed(right_comb(t)):
            node = vee(forest_trees(F) + [node])
        assert node == t


# ---------------------------------------------------------------- atomic product

def test_unit_laws_for_atomic_product():
    for t in trees_upto(3):
        assert atomic_product(t, UNIT, QuasiShuffle(rtl(t), 0, tuple(range(1, rtl(t) + 1)))) == t
        assert atomic_product(UNIT, t, QuasiShuffle(0, ltl(t), tuple(range(1, ltl(t) + 1)))) == t


def test_merge_of_two_y():
    assert atomic_product(Y, Y, QuasiShuffle(1, 1, (1, 1))) == corolla(2)


def test_worked_product_grid():
    u = atomic_product(T, S, QuasiShuffle(2, 2, (1, 3, 2, 3)))
    assert u.n == 11
    assert render_grid(u).split("\n") == [
        "###########",
        ".##########",
        ".#.########",
        ".#.###..###",
        ".#......###",
        ".#......#.#",
        ".#.........",
        "...........",
    ]


def test_atomic_product_type_check():
    with pytest.raises(AlgebraError):
        atomic_product(T, S, QuasiShuffle(1, 1, (1, 1)))


@pytest.mark.parametrize("n1", range(4))
@pytest.mark.parametrize("n2", range(4))
def test_atomic_product_against_grafting(n1, n2):
    for t in oracle.all_trees(n1):
        for s in oracle.all_trees(n2):
            tc, sc = from_oracle(t), from_oracle(s)
            for sigma in qs.enumerate(rtl(tc), ltl(sc)):
                u = atomic_product(tc, sc, sigma)
                assert u == from_oracle(oracle.graft(t, s, sigma.values))
                assert is_valid_code(u)[0]
                assert u.height == tc.height + sc.height + sigma.r - sigma.k - sigma.l


def test_injectivity_of_the_action():
    for t in trees_upto(2):
        for s in trees_upto(2):
            out = [atomic_product(t, s, g) for g in qs.enumerate(rtl(t), ltl(s))]
            assert len(set(out)) == len(out)


# ---------------------------------------------------------------- products

def test_product_examples():
    assert mid(Y, Y) == TreeVector.from_tree(corolla(2))
    assert star(Y, Y) == vec(("11", 1), ("12", 1), ("21", 1))
    assert prec(Y, Y) == vec(("21", 1))
    assert succ(Y, Y) == vec(("12", 1))
    for t in trees_upto(3):
        assert star(UNIT, t) == TreeVector.from_tree(t) == star(t, UNIT)


def test_unit_conventions():
    for t in trees_upto(2)[1:]:
        tv = TreeVector.from_tree(t)
        assert prec(t, UNIT) == tv and not prec(UNIT, t)
        assert succ(UNIT, t) == tv and not succ(t, UNIT)
        assert not mid(UNIT, t) and not mid(t, UNIT)
        assert succeq(UNIT, t) == tv and preceq(t, UNIT) == tv
    assert star(UNIT, UNIT) == TreeVector.from_tree(UNIT)
    for op in ("prec", "mid", "succ", "preceq", "succeq"):
        with pytest.raises(AlgebraError):
            product(UNIT, UNIT, op)
    with pytest.raises(AlgebraError):
        product(Y, Y, "bogus")


def test_star_decomposition_and_mass():
    for t in trees_upto(3)[1:]:
        for s in trees_upto(3)[1:]:
            st_ = star(t, s)
            assert st_ == prec(t, s) + mid(t, s) + succ(t, s)
            assert preceq(t, s) == prec(t, s) + mid(t, s)
            assert succeq(t, s) == mid(t, s) + succ(t, s)
            assert sum(st_.terms.values()) == qs.count(rtl(t), ltl(s))


def test_mixed_bracket_choice():
    # (a >=. y) < b equals a >=. (y < b)
    trees = trees_upto(2)[1:]
    for a, y, b in cartesian(trees, repeat=3):
        assert prec(succeq(a, y), b) == succeq(a, prec(y, b))


tree_st = st.integers(0, 4).flatmap(lambda n: st.sampled_from(enumerate_trees(n)))


@st.composite
def vectors(draw, degree=None):
    n = draw(st.integers(1, 3)) if degree is None else degree
    trees = enumerate_trees(n)
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=len(trees), max_size=len(trees)))
    return TreeVector(dict(zip(trees, coeffs)))


@given(vectors(), vectors(), st.sampled_from(["prec", "mid", "succ", "preceq", "succeq", "star"]))
def test_degree_additivity_and_canonicity(x, y, op):
    z = product(x, y, op)
    if x and y:
        for u in z:
            assert u.n == x.degree() + y.degree()
            assert is_valid_code(u)[0]


@given(vectors(), vectors(), vectors())
def test_bilinearity(x, y, z):
    assert star(x + y, z) == star(x, z) + star(y, z)
    assert prec(x, 3 * y - z) == 3 * prec(x, y) - prec(x, z)


def test_star_fold_order_free():
    a, b, c = W("21"), W("1"), W("132")
    assert star_all([a, b, c]) == star(a, star(b, c))
    assert star_all([]) == TreeVector.from_tree(UNIT)


def test_vector_basics():
    v = vec(("21", 1), ("12", -1))
    assert v.degree() == 2
    assert (v - v) == 0 and not (v - v)
    assert vec(("1", 2)) * 0 == TreeVector()
    with pytest.raises(ValueError):
        (v + TreeVector.from_tree(Y)).degree()
    assert "21" in repr(v)
