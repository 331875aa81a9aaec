import random
from fractions import Fraction as F

import pytest
from hypothesis import assume, given, strategies as st

import oracle
from bl4kit import sampling
from bl4kit.algebra import StructureConstants, apply_basis_change, is_isomorphism
from bl4kit.linalg import identity, mat_prod
from bl4kit.normal_form import (
    CanonicalLabel as L,
    Isomorphic,
    NotIsomorphic,
    WitnessChain,
    are_isomorphic,
    canonical_label,
    canonical_presentation,
    canonical_structure_constants,
    classify_constants,
    computed_properties,
    opposite_label,
    opposite_matrix,
    property_table,
    reduce_direct,
)
from bl4kit.presentation import Bl4Presentation as P, NotBl4, to_structure_constants
from conftest import bl4_presentations, invertible_matrices, nonzero_rationals, rationals


def sc(p):
    return to_structure_constants(p)


def d_pres(lam, mu):
    return P(1, 1, ((mu, 0), (0, lam)))


# labels


def test_label_invariants():
    for bad in (("D", 1, 1), ("D", 2, 0), ("D", 0, -1), ("B", None, None), ("A0", 1, None), ("E", None, None)):
        with pytest.raises(ValueError):
            L(*bad)


def test_diagonal_folding():
    assert L.diagonal(5, 1) == L.C(5)
    assert L.diagonal(0, -1) == L.A1()
    assert L.diagonal(3, 2) == L.D(3, 2)


@given(rationals, nonzero_rationals)
def test_label_json_roundtrip(lam, mu):
    assume(mu != 1 and (lam, mu) != (0, -1))
    for label in (L.D(lam, mu), L.B(lam), L.C(lam), L.A0(), L.A1()):
        assert L.from_json(label.to_json()) == label


def test_label_json_shape():
    assert L.D(F(3, 2), F(1, 2)).to_json() == {"variant": "D", "lambda": "3/2", "mu": "1/2"}
    assert str(L.D(F(3, 2), F(1, 2))) == "D(3/2,1/2)"
    assert str(L.B(-1)) == "B(-1)" and str(L.A0()) == "A0"


# canonical constants


def test_canonical_constants_examples():
    assert canonical_structure_constants(L.A0()) == StructureConstants.from_products({(1, 2): (0, 0, 0, 1), (0, 3): (0, 0, 0, 1)})
    assert canonical_structure_constants(L.B(0)) == StructureConstants.from_products(
        {(1, 2): (0, 0, 0, 1), (0, 1): (0, 1, 0, 0), (0, 3): (0, 0, 1, 0)}
    )
    assert canonical_structure_constants(L.C(2)) == StructureConstants.from_products(
        {(1, 2): (0, 0, 0, 1), (0, 1): (0, 1, 0, 0), (0, 2): (0, 0, 1, 0), (0, 3): (0, 0, 0, 2)}
    )
    assert canonical_structure_constants(L.A1()) == StructureConstants.from_products(
        {(1, 2): (0, 0, 0, 1), (0, 1): (0, 1, 0, 0), (0, 2): (0, 0, -1, 0)}
    )


# reduce_direct


@pytest.mark.parametrize(
    "pres,label,tag",
    [
        (P(1, 1, ((2, 0), (5, 3))), L.D(3, 2), "diagonalize"),
        (P(2, 1, ((1, 3), (0, 1))), L.B(1), "triangular"),
        (P(0, 1, ((0, 0), (4, 2))), L.A0(), "diagonalize-nilpotent"),
        (P(3, 1, ((3, 0), (1, 6))), L.C(2), "diagonalize"),
        (P(2, 1, ((-2, 0), (0, 0))), L.A1(), "diagonalize"),
    ],
)
def test_reduce_direct(pres, label, tag):
    got, chain = reduce_direct(pres)
    assert got == label
    assert [t for t, _ in chain.steps][-1] == tag
    ca = oracle.table(oracle.presentation_products(pres.x11, pres.xi3, pres.X))
    cp = canonical_presentation(label)
    cb = oracle.table(oracle.presentation_products(cp.x11, cp.xi3, cp.X))
    assert oracle.is_iso(ca, cb, chain.product)


def test_reduce_direct_a0_witness():
    _, chain = reduce_direct(P(0, 1, ((0, 0), (4, 2))))
    assert chain.product == ((F(1, 2), 0, 0, 0), (-2, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


def test_reduce_direct_rejects():
    with pytest.raises(NotBl4) as info:
        reduce_direct(P(1, 1, ((0, 0), (5, 3))))
    assert info.value.reason == "first-row-vanishing"


@given(bl4_presentations())
def test_reduce_direct_witness_sound(p):
    label, chain = reduce_direct(p)
    assert is_isomorphism(sc(p), canonical_structure_constants(label), chain.product)
    assert chain.product == mat_prod(*[m for _, m in chain.steps])


def test_witness_chain_algebra():
    a = ((2, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    b = ((1, 0, 0, 0), (3, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    ch = WitnessChain.start("a", a).then("b", b)
    assert ch.product == mat_prod(a, b)
    assert ch.after("c", b).product == mat_prod(b, a, b)
    assert WitnessChain().product == identity(4)


# canonical_label and the pair rule


def test_canonical_label_d32():
    label, chain = canonical_label(d_pres(3, 2))
    assert label == L.D(F(3, 2), F(1, 2))
    assert chain.steps[-1][0] == "opposite"
    assert is_isomorphism(sc(d_pres(3, 2)), canonical_structure_constants(label), chain.product)


def test_canonical_label_self_paired():
    assert canonical_label(d_pres(1, -1))[0] == L.D(-1, -1)
    assert canonical_label(d_pres(-1, -1))[0] == L.D(-1, -1)
    w = opposite_matrix(-1)
    assert is_isomorphism(sc(d_pres(1, -1)), sc(d_pres(-1, -1)), w)
    assert is_isomorphism(sc(d_pres(-1, -1)), sc(d_pres(1, -1)), w)


def test_canonical_label_b7_direct_only():
    label, chain = canonical_label(P(1, 1, ((7, 1), (0, 0))))
    assert label == L.B(7)
    assert "opposite" not in [t for t, _ in chain.steps]


@given(rationals, nonzero_rationals)
def test_pair_involution(lam, mu):
    assume(mu != 1 and (lam, mu) != (0, -1))
    label = L.D(lam, mu)
    assert opposite_label(opposite_label(label)) == label
    assert label.is_full_canonical or opposite_label(label).is_full_canonical
    assert is_isomorphism(canonical_structure_constants(label), canonical_structure_constants(opposite_label(label)), opposite_matrix(mu))


@given(rationals, nonzero_rationals)
def test_fixed_points(lam, mu):
    assume(mu != 1 and (lam, mu) != (0, -1))
    label = L.D(lam, mu)
    want = label if label.is_full_canonical else opposite_label(label)
    assert canonical_label(canonical_presentation(label))[0] == want


# isomorphism decisions


def test_iso_opposite_pair():
    res = are_isomorphic(d_pres(3, 2), d_pres(F(3, 2), F(1, 2)))
    assert isinstance(res, Isomorphic)
    assert is_isomorphism(sc(d_pres(3, 2)), sc(d_pres(F(3, 2), F(1, 2))), res.witness)


def test_not_iso_distinct_d():
    res = are_isomorphic(d_pres(3, 2), d_pres(2, 3))
    assert res == NotIsomorphic(L.D(F(3, 2), F(1, 2)), L.D(F(2, 3), F(1, 3)))


def test_iso_c1_identity():
    c1 = canonical_presentation(L.C(1))
    res = are_isomorphic(c1, c1)
    assert isinstance(res, Isomorphic) and res.witness == identity(4)


def test_b_parameters_separate():
    assert isinstance(are_isomorphic(canonical_presentation(L.B(1)), canonical_presentation(L.B(2))), NotIsomorphic)


@given(bl4_presentations(), invertible_matrices())
def test_iso_under_random_basis_change(p, m):
    s = sc(p)
    moved = apply_basis_change(s, m)
    res = are_isomorphic(s, moved)
    assert isinstance(res, Isomorphic)
    assert is_isomorphism(s, moved, res.witness)


@pytest.mark.parametrize("seed", range(10))
def test_classify_constants_label(seed):
    rng = random.Random(seed)
    p = sampling.bl4_presentation(rng)
    m = sampling.invertible(rng, 4, 5)
    moved = apply_basis_change(sc(p), m)
    label, chain = classify_constants(moved)
    assert label == canonical_label(p)[0]
    assert is_isomorphism(moved, canonical_structure_constants(label), chain.product)
    assert chain.steps[0][0] == "distinguished-basis"


# property table


@pytest.mark.parametrize(
    "label,row",
    [
        (L.C(-1), (False, True, True)),
        (L.D(4, 3), (True, True, True)),
        (L.B(1), (False, False, False)),
        (L.A0(), (False, False, True)),
        (L.A1(), (True, True, True)),
        (L.C(2), (True, True, True)),
        (L.C(0), (False, False, True)),
        (L.D(2, 3), (False, False, False)),
    ],
)
def test_property_table(label, row):
    assert property_table(label).as_tuple() == row
    assert computed_properties(canonical_structure_constants(label)) == property_table(label)


@given(st.integers(-4, 4), st.integers(-4, 4).filter(lambda m: m not in (0, 1)))
def test_property_table_matches_predicates_on_d(lam, mu):
    assume((lam, mu) != (0, -1))
    label = L.D(lam, mu)
    assert computed_properties(canonical_structure_constants(label)) == property_table(label)
