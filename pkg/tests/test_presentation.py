import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

import oracle
from bl4kit import sampling
from bl4kit.algebra import StructureConstants, apply_basis_change, derived_subalgebra, is_isomorphism, multiply
from bl4kit.linalg import det, identity, inverse, mat_mul
from bl4kit.normal_form import canonical_label
from bl4kit.presentation import (
    Bl4Presentation,
    NotBl4,
    WeakIso,
    compose,
    extract_presentation,
    invert,
    is_bl4,
    is_weak_iso_shape,
    iso_condition_holds,
    normalize_xi3,
    to_structure_constants,
    weak_iso_matrix,
)
from conftest import bl4_presentations, nonzero_rationals, rationals

P = Bl4Presentation


def sc(p):
    return to_structure_constants(p)


def oracle_sc(p):
    return oracle.table(oracle.presentation_products(p.x11, p.xi3, p.X))


# to_structure_constants


@pytest.mark.parametrize(
    "pres,products",
    [
        (P(0, 1, ((0, 0), (0, 1))), {(1, 2): (0, 0, 0, 1), (0, 3): (0, 0, 0, 1)}),
        (P(1, 1, ((F(2, 3), 1), (0, 0))), {(1, 2): (0, 0, 0, 1), (0, 1): (0, 1, 0, 0), (0, 2): (0, 0, F(2, 3), 0), (0, 3): (0, 0, 1, 0)}),
        (P(1, 1, ((2, 0), (0, 3))), {(1, 2): (0, 0, 0, 1), (0, 1): (0, 1, 0, 0), (0, 2): (0, 0, 2, 0), (0, 3): (0, 0, 0, 3)}),
    ],
)
def test_to_structure_constants(pres, products):
    assert sc(pres) == StructureConstants.from_products(products)


def test_xi3_zero_rejected():
    with pytest.raises(ValueError):
        P(1, 0, ((1, 0), (0, 1)))


@given(bl4_presentations())
def test_constants_match_oracle_table(p):
    s = sc(p)
    assert [[list(r) for r in plane] for plane in s.c] == oracle_sc(p)


# is_bl4


@pytest.mark.parametrize(
    "pres,verdict",
    [
        (P(1, 1, ((0, 0), (5, 3))), (False, "first-row-vanishing")),
        (P(0, 1, ((0, 0), (7, 0))), (False, "decomposable")),
        (P(1, 1, ((2, 0), (5, 3))), (True, None)),
        (P(0, 1, ((1, 0), (0, 1))), (False, "first-row-nonvanishing")),
        (P(0, 1, ((0, 0), (4, 2))), (True, None)),
    ],
)
def test_is_bl4(pres, verdict):
    assert is_bl4(pres) == verdict


def test_decomposable_witness():
    p = P(0, 1, ((0, 0), (7, 0)))
    s = sc(p)
    f0 = (1, -7, 0, 0)
    for v in ((0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)):
        assert multiply(s, f0, v) == (0, 0, 0, 0)
    m = ((1, 0, 0, 0), (-7, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    moved = apply_basis_change(s, m)
    assert all(moved.product(0, j) == (0, 0, 0, 0) for j in range(4))
    assert derived_subalgebra(s).dim == 1


@given(bl4_presentations())
def test_bl4_derived_dichotomy(p):
    ok, _ = is_bl4(p)
    assert ok
    d = derived_subalgebra(sc(p))
    assert d.dim == (3 if p.x11 != 0 else 1)


# normalize_xi3


@pytest.mark.parametrize(
    "pres,witness",
    [
        (P(2, 5, ((1, 0), (0, 3))), ((1, 0, 0, 0), (0, F(1, 5), 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))),
        (P(0, -2, ((0, 0), (0, 1))), ((1, 0, 0, 0), (0, F(-1, 2), 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))),
        (P(1, 1, ((2, 0), (5, 3))), identity(4)),
    ],
)
def test_normalize_xi3(pres, witness):
    norm, w = normalize_xi3(pres)
    assert (norm.x11, norm.xi3, norm.X) == (pres.x11, 1, pres.X)
    assert weak_iso_matrix(w) == witness
    assert oracle.is_iso(oracle_sc(pres), oracle_sc(norm), witness)
    assert is_isomorphism(sc(pres), sc(norm), witness)


def test_uniform_rescale_of_e2_e3_is_not_a_normalizing_witness():
    pres = P(2, 5, ((1, 0), (0, 3)))
    norm, _ = normalize_xi3(pres)
    m = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 5, 0), (0, 0, 0, 5))
    assert not oracle.is_iso(oracle_sc(pres), oracle_sc(norm), m)


@given(bl4_presentations())
def test_normalize_witness_always_verifies(p):
    norm, w = normalize_xi3(p)
    assert is_isomorphism(sc(p), sc(norm), weak_iso_matrix(w))


# WeakIso group


def test_weak_iso_identity():
    assert weak_iso_matrix(WeakIso.identity()) == identity(4)


def test_weak_iso_invariants():
    with pytest.raises(ValueError):
        WeakIso(0, (0, 0, 0), ((1, 0), (0, 1)), (0, 0), 1)
    with pytest.raises(ValueError):
        WeakIso(1, (0, 0, 0), ((1, 2), (2, 4)), (0, 0), 1)
    with pytest.raises(ValueError):
        WeakIso.from_matrix(((1, 1, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)))
    assert not is_weak_iso_shape(((1, 0, 0, 0), (0, 1, 0, 1), (0, 0, 1, 0), (0, 0, 0, 1)))


@pytest.mark.parametrize("seed", range(20))
def test_weak_iso_group_laws(seed):
    rng = random.Random(seed)
    w1, w2, w3 = (sampling.weak_iso(rng) for _ in range(3))
    assert weak_iso_matrix(compose(w1, invert(w1))) == identity(4)
    assert compose(compose(w1, w2), w3) == compose(w1, compose(w2, w3))
    assert weak_iso_matrix(compose(w1, w2)) == mat_mul(weak_iso_matrix(w1), weak_iso_matrix(w2))
    assert weak_iso_matrix(invert(w1)) == inverse(weak_iso_matrix(w1))
    assert WeakIso.from_matrix(weak_iso_matrix(w1)) == w1


def test_xi3_preserving_closed():
    rng = random.Random(3)
    for _ in range(100):
        w1 = sampling.weak_iso(rng, xi3_preserving=True)
        w2 = sampling.weak_iso(rng, xi3_preserving=True)
        assert compose(w1, w2).preserves_xi3
        assert invert(w1).preserves_xi3


# the matrix criterion


def test_iso_condition_identity():
    d = P(1, 1, ((2, 0), (0, 3)))
    assert iso_condition_holds(d, d, WeakIso.identity())


def test_iso_condition_a0_gamma_element():
    a0 = P(0, 1, ((0, 0), (0, 1)))
    for u3 in (0, 7, F(-3, 2)):
        w = WeakIso.xi3_preserving(1, (-5, 2, u3), ((1, 0), (0, 1)), (2, 5))
        assert iso_condition_holds(a0, a0, w)
        assert oracle.is_iso(oracle_sc(a0), oracle_sc(a0), weak_iso_matrix(w))


def test_iso_condition_opposite():
    d32 = P(1, 1, ((2, 0), (0, 3)))
    d_opp = P(1, 1, ((F(1, 2), 0), (0, F(3, 2))))
    m = ((F(1, 2), 0, 0, 0), (0, 0, 1, 0), (0, 1, 0, 0), (0, 0, 0, -1))
    w = WeakIso.from_matrix(m)
    assert w.preserves_xi3
    assert iso_condition_holds(d32, d_opp, w)
    assert oracle.is_iso(oracle_sc(d32), oracle_sc(d_opp), m)


def test_iso_condition_preconditions():
    d = P(1, 2, ((2, 0), (0, 3)))
    with pytest.raises(ValueError):
        iso_condition_holds(d, d, WeakIso.identity())
    d1 = P(1, 1, ((2, 0), (0, 3)))
    with pytest.raises(ValueError):
        iso_condition_holds(d1, d1, WeakIso(1, (0, 0, 0), ((1, 0), (0, 1)), (0, 0), 2))


@st.composite
def xi3_preserving_isos(draw):
    P_ = ((draw(rationals), draw(rationals)), (draw(rationals), draw(rationals)))
    if det(P_) == 0:
        P_ = ((draw(nonzero_rationals), 0), (0, draw(nonzero_rationals)))
    return WeakIso.xi3_preserving(draw(nonzero_rationals), (draw(rationals), draw(rationals), draw(rationals)), P_, (draw(rationals), draw(rationals)))


@given(bl4_presentations(xi3=1), bl4_presentations(xi3=1), xi3_preserving_isos())
def test_iso_condition_matches_oracle_random(pa, pb, w):
    m = weak_iso_matrix(w)
    assert iso_condition_holds(pa, pb, w) == oracle.is_iso(oracle_sc(pa), oracle_sc(pb), m)


def _read_off(s):
    c = s.c
    pres = P(c[0][1][1], c[1][2][3], ((c[0][2][2], c[0][3][2]), (c[0][2][3], c[0][3][3])))
    assert to_structure_constants(pres) == s
    return pres


@given(bl4_presentations(xi3=1), nonzero_rationals, nonzero_rationals, nonzero_rationals, rationals, rationals)
def test_iso_condition_true_on_pushforward(pa, u0, p1, q2, u1, u3):
    # diagonal block, u2 = 0 and a = 0 keep the pushed constants presentation-shaped
    w = WeakIso.xi3_preserving(u0, (u1, 0, u3), ((p1, 0), (0, q2)), (0, 0))
    pb = _read_off(apply_basis_change(sc(pa), weak_iso_matrix(w)))
    assert iso_condition_holds(pa, pb, w)
    assert oracle.is_iso(oracle_sc(pa), oracle_sc(pb), weak_iso_matrix(w))


# extraction


def test_extract_distinguished_identity():
    p = P(1, 1, ((2, 0), (0, 3)))
    q, basis = extract_presentation(sc(p))
    assert (q.x11, q.xi3, q.X) == (1, 1, ((2, 0), (0, 3)))
    assert basis == identity(4)


def test_extract_wrong_derived_dimension():
    s = StructureConstants.from_products({(0, 1): (0, 1, 0, 0), (0, 2): (0, 0, 1, 0)})
    with pytest.raises(NotBl4) as info:
        extract_presentation(s)
    assert info.value.reason == "wrong-derived-dimension"


def test_extract_decomposable():
    with pytest.raises(NotBl4) as info:
        extract_presentation(sc(P(0, 1, ((0, 0), (7, 0)))))
    assert info.value.reason == "decomposable"


def test_extract_no_rational_splitting():
    # e0 acts on p/p' by a rotation; eigenvalues are irrational
    s = StructureConstants.from_products({(1, 2): (0, 0, 0, 1), (0, 1): (0, 0, 1, 0), (0, 2): (0, -2, 0, 0), (0, 3): (0, 0, 0, -1)})
    with pytest.raises(NotBl4) as info:
        extract_presentation(s)
    assert info.value.reason == "no-rational-splitting"


def test_extract_heisenberg_plus_abelian():
    s = StructureConstants.from_products({(1, 2): (0, 0, 0, 1)})
    with pytest.raises(NotBl4) as info:
        extract_presentation(s)
    assert info.value.reason == "decomposable"


@given(bl4_presentations())
def test_extract_round_trip(p):
    s = sc(p)
    q, basis = extract_presentation(s)
    assert q.xi3 == 1
    assert apply_basis_change(s, basis) == sc(q)
    assert canonical_label(q)[0] == canonical_label(p)[0]


@pytest.mark.parametrize("seed", range(15))
def test_extract_after_random_basis_change(seed):
    rng = random.Random(seed)
    p = sampling.bl4_presentation(rng)
    m = sampling.invertible(rng, 4, 4)
    moved = apply_basis_change(sc(p), m)
    q, basis = extract_presentation(moved)
    assert is_isomorphism(moved, sc(q), basis)
    assert canonical_label(q)[0] == canonical_label(p)[0]
