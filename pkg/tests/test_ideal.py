from __future__ import annotations

import pytest
import sympy
from conftest import XY, XYZ, forms, homogeneous_ideal_gens, polynomials
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import as_term_set, degree_piece, monomials, sympy_groebner

from aciverify.ideal import (
    Ideal,
    NotHomogeneousError,
    colon,
    colon_element,
    colon_variable,
    contains_ideal,
    dimension,
    groebner_basis,
    height,
    ideal_combine,
    ideal_equal,
    intersection,
    is_regular_sequence,
    maximal_power,
    membership,
    min_generator_count,
    normal_form,
)
from aciverify.polynomial import LEX, MonomialOrder

P = XYZ.parse


def I(*gens, ctx=XYZ):
    return Ideal(ctx, [ctx.parse(g) for g in gens])


# -- Groebner bases ------------------------------------------------------------------

def test_gb_of_monomials_is_itself():
    gb = groebner_basis(I("x^2", "x*y"))
    assert {str(p) for p in gb.elements} == {"x^2", "x*y"}


def test_twisted_cubic_lex():
    gb = groebner_basis(I("y - x^2", "z - x^3"), LEX)
    expected = {"x^2 - y", "x*y - z", "x*z - y^2", "y^3 - z^2"}
    assert {str(p) for p in gb.elements} == {str(P(e)) for e in expected}
    # the oracle agrees
    oracle = sympy_groebner(["y - x^2", "z - x^3"], ["x", "y", "z"], "lex")
    assert as_term_set(gb.elements) == oracle


def test_unit_ideal_gb():
    gb = groebner_basis(Ideal(XYZ, [XYZ.one()]))
    assert [str(p) for p in gb.elements] == ["1"]
    assert gb.is_unit()
    assert I("x", "x + 1").is_unit()


def test_normal_form_examples():
    assert normal_form(P("x*y"), groebner_basis(I("x^2", "y^2"))) == P("x*y")
    gb = groebner_basis(I("x^2 - y", "x*y - z", "x*z - y^2", "y^3 - z^2"), LEX)
    assert normal_form(P("y^3"), gb) == P("z^2")
    assert normal_form(P("x^2 - y"), gb) == XYZ.zero()


def test_membership_examples():
    A = I("x^2", "y^2")
    assert not membership(P("x*y"), A)
    assert membership(P("x^2*y"), A)
    assert membership(XYZ.zero(), A)
    assert P("x^2*z + y^3") in A


def test_gb_elements_monic_sorted_reduced():
    gb = groebner_basis(I("x^2 + 3*y*z", "2*x*y - z^2", "y^3"))
    lms = gb.leading_exponents()
    for p, lm in zip(gb.elements, lms):
        assert p.leading_coefficient() == 1
    for i, a in enumerate(lms):
        for j, b in enumerate(lms):
            if i != j:
                assert not all(x <= y for x, y in zip(a, b))
    # no leading monomial divides any tail term
    for p in gb.elements:
        for e in p.term_dict:
            if e != p.leading_exponent():
                assert gb.is_standard(e)


@settings(max_examples=200)
@given(homogeneous_ideal_gens())
def test_gb_idempotent_and_criterion(gens):
    A = Ideal(XYZ, gens)
    gb = A.groebner_basis()
    again = Ideal(XYZ, gb.elements).groebner_basis()
    assert again.elements == gb.elements
    assert gb.s_polynomials_reduce_to_zero()
    for g in gens:
        assert not gb.normal_form(g)


@settings(max_examples=40)
@given(st.lists(polynomials(XYZ, max_deg=2, max_terms=3, coeff=3).filter(bool),
                min_size=1, max_size=3),
       st.sampled_from(["grevlex", "lex"]))
def test_gb_matches_sympy(gens, order):
    ours = Ideal(XYZ, gens).groebner_basis(MonomialOrder(order)).elements
    oracle = sympy_groebner([str(g) for g in gens], ["x", "y", "z"], order)
    assert as_term_set(ours) == oracle


@settings(max_examples=60)
@given(homogeneous_ideal_gens(), polynomials(XYZ, max_deg=3))
def test_normal_form_is_standard_and_congruent(gens, p):
    A = Ideal(XYZ, gens)
    gb = A.groebner_basis()
    r = gb.normal_form(p)
    assert all(gb.is_standard(e) for e in r.term_dict)
    assert membership(p - r, A)


# -- ideal arithmetic -------------------------------------------------------------------

def test_combine_examples():
    m = I("x", "y")
    assert ideal_equal(m ** 2, I("x^2", "x*y", "y^2"))
    assert ideal_equal(ideal_combine("product", I("x"), I("y")), I("x*y"))
    assert ideal_equal(m ** 0, Ideal.unit(XYZ))
    assert ideal_equal(ideal_combine("sum", I("x"), I("y")), m)
    with pytest.raises(ValueError):
        ideal_combine("quotient", m, m)


def test_equal_examples():
    assert ideal_equal(I("x", "y"), I("x + y", "y"))
    assert not ideal_equal(I("x^2"), I("x"))
    assert ideal_equal(maximal_power(XYZ, 2), I("x", "y", "z") ** 2)
    assert contains_ideal(I("x"), I("x^2", "x*y"))


def test_min_generator_count_examples():
    assert min_generator_count(I("x^2", "x*y", "y^2", "x^2 + x*y")) == 3
    assert min_generator_count(I("x")) == 1
    assert min_generator_count(I("x", "y", "z")) == 3
    with pytest.raises(NotHomogeneousError):
        min_generator_count(I("x^2 + y"))


# -- intersection ---------------------------------------------------------------------

def test_intersection_examples():
    assert ideal_equal(intersection(I("x"), I("y")), I("x*y"))
    A = I("x^2", "y*z")
    assert ideal_equal(intersection(A, A), A)
    assert ideal_equal(intersection(I("x^2", "y"), I("x")), I("x^2", "x*y"))


@settings(max_examples=200)
@given(homogeneous_ideal_gens(max_gens=2), homogeneous_ideal_gens(max_gens=2),
       forms(XYZ, 2), forms(XYZ, 3), st.data())
def test_intersection_membership(ga, gb, f2, f3, data):
    A, B = Ideal(XYZ, ga), Ideal(XYZ, gb)
    C = intersection(A, B)
    # a product of members lies in both
    p_in = ga[0] * gb[0]
    candidates = [p_in, f2, f3, f3 * ga[0], f2 * gb[0]]
    for p in candidates:
        assert membership(p, C) == (membership(p, A) and membership(p, B))
    for h in C.generators:
        assert membership(h, A) and membership(h, B)


# -- colon ------------------------------------------------------------------------------

def test_colon_examples():
    A = I("x^2", "y^2")
    assert ideal_equal(colon(A, I("x*y")), I("x", "y"))
    assert ideal_equal(colon(A, I("x*y"), method="elimination"), I("x", "y"))
    assert ideal_equal(colon(A, Ideal.unit(XYZ)), A)
    assert colon(I("x"), I("x")).is_unit()


def test_colon_variable_matches_elimination():
    A = I("x^3", "x*y*z", "y^2*z - x^2*z", "z^3")
    for i in range(3):
        fast = colon_variable(A, i)
        slow = colon_element(A, XYZ.gens()[i], method="elimination")
        assert ideal_equal(fast, slow)


def test_inhomogeneous_colon_uses_elimination():
    A = I("x^2 - y", "x*y")
    Q = colon(A, I("x"))
    for h in Q.generators:
        assert membership(h * P("x"), A)
    assert membership(P("x*y"), Q) or membership(P("y"), Q)


@settings(max_examples=200)
@given(homogeneous_ideal_gens(max_gens=3), homogeneous_ideal_gens(max_gens=2, max_deg=2),
       forms(XYZ, 1), forms(XYZ, 2))
def test_colon_adjunction(ga, gb, p1, p2):
    A, B = Ideal(XYZ, ga), Ideal(XYZ, gb)
    Q = colon(A, B)
    for h in Q.generators:
        assert all(membership(h * g, A) for g in gb)
    for p in [p1, p2, p2 * ga[0], p1 * gb[0]] + [h * p1 for h in Q.generators[:2]]:
        assert membership(p, Q) == all(membership(p * g, A) for g in gb)


def _colon_dim_oracle(A_gens, g, n, d):
    """dim (A : g)_d by linear algebra: p in R_d with p*g in A_(d+deg g)."""
    dg = g.degree()
    target = monomials(n, d + dg)
    tindex = {e: i for i, e in enumerate(target)}
    M = degree_piece(A_gens, n, d + dg)
    Pm = sympy.Matrix.hstack(*M.T.nullspace()).T if M.cols else sympy.eye(len(target))
    basis = monomials(n, d)
    mult = sympy.zeros(len(target), len(basis))
    gt = {m.exponents: c for c, m in g.terms}
    for j, e in enumerate(basis):
        for ge, c in gt.items():
            mult[tindex[tuple(a + b for a, b in zip(e, ge))], j] += sympy.Rational(
                int(c.numerator), int(c.denominator))
    if Pm.rows == 0:
        return len(basis)
    return len(basis) - (Pm * mult).rank()


@settings(max_examples=25)
@given(homogeneous_ideal_gens(max_gens=3, max_deg=2), forms(XYZ, 1, max_terms=2))
def test_colon_dimensions_match_linear_algebra(ga, g):
    from oracles import hf

    A = Ideal(XYZ, ga)
    Q = colon(A, Ideal(XYZ, [g]))
    for d in range(4):
        expected = _colon_dim_oracle(ga, g, 3, d)
        got = len(monomials(3, d)) - hf(list(Q.generators), 3, d)
        assert got == expected


# -- dimension, regular sequences --------------------------------------------------------

def test_dimension_examples():
    assert dimension(I("x^2", "y^2")) == 1
    assert height(I("x^2", "y^2")) == 2
    assert dimension(I("x", "y", "z")) == 0
    assert dimension(I("x*y", ctx=XY)) == 1
    assert dimension(Ideal(XYZ)) == 3
    assert dimension(Ideal.unit(XYZ)) is None


def test_regular_sequence_examples():
    assert is_regular_sequence([P("x^2"), P("y^2")])
    assert not is_regular_sequence([P("x^2"), P("x*y")])
    assert is_regular_sequence([P("x*y + z^2")])
    with pytest.raises(ValueError):
        is_regular_sequence([P("x^2 + y")])


def test_zero_ideal_behaviour():
    Z = Ideal(XYZ, [XYZ.zero()])
    assert Z.is_zero()
    assert membership(XYZ.zero(), Z)
    assert not membership(P("x"), Z)
    assert ideal_equal(intersection(Z, I("x")), Z)
    assert colon(I("x"), Z).is_unit()
