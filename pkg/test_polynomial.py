from fractions import Fraction

import pytest
from hypothesis import given, settings as hsettings, strategies as st

from conftest import graded_polynomials, polynomials, small_fractions
from invariants.errors import OrderMismatchError
from invariants.expression import parse
from invariants.polynomial import (
    CoeffMonomial,
    CoeffPolynomial,
    GradedAnalysis,
    add,
    analyze,
    degree_of,
    evaluate,
    multiply,
    negate,
    partial_derivative,
    power,
    scalar_multiply,
    weight_of,
)

QUADRATIC = "a0*a2 - a1^2"
QUARTIC_I = "a0*a4 - 4*a1*a3 + 3*a2^2"


def test_degree_of_examples():
    assert degree_of(parse(QUADRATIC, 2)) == 2
    assert degree_of(parse("a0 + a1^2", 2)) is None
    assert degree_of(CoeffPolynomial.constant(3, 5)) == 0
    assert degree_of(CoeffPolynomial.zero(3)) is None


def test_weight_of_examples():
    assert weight_of(parse(QUADRATIC, 2)) == 2
    assert weight_of(parse("a1*a2^2", 2)) == 5
    assert weight_of(parse("a0 + a1", 1)) is None
    assert weight_of(CoeffPolynomial.zero(2)) is None


def test_analyze_balanced_invariants():
    info = analyze(parse(QUADRATIC, 2))
    assert info.homogeneous and info.isobaric
    assert (info.degree, info.weight, info.defect) == (2, 2, 0)
    assert info.graded and info.balanced

    info = analyze(parse(QUARTIC_I, 4))
    assert (info.degree, info.weight, info.defect) == (2, 4, 0)


def test_analyze_unbalanced_and_ungraded():
    info = analyze(parse("a0^2*a3", 3))
    assert (info.degree, info.weight, info.defect) == (3, 3, 3)
    assert info.graded and not info.balanced

    info = analyze(parse("a0 + a1^2", 2))
    assert not info.homogeneous and not info.isobaric
    assert info.degree is None and info.weight is None and info.defect is None

    info = analyze(parse("a0 + a1", 1))
    assert info.homogeneous and not info.isobaric
    assert info.defect is None


def test_graded_analysis_rejects_inconsistent_fields():
    with pytest.raises(ValueError):
        GradedAnalysis(homogeneous=True, degree=None, isobaric=False)
    with pytest.raises(ValueError):
        GradedAnalysis(homogeneous=False, degree=2, isobaric=False)


def test_monomial_validation_and_grading():
    mono = CoeffMonomial(n=2, exponents=(0, 1, 2))
    assert mono.degree == 3
    assert mono.weight == 5
    with pytest.raises(ValueError):
        CoeffMonomial(n=2, exponents=(1, 0))
    with pytest.raises(ValueError):
        CoeffMonomial(n=1, exponents=(1, -1))


def test_constructor_drops_zero_coefficients():
    p = CoeffPolynomial(2, {(1, 0, 1): 0, (0, 2, 0): Fraction(1, 2)})
    assert p.terms == {(0, 2, 0): Fraction(1, 2)}
    with pytest.raises(OrderMismatchError):
        CoeffPolynomial(2, {(1, 1): 1})


def test_arithmetic_examples():
    p = parse(QUADRATIC, 2)
    q = parse("a1^2 - a0*a2", 2)
    assert add(p, q).is_zero
    assert (p + q).terms == {}
    assert negate(p) == q
    assert multiply(parse("a0 + a1", 1), parse("a0 - a1", 1)) == parse("a0^2 - a1^2", 1)
    assert scalar_multiply(Fraction(1, 2), parse("2*a0*a2", 2)) == parse("a0*a2", 2)
    assert scalar_multiply(0, p).is_zero


def test_operators_accept_scalars():
    a0 = CoeffPolynomial.variable(1, 0)
    assert (a0 + 1) - 1 == a0
    assert 2 * a0 == a0 * 2 == parse("2*a0", 1)
    assert 1 - a0 == parse("1 - a0", 1)


def test_order_mismatch_is_rejected():
    x = CoeffPolynomial.variable(2, 0)
    y = CoeffPolynomial.variable(3, 0)
    with pytest.raises(OrderMismatchError):
        add(x, y)
    with pytest.raises(OrderMismatchError):
        multiply(x, y)


def test_power_and_partial_derivative():
    s = parse("a0 + a1", 1)
    assert power(s, 2) == parse("a0^2 + 2*a0*a1 + a1^2", 1)
    assert power(s, 0) == CoeffPolynomial.constant(1, 1)
    assert partial_derivative(parse("a0*a1^2", 1), 1) == parse("2*a0*a1", 1)
    assert partial_derivative(parse("a0*a1^2", 1), 0) == parse("a1^2", 1)
    with pytest.raises(ValueError):
        power(s, -1)


def test_leading_term_is_graded_lex_maximum():
    p = parse(QUARTIC_I, 4)
    assert p.leading_term() == ((1, 0, 0, 0, 1), Fraction(1))
    assert [e for e, _ in p.sorted_terms()] == [(1, 0, 0, 0, 1), (0, 1, 0, 1, 0), (0, 0, 2, 0, 0)]
    assert CoeffPolynomial.zero(4).leading_term() is None

    monomials = p.monomials()
    assert [m.weight for m in monomials] == [4, 4, 4]
    assert monomials == sorted(monomials, key=lambda m: m.sort_key(), reverse=True)
    assert CoeffPolynomial.from_monomial(monomials[2], 3) == parse("3*a2^2", 4)


def test_evaluate_examples():
    assert evaluate(parse(QUADRATIC, 2), [1, 2, 3]) == -1
    assert evaluate(parse("a0*a1 + 3*a2^2", 2), [0, 0, 0]) == 0
    assert evaluate(parse(QUARTIC_I, 4), [1, 0, 1, 0, 1]) == 4
    with pytest.raises(OrderMismatchError):
        evaluate(parse(QUADRATIC, 2), [1, 2])


@hsettings(deadline=None, max_examples=60)
@given(graded_polynomials(3), graded_polynomials(3))
def test_product_grading_adds_degree_and_weight(p, q):
    ip, iq = analyze(p), analyze(q)
    product = analyze(p * q)
    assert product.degree == ip.degree + iq.degree
    assert product.weight == ip.weight + iq.weight


@hsettings(deadline=None, max_examples=60)
@given(polynomials(3), polynomials(3), st.lists(small_fractions, min_size=4, max_size=4))
def test_evaluate_is_a_ring_homomorphism(p, q, values):
    assert evaluate(p * q, values) == evaluate(p, values) * evaluate(q, values)
    assert evaluate(p + q, values) == evaluate(p, values) + evaluate(q, values)


@hsettings(deadline=None, max_examples=60)
@given(polynomials(4))
def test_additive_inverse_leaves_no_terms(p):
    assert (p + (-p)).terms == {}
    assert (p - p).is_zero


def test_floats_are_rejected_as_scalars():
    a0 = CoeffPolynomial.variable(1, 0)
    with pytest.raises(ValueError):
        scalar_multiply(0.1, a0)
    with pytest.raises(ValueError):
        CoeffPolynomial(1, {(1, 0): 0.5})
    with pytest.raises(ValueError):
        evaluate(a0, [0.5, 1])
    assert scalar_multiply("1/10", a0) == parse("1/10*a0", 1)
