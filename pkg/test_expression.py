import random
from fractions import Fraction

import pytest
from hypothesis import given, settings as hsettings

from conftest import polynomials
from invariants.errors import (
    ExponentOverflowError,
    ExpressionError,
    ExpressionSyntaxError,
    VariableIndexError,
)
from invariants.expression import format_polynomial, parse, tokenize
from invariants.polynomial import CoeffPolynomial
from invariants.utils import random_nonzero_rational


def test_parse_examples():
    a = [CoeffPolynomial.variable(2, i) for i in range(3)]
    assert parse("a0*a2 - a1^2", 2) == a[0] * a[2] - a[1] ** 2
    assert parse("a0 + a1*a2^2", 2) == a[0] + a[1] * a[2] ** 2
    assert parse("a0 - a1 - a2", 2) == a[0] - a[1] - a[2]
    assert parse("3/2*(a0 + a1)^2", 2) == Fraction(3, 2) * (a[0] + a[1]) ** 2
    assert parse("2^3", 2) == CoeffPolynomial.constant(2, 8)
    assert parse("-1*a0", 2) == parse("0 - a0", 2) == -a[0]
    assert parse("a0*a2-a1^2", 2) == parse("  a0 * a2 - a1 ^ 2 ", 2)


def test_unary_minus_only_on_literals():
    with pytest.raises(ExpressionSyntaxError) as exc:
        parse("-a0", 2)
    assert exc.value.offset == 0
    assert parse("-3/4", 1) == CoeffPolynomial.constant(1, Fraction(-3, 4))


def test_variable_out_of_range():
    with pytest.raises(VariableIndexError) as exc:
        parse("a5", 4)
    assert exc.value.offset == 0
    with pytest.raises(VariableIndexError) as exc:
        parse("a0 + a3", 2)
    assert exc.value.offset == 5


def test_syntax_errors_carry_offsets():
    cases = {
        "a0 +": 4,
        "a0 * * a1": 5,
        "2a0": 1,
        "a0/2": 2,
        "(a0 + a1": 8,
        "a0 $ a1": 3,
        "1/0": 2,
        "a0^a1": 3,
    }
    for src, offset in cases.items():
        with pytest.raises(ExpressionSyntaxError) as exc:
            parse(src, 2)
        assert exc.value.offset == offset, src


def test_offsets_are_utf8_bytes():
    src = "\u00a0a0 +"
    with pytest.raises(ExpressionSyntaxError) as exc:
        parse(src, 2)
    assert exc.value.offset == len(src.encode("utf-8")) == 6


def test_exponent_limit():
    with pytest.raises(ExponentOverflowError) as exc:
        parse("a0^300", 2)
    assert exc.value.offset == 3
    assert parse("a0^3", 2, max_exponent=3) == CoeffPolynomial.variable(2, 0) ** 3
    with pytest.raises(ExponentOverflowError):
        parse("a0^4", 2, max_exponent=3)


def test_expression_errors_are_value_errors():
    with pytest.raises(ValueError):
        parse("a0 +", 2)
    assert issubclass(ExpressionError, ValueError)


def test_tokenize_records_kinds():
    tokens = tokenize("a10 ^ 2")
    assert [(t.kind, t.text, t.offset) for t in tokens] == [
        ("var", "a10", 0),
        ("op", "^", 4),
        ("num", "2", 6),
        ("end", "", 7),
    ]


def test_format_examples():
    assert format_polynomial(CoeffPolynomial.zero(3)) == "0"
    assert format_polynomial(parse("a1^2 - a0*a2", 2)) == "-1*a0*a2 + a1^2"
    assert format_polynomial(parse("3*a2^2 + a0*a4 - 4*a1*a3", 4)) == "a0*a4 - 4*a1*a3 + 3*a2^2"
    assert format_polynomial(parse("1/2*a0 - 3/4", 1)) == "1/2*a0 - 3/4"
    assert format_polynomial(CoeffPolynomial.constant(2, Fraction(-1, 2))) == "-1/2"
    assert str(parse("a0*a2 - a1^2", 2)) == "a0*a2 - a1^2"


def test_round_trip_random_polynomials():
    rng = random.Random(43)
    for _ in range(100):
        n = rng.randint(0, 5)
        terms = {
            tuple(rng.randint(0, 3) for _ in range(n + 1)): random_nonzero_rational(rng)
            for _ in range(rng.randint(0, 5))
        }
        p = CoeffPolynomial(n, terms)
        text = format_polynomial(p)
        assert parse(text, n) == p, text
        assert format_polynomial(parse(text, n)) == text


@hsettings(deadline=None, max_examples=80)
@given(polynomials(3))
def test_format_then_parse_is_identity(p):
    assert parse(format_polynomial(p), 3) == p


def test_very_long_literals_keep_parse_error_types():
    digits = "9" * 5000
    with pytest.raises(ExponentOverflowError) as exc:
        parse("a0^" + digits, 2)
    assert exc.value.offset == 3
    with pytest.raises(VariableIndexError) as exc:
        parse("a1 + a" + digits, 2)
    assert exc.value.offset == 5
    assert parse("a0^" + "0" * 5000 + "2", 2) == CoeffPolynomial.variable(2, 0) ** 2
    assert parse("a" + "0" * 5000 + "1", 2) == CoeffPolynomial.variable(2, 1)


def test_very_long_rationals_are_exact():
    digits = "9" * 5000
    big = 10 ** 5000 - 1
    assert parse(digits + "*a0", 2) == big * CoeffPolynomial.variable(2, 0)
    assert parse("1/" + digits, 2) == CoeffPolynomial.constant(2, Fraction(1, big))
    p = parse("-" + digits + "/7*a1", 2)
    assert format_polynomial(p) == "-" + digits + "/7*a1"
    assert parse(format_polynomial(p), 2) == p


def test_only_ascii_digits_are_accepted():
    with pytest.raises(ExpressionSyntaxError) as exc:
        parse("a٣", 4)
    assert exc.value.offset == 0
    with pytest.raises(ExpressionSyntaxError):
        parse("٣*a0", 4)
