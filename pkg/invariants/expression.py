# invariants/expression.py
"""
Sintaxis de superficie para polinomios en a0..an.

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := atom ('^' uint)?
    atom     := rational | variable | '(' expr ')'
    variable := 'a' uint
    rational := ['-'] uint ['/' uint]

El signo menos unario sólo se admite delante de un literal racional: "-a0"
se escribe "-1*a0" o "0 - a0". No hay multiplicación implícita. Los espacios
entre tokens se ignoran. Los errores llevan la posición en bytes UTF-8.
"""

import re
from fractions import Fraction
from typing import List, NamedTuple, Optional

from config import settings
from .errors import ExponentOverflowError, ExpressionSyntaxError, VariableIndexError
from .polynomial import CoeffPolynomial, add, multiply, negate, power
from .utils import digits_to_int, format_rational

_TOKEN_RE = re.compile(r"(?P<num>[0-9]+)|(?P<var>a[0-9]+)|(?P<op>[-+*^/()])", re.ASCII)

def _exceeds(digits: str, bound: int) -> bool:
    """digits > bound sin convertir cadenas arbitrariamente largas."""
    significant = digits.lstrip("0") or "0"
    limit = str(bound)
    if len(significant) != len(limit):
        return len(significant) > len(limit)
    return int(significant) > bound


def _shorten(text: str, keep: int = 20) -> str:
    return text if len(text) <= keep else f"{text[:keep]}... ({len(text)} chars)"


class Token(NamedTuple):
    kind: str    # "num", "var", "op", "end"
    text: str
    offset: int  # bytes


def _byte_offset(src: str, index: int) -> int:
    return len(src[:index].encode("utf-8"))


def tokenize(src: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(src):
        if src[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(src, pos)
        if not match:
            raise ExpressionSyntaxError(f"unexpected character {src[pos]!r}", _byte_offset(src, pos))
        tokens.append(Token(match.lastgroup, match.group(), _byte_offset(src, pos)))
        pos = match.end()
    tokens.append(Token("end", "", _byte_offset(src, len(src))))
    return tokens


class _Parser:
    def __init__(self, src: str, n: int, max_exponent: int):
        self.tokens = tokenize(src)
        self.pos = 0
        self.n = n
        self.max_exponent = max_exponent

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def at_op(self, *ops: str) -> bool:
        return self.current.kind == "op" and self.current.text in ops

    def fail(self, message: str, token: Optional[Token] = None) -> None:
        token = token or self.current
        raise ExpressionSyntaxError(message, token.offset)

    def parse(self) -> CoeffPolynomial:
        result = self.expr()
        if self.current.kind != "end":
            self.fail(f"unexpected {self.current.text!r}")
        return result

    def expr(self) -> CoeffPolynomial:
        result = self.term()
        while self.at_op("+", "-"):
            op = self.advance().text
            rhs = self.term()
            result = add(result, rhs if op == "+" else negate(rhs))
        return result

    def term(self) -> CoeffPolynomial:
        result = self.factor()
        while self.at_op("*"):
            self.advance()
            result = multiply(result, self.factor())
        return result

    def factor(self) -> CoeffPolynomial:
        base = self.atom()
        if self.at_op("^"):
            self.advance()
            token = self.current
            if token.kind != "num":
                self.fail("expected a non-negative integer exponent after '^'")
            self.advance()
            if _exceeds(token.text, self.max_exponent):
                raise ExponentOverflowError(
                    f"exponent {_shorten(token.text)} exceeds the maximum {self.max_exponent}", token.offset
                )
            exponent = digits_to_int(token.text)
            return power(base, exponent)
        return base

    def atom(self) -> CoeffPolynomial:
        token = self.current
        if token.kind == "num" or (token.kind == "op" and token.text == "-"):
            return CoeffPolynomial.constant(self.n, self.rational())
        if token.kind == "var":
            self.advance()
            if _exceeds(token.text[1:], self.n):
                raise VariableIndexError(
                    f"variable {_shorten(token.text)} out of range for order {self.n} (a0..a{self.n})",
                    token.offset,
                )
            index = digits_to_int(token.text[1:])
            return CoeffPolynomial.variable(self.n, index)
        if self.at_op("("):
            self.advance()
            inner = self.expr()
            if not self.at_op(")"):
                self.fail("expected ')'")
            self.advance()
            return inner
        if token.kind == "end":
            self.fail("unexpected end of expression")
        self.fail(f"unexpected {token.text!r}")

    def rational(self) -> Fraction:
        sign = 1
        if self.at_op("-"):
            minus = self.advance()
            if self.current.kind != "num":
                self.fail("unary minus is only allowed on rational literals (write -1*a0)", minus)
            sign = -1
        numerator = digits_to_int(self.advance().text)
        denominator = 1
        if self.at_op("/"):
            self.advance()
            token = self.current
            if token.kind != "num":
                self.fail("expected an unsigned integer denominator after '/'")
            self.advance()
            denominator = digits_to_int(token.text)
            if denominator == 0:
                self.fail("zero denominator", token)
        return Fraction(sign * numerator, denominator)


def parse(src: str, n: int, max_exponent: Optional[int] = None) -> CoeffPolynomial:
    """Interpreta `src` como polinomio en a0..an."""
    if n < 0:
        raise ValueError(f"order must be non-negative, got {n}")
    if max_exponent is None:
        max_exponent = settings.MAX_EXPONENT
    return _Parser(src, n, max_exponent).parse()


def _monomial_text(exponents) -> str:
    return "*".join(
        f"a{i}" if v == 1 else f"a{i}^{v}" for i, v in enumerate(exponents) if v
    )


def format_polynomial(p: CoeffPolynomial) -> str:
    """
    Forma canónica: términos en orden graded-lex, coeficiente 1 omitido.

    Un primer coeficiente negativo se escribe como literal con signo
    ("-1*a0*a2 + a1^2") para que parse(format_polynomial(P)) == P.
    """
    if p.is_zero:
        return "0"
    parts: List[str] = []
    for idx, (exponents, coeff) in enumerate(p.sorted_terms()):
        mono = _monomial_text(exponents)
        if idx == 0:
            if not mono:
                parts.append(format_rational(coeff))
            elif coeff == 1:
                parts.append(mono)
            else:
                parts.append(f"{format_rational(coeff)}*{mono}")
            continue
        magnitude = abs(coeff)
        if not mono:
            body = format_rational(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{format_rational(magnitude)}*{mono}"
        parts.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(parts)
