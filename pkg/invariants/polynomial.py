# invariants/polynomial.py
"""
Núcleo algebraico: escalares racionales exactos y polinomios graduados en los
coeficientes a0..an de una forma binaria de orden n.

Un término Z * a0^v0 * a1^v1 * ... * an^vn tiene grado g = v0 + ... + vn y
peso p = v1 + 2*v2 + ... + n*vn. El orden de monomios es graded-lex con
a0 > a1 > ... > an.
"""

from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .errors import OrderMismatchError
from .utils import to_fraction

Rational = Fraction
Exponents = Tuple[int, ...]
Scalar = Union[int, Fraction]


def exponent_degree(exponents: Sequence[int]) -> int:
    return sum(exponents)


def exponent_weight(exponents: Sequence[int]) -> int:
    return sum(i * v for i, v in enumerate(exponents))


def graded_lex_key(exponents: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """Clave de orden: mayor clave = mayor monomio (grado primero, luego lex con a0 > a1)."""
    return (sum(exponents), tuple(exponents))


class CoeffMonomial(BaseModel):
    """Monomio a0^v0 ... an^vn sobre las variables de coeficientes."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    exponents: Tuple[int, ...]

    @field_validator("exponents")
    @classmethod
    def _non_negative(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(v < 0 for v in value):
            raise ValueError("exponents must be non-negative")
        return value

    @model_validator(mode="after")
    def _length_matches_order(self) -> "CoeffMonomial":
        if len(self.exponents) != self.n + 1:
            raise ValueError(
                f"expected {self.n + 1} exponents for order {self.n}, "
                f"got {len(self.exponents)}"
            )
        return self

    @property
    def degree(self) -> int:
        return exponent_degree(self.exponents)

    @property
    def weight(self) -> int:
        return exponent_weight(self.exponents)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return graded_lex_key(self.exponents)


class GradedAnalysis(BaseModel):
    """Resultado de analyze(): homogeneidad, isobaridad y defecto n*g - 2p."""

    model_config = ConfigDict(frozen=True)

    homogeneous: bool
    degree: Optional[int] = None
    isobaric: bool
    weight: Optional[int] = None
    defect: Optional[int] = None

    @model_validator(mode="after")
    def _presence_rules(self) -> "GradedAnalysis":
        if self.homogeneous != (self.degree is not None):
            raise ValueError("degree must be present iff homogeneous")
        if self.isobaric != (self.weight is not None):
            raise ValueError("weight must be present iff isobaric")
        both = self.homogeneous and self.isobaric
        if both != (self.defect is not None):
            raise ValueError("defect must be present iff homogeneous and isobaric")
        return self

    @property
    def graded(self) -> bool:
        return self.homogeneous and self.isobaric

    @property
    def balanced(self) -> bool:
        """n*g = 2p (condición necesaria de invariancia)."""
        return self.defect == 0


class CoeffPolynomial:
    """
    Polinomio inmutable en a0..an con coeficientes Fraction.

    No guarda coeficientes nulos ni monomios duplicados; todas las claves son
    tuplas de longitud n + 1.
    """

    __slots__ = ("_n", "_terms", "_hash")

    def __init__(self, n: int, terms: Optional[Mapping[Sequence[int], Scalar]] = None):
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"order must be a non-negative integer, got {n!r}")
        clean: Dict[Exponents, Fraction] = {}
        for exponents, coeff in (terms or {}).items():
            key = tuple(int(v) for v in exponents)
            if len(key) != n + 1:
                raise OrderMismatchError(
                    f"monomial {key} has {len(key)} exponents, order {n} needs {n + 1}"
                )
            if any(v < 0 for v in key):
                raise ValueError(f"negative exponent in {key}")
            value = clean.get(key, Fraction(0)) + to_fraction(coeff)
            if value:
                clean[key] = value
            else:
                clean.pop(key, None)
        self._n = n
        self._terms = clean
        self._hash = None

    @classmethod
    def _trusted(cls, n: int, terms: Dict[Exponents, Fraction]) -> "CoeffPolynomial":
        # Sin validación: sólo para dicts ya limpios construidos en este paquete.
        poly = cls.__new__(cls)
        poly._n = n
        poly._terms = terms
        poly._hash = None
        return poly

    # --- Constructores ---

    @classmethod
    def zero(cls, n: int) -> "CoeffPolynomial":
        return cls(n)

    @classmethod
    def constant(cls, n: int, value: Scalar) -> "CoeffPolynomial":
        return cls(n, {(0,) * (n + 1): value})

    @classmethod
    def variable(cls, n: int, index: int) -> "CoeffPolynomial":
        if not 0 <= index <= n:
            raise ValueError(f"variable index {index} out of range for order {n}")
        exponents = [0] * (n + 1)
        exponents[index] = 1
        return cls(n, {tuple(exponents): 1})

    @classmethod
    def from_monomial(cls, monomial: CoeffMonomial, coeff: Scalar = 1) -> "CoeffPolynomial":
        return cls(monomial.n, {monomial.exponents: coeff})

    # --- Acceso ---

    @property
    def n(self) -> int:
        return self._n

    @property
    def terms(self) -> Dict[Exponents, Fraction]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponents), Fraction(0))

    def sorted_terms(self) -> List[Tuple[Exponents, Fraction]]:
        """Términos en orden graded-lex descendente."""
        return sorted(self._terms.items(), key=lambda item: graded_lex_key(item[0]), reverse=True)

    def monomials(self) -> List[CoeffMonomial]:
        return [CoeffMonomial(n=self._n, exponents=e) for e, _ in self.sorted_terms()]

    def leading_term(self) -> Optional[Tuple[Exponents, Fraction]]:
        if not self._terms:
            return None
        key = max(self._terms, key=graded_lex_key)
        return key, self._terms[key]

    def iter_terms(self) -> Iterator[Tuple[Exponents, Fraction]]:
        return iter(self._terms.items())

    # --- Igualdad / hash ---

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoeffPolynomial):
            return NotImplemented
        return self._n == other._n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"CoeffPolynomial(n={self._n}, {self})"

    def __str__(self) -> str:
        from .expression import format_polynomial

        return format_polynomial(self)

    # --- Aritmética ---

    def _check_order(self, other: "CoeffPolynomial") -> None:
        if self._n != other._n:
            raise OrderMismatchError(f"order mismatch: {self._n} vs {other._n}")

    def __add__(self, other: object) -> "CoeffPolynomial":
        if isinstance(other, (int, Fraction)):
            other = CoeffPolynomial.constant(self._n, other)
        if not isinstance(other, CoeffPolynomial):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "CoeffPolynomial":
        return negate(self)

    def __sub__(self, other: object) -> "CoeffPolynomial":
        if isinstance(other, (int, Fraction)):
            other = CoeffPolynomial.constant(self._n, other)
        if not isinstance(other, CoeffPolynomial):
            return NotImplemented
        return add(self, negate(other))

    def __rsub__(self, other: object) -> "CoeffPolynomial":
        if isinstance(other, (int, Fraction)):
            return add(CoeffPolynomial.constant(self._n, other), negate(self))
        return NotImplemented

    def __mul__(self, other: object) -> "CoeffPolynomial":
        if isinstance(other, (int, Fraction)):
            return scalar_multiply(other, self)
        if not isinstance(other, CoeffPolynomial):
            return NotImplemented
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CoeffPolynomial":
        return power(self, k)


# --- Operaciones ---

def add(p: CoeffPolynomial, q: CoeffPolynomial) -> CoeffPolynomial:
    p._check_order(q)
    terms = dict(p._terms)
    for key, coeff in q._terms.items():
        value = terms.get(key, 0) + coeff
        if value:
            terms[key] = value
        else:
            terms.pop(key, None)
    return CoeffPolynomial._trusted(p.n, terms)


def negate(p: CoeffPolynomial) -> CoeffPolynomial:
    return CoeffPolynomial._trusted(p.n, {k: -c for k, c in p._terms.items()})


def scalar_multiply(c: Scalar, p: CoeffPolynomial) -> CoeffPolynomial:
    c = to_fraction(c)
    if not c:
        return CoeffPolynomial.zero(p.n)
    return CoeffPolynomial._trusted(p.n, {k: c * v for k, v in p._terms.items()})


def multiply(p: CoeffPolynomial, q: CoeffPolynomial) -> CoeffPolynomial:
    p._check_order(q)
    terms: Dict[Exponents, Fraction] = {}
    for e1, c1 in p._terms.items():
        for e2, c2 in q._terms.items():
            key = tuple(a + b for a, b in zip(e1, e2))
            terms[key] = terms.get(key, 0) + c1 * c2
    return CoeffPolynomial._trusted(p.n, {k: v for k, v in terms.items() if v})


def power(p: CoeffPolynomial, k: int) -> CoeffPolynomial:
    if k < 0:
        raise ValueError("negative powers are not polynomials")
    result = CoeffPolynomial.constant(p.n, 1)
    base = p
    while k:
        if k & 1:
            result = multiply(result, base)
        k >>= 1
        if k:
            base = multiply(base, base)
    return result


def partial_derivative(p: CoeffPolynomial, index: int) -> CoeffPolynomial:
    """d/d(a_index) exacto."""
    if not 0 <= index <= p.n:
        raise ValueError(f"variable index {index} out of range for order {p.n}")
    terms: Dict[Exponents, Fraction] = {}
    for exponents, coeff in p._terms.items():
        v = exponents[index]
        if v:
            key = exponents[:index] + (v - 1,) + exponents[index + 1:]
            terms[key] = terms.get(key, 0) + coeff * v
    return CoeffPolynomial._trusted(p.n, {k: c for k, c in terms.items() if c})


def evaluate(p: CoeffPolynomial, values: Sequence[Scalar]) -> Fraction:
    """Sustitución exacta a_i -> values[i]."""
    if len(values) != p.n + 1:
        raise OrderMismatchError(
            f"expected {p.n + 1} values for order {p.n}, got {len(values)}"
        )
    vals = [to_fraction(v) for v in values]
    total = Fraction(0)
    for exponents, coeff in p._terms.items():
        term = coeff
        for v, e in zip(vals, exponents):
            if e:
                term *= v ** e
        total += term
    return total


def degree_of(p: CoeffPolynomial) -> Optional[int]:
    degrees = {exponent_degree(e) for e in p._terms}
    return degrees.pop() if len(degrees) == 1 else None


def weight_of(p: CoeffPolynomial) -> Optional[int]:
    weights = {exponent_weight(e) for e in p._terms}
    return weights.pop() if len(weights) == 1 else None


def analyze(p: CoeffPolynomial) -> GradedAnalysis:
    g = degree_of(p)
    w = weight_of(p)
    defect = p.n * g - 2 * w if g is not None and w is not None else None
    return GradedAnalysis(
        homogeneous=g is not None,
        degree=g,
        isobaric=w is not None,
        weight=w,
        defect=defect,
    )
