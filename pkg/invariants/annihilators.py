# invariants/annihilators.py
"""
Operadores D y Delta sobre polinomios en los coeficientes:

    D     = a0 d/da1 + 2 a1 d/da2 + ... + n a(n-1) d/dan
    Delta = n a1 d/da0 + (n-1) a2 d/da1 + ... + an d/da(n-1)

y los residuos de las identidades de conmutación

    (D Delta - Delta D) P = (n g - 2p) P
    (D^k Delta - Delta D^k) P = k (n g - 2p + k - 1) D^(k-1) P
    (D Delta^k - Delta^k D) P = k (n g - 2p - k + 1) Delta^(k-1) P

Los operadores aceptan cualquier polinomio; sólo los residuos exigen grado y
peso definidos. El escalar n g - 2p usa siempre la graduación del operando P.
"""

from enum import Enum
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .errors import GradingError
from .polynomial import CoeffPolynomial, Exponents, add, analyze, negate, scalar_multiply


class OperatorKind(str, Enum):
    D = "d"
    DELTA = "delta"


def apply_D(p: CoeffPolynomial) -> CoeffPolynomial:
    """Suma sobre i >= 1 de i * a(i-1) * dP/dai."""
    n = p.n
    terms: Dict[Exponents, Fraction] = {}
    for exponents, coeff in p.iter_terms():
        for i in range(1, n + 1):
            v = exponents[i]
            if not v:
                continue
            moved = list(exponents)
            moved[i] -= 1
            moved[i - 1] += 1
            key = tuple(moved)
            terms[key] = terms.get(key, 0) + coeff * i * v
    return CoeffPolynomial._trusted(n, {k: c for k, c in terms.items() if c})


def apply_Delta(p: CoeffPolynomial) -> CoeffPolynomial:
    """Suma sobre i < n de (n - i) * a(i+1) * dP/dai."""
    n = p.n
    terms: Dict[Exponents, Fraction] = {}
    for exponents, coeff in p.iter_terms():
        for i in range(n):
            v = exponents[i]
            if not v:
                continue
            moved = list(exponents)
            moved[i] -= 1
            moved[i + 1] += 1
            key = tuple(moved)
            terms[key] = terms.get(key, 0) + coeff * (n - i) * v
    return CoeffPolynomial._trusted(n, {k: c for k, c in terms.items() if c})


def apply(kind: OperatorKind, p: CoeffPolynomial) -> CoeffPolynomial:
    kind = OperatorKind(kind)
    return apply_D(p) if kind is OperatorKind.D else apply_Delta(p)


def apply_power(kind: OperatorKind, k: int, p: CoeffPolynomial) -> CoeffPolynomial:
    """k aplicaciones sucesivas; k = 0 es la identidad."""
    if k < 0:
        raise ValueError(f"power must be non-negative, got {k}")
    kind = OperatorKind(kind)
    result = p
    for _ in range(k):
        if result.is_zero:
            break
        result = apply(kind, result)
    return result


def _grading(p: CoeffPolynomial) -> Tuple[int, int]:
    info = analyze(p)
    if not info.homogeneous:
        raise GradingError("polynomial is not homogeneous in the coefficients")
    if not info.isobaric:
        raise GradingError("polynomial is not isobaric (terms of different weight)")
    return info.degree, info.weight


def commutator_residual(p: CoeffPolynomial) -> CoeffPolynomial:
    """(D Delta - Delta D) P - (n g - 2p) P; es cero para todo P homogéneo isobárico."""
    if p.is_zero:
        return p
    g, w = _grading(p)
    lhs = add(apply_D(apply_Delta(p)), negate(apply_Delta(apply_D(p))))
    return add(lhs, scalar_multiply(-(p.n * g - 2 * w), p))


def power_commutator_residual(kind: OperatorKind, k: int, p: CoeffPolynomial) -> CoeffPolynomial:
    """
    Residuo de la identidad de conmutación para potencias.

    kind = D:     (D^k Delta - Delta D^k) P - k (n g - 2p + k - 1) D^(k-1) P
    kind = Delta: (D Delta^k - Delta^k D) P - k (n g - 2p - k + 1) Delta^(k-1) P
    """
    kind = OperatorKind(kind)
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    if p.is_zero:
        return p
    g, w = _grading(p)
    defect = p.n * g - 2 * w

    if kind is OperatorKind.D:
        lhs = add(
            apply_power(OperatorKind.D, k, apply_Delta(p)),
            negate(apply_Delta(apply_power(OperatorKind.D, k, p))),
        )
        scalar = k * (defect + k - 1)
    else:
        lhs = add(
            apply_D(apply_power(OperatorKind.DELTA, k, p)),
            negate(apply_power(OperatorKind.DELTA, k, apply_D(p))),
        )
        scalar = k * (defect - k + 1)

    rhs = scalar_multiply(scalar, apply_power(kind, k - 1, p))
    return add(lhs, negate(rhs))


def nilpotence_index(kind: OperatorKind, p: CoeffPolynomial) -> int:
    """
    Menor k >= 0 con op^k P = 0 (0 sólo para P = 0).

    Termina siempre: cada aplicación desplaza el peso en una unidad y el peso
    de un monomio de grado g está entre 0 y n g.
    """
    kind = OperatorKind(kind)
    k = 0
    current = p
    while not current.is_zero:
        current = apply(kind, current)
        k += 1
    return k


def grading_shift(kind: OperatorKind, p: CoeffPolynomial) -> Optional[Tuple[int, int]]:
    """(cambio de grado, cambio de peso) de op(P); None si la imagen es cero."""
    g, w = _grading(p)
    image = apply(OperatorKind(kind), p)
    if image.is_zero:
        return None
    g2, w2 = _grading(image)
    return g2 - g, w2 - w
