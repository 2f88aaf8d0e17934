# invariants/discovery.py
"""
Descubrimiento de invariantes de grado g de la forma binaria de orden n.

Un invariante es homogéneo de grado g, isobárico de peso p = n g / 2 y
cumple D I = 0. Se enumeran los monomios de grado g y peso p, se construye la
matriz de D hacia los monomios de peso p - 1 y se calcula su núcleo exacto.
El núcleo completo se devuelve tal cual: no se filtran productos de
invariantes de grado menor.
"""

from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from config import settings
from .annihilators import apply_D, apply_Delta
from .linalg import normalize_vector, sparse_kernel
from .logger import logger
from .polynomial import CoeffMonomial, CoeffPolynomial, GradedAnalysis, analyze


def _isobaric_vectors(n: int, g: int, p: int) -> List[Tuple[int, ...]]:
    out: List[Tuple[int, ...]] = []
    prefix: List[int] = []

    def rec(i: int, remaining: int, weight_left: int) -> None:
        if i == n:
            if remaining * n == weight_left:
                out.append(tuple(prefix) + (remaining,))
            return
        # v_i de mayor a menor: orden lexicográfico descendente
        for v in range(remaining, -1, -1):
            rest = remaining - v
            left = weight_left - i * v
            if left < rest * (i + 1) or left > rest * n:
                continue
            prefix.append(v)
            rec(i + 1, rest, left)
            prefix.pop()

    if g >= 0 and p >= 0:
        rec(0, g, p)
    return out


def enumerate_isobaric(n: int, g: int, p: int) -> List[CoeffMonomial]:
    """Todos los monomios con sum(v_i) = g y sum(i v_i) = p, en orden graded-lex descendente."""
    if n < 0:
        raise ValueError(f"order must be non-negative, got {n}")
    return [CoeffMonomial(n=n, exponents=e) for e in _isobaric_vectors(n, g, p)]


def isobaric_count(n: int, g: int, p: int) -> int:
    return len(_isobaric_vectors(n, g, p))


def derivation_matrix(n: int, g: int, p: int) -> Tuple[List[Dict[int, Fraction]], List[Tuple[int, ...]], List[Tuple[int, ...]]]:
    """
    Matriz dispersa de D: columnas = monomios de peso p, filas = monomios de peso p - 1.

    Returns:
        (filas dispersas, exponentes de fila, exponentes de columna)
    """
    columns = _isobaric_vectors(n, g, p)
    row_keys = _isobaric_vectors(n, g, p - 1) if p >= 1 else []
    row_index = {key: idx for idx, key in enumerate(row_keys)}
    rows: List[Dict[int, Fraction]] = [dict() for _ in row_keys]
    for j, exponents in enumerate(columns):
        image = apply_D(CoeffPolynomial(n, {exponents: 1}))
        for key, coeff in image.iter_terms():
            rows[row_index[key]][j] = coeff
    return rows, row_keys, columns


def normalize_invariant(p: CoeffPolynomial) -> CoeffPolynomial:
    """Coeficientes enteros primitivos y coeficiente principal (graded-lex) positivo."""
    if p.is_zero:
        return p
    ordered = p.sorted_terms()
    scaled = normalize_vector([c for _, c in ordered])
    return CoeffPolynomial(p.n, {e: c for (e, _), c in zip(ordered, scaled)})


class DiscoveryStatus(str, Enum):
    OK = "ok"
    INFEASIBLE_ODD_NG = "infeasible_odd_ng"


class DiscoveryRequest(BaseModel):
    """Orden n y grado g pedidos; la paridad de n g se comprueba en discover()."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    g: int = Field(ge=1)

    @model_validator(mode="after")
    def _desk_scale(self) -> "DiscoveryRequest":
        if self.n > settings.MAX_DISCOVERY_ORDER:
            raise ValueError(f"order {self.n} exceeds MAX_DISCOVERY_ORDER={settings.MAX_DISCOVERY_ORDER}")
        if self.g > settings.MAX_DISCOVERY_DEGREE:
            raise ValueError(f"degree {self.g} exceeds MAX_DISCOVERY_DEGREE={settings.MAX_DISCOVERY_DEGREE}")
        return self


class DiscoveryResult(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    status: DiscoveryStatus
    n: int
    degree: int
    weight: Optional[int] = None
    monomial_count: int = 0
    basis: Tuple[CoeffPolynomial, ...] = ()

    @property
    def dimension(self) -> int:
        return len(self.basis)


def discover(request: DiscoveryRequest) -> DiscoveryResult:
    """Base de todos los invariantes de grado g de la forma de orden n (núcleo de D)."""
    n, g = request.n, request.g
    if (n * g) % 2:
        logger.info(f"discover: n={n} g={g} infeasible, n*g={n * g} is odd")
        return DiscoveryResult(status=DiscoveryStatus.INFEASIBLE_ODD_NG, n=n, degree=g)

    p = n * g // 2
    rows, row_keys, columns = derivation_matrix(n, g, p)
    logger.info(
        f"discover: n={n} g={g} p={p} source monomials={len(columns)} "
        f"target monomials={len(row_keys)}"
    )
    vectors = sparse_kernel(rows, len(columns))
    basis = tuple(
        normalize_invariant(CoeffPolynomial(n, {e: c for e, c in zip(columns, vec) if c}))
        for vec in vectors
    )

    if settings.CHECK_DELTA_ON_DISCOVERY:
        for element in basis:
            if not apply_D(element).is_zero or not apply_Delta(element).is_zero:
                raise RuntimeError(f"kernel element {element} is not annihilated by D and Delta")

    logger.info(f"discover: n={n} g={g} dimension={len(basis)}")
    return DiscoveryResult(
        status=DiscoveryStatus.OK,
        n=n,
        degree=g,
        weight=p,
        monomial_count=len(columns),
        basis=basis,
    )


class InvariantClassification(BaseModel):
    """Condiciones necesarias y suficientes de invariancia evaluadas sobre un polinomio."""

    model_config = ConfigDict(frozen=True)

    n: int
    analysis: GradedAnalysis
    balanced: bool
    d_annihilated: bool
    delta_annihilated: bool
    is_invariant: bool
    reason: Optional[str] = None


def classify(p: CoeffPolynomial) -> InvariantClassification:
    """
    Homogéneo + isobárico + n g = 2p + D P = 0  <=>  invariante.

    delta_annihilated se calcula por separado como comprobación cruzada.
    """
    info = analyze(p)
    d_zero = apply_D(p).is_zero
    delta_zero = apply_Delta(p).is_zero

    reason = None
    if p.is_zero:
        reason = "zero polynomial"
    elif not info.homogeneous:
        reason = "not homogeneous"
    elif not info.isobaric:
        reason = "not isobaric"
    elif not info.balanced:
        reason = f"n*g - 2p = {info.defect} != 0"
    elif not d_zero:
        reason = "D P != 0"

    return InvariantClassification(
        n=p.n,
        analysis=info,
        balanced=info.balanced,
        d_annihilated=d_zero,
        delta_annihilated=delta_zero,
        is_invariant=reason is None,
        reason=reason,
    )
