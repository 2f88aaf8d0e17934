# invariants/transforms.py
"""
Formas binarias y sustituciones lineales de GL2 sobre sus coeficientes.

Orientación fija en todo el módulo: se sustituye

    x = alpha x' + beta y',    y = gamma x' + delta y'

en f(x, y) y los coeficientes del resultado en x', y' son a'. Con esta
orientación un invariante de peso p cumple I(a') = d^p I(a), donde d es el
determinante alpha delta - beta gamma (para cuadráticas: a'c' - b'^2 = d^2 (ac - b^2)).
"""

import random
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from config import settings
from .errors import SingularTransformError
from .logger import logger
from .polynomial import CoeffPolynomial, analyze, evaluate
from .utils import binomial, format_rational, random_nonzero_rational, random_rational, to_fraction


class Convention(str, Enum):
    BINOMIAL = "binomial"  # f = sum C(n,i) a_i x^(n-i) y^i
    PLAIN = "plain"        # f = sum a_i x^(n-i) y^i


class BinaryForm(BaseModel):
    """Forma binaria de orden n con vector de n + 1 coeficientes racionales."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int = Field(ge=0)
    convention: Convention = Convention.BINOMIAL
    coeffs: Tuple[Fraction, ...]

    @field_validator("coeffs", mode="before")
    @classmethod
    def _exact_coeffs(cls, value):
        return tuple(to_fraction(v) for v in value)

    @model_validator(mode="after")
    def _length_matches_order(self) -> "BinaryForm":
        if len(self.coeffs) != self.n + 1:
            raise ValueError(
                f"form of order {self.n} needs {self.n + 1} coefficients, got {len(self.coeffs)}"
            )
        return self

    def plain_coeffs(self) -> List[Fraction]:
        """Coeficientes de x^(n-i) y^i tal cual aparecen en el desarrollo."""
        if self.convention is Convention.PLAIN:
            return list(self.coeffs)
        return [binomial(self.n, i) * c for i, c in enumerate(self.coeffs)]

    @classmethod
    def from_plain_coeffs(cls, n: int, plain: Sequence[Fraction], convention: Convention) -> "BinaryForm":
        convention = Convention(convention)
        if convention is Convention.PLAIN:
            return cls(n=n, convention=convention, coeffs=tuple(plain))
        return cls(
            n=n,
            convention=convention,
            coeffs=tuple(to_fraction(c) / binomial(n, i) for i, c in enumerate(plain)),
        )


class LinearTransform(BaseModel):
    """Sustitución x = alpha x' + beta y', y = gamma x' + delta y' con determinante no nulo."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction

    @field_validator("alpha", "beta", "gamma", "delta", mode="before")
    @classmethod
    def _exact_entries(cls, value):
        return to_fraction(value)

    @model_validator(mode="after")
    def _invertible(self) -> "LinearTransform":
        if self.determinant == 0:
            raise ValueError("transformation determinant alpha*delta - beta*gamma must be nonzero")
        return self

    @classmethod
    def from_entries(cls, alpha, beta, gamma, delta) -> "LinearTransform":
        """Como el constructor, pero una matriz singular lanza SingularTransformError."""
        a, b, c, d = (to_fraction(v) for v in (alpha, beta, gamma, delta))
        if a * d - b * c == 0:
            raise SingularTransformError(
                f"singular transformation ({', '.join(format_rational(v) for v in (a, b, c, d))})"
            )
        return cls(alpha=a, beta=b, gamma=c, delta=d)

    @classmethod
    def identity(cls) -> "LinearTransform":
        return cls(alpha=1, beta=0, gamma=0, delta=1)

    @property
    def determinant(self) -> Fraction:
        return self.alpha * self.delta - self.beta * self.gamma

    def compose(self, other: "LinearTransform") -> "LinearTransform":
        """
        Producto de matrices self * other.

        transform_coeffs(transform_coeffs(f, self), other) == transform_coeffs(f, self.compose(other))
        """
        return LinearTransform(
            alpha=self.alpha * other.alpha + self.beta * other.gamma,
            beta=self.alpha * other.beta + self.beta * other.delta,
            gamma=self.gamma * other.alpha + self.delta * other.gamma,
            delta=self.gamma * other.beta + self.delta * other.delta,
        )

    def inverse(self) -> "LinearTransform":
        d = self.determinant
        return LinearTransform(
            alpha=self.delta / d,
            beta=-self.beta / d,
            gamma=-self.gamma / d,
            delta=self.alpha / d,
        )

    def entries(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.alpha, self.beta, self.gamma, self.delta)


class ElementaryKind(str, Enum):
    SCALE = "scale"              # x = alpha x', y = delta y'
    UPPER_SHEAR = "upper_shear"  # x = x' + beta y', y = y'
    LOWER_SHEAR = "lower_shear"  # x = x', y = gamma x' + y'


class ElementaryTransform(BaseModel):
    """Uno de los tres tipos elementales: escala o cizalla superior/inferior."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: ElementaryKind
    alpha: Fraction = Fraction(1)
    delta: Fraction = Fraction(1)
    beta: Fraction = Fraction(0)
    gamma: Fraction = Fraction(0)

    @field_validator("alpha", "beta", "gamma", "delta", mode="before")
    @classmethod
    def _exact_entries(cls, value):
        return to_fraction(value)

    @model_validator(mode="after")
    def _parameters_match_kind(self) -> "ElementaryTransform":
        if self.kind is ElementaryKind.SCALE:
            if self.alpha == 0 or self.delta == 0:
                raise ValueError("scale requires alpha != 0 and delta != 0")
            if self.beta or self.gamma:
                raise ValueError("scale takes no shear parameters")
        elif self.kind is ElementaryKind.UPPER_SHEAR:
            if self.alpha != 1 or self.delta != 1 or self.gamma:
                raise ValueError("upper_shear only takes beta")
        elif self.alpha != 1 or self.delta != 1 or self.beta:
            raise ValueError("lower_shear only takes gamma")
        return self

    @classmethod
    def scale(cls, alpha, delta) -> "ElementaryTransform":
        return cls(kind=ElementaryKind.SCALE, alpha=alpha, delta=delta)

    @classmethod
    def upper_shear(cls, beta) -> "ElementaryTransform":
        return cls(kind=ElementaryKind.UPPER_SHEAR, beta=beta)

    @classmethod
    def lower_shear(cls, gamma) -> "ElementaryTransform":
        return cls(kind=ElementaryKind.LOWER_SHEAR, gamma=gamma)

    def to_linear(self) -> LinearTransform:
        return LinearTransform(alpha=self.alpha, beta=self.beta, gamma=self.gamma, delta=self.delta)

    def __str__(self) -> str:
        if self.kind is ElementaryKind.SCALE:
            return f"scale({format_rational(self.alpha)}, {format_rational(self.delta)})"
        if self.kind is ElementaryKind.UPPER_SHEAR:
            return f"upper_shear({format_rational(self.beta)})"
        return f"lower_shear({format_rational(self.gamma)})"


# --- Sustitución de coeficientes ---

def _linear_power(p: Fraction, q: Fraction, m: int) -> List[Fraction]:
    """Coeficientes de (p x' + q y')^m ordenados por potencia de y'."""
    return [binomial(m, j) * p ** (m - j) * q ** j for j in range(m + 1)]


def _convolve(u: Sequence[Fraction], v: Sequence[Fraction]) -> List[Fraction]:
    out = [Fraction(0)] * (len(u) + len(v) - 1)
    for i, x in enumerate(u):
        if not x:
            continue
        for j, y in enumerate(v):
            out[i + j] += x * y
    return out


def transform_coeffs(form: BinaryForm, transform: LinearTransform) -> BinaryForm:
    """Sustituye x = alpha x' + beta y', y = gamma x' + delta y' y lee los coeficientes nuevos."""
    n = form.n
    new_plain = [Fraction(0)] * (n + 1)
    for i, c in enumerate(form.plain_coeffs()):
        if not c:
            continue
        expanded = _convolve(
            _linear_power(transform.alpha, transform.beta, n - i),
            _linear_power(transform.gamma, transform.delta, i),
        )
        for j, value in enumerate(expanded):
            new_plain[j] += c * value
    return BinaryForm.from_plain_coeffs(n, new_plain, form.convention)


def convert_convention(form: BinaryForm, target: Convention) -> BinaryForm:
    target = Convention(target)
    if form.convention is target:
        return form
    return BinaryForm.from_plain_coeffs(form.n, form.plain_coeffs(), target)


def evaluate_form(form: BinaryForm, x, y) -> Fraction:
    x, y = to_fraction(x), to_fraction(y)
    n = form.n
    return sum(
        (c * x ** (n - i) * y ** i for i, c in enumerate(form.plain_coeffs())),
        Fraction(0),
    )


def quadratic_discriminant(form: BinaryForm) -> Fraction:
    """ac - b^2 de Q = a x^2 + 2b xy + c y^2."""
    if form.n != 2:
        raise ValueError(f"discriminant ac - b^2 is defined for quadratics, got order {form.n}")
    a, b, c = convert_convention(form, Convention.BINOMIAL).coeffs
    return a * c - b * b


# --- Descomposición en transformaciones elementales ---

def compose_elementaries(factors: Sequence[ElementaryTransform]) -> LinearTransform:
    """Producto de matrices en el orden de la lista (identidad si está vacía)."""
    result = LinearTransform.identity()
    for factor in factors:
        result = result.compose(factor.to_linear())
    return result


def decompose(transform: LinearTransform) -> List[ElementaryTransform]:
    """
    Factoriza T en a lo sumo cuatro transformaciones elementales.

    El producto de matrices en el orden devuelto es T; equivalentemente,
    aplicar transform_coeffs factor a factor en ese orden equivale a aplicar T.
    Con alpha != 0: lower_shear(gamma/alpha), scale(alpha, d/alpha),
    upper_shear(beta/alpha), omitiendo factores identidad. Con alpha = 0 se
    factoriza T * lower_shear(-1) (su alpha es -beta != 0) y se añade
    lower_shear(1) como factor que actúa primero sobre x', y'.
    """
    alpha, beta, gamma, delta = transform.entries()
    d = alpha * delta - beta * gamma
    if d == 0:
        raise SingularTransformError("cannot decompose a singular transformation")

    if alpha == 0:
        # d = -beta*gamma != 0, luego beta != 0
        shifted = LinearTransform(alpha=alpha - beta, beta=beta, gamma=gamma - delta, delta=delta)
        return decompose(shifted) + [ElementaryTransform.lower_shear(1)]

    factors: List[ElementaryTransform] = []
    if gamma:
        factors.append(ElementaryTransform.lower_shear(gamma / alpha))
    if alpha != 1 or d / alpha != 1:
        factors.append(ElementaryTransform.scale(alpha, d / alpha))
    if beta:
        factors.append(ElementaryTransform.upper_shear(beta / alpha))
    return factors


# --- Generadores aleatorios deterministas por semilla ---

class InvarianceMode(str, Enum):
    GENERAL = "general"
    DIAGONAL = "diagonal"
    UPPER_SHEAR = "upper_shear"
    LOWER_SHEAR = "lower_shear"


def random_transform(rng: random.Random, mode: InvarianceMode = InvarianceMode.GENERAL) -> LinearTransform:
    mode = InvarianceMode(mode)
    if mode is InvarianceMode.DIAGONAL:
        return LinearTransform(
            alpha=random_nonzero_rational(rng), beta=0, gamma=0, delta=random_nonzero_rational(rng)
        )
    if mode is InvarianceMode.UPPER_SHEAR:
        return LinearTransform(alpha=1, beta=random_rational(rng), gamma=0, delta=1)
    if mode is InvarianceMode.LOWER_SHEAR:
        return LinearTransform(alpha=1, beta=0, gamma=random_rational(rng), delta=1)

    for _ in range(settings.MAX_TRANSFORM_REJECTIONS):
        a, b, c, d = (random_rational(rng) for _ in range(4))
        if a * d - b * c != 0:
            return LinearTransform(alpha=a, beta=b, gamma=c, delta=d)
    raise RuntimeError(
        f"no invertible transformation after {settings.MAX_TRANSFORM_REJECTIONS} draws"
    )


def random_form(rng: random.Random, n: int, convention: Convention = Convention.BINOMIAL) -> BinaryForm:
    return BinaryForm(n=n, convention=convention, coeffs=[random_rational(rng) for _ in range(n + 1)])


# --- Verificación numérica de invariancia ---

class Counterexample(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    trial: int
    coeffs: Tuple[Fraction, ...]
    transform: LinearTransform
    expected: Fraction
    actual: Fraction


class InvarianceVerdict(BaseModel):
    """Veredicto de check_invariance; un fallo es un valor, no una excepción."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    passed: bool
    mode: InvarianceMode
    n: int
    seed: int
    trials_requested: int
    trials_run: int
    degree: Optional[int] = None
    weight: Optional[int] = None
    factor: str
    reason: Optional[str] = None
    counterexample: Optional[Counterexample] = None


def _expected_factor(mode: InvarianceMode, transform: LinearTransform, n: int, g: int, p: int) -> Fraction:
    if mode is InvarianceMode.DIAGONAL:
        return transform.alpha ** (n * g - p) * transform.delta ** p
    return transform.determinant ** p


def check_invariance(
    invariant: CoeffPolynomial,
    n: int,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    mode: InvarianceMode = InvarianceMode.GENERAL,
) -> InvarianceVerdict:
    """
    Comprueba I(a') = d^p I(a) en `trials` pares aleatorios (coeficientes, transformación).

    Modo diagonal: sólo escalas x = alpha x', y = delta y' y factor
    alpha^(ng-p) delta^p, sin exigir ng = 2p. Los demás modos exigen ng = 2p.
    Los coeficientes se interpretan en la convención binomial.
    """
    mode = InvarianceMode(mode)
    trials = settings.DEFAULT_TRIALS if trials is None else trials
    if trials < 1:
        raise ValueError(f"trials must be a positive integer, got {trials}")
    seed = settings.DEFAULT_SEED if seed is None else seed
    factor = "alpha^(ng-p) * delta^p" if mode is InvarianceMode.DIAGONAL else "d^p"

    def verdict(passed: bool, run: int = 0, **extra) -> InvarianceVerdict:
        return InvarianceVerdict(
            passed=passed, mode=mode, n=n, seed=seed, trials_requested=trials,
            trials_run=run, factor=factor, **extra,
        )

    if invariant.n != n:
        return verdict(False, reason=f"polynomial has order {invariant.n}, expected {n}")

    info = analyze(invariant)
    if not info.homogeneous:
        return verdict(False, reason="not homogeneous: every invariant is homogeneous in the coefficients")
    if not info.isobaric:
        return verdict(False, degree=info.degree, reason="not isobaric: all terms of an invariant share the weight p")
    g, p = info.degree, info.weight
    if mode is not InvarianceMode.DIAGONAL and info.defect != 0:
        return verdict(
            False, degree=g, weight=p,
            reason=f"degree/weight balance fails: n*g = {n * g} but 2p = {2 * p} (g must equal 2p/n)",
        )

    logger.info(f"check_invariance: n={n} g={g} p={p} mode={mode.value} trials={trials} seed={seed}")
    rng = random.Random(seed)
    for trial in range(1, trials + 1):
        form = random_form(rng, n, Convention.BINOMIAL)
        transform = random_transform(rng, mode)
        image = transform_coeffs(form, transform)
        actual = evaluate(invariant, image.coeffs)
        expected = _expected_factor(mode, transform, n, g, p) * evaluate(invariant, form.coeffs)
        logger.debug(f"trial {trial}: I(a')={actual} expected={expected}")
        if actual != expected:
            logger.warning(f"check_invariance failed at trial {trial} (mode={mode.value})")
            return verdict(
                False, run=trial, degree=g, weight=p,
                reason=f"I(a') != {factor} * I(a)",
                counterexample=Counterexample(
                    trial=trial, coeffs=form.coeffs, transform=transform,
                    expected=expected, actual=actual,
                ),
            )
    return verdict(True, run=trials, degree=g, weight=p)
