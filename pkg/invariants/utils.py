import random
from fractions import Fraction
from math import comb
from typing import List, Optional, Union

from config import settings


def binomial(n: int, i: int) -> int:
    return comb(n, i)


# CPython limita int <-> str a unos 4300 dígitos; por encima se convierte por bloques
_DIGIT_CHUNK = 1000


def digits_to_int(digits: str) -> int:
    """Entero a partir de una cadena de dígitos ASCII de cualquier longitud."""
    value = 0
    for start in range(0, len(digits), _DIGIT_CHUNK):
        chunk = digits[start:start + _DIGIT_CHUNK]
        value = value * 10 ** len(chunk) + int(chunk)
    return value


def int_to_digits(value: int) -> str:
    if value < 0:
        return "-" + int_to_digits(-value)
    base = 10 ** _DIGIT_CHUNK
    if value < base:
        return str(value)
    chunks = []
    while value:
        value, rest = divmod(value, base)
        chunks.append(rest)
    head, *tail = reversed(chunks)
    return str(head) + "".join(str(c).zfill(_DIGIT_CHUNK) for c in tail)


def to_fraction(value: Union[int, str, Fraction]) -> Fraction:
    """Racional exacto; rechaza float y cualquier otro tipo inexacto."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise ValueError(f"expected an exact rational, got {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    """'3', '-1/2'. Mismo formato que acepta parse_rational."""
    value = to_fraction(value)
    if value.denominator == 1:
        return int_to_digits(value.numerator)
    return f"{int_to_digits(value.numerator)}/{int_to_digits(value.denominator)}"


def parse_rational(text: str) -> Fraction:
    text = (text or "").strip()
    if not text:
        raise ValueError("empty rational literal")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"invalid rational literal '{text}': {e}") from e


def parse_rational_list(text: str, expected: Optional[int] = None) -> List[Fraction]:
    """
    Convierte "1,2,-3/4" en una lista de Fraction.

    Args:
        text: Valores separados por comas
        expected: Longitud exigida (opcional)

    Returns:
        Lista de Fraction
    """
    values = [parse_rational(part) for part in (text or "").split(",")]
    if expected is not None and len(values) != expected:
        raise ValueError(f"expected {expected} comma-separated values, got {len(values)}")
    return values


def random_rational(
    rng: random.Random,
    numerator_bound: Optional[int] = None,
    denominator_bound: Optional[int] = None,
) -> Fraction:
    """Numerador uniforme en [-N, N], denominador uniforme en [1, M]."""
    if numerator_bound is None:
        numerator_bound = settings.RANDOM_NUMERATOR_BOUND
    if denominator_bound is None:
        denominator_bound = settings.RANDOM_DENOMINATOR_BOUND
    numerator = rng.randint(-numerator_bound, numerator_bound)
    denominator = rng.randint(1, denominator_bound)
    return Fraction(numerator, denominator)


def random_nonzero_rational(rng: random.Random, **bounds) -> Fraction:
    while True:
        value = random_rational(rng, **bounds)
        if value:
            return value
