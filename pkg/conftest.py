"""
Fixtures y estrategias compartidas por la suite de tests.
"""
import random
from typing import List, Optional

import pytest
from hypothesis import strategies as st

from invariants.discovery import enumerate_isobaric
from invariants.polynomial import CoeffPolynomial
from invariants.utils import random_nonzero_rational

SUITE_SEED = 2024


def random_graded_polynomial(
    rng: random.Random, n: int, g: int, p: Optional[int] = None, max_terms: int = 4
) -> CoeffPolynomial:
    """Polinomio homogéneo de grado g e isobárico de peso p (aleatorio si p es None), no nulo."""
    if p is None:
        p = rng.randint(0, n * g)
    monomials = enumerate_isobaric(n, g, p)
    chosen = rng.sample(monomials, k=min(len(monomials), rng.randint(1, max_terms)))
    return CoeffPolynomial(n, {m.exponents: random_nonzero_rational(rng) for m in chosen})


def build_graded_suite(seed: int = SUITE_SEED, per_pair: int = 9) -> List[CoeffPolynomial]:
    rng = random.Random(seed)
    return [
        random_graded_polynomial(rng, n, g)
        for n in range(1, 7)
        for g in range(1, 5)
        for _ in range(per_pair)
    ]


@pytest.fixture(scope="session")
def graded_suite() -> List[CoeffPolynomial]:
    """216 polinomios homogéneos isobáricos con n en 1..6 y g en 1..4."""
    return build_graded_suite()


small_fractions = st.fractions(min_value=-9, max_value=9, max_denominator=9)
nonzero_fractions = small_fractions.filter(lambda v: v != 0)


def polynomials(n: int, max_exponent: int = 3, max_terms: int = 5):
    exponents = st.tuples(*([st.integers(min_value=0, max_value=max_exponent)] * (n + 1)))
    return st.dictionaries(exponents, small_fractions, max_size=max_terms).map(
        lambda terms: CoeffPolynomial(n, terms)
    )


@st.composite
def graded_polynomials(draw, n: int, max_degree: int = 3):
    g = draw(st.integers(min_value=0, max_value=max_degree))
    p = draw(st.integers(min_value=0, max_value=n * g))
    monomials = enumerate_isobaric(n, g, p)
    chosen = draw(st.lists(st.sampled_from(monomials), min_size=1, max_size=4, unique=True))
    coeffs = draw(st.lists(nonzero_fractions, min_size=len(chosen), max_size=len(chosen)))
    return CoeffPolynomial(n, {m.exponents: c for m, c in zip(chosen, coeffs)})
