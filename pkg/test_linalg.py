import random
from fractions import Fraction

import pytest
import sympy as sp

from invariants.linalg import kernel, normalize_vector, rank, sparse_kernel


def _sympy_matrix(matrix):
    return sp.Matrix([[sp.Rational(Fraction(v).numerator, Fraction(v).denominator) for v in row] for row in matrix])


def _apply(matrix, vector):
    return [sum(Fraction(a) * b for a, b in zip(row, vector)) for row in matrix]


def test_kernel_of_identity_is_empty():
    assert kernel([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == []


def test_kernel_of_zero_matrix_is_standard_basis():
    assert kernel([[0, 0, 0], [0, 0, 0]]) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert kernel([], ncols=2) == [[1, 0], [0, 1]]


def test_kernel_is_primitive_with_positive_first_entry():
    assert kernel([[2, 2]]) == [[1, -1]]
    assert kernel([[Fraction(1, 2), Fraction(1, 3), 1]]) == [[2, -3, 0], [2, 0, -1]]


def test_kernel_rejects_ragged_matrix():
    with pytest.raises(ValueError):
        kernel([[1, 2], [3]])


def test_normalize_vector():
    assert normalize_vector([0, Fraction(-1, 2), Fraction(3, 4)]) == [0, 2, -3]
    assert normalize_vector([0, 0]) == [0, 0]


def test_sparse_rows_match_dense_rows():
    rows = [{0: 1, 2: -1}, {1: 3}]
    assert sparse_kernel(rows, 3) == kernel([[1, 0, -1], [0, 3, 0]])


def test_kernel_against_sympy_on_random_matrices():
    rng = random.Random(41)
    for _ in range(40):
        nrows, ncols = rng.randint(1, 6), rng.randint(1, 7)
        matrix = [
            [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) if rng.random() < 0.6 else Fraction(0) for _ in range(ncols)]
            for _ in range(nrows)
        ]
        basis = kernel(matrix)
        expected_rank = _sympy_matrix(matrix).rank()
        assert rank(matrix) == expected_rank
        assert len(basis) == ncols - expected_rank
        for vector in basis:
            assert all(v.denominator == 1 for v in vector)
            assert next(v for v in vector if v) > 0
            assert _apply(matrix, vector) == [0] * nrows
        if basis:
            assert _sympy_matrix(basis).rank() == len(basis)
        assert kernel(matrix) == basis
