# invariants/linalg.py
"""
Álgebra lineal exacta sobre Q: eliminación gaussiana libre de fracciones con
filas dispersas y base del núcleo.

Cada fila se escala a enteros y se divide por su contenido (mcd) tras cada
paso; el pivote de cada columna es la primera fila restante con entrada no
nula, de modo que el resultado no depende de nada más que de la entrada.
"""

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

Scalar = Union[int, Fraction]
SparseRow = Mapping[int, Scalar]
IntRow = Dict[int, int]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _primitive(row: IntRow) -> IntRow:
    content = reduce(gcd, row.values(), 0)
    if content > 1:
        return {c: v // content for c, v in row.items()}
    return row


def _integer_row(row: SparseRow) -> IntRow:
    entries = {c: Fraction(v) for c, v in row.items() if v}
    if not entries:
        return {}
    scale = reduce(_lcm, (v.denominator for v in entries.values()), 1)
    return _primitive({c: int(v * scale) for c, v in entries.items()})


def _eliminate(row: IntRow, pivot_row: IntRow, col: int) -> IntRow:
    a = row.get(col)
    if not a:
        return row
    pv = pivot_row[col]
    g = gcd(pv, a)
    m_row, m_pivot = pv // g, a // g
    out: IntRow = {}
    for c in row.keys() | pivot_row.keys():
        v = m_row * row.get(c, 0) - m_pivot * pivot_row.get(c, 0)
        if v:
            out[c] = v
    return _primitive(out) if out else out


def row_reduce(rows: Sequence[SparseRow], ncols: int) -> Tuple[List[IntRow], List[int]]:
    """
    Forma escalonada reducida (salvo escala por fila) con enteros.

    Returns:
        (filas pivote, columnas pivote); la fila k tiene entrada no nula en
        pivots[k] y cero en las demás columnas pivote.
    """
    remaining = [r for r in (_integer_row(row) for row in rows) if r]
    reduced: List[IntRow] = []
    pivots: List[int] = []
    for col in range(ncols):
        idx = next((k for k, r in enumerate(remaining) if r.get(col)), None)
        if idx is None:
            continue
        pivot_row = remaining.pop(idx)
        remaining = [r for r in (_eliminate(r, pivot_row, col) for r in remaining) if r]
        reduced = [_eliminate(r, pivot_row, col) for r in reduced]
        reduced.append(pivot_row)
        pivots.append(col)
        if not remaining:
            break
    return reduced, pivots


def rank(matrix: Sequence[Sequence[Scalar]]) -> int:
    ncols = len(matrix[0]) if matrix else 0
    _, pivots = row_reduce(_dense_to_sparse(matrix), ncols)
    return len(pivots)


def normalize_vector(vector: Sequence[Scalar]) -> List[Fraction]:
    """Vector entero primitivo con primera entrada no nula positiva."""
    entries = [Fraction(v) for v in vector]
    nonzero = [v for v in entries if v]
    if not nonzero:
        return entries
    scale = reduce(_lcm, (v.denominator for v in nonzero), 1)
    ints = [int(v * scale) for v in entries]
    content = reduce(gcd, ints, 0)
    sign = 1 if next(v for v in ints if v) > 0 else -1
    return [Fraction(sign * v // content) for v in ints]


def sparse_kernel(rows: Sequence[SparseRow], ncols: int) -> List[List[Fraction]]:
    """
    Base del núcleo {v : M v = 0} para una matriz dada por filas dispersas.

    Un vector por columna libre, en orden de columna; cada vector normalizado
    con normalize_vector. Dimensión = ncols - rango.
    """
    reduced, pivots = row_reduce(rows, ncols)
    pivot_set = set(pivots)
    basis: List[List[Fraction]] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * ncols
        vector[free] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            entry = row.get(free)
            if entry:
                vector[pc] = Fraction(-entry, row[pc])
        basis.append(normalize_vector(vector))
    return basis


def _dense_to_sparse(matrix: Sequence[Sequence[Scalar]]) -> List[Dict[int, Scalar]]:
    return [{j: v for j, v in enumerate(row) if v} for row in matrix]


def kernel(matrix: Sequence[Sequence[Scalar]], ncols: Optional[int] = None) -> List[List[Fraction]]:
    """Base exacta del núcleo de una matriz densa (lista de filas)."""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    for row in matrix:
        if len(row) != ncols:
            raise ValueError(f"ragged matrix: row of length {len(row)}, expected {ncols}")
    return sparse_kernel(_dense_to_sparse(matrix), ncols)
