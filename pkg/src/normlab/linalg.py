##
# Licensed under the MIT License.
##
"""Exact linear algebra over QQ on top of sympy's DomainMatrix.

Rows are plain Python sequences of ints or QQ elements; every helper returns
QQ elements so callers never see floats.
"""
from typing import List, Optional, Sequence, Tuple

from sympy import QQ, ilcm, igcd
from sympy.polys.matrices import DomainMatrix

Row = Sequence


def to_matrix(rows: Sequence[Row], ncols: int) -> DomainMatrix:
    data = [[QQ(entry) for entry in row] for row in rows]
    return DomainMatrix(data, (len(data), ncols), QQ)


def rank(rows: Sequence[Row], ncols: int) -> int:
    if not rows:
        return 0
    return to_matrix(rows, ncols).rank()


def row_reduce(rows: Sequence[Row], ncols: int) -> Tuple[List[list], Tuple[int, ...]]:
    """Reduced row echelon form with the zero rows dropped, plus the pivot columns."""
    if not rows:
        return [], ()
    reduced, pivots = to_matrix(rows, ncols).rref()
    return _rows_of(reduced)[: len(pivots)], tuple(pivots)


def nullspace(rows: Sequence[Row], ncols: int) -> List[list]:
    """Basis of {v : M v = 0} as a list of QQ rows."""
    if not rows:
        return [[QQ(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    basis = to_matrix(rows, ncols).nullspace()
    return [row for row in _rows_of(basis) if any(row)]


def solve_square(rows: Sequence[Row], rhs: Sequence) -> Optional[list]:
    """Unique solution of a square system, or None when the system is singular."""
    size = len(rows)
    matrix = to_matrix(rows, size)
    if matrix.rank() < size:
        return None
    column = DomainMatrix([[QQ(value)] for value in rhs], (size, 1), QQ)
    solution = matrix.lu_solve(column)
    return [row[0] for row in _rows_of(solution)]


def primitive_integer_vector(vector: Sequence) -> List[int]:
    """Scale a rational vector to coprime integers, keeping its direction."""
    denominators = [QQ(entry).denominator for entry in vector]
    scale = 1
    for denominator in denominators:
        scale = ilcm(scale, int(denominator))
    integers = [int((QQ(entry) * scale).numerator) for entry in vector]
    divisor = 0
    for value in integers:
        divisor = igcd(divisor, abs(value))
    if divisor > 1:
        integers = [value // divisor for value in integers]
    return integers


def is_integral(value) -> bool:
    return QQ(value).denominator == 1


def _rows_of(matrix: DomainMatrix) -> List[list]:
    return [list(row) for row in matrix.to_list()]
