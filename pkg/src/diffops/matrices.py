"""
Maxwell Quasi-Trefftz Toolkit - Exact Matrices
===============================================

Operator matrices in canonical coordinates and exact rational linear
algebra on top of sympy's DomainMatrix over QQ.

Features:
- Reduced row echelon form, rank and nullspace bases
- Solver that factors [A | I] once and reuses the row transform
- Span membership and matrix composition
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from errors import InconsistentSystemError, InputFormatError
from polyalg.rational import ONE, ZERO, format_rational, parse_rational

logger = logging.getLogger(__name__)

Rows = Sequence[Sequence[Fraction]]
Vector = Tuple[Fraction, ...]


class OpKind(Enum):
    """Graded differential operators."""
    GRAD = "grad"
    DIV = "div"
    CURL = "curl"
    SCALAR_LAP = "lap"
    VEC_LAP = "veclap"

    @property
    def order(self) -> int:
        return 2 if self in (OpKind.SCALAR_LAP, OpKind.VEC_LAP) else 1

    @property
    def domain_is_vector(self) -> bool:
        return self in (OpKind.DIV, OpKind.CURL, OpKind.VEC_LAP)

    @property
    def codomain_is_vector(self) -> bool:
        return self in (OpKind.GRAD, OpKind.CURL, OpKind.VEC_LAP)


# =============================================================================
# CONVERSIONS
# =============================================================================

def _to_qq(value: Fraction):
    return QQ(value.numerator, value.denominator)


def _from_qq(value) -> Fraction:
    r = QQ.to_sympy(value)
    return Fraction(int(r.p), int(r.q))


def to_domain_matrix(rows: Rows, ncols: int) -> DomainMatrix:
    data = [[_to_qq(Fraction(v)) for v in row] for row in rows]
    return DomainMatrix(data, (len(data), ncols), QQ)


def from_domain_matrix(matrix: DomainMatrix) -> List[List[Fraction]]:
    return [[_from_qq(v) for v in row] for row in matrix.to_list()]


# =============================================================================
# ELIMINATION
# =============================================================================

def rref(rows: Rows, ncols: int) -> Tuple[List[List[Fraction]], Tuple[int, ...]]:
    """Reduced row echelon form and pivot columns (unique, hence deterministic)."""
    if not rows or ncols == 0:
        return [list(row) for row in rows], ()
    reduced, pivots = to_domain_matrix(rows, ncols).rref()
    return from_domain_matrix(reduced), tuple(pivots)


def matrix_rank(rows: Rows, ncols: int) -> int:
    if not rows or ncols == 0:
        return 0
    return int(to_domain_matrix(rows, ncols).rank())


def nullspace_of(rows: Rows, ncols: int) -> List[Vector]:
    """One basis vector per free column, free entry 1, read off the RREF."""
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [ZERO] * ncols
        vec[free] = ONE
        for row_index, pivot in enumerate(pivots):
            vec[pivot] = -reduced[row_index][free]
        basis.append(tuple(vec))
    return basis


def column_matrix(vectors: Sequence[Sequence[Fraction]], nrows: Optional[int] = None) -> List[List[Fraction]]:
    """Rows of the matrix whose columns are `vectors`."""
    if not vectors:
        return [[] for _ in range(nrows or 0)]
    height = len(vectors[0])
    return [[vec[i] for vec in vectors] for i in range(height)]


def matmul(left: Rows, right: Rows, inner: int, ncols: int) -> List[List[Fraction]]:
    """Exact product left (m x inner) times right (inner x ncols)."""
    if not left:
        return []
    if inner == 0:
        return [[ZERO] * ncols for _ in left]
    product = to_domain_matrix(left, inner).matmul(to_domain_matrix(right, ncols))
    return from_domain_matrix(product)


def dot(row: Sequence[Fraction], vec: Sequence[Fraction]) -> Fraction:
    total = ZERO
    for a, b in zip(row, vec):
        if a and b:
            total += a * b
    return total


def apply_rows(rows: Rows, vec: Sequence[Fraction]) -> Vector:
    return tuple(dot(row, vec) for row in rows)


def rank_of_vectors(vectors: Sequence[Sequence[Fraction]]) -> int:
    if not vectors:
        return 0
    return matrix_rank([list(v) for v in vectors], len(vectors[0]))


class ExactSolver:
    """
    Exact solver for A x = b with A fixed.

    Row-reduces [A | I] once. With E the right block, E A is the RREF of A,
    so b is in the range iff the rows of E past the rank annihilate b, and
    x[pivot_i] = (E b)_i with free variables zero is a particular solution.
    """

    def __init__(self, rows: Rows, ncols: int):
        """
        Args:
            rows: Coefficient matrix as a list of rows
            ncols: Number of unknowns (needed when rows is empty)
        """
        self.nrows = len(rows)
        self.ncols = ncols
        augmented = [
            list(row) + [ONE if i == j else ZERO for j in range(self.nrows)]
            for i, row in enumerate(rows)
        ]
        reduced, pivots = rref(augmented, ncols + self.nrows)
        self.pivots = tuple(p for p in pivots if p < ncols)
        self.rank = len(self.pivots)
        transform = [row[ncols:] for row in reduced]
        self._top = transform[:self.rank]
        self._bottom = transform[self.rank:]

    @classmethod
    def from_columns(cls, vectors: Sequence[Sequence[Fraction]], nrows: int) -> "ExactSolver":
        return cls(column_matrix(vectors, nrows) if vectors else [[] for _ in range(nrows)], len(vectors))

    def is_consistent(self, rhs: Sequence[Fraction]) -> bool:
        return all(not dot(row, rhs) for row in self._bottom)

    def solve(self, rhs: Sequence[Fraction]) -> Vector:
        """Particular solution with free variables zero."""
        if len(rhs) != self.nrows:
            raise ValueError(f"right-hand side has length {len(rhs)}, expected {self.nrows}")
        if not self.is_consistent(rhs):
            raise InconsistentSystemError("right-hand side is not in the range of the system")
        solution = [ZERO] * self.ncols
        for row, pivot in zip(self._top, self.pivots):
            solution[pivot] = dot(row, rhs)
        return tuple(solution)


def span_contains(vectors: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> bool:
    """Exact membership of `target` in the span of `vectors`."""
    if not vectors:
        return not any(target)
    return ExactSolver.from_columns(vectors, len(target)).is_consistent(target)


# =============================================================================
# OPERATOR MATRIX
# =============================================================================

@dataclass(frozen=True)
class OperatorMatrix:
    """Canonical-coordinate matrix of a graded operator; column j = image of basis element j."""
    op_kind: OpKind
    domain_degree: int
    codomain_degree: int
    rows: int
    cols: int
    entries: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(Fraction(v) for v in row) for row in self.entries)
        if len(entries) != self.rows or any(len(row) != self.cols for row in entries):
            raise ValueError(f"entries do not match shape {self.rows}x{self.cols}")
        object.__setattr__(self, "entries", entries)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def apply(self, coords: Sequence[Fraction]) -> Vector:
        return apply_rows(self.entries, coords)

    def to_json(self) -> Dict:
        return {
            "op": self.op_kind.value,
            "domain_degree": self.domain_degree,
            "codomain_degree": self.codomain_degree,
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[format_rational(v) for v in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data: Dict) -> "OperatorMatrix":
        try:
            op_kind = OpKind(data["op"])
            entries = tuple(
                tuple(parse_rational(v, f"entries[{i}][{j}]") for j, v in enumerate(row))
                for i, row in enumerate(data["entries"])
            )
            return cls(op_kind, int(data["domain_degree"]), int(data["codomain_degree"]),
                       int(data["rows"]), int(data["cols"]), entries)
        except KeyError as e:
            raise InputFormatError("missing field", str(e.args[0])) from None


MatrixLike = Union[OperatorMatrix, Rows]


def _rows_and_cols(matrix: MatrixLike, ncols: Optional[int]) -> Tuple[Rows, int]:
    if isinstance(matrix, OperatorMatrix):
        return matrix.entries, matrix.cols
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    return matrix, ncols


def rank(matrix: MatrixLike, ncols: Optional[int] = None) -> int:
    """Exact rank."""
    rows, cols = _rows_and_cols(matrix, ncols)
    return matrix_rank(rows, cols)


def nullspace(matrix: MatrixLike, ncols: Optional[int] = None) -> List[Vector]:
    """Basis of ker(matrix); its size is cols - rank."""
    rows, cols = _rows_and_cols(matrix, ncols)
    return nullspace_of(rows, cols)


def compose(left: OperatorMatrix, right: OperatorMatrix) -> List[List[Fraction]]:
    """Rows of left . right (apply right first)."""
    if left.cols != right.rows:
        raise ValueError(f"cannot compose {left.shape} with {right.shape}")
    return matmul(left.entries, right.entries, left.cols, right.cols)
