#  MIT License
#
#  Copyright (c) 2019 Anthony Harrison
#
#  Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software and associated documentation files (the "Software"), to deal
#  in the Software without restriction, including without limitation the rights
#  to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
#  copies of the Software, and to permit persons to whom the Software is
#  furnished to do so, subject to the following conditions:
#
#  The above copyright notice and this permission notice shall be included in all
#  copies or substantial portions of the Software.
#
#  THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
#  IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
#  FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
#  AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
#  LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
#  OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
#  SOFTWARE.
"""Exact dense matrices and subspaces over the rationals.

Everything here is plain Gaussian elimination over :class:`Fraction`. Row
reduction is done on sparse rows (``{column: value}``) since the operators
of interest are very sparse, but the public types are dense and immutable.
"""

__all__ = ['Vector', 'Matrix', 'Subspace', 'DimensionMismatchError',
           'SingularMatrixError', 'mat_mul', 'mat_add', 'mat_scale',
           'mat_inverse', 'determinant', 'rank', 'kernel', 'kernel_of_rows',
           'eigenspace', 'subspace_closure', 'algebra_span_dim',
           'generates_matrix_algebra']

import logging
from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, List, Optional, \
    Sequence, Tuple, Union

import qaffine.core as core

LOGGER = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]
_Sparse = Dict[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class DimensionMismatchError(core.QAffineError):
    """Error raised when operands have incompatible shapes."""


class SingularMatrixError(core.QAffineError):
    """Error raised when inverting a matrix that has no inverse."""


def _to_sparse(vector: Iterable[Any]) -> _Sparse:
    return {i: Fraction(v) for i, v in enumerate(vector) if v != 0}


def _to_dense(vector: _Sparse, size: int) -> Vector:
    dense = [_ZERO] * size
    for i, value in vector.items():
        dense[i] = value
    return tuple(dense)


class Matrix:
    """An immutable rows x cols matrix of exact rationals.

    :param rows: the entries, row by row; every row must have the same
        length
    """

    @classmethod
    def zeros(cls, rows: int, cols: Optional[int] = None) -> 'Matrix':
        """The zero matrix; square when cols is omitted."""
        if cols is None:
            cols = rows
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, size: int) -> 'Matrix':
        """The size x size identity matrix."""
        return cls.diagonal([1] * size)

    @classmethod
    def diagonal(cls, values: Sequence[Any]) -> 'Matrix':
        """A square matrix with the given diagonal."""
        size = len(values)
        return cls([[values[i] if i == j else 0 for j in range(size)]
                    for i in range(size)])

    @classmethod
    def unit(cls, size: int, row: int, col: int) -> 'Matrix':
        """The matrix unit with a single 1 at (row, col), 0-based."""
        return cls([[1 if (i, j) == (row, col) else 0 for j in range(size)]
                    for i in range(size)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Any]],
                     rows: Optional[int] = None) -> 'Matrix':
        """Build a matrix whose j-th column is columns[j]."""
        if rows is None:
            if not columns:
                raise DimensionMismatchError('Cannot infer the row count of '
                                             'a matrix without columns')
            rows = len(columns[0])
        return cls([[column[i] for column in columns] for i in range(rows)])

    @classmethod
    def from_flat(cls, rows: int, cols: int,
                  values: Sequence[Any]) -> 'Matrix':
        """Rebuild a matrix from its row-major flattening."""
        if len(values) != rows * cols:
            raise DimensionMismatchError(
                f'Expected {rows * cols} values, got {len(values)}'
            )
        return cls([values[i * cols:(i + 1) * cols] for i in range(rows)])

    @classmethod
    def from_json(cls, data: Any) -> 'Matrix':
        """Parse a list of rows of scalar strings."""
        if not isinstance(data, list) or not data:
            raise DimensionMismatchError('A matrix must be a nonempty list '
                                         'of rows')
        for row in data:
            if not isinstance(row, list):
                raise DimensionMismatchError(f'Matrix rows must be lists, got '
                                             f'{row!r}')
        return cls([[core.parse_scalar(value) for value in row]
                    for row in data])

    @property
    def rows(self) -> int:
        """Number of rows."""
        return len(self._entries)

    @property
    def cols(self) -> int:
        """Number of columns."""
        return self._cols

    @property
    def shape(self) -> Tuple[int, int]:
        """(rows, cols)."""
        return self.rows, self._cols

    @property
    def is_square(self) -> bool:
        """True if rows == cols."""
        return self.rows == self._cols

    @property
    def entries(self) -> Tuple[Vector, ...]:
        """The entries, row by row."""
        return self._entries

    @property
    def is_zero(self) -> bool:
        """True if every entry vanishes."""
        return not any(self._sparse_rows)

    def __init__(self, rows: Iterable[Iterable[Any]]) -> None:
        entries = tuple(tuple(Fraction(value) for value in row)
                        for row in rows)
        if not entries or not entries[0]:
            raise DimensionMismatchError('A matrix needs at least one row '
                                         'and one column')
        cols = len(entries[0])
        if any(len(row) != cols for row in entries):
            raise DimensionMismatchError('All rows must have the same length')

        self._entries = entries
        self._cols = cols
        self._sparse_rows = [[(j, v) for j, v in enumerate(row) if v != 0]
                             for row in entries]

    def __repr__(self) -> str:
        rows = ', '.join('[' + ', '.join(repr(v) for v in row) + ']'
                         for row in self._entries)
        return type(self).__name__ + f'([{rows}])'

    def __eq__(self, other: Any) -> Union[bool, 'NotImplemented']:
        if isinstance(other, Matrix):
            # pylint: disable=protected-access
            result = self._entries == other._entries
        else:
            result = NotImplemented
        return result

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._entries))

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        row, col = index
        return self._entries[row][col]

    def __iter__(self) -> Iterator[Vector]:
        return iter(self._entries)

    def __add__(self, other: Any) -> Union['Matrix', 'NotImplemented']:
        if isinstance(other, Matrix):
            self._check_same_shape(other)
            result = type(self)(
                [a + b for a, b in zip(row_a, row_b)]
                for row_a, row_b in zip(self._entries, other._entries)
            )
        else:
            result = NotImplemented
        return result

    def __neg__(self) -> 'Matrix':
        return self * -1

    def __sub__(self, other: Any) -> Union['Matrix', 'NotImplemented']:
        if isinstance(other, Matrix):
            result = self + (-other)
        else:
            result = NotImplemented
        return result

    def __mul__(self, other: Any) -> Union['Matrix', 'NotImplemented']:
        if isinstance(other, (int, Fraction)):
            result = type(self)([v * other for v in row]
                                for row in self._entries)
        else:
            result = NotImplemented
        return result

    __rmul__ = __mul__

    def __matmul__(self, other: Any) -> Union['Matrix', 'NotImplemented']:
        if isinstance(other, Matrix):
            if self._cols != other.rows:
                raise DimensionMismatchError(
                    f'Cannot multiply {self.shape} by {other.shape}'
                )
            # pylint: disable=protected-access
            product = []
            for sparse_row in self._sparse_rows:
                accumulator = [_ZERO] * other._cols
                for k, value in sparse_row:
                    for j, other_value in other._sparse_rows[k]:
                        accumulator[j] += value * other_value
                product.append(accumulator)
            result = type(self)(product)
        else:
            result = NotImplemented
        return result

    def apply(self, vector: Sequence[Any]) -> Vector:
        """Multiply a column vector on the left by this matrix."""
        if len(vector) != self._cols:
            raise DimensionMismatchError(
                f'Cannot apply a {self.shape} matrix to a vector of length '
                f'{len(vector)}'
            )
        return tuple(sum((value * vector[j] for j, value in sparse_row),
                         _ZERO)
                     for sparse_row in self._sparse_rows)

    def apply_sparse(self, vector: _Sparse) -> _Sparse:
        """Apply this matrix to a sparse vector, returning a sparse one."""
        result: _Sparse = {}
        for i, sparse_row in enumerate(self._sparse_rows):
            total = _ZERO
            for j, value in sparse_row:
                entry = vector.get(j)
                if entry is not None:
                    total += value * entry
            if total != 0:
                result[i] = total
        return result

    def transpose(self) -> 'Matrix':
        """The transposed matrix."""
        return type(self)(zip(*self._entries))

    def power(self, exponent: int) -> 'Matrix':
        """Nonnegative integer power of a square matrix."""
        self._check_square()
        if exponent < 0:
            raise core.InvalidParameterError(
                f'Use mat_inverse for negative powers, got {exponent}'
            )
        result = Matrix.identity(self.rows)
        for _ in range(exponent):
            result = self @ result
        return result

    def kron(self, other: 'Matrix') -> 'Matrix':
        """Kronecker product; basis (i, j) of the product sits at
        i * other.rows + j."""
        return type(self)(
            [a * b for a in row_a for b in row_b]
            for row_a in self._entries for row_b in other._entries
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> 'Matrix':
        """The entries at the given row and column indices."""
        return type(self)([self._entries[i][j] for j in cols] for i in rows)

    def flatten(self) -> Vector:
        """Row-major flattening of the entries."""
        return tuple(v for row in self._entries for v in row)

    def first_difference(self, other: 'Matrix') -> Optional[Tuple[int, int]]:
        """The first (row, col) where two equally shaped matrices differ."""
        self._check_same_shape(other)
        for i, (row_a, row_b) in enumerate(zip(self._entries,
                                               other._entries)):
            for j, (a, b) in enumerate(zip(row_a, row_b)):
                if a != b:
                    return i, j
        return None

    def scalar_value(self) -> Optional[Fraction]:
        """Return c if this matrix equals c times the identity."""
        if not self.is_square:
            return None
        value = self._entries[0][0]
        if self == Matrix.identity(self.rows) * value:
            result: Optional[Fraction] = value
        else:
            result = None
        return result

    def is_diagonal(self) -> bool:
        """True for square matrices with no off-diagonal entries."""
        return self.is_square and all(
            j == i for i, sparse_row in enumerate(self._sparse_rows)
            for j, _ in sparse_row
        )

    def to_json(self) -> List[List[str]]:
        """Rows of canonical scalar strings."""
        return [[core.scalar_str(v) for v in row] for row in self._entries]

    def _sparse_flat(self) -> _Sparse:
        return {i * self._cols + j: v
                for i, sparse_row in enumerate(self._sparse_rows)
                for j, v in sparse_row}

    def _check_same_shape(self, other: 'Matrix') -> None:
        if self.shape != other.shape:
            raise DimensionMismatchError(
                f'Shapes differ: {self.shape} and {other.shape}'
            )

    def _check_square(self) -> None:
        if not self.is_square:
            raise DimensionMismatchError(
                f'Expected a square matrix, got {self.shape}'
            )


class _Echelon:
    """Incrementally maintained reduced row echelon form of sparse rows.

    Every stored row has a leading 1 at its pivot and zeros in every other
    pivot column, so the stored rows are the canonical basis of their span.
    """

    def __init__(self, size: int) -> None:
        self.size = size
        self._rows: Dict[int, _Sparse] = {}

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> List[int]:
        """Pivot columns in increasing order."""
        return sorted(self._rows)

    def reduce(self, vector: _Sparse) -> _Sparse:
        """The remainder of a vector modulo the stored rows."""
        result = dict(vector)
        for pivot in [p for p in vector if p in self._rows]:
            factor = vector[pivot]
            for col, value in self._rows[pivot].items():
                updated = result.get(col, _ZERO) - factor * value
                if updated:
                    result[col] = updated
                else:
                    result.pop(col, None)
        return result

    def add(self, vector: _Sparse) -> bool:
        """Add a vector to the span; return True if the span grew."""
        remainder = self.reduce(vector)
        if not remainder:
            return False

        pivot = min(remainder)
        lead = remainder[pivot]
        row = {col: value / lead for col, value in remainder.items()}
        for other in self._rows.values():
            factor = other.get(pivot)
            if factor:
                for col, value in row.items():
                    updated = other.get(col, _ZERO) - factor * value
                    if updated:
                        other[col] = updated
                    else:
                        other.pop(col, None)
        self._rows[pivot] = row
        return True

    def row(self, pivot: int) -> _Sparse:
        """The stored row with the given pivot."""
        return self._rows[pivot]

    def dense_rows(self) -> List[Vector]:
        """Stored rows as dense vectors ordered by pivot."""
        return [_to_dense(self._rows[p], self.size) for p in self.pivots]


class Subspace:
    """A subspace of Q**ambient_dim stored by its canonical basis.

    The basis is the reduced row echelon form of any spanning set, so two
    subspaces are equal exactly when their stored bases are equal.

    :param ambient_dim: dimension of the surrounding space
    :param vectors: any spanning set, dependent vectors allowed
    """

    @classmethod
    def zero(cls, ambient_dim: int) -> 'Subspace':
        """The zero subspace."""
        return cls(ambient_dim)

    @classmethod
    def full(cls, ambient_dim: int) -> 'Subspace':
        """The whole space."""
        return cls(ambient_dim, *Matrix.identity(ambient_dim).entries)

    @classmethod
    def standard_vector(cls, ambient_dim: int, index: int) -> Vector:
        """The standard basis vector e_index."""
        return tuple(_ONE if i == index else _ZERO
                     for i in range(ambient_dim))

    @property
    def ambient_dim(self) -> int:
        """Dimension of the surrounding space."""
        return self._ambient_dim

    @property
    def basis(self) -> Tuple[Vector, ...]:
        """Canonical (reduced row echelon) basis."""
        return self._basis

    @property
    def dim(self) -> int:
        """Dimension of the subspace."""
        return len(self._basis)

    @property
    def pivots(self) -> Tuple[int, ...]:
        """Pivot coordinates of the canonical basis."""
        return self._pivots

    def __init__(self, ambient_dim: int, *vectors: Sequence[Any]) -> None:
        echelon = _Echelon(ambient_dim)
        for vector in vectors:
            if len(vector) != ambient_dim:
                raise DimensionMismatchError(
                    f'Vector of length {len(vector)} in a space of dimension '
                    f'{ambient_dim}'
                )
            echelon.add(_to_sparse(vector))
        self._ambient_dim = ambient_dim
        self._basis = tuple(echelon.dense_rows())
        self._pivots = tuple(echelon.pivots)

    def __repr__(self) -> str:
        args = ''.join(', ' + repr(tuple(str(v) for v in vector))
                       for vector in self._basis)
        return type(self).__name__ + f'({self._ambient_dim}{args})'

    def __eq__(self, other: Any) -> Union[bool, 'NotImplemented']:
        if isinstance(other, Subspace):
            # pylint: disable=protected-access
            result = (self._ambient_dim == other._ambient_dim
                      and self._basis == other._basis)
        else:
            result = NotImplemented
        return result

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._ambient_dim, self._basis))

    def __le__(self, other: 'Subspace') -> bool:
        return all(other.contains(v) for v in self._basis)

    def contains(self, vector: Sequence[Any]) -> bool:
        """True if the vector lies in the subspace."""
        try:
            self.coordinates(vector)
        except ValueError:
            result = False
        else:
            result = True
        return result

    def coordinates(self, vector: Sequence[Any]) -> Vector:
        """Coordinates of a member vector in the canonical basis.

        :raises ValueError: if the vector is not in the subspace
        """
        if len(vector) != self._ambient_dim:
            raise DimensionMismatchError(
                f'Vector of length {len(vector)} in a space of dimension '
                f'{self._ambient_dim}'
            )
        # the canonical basis has an identity block on the pivot columns
        coordinates = tuple(Fraction(vector[p]) for p in self._pivots)
        combination = [_ZERO] * self._ambient_dim
        for c, basis_vector in zip(coordinates, self._basis):
            if c:
                for i, value in enumerate(basis_vector):
                    combination[i] += c * value
        if tuple(combination) != tuple(Fraction(v) for v in vector):
            raise ValueError('Vector is not in the subspace')
        return coordinates

    def to_json(self) -> List[List[str]]:
        """Basis vectors as lists of scalar strings."""
        return [[core.scalar_str(v) for v in vector]
                for vector in self._basis]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Matrix product a b."""
    return a @ b


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    """Matrix sum a + b."""
    return a + b


def mat_scale(a: Matrix, factor: Any) -> Matrix:
    """Scalar multiple factor * a."""
    return a * Fraction(factor)


def _gauss_jordan(matrix: Matrix) -> Tuple[List[List[Fraction]], Fraction]:
    """Reduce [matrix | I]; return the right block and the determinant."""
    size = matrix.rows
    work = [list(row) + [_ONE if i == j else _ZERO for j in range(size)]
            for i, row in enumerate(matrix.entries)]
    det = _ONE
    for col in range(size):
        pivot_row = next((r for r in range(col, size) if work[r][col] != 0),
                         None)
        if pivot_row is None:
            return [], _ZERO
        if pivot_row != col:
            work[col], work[pivot_row] = work[pivot_row], work[col]
            det = -det
        lead = work[col][col]
        det *= lead
        work[col] = [value / lead for value in work[col]]
        for r in range(size):
            factor = work[r][col]
            if r != col and factor != 0:
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
    return [row[size:] for row in work], det


def mat_inverse(matrix: Matrix) -> Matrix:
    """Inverse of a square nonsingular matrix."""
    matrix._check_square()  # pylint: disable=protected-access
    inverse, det = _gauss_jordan(matrix)
    if det == 0:
        raise SingularMatrixError('Matrix is singular')
    return Matrix(inverse)


def determinant(matrix: Matrix) -> Fraction:
    """Determinant of a square matrix."""
    matrix._check_square()  # pylint: disable=protected-access
    return _gauss_jordan(matrix)[1]


def rank(matrix: Matrix) -> int:
    """Rank of a matrix."""
    echelon = _Echelon(matrix.cols)
    for row in matrix.entries:
        echelon.add(_to_sparse(row))
    return len(echelon)


def kernel_of_rows(rows: Iterable[Dict[int, Any]], size: int) -> Subspace:
    """Solution space of the homogeneous system given by sparse rows.

    :param rows: each row maps a column index to its coefficient
    :param size: number of unknowns
    """
    echelon = _Echelon(size)
    # short equations first keeps fill-in low
    for row in sorted(rows, key=len):
        echelon.add({col: Fraction(v) for col, v in row.items() if v != 0})

    pivots = set(echelon.pivots)
    solutions = []
    for free in range(size):
        if free in pivots:
            continue
        solution = [_ZERO] * size
        solution[free] = _ONE
        for pivot in pivots:
            value = echelon.row(pivot).get(free)
            if value:
                solution[pivot] = -value
        solutions.append(solution)
    return Subspace(size, *solutions)


def kernel(matrix: Matrix) -> Subspace:
    """Null space of a matrix."""
    return kernel_of_rows((dict(enumerate(row)) for row in matrix.entries),
                          matrix.cols)


def eigenspace(matrix: Matrix, theta: Any) -> Subspace:
    """The theta-eigenspace of a square matrix (possibly zero)."""
    matrix._check_square()  # pylint: disable=protected-access
    return kernel(matrix - Matrix.identity(matrix.rows) * Fraction(theta))


def subspace_closure(seed: Subspace,
                     operators: Sequence[Matrix]) -> Subspace:
    """Smallest subspace containing seed and invariant under operators."""
    size = seed.ambient_dim
    for operator in operators:
        if operator.shape != (size, size):
            raise DimensionMismatchError(
                f'Operator of shape {operator.shape} on a space of dimension '
                f'{size}'
            )

    echelon = _Echelon(size)
    pending = []
    for vector in seed.basis:
        sparse = _to_sparse(vector)
        if echelon.add(sparse):
            pending.append(sparse)

    while pending and len(echelon) < size:
        vector = pending.pop()
        for operator in operators:
            image = operator.apply_sparse(vector)
            if image and echelon.add(image):
                pending.append(image)

    LOGGER.debug('closure of a %d-dimensional seed has dimension %d',
                 seed.dim, len(echelon))
    if len(echelon) == size:
        result = Subspace.full(size)
    else:
        result = Subspace(size, *echelon.dense_rows())
    return result


def _check_operators(operators: Sequence[Matrix], dim: Optional[int]) -> int:
    if dim is None:
        if not operators:
            raise DimensionMismatchError('Give dim when there are no '
                                         'operators')
        dim = operators[0].rows
    for operator in operators:
        if operator.shape != (dim, dim):
            raise DimensionMismatchError(
                f'Operator of shape {operator.shape}, expected ({dim}, {dim})'
            )
    return dim


def _weight_blocks(operators: Sequence[Matrix], dim: int) -> List[List[int]]:
    """Index sets of the joint eigenspaces of the diagonal operators."""
    diagonal = [op for op in operators if op.is_diagonal()]
    blocks: Dict[Tuple[Fraction, ...], List[int]] = {}
    for i in range(dim):
        blocks.setdefault(tuple(op[i, i] for op in diagonal), []).append(i)
    return list(blocks.values())


def _block_spans(operators: Sequence[Matrix],
                 dim: int) -> Iterator[Tuple[int, int]]:
    """Yield (dim A P, dim * rank P) for every joint weight projector P.

    The projectors onto the joint eigenspaces of the diagonal generators
    are polynomials in them, so A is the direct sum of the pieces
    P' A P. Each piece is spanned by products of generator blocks along
    paths between weight spaces, and is closed on its own.
    """
    blocks = _weight_blocks(operators, dim)
    outgoing: List[List[Tuple[int, Matrix]]] = [[] for _ in blocks]
    for operator in operators:
        if operator.is_diagonal():
            continue
        for source, columns in enumerate(blocks):
            for target, rows in enumerate(blocks):
                piece = operator.submatrix(rows, columns)
                if not piece.is_zero:
                    outgoing[source].append((target, piece))

    # pylint: disable=protected-access
    for start, columns in enumerate(blocks):
        width = len(columns)
        echelons = [_Echelon(len(rows) * width) for rows in blocks]
        identity = Matrix.identity(width)
        echelons[start].add(identity._sparse_flat())
        pending = [(start, identity)]
        span, full = 1, dim * width
        while pending and span < full:
            source, element = pending.pop()
            for target, piece in outgoing[source]:
                product = piece @ element
                if echelons[target].add(product._sparse_flat()):
                    span += 1
                    pending.append((target, product))
        yield span, full


def algebra_span_dim(operators: Sequence[Matrix],
                     dim: Optional[int] = None) -> int:
    """Dimension of the unital algebra generated by square matrices.

    :param operators: generators of the algebra
    :param dim: size of the matrices, only needed when operators is empty
    """
    dim = _check_operators(operators, dim)
    result = sum(span for span, _ in _block_spans(operators, dim))
    LOGGER.debug('algebra generated by %d operators of size %d has '
                 'dimension %d', len(operators), dim, result)
    return result


def generates_matrix_algebra(operators: Sequence[Matrix],
                             dim: Optional[int] = None) -> bool:
    """True if the operators generate every dim x dim matrix.

    Stops at the first weight block whose span falls short.
    """
    dim = _check_operators(operators, dim)
    return all(span == full for span, full in _block_spans(operators, dim))
