"""Generic matrices of indeterminates, their minors, Plucker and flag
minors.

All minor indices are 1-based and kept sorted ascending; that fixes the
sign conventions once and for all. Matrices of the same shape are
shared (memoized) so that minors from separate calls live in one
polynomial ring and can be compared or combined.
"""

from __future__ import annotations

from functools import lru_cache

from ..arith import SparsePolynomial, VariableTable, poly_det
from ..errors import StructureError


def _index_set(J, *, size=None, universe=None, what="index set"):
    J = tuple(int(x) for x in J)
    if len(set(J)) != len(J):
        raise ValueError(f"{what} has repeated entries: {J}")
    J = tuple(sorted(J))
    if size is not None and len(J) != size:
        raise ValueError(f"{what} must have {size} entries, got {len(J)}")
    if universe is not None and any(x < 1 or x > universe for x in J):
        raise ValueError(f"{what} {J} not inside 1..{universe}")
    return J


class GenericMatrix:
    """A rows x cols matrix whose entries are polynomials over a shared
    variable table; plain generic matrices have pairwise distinct
    variables as entries, bordered variants append constant columns."""

    def __init__(self, table, entries):
        self.table = table
        self.entries = tuple(tuple(row) for row in entries)
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        self._minors = {}

    @classmethod
    def generic(cls, rows, cols, prefix="z"):
        if rows < 1 or cols < 1:
            raise ValueError("matrix dimensions must be positive")
        sep = "" if rows <= 9 and cols <= 9 else "_"
        names = [
            f"{prefix}{i + 1}{sep}{j + 1}" for i in range(rows) for j in range(cols)
        ]
        table = VariableTable(names)
        entries = [
            [SparsePolynomial.variable(table, i * cols + j) for j in range(cols)]
            for i in range(rows)
        ]
        return cls(table, entries)

    def entry(self, i, j):
        """1-based."""
        return self.entries[i - 1][j - 1]

    def with_identity_right(self):
        """[z | I_rows]: append an identity block on the right."""
        one = SparsePolynomial.one(self.table)
        zero = SparsePolynomial.zero(self.table)
        entries = [
            list(row) + [one if j == i else zero for j in range(self.rows)]
            for i, row in enumerate(self.entries)
        ]
        return GenericMatrix(self.table, entries)

    def with_gr2_border(self):
        """Prepend the column (1,0) and append the column (0,1); only
        meaningful for 2-row matrices."""
        if self.rows != 2:
            raise StructureError("gr2 border applies to 2-row matrices")
        one = SparsePolynomial.one(self.table)
        zero = SparsePolynomial.zero(self.table)
        top = [one] + list(self.entries[0]) + [zero]
        bottom = [zero] + list(self.entries[1]) + [one]
        return GenericMatrix(self.table, [top, bottom])

    def minor(self, row_set, col_set):
        """Determinant of the submatrix on the given 1-based row and
        column sets; the empty minor is 1."""
        row_set = _index_set(row_set, universe=self.rows, what="row set")
        col_set = _index_set(col_set, universe=self.cols, what="column set")
        if len(row_set) != len(col_set):
            raise ValueError("minor needs equally many rows and columns")
        if not row_set:
            return SparsePolynomial.one(self.table)
        key = (row_set, col_set)
        cached = self._minors.get(key)
        if cached is None:
            sub = [
                [self.entries[i - 1][j - 1] for j in col_set] for i in row_set
            ]
            cached = poly_det(sub)
            self._minors[key] = cached
        return cached

    def plucker(self, J):
        """Maximal minor on all rows and the columns J, |J| = rows."""
        J = _index_set(J, size=self.rows, universe=self.cols, what="column set")
        return self.minor(range(1, self.rows + 1), J)

    def flag_minor(self, J):
        """Minor on columns J and the top |J| rows."""
        J = _index_set(J, universe=self.cols, what="column set")
        if not 1 <= len(J) <= self.rows:
            raise ValueError(f"flag minor needs 1..{self.rows} columns, got {len(J)}")
        return self.minor(range(1, len(J) + 1), J)


@lru_cache(maxsize=None)
def generic_matrix(rows, cols, prefix="z"):
    return GenericMatrix.generic(rows, cols, prefix)


def plucker(a, b, J):
    """P_J on the shared generic a x b matrix."""
    return generic_matrix(a, b).plucker(J)


def flag_minor(k, J):
    """P_J ``solid at the top'': columns J of the shared generic k x k
    matrix, rows 1..|J|. J must be a nonempty proper subset of 1..k."""
    J = _index_set(J, universe=k, what="column set")
    if not J or len(J) >= k:
        raise ValueError("flag minor wants a nonempty proper column subset")
    return generic_matrix(k, k).flag_minor(J)
