"""Dense exact linear algebra over a base field: rref, rank, kernels, solving.

All routines are deterministic: pivots are chosen left to right, bases are
reported in the canonical column order of the input.
"""

from __future__ import annotations


class Matrix:
    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, rows: int, cols: int, data=None):
        self.field = field
        self.rows = rows
        self.cols = cols
        if data is None:
            z = field.zero()
            self.data = [[z] * cols for _ in range(rows)]
        else:
            if len(data) != rows or any(len(r) != cols for r in data):
                raise ValueError("matrix data has inconsistent shape")
            self.data = [list(r) for r in data]

    @classmethod
    def from_rows(cls, field, rows_data):
        rows = len(rows_data)
        cols = len(rows_data[0]) if rows else 0
        coerced = [[field.coerce(v) for v in r] for r in rows_data]
        return cls(field, rows, cols, coerced)

    @classmethod
    def identity(cls, field, n: int):
        m = cls(field, n, n)
        one = field.one()
        for i in range(n):
            m.data[i][i] = one
        return m

    @classmethod
    def zeros(cls, field, rows: int, cols: int):
        return cls(field, rows, cols)

    def copy(self) -> "Matrix":
        return Matrix(self.field, self.rows, self.cols, self.data)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, {self.data})"

    def is_zero(self) -> bool:
        f = self.field
        return all(f.is_zero(v) for row in self.data for v in row)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        f = self.field
        return Matrix(
            f,
            self.rows,
            self.cols,
            [
                [f.add(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        f = self.field
        return Matrix(
            f,
            self.rows,
            self.cols,
            [
                [f.sub(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ],
        )

    def __neg__(self) -> "Matrix":
        f = self.field
        return Matrix(
            f, self.rows, self.cols, [[f.neg(a) for a in r] for r in self.data]
        )

    def scale(self, c) -> "Matrix":
        f = self.field
        c = f.coerce(c)
        return Matrix(
            f, self.rows, self.cols, [[f.mul(c, a) for a in r] for r in self.data]
        )

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(
                f"shape mismatch: {self.rows}x{self.cols} * {other.rows}x{other.cols}"
            )
        f = self.field
        out = Matrix(f, self.rows, other.cols)
        for i in range(self.rows):
            srow = self.data[i]
            orow = out.data[i]
            for k in range(self.cols):
                a = srow[k]
                if f.is_zero(a):
                    continue
                brow = other.data[k]
                for j in range(other.cols):
                    b = brow[j]
                    if not f.is_zero(b):
                        orow[j] = f.add(orow[j], f.mul(a, b))
        return out

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            self.cols,
            self.rows,
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return Matrix(
            self.field,
            self.rows,
            self.cols + other.cols,
            [ra + rb for ra, rb in zip(self.data, other.data)],
        )

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch in vstack")
        return Matrix(self.field, self.rows + other.rows, self.cols, self.data + other.data)

    def column(self, j: int):
        return [self.data[i][j] for i in range(self.rows)]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def submatrix_columns(self, js) -> "Matrix":
        return Matrix(
            self.field,
            self.rows,
            len(js),
            [[self.data[i][j] for j in js] for i in range(self.rows)],
        )

    def _check_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    # --- elimination ---

    def rref(self):
        """Reduced row echelon form; returns (R, pivot column list)."""
        f = self.field
        R = self.copy()
        pivots = []
        r = 0
        for c in range(R.cols):
            if r >= R.rows:
                break
            pivot_row = None
            for i in range(r, R.rows):
                if not f.is_zero(R.data[i][c]):
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            R.data[r], R.data[pivot_row] = R.data[pivot_row], R.data[r]
            inv = f.inv(R.data[r][c])
            R.data[r] = [f.mul(inv, v) for v in R.data[r]]
            for i in range(R.rows):
                if i != r and not f.is_zero(R.data[i][c]):
                    factor = R.data[i][c]
                    R.data[i] = [
                        f.sub(v, f.mul(factor, w)) for v, w in zip(R.data[i], R.data[r])
                    ]
            pivots.append(c)
            r += 1
        return R, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> "Matrix":
        """Basis of the null space, as columns; count = cols - rank."""
        f = self.field
        R, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.cols) if j not in pivot_set]
        basis = Matrix(f, self.cols, len(free))
        one = f.one()
        for k, j in enumerate(free):
            basis.data[j][k] = one
            for r, c in enumerate(pivots):
                basis.data[c][k] = f.neg(R.data[r][j])
        return basis

    def image_basis(self) -> "Matrix":
        """Basis of the column space: the pivot columns of self."""
        _, pivots = self.rref()
        return self.submatrix_columns(pivots)

    def solve(self, rhs: "Matrix"):
        """A particular solution X of self * X = rhs, or None if inconsistent."""
        if rhs.rows != self.rows:
            raise ValueError("rhs row mismatch")
        f = self.field
        aug = self.hstack(rhs)
        R, pivots = aug.rref()
        for c in pivots:
            if c >= self.cols:
                return None
        X = Matrix(f, self.cols, rhs.cols)
        for r, c in enumerate(pivots):
            for j in range(rhs.cols):
                X.data[c][j] = R.data[r][self.cols + j]
        return X


def column_space_contains(basis: Matrix, vectors: Matrix) -> bool:
    """Whether every column of ``vectors`` lies in the span of ``basis`` columns."""
    if basis.cols == 0:
        return vectors.is_zero()
    return basis.solve(vectors) is not None


def intersect_column_spaces(mats) -> Matrix:
    """Basis (columns) of the intersection of the column spaces."""
    mats = list(mats)
    if not mats:
        raise ValueError("need at least one subspace")
    current = mats[0].image_basis()
    for m in mats[1:]:
        if current.cols == 0:
            return current
        other = m.image_basis()
        stacked = current.hstack(-other)
        ker = stacked.kernel_basis()
        coeffs = Matrix(
            current.field,
            current.cols,
            ker.cols,
            [ker.data[i] for i in range(current.cols)],
        )
        current = (current * coeffs).image_basis()
    return current


def sum_column_spaces(field, dim: int, mats) -> Matrix:
    """Basis (columns) of the sum of the column spaces inside k^dim."""
    total = Matrix(field, dim, 0)
    for m in mats:
        if m.rows != dim:
            raise ValueError("ambient dimension mismatch")
        total = total.hstack(m)
    return total.image_basis()


def complete_basis(basis: Matrix) -> Matrix:
    """Extend independent columns to a full basis with standard vectors appended."""
    f = basis.field
    dim = basis.rows
    full = basis.hstack(Matrix.identity(f, dim))
    _, pivots = full.rref()
    if len(pivots) != dim:
        raise ValueError("input columns not independent or ambient degenerate")
    return full.submatrix_columns(pivots)


def coordinates_in_basis(basis: Matrix, vectors: Matrix) -> Matrix:
    """Coordinates of columns of ``vectors`` in the given independent columns."""
    coords = basis.solve(vectors)
    if coords is None:
        raise ValueError("vectors not in span of basis")
    return coords
