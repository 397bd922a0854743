"""Exact linear algebra over the integers and rationals.

Matrices are immutable, entries are Python ints or ``fractions.Fraction``,
and every routine is exact.  The normal forms (Smith, Hermite) use fixed
deterministic pivoting rules so that derived bases are reproducible across
runs and platforms.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence


def _normalize_entry(x):
    if isinstance(x, bool):
        raise TypeError("matrix entries must be int or Fraction, got bool")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    raise TypeError(f"matrix entries must be int or Fraction, got {type(x).__name__}")


class Matrix:
    """Immutable rectangular matrix with exact entries.

    Entries with denominator 1 are normalized to int, so integrality of a
    rational computation can be tested with :attr:`is_integral`.
    """

    __slots__ = ("data", "rows", "cols")

    def __init__(self, rows: Iterable[Iterable], cols: int | None = None):
        data = tuple(tuple(_normalize_entry(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ValueError("rows have unequal lengths")
            if cols is not None and cols != width:
                raise ValueError("explicit column count disagrees with row data")
        else:
            width = cols if cols is not None else 0
        self.data = data
        self.rows = len(data)
        self.cols = width

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_square(self):
        return self.rows == self.cols

    @property
    def is_integral(self):
        return all(isinstance(x, int) for row in self.data for x in row)

    @property
    def is_symmetric(self):
        if not self.is_square:
            return False
        return all(
            self.data[i][j] == self.data[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i):
        return self.data[i]

    def col(self, j):
        return tuple(self.data[i][j] for i in range(self.rows))

    def transpose(self) -> "Matrix":
        if self.rows == 0:
            return Matrix([[] for _ in range(self.cols)], cols=0)
        if self.cols == 0:
            return Matrix([], cols=self.rows)
        return Matrix(tuple(zip(*self.data)))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ot = tuple(zip(*other.data)) if other.rows else tuple(() for _ in range(other.cols))
        return Matrix(
            [[sum(a * b for a, b in zip(row, col)) for col in ot] for row in self.data],
            cols=other.cols,
        )

    def apply(self, vec: Sequence):
        """Matrix times column vector, returned as a tuple."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.data)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
            cols=self.cols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix([[-x for x in row] for row in self.data], cols=self.cols)

    def scale(self, k) -> "Matrix":
        return Matrix([[k * x for x in row] for row in self.data], cols=self.cols)

    def __pow__(self, n: int) -> "Matrix":
        if not self.is_square or n < 0:
            raise ValueError("matrix power needs a square matrix and n >= 0")
        result = identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def map(self, f) -> "Matrix":
        return Matrix([[f(x) for x in row] for row in self.data], cols=self.cols)

    def to_lists(self):
        return [list(row) for row in self.data]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.data == other.data and self.shape == other.shape

    def __hash__(self):
        return hash((self.shape, self.data))

    def __repr__(self):
        return f"Matrix({self.to_lists()!r})"


def identity(n: int) -> Matrix:
    return Matrix([[int(i == j) for j in range(n)] for i in range(n)], cols=n)


def zeros(rows: int, cols: int) -> Matrix:
    return Matrix([[0] * cols for _ in range(rows)], cols=cols)


def col_matrix(columns: Sequence[Sequence]) -> Matrix:
    """Assemble a matrix from a list of column vectors."""
    if not columns:
        return Matrix([])
    n = len(columns[0])
    if any(len(c) != n for c in columns):
        raise ValueError("columns have unequal lengths")
    return Matrix([[columns[j][i] for j in range(len(columns))] for i in range(n)])


def hstack(a: Matrix, b: Matrix) -> Matrix:
    if a.rows != b.rows:
        raise ValueError("row count mismatch")
    return Matrix([ra + rb for ra, rb in zip(a.data, b.data)], cols=a.cols + b.cols)


def block_diag(*mats: Matrix) -> Matrix:
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    out = [[0] * cols for _ in range(rows)]
    r0 = c0 = 0
    for m in mats:
        for i in range(m.rows):
            for j in range(m.cols):
                out[r0 + i][c0 + j] = m.data[i][j]
        r0 += m.rows
        c0 += m.cols
    return Matrix(out, cols=cols)


def _xgcd(a: int, b: int):
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def exact_det(m: Matrix):
    """Exact determinant; int for integer input, Fraction otherwise."""
    if not m.is_square:
        raise ValueError("determinant needs a square matrix")
    n = m.rows
    if n == 0:
        return 1
    if m.is_integral:
        return _det_bareiss(m)
    return _det_fraction(m)


def _det_bareiss(m: Matrix) -> int:
    a = [list(row) for row in m.data]
    n = m.rows
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _det_fraction(m: Matrix) -> Fraction:
    a = [[Fraction(x) for x in row] for row in m.data]
    n = m.rows
    det = Fraction(1)
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][k]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        inv = 1 / a[k][k]
        for i in range(k + 1, n):
            if a[i][k]:
                f = a[i][k] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return det


def exact_inverse(m: Matrix) -> Matrix:
    """Exact inverse over the rationals (entries normalized to int when possible)."""
    if not m.is_square:
        raise ValueError("inverse needs a square matrix")
    n = m.rows
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m.data)]
    for k in range(n):
        pivot = next((i for i in range(k, n) if a[i][k]), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        a[k], a[pivot] = a[pivot], a[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return Matrix([row[n:] for row in a])


def is_unimodular(m: Matrix) -> bool:
    return m.is_square and m.is_integral and abs(exact_det(m)) == 1


def smith_normal_form(m: Matrix):
    """Return (U, D, V) with U @ m @ V = D.

    U and V are unimodular, D is diagonal with nonnegative entries satisfying
    d_i | d_{i+1}.  Pivot selection: smallest absolute value among nonzero
    entries of the remaining block, ties broken by lowest row, then column.
    """
    rows, cols = m.rows, m.cols
    if not m.is_integral:
        raise ValueError("Smith normal form requires integer entries")
    a = [list(r) for r in m.data]
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        if i != j:
            a[i], a[j] = a[j], a[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for r in a:
                r[i], r[j] = r[j], r[i]
            for r in v:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, c):
        if c:
            asrc, usrc = a[src], u[src]
            a[dst] = [x + c * y for x, y in zip(a[dst], asrc)]
            u[dst] = [x + c * y for x, y in zip(u[dst], usrc)]

    def add_col(dst, src, c):
        if c:
            for r in a:
                r[dst] += c * r[src]
            for r in v:
                r[dst] += c * r[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    def find_pivot(t):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        return best

    t = 0
    limit = min(rows, cols)
    while t < limit:
        best = find_pivot(t)
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            if a[t][t] < 0:
                negate_row(t)
            pivot = a[t][t]
            moved = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // pivot))
                    if a[i][t]:
                        swap_rows(t, i)
                    moved = True
                    break
            if moved:
                continue
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // pivot))
                    if a[t][j]:
                        swap_cols(t, j)
                    moved = True
                    break
            if moved:
                continue
            offender = None
            for i in range(t + 1, rows):
                if any(a[i][j] % pivot for j in range(t + 1, cols)):
                    offender = i
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
        t += 1
    return Matrix(u), Matrix(a), Matrix(v)


def row_hermite(m: Matrix) -> Matrix:
    """Canonical row-style Hermite normal form with zero rows dropped.

    Pivots are positive, entries above each pivot are reduced into
    [0, pivot), and pivot columns strictly increase down the rows.  The
    output depends only on the row span of the input.
    """
    if not m.is_integral:
        raise ValueError("Hermite normal form requires integer entries")
    rows, cols = m.rows, m.cols
    a = [list(r) for r in m.data]
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if a[i][c]:
                if piv is None:
                    piv = i
                else:
                    g, x, y = _xgcd(a[piv][c], a[i][c])
                    p_, q_ = a[piv][c] // g, a[i][c] // g
                    rp, ri = a[piv], a[i]
                    a[piv] = [x * s + y * t_ for s, t_ in zip(rp, ri)]
                    a[i] = [-q_ * s + p_ * t_ for s, t_ in zip(rp, ri)]
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return Matrix(a[:r], cols=cols)


def column_hermite_basis(m: Matrix) -> Matrix:
    """Canonical basis (as columns) of the column span of an integer matrix."""
    return row_hermite(m.transpose()).transpose()


def integer_kernel(m: Matrix) -> Matrix:
    """Canonical basis of the saturated kernel sublattice, as columns.

    The columns span ker(m) over Z.  They always extend to a basis of Z^cols
    (the kernel of an integer matrix is saturated), and they are Hermite
    reduced for determinism.
    """
    _, d, v = smith_normal_form(m)
    kernel_cols = []
    for j in range(m.cols):
        dj = d.data[j][j] if j < min(m.rows, m.cols) else 0
        if dj == 0:
            kernel_cols.append(v.col(j))
    if not kernel_cols:
        return zeros(m.cols, 0)
    return column_hermite_basis(col_matrix(kernel_cols))


def saturate_columns(b: Matrix) -> Matrix:
    """Canonical basis of the saturation of the column span of ``b``.

    The saturation is the largest sublattice of Z^rows with the same span
    over Q; it is computed as a double integer kernel, so the output basis
    is primitive.
    """
    complement = integer_kernel(b.transpose())
    return integer_kernel(complement.transpose())


def common_denominator(m: Matrix) -> int:
    den = 1
    for row in m.data:
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
    return den
