"""Exact linear algebra over cyclotomic fields, plus integer normal forms.

Matrices act on column vectors: ``m.apply(v)`` computes M*v.  Subspaces of
Q(zeta)^N are stored in reduced row echelon form with leftmost-nonzero
pivoting, which makes the basis canonical: two subspaces are equal exactly
when their stored bases are identical tuples.

Elimination is done by cross-multiplication so that no field inversions
happen inside the main loops; pivots are normalized once at the end.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .cyclotomic import Cyclotomic

_ZERO = Cyclotomic.zero()
_ONE = Cyclotomic.one()


def _coerce_entry(x) -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyclotomic(1, [Fraction(x)])
    raise TypeError(f"cannot use {type(x).__name__} as a matrix entry")


class Matrix:
    """Dense matrix with exact cyclotomic entries, row-major."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable]) -> None:
        data = tuple(tuple(_coerce_entry(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise ValueError("matrix needs at least one row and column")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise ValueError("ragged rows")
        self.rows = data
        self.nrows = len(data)
        self.ncols = width

    # -- constructors -------------------------------------------------

    @staticmethod
    def identity(n: int) -> Matrix:
        return Matrix(
            [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def zeros(n: int, m: int | None = None) -> Matrix:
        m = n if m is None else m
        return Matrix([[_ZERO] * m for _ in range(n)])

    @staticmethod
    def scalar(n: int, value) -> Matrix:
        value = _coerce_entry(value)
        return Matrix(
            [[value if i == j else _ZERO for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def diagonal(values: Sequence) -> Matrix:
        vals = [_coerce_entry(v) for v in values]
        n = len(vals)
        return Matrix(
            [[vals[i] if i == j else _ZERO for j in range(n)] for i in range(n)]
        )

    # -- structure ----------------------------------------------------

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, key: tuple[int, int]) -> Cyclotomic:
        i, j = key
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in row) for row in self.rows)
        return f"Matrix[{body}]"

    # -- arithmetic -----------------------------------------------------

    def __matmul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(
                f"shape mismatch: {self.nrows}x{self.ncols} @ "
                f"{other.nrows}x{other.ncols}"
            )
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            out.append(
                [
                    sum(
                        (a * b for a, b in zip(row, col) if not a.is_zero()),
                        _ZERO,
                    )
                    for col in cols
                ]
            )
        return Matrix(out)

    def __mul__(self, other) -> Matrix:
        c = _coerce_entry(other)
        return Matrix([[c * x for x in row] for row in self.rows])

    __rmul__ = __mul__

    def __add__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return Matrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-1) * other

    def __neg__(self) -> Matrix:
        return (-1) * self

    def apply(self, vector: Sequence) -> tuple[Cyclotomic, ...]:
        """M times a column vector."""
        vec = [_coerce_entry(x) for x in vector]
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(
            sum((a * b for a, b in zip(row, vec) if not a.is_zero()), _ZERO)
            for row in self.rows
        )

    def transpose(self) -> Matrix:
        return Matrix(list(zip(*self.rows)))

    def conjugate(self) -> Matrix:
        return Matrix([[x.conjugate() for x in row] for row in self.rows])

    def trace(self) -> Cyclotomic:
        if not self.is_square:
            raise ValueError("trace needs a square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), _ZERO)

    def determinant(self) -> Cyclotomic:
        if not self.is_square:
            raise ValueError("determinant needs a square matrix")
        n = self.nrows
        work = [list(row) for row in self.rows]
        det = _ONE
        sign = 1
        for col in range(n):
            piv = next(
                (i for i in range(col, n) if not work[i][col].is_zero()), None
            )
            if piv is None:
                return _ZERO
            if piv != col:
                work[col], work[piv] = work[piv], work[col]
                sign = -sign
            p = work[col][col]
            det = det * p
            inv = p.inverse()
            for i in range(col + 1, n):
                f = work[i][col]
                if f.is_zero():
                    continue
                f = f * inv
                for j in range(col + 1, n):
                    work[i][j] = work[i][j] - f * work[col][j]
                work[i][col] = _ZERO
        return det if sign == 1 else -det

    def inverse(self) -> Matrix:
        if not self.is_square:
            raise ValueError("inverse needs a square matrix")
        n = self.nrows
        work = [list(row) + list(ident_row) for row, ident_row in
                zip(self.rows, Matrix.identity(n).rows)]
        for col in range(n):
            piv = next(
                (i for i in range(col, n) if not work[i][col].is_zero()), None
            )
            if piv is None:
                raise ZeroDivisionError("matrix is singular")
            work[col], work[piv] = work[piv], work[col]
            inv = work[col][col].inverse()
            work[col] = [x * inv for x in work[col]]
            for i in range(n):
                if i != col and not work[i][col].is_zero():
                    f = work[i][col]
                    work[i] = [a - f * b for a, b in zip(work[i], work[col])]
        return Matrix([row[n:] for row in work])

    def is_scalar(self) -> bool:
        if not self.is_square:
            return False
        d = self.rows[0][0]
        for i in range(self.nrows):
            for j in range(self.ncols):
                want = d if i == j else _ZERO
                if self.rows[i][j] != want:
                    return False
        return True


def tensor(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product A (x) B, row-major block layout.

    Acting on column vectors this realizes X -> A X B^T after flattening
    the p x q coordinate array X row by row.
    """
    out = []
    for arow in a.rows:
        for brow in b.rows:
            out.append([x * y for x in arow for y in brow])
    return Matrix(out)


# -- echelon machinery -------------------------------------------------


def _echelon(rows: list[list[Cyclotomic]]) -> tuple[list[list[Cyclotomic]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    if not rows:
        return [], []
    ncols = len(rows[0])
    work = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next(
            (i for i in range(r, len(work)) if not work[i][col].is_zero()), None
        )
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        # clear below by cross-multiplication, no inversions yet
        p = work[r][col]
        for i in range(r + 1, len(work)):
            f = work[i][col]
            if f.is_zero():
                continue
            work[i] = [p * a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    work = work[:r]
    # normalize pivots and clear above
    for i in range(r - 1, -1, -1):
        col = pivots[i]
        inv = work[i][col].inverse()
        work[i] = [x * inv for x in work[i]]
        for j in range(i):
            f = work[j][col]
            if not f.is_zero():
                work[j] = [a - f * b for a, b in zip(work[j], work[i])]
    return work, pivots


class Subspace:
    """A linear subspace of Q(zeta)^N with a canonical echelon basis."""

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient: int, vectors: Iterable[Sequence]) -> None:
        rows = [[_coerce_entry(x) for x in v] for v in vectors]
        if any(len(r) != ambient for r in rows):
            raise ValueError("vector length does not match ambient dimension")
        echelon, _ = _echelon(rows)
        self.ambient = ambient
        self.basis = tuple(tuple(r) for r in echelon)

    @staticmethod
    def full(n: int) -> Subspace:
        return Subspace(n, Matrix.identity(n).rows)

    @staticmethod
    def trivial(n: int) -> Subspace:
        return Subspace(n, [])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        vecs = "; ".join(
            ", ".join(str(x) for x in row) for row in self.basis
        )
        return f"Subspace<{self.dim} of {self.ambient}: {vecs}>"

    def contains(self, vector: Sequence) -> bool:
        vec = [_coerce_entry(x) for x in vector]
        for row in self.basis:
            col = next(i for i, x in enumerate(row) if not x.is_zero())
            f = vec[col]
            if not f.is_zero():
                vec = [a - f * b for a, b in zip(vec, row)]
        return all(x.is_zero() for x in vec)

    def contains_subspace(self, other: Subspace) -> bool:
        return all(self.contains(v) for v in other.basis)

    def sum(self, other: Subspace) -> Subspace:
        if self.ambient != other.ambient:
            raise ValueError("ambient dimensions differ")
        return Subspace(self.ambient, list(self.basis) + list(other.basis))

    def intersect(self, other: Subspace) -> Subspace:
        if self.ambient != other.ambient:
            raise ValueError("ambient dimensions differ")
        if not self.basis or not other.basis:
            return Subspace.trivial(self.ambient)
        # columns are the two bases; kernel vectors pair coefficients (a, b)
        # with a.U = -b.W, so a.U runs over the intersection
        stacked = Matrix(
            [
                list(u_col) + list(w_col)
                for u_col, w_col in zip(
                    zip(*self.basis),
                    zip(*[[-x for x in row] for row in other.basis]),
                )
            ]
        )
        combos = kernel(stacked)
        p = len(self.basis)
        vectors = []
        for combo in combos.basis:
            vec = [_ZERO] * self.ambient
            for coeff, row in zip(combo[:p], self.basis):
                if not coeff.is_zero():
                    vec = [a + coeff * b for a, b in zip(vec, row)]
            vectors.append(vec)
        return Subspace(self.ambient, vectors)

    def image(self, m: Matrix) -> Subspace:
        """The subspace M.U for a matrix acting on columns."""
        if m.ncols != self.ambient:
            raise ValueError("matrix does not act on this space")
        return Subspace(m.nrows, [m.apply(v) for v in self.basis])


def kernel(m: Matrix) -> Subspace:
    """Right null space {v : M v = 0} as a subspace of Q(zeta)^ncols."""
    work, pivots = _echelon([list(r) for r in m.rows])
    free = [c for c in range(m.ncols) if c not in pivots]
    vectors = []
    for fc in free:
        vec = [_ZERO] * m.ncols
        vec[fc] = _ONE
        for row, pc in zip(work, pivots):
            vec[pc] = -row[fc]
        vectors.append(vec)
    return Subspace(m.ncols, vectors)


def eigenspace(m: Matrix, value) -> Subspace:
    """Null space of (M - value*I)."""
    if not m.is_square:
        raise ValueError("eigenspace needs a square matrix")
    return kernel(m - Matrix.scalar(m.nrows, value))


# -- integer lattices ---------------------------------------------------


class IntMatrix:
    """Small integer matrix for lattice computations."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[int]]) -> None:
        data = [list(map(int, row)) for row in rows]
        if not data or not data[0]:
            raise ValueError("matrix needs at least one row and column")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise ValueError("ragged rows")
        self.rows = data
        self.nrows = len(data)
        self.ncols = width

    def smith_normal_form(self):
        return smith_normal_form(self.rows)


def hermite_insert(rows: list[list[int]], vector: Sequence[int]) -> None:
    """Fold one integer vector into a row-echelon lattice basis, in place.

    ``rows`` is kept sorted by pivot column with positive pivots.  The
    span after the call is the old span plus the new vector.
    """
    v = list(map(int, vector))
    k = len(v)
    while True:
        col = next((i for i in range(k) if v[i]), None)
        if col is None:
            return
        idx = None
        for i, row in enumerate(rows):
            pc = next(j for j in range(k) if row[j])
            if pc == col:
                idx = i
                break
            if pc > col:
                break
        if idx is None:
            if v[col] < 0:
                v = [-x for x in v]
            rows.append(v)
            rows.sort(key=lambda r: next(j for j in range(k) if r[j]))
            return
        row = rows[idx]
        if v[col] % row[col] == 0:
            q = v[col] // row[col]
            v = [a - q * b for a, b in zip(v, row)]
        else:
            g, s, t = _xgcd(row[col], v[col])
            new_row = [s * a + t * b for a, b in zip(row, v)]
            v = [
                (row[col] // g) * b - (v[col] // g) * a
                for a, b in zip(row, v)
            ]
            rows[idx] = new_row


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def smith_normal_form(rows, with_transforms: bool = False):
    """Invariant factors d1 | d2 | ... of an integer matrix.

    Returns the tuple of nonzero invariants; the free rank of the
    cokernel Z^ncols / rowspace is ncols minus the tuple length.  With
    ``with_transforms`` also returns unimodular U, V with U*A*V diagonal.
    """
    a = [list(map(int, r)) for r in rows]
    m, n = len(a), len(a[0])
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_op(i, j, q):  # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for row in a:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(m, n):
        # find the smallest nonzero entry in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    row_op(i, t, q)
                    if a[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    col_op(j, t, q)
                    if a[t][j]:
                        swap_cols(t, j)
                        dirty = True
        # enforce divisibility of the rest of the block
        fixed = False
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % a[t][t]:
                    row_op(t, i, -1)
                    fixed = True
                    break
            if fixed:
                break
        if fixed:
            continue
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    invariants = tuple(a[i][i] for i in range(min(m, n)) if i < min(m, n) and a[i][i])
    if with_transforms:
        return invariants, u, v
    return invariants


def int_determinant(rows) -> int:
    """Exact determinant of a square integer matrix, division-free pivots."""
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("square matrix required")
    sign = 1
    prev = 1
    for col in range(n - 1):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        for i in range(col + 1, n):
            for j in range(col + 1, n):
                a[i][j] = (a[i][j] * a[col][col] - a[i][col] * a[col][j]) // prev
            a[i][col] = 0
        prev = a[col][col]
    return sign * a[n - 1][n - 1]
