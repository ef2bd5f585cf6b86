"""Exact integer and rational matrix algebra.

Everything here is arbitrary precision: matrices carry Python ints or
``fractions.Fraction`` entries and every operation is exact.  Floating
point is never used anywhere in this package; maximal minors of fan
matrices are products of weights and overflow fixed-width integers
almost immediately.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class SingularMatrixError(ValueError):
    """Raised when an operation needs an invertible matrix and got none."""


class DimensionError(ValueError):
    """Raised on shape mismatches."""


def _as_int(x) -> int:
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise ValueError(f"entry {x} is not an integer")
        return x.numerator
    if isinstance(x, int):
        return int(x)
    if isinstance(x, str):
        return int(x, 10)
    raise TypeError(f"cannot use {type(x).__name__} as an exact integer")


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, entries in row-major order.

    Zero-row matrices are allowed so that empty kernel bases have a
    natural representation; the column count must still be positive.
    """

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.cols < 1 or self.rows < 0:
            raise DimensionError(f"bad shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows:
            raise DimensionError("row count does not match entries")
        for r in self.entries:
            if len(r) != self.cols:
                raise DimensionError("ragged rows")

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> "IntMatrix":
        ent = tuple(tuple(_as_int(x) for x in r) for r in rows)
        if not ent:
            if cols is None:
                raise DimensionError("zero-row matrix needs an explicit column count")
            return cls(0, cols, ())
        return cls(len(ent), len(ent[0]), ent)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple(tuple(0 for _ in range(cols)) for _ in range(rows)))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(tuple(self.entries[i][j] for i in range(self.rows))
                               for j in range(self.cols)))

    def delete_column(self, j: int) -> "IntMatrix":
        if self.cols < 2:
            raise DimensionError("cannot delete the only column")
        return IntMatrix(self.rows, self.cols - 1,
                         tuple(r[:j] + r[j + 1:] for r in self.entries))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols = other.transpose().entries
        return IntMatrix(self.rows, other.cols,
                         tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols)
                               for r in self.entries))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols,
                         tuple(tuple(-x for x in r) for r in self.entries))

    def scaled(self, k: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols,
                         tuple(tuple(k * x for x in r) for r in self.entries))

    def det(self) -> int:
        if not self.is_square:
            raise DimensionError("determinant of a non-square matrix")
        return _det_bareiss([list(r) for r in self.entries])

    def entry_gcd(self) -> int:
        g = 0
        for r in self.entries:
            for x in r:
                g = gcd(g, x)
        return g

    def to_rational(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols,
                         tuple(tuple(Fraction(x) for x in r) for r in self.entries))

    def to_json_rows(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.entries]

    @classmethod
    def from_json_rows(cls, rows) -> "IntMatrix":
        return cls.from_rows([[int(str(x), 10) for x in r] for r in rows])

    def __str__(self) -> str:
        width = max((len(str(x)) for r in self.entries for x in r), default=1)
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in self.entries)


@dataclass(frozen=True)
class RatMatrix:
    """Immutable matrix of exact rationals (always in lowest terms)."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise DimensionError(f"bad shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionError("shape does not match entries")

    @classmethod
    def from_rows(cls, rows) -> "RatMatrix":
        ent = tuple(tuple(Fraction(x) for x in r) for r in rows)
        return cls(len(ent), len(ent[0]), ent)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows,
                         tuple(tuple(self.entries[i][j] for i in range(self.rows))
                               for j in range(self.cols)))

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols = other.transpose().entries
        return RatMatrix(self.rows, other.cols,
                         tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols)
                               for r in self.entries))

    def det(self) -> Fraction:
        if not self.is_square:
            raise DimensionError("determinant of a non-square matrix")
        mat = [list(r) for r in self.entries]
        n = self.rows
        d = Fraction(1)
        for k in range(n):
            piv = next((i for i in range(k, n) if mat[i][k] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != k:
                mat[k], mat[piv] = mat[piv], mat[k]
                d = -d
            d *= mat[k][k]
            inv = 1 / mat[k][k]
            for i in range(k + 1, n):
                f = mat[i][k] * inv
                if f:
                    mat[i] = [a - f * b for a, b in zip(mat[i], mat[k])]
        return d

    def inverse(self) -> "RatMatrix":
        if not self.is_square:
            raise DimensionError("inverse of a non-square matrix")
        n = self.rows
        mat = [list(r) + [Fraction(int(i == j)) for j in range(n)]
               for i, r in enumerate(self.entries)]
        for k in range(n):
            piv = next((i for i in range(k, n) if mat[i][k] != 0), None)
            if piv is None:
                raise SingularMatrixError("matrix is singular")
            if piv != k:
                mat[k], mat[piv] = mat[piv], mat[k]
            inv = 1 / mat[k][k]
            mat[k] = [x * inv for x in mat[k]]
            for i in range(n):
                if i != k and mat[i][k]:
                    f = mat[i][k]
                    mat[i] = [a - f * b for a, b in zip(mat[i], mat[k])]
        return RatMatrix.from_rows([r[n:] for r in mat])

    def to_integer(self) -> IntMatrix:
        return IntMatrix.from_rows([[_as_int(x) for x in r] for r in self.entries])


def _det_bareiss(mat: list[list[int]]) -> int:
    """Fraction-free determinant; every interior division is exact."""
    n = len(mat)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            for i in range(k + 1, n):
                if mat[i][k]:
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]
                q, r = divmod(num, prev)
                assert r == 0
                mat[i][j] = q
            mat[i][k] = 0
        prev = mat[k][k]
    return sign * mat[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Hermite normal form


def is_hnf(m: IntMatrix) -> bool:
    """Row-style Hermite normal form predicate.

    Nonzero rows come first; each has a positive pivot strictly to the
    right of the pivot above it, zeros to its left, and the entries above
    a pivot are reduced into ``[0, pivot)``.
    """
    prev_col = -1
    seen_zero_row = False
    for i in range(m.rows):
        row = m.entries[i]
        piv = next((j for j, x in enumerate(row) if x != 0), None)
        if piv is None:
            seen_zero_row = True
            continue
        if seen_zero_row:
            return False
        if piv <= prev_col or row[piv] < 1:
            return False
        for k in range(i):
            if not (0 <= m.entries[k][piv] < row[piv]):
                return False
        prev_col = piv
    return True


@dataclass(frozen=True)
class HnfResult:
    """Hermite normal form together with a unimodular witness.

    ``transform @ input == hnf`` holds for the matrix the result was
    computed from; the witness is not unique and callers must rely only
    on unimodularity and that product identity.
    """

    hnf: IntMatrix
    transform: IntMatrix
    rank: int

    def __post_init__(self):
        if not self.transform.is_square or self.transform.rows != self.hnf.rows:
            raise DimensionError("transform must be square with as many rows as the HNF")
        if abs(self.transform.det()) != 1:
            raise ValueError("transform is not unimodular")
        if not is_hnf(self.hnf):
            raise ValueError("matrix is not in Hermite normal form")
        nonzero = sum(1 for r in self.hnf.entries if any(r))
        if nonzero != self.rank:
            raise ValueError("rank does not match the number of nonzero rows")


def hnf(a: IntMatrix) -> HnfResult:
    """Hermite normal form ``B = U @ a`` with ``U`` unimodular.

    The elimination order is fixed (leftmost pivot column, Euclid on the
    smallest surviving entry, entries above a pivot reduced last) so one
    build always returns the same witness, but only the HNF itself is
    canonical.
    """
    m, n = a.rows, a.cols
    work = [list(r) for r in a.entries]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = [i for i in range(r, m) if work[i][c] != 0]
        if not nz:
            continue
        while len(nz) > 1:
            i0 = min(nz, key=lambda i: (abs(work[i][c]), i))
            if i0 != r:
                work[r], work[i0] = work[i0], work[r]
                u[r], u[i0] = u[i0], u[r]
            p = work[r][c]
            for i in nz:
                if i == r:
                    continue
                q = work[i][c] // p
                if q:
                    work[i] = [x - q * y for x, y in zip(work[i], work[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
            nz = [i for i in range(r, m) if work[i][c] != 0]
        i0 = nz[0]
        if i0 != r:
            work[r], work[i0] = work[i0], work[r]
            u[r], u[i0] = u[i0], u[r]
        if work[r][c] < 0:
            work[r] = [-x for x in work[r]]
            u[r] = [-x for x in u[r]]
        p = work[r][c]
        for i in range(r):
            q = work[i][c] // p
            if q:
                work[i] = [x - q * y for x, y in zip(work[i], work[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
    b = IntMatrix.from_rows(work, cols=n)
    trans = IntMatrix.from_rows(u, cols=m)
    if trans @ a != b:
        raise AssertionError("HNF witness failed re-multiplication check")
    return HnfResult(hnf=b, transform=trans, rank=r)


def kernel_basis(a: IntMatrix) -> IntMatrix:
    """Basis of the integer kernel ``{x : a @ x = 0}``, one vector per row.

    Computed from the unimodular witness of ``hnf(a.transpose())``: the
    rows of the witness beyond the rank kill every column of ``a``.
    """
    res = hnf(a.transpose())
    rows = res.transform.entries[res.rank:]
    return IntMatrix.from_rows(rows, cols=a.cols)


# ---------------------------------------------------------------------------
# Minors, adjugates, transversion


def max_minors(v: IntMatrix) -> tuple[int, ...]:
    """Signed maximal minors of an ``n x (n+1)`` matrix.

    Entry ``j`` is the determinant of ``v`` with column ``j`` deleted.
    """
    if v.cols != v.rows + 1:
        raise DimensionError(f"expected n x (n+1), got {v.rows}x{v.cols}")
    return tuple(v.delete_column(j).det() for j in range(v.cols))


def _adjugate_cofactor(rows: tuple[tuple[int, ...], ...]) -> list[list[int]]:
    n = len(rows)

    def det(rs: list[tuple[int, ...]]) -> int:
        if not rs:
            return 1
        if len(rs) == 1:
            return rs[0][0]
        if len(rs) == 2:
            return rs[0][0] * rs[1][1] - rs[0][1] * rs[1][0]
        return sum((-1) ** j * rs[0][j] * det([r[:j] + r[j + 1:] for r in rs[1:]])
                   for j in range(len(rs)))

    def minor(i: int, j: int) -> list[tuple[int, ...]]:
        return [r[:j] + r[j + 1:] for k, r in enumerate(rows) if k != i]

    return [[(-1) ** (i + j) * det(minor(j, i)) for j in range(n)] for i in range(n)]


def _adjugate_jordan(rows: tuple[tuple[int, ...], ...], det: int) -> list[list[int]]:
    # Fraction-free Gauss-Jordan on [A | I]; the left block ends as d*I
    # with |d| = |det A| and the right block as the matching multiple of
    # the inverse, so a single sign fixes the adjugate.
    n = len(rows)
    mat = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(rows)]
    width = 2 * n
    prev = 1
    for k in range(n):
        if mat[k][k] == 0:
            for i in range(k + 1, n):
                if mat[i][k]:
                    mat[k], mat[i] = mat[i], mat[k]
                    break
            else:
                raise SingularMatrixError("matrix is singular")
        for i in range(n):
            if i == k:
                continue
            mik, mkk = mat[i][k], mat[k][k]
            row_i, row_k = mat[i], mat[k]
            for j in range(width):
                if j == k:
                    continue
                num = row_i[j] * mkk - mik * row_k[j]
                q, r = divmod(num, prev)
                assert r == 0
                row_i[j] = q
            row_i[k] = 0
        prev = mat[k][k]
    d = mat[n - 1][n - 1]
    for i in range(n):
        for j in range(n):
            if mat[i][j] != (d if i == j else 0):
                raise AssertionError("elimination did not reach a scalar block")
    assert abs(d) == abs(det)
    s = 1 if d == det else -1
    return [[s * mat[i][n + j] for j in range(n)] for i in range(n)]


def adjoint(w: IntMatrix) -> IntMatrix:
    """Adjugate matrix: ``adjoint(w) @ w == det(w) * identity`` exactly.

    Cofactor expansion up to 3x3, fraction-free elimination above that
    to keep intermediate entries polynomial in the input size.
    """
    if not w.is_square:
        raise DimensionError("adjugate of a non-square matrix")
    d = w.det()
    if d == 0:
        raise SingularMatrixError("adjugate requires a nonzero determinant")
    if w.rows <= 3:
        adj = _adjugate_cofactor(w.entries)
    else:
        adj = _adjugate_jordan(w.entries, d)
    out = IntMatrix.from_rows(adj)
    if out @ w != IntMatrix.identity(w.rows).scaled(d):
        raise AssertionError("adjugate failed its defining identity")
    return out


def transverse(a: RatMatrix) -> RatMatrix:
    """Transposed inverse of a square invertible rational matrix."""
    if not a.is_square:
        raise DimensionError("transversion of a non-square matrix")
    return a.inverse().transpose()


def what_matrix(w: IntMatrix) -> IntMatrix:
    """Row-normalized, sign-corrected adjugate.

    Divides each adjugate row by its gcd and fixes the overall sign so
    that ``what_matrix(w) @ w`` is diagonal with positive entries, each
    dividing ``|det w|``.  This is the exact inverse of the weighted
    transversion that maps fan matrices to polytope matrices.
    """
    adj = adjoint(w)
    d = w.det()
    sign = 1 if d > 0 else -1
    out_rows = []
    for row in adj.entries:
        g = 0
        for x in row:
            g = gcd(g, x)
        out_rows.append([sign * x // g for x in row])
    out = IntMatrix.from_rows(out_rows)
    prod = out @ w
    for i in range(w.rows):
        for j in range(w.rows):
            x = prod.entries[i][j]
            if i == j:
                if x <= 0 or abs(d) % x != 0:
                    raise AssertionError("normalized adjugate product is not admissible")
            elif x != 0:
                raise AssertionError("normalized adjugate product is not diagonal")
    return out


def row_gcds(m: IntMatrix) -> tuple[int, ...]:
    """gcd of each row's entries (0 for an all-zero row)."""
    out = []
    for row in m.entries:
        g = 0
        for x in row:
            g = gcd(g, x)
        out.append(g)
    return tuple(out)
