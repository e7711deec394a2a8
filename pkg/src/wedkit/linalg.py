"""Exact dense linear algebra over the rationals.

Scalars are :class:`fractions.Fraction` (always reduced, positive
denominator, no rounding anywhere).  Matrices are immutable, dense and
row-major.  Elimination runs fraction-free (Bareiss) on integer-cleared
rows so intermediate entries stay minors of the input instead of blowing
up; back substitution returns to ``Fraction``.

Everything here is a pure function of its inputs and safe to call
concurrently.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, InputError

QQ = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)

Vector = tuple[Fraction, ...]


def rational(value) -> Fraction:
    """Coerce ints, strings like ``"3/4"``, and Fractions to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational literal {value!r}") from exc
    raise InputError(f"cannot interpret {value!r} as a rational number")


def format_rational(q: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vector(values: Iterable) -> Vector:
    return tuple(rational(v) for v in values)


class Matrix:
    """Immutable dense matrix of Fractions, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        entries = tuple(rational(e) for e in entries)
        if len(entries) != rows * cols:
            raise DimensionMismatch(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise DimensionMismatch("ragged rows")
        return cls(r, c, [e for row in rows for e in row])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def diagonal(cls, diag: Sequence) -> "Matrix":
        d = [rational(x) for x in diag]
        n = len(d)
        return cls(n, n, [d[i] if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def column(cls, values: Sequence) -> "Matrix":
        vals = [rational(v) for v in values]
        return cls(len(vals), 1, vals)

    # -- access ------------------------------------------------------

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_list(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    # -- structure ---------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(
            " ".join(format_rational(e) for e in self.row(i)) for i in range(self.rows)
        )
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- arithmetic --------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("matrix addition shape mismatch")
        return Matrix(
            self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("matrix subtraction shape mismatch")
        return Matrix(
            self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)]
        )

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c) -> "Matrix":
        c = rational(c)
        return Matrix(self.rows, self.cols, [c * a for a in self.entries])

    def __rmul__(self, c) -> "Matrix":
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other) -> "Matrix":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Matrix):
            return NotImplemented
        return mat_mul(self, other)

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square():
            raise DimensionMismatch("power of a non-square matrix")
        if k < 0:
            raise InputError("negative matrix power not supported")
        result = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def trace(self) -> Fraction:
        if not self.is_square():
            raise DimensionMismatch("trace of a non-square matrix")
        return sum((self[i, i] for i in range(self.rows)), ZERO)

    def apply(self, vec: Sequence) -> Vector:
        """Matrix times column vector."""
        v = [rational(x) for x in vec]
        if len(v) != self.cols:
            raise DimensionMismatch("vector length does not match column count")
        out = []
        for i in range(self.rows):
            base = i * self.cols
            acc = ZERO
            for j, x in enumerate(v):
                if x:
                    e = self.entries[base + j]
                    if e:
                        acc += e * x
            out.append(acc)
        return tuple(out)

    # -- serialization -----------------------------------------------

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [
                [format_rational(e) for e in self.row(i)] for i in range(self.rows)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Matrix":
        try:
            rows = data["rows"]
            cols = data["cols"]
            raw = data["entries"]
        except (TypeError, KeyError) as exc:
            raise InputError("matrix JSON needs 'rows', 'cols', 'entries'") from exc
        if len(raw) != rows or any(len(r) != cols for r in raw):
            raise InputError("matrix JSON entry grid does not match declared shape")
        return cls(rows, cols, [rational(e) for row in raw for e in row])


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Exact product, skipping zero entries of ``a``."""
    if a.cols != b.rows:
        raise DimensionMismatch(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}"
        )
    n, m, p = a.rows, a.cols, b.cols
    be = b.entries
    out = [ZERO] * (n * p)
    for i in range(n):
        arow = a.entries[i * m : (i + 1) * m]
        obase = i * p
        for k, aik in enumerate(arow):
            if not aik:
                continue
            bbase = k * p
            for j in range(p):
                bkj = be[bbase + j]
                if bkj:
                    out[obase + j] += aik * bkj
    return Matrix(n, p, out)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product with index convention (i, j) -> i * b.cols + j."""
    n = a.rows * b.rows
    m = a.cols * b.cols
    out = [ZERO] * (n * m)
    for i in range(a.rows):
        for j in range(a.cols):
            aij = a[i, j]
            if not aij:
                continue
            for k in range(b.rows):
                rbase = (i * b.rows + k) * m + j * b.cols
                bbase = k * b.cols
                for l in range(b.cols):
                    bkl = b.entries[bbase + l]
                    if bkl:
                        out[rbase + l] = aij * bkl
    return Matrix(n, m, out)


# ---------------------------------------------------------------------------
# Fraction-free elimination
# ---------------------------------------------------------------------------


def _clear_row_denominators(row: Sequence[Fraction]) -> list[int]:
    lcm = 1
    for e in row:
        d = e.denominator
        if d != 1:
            from math import gcd

            lcm = lcm // gcd(lcm, d) * d
    return [int(e * lcm) for e in row]


def _bareiss(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """In-place fraction-free row echelon; returns (rows, pivot columns).

    One-step Bareiss: every division by the previous pivot is exact, so
    entries remain minors of the original integer matrix.
    """
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        rowr = rows[r]
        for i in range(r + 1, len(rows)):
            # every row below must be rescaled each step, even when the
            # eliminated entry is already zero: the one-step division by
            # the previous pivot is exact only on the rescaled rows
            ric = rows[i][c]
            rowi = rows[i]
            for j in range(c, ncols):
                num = rowi[j] * pv - ric * rowr[j]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss exact-division invariant violated"
                rowi[j] = q
        pivots.append(c)
        prev = pv
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def _echelon(a: Matrix) -> tuple[list[list[int]], list[int]]:
    rows = [_clear_row_denominators(a.row(i)) for i in range(a.rows)]
    return _bareiss(rows)


def rank(a: Matrix) -> int:
    """Exact rank via fraction-free elimination."""
    _, pivots = _echelon(a)
    return len(pivots)


def kernel_basis(a: Matrix) -> list[Vector]:
    """Exact basis of the right null space.

    Vectors come in reduced echelon order: one per pivot-free column,
    ascending, with entry 1 at that column and 0 at the other free
    columns.
    """
    rows, pivots = _echelon(a)
    ncols = a.cols
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis: list[Vector] = []
    nrows = len(pivots)
    for f in free:
        x: list[Fraction] = [ZERO] * ncols
        x[f] = ONE
        for i in range(nrows - 1, -1, -1):
            p = pivots[i]
            s = ZERO
            rowi = rows[i]
            for j in range(p + 1, ncols):
                if rowi[j] and x[j]:
                    s += rowi[j] * x[j]
            x[p] = -s / rowi[p]
        basis.append(tuple(x))
    return basis


def solve(a: Matrix, b: Sequence) -> Vector | None:
    """Canonical particular solution of ``a x = b``; None when inconsistent.

    Free variables are set to zero, so the output is deterministic and
    reproducible across runs.
    """
    bvec = [rational(x) for x in b]
    if len(bvec) != a.rows:
        raise DimensionMismatch("right-hand side length does not match row count")
    aug_rows = []
    for i in range(a.rows):
        aug_rows.append(_clear_row_denominators(tuple(a.row(i)) + (bvec[i],)))
    rows, pivots = _bareiss(aug_rows)
    ncols = a.cols
    if pivots and pivots[-1] == ncols:
        return None  # a pivot in the augmented column: b is not in the column space
    x: list[Fraction] = [ZERO] * ncols
    for i in range(len(pivots) - 1, -1, -1):
        p = pivots[i]
        rowi = rows[i]
        s = Fraction(rowi[ncols])
        for j in range(p + 1, ncols):
            if rowi[j] and x[j]:
                s -= rowi[j] * x[j]
        x[p] = s / rowi[p]
    return tuple(x)


def rref(vectors: Sequence[Sequence]) -> list[Vector]:
    """Reduced row echelon form of a list of row vectors, zero rows dropped.

    Leading entries are normalized to 1 and cleared above and below, so
    the output is a canonical basis of the row span: two spans are equal
    iff their rref lists are equal.
    """
    work = [[rational(e) for e in row] for row in vectors]
    if not work:
        return []
    ncols = len(work[0])
    if any(len(row) != ncols for row in work):
        raise DimensionMismatch("ragged rows")
    r = 0
    pivots: list[int] = []
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        pv = work[r][c]
        if pv != 1:
            work[r] = [e / pv for e in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [e - f * g for e, g in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return [tuple(row) for row in work[:r]]
