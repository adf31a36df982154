"""Exact rational vectors, matrices, Gram determinants and linear solving.

Everything is built on ``fractions.Fraction``; no floating point enters any
computation.  Vectors and matrices are immutable (tuple-backed) so they can
be shared freely and used as dictionary keys.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegenerateBasisError, SingularSystemError

Rat = Fraction


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class QVector:
    """Immutable vector with exact rational entries."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable):
        object.__setattr__(self, "entries", tuple(_frac(x) for x in entries))

    def __setattr__(self, name, value):
        raise AttributeError("QVector is immutable")

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return isinstance(other, QVector) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other: "QVector") -> "QVector":
        return QVector(a + b for a, b in zip(self.entries, other.entries, strict=True))

    def __sub__(self, other: "QVector") -> "QVector":
        return QVector(a - b for a, b in zip(self.entries, other.entries, strict=True))

    def __neg__(self) -> "QVector":
        return QVector(-a for a in self.entries)

    def __mul__(self, scalar) -> "QVector":
        s = _frac(scalar)
        return QVector(a * s for a in self.entries)

    __rmul__ = __mul__

    def dot(self, other: "QVector") -> Fraction:
        return sum((a * b for a, b in zip(self.entries, other.entries, strict=True)), Fraction(0))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    @staticmethod
    def zero(n: int) -> "QVector":
        return QVector([0] * n)

    def __repr__(self):
        return "QVector(%s)" % (", ".join(str(a) for a in self.entries))


class QMatrix:
    """Immutable matrix with exact rational entries, stored by rows."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rs = tuple(tuple(_frac(x) for x in row) for row in rows)
        if rs and any(len(r) != len(rs[0]) for r in rs):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rs)

    def __setattr__(self, name, value):
        raise AttributeError("QMatrix is immutable")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, i):
        return self.rows[i]

    def __eq__(self, other):
        return isinstance(other, QMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def row(self, i) -> QVector:
        return QVector(self.rows[i])

    def col(self, j) -> QVector:
        return QVector(r[j] for r in self.rows)

    def transpose(self) -> "QMatrix":
        return QMatrix(zip(*self.rows)) if self.rows else QMatrix([])

    def matvec(self, v: Sequence) -> QVector:
        return QVector(sum((a * _frac(x) for a, x in zip(row, v, strict=True)), Fraction(0))
                       for row in self.rows)

    def matmul(self, other: "QMatrix") -> "QMatrix":
        cols = other.transpose().rows
        return QMatrix(
            [sum((a * b for a, b in zip(row, col, strict=True)), Fraction(0)) for col in cols]
            for row in self.rows
        )

    @staticmethod
    def identity(n: int) -> "QMatrix":
        return QMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def det(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        return _eliminate([list(r) for r in self.rows])[0]

    def rank(self) -> int:
        rows = [list(r) for r in self.rows]
        return _row_reduce(rows)

    def inverse(self) -> "QMatrix":
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        cols = [solve_linear(self, QVector([1 if i == j else 0 for i in range(n)]))
                for j in range(n)]
        return QMatrix([[cols[j][i] for j in range(n)] for i in range(n)])

    def __repr__(self):
        return "QMatrix(%d x %d)" % (self.nrows, self.ncols)


def _eliminate(rows):
    """In-place forward elimination; returns (det, echelon rows).

    Pivot selection is deterministic: the first row with a nonzero entry in
    the pivot column.
    """
    n = len(rows)
    det = Fraction(1)
    for c in range(n):
        piv = None
        for r in range(c, n):
            if rows[r][c] != 0:
                piv = r
                break
        if piv is None:
            return Fraction(0), rows
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det *= rows[c][c]
        inv = 1 / rows[c][c]
        for r in range(c + 1, n):
            f = rows[r][c] * inv
            if f == 0:
                continue
            for k in range(c, len(rows[r])):
                rows[r][k] -= f * rows[c][k]
    return det, rows


def _row_reduce(rows) -> int:
    """Reduce arbitrary rows to echelon form in place; returns the rank."""
    if not rows:
        return 0
    nr, nc = len(rows), len(rows[0])
    rank = 0
    for c in range(nc):
        piv = None
        for r in range(rank, nr):
            if rows[r][c] != 0:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][c]
        for r in range(rank + 1, nr):
            f = rows[r][c] * inv
            if f != 0:
                for k in range(c, nc):
                    rows[r][k] -= f * rows[rank][k]
        rank += 1
        if rank == nr:
            break
    return rank


def solve_linear(m: QMatrix, b: QVector) -> QVector:
    """Solve Mx = b exactly for square nonsingular M.

    Raises SingularSystemError("singular system") otherwise; the caller
    decides what to do with singular input.
    """
    n = m.nrows
    if n != m.ncols or len(b) != n:
        raise ValueError("solve_linear needs a square system")
    rows = [list(m.rows[r]) + [b[r]] for r in range(n)]
    for c in range(n):
        piv = None
        for r in range(c, n):
            if rows[r][c] != 0:
                piv = r
                break
        if piv is None:
            raise SingularSystemError("singular system")
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
        inv = 1 / rows[c][c]
        for r in range(c + 1, n):
            f = rows[r][c] * inv
            if f == 0:
                continue
            for k in range(c, n + 1):
                rows[r][k] -= f * rows[c][k]
    x = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        s = rows[r][n] - sum((rows[r][k] * x[k] for k in range(r + 1, n)), Fraction(0))
        x[r] = s / rows[r][r]
    return QVector(x)


def nullspace_basis(m: QMatrix) -> list[QVector]:
    """Exact basis of {x : Mx = 0} (possibly empty)."""
    rows = [list(r) for r in m.rows]
    nr, nc = len(rows), m.ncols
    pivots = []
    rank = 0
    for c in range(nc):
        piv = None
        for r in range(rank, nr):
            if rows[r][c] != 0:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][c]
        for r in range(nr):
            if r != rank and rows[r][c] != 0:
                f = rows[r][c] * inv
                for k in range(nc):
                    rows[r][k] -= f * rows[rank][k]
        pivots.append(c)
        rank += 1
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for fc in free:
        x = [Fraction(0)] * nc
        x[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            x[pc] = -rows[r][fc] / rows[r][pc]
        basis.append(QVector(x))
    return basis


def gram_matrix(vectors: Sequence[QVector]) -> QMatrix:
    return QMatrix([[u.dot(v) for v in vectors] for u in vectors])


def gram_det(vectors: Sequence[QVector]) -> Fraction:
    """Determinant of the Gram matrix of `vectors` (1 for the empty list).

    For a lattice basis this equals the squared lattice determinant.
    Linearly dependent input is rejected.
    """
    if not vectors:
        return Fraction(1)
    d = gram_matrix(vectors).det()
    if d == 0:
        raise DegenerateBasisError("degenerate basis")
    return d


def rational_to_str(q: Fraction) -> str:
    """Serialize p/q with no precision loss ("3", "-2/7", ...)."""
    q = _frac(q)
    return str(q.numerator) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)


def rational_from_str(s: str) -> Fraction:
    return Fraction(s)
