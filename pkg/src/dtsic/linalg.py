"""Dense exact linear algebra over cyclotomic numbers.

Everything is exact: products, traces, tensor products, conjugate
transposes, rank by fraction-free elimination, and annihilating-polynomial
checks.  There are no eigensolvers here; spectra are certified through
annihilating polynomials plus trace and rank bookkeeping.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .cyclotomic import ConductorMismatch, CycNum, Rational


Entry = Union[CycNum, int, Fraction]


def _lift(x: Entry, n: int) -> CycNum:
    if isinstance(x, CycNum):
        if x.n != n:
            raise ConductorMismatch(f"conductor mismatch: {x.n} vs {n}")
        return x
    return CycNum.rational(x, n)


class ExactMatrix:
    """Immutable dense matrix whose entries share one conductor."""

    __slots__ = ("rows", "cols", "n", "entries")

    def __init__(self, rows: int, cols: int, n: int, entries: Iterable[Entry]):
        entries = tuple(_lift(e, n) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"need {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, *a):
        raise AttributeError("ExactMatrix is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Entry]], n: int) -> "ExactMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            assert len(row) == c, "ragged rows"
            flat.extend(row)
        return cls(r, c, n, flat)

    @classmethod
    def identity(cls, size: int, n: int = 1) -> "ExactMatrix":
        one = Fraction(1)
        zero = Fraction(0)
        return cls(size, size, n,
                   [one if i == j else zero for i in range(size) for j in range(size)])

    @classmethod
    def zeros(cls, rows: int, cols: int, n: int = 1) -> "ExactMatrix":
        return cls(rows, cols, n, [Fraction(0)] * (rows * cols))

    # -- access -------------------------------------------------------------

    def __getitem__(self, ij) -> CycNum:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[CycNum, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    # -- algebra --------------------------------------------------------------

    def _check_same_field(self, other: "ExactMatrix"):
        if self.n != other.n:
            raise ConductorMismatch(f"conductor mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_field(other)
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return ExactMatrix(self.rows, self.cols, self.n,
                           [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_field(other)
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return ExactMatrix(self.rows, self.cols, self.n,
                           [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, self.n,
                           [-a for a in self.entries])

    def scale(self, s: Entry) -> "ExactMatrix":
        s = _lift(s, self.n)
        return ExactMatrix(self.rows, self.cols, self.n,
                           [a * s for a in self.entries])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            return self.scale(other)
        self._check_same_field(other)
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        a, b = self.entries, other.entries
        n_mid, n_out = self.cols, other.cols
        zero = CycNum.rational(0, self.n)
        out = []
        for i in range(self.rows):
            arow = a[i * n_mid:(i + 1) * n_mid]
            for j in range(n_out):
                acc = zero
                for k in range(n_mid):
                    x = arow[k]
                    if x.is_zero():
                        continue
                    y = b[k * n_out + j]
                    if y.is_zero():
                        continue
                    acc = acc + x * y
                out.append(acc)
        return ExactMatrix(self.rows, n_out, self.n, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and all(
            a == b for a, b in zip(self.entries, other.entries)
        )

    __hash__ = None

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, self.n,
                           [self[j, i] for i in range(self.cols) for j in range(self.rows)])

    def dagger(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, self.n,
                           [self[j, i].conj() for i in range(self.cols) for j in range(self.rows)])

    def trace(self) -> CycNum:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        acc = CycNum.rational(0, self.n)
        for i in range(self.rows):
            acc = acc + self[i, i]
        return acc

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        """Kronecker product, row-major convention:
        entry ((i1*rows_b + i2), (j1*cols_b + j2)) = a(i1,j1) * b(i2,j2).
        """
        self._check_same_field(other)
        rows = self.rows * other.rows
        cols = self.cols * other.cols
        out = [None] * (rows * cols)
        for i1 in range(self.rows):
            for j1 in range(self.cols):
                a = self[i1, j1]
                for i2 in range(other.rows):
                    base = (i1 * other.rows + i2) * cols + j1 * other.cols
                    for j2 in range(other.cols):
                        out[base + j2] = a * other[i2, j2]
        return ExactMatrix(rows, cols, self.n, out)

    # -- predicates ------------------------------------------------------------

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def is_hermitian(self) -> bool:
        return self.rows == self.cols and self == self.dagger()

    # -- rank and spectra ---------------------------------------------------------

    def rank(self) -> int:
        """Exact rank via fraction-free (Bareiss) elimination."""
        m = [list(self.row(i)) for i in range(self.rows)]
        nrows, ncols = self.rows, self.cols
        # scale rows by the lcm of coefficient denominators: cheap, keeps
        # the Bareiss updates integral when the input is integral
        for i in range(nrows):
            d = 1
            for e in m[i]:
                for c in e.coeffs:
                    d = d * c.denominator // math.gcd(d, c.denominator)
            if d != 1:
                m[i] = [e * d for e in m[i]]
        rank = 0
        prev = CycNum.rational(1, self.n)
        row = 0
        for col in range(ncols):
            pivot_row = None
            for r in range(row, nrows):
                if not m[r][col].is_zero():
                    pivot_row = r
                    break
            if pivot_row is None:
                continue
            if pivot_row != row:
                m[row], m[pivot_row] = m[pivot_row], m[row]
            pivot = m[row][col]
            for r in range(row + 1, nrows):
                mr, mrow = m[r], m[row]
                head = mr[col]
                for c in range(col, ncols):
                    mr[c] = (mr[c] * pivot - head * mrow[c]) / prev
            prev = pivot
            rank += 1
            row += 1
            if row == nrows:
                break
        return rank

    def nullity(self) -> int:
        return self.cols - self.rank()

    def annihilates(self, roots: Sequence[Rational]) -> bool:
        """True iff prod_r (A - r*I) is exactly the zero matrix."""
        if self.rows != self.cols:
            raise ValueError("annihilating check needs a square matrix")
        eye = ExactMatrix.identity(self.rows, self.n)
        prod = None
        for r in roots:
            factor = self - eye.scale(r)
            prod = factor if prod is None else prod * factor
            if prod.is_zero():
                return True
        return prod is not None and prod.is_zero()

    # -- export ------------------------------------------------------------------

    def to_json(self):
        return {
            "rows": self.rows,
            "cols": self.cols,
            "conductor": self.n,
            "entries": [e.to_json() for e in self.entries],
        }

    def to_complex_rows(self) -> list[list[complex]]:
        return [[e.to_complex() for e in self.row(i)] for i in range(self.rows)]

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, conductor={self.n})"
