"""Dense bit-packed linear algebra over GF(2).

Rows are plain Python ints used as bitsets (bit j = column j), which makes
a row XOR one arbitrary-precision machine operation.  Elimination always
picks the leftmost pivot column and the topmost available row, so ranks,
particular solutions, and null-space bases are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import DomainError, SizeLimitError

MAX_DIM = 4096


@dataclass(frozen=True)
class Gf2Vector:
    length: int
    bits: int

    def __post_init__(self) -> None:
        if self.length < 1:
            raise DomainError("vector length must be positive")
        if not 0 <= self.bits < (1 << self.length):
            raise DomainError("vector bits exceed declared length")

    def __getitem__(self, i: int) -> int:
        return (self.bits >> i) & 1

    def weight(self) -> int:
        return self.bits.bit_count()


@dataclass(frozen=True)
class Gf2Matrix:
    rows: int
    cols: int
    row_words: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise DomainError("matrix dims must be positive")
        if self.rows > MAX_DIM or self.cols > MAX_DIM:
            raise SizeLimitError(f"matrix exceeds {MAX_DIM}x{MAX_DIM}")
        if len(self.row_words) != self.rows:
            raise DomainError("row count does not match declared rows")
        full = (1 << self.cols) - 1
        for word in self.row_words:
            if word & ~full:
                raise DomainError("row has bits beyond declared cols")

    @classmethod
    def from_rows(cls, entries: Iterable[Iterable[int]]) -> "Gf2Matrix":
        """Build from an iterable of 0/1 rows."""
        words = []
        cols = None
        for row in entries:
            row = list(row)
            if cols is None:
                cols = len(row)
            elif len(row) != cols:
                raise DomainError("ragged rows")
            word = 0
            for j, v in enumerate(row):
                if v & 1:
                    word |= 1 << j
            words.append(word)
        if not words or not cols:
            raise DomainError("matrix must be non-empty")
        return cls(len(words), cols, tuple(words))

    def entry(self, i: int, j: int) -> int:
        return (self.row_words[i] >> j) & 1

    def column_bits(self, j: int) -> int:
        """Column j packed as an int (bit i = row i)."""
        if not 0 <= j < self.cols:
            raise DomainError(f"column {j} out of range")
        out = 0
        for i, word in enumerate(self.row_words):
            if (word >> j) & 1:
                out |= 1 << i
        return out


def _rref(work: list[int], cols: int) -> list[int]:
    """Reduce ``work`` in place over the first ``cols`` columns.

    Bits above ``cols`` (e.g. an augmented column) ride along in the row
    XORs but are never chosen as pivots.  Returns the pivot columns in
    order.
    """
    pivots: list[int] = []
    r = 0
    nrows = len(work)
    for c in range(cols):
        bit = 1 << c
        piv = next((i for i in range(r, nrows) if work[i] & bit), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        row = work[r]
        for i in range(nrows):
            if i != r and work[i] & bit:
                work[i] ^= row
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rank(m: Gf2Matrix) -> int:
    work = list(m.row_words)
    return len(_rref(work, m.cols))


def mat_vec(m: Gf2Matrix, x: Gf2Vector) -> Gf2Vector:
    if x.length != m.cols:
        raise DomainError(f"vector length {x.length} != matrix cols {m.cols}")
    out = 0
    for i, word in enumerate(m.row_words):
        if (word & x.bits).bit_count() & 1:
            out |= 1 << i
    return Gf2Vector(m.rows, out)


def solve(m: Gf2Matrix, c: Gf2Vector) -> Optional[Gf2Vector]:
    """One solution of m*x = c, or None if the system is inconsistent.

    The returned solution sets every free variable to zero, so it is
    fixed by the pivot order.
    """
    x, _ = solve_with_basis(m, c)
    return x


def null_basis(m: Gf2Matrix) -> list[Gf2Vector]:
    """Basis of {x : m*x = 0}, one vector per free column, ascending."""
    work = list(m.row_words)
    pivots = _rref(work, m.cols)
    return _basis_from_rref(work, pivots, m.cols)


def solve_with_basis(
    m: Gf2Matrix, c: Gf2Vector
) -> tuple[Optional[Gf2Vector], list[Gf2Vector]]:
    """Particular solution plus null-space basis from one elimination."""
    if c.length != m.rows:
        raise DomainError(f"rhs length {c.length} != matrix rows {m.rows}")
    aug = 1 << m.cols
    work = [
        word | (aug if (c.bits >> i) & 1 else 0)
        for i, word in enumerate(m.row_words)
    ]
    pivots = _rref(work, m.cols)
    basis = _basis_from_rref(work, pivots, m.cols)
    mask = aug - 1
    for row in work:
        if row & aug and not row & mask:
            return None, basis
    x = 0
    for r, p in enumerate(pivots):
        if work[r] & aug:
            x |= 1 << p
    return Gf2Vector(m.cols, x), basis


def _basis_from_rref(work: list[int], pivots: list[int], cols: int) -> list[Gf2Vector]:
    pivot_set = set(pivots)
    basis = []
    for f in range(cols):
        if f in pivot_set:
            continue
        fbit = 1 << f
        v = fbit
        for r, p in enumerate(pivots):
            if work[r] & fbit:
                v |= 1 << p
        basis.append(Gf2Vector(cols, v))
    return basis
