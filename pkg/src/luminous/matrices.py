"""Exact integer matrices and the Kronecker construction of the game matrix.

The game matrix of an m x n grid is block tridiagonal of order m*n:
tridiagonal all-ones blocks T_n on the diagonal and identity blocks on the
off-diagonals, i.e. kron(I_m, T_n) + kron(T_m, I_n) - I.  Entries are
plain Python ints, so nothing ever overflows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import gf2
from .errors import DomainError
from .limits import check_grid


@dataclass(frozen=True)
class IntMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.entries or not self.entries[0]:
            raise DomainError("matrix must be non-empty")
        width = len(self.entries[0])
        if any(len(row) != width for row in self.entries):
            raise DomainError("ragged rows")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        if n < 1:
            raise DomainError("identity order must be positive")
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix(
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def _check_same_shape(self, other: "IntMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise DomainError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def to_text(self) -> str:
        """Rows of space-separated entries, one line per row."""
        return "\n".join(" ".join(str(v) for v in row) for row in self.entries)


def tridiagonal_ones(n: int) -> IntMatrix:
    """n x n matrix with 1 on the main, sub-, and super-diagonal."""
    if n < 1:
        raise DomainError("order must be positive")
    return IntMatrix(
        tuple(
            tuple(1 if abs(i - j) <= 1 else 0 for j in range(n))
            for i in range(n)
        )
    )


def kronecker_product(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Block matrix with block (i, j) equal to a[i][j] * b."""
    out = []
    for arow in a.entries:
        for brow in b.entries:
            out.append(tuple(av * bv for av in arow for bv in brow))
    return IntMatrix(tuple(out))


def kronecker_sum(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """kron(I, a) + kron(b, I) for square a (order n) and b (order m).

    Its eigenvalues are the pairwise sums of the eigenvalues of a and b.
    """
    if not a.is_square or not b.is_square:
        raise DomainError("kronecker sum needs square inputs")
    return kronecker_product(IntMatrix.identity(b.rows), a) + kronecker_product(
        b, IntMatrix.identity(a.rows)
    )


def build_A_int(m: int, n: int) -> IntMatrix:
    """Game matrix of the m x n grid over the integers."""
    if m < 1 or n < 1:
        raise DomainError("grid dims must be positive")
    check_grid(m, n)
    return kronecker_sum(tridiagonal_ones(n), tridiagonal_ones(m)) - IntMatrix.identity(
        m * n
    )


def build_A_gf2(m: int, n: int) -> gf2.Gf2Matrix:
    """Game matrix over GF(2); same 0/1 pattern as :func:`build_A_int`.

    Rows are assembled directly from the block-tridiagonal structure
    rather than through a dense integer intermediate.
    """
    if m < 1 or n < 1:
        raise DomainError("grid dims must be positive")
    check_grid(m, n)
    words = []
    for block in range(m):
        base = block * n
        for r in range(n):
            word = 1 << (base + r)
            if r > 0:
                word |= 1 << (base + r - 1)
            if r < n - 1:
                word |= 1 << (base + r + 1)
            if block > 0:
                word |= 1 << (base - n + r)
            if block < m - 1:
                word |= 1 << (base + n + r)
            words.append(word)
    return gf2.Gf2Matrix(m * n, m * n, tuple(words))
