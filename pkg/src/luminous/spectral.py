"""Spectrum and determinants of the game matrix.

The eigenvalues of the m x n game matrix are
``1 + 2*(cos(j*pi/(m+1)) + cos(k*pi/(n+1)))`` for j = 1..m, k = 1..n, so
the determinant is their product.  Zero eigenvalues are decided exactly:
with a = j/(m+1) and b = k/(n+1) in lowest terms, the sum of cosines hits
-1/2 only at the four rational pairs listed below, never elsewhere, so no
floating-point threshold is involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DomainError, SizeLimitError
from .limits import BAREISS_ORDER_LIMIT
from .matrices import IntMatrix, build_A_int

# The only reduced (j/(m+1), k/(n+1)) pairs with
# cos(a*pi) + cos(b*pi) == -1/2; both cosines are then rational or
# conjugate quadratic irrationals that cancel exactly.
ZERO_COSINE_PAIRS = frozenset(
    {
        (Fraction(1, 2), Fraction(2, 3)),
        (Fraction(2, 3), Fraction(1, 2)),
        (Fraction(2, 5), Fraction(4, 5)),
        (Fraction(4, 5), Fraction(2, 5)),
    }
)


@dataclass(frozen=True)
class DetResult:
    """Determinant of a game matrix along the eigenvalue route.

    ``exact_zero`` comes from the rational zero-eigenvalue test;
    ``float_value`` is the double-precision eigenvalue product (0.0 when
    exact_zero); ``exact_value`` is filled in when the integer
    elimination oracle was also run.
    """

    exact_zero: bool
    float_value: float
    exact_value: Optional[int] = None

    def __post_init__(self) -> None:
        if self.exact_zero and self.float_value != 0.0:
            raise DomainError("exact-zero result must carry a zero float value")


def _check_indices(m: int, n: int, j: int, k: int) -> None:
    if m < 1 or n < 1:
        raise DomainError("grid dims must be positive")
    if not 1 <= j <= m:
        raise DomainError(f"j={j} out of range 1..{m}")
    if not 1 <= k <= n:
        raise DomainError(f"k={k} out of range 1..{n}")


def eigenvalue(m: int, n: int, j: int, k: int) -> float:
    """Eigenvalue indexed by (j, k) of the m x n game matrix."""
    _check_indices(m, n, j, k)
    return 1.0 + 2.0 * (math.cos(j * math.pi / (m + 1)) + math.cos(k * math.pi / (n + 1)))


def eigenvalue_is_zero_exact(m: int, n: int, j: int, k: int) -> bool:
    """Whether the (j, k) eigenvalue is exactly zero, decided rationally."""
    _check_indices(m, n, j, k)
    return (Fraction(j, m + 1), Fraction(k, n + 1)) in ZERO_COSINE_PAIRS


def zero_eigen_indices(m: int, n: int) -> list[tuple[int, int]]:
    """All (j, k) index pairs whose eigenvalue is exactly zero."""
    if m < 1 or n < 1:
        raise DomainError("grid dims must be positive")
    out = []
    for j in range(1, m + 1):
        alpha = Fraction(j, m + 1)
        for k in range(1, n + 1):
            if (alpha, Fraction(k, n + 1)) in ZERO_COSINE_PAIRS:
                out.append((j, k))
    return out


def _pairwise_product(values: list[float]) -> float:
    # Balanced multiplication keeps the relative rounding error bounded
    # regardless of how m*n factors are ordered.
    if len(values) == 1:
        return values[0]
    mid = len(values) // 2
    return _pairwise_product(values[:mid]) * _pairwise_product(values[mid:])


def det_eigenproduct(m: int, n: int) -> DetResult:
    """Determinant as the eigenvalue product.

    If any eigenvalue is exactly zero (rational test) the result is an
    exact zero; otherwise the product is evaluated in double precision.
    """
    if m < 1 or n < 1:
        raise DomainError("grid dims must be positive")
    if zero_eigen_indices(m, n):
        return DetResult(exact_zero=True, float_value=0.0)
    values = [
        eigenvalue(m, n, j, k) for j in range(1, m + 1) for k in range(1, n + 1)
    ]
    return DetResult(exact_zero=False, float_value=_pairwise_product(values))


def det_bareiss(mat: IntMatrix) -> int:
    """Exact integer determinant by fraction-free elimination.

    Every intermediate entry is a minor of the input, so divisions are
    exact and magnitudes stay Hadamard-bounded.
    """
    if not mat.is_square:
        raise DomainError(f"matrix is {mat.rows}x{mat.cols}, not square")
    k = mat.rows
    if k > BAREISS_ORDER_LIMIT:
        raise SizeLimitError(f"order {k} exceeds the {BAREISS_ORDER_LIMIT} cap")
    a = [list(row) for row in mat.entries]
    sign = 1
    prev = 1
    for r in range(k - 1):
        if a[r][r] == 0:
            for i in range(r + 1, k):
                if a[i][r] != 0:
                    a[r], a[i] = a[i], a[r]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[r][r]
        arow = a[r]
        for i in range(r + 1, k):
            airow = a[i]
            lead = airow[r]
            airow[r + 1 :] = [
                (pivot * airow[j] - lead * arow[j]) // prev for j in range(r + 1, k)
            ]
            airow[r] = 0
        prev = pivot
    return sign * a[k - 1][k - 1]


def det_full(m: int, n: int) -> DetResult:
    """Eigenvalue-product determinant plus, when affordable, the exact oracle."""
    result = det_eigenproduct(m, n)
    if m * n <= BAREISS_ORDER_LIMIT:
        exact = det_bareiss(build_A_int(m, n))
        result = DetResult(result.exact_zero, result.float_value, exact)
    return result


def det_closed_2xn(n: int) -> int:
    """Determinant of the 2 x n game matrix in closed form.

    Zero for odd n; (-1)**(n/2) * (n+1) for even n.
    """
    if n < 1:
        raise DomainError("n must be positive")
    if n % 2 == 1:
        return 0
    return (n + 1) if (n // 2) % 2 == 0 else -(n + 1)


def cos_product_identity(n: int) -> tuple[float, float]:
    """Both sides of prod_{k=1}^{n-1} cos(k*pi/n) = sin(n*pi/2) / 2**(n-1).

    The left side is evaluated in double precision; the right side is
    built exactly from n mod 4, since sin(n*pi/2) cycles through
    0, 1, 0, -1.
    """
    if n < 1:
        raise DomainError("n must be positive")
    lhs = 1.0
    for k in range(1, n):
        lhs *= math.cos(k * math.pi / n)
    residue = n % 4
    if residue == 1:
        rhs = math.ldexp(1.0, 1 - n)
    elif residue == 3:
        rhs = -math.ldexp(1.0, 1 - n)
    else:
        rhs = 0.0
    return lhs, rhs
