"""Game-level solving: solvability, solution counts, minimal press sets.

A solvable board has exactly 2**d distinct 0/1 solutions, where d is the
GF(2) nullity of the game matrix.  The minimal-press solution is found by
walking the whole solution coset in Gray-code order while d stays within
the enumeration cap, so minimality is certified at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from . import gf2
from .board import Config, GridDims, PressVector, bits_to_string
from .errors import DomainError
from .limits import check_grid
from .matrices import build_A_gf2

DEFAULT_COSET_CAP = 24

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class SolveReport:
    dims: GridDims
    solvable: bool
    nullity: int
    solution_count: int
    particular: Optional[PressVector]
    minimal: Optional[PressVector]
    minimal_weight: Optional[int]
    certified: bool

    def __post_init__(self) -> None:
        if self.solvable != (self.particular is not None):
            raise DomainError("solvable iff a particular solution is present")


def _game_system(m: int, n: int, config: Config) -> tuple[GridDims, gf2.Gf2Matrix, gf2.Gf2Vector]:
    dims = GridDims(m, n)
    if config.dims != dims:
        raise DomainError(
            f"config is {config.dims.rows}x{config.dims.cols}, expected {m}x{n}"
        )
    matrix = build_A_gf2(m, n)
    return dims, matrix, gf2.Gf2Vector(dims.cell_count, config.bits)


def is_solvable(m: int, n: int, config: Config) -> bool:
    """Whether some press set extinguishes the board."""
    _, matrix, target = _game_system(m, n, config)
    return gf2.solve(matrix, target) is not None


def solve_full(m: int, n: int, config: Config, cap: int = DEFAULT_COSET_CAP) -> SolveReport:
    """Full picture of the solution set for one board.

    With nullity d <= cap the minimal solution is the true minimum over
    the 2**d coset (ties broken by lexicographically smallest bit
    string); beyond the cap a greedy reduction is reported with
    ``certified=False``.
    """
    dims, matrix, target = _game_system(m, n, config)
    particular, basis = gf2.solve_with_basis(matrix, target)
    d = len(basis)
    if particular is None:
        return SolveReport(
            dims=dims,
            solvable=False,
            nullity=d,
            solution_count=0,
            particular=None,
            minimal=None,
            minimal_weight=None,
            certified=True,
        )
    q = dims.cell_count
    if d <= cap:
        best = _coset_minimum(particular.bits, [b.bits for b in basis], q)
        certified = True
    else:
        best = _greedy_reduce(particular.bits, [b.bits for b in basis])
        certified = False
    return SolveReport(
        dims=dims,
        solvable=True,
        nullity=d,
        solution_count=1 << d,
        particular=PressVector(dims, particular.bits),
        minimal=PressVector(dims, best),
        minimal_weight=best.bit_count(),
        certified=certified,
    )


def _coset_minimum(start: int, basis: list[int], q: int) -> int:
    """Minimum-weight element of start + span(basis).

    Gray-code walk: step t flips the basis vector indexed by the number
    of trailing zeros of t, so each coset element costs one XOR and one
    popcount.
    """
    best = start
    best_weight = start.bit_count()
    best_key: Optional[str] = None
    current = start
    for t in range(1, 1 << len(basis)):
        current ^= basis[(t & -t).bit_length() - 1]
        w = current.bit_count()
        if w > best_weight:
            continue
        if w < best_weight:
            best, best_weight, best_key = current, w, None
            continue
        if best_key is None:
            best_key = bits_to_string(best, q)
        key = bits_to_string(current, q)
        if key < best_key:
            best, best_key = current, key
    return best


def _greedy_reduce(start: int, basis: list[int]) -> int:
    """First-index greedy descent; cheap but not certified minimal."""
    current = start
    improved = True
    while improved:
        improved = False
        weight = current.bit_count()
        for b in basis:
            if (current ^ b).bit_count() < weight:
                current ^= b
                improved = True
                break
    return current


def enumerate_solutions(m: int, n: int, config: Config, cap: int = DEFAULT_COSET_CAP) -> Iterator[PressVector]:
    """All 0/1 solutions, in Gray-code order from the particular solution.

    Raises :class:`DomainError` when the nullity exceeds the cap.
    """
    dims, matrix, target = _game_system(m, n, config)
    particular, basis = gf2.solve_with_basis(matrix, target)
    if particular is None:
        return
    if len(basis) > cap:
        raise DomainError(f"nullity {len(basis)} exceeds enumeration cap {cap}")
    current = particular.bits
    yield PressVector(dims, current)
    for t in range(1, 1 << len(basis)):
        current ^= basis[(t & -t).bit_length() - 1].bits
        yield PressVector(dims, current)


def hint(m: int, n: int, config: Config) -> Optional[int]:
    """Lowest-numbered button of the minimal solution; None when there is
    nothing useful to press (board already dark or unsolvable)."""
    if config.is_zero():
        return None
    report = solve_full(m, n, config)
    if report.minimal is None or report.minimal.is_zero():
        return None
    return report.minimal.buttons()[0]


def _splitmix64(state: int) -> tuple[int, int]:
    # SplitMix64 step: advance by the 64-bit golden gamma, then finalize
    # with two xor-shift multiplies.  Chosen for exact reproducibility on
    # any platform, independent of interpreter RNG internals.
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    z ^= z >> 31
    return state, z


def random_press_vector(dims: GridDims, seed: int) -> PressVector:
    """Uniform press vector from a SplitMix64 stream seeded with ``seed``.

    64-bit output words are concatenated little-endian and truncated to
    m*n bits, so a given seed yields the same vector everywhere.
    """
    q = dims.cell_count
    state = seed & _MASK64
    bits = 0
    filled = 0
    while filled < q:
        state, word = _splitmix64(state)
        bits |= word << filled
        filled += 64
    return PressVector(dims, bits & ((1 << q) - 1))


def board_from_press(dims: GridDims, x: PressVector) -> Config:
    """Board lit by applying press set x to a dark grid (solvable by x)."""
    if x.dims != dims:
        raise DomainError("press vector dims mismatch")
    matrix = build_A_gf2(dims.rows, dims.cols)
    image = gf2.mat_vec(matrix, gf2.Gf2Vector(dims.cell_count, x.bits))
    return Config(dims, image.bits)


def random_solvable(m: int, n: int, seed: int) -> tuple[Config, PressVector]:
    """Deterministic solvable board: (A*x, x) for a seeded random x."""
    check_grid(m, n)
    dims = GridDims(m, n)
    x = random_press_vector(dims, seed)
    return board_from_press(dims, x), x
