"""Grid geometry, button numbering, and press dynamics of the game.

Buttons are numbered 1..m*n row by row (row-major).  Light states and
press sets are bit vectors over the same numbering; the text form is a
string of '0'/'1' characters with button 1 first.  Internally a vector is
a single Python int with button i stored at bit i-1, so XOR on whole
boards is one machine-word-parallel operation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError


def bits_to_string(bits: int, length: int) -> str:
    """Render a bit-packed vector as its text form (button 1 first)."""
    return "".join("1" if (bits >> i) & 1 else "0" for i in range(length))


def string_to_bits(text: str, length: int) -> int:
    if len(text) != length:
        raise DomainError(f"expected a bit string of length {length}, got {len(text)}")
    bits = 0
    for i, ch in enumerate(text):
        if ch == "1":
            bits |= 1 << i
        elif ch != "0":
            raise DomainError(f"bit string may contain only '0'/'1', got {ch!r}")
    return bits


@dataclass(frozen=True)
class GridDims:
    """Shape of the button grid: ``rows`` x ``cols``, both at least 1."""

    rows: int
    cols: int

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise DomainError(f"grid dims must be positive, got {self.rows}x{self.cols}")

    @property
    def cell_count(self) -> int:
        return self.rows * self.cols


@dataclass(frozen=True)
class _GridBits:
    dims: GridDims
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits < (1 << self.dims.cell_count):
            raise DomainError("bit vector does not fit the grid")

    @classmethod
    def from_string(cls, dims: GridDims, text: str):
        return cls(dims, string_to_bits(text, dims.cell_count))

    @classmethod
    def from_buttons(cls, dims: GridDims, buttons):
        """Build from 1-based button numbers."""
        bits = 0
        for j in buttons:
            if not 1 <= j <= dims.cell_count:
                raise DomainError(f"button {j} out of range 1..{dims.cell_count}")
            bits |= 1 << (j - 1)
        return cls(dims, bits)

    def to_string(self) -> str:
        return bits_to_string(self.bits, self.dims.cell_count)

    def buttons(self) -> tuple[int, ...]:
        """1-based numbers of the set positions, ascending."""
        return tuple(
            i + 1 for i in range(self.dims.cell_count) if (self.bits >> i) & 1
        )

    def weight(self) -> int:
        return self.bits.bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0


class Config(_GridBits):
    """Light states of a board, one bit per button (1 = lit)."""


class PressVector(_GridBits):
    """Which buttons are pressed an odd number of times (1 = pressed)."""


def linear_index(dims: GridDims, row: int, col: int) -> int:
    """Button number of the cell at (row, col), both 1-based."""
    if not 1 <= row <= dims.rows:
        raise DomainError(f"row {row} out of range 1..{dims.rows}")
    if not 1 <= col <= dims.cols:
        raise DomainError(f"col {col} out of range 1..{dims.cols}")
    return (row - 1) * dims.cols + col


def toggled_set(dims: GridDims, j: int) -> set[int]:
    """Buttons whose lights flip when button j is pressed.

    That is j itself plus its orthogonal neighbours; neighbours beyond an
    edge are dropped, so the set has 3 to 5 elements on grids with at
    least two rows and two columns.
    """
    return {i + 1 for i in _toggle_positions(dims, j)}


def toggle_mask(dims: GridDims, j: int) -> int:
    """Bit-packed form of :func:`toggled_set` (bit i-1 = button i)."""
    mask = 0
    for i in _toggle_positions(dims, j):
        mask |= 1 << i
    return mask


def _toggle_positions(dims: GridDims, j: int):
    q = dims.cell_count
    if not 1 <= j <= q:
        raise DomainError(f"button {j} out of range 1..{q}")
    n = dims.cols
    row, col = divmod(j - 1, n)
    yield j - 1
    if row > 0:
        yield j - 1 - n
    if row < dims.rows - 1:
        yield j - 1 + n
    if col > 0:
        yield j - 2
    if col < n - 1:
        yield j


def press(config: Config, j: int) -> Config:
    """Board state after pressing button j once."""
    return Config(config.dims, config.bits ^ toggle_mask(config.dims, j))


def apply_presses(config: Config, x: PressVector) -> Config:
    """Board state after pressing every button set in x once.

    Presses commute, so the result does not depend on any ordering.
    """
    if x.dims != config.dims:
        raise DomainError(
            f"dims mismatch: config is {config.dims.rows}x{config.dims.cols}, "
            f"presses are {x.dims.rows}x{x.dims.cols}"
        )
    bits = config.bits
    rest = x.bits
    while rest:
        low = rest & -rest
        bits ^= toggle_mask(config.dims, low.bit_length())
        rest ^= low
    return Config(config.dims, bits)
