"""Size caps for grid-shaped computations.

The default cap keeps everything at desk scale (a 64x64 grid yields a
4096x4096 game matrix).  The ``LUMINOUS_SIZE_LIMIT`` environment variable
overrides the per-side grid cap.
"""

from __future__ import annotations

import os

from .errors import SizeLimitError

DEFAULT_GRID_LIMIT = 64

# Exact elimination on matrices larger than this order is refused: entry
# growth is Hadamard-bounded but cubic work on big integers stops being
# desk-scale beyond a 16x16 grid.
BAREISS_ORDER_LIMIT = 256

ENV_VAR = "LUMINOUS_SIZE_LIMIT"


def grid_limit() -> int:
    """Maximum grid side length currently in effect."""
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return DEFAULT_GRID_LIMIT
    try:
        value = int(raw)
    except ValueError as exc:
        raise SizeLimitError(f"{ENV_VAR} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise SizeLimitError(f"{ENV_VAR} must be positive, got {value}")
    return value


def check_grid(rows: int, cols: int) -> None:
    """Raise :class:`SizeLimitError` if a rows x cols grid exceeds the cap."""
    limit = grid_limit()
    if rows > limit or cols > limit:
        raise SizeLimitError(
            f"grid {rows}x{cols} exceeds the {limit}x{limit} cap "
            f"(override with {ENV_VAR})"
        )
