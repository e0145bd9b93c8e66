"""Closed-form singularity test for the game matrix from (m, n) alone.

The m x n game matrix is singular over the reals exactly when one of
three congruence conditions holds; each condition corresponds to an index
pair whose eigenvalue cancels to zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError

CONDITION_TEXT = {
    "C1": "m = 2 (mod 3) and n odd",
    "C2": "m odd and n = 2 (mod 3)",
    "C3": "m = 4 (mod 5) and n = 4 (mod 5)",
}


@dataclass(frozen=True)
class SingularityVerdict:
    singular: bool
    conditions: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.singular != bool(self.conditions):
            raise DomainError("verdict must be singular iff some condition fired")


def classify(m: int, n: int) -> SingularityVerdict:
    """Evaluate all three conditions; singular when any holds."""
    if m < 1 or n < 1:
        raise DomainError("grid dims must be positive")
    fired = []
    if m % 3 == 2 and n % 2 == 1:
        fired.append("C1")
    if m % 2 == 1 and n % 3 == 2:
        fired.append("C2")
    if m % 5 == 4 and n % 5 == 4:
        fired.append("C3")
    return SingularityVerdict(singular=bool(fired), conditions=tuple(fired))
