"""Lights Out solver and spectral-analysis toolkit for m x n grids."""

from .board import (
    Config,
    GridDims,
    PressVector,
    apply_presses,
    linear_index,
    press,
    toggled_set,
)
from .criterion import SingularityVerdict, classify
from .errors import DomainError, LuminousError, SizeLimitError
from .gf2 import Gf2Matrix, Gf2Vector, null_basis, rank, solve
from .matrices import (
    IntMatrix,
    build_A_gf2,
    build_A_int,
    kronecker_product,
    kronecker_sum,
    tridiagonal_ones,
)
from .solver import (
    SolveReport,
    hint,
    is_solvable,
    random_solvable,
    solve_full,
)
from .spectral import (
    DetResult,
    cos_product_identity,
    det_bareiss,
    det_closed_2xn,
    det_eigenproduct,
    eigenvalue,
    eigenvalue_is_zero_exact,
)
from .sweep import SweepCell, SweepReport, run_sweep

__version__ = "0.1.0"

__all__ = [
    "Config",
    "DetResult",
    "DomainError",
    "Gf2Matrix",
    "Gf2Vector",
    "GridDims",
    "IntMatrix",
    "LuminousError",
    "PressVector",
    "SingularityVerdict",
    "SizeLimitError",
    "SolveReport",
    "SweepCell",
    "SweepReport",
    "apply_presses",
    "build_A_gf2",
    "build_A_int",
    "classify",
    "cos_product_identity",
    "det_bareiss",
    "det_closed_2xn",
    "det_eigenproduct",
    "eigenvalue",
    "eigenvalue_is_zero_exact",
    "hint",
    "is_solvable",
    "kronecker_product",
    "kronecker_sum",
    "linear_index",
    "null_basis",
    "press",
    "random_solvable",
    "rank",
    "run_sweep",
    "solve",
    "solve_full",
    "toggled_set",
    "tridiagonal_ones",
]
