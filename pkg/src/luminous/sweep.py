"""Cross-validation sweep: congruence verdict vs GF(2) nullity vs parity.

For every grid up to a side cap the sweep records the closed-form
singularity verdict, the GF(2) nullity of the game matrix, and the parity
of its exact integer determinant.  Real singularity forces an even (zero)
determinant, hence positive nullity; the converse can fail, so cells that
are regular over the reals yet singular over GF(2) land in a discrepancy
list instead of being treated as errors.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

from . import gf2
from .criterion import classify
from .errors import DomainError, SizeLimitError
from .limits import BAREISS_ORDER_LIMIT
from .matrices import build_A_gf2, build_A_int
from .spectral import det_bareiss


@dataclass(frozen=True)
class SweepCell:
    m: int
    n: int
    singular: bool
    conditions: tuple[str, ...]
    nullity: int
    det_odd: bool

    @property
    def discrepant(self) -> bool:
        """Regular over the reals but with a nontrivial GF(2) null space."""
        return not self.singular and self.nullity > 0


@dataclass(frozen=True)
class SweepReport:
    max_size: int
    cells: tuple[SweepCell, ...]

    @property
    def discrepancies(self) -> tuple[SweepCell, ...]:
        return tuple(c for c in self.cells if c.discrepant)

    def cell(self, m: int, n: int) -> SweepCell:
        return self.cells[(m - 1) * self.max_size + (n - 1)]


def run_sweep(max_size: int) -> SweepReport:
    """Evaluate every grid with 1 <= m, n <= max_size."""
    if max_size < 1:
        raise DomainError("sweep size must be positive")
    if max_size * max_size > BAREISS_ORDER_LIMIT:
        # the parity column needs the exact oracle on every cell
        raise SizeLimitError(
            f"sweep side cap is {int(BAREISS_ORDER_LIMIT ** 0.5)}, got {max_size}"
        )
    cells = []
    for m in range(1, max_size + 1):
        for n in range(1, max_size + 1):
            verdict = classify(m, n)
            a2 = build_A_gf2(m, n)
            nullity = a2.cols - gf2.rank(a2)
            det = det_bareiss(build_A_int(m, n))
            cells.append(
                SweepCell(
                    m=m,
                    n=n,
                    singular=verdict.singular,
                    conditions=verdict.conditions,
                    nullity=nullity,
                    det_odd=bool(det & 1),
                )
            )
    return SweepReport(max_size=max_size, cells=tuple(cells))


def report_dict(report: SweepReport) -> dict:
    return {
        "max": report.max_size,
        "cells": [
            {
                "m": c.m,
                "n": c.n,
                "singular": c.singular,
                "conditions": list(c.conditions),
                "nullity": c.nullity,
                "det_parity": "odd" if c.det_odd else "even",
            }
            for c in report.cells
        ],
        "discrepancies": [
            {"m": c.m, "n": c.n, "nullity": c.nullity} for c in report.discrepancies
        ],
    }


def format_text(report: SweepReport) -> str:
    """Fixed-width table plus the (possibly empty) discrepancy section."""
    lines = [
        f"sweep of grids up to {report.max_size}x{report.max_size}",
        f"{'m':>3} {'n':>3} {'singular':>8} {'conditions':>10} {'nullity':>7} {'parity':>6}",
    ]
    for c in report.cells:
        lines.append(
            f"{c.m:>3} {c.n:>3} {'yes' if c.singular else 'no':>8} "
            f"{','.join(c.conditions) or '-':>10} {c.nullity:>7} "
            f"{'odd' if c.det_odd else 'even':>6}"
        )
    lines.append("")
    lines.append("discrepancies (regular over R, singular over GF(2)):")
    if report.discrepancies:
        for c in report.discrepancies:
            lines.append(f"  {c.m}x{c.n}: nullity {c.nullity}, determinant even")
    else:
        lines.append("  none")
    return "\n".join(lines)


def write_csv(report: SweepReport, path: Path) -> None:
    """Delimited form of the table, one row per grid."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["m", "n", "singular", "conditions", "nullity", "det_parity"])
        for c in report.cells:
            writer.writerow(
                [
                    c.m,
                    c.n,
                    int(c.singular),
                    ";".join(c.conditions),
                    c.nullity,
                    "odd" if c.det_odd else "even",
                ]
            )


def render_figure(report: SweepReport, path: Path) -> None:
    """Heatmap of the sweep: nullity per cell, discrepancies outlined."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    size = report.max_size
    nullity = np.zeros((size, size), dtype=int)
    for c in report.cells:
        nullity[c.m - 1, c.n - 1] = c.nullity
    fig, ax = plt.subplots(figsize=(0.55 * size + 2.0, 0.55 * size + 1.5))
    im = ax.imshow(nullity, origin="lower", cmap="viridis")
    fig.colorbar(im, ax=ax, label="GF(2) nullity")
    for c in report.cells:
        if c.singular:
            ax.plot(c.n - 1, c.m - 1, marker="x", color="white", markersize=6)
        if c.discrepant:
            ax.add_patch(
                plt.Rectangle(
                    (c.n - 1.5, c.m - 1.5), 1, 1, fill=False, edgecolor="red", lw=1.6
                )
            )
    ax.set_xticks(range(size), [str(i + 1) for i in range(size)], fontsize=7)
    ax.set_yticks(range(size), [str(i + 1) for i in range(size)], fontsize=7)
    ax.set_xlabel("columns n")
    ax.set_ylabel("rows m")
    ax.set_title("x = singular over R, red box = GF(2) discrepancy")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
