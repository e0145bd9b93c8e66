"""Independent reference implementations used only to check the library.

Nothing here shares an algorithm with the code under test: determinants
come from Laplace expansion, solution sets from exhaustive enumeration of
every press vector, and Kronecker blocks from the index definition.
"""

from __future__ import annotations

from luminous.board import GridDims, toggle_mask
from luminous.matrices import IntMatrix


def det_laplace(mat: IntMatrix) -> int:
    """Exact determinant by first-row expansion, memoized on column sets."""
    k = mat.rows
    assert mat.is_square
    # layer r holds sums over all ways of choosing columns for rows 0..r-1
    layer: dict[int, int] = {0: 1}
    for r in range(k):
        nxt: dict[int, int] = {}
        row = mat.entries[r]
        for used, val in layer.items():
            sign = 1
            for c in range(k):
                bit = 1 << c
                if used & bit:
                    continue
                if row[c]:
                    key = used | bit
                    nxt[key] = nxt.get(key, 0) + sign * val * row[c]
                sign = -sign
        layer = nxt
    return layer.get((1 << k) - 1, 0)


def kron_by_definition(a: IntMatrix, b: IntMatrix) -> list[list[int]]:
    """Entry (i, j) of kron(a, b) via index arithmetic."""
    p, q = b.rows, b.cols
    out = [
        [
            a.entries[i // p][j // q] * b.entries[i % p][j % q]
            for j in range(a.cols * q)
        ]
        for i in range(a.rows * p)
    ]
    return out


def press_image_table(m: int, n: int) -> dict[int, tuple[int, int]]:
    """Exhaustive map from reachable board to (solution count, min weight).

    Walks all 2**(m*n) press vectors in Gray-code order, updating the
    board image with one neighbour mask per step.
    """
    dims = GridDims(m, n)
    q = dims.cell_count
    masks = [toggle_mask(dims, j) for j in range(1, q + 1)]
    table: dict[int, tuple[int, int]] = {0: (1, 0)}
    image = 0
    presses = 0
    for t in range(1, 1 << q):
        flip = (t & -t).bit_length() - 1
        image ^= masks[flip]
        presses ^= 1 << flip
        w = presses.bit_count()
        count, best = table.get(image, (0, q + 1))
        table[image] = (count + 1, min(best, w))
    return table


def brute_force_solutions(m: int, n: int, config_bits: int) -> list[int]:
    """All press vectors solving the given board, as ints, ascending."""
    dims = GridDims(m, n)
    q = dims.cell_count
    masks = [toggle_mask(dims, j) for j in range(1, q + 1)]
    out = []
    for x in range(1 << q):
        image = 0
        rest = x
        while rest:
            low = rest & -rest
            image ^= masks[low.bit_length() - 1]
            rest ^= low
        if image == config_bits:
            out.append(x)
    return out
