"""
Seeded random quasigroups.

Squares are produced by cell-by-cell backtracking where the order in which
symbols are tried is drawn from a seeded generator. The result depends
only on (order, seed). The distribution over Latin squares is NOT uniform;
sampled corpora are meant for checking implications on orders too large to
enumerate, never for estimating proportions.
"""
from typing import Optional

import numpy as np

from quasiplus.core.quasigroup import FiniteQuasigroup, from_mul_table


def random_latin_square(order: int, rng: np.random.Generator) -> np.ndarray:
    """
    Fill an (order, order) Latin square using rng to order the candidates.
    """
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    full = (1 << order) - 1
    table = np.full((order, order), -1, dtype=np.int64)
    row_used = [0] * order
    col_used = [0] * order
    cells = order * order
    # candidate symbols still to try at each cell, drawn on first entry
    pending = [None] * cells
    cell = 0
    while cell < cells:
        row, col = divmod(cell, order)
        if pending[cell] is None:
            free = full & ~(row_used[row] | col_used[col])
            symbols = [s for s in rng.permutation(order).tolist() if free >> s & 1]
            pending[cell] = symbols
        if table[row, col] >= 0:  # undo the previous choice before retrying
            bit = 1 << int(table[row, col])
            row_used[row] &= ~bit
            col_used[col] &= ~bit
            table[row, col] = -1
        if pending[cell]:
            symbol = pending[cell].pop(0)
            bit = 1 << symbol
            row_used[row] |= bit
            col_used[col] |= bit
            table[row, col] = symbol
            cell += 1
        else:  # dead end, backtrack
            pending[cell] = None
            cell -= 1
            if cell < 0:  # pragma: no cover (a Latin square always exists)
                raise RuntimeError("backtracking exhausted the search tree")
    return table


def random_quasigroup(order: int, seed: Optional[int] = None) -> FiniteQuasigroup:
    """
    Return a quasigroup determined by (order, seed).

    Examples
    --------
    >>> random_quasigroup(4, seed=1) == random_quasigroup(4, seed=1)
    True
    """
    rng = np.random.default_rng(seed)
    table = random_latin_square(order, rng)
    return from_mul_table(table, name=f"random-{order}-{seed}")


def random_stack(order: int, count: int, seed: Optional[int] = None) -> np.ndarray:
    """
    Return `count` seeded random Latin squares as a (count, n, n) array.

    Model i is random_quasigroup(order, seed + i) when a seed is given.
    """
    out = np.empty((count, order, order), dtype=np.uint8)
    for num in range(count):
        rng = np.random.default_rng(None if seed is None else seed + num)
        out[num] = random_latin_square(order, rng)
    return out
