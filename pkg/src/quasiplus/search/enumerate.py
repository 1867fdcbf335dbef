"""
Exhaustive enumeration of Latin squares.

Squares are built row by row. Every row is a permutation of 0..n-1; the
symbols already used in each column are packed into one integer mask with
bit (column * n + symbol), so a candidate row fits exactly when its own
mask does not intersect the used mask.
"""
import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple

import numpy as np

from quasiplus.constants import MAX_EXHAUSTIVE_ORDER, row_table_type, visitor_type
from quasiplus.utils.misc import check_order

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _row_permutations(
    order: int,
) -> Tuple[Tuple[Tuple[int, ...], ...], Tuple[int, ...]]:
    """All permutations of 0..n-1 in lexicographic order, with their masks."""
    perms = tuple(itertools.permutations(range(order)))
    masks = tuple(
        sum(1 << (col * order + symbol) for col, symbol in enumerate(perm))
        for perm in perms
    )
    return perms, masks


def _candidate_rows(order: int, reduced: bool) -> List[List[int]]:
    """Indices of the permutations allowed in each row."""
    perms, _ = _row_permutations(order)
    everything = list(range(len(perms)))
    if not reduced:
        return [everything] * order
    # reduced: the first row is the identity permutation, row r starts with r
    natural = perms.index(tuple(range(order)))
    later = [[i for i in everything if perms[i][0] == row] for row in range(1, order)]
    return [[natural]] + later


def _iter_row_indices(
    order: int, reduced: bool = False, first_row: Optional[int] = None
) -> Iterator[Tuple[int, ...]]:
    """
    Yield each Latin square as a tuple of permutation indices, one per row.

    Squares come out in lexicographic order of their rows.
    """
    _, masks = _row_permutations(order)
    candidates = _candidate_rows(order, reduced)
    if first_row is not None:
        candidates = [[first_row]] + candidates[1:]
    chosen = [0] * order

    def _extend(row, used):
        if row == order:
            yield tuple(chosen)
            return
        for index in candidates[row]:
            mask = masks[index]
            if not used & mask:
                chosen[row] = index
                yield from _extend(row + 1, used | mask)

    yield from _extend(0, 0)


def iter_latin_squares(
    order: int, reduced: bool = False, allow_large: bool = False
) -> Iterator[row_table_type]:
    """
    Yield every Latin square of an order exactly once, as nested tuples.

    Parameters
    ----------
    order
        The order n.
    reduced
        If True, only yield reduced squares (first row and first column in
        natural order).
    allow_large
        Permit orders above the exhaustive limit.
    """
    check_order(order, MAX_EXHAUSTIVE_ORDER, allow_large, "exhaustive enumeration")
    perms, _ = _row_permutations(order)
    for indices in _iter_row_indices(order, reduced=reduced):
        yield tuple(perms[i] for i in indices)


def enumerate_latin_squares(
    order: int,
    visitor: Optional[visitor_type] = None,
    reduced: bool = False,
    allow_large: bool = False,
) -> int:
    """
    Visit every Latin square of an order; return how many there are.

    Parameters
    ----------
    order
        The order n; orders above MAX_EXHAUSTIVE_ORDER need allow_large.
    visitor
        Called with each square (rows as tuples); optional.
    reduced
        Only visit reduced squares.
    allow_large
        Permit orders above the exhaustive limit.

    Examples
    --------
    >>> enumerate_latin_squares(3)
    12
    """
    count = 0
    for square in iter_latin_squares(order, reduced=reduced, allow_large=allow_large):
        if visitor is not None:
            visitor(square)
        count += 1
    logger.info("enumerated %d Latin squares of order %d", count, order)
    return count


def _indices_with_first_row(order: int, first_row: int) -> np.ndarray:
    """Permutation indices of all squares whose first row is fixed."""
    rows = list(_iter_row_indices(order, first_row=first_row))
    return np.array(rows, dtype=np.int32).reshape(-1, order)


def latin_square_stack(
    order: int, reduced: bool = False, workers: int = 1, allow_large: bool = False
) -> np.ndarray:
    """
    Return every Latin square of an order as a (count, n, n) uint8 array.

    The squares are in the same order as :func:`iter_latin_squares`. With
    workers > 1 the search tree is split by first row across processes and
    the pieces are concatenated in first-row order, so the result does not
    depend on the number of workers.
    """
    check_order(order, MAX_EXHAUSTIVE_ORDER, allow_large, "exhaustive enumeration")
    perms, _ = _row_permutations(order)
    perm_array = np.array(perms, dtype=np.uint8).reshape(-1, order)
    if reduced or workers <= 1 or order < 4:
        rows = list(_iter_row_indices(order, reduced=reduced))
        indices = np.array(rows, dtype=np.int32).reshape(-1, order)
    else:
        first_rows = range(len(perms))
        with ProcessPoolExecutor(workers) as executor:
            parts = executor.map(
                _indices_with_first_row, [order] * len(perms), first_rows
            )
            indices = np.concatenate(list(parts))
    return perm_array[indices]
