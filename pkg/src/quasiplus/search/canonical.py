"""
Canonical forms of quasigroups under isomorphism.

Isomorphism relabels rows, columns and symbols with one permutation p:
Q^p(p(x), p(y)) = p(x*y). The canonical form of Q is the lexicographically
smallest row-major flattening of Q^p over all n! permutations p, so two
quasigroups have the same canonical form exactly when they are isomorphic.
"""
import itertools
from functools import lru_cache
from typing import NamedTuple, Tuple, Union

import numpy as np

from quasiplus.constants import MAX_CANONICAL_ORDER
from quasiplus.core.quasigroup import FiniteQuasigroup, from_mul_table
from quasiplus.interfaces import CayleyTableLike
from quasiplus.utils.misc import check_order

# flattened tables fit in an int64 when order ** (order ** 2) < 2 ** 63
_MAX_PACKED_ORDER = 5


class CanonicalForm(NamedTuple):
    """The flattened row-major canonical multiplication table."""

    order: int
    data: bytes

    def to_table(self) -> np.ndarray:
        """Return the canonical table as an (n, n) array."""
        array = np.frombuffer(self.data, dtype=np.uint8)
        return array.reshape(self.order, self.order).astype(np.int64)

    def to_quasigroup(self) -> FiniteQuasigroup:
        """Return the canonical representative."""
        return from_mul_table(self.to_table())


@lru_cache(maxsize=None)
def _permutations(order: int) -> Tuple[np.ndarray, np.ndarray]:
    """All permutations of 0..n-1 and their inverses, shape (n!, n)."""
    perms = np.array(list(itertools.permutations(range(order))), dtype=np.intp)
    perms = perms.reshape(-1, order)
    return perms, np.argsort(perms, axis=1)


def relabel_all(tables: np.ndarray) -> np.ndarray:
    """
    Apply every permutation to every table.

    Parameters
    ----------
    tables
        Shape (count, n, n).

    Returns
    -------
    An array of shape (count, n!, n * n); entry [i, k] is table i relabelled
    by permutation k and flattened.
    """
    count, order = tables.shape[0], tables.shape[-1]
    perms, inverses = _permutations(order)
    num = len(perms)
    tables = np.asarray(tables, dtype=np.intp)
    model = np.arange(count)[:, None, None, None]
    # inner[i, k, a, b] = table_i[inv_k[a], inv_k[b]]
    inner = tables[model, inverses[None, :, :, None], inverses[None, :, None, :]]
    relabelled = perms[np.arange(num)[None, :, None, None], inner]
    return relabelled.reshape(count, num, order * order)


def canonical_tables(tables: np.ndarray, chunk_size: int = 512) -> np.ndarray:
    """
    Return the canonical table of each table in a (count, n, n) stack.
    """
    tables = np.asarray(tables)
    if tables.ndim == 2:
        tables = tables[None]
    order = tables.shape[-1]
    check_order(order, MAX_CANONICAL_ORDER, what="canonical form")
    out = np.empty(tables.shape, dtype=np.uint8)
    if order <= _MAX_PACKED_ORDER:
        # column 0 is the most significant base-n digit
        powers = order ** np.arange(order * order - 1, -1, -1, dtype=np.int64)
        for start in range(0, len(tables), chunk_size):
            flat = relabel_all(tables[start : start + chunk_size])
            codes = flat.astype(np.int64) @ powers
            best = codes.argmin(axis=1)
            chosen = flat[np.arange(len(flat)), best]
            out[start : start + len(flat)] = chosen.reshape(-1, order, order)
        return out
    for num, table in enumerate(tables):
        flat = relabel_all(table[None])[0]
        best = np.lexsort(flat.T[::-1])[0]
        out[num] = flat[best].reshape(order, order)
    return out


def canonical_form(quasigroup: Union[CayleyTableLike, np.ndarray]) -> CanonicalForm:
    """
    Return the canonical form of a quasigroup.

    Raises
    ------
    OrderTooLargeError above MAX_CANONICAL_ORDER.

    Examples
    --------
    >>> from quasiplus import from_mul_table
    >>> canonical_form(from_mul_table([[1, 0], [0, 1]])).to_table().tolist()
    [[0, 1], [1, 0]]
    """
    table = quasigroup
    if isinstance(quasigroup, CayleyTableLike):
        table = quasigroup.mul_table
    canonical = canonical_tables(np.asarray(table))[0]
    return CanonicalForm(canonical.shape[0], canonical.tobytes())


def is_isomorphic(first: FiniteQuasigroup, second: FiniteQuasigroup) -> bool:
    """Return True if two quasigroups are isomorphic."""
    if first.order != second.order:
        return False
    return canonical_form(first) == canonical_form(second)


def unique_up_to_isomorphism(tables: np.ndarray) -> np.ndarray:
    """
    Return one canonical representative per isomorphism class.

    The representatives are the canonical tables, sorted lexicographically
    by their row-major flattening.
    """
    tables = np.asarray(tables)
    if not len(tables):
        return tables.astype(np.uint8)
    order = tables.shape[-1]
    canonical = canonical_tables(tables).reshape(len(tables), -1)
    unique = np.unique(canonical, axis=0)
    return unique.reshape(-1, order, order)
