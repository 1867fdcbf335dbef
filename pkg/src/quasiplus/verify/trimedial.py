"""
Trimediality: every subquasigroup generated by three elements is medial.

"Generated by three elements" includes degenerate generator sets, so all
ordered triples (a, b, c) with repeats are checked, which amounts to every
generator subset of size one to three.
"""
import itertools
from typing import Dict, NamedTuple, Optional, Tuple, Union

import numpy as np

from quasiplus.constants import EVALUATION_BUDGET, MEDIAL_BELOW_ORDER
from quasiplus.core.closure import closure_mask, mask_to_elements
from quasiplus.core.quasigroup import FiniteQuasigroup
from quasiplus.identities.evaluate import (
    TableStack,
    Witness,
    assignment_grid,
    evaluate_stack,
    holds,
)
from quasiplus.identities.registry import NAMED_IDENTITIES


class TrimedialWitness(NamedTuple):
    """
    Three generators whose subquasigroup is not medial.

    Witnesses are falsy so `if is_trimedial(...)` reads naturally.
    """

    generators: Tuple[int, int, int]
    subquasigroup: Tuple[int, ...]
    witness: Witness

    def __bool__(self):
        return False

    def __str__(self):
        a, b, c = self.generators
        return (
            f"<{a}, {b}, {c}> = {set(self.subquasigroup)} is not medial "
            f"({self.witness})"
        )


def is_trimedial(quasigroup: FiniteQuasigroup) -> Union[bool, TrimedialWitness]:
    """
    Check that every subquasigroup generated by three elements is medial.

    Triples are visited in lexicographic order and closures are memoized by
    generator set, so each distinct subquasigroup is checked once. Closed
    subsets with fewer than MEDIAL_BELOW_ORDER elements are medial and are
    not evaluated.

    Returns True, or the first failing triple as a falsy TrimedialWitness.

    Examples
    --------
    >>> from quasiplus import cyclic_group
    >>> is_trimedial(cyclic_group(4))
    True
    """
    rows = quasigroup.rows
    medial = NAMED_IDENTITIES["M"]
    closures: Dict[int, int] = {}
    checked: Dict[int, Union[bool, Witness]] = {}
    for triple in itertools.product(quasigroup.elements, repeat=3):
        generators = 0
        for element in triple:
            generators |= 1 << element
        if generators not in closures:
            closures[generators] = closure_mask(rows, generators)
        closed = closures[generators]
        if closed not in checked:
            elements = mask_to_elements(closed)
            if len(elements) < MEDIAL_BELOW_ORDER:
                checked[closed] = True
            else:
                checked[closed] = holds(quasigroup, medial, domain=elements)
        result = checked[closed]
        if result is not True:
            return TrimedialWitness(triple, mask_to_elements(closed), result)
    return True


# --- batched version


def _generator_sets(order: int) -> np.ndarray:
    """Membership rows of every generator subset of size 1 to 3."""
    subsets = []
    for size in (1, 2, 3):
        subsets.extend(itertools.combinations(range(order), size))
    out = np.zeros((len(subsets), order), dtype=bool)
    for num, subset in enumerate(subsets):
        out[num, list(subset)] = True
    return out


def closure_members(stack: TableStack, members: np.ndarray) -> np.ndarray:
    """
    Close per-model subsets under the three operations.

    Parameters
    ----------
    stack
        The models.
    members
        Boolean array of shape (len(stack), n); True marks the generators.

    Returns
    -------
    The membership array of the generated subquasigroups.
    """
    order = stack.order
    symbols = np.arange(order)
    # hits[t][b, i, j, s] is True when table t of model b maps (i, j) to s
    hits = [table[..., None] == symbols for table in stack]
    members = members.copy()
    for _ in range(order):
        pairs = members[:, :, None] & members[:, None, :]
        produced = members.copy()
        for hit in hits:
            produced |= (pairs[..., None] & hit).any(axis=(1, 2))
        if np.array_equal(produced, members):
            break
        members = produced
    return members


def _trimedial_chunk(stack: TableStack) -> np.ndarray:
    """trimedial_mask for a stack small enough to evaluate in one batch."""
    order = stack.order
    medial = NAMED_IDENTITIES["M"]
    grid = assignment_grid(len(medial.variables), range(order))
    values = dict(zip(medial.variables, grid))
    lhs = evaluate_stack(stack, medial.lhs, values)
    rhs = evaluate_stack(stack, medial.rhs, values)
    failing = lhs != rhs
    out = ~failing.any(axis=1)
    # only non-medial models can fail
    suspects = np.flatnonzero(~out)
    if not len(suspects):
        return out
    sub = stack.take(suspects)
    failing = failing[suspects]
    ok = np.ones(len(suspects), dtype=bool)
    for generators in _generator_sets(order):
        start = np.broadcast_to(generators, (len(sub), order))
        members = closure_members(sub, start)
        inside = members[:, grid].all(axis=1)
        ok &= ~(failing & inside).any(axis=1)
    out[suspects] = ok
    return out


def trimedial_mask(stack, chunk_size: Optional[int] = None) -> np.ndarray:
    """
    Return a boolean array, True for each trimedial model of a stack.

    Parameters
    ----------
    stack
        A TableStack or a (count, n, n) array of multiplication tables.
    chunk_size
        Models evaluated per batch; derived from EVALUATION_BUDGET when not
        given.
    """
    if not isinstance(stack, TableStack):
        stack = TableStack.from_mul(stack)
    order = stack.order
    if chunk_size is None:
        chunk_size = max(1, EVALUATION_BUDGET // order**4)
    out = np.ones(len(stack), dtype=bool)
    for start in range(0, len(stack), chunk_size):
        index = slice(start, start + chunk_size)
        out[index] = _trimedial_chunk(stack.take(index))
    return out
