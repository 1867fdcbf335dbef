"""
Testing utilities for quasiplus.

The functions here are deliberately naive re-implementations used as
oracles: plain loops over python ints, no numpy batching, no memoization.
"""
import itertools
from typing import Iterator, Optional, Sequence, Set

from quasiplus.core.quasigroup import FiniteQuasigroup, from_mul_table, is_latin_square
from quasiplus.identities.registry import get_identity, identity_like
from quasiplus.identities.term import Identity, Op, Var


def naive_latin_squares(
    order: int, first_row: Optional[Sequence[int]] = None
) -> Iterator[FiniteQuasigroup]:
    """
    Yield every Latin square of an order by filtering candidate grids.

    Without first_row all n ** (n * n) grids are filtered, which is only
    usable for order <= 3. With first_row that row is fixed and the other
    rows run over every tuple of permutations, which reaches order 4.
    """
    if first_row is None:
        if order > 3:
            raise ValueError("naive enumeration is limited to order 3")
        for values in itertools.product(range(order), repeat=order * order):
            table = [values[row * order : (row + 1) * order] for row in range(order)]
            if is_latin_square(table):
                yield from_mul_table(table)
        return
    if order > 4:
        raise ValueError("naive enumeration with a fixed row is limited to order 4")
    first_row = tuple(first_row)
    rows = list(itertools.permutations(range(order)))
    for rest in itertools.product(rows, repeat=order - 1):
        table = [first_row, *rest]
        if is_latin_square(table):
            yield from_mul_table(table)


def _evaluate(quasigroup: FiniteQuasigroup, node, assignment) -> int:
    if isinstance(node, Var):
        return assignment[node.name]
    left = _evaluate(quasigroup, node.left, assignment)
    right = _evaluate(quasigroup, node.right, assignment)
    if node.op is Op.MUL:
        return quasigroup.mul(left, right)
    if node.op is Op.LDIV:
        return quasigroup.left_divide(left, right)
    return quasigroup.right_divide(left, right)


def holds_naive(
    quasigroup: FiniteQuasigroup, identity: identity_like, domain=None
) -> bool:
    """Check an identity on every assignment one at a time."""
    identity: Identity = get_identity(identity)
    domain = quasigroup.elements if domain is None else domain
    names = identity.variables
    for values in itertools.product(domain, repeat=len(names)):
        assignment = dict(zip(names, values))
        lhs = _evaluate(quasigroup, identity.lhs, assignment)
        rhs = _evaluate(quasigroup, identity.rhs, assignment)
        if lhs != rhs:
            return False
    return True


def naive_closure(quasigroup: FiniteQuasigroup, generators) -> Set[int]:
    """Close a subset by sweeping all pairs until nothing changes."""
    members = set(generators)
    operations = (quasigroup.mul, quasigroup.left_divide, quasigroup.right_divide)
    while True:
        new = {op(a, b) for op in operations for a in members for b in members}
        if new <= members:
            return members
        members |= new


def is_trimedial_naive(quasigroup: FiniteQuasigroup) -> bool:
    """Check mediality on the closure of every triple, without shortcuts."""
    for triple in itertools.product(quasigroup.elements, repeat=3):
        subset = sorted(naive_closure(quasigroup, triple))
        if not holds_naive(quasigroup, "M", domain=subset):
            return False
    return True


def naive_isomorphic(first: FiniteQuasigroup, second: FiniteQuasigroup) -> bool:
    """Look for a permutation p with p(x*y) = p(x)*p(y)."""
    if first.order != second.order:
        return False
    elements = first.elements
    for perm in itertools.permutations(elements):
        if all(
            perm[first.mul(x, y)] == second.mul(perm[x], perm[y])
            for x in elements
            for y in elements
        ):
            return True
    return False
