"""
Subquasigroup closure and predicates on element maps.
"""
from typing import Iterable, NamedTuple, Tuple, Union

from quasiplus.core.quasigroup import ElementMap, FiniteQuasigroup
from quasiplus.exceptions import BadEntryError, EmptyGeneratorsError


class EndomorphismWitness(NamedTuple):
    """
    A pair (x, y) with m(x*y) != m(x)*m(y).

    Witnesses are falsy so `if is_endomorphism(...)` reads naturally.
    """

    x: int
    y: int
    image_of_product: int
    product_of_images: int

    def __bool__(self):
        return False


def mask_to_elements(mask: int) -> Tuple[int, ...]:
    """Return the sorted elements of a bitmask subset."""
    out = []
    element = 0
    while mask:
        if mask & 1:
            out.append(element)
        mask >>= 1
        element += 1
    return tuple(out)


def closure_mask(rows, generator_mask: int) -> int:
    """
    Close a bitmask subset under the three operations.

    Worklist closure: every newly added element is combined, in both
    operand positions, with every element already in the set.

    Parameters
    ----------
    rows
        The (mul, ldiv, rdiv) tables as nested tuples, see
        :attr:`FiniteQuasigroup.rows`.
    generator_mask
        Bitmask of the generating elements.
    """
    tables = rows
    members = list(mask_to_elements(generator_mask))
    mask = generator_mask
    pending = list(members)
    while pending:
        a = pending.pop()
        for b in list(members):
            for table in tables:
                for product in (table[a][b], table[b][a]):
                    bit = 1 << product
                    if not mask & bit:
                        mask |= bit
                        members.append(product)
                        pending.append(product)
    return mask


def generated_subquasigroup(
    quasigroup: FiniteQuasigroup, generators: Iterable[int]
) -> Tuple[int, ...]:
    """
    Return the subquasigroup generated by a set of elements.

    The result is the least subset containing the generators and closed
    under multiplication and both divisions, as a sorted tuple.

    Raises
    ------
    EmptyGeneratorsError if no generators are given.
    BadEntryError if a generator is not an element.

    Examples
    --------
    >>> from quasiplus import from_mul_table
    >>> z3 = from_mul_table([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
    >>> generated_subquasigroup(z3, {0})
    (0,)
    >>> generated_subquasigroup(z3, {1})
    (0, 1, 2)
    """
    generators = set(generators)
    if not generators:
        raise EmptyGeneratorsError("at least one generator is required")
    _check_elements(quasigroup, generators)
    mask = 0
    for element in generators:
        mask |= 1 << element
    return mask_to_elements(closure_mask(quasigroup.rows, mask))


def is_endomorphism(
    quasigroup: FiniteQuasigroup, element_map: Iterable[int]
) -> Union[bool, EndomorphismWitness]:
    """
    Check that a map preserves multiplication, m(x*y) = m(x)*m(y).

    A map preserving multiplication also preserves both divisions, so only
    the multiplication is checked. Returns True, or the first failing pair
    in row-major order as a (falsy) EndomorphismWitness.
    """
    image = ElementMap(element_map)
    if len(image) != quasigroup.order:
        msg = f"map has {len(image)} images, quasigroup has order {quasigroup.order}"
        raise BadEntryError(msg)
    _check_elements(quasigroup, image)
    mul = quasigroup.rows[0]
    for x in quasigroup.elements:
        row = mul[x]
        for y in quasigroup.elements:
            left = image[row[y]]
            right = mul[image[x]][image[y]]
            if left != right:
                return EndomorphismWitness(x, y, left, right)
    return True


def maps_commute_ef(quasigroup: FiniteQuasigroup) -> bool:
    """Return True if f(e(x)) = e(f(x)) for every element x."""
    e, f = quasigroup.e_map(), quasigroup.f_map()
    return all(f[e[x]] == e[f[x]] for x in quasigroup.elements)


def _check_elements(quasigroup, elements):
    """Raise BadEntryError if any value is not an element of quasigroup."""
    bad = [x for x in elements if not 0 <= x < quasigroup.order]
    if bad:
        msg = f"{sorted(bad)} not elements of an order {quasigroup.order} quasigroup"
        raise BadEntryError(msg)
