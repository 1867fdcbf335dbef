"""
Finite quasigroups stored as Cayley tables.

A quasigroup of order n is stored as its multiplication table, an n x n
Latin square over the elements 0..n-1 (row = left operand). The left and
right division tables are derived eagerly at construction:

    ldiv[x][y] is the unique z with x*z = y
    rdiv[x][y] is the unique z with z*y = x
"""
from enum import Enum
from typing import Hashable, Iterable, Optional, Sequence, Tuple, Union

import numpy as np

from quasiplus.constants import row_table_type, table_type
from quasiplus.exceptions import BadEntryError, NotLatinError, TableFormatError


class ParastropheKind(str, Enum):
    """Selector for the left, right and opposite parastrophe constructions."""

    LEFT = "l"
    RIGHT = "r"
    OPPOSITE = "opp"

    @classmethod
    def coerce(cls, value: Union[str, "ParastropheKind"]) -> "ParastropheKind":
        """Get a kind from a kind, its value ("l", "r", "opp") or its name."""
        if isinstance(value, cls):
            return value
        text = str(value).strip().lower()
        for kind in cls:
            if text in {kind.value, kind.name.lower()}:
                return kind
        raise ValueError(f"unknown parastrophe kind {value!r}")


class ElementMap(tuple):
    """
    A total function Q -> Q given by its images, image[x] = m(x).

    Examples
    --------
    >>> m = ElementMap([1, 0, 2])
    >>> m(0)
    1
    >>> m.compose(m) == ElementMap.identity(3)
    True
    """

    def __new__(cls, image: Iterable[int]):
        return super().__new__(cls, (int(x) for x in image))

    def __call__(self, x: int) -> int:
        return self[x]

    def __repr__(self):
        return f"ElementMap({list(self)})"

    @classmethod
    def identity(cls, order: int) -> "ElementMap":
        """The identity map on an order-n quasigroup."""
        return cls(range(order))

    @classmethod
    def constant(cls, order: int, value: int) -> "ElementMap":
        """The map sending every element to value."""
        return cls([value] * order)

    def compose(self, other: "ElementMap") -> "ElementMap":
        """Return self after other, x -> self(other(x))."""
        return ElementMap(self[x] for x in other)

    def as_array(self) -> np.ndarray:
        """Return the images as an integer array."""
        return np.asarray(self, dtype=np.int64)


# --- table helpers (work on single tables and on stacks of tables)


def division_tables(tables: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Derive the left and right division tables from multiplication tables.

    Works on a single (n, n) table or a stack of shape (..., n, n). Each
    row (column) of a Latin square is a permutation, so its inverse is its
    argsort.
    """
    ldiv = np.argsort(tables, axis=-1, kind="stable").astype(tables.dtype)
    rdiv = np.argsort(tables, axis=-2, kind="stable").astype(tables.dtype)
    return ldiv, rdiv


def parastrophe_tables(
    tables: np.ndarray, kind: Union[str, ParastropheKind]
) -> np.ndarray:
    """
    Return the multiplication tables of a parastrophe.

    The left parastrophe multiplies by \\, the right parastrophe by / and the
    opposite parastrophe by the opposite multiplication. Works on a single
    table or a stack of shape (..., n, n).
    """
    kind = ParastropheKind.coerce(kind)
    if kind is ParastropheKind.OPPOSITE:
        return np.ascontiguousarray(np.swapaxes(tables, -1, -2))
    ldiv, rdiv = division_tables(tables)
    return ldiv if kind is ParastropheKind.LEFT else rdiv


def find_latin_violation(table: np.ndarray) -> Optional[Tuple[str, int, int]]:
    """
    Return (axis, index, symbol) for the first repeated symbol, else None.

    Rows are scanned before columns; within a row or column the first
    symbol seen twice is reported.
    """
    for axis, lines in (("row", table), ("column", table.T)):
        for index, line in enumerate(lines):
            seen = set()
            for symbol in line.tolist():
                if symbol in seen:
                    return axis, index, symbol
                seen.add(symbol)
    return None


def is_latin_square(table: table_type) -> bool:
    """Return True if table is a square Latin square over 0..n-1."""
    try:
        _validate_table(table)
    except (BadEntryError, NotLatinError, TableFormatError):
        return False
    return True


def _validate_table(table: table_type) -> np.ndarray:
    """Check shape, entries and the Latin property; return an array."""
    try:
        array = np.array(table, dtype=np.int64)
    except (TypeError, ValueError):
        raise TableFormatError("table must be a square grid of integers")
    if array.ndim != 2 or array.shape[0] != array.shape[1] or not array.size:
        raise TableFormatError(f"table must be square and non-empty, got {array.shape}")
    order = array.shape[0]
    bad = np.argwhere((array < 0) | (array >= order))
    if len(bad):
        row, col = bad[0]
        msg = (
            f"entry {array[row, col]} at row {row}, column {col} is not in "
            f"[0, {order})"
        )
        raise BadEntryError(msg)
    violation = find_latin_violation(array)
    if violation is not None:
        raise NotLatinError(*violation)
    return array


class FiniteQuasigroup:
    """
    An immutable finite quasigroup (Q; *, \\, /) backed by Cayley tables.

    Use :func:`from_mul_table` (or the io readers) to build instances; the
    constructor assumes its input has already been validated.

    Parameters
    ----------
    mul_table
        A validated (n, n) Latin square.
    name
        An optional label, carried through io but ignored by equality.
    """

    __slots__ = ("_mul", "_ldiv", "_rdiv", "_rows", "name")

    def __init__(self, mul_table: np.ndarray, name: Optional[str] = None):
        mul = np.array(mul_table, dtype=np.int64)
        ldiv, rdiv = division_tables(mul)
        for array in (mul, ldiv, rdiv):
            array.setflags(write=False)
        self._mul, self._ldiv, self._rdiv = mul, ldiv, rdiv
        self._rows = None
        self.name = name

    # --- tables

    @property
    def order(self) -> int:
        """The number of elements."""
        return self._mul.shape[0]

    @property
    def mul_table(self) -> np.ndarray:
        """The (read-only) multiplication table."""
        return self._mul

    @property
    def ldiv_table(self) -> np.ndarray:
        """The (read-only) left division table."""
        return self._ldiv

    @property
    def rdiv_table(self) -> np.ndarray:
        """The (read-only) right division table."""
        return self._rdiv

    @property
    def rows(self) -> Tuple[row_table_type, row_table_type, row_table_type]:
        """The mul, ldiv and rdiv tables as nested tuples of python ints."""
        if self._rows is None:
            self._rows = tuple(
                tuple(tuple(row) for row in x.tolist())
                for x in (self._mul, self._ldiv, self._rdiv)
            )
        return self._rows

    @property
    def elements(self) -> range:
        """The elements 0..n-1."""
        return range(self.order)

    # --- operations

    def check_element(self, x: int) -> int:
        """Return x if it is an element, else raise BadEntryError."""
        if not 0 <= x < self.order:
            msg = f"{x} is not an element of an order {self.order} quasigroup"
            raise BadEntryError(msg)
        return x

    def mul(self, x: int, y: int) -> int:
        """Return x*y."""
        return int(self._mul[self.check_element(x), self.check_element(y)])

    def left_divide(self, x: int, y: int) -> int:
        """Return x\\y, the unique z with x*z = y."""
        return int(self._ldiv[self.check_element(x), self.check_element(y)])

    def right_divide(self, x: int, y: int) -> int:
        """Return x/y, the unique z with z*y = x."""
        return int(self._rdiv[self.check_element(x), self.check_element(y)])

    def e_map(self) -> ElementMap:
        """The local right unit map e(x) = x\\x."""
        return ElementMap(np.diagonal(self._ldiv).tolist())

    def f_map(self) -> ElementMap:
        """The local left unit map f(x) = x/x."""
        return ElementMap(np.diagonal(self._rdiv).tolist())

    def parastrophe(self, kind: Union[str, ParastropheKind]) -> "FiniteQuasigroup":
        """
        Return the left ("l"), right ("r") or opposite ("opp") parastrophe.

        The division tables of the result are rebuilt from its new
        multiplication.
        """
        return FiniteQuasigroup(parastrophe_tables(self._mul, kind))

    def relabel(self, permutation: Sequence[int]) -> "FiniteQuasigroup":
        """
        Return the isomorphic copy Q^p with Q^p(p(x), p(y)) = p(x*y).
        """
        perm = np.asarray(permutation, dtype=np.int64)
        inverse = np.argsort(perm)
        return FiniteQuasigroup(perm[self._mul[np.ix_(inverse, inverse)]])

    def axioms_hold(self) -> bool:
        """
        Check the four quasigroup axioms pointwise.

        x\\(x*y) = y, x*(x\\y) = y, (x*y)/y = x and (x/y)*y = x.
        """
        x, y = np.indices(self._mul.shape)
        mul, ldiv, rdiv = self._mul, self._ldiv, self._rdiv
        return bool(
            np.array_equal(ldiv[x, mul[x, y]], y)
            and np.array_equal(mul[x, ldiv[x, y]], y)
            and np.array_equal(rdiv[mul[x, y], y], x)
            and np.array_equal(mul[rdiv[x, y], y], x)
        )

    # --- conversion and dunders

    def to_list(self) -> list:
        """Return the multiplication table as nested lists."""
        return self._mul.tolist()

    def __eq__(self, other):
        if not isinstance(other, FiniteQuasigroup):
            return NotImplemented
        return np.array_equal(self._mul, other._mul)

    def __hash__(self):
        return hash((self.order, self._mul.tobytes()))

    def __repr__(self):
        name = f" {self.name!r}" if self.name else ""
        return f"FiniteQuasigroup{name}(order={self.order}, mul={self.to_list()})"


def from_mul_table(table: table_type, name: Optional[str] = None) -> FiniteQuasigroup:
    """
    Build a quasigroup from a multiplication table.

    Parameters
    ----------
    table
        A square grid of integers in [0, n); row index is the left operand.
    name
        An optional label.

    Raises
    ------
    TableFormatError if the grid is not square.
    BadEntryError if an entry is out of range.
    NotLatinError if some row or column repeats a symbol.

    Examples
    --------
    >>> z3 = from_mul_table([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
    >>> z3.left_divide(1, 0)
    2
    """
    array = _validate_table(table)
    quasigroup = FiniteQuasigroup(array, name=name)
    assert quasigroup.axioms_hold()
    return quasigroup


def from_symbol_table(
    table: Sequence[Sequence[Hashable]], name: Optional[str] = None
) -> FiniteQuasigroup:
    """
    Build a quasigroup from a table over an arbitrary symbol set.

    Symbols are relabelled to 0..n-1 in sorted order when they are mutually
    comparable, otherwise in order of first appearance (row-major).

    Examples
    --------
    >>> q = from_symbol_table([["a", "b"], ["b", "a"]])
    >>> q.to_list()
    [[0, 1], [1, 0]]
    """
    flat = [x for row in table for x in row]
    symbols = list(dict.fromkeys(flat))
    try:
        symbols = sorted(symbols)
    except TypeError:
        pass
    index = {symbol: num for num, symbol in enumerate(symbols)}
    return from_mul_table([[index[x] for x in row] for row in table], name=name)


def cyclic_group(order: int) -> FiniteQuasigroup:
    """The cyclic group Z_n, x*y = x + y mod n."""
    x, y = np.indices((order, order))
    return FiniteQuasigroup((x + y) % order, name=f"Z{order}")
