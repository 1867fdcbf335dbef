"""
Reading and writing Cayley tables.

Two formats are supported, both written byte-deterministically:

text
    line 1 is the order n, the next n lines hold n space-separated
    integers in [0, n), and the file ends with a newline. On reading, any
    other set of n symbols is relabelled to 0..n-1.
json
    an object with the fields order, mul and optionally name.
"""
import json
from pathlib import Path
from typing import Optional

import pydantic

from quasiplus.constants import path_types
from quasiplus.core.quasigroup import (
    FiniteQuasigroup,
    from_mul_table,
    from_symbol_table,
)
from quasiplus.core.schema import CayleyTable
from quasiplus.exceptions import BadEntryError, TableFormatError

JSON_SUFFIXES = frozenset({".json"})


def table_to_text(quasigroup: FiniteQuasigroup) -> str:
    """
    Render a quasigroup in the text format.

    Examples
    --------
    >>> from quasiplus import from_mul_table
    >>> print(table_to_text(from_mul_table([[0, 1], [1, 0]])), end="")
    2
    0 1
    1 0
    """
    rows = [" ".join(str(x) for x in row) for row in quasigroup.to_list()]
    return "\n".join([str(quasigroup.order)] + rows) + "\n"


def _symbol(token: str):
    """Integers stay integers, anything else is a symbol name."""
    try:
        return int(token)
    except ValueError:
        return token


def table_from_text(text: str, name: Optional[str] = None) -> FiniteQuasigroup:
    """
    Parse the text format.

    Blank lines are ignored; extra whitespace between entries is allowed.
    Tables over 0..n-1 are read as they are. Any other set of exactly n
    symbols (1-based integers, letters) is relabelled to 0..n-1 as in
    from_symbol_table.
    """
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if not lines:
        raise TableFormatError("empty table text")
    header = lines[0]
    if len(header) != 1 or not header[0].isdigit():
        raise TableFormatError(f"first line must be the order, got {' '.join(header)}")
    order = int(header[0])
    rows = lines[1:]
    if len(rows) != order:
        raise TableFormatError(f"expected {order} rows, found {len(rows)}")
    grid = []
    for line_number, row in enumerate(rows, start=2):
        if len(row) != order:
            msg = f"line {line_number}: expected {order} entries, found {len(row)}"
            raise TableFormatError(msg)
        grid.append([_symbol(x) for x in row])
    symbols = {x for row in grid for x in row}
    if symbols <= set(range(order)):
        return from_mul_table(grid, name=name)
    if len(symbols) != order:
        msg = f"table uses {len(symbols)} distinct symbols, expected {order}"
        raise BadEntryError(msg)
    return from_symbol_table(grid, name=name)


def table_to_json(quasigroup: FiniteQuasigroup) -> str:
    """Render a quasigroup in the structured (json) format."""
    model = CayleyTable.from_quasigroup(quasigroup)
    return model.model_dump_json(exclude_none=True) + "\n"


def table_to_dict(quasigroup: FiniteQuasigroup) -> dict:
    """Return the structured form of a quasigroup as a dict."""
    return CayleyTable.from_quasigroup(quasigroup).model_dump(exclude_none=True)


def table_from_json(text: str) -> FiniteQuasigroup:
    """Parse the structured (json) format."""
    try:
        model = CayleyTable.model_validate(json.loads(text))
    except (json.JSONDecodeError, pydantic.ValidationError) as e:
        raise TableFormatError(f"invalid structured table: {e}")
    return model.to_quasigroup()


def loads_table(text: str, name: Optional[str] = None) -> FiniteQuasigroup:
    """Parse either format, detected from the first non-blank character."""
    if text.lstrip().startswith("{"):
        return table_from_json(text)
    return table_from_text(text, name=name)


def read_table(path: path_types) -> FiniteQuasigroup:
    """
    Read a quasigroup from a file.

    Files with a .json suffix use the structured format, everything else
    the text format. Text tables are named after the file stem.
    """
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() in JSON_SUFFIXES:
        return table_from_json(text)
    return loads_table(text, name=path.stem)


def write_table(quasigroup: FiniteQuasigroup, path: path_types) -> Path:
    """Write a quasigroup to a file, format chosen by suffix as in read_table."""
    path = Path(path)
    if path.suffix.lower() in JSON_SUFFIXES:
        text = table_to_json(quasigroup)
    else:
        text = table_to_text(quasigroup)
    path.write_text(text)
    return path
