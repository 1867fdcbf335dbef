"""A collection of quasiplus Exceptions and Warnings."""

# --- Exceptions


class QuasigroupError(ValueError):
    """Base class for errors raised while building or reading quasigroups."""


class BadEntryError(QuasigroupError):
    """Raised when a table entry is not an element of the quasigroup."""


class NotLatinError(QuasigroupError):
    """
    Raised when a multiplication table is not a Latin square.

    Parameters
    ----------
    axis
        Either "row" or "column".
    index
        The index of the offending row or column.
    symbol
        The symbol which appears more than once.
    """

    def __init__(self, axis: str, index: int, symbol: int):
        self.axis = axis
        self.index = index
        self.symbol = symbol
        msg = f"{axis} {index} repeats symbol {symbol}"
        super().__init__(msg)


class TableFormatError(QuasigroupError):
    """Raised when a Cayley table file or object is malformed."""


class CorpusFormatError(ValueError):
    """Raised when a corpus file is malformed."""


class EmptyGeneratorsError(ValueError):
    """Raised when a subquasigroup is requested from no generators."""


class IdentitySyntaxError(ValueError):
    """
    Raised when identity text cannot be parsed.

    Parameters
    ----------
    position
        Zero-based character offset where parsing failed.
    expected
        A description of what the parser expected at position.
    """

    def __init__(self, position: int, expected: str, text: str = ""):
        self.position = position
        self.expected = expected
        self.text = text
        msg = f"expected {expected} at position {position}"
        if text:
            msg += f"\n  {text}\n  {' ' * position}^"
        super().__init__(msg)


class UnboundVariableError(KeyError):
    """Raised when a term is evaluated without a value for one of its variables."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(name)

    def __str__(self):
        return f"variable {self.name!r} is not bound"


class UnknownIdentityError(KeyError):
    """Raised when a key is neither a registry identity nor parseable text."""


class UnknownStatementError(KeyError):
    """Raised when a statement id is not in the verification registry."""


class OrderTooLargeError(ValueError):
    """Raised when an order exceeds a desk-scale guard without override."""


# --- Warnings


class LargeOrderWarning(UserWarning):
    """Displayed when a size guard is overridden."""
