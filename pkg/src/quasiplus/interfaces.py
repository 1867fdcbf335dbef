"""
Structural interfaces used by quasiplus.

These are Protocols so that any object with the right methods qualifies,
without subclassing.
"""

from abc import abstractmethod

import numpy as np
from typing_extensions import Protocol, runtime_checkable


@runtime_checkable
class CayleyTableLike(Protocol):
    """
    Anything which exposes a square multiplication table.

    Examples
    --------
    >>> import quasiplus
    >>> z3 = quasiplus.from_mul_table([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
    >>> assert isinstance(z3, CayleyTableLike)
    >>> assert not isinstance("a string", CayleyTableLike)
    """

    @property
    @abstractmethod
    def order(self) -> int:
        """The number of elements."""

    @property
    @abstractmethod
    def mul_table(self) -> np.ndarray:
        """The multiplication table as an (order, order) array."""


@runtime_checkable
class ProgressBar(Protocol):
    """
    A class that behaves like the progressbar2.ProgressBar class.
    """

    @abstractmethod
    def update(self, value=None, force=False, **kwargs):
        """Called when updating the progress bar."""

    @abstractmethod
    def finish(self):
        """Called when the work is done."""
