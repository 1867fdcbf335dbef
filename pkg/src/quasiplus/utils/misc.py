"""
Misc. quasiplus utilities.
"""
import contextlib
import warnings
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Iterator, List, Optional, TypeVar

import numpy as np

from quasiplus.constants import CHUNK_SIZE
from quasiplus.exceptions import LargeOrderWarning, OrderTooLargeError

T = TypeVar("T")


@contextlib.contextmanager
def suppress_warnings(category=Warning):
    """
    Context manager for suppressing warnings.

    Parameters
    ----------
    category
        The types of warnings to suppress. Must be a subclass of Warning.
    """
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", category=category)
        yield


def _get_progressbar():
    """Suppress ProgressBar's warning."""
    with suppress_warnings():
        from progressbar import ProgressBar
    return ProgressBar


def get_progressbar(max_value, min_value=None, *args, **kwargs) -> Optional[Any]:
    """
    Get a progress bar object using the ProgressBar2 library.

    Fails gracefully if bar cannot be displayed (eg if no std out).
    Args and kwargs are passed to ProgressBar constructor.

    Parameters
    ----------
    max_value
        The highest number expected
    min_value
        The minimum number of updates required to show the bar
    """

    def _new_update(bar):
        """A new update function that swallows attribute and index errors"""
        old_update = bar.update

        def update(value=None, force=False, **kwargs):
            with contextlib.suppress((IndexError, ValueError, AttributeError)):
                old_update(value=value, force=force, **kwargs)

        return update

    if min_value and max_value < min_value:
        return None  # no progress bar needed, return None
    try:
        ProgressBar = _get_progressbar()
        bar = ProgressBar(max_value=max_value, *args, **kwargs)
        bar.start()
        bar.update = _new_update(bar)
    except Exception:  # this can happen when stdout is being redirected
        return None
    return bar


def split_keys(value: Optional[str]) -> List[str]:
    """
    Split a comma separated option value into stripped, non-empty keys.

    Examples
    --------
    >>> split_keys("M, El,Er")
    ['M', 'El', 'Er']
    >>> split_keys(None)
    []
    """
    if not value:
        return []
    return [x.strip() for x in value.split(",") if x.strip()]


def check_order(order: int, limit: int, allow_large: bool = False, what: str = ""):
    """
    Raise OrderTooLargeError if order exceeds limit, unless allow_large.

    When the guard is overridden a LargeOrderWarning is issued instead.
    """
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    if order <= limit:
        return
    msg = f"order {order} exceeds the {what or 'desk-scale'} limit of {limit}"
    if not allow_large:
        raise OrderTooLargeError(msg + "; pass allow_large to override")
    warnings.warn(msg, LargeOrderWarning)


def chunk_array(
    array: np.ndarray, chunk_size: int = CHUNK_SIZE
) -> Iterator[np.ndarray]:
    """Yield consecutive slices of array along its first axis."""
    for start in range(0, len(array), chunk_size):
        yield array[start : start + chunk_size]


def map_chunks(
    func: Callable[[np.ndarray], T],
    array: np.ndarray,
    workers: int = 1,
    chunk_size: int = CHUNK_SIZE,
) -> List[T]:
    """
    Apply func to consecutive chunks of array, optionally in worker processes.

    Results are returned in chunk order regardless of the number of workers,
    so aggregated output does not depend on how the work was split. func
    must be picklable (a module-level function or a functools.partial of
    one) when workers > 1.
    """
    chunks = list(chunk_array(array, chunk_size))
    if workers <= 1 or len(chunks) <= 1:
        return [func(x) for x in chunks]
    with ProcessPoolExecutor(min(workers, len(chunks))) as executor:
        return list(executor.map(func, chunks))
