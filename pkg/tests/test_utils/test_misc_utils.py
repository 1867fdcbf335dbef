""" tests for misc. utility functions """
import numpy as np
import pytest

import quasiplus
import quasiplus.utils.misc
from quasiplus.exceptions import LargeOrderWarning, OrderTooLargeError
from quasiplus.utils.misc import (
    check_order,
    chunk_array,
    map_chunks,
    split_keys,
)


def _row_sums(array):
    """Module level so it pickles."""
    return array.sum(axis=(1, 2)).tolist()


class TestSplitKeys:
    """Tests for comma separated options."""

    def test_basic(self):
        """Whitespace and empty entries are dropped."""
        assert split_keys(" M, El,,Er ") == ["M", "El", "Er"]

    def test_empty(self):
        """None and empty strings give no keys."""
        assert split_keys(None) == []
        assert split_keys("") == []


class TestCheckOrder:
    """Tests for the order guard."""

    def test_within_limit(self):
        """Small orders pass silently."""
        check_order(5, 5)

    def test_too_large(self):
        """The message names what was limited."""
        with pytest.raises(OrderTooLargeError, match="canonical form"):
            check_order(9, 8, what="canonical form")

    def test_override_warns(self):
        """allow_large turns the error into a warning."""
        with pytest.warns(LargeOrderWarning):
            check_order(6, 5, allow_large=True)

    def test_non_positive(self):
        """Order 0 is always an error."""
        with pytest.raises(ValueError):
            check_order(0, 5, allow_large=True)


class TestChunks:
    """Tests for splitting work into chunks."""

    def test_chunk_array(self):
        """Chunks cover the array in order."""
        chunks = list(chunk_array(np.arange(10), 4))
        assert [len(x) for x in chunks] == [4, 4, 2]
        assert np.concatenate(chunks).tolist() == list(range(10))

    def test_map_chunks_order(self, order_4_tables):
        """Results come back in chunk order for any number of workers."""
        serial = map_chunks(_row_sums, order_4_tables, workers=1, chunk_size=100)
        parallel = map_chunks(_row_sums, order_4_tables, workers=3, chunk_size=100)
        assert serial == parallel
        assert len(serial) == 6

    def test_empty(self):
        """No chunks, no results."""
        assert map_chunks(_row_sums, np.empty((0, 2, 2)), workers=2) == []


class TestProgressBar:
    """Tests for progress bar functionality."""

    def test_graceful_progress_fail(self, monkeypatch):
        """Ensure a progress bar that cant update returns None"""
        ProgressBar = quasiplus.utils.misc._get_progressbar()

        def raise_exception():
            raise Exception

        monkeypatch.setattr(ProgressBar, "start", raise_exception)
        assert quasiplus.utils.misc.get_progressbar(100) is None

    def test_simple_progress_bar(self):
        """Ensure a simple progress bar can be used."""
        ProgressBar = quasiplus.utils.misc._get_progressbar()

        bar = quasiplus.utils.misc.get_progressbar(max_value=100, min_value=1)
        assert isinstance(bar, ProgressBar)
        bar.update(1)  # if this doesn't raise the test passes

    def test_none_if_min_value_not_met(self):
        """Bar should return None if the min value isn't met."""
        bar = quasiplus.utils.misc.get_progressbar(max_value=1, min_value=100)
        assert bar is None
