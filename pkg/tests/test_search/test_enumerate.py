"""Tests for exhaustive Latin square enumeration."""
import math

import numpy as np
import pytest

from quasiplus.constants import LATIN_SQUARE_COUNTS, REDUCED_SQUARE_COUNTS
from quasiplus.core.quasigroup import is_latin_square
from quasiplus.exceptions import LargeOrderWarning, OrderTooLargeError
from quasiplus.search.enumerate import (
    enumerate_latin_squares,
    iter_latin_squares,
    latin_square_stack,
)
from quasiplus.utils.testing import naive_latin_squares


class TestCounts:
    """Tests for the number of squares found."""

    @pytest.mark.parametrize("order", [1, 2, 3, 4])
    def test_known_counts(self, order):
        """1, 2, 12 and 576 squares."""
        assert enumerate_latin_squares(order) == LATIN_SQUARE_COUNTS[order]

    @pytest.mark.parametrize("order", [1, 2, 3, 4])
    def test_reduced_counts(self, order):
        """Every square is a reduced square with permuted rows and columns."""
        reduced = enumerate_latin_squares(order, reduced=True)
        assert reduced == REDUCED_SQUARE_COUNTS[order]
        factor = math.factorial(order) * math.factorial(order - 1)
        assert reduced * factor == LATIN_SQUARE_COUNTS[order]

    @pytest.mark.slow
    def test_order_5(self):
        """161280 squares of order 5, 56 of them reduced."""
        assert enumerate_latin_squares(5) == 161280
        assert enumerate_latin_squares(5, reduced=True) == 56


class TestSquares:
    """Tests for the squares themselves."""

    @pytest.mark.parametrize("order", [1, 2, 3])
    def test_matches_naive(self, order):
        """The backtracking search finds exactly the brute force squares."""
        found = {square for square in iter_latin_squares(order)}
        naive = {tuple(q.rows[0]) for q in naive_latin_squares(order)}
        assert found == naive

    def test_order_4_first_row_fixed(self):
        """Squares with a fixed first row, times 4!, give all 576."""
        naive = {q.rows[0] for q in naive_latin_squares(4, first_row=(0, 1, 2, 3))}
        assert len(naive) * math.factorial(4) == LATIN_SQUARE_COUNTS[4]
        found = {x for x in iter_latin_squares(4) if x[0] == (0, 1, 2, 3)}
        assert found == naive

    def test_naive_limits(self):
        """The brute force oracles refuse orders they cannot finish."""
        with pytest.raises(ValueError):
            next(naive_latin_squares(4))
        with pytest.raises(ValueError):
            next(naive_latin_squares(5, first_row=range(5)))

    def test_no_duplicates(self, order_4_tables):
        """Every square of order 4 appears once."""
        assert len(np.unique(order_4_tables, axis=0)) == len(order_4_tables)

    def test_all_latin(self, order_4_tables):
        """Every square is a Latin square."""
        assert all(is_latin_square(x) for x in order_4_tables)

    def test_visitor(self):
        """The visitor sees each square as nested tuples."""
        seen = []
        count = enumerate_latin_squares(2, visitor=seen.append)
        assert count == 2
        assert seen == [((0, 1), (1, 0)), ((1, 0), (0, 1))]

    def test_reduced_squares(self):
        """Reduced squares have natural first row and column."""
        for square in iter_latin_squares(4, reduced=True):
            assert square[0] == (0, 1, 2, 3)
            assert [row[0] for row in square] == [0, 1, 2, 3]

    def test_stack_matches_iterator(self, order_3_tables):
        """The array holds the iterator's squares in the same order."""
        assert order_3_tables.dtype == np.uint8
        assert [tuple(map(tuple, x)) for x in order_3_tables.tolist()] == list(
            iter_latin_squares(3)
        )

    def test_workers(self, order_4_tables):
        """Splitting across processes does not change the result."""
        assert np.array_equal(latin_square_stack(4, workers=2), order_4_tables)


class TestGuards:
    """Tests for the order guard."""

    def test_too_large(self):
        """Order 6 needs allow_large."""
        with pytest.raises(OrderTooLargeError):
            enumerate_latin_squares(6)
        with pytest.raises(OrderTooLargeError):
            latin_square_stack(6)

    def test_non_positive(self):
        """Orders start at 1."""
        with pytest.raises(ValueError):
            enumerate_latin_squares(0)

    def test_allow_large_warns(self):
        """Overriding the guard warns; the generator still works."""
        with pytest.warns(LargeOrderWarning):
            first = next(iter_latin_squares(6, allow_large=True))
        assert first[0] == (0, 1, 2, 3, 4, 5)
