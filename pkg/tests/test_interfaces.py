"""
Ensure the interface isinstance and issubclass methods work
"""
import numpy as np
import pytest

from quasiplus import FiniteQuasigroup
from quasiplus.interfaces import CayleyTableLike, ProgressBar
from quasiplus.search.canonical import CanonicalForm, canonical_form
from quasiplus.utils.misc import _get_progressbar


class TestCayleyTableLike:
    """Tests for the table interface."""

    not_tables = ["a", 1, np.zeros((2, 2))]

    def test_quasigroup(self, z3):
        """Quasigroups expose their tables."""
        assert isinstance(z3, CayleyTableLike)
        assert isinstance(FiniteQuasigroup([[0]]), CayleyTableLike)

    def test_custom_table(self, z3):
        """Any object with order and mul_table qualifies."""

        class Table:
            order = 3
            mul_table = z3.mul_table

        assert isinstance(Table(), CayleyTableLike)
        assert canonical_form(Table()) == canonical_form(z3)

    @pytest.mark.parametrize("not_table", not_tables)
    def test_not_instances(self, not_table):
        """Ensure a few negative examples work."""
        assert not isinstance(not_table, CayleyTableLike)

    def test_arrays_canonicalize(self, z3):
        """Plain arrays are accepted by canonical_form too."""
        assert isinstance(canonical_form(z3.mul_table), CanonicalForm)


class TestBar:
    """Tests the progressbar interface."""

    def test_progressbar_isinstance(self):
        """Ensure the ProgressBar2 ProgressBar is an instance."""
        ProgBar = _get_progressbar()
        assert issubclass(ProgBar, ProgressBar)

    def test_custom_progress_bar(self):
        """Ensure custom progress bar works as well."""

        class MyBar:
            def update(self, num):
                pass

            def finish(self):
                pass

        assert issubclass(MyBar, ProgressBar)
        assert isinstance(MyBar(), ProgressBar)

    def test_malformed_progress_bar(self):
        """
        Ensure a ProgressBar implementation missing methods is not subclass.
        """

        class MyBadBar:
            def update(self, num):
                pass

        assert not issubclass(MyBadBar, ProgressBar)
        assert not isinstance(MyBadBar(), ProgressBar)
