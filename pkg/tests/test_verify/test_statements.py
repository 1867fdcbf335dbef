"""Tests for the statement registry."""
import numpy as np
import pytest

from quasiplus.constants import STATEMENT_IDS
from quasiplus.exceptions import UnknownStatementError
from quasiplus.identities.evaluate import TableStack
from quasiplus.verify.properties import Holds, Trimedial
from quasiplus.verify.statements import STATEMENTS, Clause, get_statement


class TestRegistry:
    """Tests for looking up statements."""

    def test_ids(self):
        """Every id is registered, in order."""
        assert tuple(STATEMENTS) == STATEMENT_IDS

    def test_unknown(self):
        """Unknown ids raise a KeyError subclass naming the choices."""
        with pytest.raises(UnknownStatementError, match="thm1"):
            get_statement("thm9")

    def test_docstring(self):
        """The docstring lists every statement."""
        for statement_id in STATEMENT_IDS:
            assert statement_id in get_statement.__doc__

    def test_thm1_text(self):
        """Statements print their clauses."""
        assert str(get_statement("thm1")) == "El and Er <=> trimedial"


class TestClause:
    """Tests for clause failures."""

    def test_directions(self, order_4_tables):
        """Equivalences have a backward direction."""
        stack = TableStack.from_mul(order_4_tables)
        clause = Clause(Holds("M"), Holds("Sl"), equivalence=True)
        failures = clause.failures(stack)
        assert set(failures) == {"forward", "backward"}
        assert not failures["forward"].any()

    def test_explain(self, s3):
        """explain names the witness of the failing side."""
        clause = Clause(Holds("Fl"), Trimedial())
        witness = clause.explain(s3, "forward")
        assert witness["g1"] == 0

    def test_masks_follow_directions(self, order_3_tables):
        """One failure row per direction."""
        stack = TableStack.from_mul(order_3_tables)
        for statement in STATEMENTS.values():
            masks = statement.failure_masks(stack)
            assert masks.shape == (len(statement.directions()), 12)


class TestStatementsHold:
    """Every registered statement holds on small and sampled models."""

    @pytest.mark.parametrize("statement_id", STATEMENT_IDS)
    def test_small_orders(self, statement_id, small_tables):
        """No failures on any quasigroup of order <= 4."""
        statement = get_statement(statement_id)
        for tables in small_tables:
            masks = statement.failure_masks(TableStack.from_mul(tables))
            assert not masks.any()

    @pytest.mark.parametrize("statement_id", STATEMENT_IDS)
    def test_order_6_sample(self, statement_id, random_order_6):
        """No failures on 100 seeded models of order 6."""
        statement = get_statement(statement_id)
        masks = statement.failure_masks(TableStack.from_mul(random_order_6))
        assert not np.any(masks)

    def test_groups(self, s3, z3):
        """Groups satisfy the F-laws, so lem3 makes e and f endomorphisms."""
        statement = get_statement("lem3")
        for q in (s3, z3):
            masks = statement.failure_masks(TableStack.from_quasigroup(q))
            assert not masks.any()
