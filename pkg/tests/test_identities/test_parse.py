"""Tests for parsing and printing identities."""
from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasiplus.exceptions import IdentitySyntaxError
from quasiplus.identities.parse import (
    parse_identity,
    parse_term,
    print_identity,
    print_term,
    tokenize,
)
from quasiplus.identities.registry import IDENTITY_TEXT, NAMED_IDENTITIES
from quasiplus.identities.term import (
    BinOp,
    Identity,
    Op,
    Var,
    ldiv,
    mul,
    rdiv,
    term_depth,
)

x, y, z = Var("x"), Var("y"), Var("z")


@lru_cache(maxsize=None)
def terms(depth: int = 5):
    """Strategy for terms of depth at most depth."""
    variables = st.sampled_from(["x", "y", "z", "u", "v", "w1"]).map(Var)
    if depth == 0:
        return variables
    children = terms(depth - 1)
    compound = st.builds(BinOp, st.sampled_from(list(Op)), children, children)
    return st.one_of(variables, compound)


class TestParse:
    """Tests for the grammar."""

    def test_el(self):
        """The E_l law parses to the expected tree."""
        identity = parse_identity("x*(y*z) = ((x/x)*y)*(x*z)")
        assert identity.lhs == mul(x, mul(y, z))
        assert identity.rhs == mul(mul(rdiv(x, x), y), mul(x, z))
        assert identity.variables == ("x", "y", "z")

    def test_mul_binds_tighter(self):
        """x*y\\z is (x*y)\\z and x\\y*z is x\\(y*z)."""
        assert parse_term("x*y\\z") == ldiv(mul(x, y), z)
        assert parse_term("x\\y*z") == ldiv(x, mul(y, z))

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("x*y*z", mul(mul(x, y), z)),
            ("x/y/z", rdiv(rdiv(x, y), z)),
            ("x/y\\z", ldiv(rdiv(x, y), z)),
            ("x/(y\\z)", rdiv(x, ldiv(y, z))),
        ],
    )
    def test_left_associative(self, text, expected):
        """Operators of one level group to the left."""
        assert parse_term(text) == expected

    def test_whitespace_and_names(self):
        """Whitespace is ignored and names may contain digits."""
        identity = parse_identity("  x1 * ab =ab*x1 ")
        assert identity.lhs == mul(Var("x1"), Var("ab"))
        assert identity.variables == ("x1", "ab")

    def test_error_position(self):
        """'x* = y' fails at the '='."""
        with pytest.raises(IdentitySyntaxError) as e:
            parse_identity("x* = y")
        assert e.value.position == 3
        assert "^" in str(e.value)

    def test_missing_equals(self):
        """A bare term is not an identity."""
        with pytest.raises(IdentitySyntaxError) as e:
            parse_identity("x*y")
        assert e.value.position == 3
        assert "'='" in e.value.expected

    @pytest.mark.parametrize(
        "text, position",
        [("X = y", 0), ("x = y)", 5), ("(x = y", 3), ("x = y = z", 6), ("x = ", 4)],
    )
    def test_bad_text(self, text, position):
        """Each error reports where parsing stopped."""
        with pytest.raises(IdentitySyntaxError) as e:
            parse_identity(text)
        assert e.value.position == position

    def test_tokens_end(self):
        """The token list ends with an end marker at the text length."""
        tokens = tokenize("x*y")
        assert [t.kind for t in tokens] == ["var", "*", "var", "end"]
        assert tokens[-1].position == 3


class TestPrint:
    """Tests for the printer."""

    def test_el(self):
        """Every compound operand is parenthesized."""
        identity = Identity(mul(x, mul(y, z)), mul(mul(rdiv(x, x), y), mul(x, z)))
        assert print_identity(identity) == "x*(y*z) = ((x/x)*y)*(x*z)"

    def test_variables_only(self):
        """x = x."""
        assert print_identity(Identity(x, x)) == "x = x"

    def test_str(self):
        """str of an identity is its printed form."""
        assert str(NAMED_IDENTITIES["Sr"]) == "(z*y)*(x*x) = (z*x)*(y*x)"

    def test_registry_golden_file(self, data_path):
        """The registry prints back to the golden text byte for byte."""
        expected = (data_path / "registry_identities.txt").read_text()
        printed = "".join(
            f"{key}: {print_identity(identity)}\n"
            for key, identity in NAMED_IDENTITIES.items()
        )
        assert printed == expected

    @pytest.mark.parametrize("key", list(IDENTITY_TEXT))
    def test_registry_fixed_point(self, key):
        """parse(print(identity)) == identity for the registry."""
        identity = NAMED_IDENTITIES[key]
        assert parse_identity(print_identity(identity)) == identity
        assert print_identity(identity) == IDENTITY_TEXT[key]

    @settings(max_examples=1000, derandomize=True, deadline=None)
    @given(terms(5), terms(5))
    def test_random_round_trip(self, lhs, rhs):
        """parse(print(identity)) == identity for random trees."""
        identity = Identity(lhs, rhs)
        assert term_depth(lhs) <= 5
        assert parse_identity(print_identity(identity)) == identity

    @settings(max_examples=200, derandomize=True, deadline=None)
    @given(terms(4))
    def test_print_fixed_point(self, term):
        """Printing a reparsed term gives the same text."""
        text = print_term(term)
        assert print_term(parse_term(text)) == text
