"""Tests for subquasigroup closure and endomorphisms."""
import itertools

import pytest

from quasiplus.core.closure import (
    closure_mask,
    generated_subquasigroup,
    is_endomorphism,
    mask_to_elements,
    maps_commute_ef,
)
from quasiplus.core.quasigroup import ElementMap, from_mul_table
from quasiplus.exceptions import BadEntryError, EmptyGeneratorsError
from quasiplus.utils.testing import naive_closure


class TestGeneratedSubquasigroup:
    """Tests for the closure of generator sets."""

    def test_z3(self, z3):
        """0 alone is closed, 1 generates everything."""
        assert generated_subquasigroup(z3, {0}) == (0,)
        assert generated_subquasigroup(z3, [1]) == (0, 1, 2)

    def test_subtraction_zero(self, subtraction):
        """0 - 0 = 0 and both divisions of 0 by 0 are 0."""
        assert generated_subquasigroup(subtraction, {0}) == (0,)

    def test_s3_rotations(self, s3):
        """The rotations form a subgroup; a reflection adds everything."""
        assert generated_subquasigroup(s3, {1}) == (0, 1, 2)
        assert generated_subquasigroup(s3, {1, 3}) == tuple(range(6))
        assert generated_subquasigroup(s3, {3}) == (0, 3)

    def test_empty_generators(self, z3):
        """At least one generator is needed."""
        with pytest.raises(EmptyGeneratorsError):
            generated_subquasigroup(z3, set())

    def test_bad_generator(self, z3):
        """Generators must be elements."""
        with pytest.raises(BadEntryError):
            generated_subquasigroup(z3, {3})

    def test_matches_naive_closure(self, order_4_quasigroups):
        """The worklist closure equals the fixpoint sweep."""
        for q in order_4_quasigroups[::5]:
            for a in q.elements:
                for b in q.elements:
                    fast = generated_subquasigroup(q, {a, b})
                    assert set(fast) == naive_closure(q, {a, b})

    def test_closure_is_closed(self, s3):
        """Closing a closed mask changes nothing."""
        mask = closure_mask(s3.rows, 0b10)
        assert closure_mask(s3.rows, mask) == mask
        assert mask_to_elements(mask) == (0, 1, 2)

    def test_idempotent(self, order_4_quasigroups):
        """The closure of a generated subquasigroup is itself."""
        for q in order_4_quasigroups[::3]:
            for a, b in itertools.combinations(q.elements, 2):
                members = generated_subquasigroup(q, {a, b})
                assert generated_subquasigroup(q, members) == members

    def test_monotone(self, order_4_quasigroups):
        """More generators never give a smaller subquasigroup."""
        for q in order_4_quasigroups[::3]:
            for a, b, c in itertools.permutations(q.elements, 3):
                one = set(generated_subquasigroup(q, {a}))
                two = set(generated_subquasigroup(q, {a, b}))
                three = set(generated_subquasigroup(q, {a, b, c}))
                assert one <= two <= three


class TestIsEndomorphism:
    """Tests for the endomorphism check."""

    def test_identity_and_constant(self, z3):
        """Identity is an endomorphism, and so is mapping to the unit."""
        assert is_endomorphism(z3, ElementMap.identity(3)) is True
        assert is_endomorphism(z3, ElementMap.constant(3, 0)) is True

    def test_witness(self, z3):
        """Constant 1 fails at (0, 0): image 1 but 1*1 = 2."""
        result = is_endomorphism(z3, [1, 1, 1])
        assert not result
        assert (result.x, result.y) == (0, 0)
        assert result.image_of_product == 1
        assert result.product_of_images == 2

    def test_wrong_length(self, z3):
        """Maps must have one image per element."""
        with pytest.raises(BadEntryError):
            is_endomorphism(z3, [0, 1])

    def test_doubling(self, z3):
        """x -> 2x is an automorphism of Z3."""
        assert is_endomorphism(z3, [0, 2, 1]) is True

    def test_transposition(self, z3):
        """Swapping 0 and 1 fails at (0, 0): image 1 but 1*1 = 2."""
        result = is_endomorphism(z3, [1, 0, 2])
        assert not result
        assert (result.x, result.y) == (0, 0)
        assert (result.image_of_product, result.product_of_images) == (1, 2)

    def test_composition(self, order_4_quasigroups):
        """Composites of endomorphisms are endomorphisms."""
        for q in order_4_quasigroups[::8]:
            maps = (ElementMap(x) for x in itertools.product(q.elements, repeat=4))
            endomorphisms = [x for x in maps if is_endomorphism(q, x) is True]
            assert ElementMap.identity(4) in endomorphisms
            for first in endomorphisms:
                for second in endomorphisms:
                    assert is_endomorphism(q, first.compose(second)) is True


class TestMapsCommute:
    """Tests for f(e(x)) = e(f(x))."""

    def test_groups(self, z3, s3):
        """Unit maps of groups are constant and commute."""
        assert maps_commute_ef(z3)
        assert maps_commute_ef(s3)

    def test_subtraction(self, subtraction):
        """e is constant 0 and f(0) = 0, so both sides vanish."""
        assert maps_commute_ef(subtraction)

    def test_constant_e(self):
        """e constant at 1 and f = [2, 1, 0]; f(e(x)) = e(f(x)) = 1."""
        q = from_mul_table([[1, 0, 2], [2, 1, 0], [0, 2, 1]])
        assert q.e_map() == ElementMap([1, 1, 1])
        assert q.f_map() == ElementMap([2, 1, 0])
        assert maps_commute_ef(q)

    def test_matches_definition(self, order_4_quasigroups):
        """Agrees with composing the maps directly."""
        for q in order_4_quasigroups:
            e, f = q.e_map(), q.f_map()
            assert maps_commute_ef(q) == (f.compose(e) == e.compose(f))
