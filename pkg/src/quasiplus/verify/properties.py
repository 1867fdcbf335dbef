"""
Properties of quasigroups that statements are made of.

A property is evaluated two ways: on a whole TableStack at once (`mask`)
and on a single model where it explains a failure (`witness`). Witnesses
are small dicts of named elements, e.g. the assignment on which an
identity fails.
"""
import abc
from typing import Dict, Optional, Union

import numpy as np

from quasiplus.core.closure import is_endomorphism
from quasiplus.core.quasigroup import (
    FiniteQuasigroup,
    ParastropheKind,
    parastrophe_tables,
)
from quasiplus.identities.evaluate import TableStack, holds, satisfaction_mask
from quasiplus.identities.registry import get_identity, identity_label
from quasiplus.verify.trimedial import is_trimedial, trimedial_mask

witness_type = Optional[Dict[str, int]]


class Property(abc.ABC):
    """Base class for a predicate on quasigroups."""

    @abc.abstractmethod
    def mask(self, stack: TableStack) -> np.ndarray:
        """Return a boolean array, True where the property holds."""

    @abc.abstractmethod
    def witness(self, quasigroup: FiniteQuasigroup) -> witness_type:
        """Return None if the property holds, else what makes it fail."""

    def __call__(self, quasigroup: FiniteQuasigroup) -> bool:
        return self.witness(quasigroup) is None

    def __and__(self, other: "Property") -> "All":
        return All(self, other)

    def __or__(self, other: "Property") -> "Any":
        return Any(self, other)

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class Holds(Property):
    """
    An identity holds in the quasigroup or in one of its parastrophes.
    """

    def __init__(self, identity: str, on: Union[str, ParastropheKind, None] = None):
        self.identity = get_identity(identity)
        self.label = identity_label(identity)
        self.on = None if on is None else ParastropheKind.coerce(on)

    def _target(self, stack: TableStack) -> TableStack:
        if self.on is None:
            return stack
        return TableStack.from_mul(parastrophe_tables(stack.mul, self.on))

    def mask(self, stack):
        return satisfaction_mask(self._target(stack), self.identity)

    def witness(self, quasigroup):
        if self.on is not None:
            quasigroup = quasigroup.parastrophe(self.on)
        result = holds(quasigroup, self.identity)
        return None if result is True else dict(result.assignment)

    def __str__(self):
        if self.on is None:
            return self.label
        return f"{self.label}(Q_{self.on.value})"


class Trimedial(Property):
    """Every subquasigroup generated by three elements is medial."""

    def mask(self, stack):
        return trimedial_mask(stack)

    def witness(self, quasigroup):
        result = is_trimedial(quasigroup)
        if result is True:
            return None
        out = {f"g{num}": value for num, value in enumerate(result.generators, 1)}
        out.update(result.witness.assignment)
        return out

    def __str__(self):
        return "trimedial"


def _unit_maps(stack: TableStack, which: str) -> np.ndarray:
    """e(x) = x\\x or f(x) = x/x for each model, shape (count, n)."""
    table = stack.ldiv if which == "e" else stack.rdiv
    return np.diagonal(table, axis1=1, axis2=2)


class Endomorphic(Property):
    """The local unit map e (x\\x) or f (x/x) is an endomorphism."""

    def __init__(self, which: str):
        if which not in ("e", "f"):
            raise ValueError(f"which must be 'e' or 'f', got {which!r}")
        self.which = which

    def mask(self, stack):
        maps = _unit_maps(stack, self.which)
        model = np.arange(len(stack))[:, None, None]
        mul = stack.mul
        image_of_product = maps[model, mul]
        product_of_images = mul[model, maps[:, :, None], maps[:, None, :]]
        return (image_of_product == product_of_images).all(axis=(1, 2))

    def witness(self, quasigroup):
        image = quasigroup.e_map() if self.which == "e" else quasigroup.f_map()
        result = is_endomorphism(quasigroup, image)
        return None if result is True else {"x": result.x, "y": result.y}

    def __str__(self):
        return f"{self.which} endomorphism"


class EFCommute(Property):
    """f(e(x)) = e(f(x)) for every x."""

    def mask(self, stack):
        e, f = _unit_maps(stack, "e"), _unit_maps(stack, "f")
        f_of_e = np.take_along_axis(f, e, axis=1)
        e_of_f = np.take_along_axis(e, f, axis=1)
        return (f_of_e == e_of_f).all(axis=1)

    def witness(self, quasigroup):
        e, f = quasigroup.e_map(), quasigroup.f_map()
        for x in quasigroup.elements:
            if f[e[x]] != e[f[x]]:
                return {"x": x}
        return None

    def __str__(self):
        return "fe = ef"


class _Compound(Property):
    joiner = ""

    def __init__(self, *parts: Property):
        self.parts = parts

    def __str__(self):
        inner = f" {self.joiner} ".join(_wrap(x) for x in self.parts)
        return inner


class All(_Compound):
    """Every part holds."""

    joiner = "and"

    def mask(self, stack):
        out = np.ones(len(stack), dtype=bool)
        for part in self.parts:
            if not out.any():
                break
            out &= part.mask(stack)
        return out

    def witness(self, quasigroup):
        for part in self.parts:
            found = part.witness(quasigroup)
            if found is not None:
                return found
        return None


class Any(_Compound):
    """At least one part holds."""

    joiner = "or"

    def mask(self, stack):
        out = np.zeros(len(stack), dtype=bool)
        for part in self.parts:
            if out.all():
                break
            out |= part.mask(stack)
        return out

    def witness(self, quasigroup):
        found = None
        for part in self.parts:
            found = part.witness(quasigroup)
            if found is None:
                return None
        return found


class Iff(_Compound):
    """Both parts hold or neither does."""

    joiner = "<=>"

    def __init__(self, first: Property, second: Property):
        super().__init__(first, second)

    def mask(self, stack):
        first, second = self.parts
        return first.mask(stack) == second.mask(stack)

    def witness(self, quasigroup):
        first, second = self.parts
        left, right = first.witness(quasigroup), second.witness(quasigroup)
        if (left is None) == (right is None):
            return None
        return left if left is not None else right


def _wrap(part: Property) -> str:
    """Parenthesize compound parts when nesting."""
    text = str(part)
    return f"({text})" if isinstance(part, _Compound) else text
