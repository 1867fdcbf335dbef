"""
Pydantic schema for the structured-object Cayley table format.

The structured format mirrors the text format: an order, the rows of the
multiplication table and an optional name.
"""
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from quasiplus.core.quasigroup import FiniteQuasigroup, from_mul_table


class CayleyTable(BaseModel):
    """A multiplication table with its order and an optional name."""

    model_config = ConfigDict(extra="forbid")

    order: int = Field(gt=0)
    mul: List[List[int]]
    name: Optional[str] = None

    @model_validator(mode="after")
    def _check_shape(self):
        """The table must have `order` rows of `order` entries."""
        shapes = {len(row) for row in self.mul}
        if len(self.mul) != self.order or shapes != {self.order}:
            msg = f"mul must be {self.order} rows of {self.order} entries"
            raise ValueError(msg)
        return self

    @classmethod
    def from_quasigroup(cls, quasigroup: FiniteQuasigroup) -> "CayleyTable":
        """Create the structured form of a quasigroup."""
        return cls(
            order=quasigroup.order, mul=quasigroup.to_list(), name=quasigroup.name
        )

    def to_quasigroup(self) -> FiniteQuasigroup:
        """Validate the table and build the quasigroup."""
        return from_mul_table(self.mul, name=self.name)
