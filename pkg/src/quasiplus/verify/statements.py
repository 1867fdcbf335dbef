"""
The registry of statements that can be verified over corpora.

Each statement is a list of clauses. A clause is an implication
hypothesis => conclusion, or an equivalence checked in both directions.
"""
from types import MappingProxyType as MapProxy
from typing import Dict, List, NamedTuple, Tuple

import numpy as np
from typing_extensions import Literal

from quasiplus.constants import STATEMENT_IDS
from quasiplus.exceptions import UnknownStatementError
from quasiplus.identities.evaluate import TableStack
from quasiplus.utils.docs import compose_docstring, format_mapping
from quasiplus.verify.properties import (
    All,
    Any,
    EFCommute,
    Endomorphic,
    Holds,
    Iff,
    Property,
    Trimedial,
)

direction_type = Literal["forward", "backward"]


class Clause(NamedTuple):
    """hypothesis => conclusion, or <=> when equivalence is set."""

    hypothesis: Property
    conclusion: Property
    equivalence: bool = False

    def __str__(self):
        arrow = "<=>" if self.equivalence else "=>"
        return f"{self.hypothesis} {arrow} {self.conclusion}"

    def failures(self, stack: TableStack) -> Dict[direction_type, np.ndarray]:
        """
        Boolean masks of the models breaking each direction.

        "forward" marks hypothesis without conclusion, "backward" (only for
        equivalences) marks conclusion without hypothesis.
        """
        hypothesis = self.hypothesis.mask(stack)
        conclusion = self.conclusion.mask(stack)
        out = {"forward": hypothesis & ~conclusion}
        if self.equivalence:
            out["backward"] = conclusion & ~hypothesis
        return out

    def explain(self, quasigroup, direction: direction_type) -> Dict[str, int]:
        """The witness of the side that fails on a counterexample."""
        side = self.conclusion if direction == "forward" else self.hypothesis
        return side.witness(quasigroup) or {}


class Statement(NamedTuple):
    """A named result made of clauses."""

    id: str
    description: str
    clauses: Tuple[Clause, ...]

    def __str__(self):
        return "; ".join(str(x) for x in self.clauses)

    def failure_masks(self, stack: TableStack) -> np.ndarray:
        """
        Failures of every clause direction, shape (num_directions, count).

        Rows follow :meth:`directions`.
        """
        rows = []
        for clause in self.clauses:
            rows.extend(clause.failures(stack).values())
        return np.array(rows, dtype=bool).reshape(-1, len(stack))

    def directions(self) -> List[Tuple[int, direction_type]]:
        """(clause index, direction) of each row of :meth:`failure_masks`."""
        out = []
        for num, clause in enumerate(self.clauses):
            out.append((num, "forward"))
            if clause.equivalence:
                out.append((num, "backward"))
        return out


def _holds(*keys, on=None) -> Property:
    parts = [Holds(x, on=on) for x in keys]
    return parts[0] if len(parts) == 1 else All(*parts)


_TRIMEDIAL = Trimedial()

_STATEMENTS = (
    Statement(
        "prop1",
        "a semimedial left (or right) F-quasigroup is trimedial, and conversely",
        (
            Clause(_holds("Sl", "Sr", "Fl"), _TRIMEDIAL, True),
            Clause(_holds("Sl", "Sr", "Fr"), _TRIMEDIAL, True),
        ),
    ),
    Statement(
        "thm1",
        "a quasigroup is trimedial iff it satisfies El and Er",
        (Clause(_holds("El", "Er"), _TRIMEDIAL, True),),
    ),
    Statement(
        "thm2",
        "trimedial iff right semimedial left F iff left semimedial right F",
        (
            Clause(_TRIMEDIAL, _holds("Sr", "Fl"), True),
            Clause(_TRIMEDIAL, _holds("Sl", "Fr"), True),
        ),
    ),
    Statement(
        "lem1",
        "Q satisfies a left law iff its opposite satisfies the right law",
        (
            Clause(_holds("Fl"), _holds("Fr", on="opp"), True),
            Clause(_holds("Sl"), _holds("Sr", on="opp"), True),
            Clause(_holds("El"), _holds("Er", on="opp"), True),
        ),
    ),
    Statement(
        "lem2",
        "F-laws of Q are semimedial laws of a parastrophe; E-laws carry over",
        (
            Clause(_holds("Fl"), _holds("Sl", on="l"), True),
            Clause(_holds("Fr"), _holds("Sr", on="r"), True),
            Clause(_holds("El"), _holds("El", on="l"), True),
            Clause(_holds("Er"), _holds("Er", on="r"), True),
        ),
    ),
    Statement(
        "lem3",
        "the E- and F-laws make a local unit map an endomorphism",
        (
            Clause(_holds("El"), Endomorphic("f")),
            Clause(_holds("Er"), Endomorphic("e")),
            Clause(_holds("Fl"), Endomorphic("e")),
            Clause(_holds("Fr"), Endomorphic("f")),
        ),
    ),
    Statement(
        "lem4",
        "if e or f is an endomorphism then e and f commute",
        (Clause(Any(Endomorphic("e"), Endomorphic("f")), EFCommute()),),
    ),
    Statement(
        "lem5",
        "under El, Fl iff Sl; under Er, Fr iff Sr",
        (
            Clause(_holds("El"), Iff(Holds("Fl"), Holds("Sl"))),
            Clause(_holds("Er"), Iff(Holds("Fr"), Holds("Sr"))),
        ),
    ),
    Statement(
        "lem6",
        "a quasigroup satisfying El and Er is an F-quasigroup",
        (Clause(_holds("El", "Er"), _holds("Fl", "Fr")),),
    ),
    Statement(
        "lem7",
        "a right semimedial left F-quasigroup satisfies Er, and dually",
        (
            Clause(_holds("Sr", "Fl"), _holds("Er")),
            Clause(_holds("Sl", "Fr"), _holds("El")),
        ),
    ),
    Statement(
        "kepka_axioms",
        "trimedial quasigroups are axiomatized by Sr and K (Sl is redundant)",
        (
            Clause(_holds("Sl", "Sr", "K"), _TRIMEDIAL, True),
            Clause(_holds("Sr", "K"), _TRIMEDIAL, True),
        ),
    ),
    Statement(
        "medial_chain",
        "medial implies trimedial, which implies every named law",
        (
            Clause(_holds("M"), _TRIMEDIAL),
            Clause(_TRIMEDIAL, _holds("Sl", "Sr", "Fl", "Fr", "El", "Er", "K")),
        ),
    ),
)

STATEMENTS: Dict[str, Statement] = MapProxy({x.id: x for x in _STATEMENTS})

assert tuple(STATEMENTS) == STATEMENT_IDS


@compose_docstring(
    statements=format_mapping({k: str(v) for k, v in STATEMENTS.items()})
)
def get_statement(statement_id: str) -> Statement:
    """
    Return a registered statement.

    The registry holds:
        {statements}

    Raises
    ------
    UnknownStatementError if statement_id is not registered.
    """
    try:
        return STATEMENTS[statement_id]
    except KeyError:
        msg = f"unknown statement {statement_id!r}, use one of {', '.join(STATEMENTS)}"
        raise UnknownStatementError(msg)
