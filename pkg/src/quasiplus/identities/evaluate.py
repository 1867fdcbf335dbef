"""
Evaluation of terms and identities on finite quasigroups.

Identities are checked by brute force over every assignment of their
variables. Assignments are ordered lexicographically with the first
variable most significant, and the witness returned for a failing
identity is always the first failing assignment in that order.

Whole stacks of tables (shape (count, n, n)) are evaluated at once with
numpy; the single-model functions are thin wrappers over the same code.
"""
from typing import Dict, Iterable, Mapping, NamedTuple, Optional, Sequence, Union

import numpy as np

from quasiplus.constants import EVALUATION_BUDGET
from quasiplus.core.quasigroup import FiniteQuasigroup, division_tables
from quasiplus.exceptions import UnboundVariableError
from quasiplus.identities.registry import get_identity, identity_like
from quasiplus.identities.term import BinOp, Identity, Op, Term, Var

_OP_INDEX = {Op.MUL: 0, Op.LDIV: 1, Op.RDIV: 2}


class Witness(NamedTuple):
    """
    An assignment on which the two sides of an identity differ.

    Witnesses are falsy so `if holds(...)` reads naturally.
    """

    assignment: Dict[str, int]
    lhs_value: int
    rhs_value: int

    def __bool__(self):
        return False

    def __str__(self):
        values = ", ".join(f"{k}={v}" for k, v in self.assignment.items())
        return f"{values}: {self.lhs_value} != {self.rhs_value}"


class TableStack(NamedTuple):
    """Multiplication and division tables of many models, each (count, n, n)."""

    mul: np.ndarray
    ldiv: np.ndarray
    rdiv: np.ndarray

    @classmethod
    def from_mul(cls, tables: np.ndarray) -> "TableStack":
        """Derive division tables for a (count, n, n) stack."""
        tables = np.asarray(tables, dtype=np.intp)
        if tables.ndim == 2:
            tables = tables[None]
        ldiv, rdiv = division_tables(tables)
        return cls(tables, ldiv, rdiv)

    @classmethod
    def from_quasigroup(cls, quasigroup: FiniteQuasigroup) -> "TableStack":
        """A stack holding a single quasigroup."""
        tables = (quasigroup.mul_table, quasigroup.ldiv_table, quasigroup.rdiv_table)
        return cls(*(np.asarray(x, dtype=np.intp)[None] for x in tables))

    @property
    def order(self) -> int:
        return self.mul.shape[-1]

    def __len__(self):
        return self.mul.shape[0]

    def take(self, index) -> "TableStack":
        """Select models by index or slice."""
        return TableStack(self.mul[index], self.ldiv[index], self.rdiv[index])


# --- single assignment evaluation


def eval_term(
    quasigroup: FiniteQuasigroup, term: Term, assignment: Mapping[str, int]
) -> int:
    """
    Evaluate a term under an assignment of its variables.

    Raises
    ------
    UnboundVariableError if a variable of term has no value.
    BadEntryError if a value is not an element of quasigroup.
    """
    tables = quasigroup.rows
    for name in dict.fromkeys(_names(term)):
        if name not in assignment:
            raise UnboundVariableError(name)
        quasigroup.check_element(assignment[name])

    def _eval(node):
        if isinstance(node, Var):
            return assignment[node.name]
        table = tables[_OP_INDEX[node.op]]
        return table[_eval(node.left)][_eval(node.right)]

    return _eval(term)


def _names(term: Term):
    if isinstance(term, Var):
        yield term.name
    else:
        yield from _names(term.left)
        yield from _names(term.right)


# --- vectorized evaluation


def assignment_grid(num_vars: int, domain: Sequence[int]) -> np.ndarray:
    """
    Return every assignment of num_vars variables over domain.

    The result has shape (num_vars, len(domain) ** num_vars); column j is
    the j-th assignment in lexicographic order.
    """
    domain = np.asarray(domain, dtype=np.intp)
    grid = np.indices((len(domain),) * num_vars).reshape(num_vars, -1)
    return domain[grid]


def evaluate_stack(stack: TableStack, term: Term, values: Mapping[str, np.ndarray]):
    """
    Evaluate term on every model of a stack for a batch of assignments.

    Parameters
    ----------
    stack
        The models.
    term
        The term to evaluate.
    values
        Maps each variable to an array of shape (num_assignments,).

    Returns
    -------
    An array of shape (len(stack), num_assignments).
    """
    model_index = np.arange(len(stack))[:, None]
    tables = (stack.mul, stack.ldiv, stack.rdiv)
    cache = {}

    def _eval(node):
        if node in cache:
            return cache[node]
        if isinstance(node, Var):
            if node.name not in values:
                raise UnboundVariableError(node.name)
            out = np.asarray(values[node.name])[None, :]
        else:
            table = tables[_OP_INDEX[node.op]]
            out = table[model_index, _eval(node.left), _eval(node.right)]
        cache[node] = out
        return out

    result = _eval(term)
    return np.broadcast_to(result, (len(stack), result.shape[-1]))


def _first_failures(
    stack: TableStack, identity: Identity, domain: Optional[Sequence[int]] = None
):
    """
    Yield (start, lhs, rhs, failing) for batches of models.

    failing is the index of the first failing assignment per model, -1 when
    the identity holds on that model.
    """
    domain = range(stack.order) if domain is None else domain
    grid = assignment_grid(len(identity.variables), domain)
    values = dict(zip(identity.variables, grid))
    batch = max(1, EVALUATION_BUDGET // max(1, grid.shape[1]))
    for start in range(0, len(stack), batch):
        sub = stack.take(slice(start, start + batch))
        lhs = evaluate_stack(sub, identity.lhs, values)
        rhs = evaluate_stack(sub, identity.rhs, values)
        mismatch = lhs != rhs
        failing = np.where(mismatch.any(axis=1), mismatch.argmax(axis=1), -1)
        yield start, lhs, rhs, failing, grid


def satisfaction_mask(
    stack: Union[TableStack, np.ndarray],
    identity: identity_like,
    domain: Optional[Sequence[int]] = None,
) -> np.ndarray:
    """
    Return a boolean array, True where the identity holds in each model.

    Parameters
    ----------
    stack
        A TableStack or a (count, n, n) array of multiplication tables.
    identity
        An Identity, a registry key or identity text.
    domain
        Restrict assignments to these elements (which should form a
        subquasigroup of every model); defaults to all elements.
    """
    if not isinstance(stack, TableStack):
        stack = TableStack.from_mul(stack)
    identity = get_identity(identity)
    out = np.ones(len(stack), dtype=bool)
    for start, _, _, failing, _ in _first_failures(stack, identity, domain):
        out[start : start + len(failing)] = failing < 0
    return out


def holds(
    quasigroup: FiniteQuasigroup,
    identity: identity_like,
    domain: Optional[Sequence[int]] = None,
) -> Union[bool, Witness]:
    """
    Check an identity on every assignment of its variables.

    Returns True when both sides agree everywhere, otherwise the first
    failing assignment (in lexicographic order) as a falsy Witness.

    Examples
    --------
    >>> from quasiplus import from_mul_table
    >>> z3 = from_mul_table([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
    >>> holds(z3, "M")
    True
    """
    identity = get_identity(identity)
    stack = TableStack.from_quasigroup(quasigroup)
    _, lhs, rhs, failing, grid = next(_first_failures(stack, identity, domain))
    column = int(failing[0])
    if column < 0:
        return True
    assignment = {
        name: int(grid[num, column]) for num, name in enumerate(identity.variables)
    }
    return Witness(assignment, int(lhs[0, column]), int(rhs[0, column]))


def satisfies_all(quasigroup: FiniteQuasigroup, keys: Iterable[identity_like]) -> bool:
    """Return True if the quasigroup satisfies every listed identity."""
    return all(holds(quasigroup, key) is True for key in keys)
