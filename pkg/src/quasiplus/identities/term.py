"""
Terms and identities over the quasigroup operations *, \\ and /.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Mapping, Tuple, Union

from quasiplus.core.quasigroup import ParastropheKind


class Op(str, Enum):
    """The three binary quasigroup operations, valued by their symbol."""

    MUL = "*"
    LDIV = "\\"
    RDIV = "/"


@dataclass(frozen=True)
class Var:
    """A variable, named by [a-z][a-z0-9]*."""

    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class BinOp:
    """An operation applied to two subterms."""

    op: Op
    left: "Term"
    right: "Term"


Term = Union[Var, BinOp]


def iter_variables(term: Term) -> Iterator[str]:
    """Yield variable names left to right, with repeats."""
    stack = [term]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            yield node.name
        else:
            stack.append(node.right)
            stack.append(node.left)


def term_variables(term: Term) -> Tuple[str, ...]:
    """Return the distinct variables of a term in first-occurrence order."""
    return tuple(dict.fromkeys(iter_variables(term)))


def term_depth(term: Term) -> int:
    """Return the depth of a term; a variable has depth 0."""
    if isinstance(term, Var):
        return 0
    return 1 + max(term_depth(term.left), term_depth(term.right))


def mul(left: Term, right: Term) -> BinOp:
    """Build left*right."""
    return BinOp(Op.MUL, left, right)


def ldiv(left: Term, right: Term) -> BinOp:
    """Build left\\right."""
    return BinOp(Op.LDIV, left, right)


def rdiv(left: Term, right: Term) -> BinOp:
    """Build left/right."""
    return BinOp(Op.RDIV, left, right)


@dataclass(frozen=True)
class Identity:
    """
    An equation lhs = rhs, asserted for every assignment of its variables.

    Attributes
    ----------
    variables
        The variables of lhs then rhs, in first-occurrence order.
    """

    lhs: Term
    rhs: Term
    variables: Tuple[str, ...] = field(init=False, compare=False)

    def __post_init__(self):
        names = term_variables(self.lhs) + term_variables(self.rhs)
        object.__setattr__(self, "variables", tuple(dict.fromkeys(names)))

    def __str__(self):
        from quasiplus.identities.parse import print_identity

        return print_identity(self)


def substitute(term: Term, mapping: Mapping[str, Term]) -> Term:
    """
    Replace variables by terms; unmapped variables are left alone.

    Examples
    --------
    >>> substitute(mul(Var("x"), Var("y")), {"x": rdiv(Var("x"), Var("x"))})
    BinOp(op=<Op.MUL: '*'>, left=BinOp(op=<Op.RDIV: '/'>, left=Var(name='x'), right=Var(name='x')), right=Var(name='y'))
    """
    if isinstance(term, Var):
        return mapping.get(term.name, term)
    left = substitute(term.left, mapping)
    right = substitute(term.right, mapping)
    return BinOp(term.op, left, right)


def substitute_identity(identity: Identity, mapping: Mapping[str, Term]) -> Identity:
    """Apply substitute to both sides of an identity."""
    return Identity(
        substitute(identity.lhs, mapping), substitute(identity.rhs, mapping)
    )


# How each operation of a parastrophe is written with the operations of the
# original quasigroup: (operation, swap operands).
_PARASTROPHE_OPS = {
    ParastropheKind.LEFT: {
        Op.MUL: (Op.LDIV, False),
        Op.LDIV: (Op.MUL, False),
        Op.RDIV: (Op.RDIV, True),
    },
    ParastropheKind.RIGHT: {
        Op.MUL: (Op.RDIV, False),
        Op.LDIV: (Op.LDIV, True),
        Op.RDIV: (Op.MUL, False),
    },
    ParastropheKind.OPPOSITE: {
        Op.MUL: (Op.MUL, True),
        Op.LDIV: (Op.RDIV, True),
        Op.RDIV: (Op.LDIV, True),
    },
}


def rewrite_term_for_parastrophe(term: Term, kind: Union[str, ParastropheKind]) -> Term:
    """
    Rewrite a term of a parastrophe with the original operations.

    Evaluating the result in Q gives the value of term evaluated in the
    parastrophe of Q.
    """
    ops = _PARASTROPHE_OPS[ParastropheKind.coerce(kind)]

    def _rewrite(node):
        if isinstance(node, Var):
            return node
        op, swap = ops[node.op]
        left, right = _rewrite(node.left), _rewrite(node.right)
        return BinOp(op, right, left) if swap else BinOp(op, left, right)

    return _rewrite(term)


def rewrite_for_parastrophe(
    identity: Identity, kind: Union[str, ParastropheKind]
) -> Identity:
    """
    Return an identity which holds in Q exactly when identity holds in Q's
    parastrophe of the given kind.

    Examples
    --------
    >>> from quasiplus.identities import get_identity, print_identity
    >>> print_identity(rewrite_for_parastrophe(get_identity("Sl"), "l"))
    '(x\\\\x)\\\\(y\\\\z) = (x\\\\y)\\\\(x\\\\z)'
    """
    return Identity(
        rewrite_term_for_parastrophe(identity.lhs, kind),
        rewrite_term_for_parastrophe(identity.rhs, kind),
    )
