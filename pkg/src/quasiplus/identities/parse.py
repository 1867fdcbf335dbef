"""
Parser and printer for identities.

Grammar (whitespace is insignificant)::

    identity := term '=' term
    term     := sum
    sum      := prod (('\\' | '/') prod)*
    prod     := atom ('*' atom)*
    atom     := var | '(' term ')'
    var      := [a-z][a-z0-9]*

`*` binds tighter than `\\` and `/`, which share a level; every operator is
left-associative. This mirrors the convention that juxtaposition binds
tighter than the divisions, so xy.(x\\x)z is written (x*y)*((x\\x)*z).

The printer parenthesizes every compound operand, so only the outermost
term of each side is bare; parse(print(identity)) == identity.
"""
import re
from typing import List, NamedTuple, Optional

from quasiplus.exceptions import IdentitySyntaxError
from quasiplus.identities.term import BinOp, Identity, Op, Term, Var

_TOKEN_RE = re.compile(r"\s*(?:(?P<var>[a-z][a-z0-9]*)|(?P<sym>[*\\/()=]))")

_SUM_OPS = {"\\": Op.LDIV, "/": Op.RDIV}


class Token(NamedTuple):
    """A lexical token and its character offset."""

    kind: str  # "var", a symbol, or "end"
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    """Split identity text into tokens, ending with an "end" token."""
    tokens = []
    position = 0
    while True:
        match = _TOKEN_RE.match(text, position)
        if match is None:
            rest = text[position:]
            if not rest.strip():
                break
            offset = position + len(rest) - len(rest.lstrip())
            expected = "a variable, operator or parenthesis"
            raise IdentitySyntaxError(offset, expected, text)
        if match.group("var"):
            tokens.append(Token("var", match.group("var"), match.start("var")))
        else:
            symbol = match.group("sym")
            tokens.append(Token(symbol, symbol, match.start("sym")))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive descent over a token list."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def error(self, expected: str):
        raise IdentitySyntaxError(self.current.position, expected, self.text)

    def expect(self, kind: str, expected: Optional[str] = None) -> Token:
        token = self.current
        if token.kind != kind:
            self.error(expected or repr(kind))
        self.index += 1
        return token

    def identity(self) -> Identity:
        lhs = self.term()
        self.expect("=", "'='")
        rhs = self.term()
        self.expect("end", "end of input")
        return Identity(lhs, rhs)

    def term_only(self) -> Term:
        term = self.term()
        self.expect("end", "end of input")
        return term

    def term(self) -> Term:
        node = self.prod()
        while self.current.kind in _SUM_OPS:
            op = _SUM_OPS[self.current.kind]
            self.index += 1
            node = BinOp(op, node, self.prod())
        return node

    def prod(self) -> Term:
        node = self.atom()
        while self.current.kind == "*":
            self.index += 1
            node = BinOp(Op.MUL, node, self.atom())
        return node

    def atom(self) -> Term:
        token = self.current
        if token.kind == "var":
            self.index += 1
            return Var(token.text)
        if token.kind == "(":
            self.index += 1
            node = self.term()
            self.expect(")", "')'")
            return node
        self.error("a variable or '('")


def parse_identity(text: str) -> Identity:
    """
    Parse identity text such as "x*(y*z) = ((x/x)*y)*(x*z)".

    Raises
    ------
    IdentitySyntaxError with the offending position; text without '=' is
    rejected.

    Examples
    --------
    >>> parse_identity("x*y\\\\z = z").lhs.op
    <Op.LDIV: '\\\\'>
    """
    return _Parser(text).identity()


def parse_term(text: str) -> Term:
    """Parse a single term."""
    return _Parser(text).term_only()


def print_term(term: Term) -> str:
    """Render a term with every compound operand parenthesized."""
    if isinstance(term, Var):
        return term.name
    return f"{_operand(term.left)}{term.op.value}{_operand(term.right)}"


def _operand(term: Term) -> str:
    text = print_term(term)
    return text if isinstance(term, Var) else f"({text})"


def print_identity(identity: Identity) -> str:
    """
    Render an identity, e.g. "x*(y*z) = ((x/x)*y)*(x*z)".
    """
    return f"{print_term(identity.lhs)} = {print_term(identity.rhs)}"
