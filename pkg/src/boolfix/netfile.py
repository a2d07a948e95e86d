"""Network file format.

One definition per line, ``<name> = <expr>``; ``#`` starts a comment::

    expr   := term ('|' term)*
    term   := factor ('&' factor)*
    factor := '!' factor | '(' expr ')' | '0' | '1' | identifier

Definition order fixes component indices.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from pathlib import Path

from .config import Limits
from .errors import (
    BoolFixError,
    DuplicateDefinitionError,
    ErrorCode,
    NetworkSyntaxError,
    UndefinedIdentifierError,
)
from .network.expr import FALSE, TRUE, BooleanExpr, Not, Var, conj, disj
from .network.network import BooleanNetwork

logger = logging.getLogger(__name__)

_TOKEN = re.compile(
    r"\s*(?:(?P<ID>[A-Za-z_][A-Za-z0-9_]*)|(?P<CONST>[01])(?![A-Za-z0-9_])|(?P<OP>[!&|()=]))"
)


@dataclass(frozen=True, slots=True)
class Token:
    type: str
    value: str
    line: int
    column: int


def tokenize(text: str, line: int) -> list[Token]:
    """Split one definition line into tokens (comments already stripped)."""
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            raise NetworkSyntaxError(f"unexpected character '{text[pos]}'", line, pos + 1)
        kind = match.lastgroup
        value = match.group(kind)
        column = match.start(kind) + 1
        tokens.append(Token(value if kind == "OP" else kind, value, line, column))
        pos = match.end()
    tokens.append(Token("EOL", "", line, len(text) + 1))
    return tokens


class _ExprParser:
    """Recursive descent over the tokens of one right-hand side."""

    def __init__(self, tokens: list[Token], resolve):
        self.tokens = tokens
        self.current = 0
        self.resolve = resolve

    def peek(self) -> Token:
        return self.tokens[self.current]

    def advance(self) -> Token:
        token = self.tokens[self.current]
        self.current += 1
        return token

    def match(self, kind: str) -> bool:
        if self.peek().type == kind:
            self.advance()
            return True
        return False

    def fail(self, expected: str):
        token = self.peek()
        found = "end of line" if token.type == "EOL" else f"'{token.value}'"
        raise NetworkSyntaxError(f"expected {expected}, found {found}", token.line, token.column)

    def parse(self) -> BooleanExpr:
        expr = self.expression()
        if self.peek().type != "EOL":
            self.fail("'&', '|' or end of line")
        return expr

    def expression(self) -> BooleanExpr:
        terms = [self.term()]
        while self.match("|"):
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else disj(*terms)

    def term(self) -> BooleanExpr:
        factors = [self.factor()]
        while self.match("&"):
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else conj(*factors)

    def factor(self) -> BooleanExpr:
        token = self.peek()
        if self.match("!"):
            return Not(self.factor())
        if self.match("("):
            inner = self.expression()
            if not self.match(")"):
                self.fail("')'")
            return inner
        if token.type == "CONST":
            self.advance()
            return TRUE if token.value == "1" else FALSE
        if token.type == "ID":
            self.advance()
            return Var(self.resolve(token))
        self.fail("'!', '(', a constant or an identifier")


def parse_network(doc: str, limits: Limits | None = None) -> BooleanNetwork:
    """Parse a network document.

    Raises:
        NetworkSyntaxError: Malformed line, with line and column
        UndefinedIdentifierError: An expression names an undefined component
        DuplicateDefinitionError: A component is defined twice
        BoolFixError: With code ``no_input`` when the document defines nothing
    """
    definitions: list[tuple[str, list[Token], int]] = []
    first_line: dict[str, int] = {}
    for line_no, raw in enumerate(doc.splitlines(), start=1):
        text = raw.split("#", 1)[0]
        if not text.strip():
            continue
        tokens = tokenize(text, line_no)
        head = tokens[0]
        if head.type != "ID":
            raise NetworkSyntaxError("expected a component name", line_no, head.column)
        if tokens[1].type != "=":
            found = "end of line" if tokens[1].type == "EOL" else f"'{tokens[1].value}'"
            raise NetworkSyntaxError(f"expected '=', found {found}", line_no, tokens[1].column)
        if head.value in first_line:
            raise DuplicateDefinitionError(head.value, line_no, first_line[head.value])
        first_line[head.value] = line_no
        definitions.append((head.value, tokens[2:], line_no))

    if not definitions:
        raise BoolFixError(ErrorCode.NO_INPUT, "network document defines no components")

    index = {name: i for i, (name, _, _) in enumerate(definitions)}

    def resolve(token: Token) -> int:
        if token.value not in index:
            raise UndefinedIdentifierError(token.value, token.line)
        return index[token.value]

    names = [name for name, _, _ in definitions]
    exprs = [_ExprParser(tokens, resolve).parse() for _, tokens, _ in definitions]
    net = BooleanNetwork.from_exprs(names, exprs, limits)
    logger.info("Parsed network with %d components", net.n)
    return net


def load_network(path: str | Path, limits: Limits | None = None) -> BooleanNetwork:
    """Read and parse a network file.

    Raises:
        NetworkSyntaxError: If the file is not valid UTF-8
    """
    raw = Path(path).read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        head = raw[: exc.start]
        line = head.count(b"\n") + 1
        column = len(head) - (head.rfind(b"\n") + 1) + 1
        raise NetworkSyntaxError(
            f"invalid UTF-8 byte 0x{raw[exc.start]:02x}", line, column
        ) from exc
    return parse_network(text, limits)


def format_network(net: BooleanNetwork) -> str:
    """Print ``net`` in the file format; parsing the result gives the same network."""
    names = net.names
    width = max((len(name) for name in names), default=0)
    lines = [f"{comp.name:<{width}} = {comp.expr.to_text(names)}" for comp in net.components]
    return "\n".join(lines) + "\n"
