"""
Expression mini-language for algebra elements.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := [rational '*'] factor+
    factor := ident ['^*'] | '(' expr ')' ['^*']

Juxtaposition is the algebra product; `(...)^*` applies the involution.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Union

from ..domain.graph import Graph
from ..utils.errors import ExpressionError, GraphValidationError
from .terms import LpaContext, LpaElement

_TOKEN = re.compile(
    r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<star>\^\*)|(?P<op>[-+*/()]))"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    column: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if not match:
            column = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ExpressionError(f"unexpected character {text[column - 1]!r}", column)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind) + 1))
        pos = match.end()
    tokens.append(Token("end", "", len(text) + 1))
    return tokens


class ExpressionParser:
    """Recursive-descent parser producing normalized elements."""

    def __init__(self, context: LpaContext, text: str):
        self.context = context
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _at(self, kind: str, text: Optional[str] = None) -> bool:
        token = self.current
        return token.kind == kind and (text is None or token.text == text)

    def _expect(self, kind: str, text: str) -> Token:
        if not self._at(kind, text):
            raise ExpressionError(f"expected {text!r}, found {self._describe()}", self.current.column)
        return self._advance()

    def _describe(self) -> str:
        token = self.current
        return "end of input" if token.kind == "end" else repr(token.text)

    def parse(self) -> LpaElement:
        result = self.expr()
        if not self._at("end"):
            raise ExpressionError(f"unexpected {self._describe()}", self.current.column)
        return result

    def expr(self) -> LpaElement:
        sign = 1
        if self._at("op", "+") or self._at("op", "-"):
            sign = -1 if self._advance().text == "-" else 1
        total = self.term().scaled(sign)
        while self._at("op", "+") or self._at("op", "-"):
            op = self._advance().text
            term = self.term()
            total = total + term if op == "+" else total - term
        return total

    def term(self) -> LpaElement:
        coef = Fraction(1)
        if self._at("int"):
            coef = self.rational()
            self._expect("op", "*")
        product = self.factor()
        while self._at("ident") or self._at("op", "("):
            product = product * self.factor()
        return product.scaled(coef)

    def rational(self) -> Fraction:
        numerator = int(self._advance().text)
        if self._at("op", "/"):
            self._advance()
            if not self._at("int"):
                raise ExpressionError(f"expected denominator, found {self._describe()}", self.current.column)
            token = self._advance()
            denominator = int(token.text)
            if denominator == 0:
                raise ExpressionError("zero denominator", token.column)
            return Fraction(numerator, denominator)
        return Fraction(numerator)

    def factor(self) -> LpaElement:
        if self._at("ident"):
            token = self._advance()
            starred = self._star()
            try:
                return self.context.generator(token.text, starred)
            except GraphValidationError:
                raise ExpressionError(f"unknown identifier {token.text}", token.column) from None
        if self._at("op", "("):
            self._advance()
            inner = self.expr()
            self._expect("op", ")")
            return inner.star() if self._star() else inner
        raise ExpressionError(f"expected identifier or '(', found {self._describe()}", self.current.column)

    def _star(self) -> bool:
        if self._at("star"):
            self._advance()
            return True
        return False


def parse_expression(target: Union[Graph, LpaContext], text: str) -> LpaElement:
    """Parse and normalize an expression over a graph or an explicit context."""
    context = target if isinstance(target, LpaContext) else LpaContext.for_graph(target)
    return ExpressionParser(context, text).parse()
