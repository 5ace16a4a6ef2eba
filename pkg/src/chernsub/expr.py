"""Parser for lambda-expressions such as ``23*L3 - 2*L1^3``.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := ('-' | '+') factor | atom ('^' exponent)?
    atom   := INT | 'p' | 'L' (INT | 'p') | '(' expr ')'

``p`` stands for the prime, so ``Lp`` is lambda_p and ``L1^p`` is lambda_1^p.
"""

from __future__ import annotations

import re

from .repring import SUPolynomial

_TOKEN = re.compile(r"\s*(?:(\d+)|(L(?:\d+|p))|(p)|(.))")


class ExpressionError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while text[pos:].strip():
        m = _TOKEN.match(text, pos)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", m.group(1), start))
        elif m.group(2):
            tokens.append(("lam", m.group(2)[1:], start))
        elif m.group(3):
            tokens.append(("p", "p", start))
        elif m.group(4) in "+-*^()":
            tokens.append((m.group(4), m.group(4), start))
        else:
            raise ExpressionError(f"unexpected character {m.group(4)!r}", start)
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, p: int):
        self.tokens = _tokenize(text)
        self.i = 0
        self.p = p

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self, kind: str | None = None) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            expected = "end of input" if kind == "end" else repr(kind)
            raise ExpressionError(f"expected {expected}, found {tok[1] or 'end of input'!r}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> SUPolynomial:
        value = self.term()
        while self.peek()[0] in "+-":
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> SUPolynomial:
        value = self.factor()
        while self.peek()[0] == "*":
            self.take()
            value = value * self.factor()
        return value

    def factor(self) -> SUPolynomial:
        kind = self.peek()[0]
        if kind in "+-":
            self.take()
            inner = self.factor()
            return -inner if kind == "-" else inner
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            base = base ** self.exponent()
        return base

    def exponent(self) -> int:
        kind, text, pos = self.peek()
        if kind == "int":
            self.take()
            return int(text)
        if kind == "p":
            self.take()
            return self.p
        raise ExpressionError("exponent must be a non-negative integer or p", pos)

    def atom(self) -> SUPolynomial:
        kind, text, pos = self.take()
        if kind == "int":
            return SUPolynomial.unit(self.p) * int(text)
        if kind == "p":
            return SUPolynomial.unit(self.p) * self.p
        if kind == "lam":
            ell = self.p if text == "p" else int(text)
            if not 1 <= ell <= self.p * self.p - 1:
                raise ExpressionError(f"L{text} outside L1..L{self.p * self.p - 1}", pos)
            return SUPolynomial.lam(ell, self.p)
        if kind == "(":
            value = self.expr()
            self.take(")")
            return value
        raise ExpressionError(f"unexpected {text or 'end of input'!r}", pos)


def parse_lambda_expression(text: str, p: int) -> SUPolynomial:
    parser = _Parser(text, p)
    value = parser.expr()
    parser.take("end")
    return value
