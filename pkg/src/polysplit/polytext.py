"""Polynomial text format shared by the toolkit.

Accepted inputs are either an ascending coefficient list ``[c0, c1, ..., cd]``
or an expression in ``X`` built from integers, ``+``, ``-``, ``*``, ``^`` and
parentheses, e.g. ``X^3 - 2`` or ``(X-1)*(X-2)``.  Juxtaposition such as
``2X^2`` or ``(X-1)(X+1)`` is read as multiplication.
"""

from __future__ import annotations

import re

from polysplit.zpoly import IntPoly


class PolyParseError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|([xX])|(.))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        if m.group(1) is not None:
            toks.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            toks.append(("x", "X", m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*^()":
                raise PolyParseError(f"unexpected character {ch!r}", text, m.start(3))
            toks.append((ch, ch, m.start(3)))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolyParseError(f"expected {kind!r}, found {what}", self.text, tok[2])
        self.i += 1
        return tok

    def expr(self) -> IntPoly:
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        acc = self.term() * sign
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> IntPoly:
        acc = self.power()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                acc = acc * self.power()
            elif kind in ("int", "x", "("):
                acc = acc * self.power()
            else:
                return acc

    def power(self) -> IntPoly:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("int")
            base = base ** int(tok[1])
        return base

    def atom(self) -> IntPoly:
        kind, val, pos = self.peek()
        if kind == "int":
            self.take()
            return IntPoly((int(val),))
        if kind == "x":
            self.take()
            return IntPoly.x()
        if kind == "(":
            self.take()
            e = self.expr()
            self.take(")")
            return e
        if kind == "-":
            self.take()
            return -self.atom()
        what = "end of input" if kind == "end" else repr(val)
        raise PolyParseError(f"unexpected {what}", self.text, pos)


def parse_poly(text: str) -> IntPoly:
    s = text.strip()
    if not s:
        raise PolyParseError("empty polynomial", text, 0)
    if s.startswith("["):
        if not s.endswith("]"):
            raise PolyParseError("unterminated coefficient list", text, len(text))
        body = s[1:-1].strip()
        if not body:
            return IntPoly()
        coeffs = []
        for part in body.split(","):
            try:
                coeffs.append(int(part.strip()))
            except ValueError:
                raise PolyParseError(f"bad coefficient {part.strip()!r}", text, text.find(part)) from None
        return IntPoly(coeffs)
    p = _Parser(text)
    result = p.expr()
    p.take("end")
    return result


def format_poly(f: IntPoly, coeff_list: bool = False) -> str:
    """Human form ``3*X^2 - X + 1`` (default) or ascending list form."""
    if coeff_list:
        return "[" + ", ".join(str(c) for c in f.coeffs) + "]"
    if f.is_zero():
        return "0"
    parts = []
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = "X" if k == 1 else f"X^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
