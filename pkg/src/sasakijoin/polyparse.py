"""Parser for the text form of polynomials, e.g. ``z0^12+z1^6+z2^4+z3^2*z0``.

Grammar (whitespace ignored)::

    poly   := term ('+' term)*
    term   := factor ('*'? factor)*
    factor := NUMBER | 'z' '_'? INDEX ('^' EXP)?

``INDEX`` and ``EXP`` are decimal integers, optionally wrapped in braces so
that LaTeX such as ``z_0^{12}`` is accepted.  Numeric coefficients are
accepted and dropped: only the support of the polynomial matters.
"""

from __future__ import annotations

from .errors import PolySyntaxError


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise PolySyntaxError(msg, self.text, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def integer(self, what: str) -> int:
        braced = self.eat("{")
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error(f"expected {what}")
        value = int(self.text[start:self.pos])
        if braced and not self.eat("}"):
            self.error("expected '}'")
        return value

    def factor(self, mono: dict[int, int]):
        ch = self.peek()
        if ch.isdigit():
            self.integer("coefficient")
            return
        if ch != "z":
            self.error("expected variable 'z<i>' or a coefficient")
        self.pos += 1
        self.eat("_")
        idx = self.integer("variable index")
        exp = 1
        if self.eat("^"):
            at = self.pos
            exp = self.integer("exponent")
            if exp < 1:
                self.pos = at
                self.error("exponent must be >= 1")
        mono[idx] = mono.get(idx, 0) + exp

    def term(self) -> dict[int, int]:
        mono: dict[int, int] = {}
        self.factor(mono)
        while True:
            if self.eat("*"):
                self.factor(mono)
            elif self.peek() and (self.peek() == "z" or self.peek().isdigit()):
                self.factor(mono)
            else:
                return mono

    def poly(self) -> list[dict[int, int]]:
        if not self.peek():
            self.error("empty polynomial")
        terms = [self.term()]
        while self.eat("+"):
            terms.append(self.term())
        if self.peek():
            self.error(f"unexpected character {self.peek()!r}")
        return terms


def parse_terms(text: str) -> list[dict[int, int]]:
    """Parse ``text`` into a list of ``{variable index: exponent}`` maps."""
    return _Parser(text).poly()
