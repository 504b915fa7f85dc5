"""Recursive-descent parser for tropical polynomial expressions.

Grammar::

    poly   := term { "+" term }
    term   := [ coef ] { monom }
    coef   := number | "(" number ")" | "-inf"
    monom  := ("x" | "y") [ "^" nat ]
    number := ["-"] digits [ "." digits ] | ["-"] digits "/" digits

Juxtaposition is tropical multiplication, so a missing coefficient is 0.
Terms with equal exponents combine by ``max``. A negative coefficient after
``+`` must be parenthesized: ``1 + (-5)y``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Union

from .arith import BOTTOM, TropNum
from .curve import TropPoly2
from .poly1 import TropPoly1

MAX_EXPONENT = 10**6


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos
        self.text = text


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise ParseError(msg, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def digits(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected digits")
        return self.text[start:self.pos]

    def number(self) -> TropNum:
        self.skip()
        neg = False
        if self.text.startswith("-inf", self.pos):
            self.pos += 4
            return BOTTOM
        if self.peek() == "-":
            neg = True
            self.pos += 1
        whole = self.digits()
        value = Fraction(int(whole))
        nxt = self.text[self.pos] if self.pos < len(self.text) else ""
        if nxt == ".":
            self.pos += 1
            frac = self.digits()
            value = Fraction(whole + "." + frac)
        elif nxt == "/":
            self.pos += 1
            den = int(self.digits())
            if den == 0:
                self.error("zero denominator")
            value = Fraction(int(whole), den)
        return TropNum(-value if neg else value)

    def term(self, leading: bool) -> tuple[TropNum, tuple[int, int]]:
        c = self.peek()
        coef = TropNum(0)
        if c == "(":
            self.pos += 1
            coef = self.number()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
        elif c.isdigit() or c == "-":
            if c == "-" and not leading and not self.text.startswith("-inf", self.pos):
                self.error("negative coefficient after '+' must be parenthesized")
            coef = self.number()
        elif c not in ("x", "y"):
            self.error("expected a term")
        ex = [0, 0]
        while self.peek() in ("x", "y"):
            var = self.text[self.pos]
            self.pos += 1
            n = 1
            if self.peek() == "^":
                self.pos += 1
                self.skip()
                n = int(self.digits())
                if n > MAX_EXPONENT:
                    self.error(f"exponent {n} exceeds {MAX_EXPONENT}")
            ex[0 if var == "x" else 1] += n
        return coef, (ex[0], ex[1])

    def poly(self) -> dict[tuple[int, int], TropNum]:
        terms: dict[tuple[int, int], TropNum] = {}
        leading = True
        while True:
            coef, ex = self.term(leading)
            leading = False
            old = terms.get(ex)
            terms[ex] = coef if old is None or old < coef else old
            c = self.peek()
            if c == "+":
                self.pos += 1
                continue
            if c == "":
                return terms
            if c == "-":
                self.error("tropical subtraction does not exist")
            self.error(f"unexpected {c!r}")


def parse_terms(text: str) -> dict[tuple[int, int], TropNum]:
    return _Parser(text).poly()


def parse_poly(
    text: str, convention: str = "max", bivariate: Optional[bool] = None
) -> Union[TropPoly1, TropPoly2]:
    """Parse ``text`` into a univariate or bivariate tropical polynomial.

    With ``bivariate=None`` the result is univariate unless ``y`` occurs.
    The ``"min"`` convention negates every coefficient so the max-plus engine
    can be used unchanged.
    """
    if convention not in ("max", "min"):
        raise ValueError("convention must be 'max' or 'min'")
    terms = parse_terms(text)
    if convention == "min":
        terms = {e: (a if a.is_bottom else TropNum(-a.value)) for e, a in terms.items()}
    if all(a.is_bottom for a in terms.values()):
        raise ParseError("polynomial has no finite coefficient", text, 0)
    has_y = any(j for _, j in terms)
    if bivariate is None:
        bivariate = has_y
    if bivariate:
        return TropPoly2(terms)
    if has_y:
        raise ParseError("expected a univariate polynomial", text, 0)
    return TropPoly1({i: a for (i, _), a in terms.items()})
