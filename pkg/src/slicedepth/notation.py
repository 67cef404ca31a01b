"""Parser for the knot notations the CLI accepts.

* ``C(a1, ..., am)`` -- 2-bridge knot from an even continued fraction
* ``P(p, q, r)``     -- 3-strand pretzel knot
* ``p/q``            -- 2-bridge knot from its fraction

Whitespace is ignored between tokens.  Errors carry a 1-based column.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

from .errors import EmptyList, NotationError
from .rational import EvenCF

__all__ = ["NotationInput", "PretzelParams", "parse_notation", "render_notation"]


class PretzelParams(NamedTuple):
    p: int
    q: int
    r: int

    def __str__(self) -> str:
        return f"P({self.p},{self.q},{self.r})"


Parsed = Union[EvenCF, Fraction, PretzelParams]


@dataclass(frozen=True)
class NotationInput:
    raw: str
    parsed: Parsed

    @property
    def kind(self) -> str:
        if isinstance(self.parsed, EvenCF):
            return "two-bridge-cf"
        if isinstance(self.parsed, Fraction):
            return "fraction"
        return "pretzel"


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, message: str, cls=NotationError):
        return cls(message, self.pos + 1)

    def expect(self, char: str) -> None:
        got = self.peek()
        if got != char:
            found = repr(got) if got else "end of input"
            raise self.error(f"expected {char!r}, found {found}")
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            got = self.peek()
            raise self.error(f"expected an integer, found {got!r}" if got else "expected an integer, found end of input")
        return int(self.text[start:self.pos])

    def integer_list(self) -> list[int]:
        self.expect("(")
        if self.peek() == ")":
            raise self.error("empty coefficient list", EmptyList)
        values = [self.integer()]
        while self.peek() == ",":
            self.pos += 1
            values.append(self.integer())
        self.expect(")")
        return values

    def end(self) -> None:
        if self.peek():
            raise self.error(f"unexpected trailing {self.text[self.pos:]!r}")


def parse_notation(raw: str) -> NotationInput:
    """Parse ``C(...)``, ``P(p,q,r)`` or ``p/q``.

    >>> parse_notation("C(4, -2)").parsed
    EvenCF(coefficients=(4, -2))
    >>> parse_notation("17/4").parsed
    Fraction(17, 4)
    """
    s = _Scanner(raw)
    head = s.peek()
    if head in ("C", "P"):
        s.pos += 1
        values = s.integer_list()
        s.end()
        if head == "C":
            return NotationInput(raw, EvenCF(values))
        if len(values) != 3:
            raise NotationError(f"P(...) takes exactly three integers, got {len(values)}", 2)
        return NotationInput(raw, PretzelParams(*values))
    if not head:
        raise s.error("empty input")
    num = s.integer()
    s.expect("/")
    den_col = s.pos + 1
    den = s.integer()
    s.end()
    if den == 0:
        raise NotationError("zero denominator", den_col)
    return NotationInput(raw, Fraction(num, den))


def render_notation(parsed: Parsed) -> str:
    """Canonical text for a parsed value; ``parse_notation`` inverts it."""
    if isinstance(parsed, Fraction):
        return f"{parsed.numerator}/{parsed.denominator}"
    return str(parsed)
