"""Text formats: ordinal expressions, sequence descriptors, certificates.

Expression grammar (ASCII only; 'w' is the first infinite ordinal):

    expr := prod (('+' | '#') prod)*      '+' ordered sum, '#' natural sum
    prod := pow ('*' NAT)*
    pow  := atom ('^' atom)?
    atom := 'w' | NAT | '(' expr ')'

'+' and '#' are left-associative at equal precedence; '^' binds tighter
than '*', which binds tighter than '+'/'#'.  The right operand of '^' is a
single atom (parenthesize anything larger), and the base must evaluate to
w: only powers of w exist here.  Parsing a rendered ordinal returns the
identical value.
"""

from __future__ import annotations

from .core import OMEGA, Ordinal, add, mul_nat, nat_sum, omega_pow
from .mixed import Certificate
from .sequences import DegreeRamp, OmegaSequence, Periodic, Zero


class ParseError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


_PUNCT = "+#*^()"


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("NAT", text[i:j], i))
            i = j
            continue
        if ch == "w":
            tokens.append(("W", ch, i))
            i += 1
            continue
        if ch in _PUNCT:
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("END", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> tuple[str, str, int]:
        tok = self.take()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1] or 'end of input'!r}", tok[2])
        return tok

    def parse_expr(self) -> Ordinal:
        value = self.parse_prod()
        while self.peek()[0] in ("+", "#"):
            op = self.take()[0]
            rhs = self.parse_prod()
            value = add(value, rhs) if op == "+" else nat_sum(value, rhs)
        return value

    def parse_prod(self) -> Ordinal:
        value = self.parse_pow()
        while self.peek()[0] == "*":
            self.take()
            tok = self.expect("NAT")
            value = mul_nat(value, int(tok[1]))
        return value

    def parse_pow(self) -> Ordinal:
        start = self.peek()[2]
        base = self.parse_atom()
        if self.peek()[0] != "^":
            return base
        self.take()
        if base != OMEGA:
            raise ParseError("only powers of w are supported", start)
        return omega_pow(self.parse_atom())

    def parse_atom(self) -> Ordinal:
        kind, text, pos = self.take()
        if kind == "W":
            return OMEGA
        if kind == "NAT":
            return Ordinal(int(text))
        if kind == "(":
            value = self.parse_expr()
            self.expect(")")
            return value
        raise ParseError(f"expected a value, found {text or 'end of input'!r}", pos)


def parse_ordinal(text: str) -> Ordinal:
    p = _Parser(text)
    value = p.parse_expr()
    kind, rest, pos = p.peek()
    if kind != "END":
        raise ParseError(f"unexpected trailing {rest!r}", pos)
    return value


def _parse_expr_list(text: str, where: str) -> list[Ordinal]:
    text = text.strip()
    if not text:
        return []
    out = []
    for part in text.split(","):
        if not part.strip():
            raise ParseError(f"empty expression in {where}")
        out.append(parse_ordinal(part))
    return out


def parse_sequence(text: str) -> OmegaSequence:
    """Sequence descriptor: an optional head line, then a tail line.

        head: <expr>, <expr>, ...
        tail: zero
        tail: periodic <expr>, <expr>, ...
        tail: ramp <expr>

    Blank lines are ignored and the head may be empty or absent.
    """
    head: tuple[Ordinal, ...] = ()
    tail = None
    saw_head = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("head:"):
            if saw_head or tail is not None:
                raise ParseError(f"line {lineno}: unexpected head line")
            saw_head = True
            head = tuple(_parse_expr_list(line[len("head:") :], "head"))
        elif line.startswith("tail:"):
            if tail is not None:
                raise ParseError(f"line {lineno}: duplicate tail line")
            rest = line[len("tail:") :].strip()
            if rest == "zero":
                tail = Zero()
            elif rest.startswith("periodic"):
                period = _parse_expr_list(rest[len("periodic") :], "period")
                if not period:
                    raise ParseError(f"line {lineno}: periodic tail needs entries")
                tail = Periodic(tuple(period))
            elif rest.startswith("ramp"):
                tail = DegreeRamp(parse_ordinal(rest[len("ramp") :]))
            else:
                raise ParseError(f"line {lineno}: unknown tail kind {rest!r}")
        else:
            raise ParseError(f"line {lineno}: expected 'head:' or 'tail:'")
    if tail is None:
        raise ParseError("missing tail line")
    return OmegaSequence(head, tail)


def parse_certificate(text: str) -> Certificate:
    """Inverse of the certificate rendering: blocks, optional tail, value."""
    blocks: list[tuple[int, Ordinal]] = []
    tail_from: int | None = None
    value: Ordinal | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if value is not None:
            raise ParseError(f"line {lineno}: content after the value line")
        if line.startswith("#"):
            left, sep, right = line[1:].partition(":")
            if not sep:
                raise ParseError(f"line {lineno}: block line needs ':'")
            try:
                index = int(left.strip())
            except ValueError:
                raise ParseError(f"line {lineno}: bad summand index {left.strip()!r}") from None
            blocks.append((index, parse_ordinal(right)))
        elif line.startswith("tail from"):
            try:
                tail_from = int(line[len("tail from") :].strip())
            except ValueError:
                raise ParseError(f"line {lineno}: bad tail index") from None
        elif line.startswith("value:"):
            value = parse_ordinal(line[len("value:") :])
        else:
            raise ParseError(f"line {lineno}: unrecognized certificate line")
    if value is None:
        raise ParseError("missing value line")
    return Certificate(tuple(blocks), tail_from, value)
