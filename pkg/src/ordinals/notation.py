"""Concrete syntax: parser and canonical printer for both term tiers.

Grammar (ASCII, whitespace-insensitive, LL(1)):

    term   := "0" | part ("+" part)*
    part   := atom ("*" factor)?
    atom   := NAT | "w" | "W" | "w^" factor | "W^" factor
            | "phi(" term ";" term ")" | "F(" term ";" term ")"
            | name | "(" term ")"
    factor := NAT | atom
    name   := "eps(" NAT ")" | "eta0" | "zeta0" | "lambda0" | "E1" | "H1"

``w^a`` is sugar for phi(0;a) and ``W^a`` for the base-W power of a.  The
coefficient after ``*`` is a factor, not a full term, so ``w^2*3 + w`` parses
as (w^2*3) + w; write ``w^2*(3 + w)`` for the other reading.  The parser
normalises as it builds, so the result is always a canonical term; the tier
is inferred from content (any W or F(..) makes the result an index term).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import arith, veblen
from .errors import DomainError
from .terms import (
    Count,
    CountableTerm,
    FApp,
    Fin,
    HSum,
    IX_ONE,
    IX_ZERO,
    IndexTerm,
    ONE,
    OMEGA,
    OMEGA_IX,
    Phi,
    Sum,
    TOP_FAPP,
    TopSucc,
    ZERO,
    Zero,
    nat,
)


@dataclass(frozen=True)
class SourceSpan:
    start: int
    end: int


class ParseError(Exception):
    def __init__(self, message: str, span: SourceSpan):
        super().__init__(f"{message} at {span.start}..{span.end}")
        self.message = message
        self.span = span


_TOKEN = re.compile(
    r"\s*(?:(?P<nat>\d+)|(?P<name>phi|eps|eta0|zeta0|lambda0|E1|H1|F|w|W)"
    r"|(?P<punct>[()+*^;]))"
)

_COUNTABLE = (Zero, Fin, Sum)


def tokenize(s: str):
    tokens = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if m is None or m.end() == m.start():
            rest = s[pos:].lstrip()
            if not rest:
                break
            at = len(s) - len(rest)
            raise ParseError(f"unexpected character {rest[0]!r}", SourceSpan(at, at + 1))
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), SourceSpan(m.start(kind), m.end(kind))))
        pos = m.end()
    tokens.append(("end", "", SourceSpan(len(s), len(s))))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None, value=None):
        k, v, span = self.tokens[self.i]
        if (kind and k != kind) or (value and v != value):
            want = value or kind
            raise ParseError(f"expected {want!r}, found {v or 'end of input'!r}", span)
        self.i += 1
        return k, v, span

    def at_punct(self, ch):
        k, v, _ = self.peek()
        return k == "punct" and v == ch

    def parse_term(self):
        k, v, span = self.peek()
        if k == "nat" and v == "0":
            nxt = self.tokens[self.i + 1]
            if nxt[0] == "end" or (nxt[0] == "punct" and nxt[1] in ");"):
                self.take()
                return ZERO
        value = self.parse_part()
        while self.at_punct("+"):
            self.take()
            value = _add(value, self.parse_part())
        return value

    def parse_part(self):
        value = self.parse_atom()
        if self.at_punct("*"):
            self.take()
            coeff = self.parse_factor()
            value = _mul(value, coeff)
        return value

    def parse_factor(self):
        k, v, span = self.peek()
        if k == "nat":
            self.take()
            return nat(int(v))
        return self.parse_atom()

    def parse_atom(self):
        k, v, span = self.peek()
        if k == "nat":
            self.take()
            if int(v) == 0:
                raise ParseError("0 cannot appear inside a sum", span)
            return nat(int(v))
        if k == "punct" and v == "(":
            self.take()
            t = self.parse_term()
            self.take("punct", ")")
            return t
        if k != "name":
            raise ParseError(f"expected a term, found {v or 'end of input'!r}", span)
        if v == "w":
            self.take()
            if self.at_punct("^"):
                self.take()
                return veblen.phi_apply(IX_ZERO, _as_ct(self.parse_factor()))
            return OMEGA
        if v == "W":
            self.take()
            if self.at_punct("^"):
                self.take()
                return veblen.F_apply(IX_ZERO, _lift(self.parse_factor()))
            return OMEGA_IX
        if v == "phi":
            self.take()
            self.take("punct", "(")
            ix = self.parse_term()
            self.take("punct", ";")
            arg = self.parse_term()
            self.take("punct", ")")
            return veblen.phi_apply(_lift(ix), _as_ct(arg))
        if v == "F":
            self.take()
            self.take("punct", "(")
            zeta = self.parse_term()
            self.take("punct", ";")
            xi = self.parse_term()
            self.take("punct", ")")
            return veblen.F_apply(_lift(zeta), _lift(xi))
        if v == "eps":
            self.take()
            self.take("punct", "(")
            arg = self.parse_term()
            self.take("punct", ")")
            return veblen.eps(_as_ct(arg))
        self.take()
        return veblen.named(v).value


def _as_ct(t) -> CountableTerm:
    if isinstance(t, _COUNTABLE):
        return t
    if isinstance(t, Count):
        return t.value
    raise DomainError("a countable term is required here")


def _add(a, b):
    if isinstance(a, _COUNTABLE) and isinstance(b, _COUNTABLE):
        return arith.add(a, b)
    return arith.index_add(_lift(a), _lift(b))


def _mul(a, b):
    if isinstance(a, _COUNTABLE) and isinstance(b, _COUNTABLE):
        return arith.multiply(a, b)
    return arith.index_multiply(_lift(a), _lift(b))


def _lift(t) -> IndexTerm:
    return Count(t) if isinstance(t, _COUNTABLE) else t


def parse(s: str):
    """Parse concrete syntax into a canonical term of the inferred tier."""
    p = _Parser(s)
    t = p.parse_term()
    k, v, span = p.peek()
    if k != "end":
        raise ParseError(f"trailing input {v!r}", span)
    return t


# ---------------------------------------------------------------------------
# canonical printer

def print_term(t) -> str:
    """Canonical concrete syntax; parse(print_term(t)) rebuilds t."""
    if isinstance(t, (Zero, Fin, Sum)):
        return _ct_str(t)
    return _ix_str(t)


def _ct_str(t: CountableTerm) -> str:
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, Fin):
        return str(t.n)
    pieces = []
    for p, c in t.parts:
        s = _phi_str(p)
        if c > 1:
            s += f"*{c}"
        pieces.append(s)
    if t.tail:
        pieces.append(str(t.tail))
    return " + ".join(pieces)


def _phi_str(p: Phi) -> str:
    if p.index == IX_ZERO:
        if p.arg == ONE:
            return "w"
        return "w^" + _ct_factor(p.arg)
    return f"phi({_ix_str(p.index)};{_ct_str(p.arg)})"


def _ct_factor(t: CountableTerm) -> str:
    """A countable term in factor position (atomic or parenthesised)."""
    if isinstance(t, Fin):
        return str(t.n)
    if isinstance(t, Sum) and len(t.parts) == 1 and t.parts[0][1] == 1 and t.tail == 0:
        return _phi_str(t.parts[0][0])
    return "(" + _ct_str(t) + ")"


def _ix_str(t: IndexTerm) -> str:
    if isinstance(t, Count):
        return _ct_str(t.value)
    if isinstance(t, TopSucc):
        return "F(W;1) + 1"
    if isinstance(t, FApp):
        return f"F({_ix_str(t.zeta)};{_ix_str(t.xi)})"
    pieces = []
    for e, c in t.terms:
        s = "W" if e == IX_ONE else "W^" + _ix_factor(e)
        if c != ONE:
            s += "*" + _ct_factor(c)
        pieces.append(s)
    if not isinstance(t.tail, Zero):
        pieces.append(_ct_str(t.tail))
    return " + ".join(pieces)


def _ix_factor(t: IndexTerm) -> str:
    if isinstance(t, Count):
        return _ct_factor(t.value)
    if isinstance(t, FApp):
        return _ix_str(t)
    if t == OMEGA_IX:
        return "W"
    if isinstance(t, HSum) and len(t.terms) == 1 and t.terms[0][1] == ONE and isinstance(t.tail, Zero):
        return "W^" + _ix_factor(t.terms[0][0])  # pure powers chain as atoms
    return "(" + _ix_str(t) + ")"
