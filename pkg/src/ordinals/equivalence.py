"""Constructive reductions on the set of w-power values.

For a power value y, ``constrain_seq`` builds the distinguished sequence whose
first member bounds the first difference and whose differences ascend;
``psi_eval`` turns that sequence into the normal function with first critical
point exactly y; ``seq_from_psi`` recovers a constrained sequence by iterating
that function from 1; and ``F_from_f_eval`` extends the enumeration of the
power values >= y_base to the normal function fixed exactly on them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import arith, veblen
from .errors import DomainError
from .fundseq import dist_seq, pred_countable
from .terms import (
    CountableTerm,
    Fin,
    IX_ZERO,
    Kind,
    ONE,
    OMEGA,
    Sum,
    ZERO,
    Zero,
    classify_kind,
    nat,
    principal,
    principal_of,
)


@dataclass(frozen=True)
class ConstrainedSeq:
    """Ascending sequence for y with y0 <= (y1 - y0) and ascending differences."""

    y: CountableTerm
    at: Callable = field(compare=False)


def _power_exponent(y: CountableTerm) -> CountableTerm:
    """The e with w^e = y for a power value y (the term itself at fixed points)."""
    p = principal_of(y)
    if p is None:
        raise DomainError("not a w-power value")
    return p.arg if p.index == IX_ZERO else y


def constrain_seq(y: CountableTerm) -> ConstrainedSeq:
    """The constrained distinguished sequence of a power value w <= y < H1."""
    y = nat(y)
    if principal_of(y) is None or arith.compare(y, OMEGA) < 0:
        raise DomainError("constrained sequences exist for w-power values >= w")
    if arith.compare(y, veblen.H1) >= 0:
        raise DomainError("value at or above the ceiling H1")
    e = _power_exponent(y)
    if classify_kind(e) == Kind.FIRST:
        base = veblen.omega_power(pred_countable(e))
        return ConstrainedSeq(y, lambda n: arith.multiply(base, nat(1 + n)))
    return ConstrainedSeq(y, lambda n: _rounded_member(y, n))


def _rounded_member(y: CountableTerm, n: int) -> CountableTerm:
    """n-th distinct w-power ceiling of the unconstrained sequence members."""
    seen = []
    k = 0
    while len(seen) <= n:
        z = _power_ceiling(dist_seq(y, k))
        if not seen or z != seen[-1]:
            seen.append(z)
        k += 1
        if k > 16 * (n + 2):
            raise DomainError("rounded sequence stalled")  # unreachable
    return seen[n]


def _power_ceiling(t: CountableTerm) -> CountableTerm:
    """The least w-power >= t (t >= 1)."""
    if isinstance(t, Fin):
        return OMEGA
    if principal_of(t) is not None:
        return t
    lead = arith.cnf_leading(t)
    return veblen.omega_power(arith.succ(lead.x0))


def psi_eval(y: CountableTerm, x: CountableTerm) -> CountableTerm:
    """The normal function attached to y's constrained sequence, evaluated at
    x >= 1; y is its first critical point."""
    y, x = nat(y), nat(x)
    if isinstance(x, Zero):
        raise DomainError("argument starts at 1")
    if arith.compare(x, y) >= 0:
        return x
    seq = constrain_seq(y)
    e = _power_exponent(y)
    if classify_kind(e) == Kind.FIRST:
        return _psi_successor_case(y, x, pred_countable(e))
    return _psi_walk(seq, x)


def _psi_successor_case(y, x, ep) -> CountableTerm:
    """Members are w^ep * (1+n): locate x by its coefficient at w^ep."""
    base = veblen.omega_power(ep)
    y0 = base
    if arith.compare(x, y0) < 0:
        return arith.add(y0, x)
    c, r = _split_at(x, base, ep)  # x = y_{c-1} + r
    nxt = arith.multiply(base, nat(c + 1))
    if isinstance(r, Zero):
        return nxt  # equal differences: psi lands exactly on the next member
    return arith.add(nxt, r)


def _split_at(x, base, ep):
    """x = base * c + r with finite c >= 1 and r < base (x < base * w)."""
    if isinstance(ep, Zero):
        return arith.x_int(x), ZERO  # base = 1: x itself is the coefficient
    lead = arith.cnf_leading(x)
    if arith.compare(lead.x0, ep) != 0:
        raise DomainError("argument outside the member range")
    return lead.x1, lead.x2


def _psi_walk(seq: ConstrainedSeq, x) -> CountableTerm:
    """Generic piecewise evaluation by walking the (fast-growing) members."""
    y0 = seq.at(0)
    if arith.compare(x, y0) < 0:
        return arith.add(y0, x)
    n = 0
    while True:
        yn, yn1 = seq.at(n), seq.at(n + 1)
        c = arith.compare(x, yn1)
        if c < 0:
            if arith.compare(x, yn) == 0:
                if n == 0:
                    return arith.multiply(y0, nat(2))
                return arith.add(yn, arith.subtract(yn, seq.at(n - 1)))
            # x = yn + r with 1 <= r < delta_{n+1}
            r = arith.subtract(x, yn)
            return arith.add(yn1, r)
        if c == 0:
            return arith.add(yn1, arith.subtract(yn1, yn))
        n += 1
        if n > 4096:
            raise DomainError("piecewise evaluation walked too far")


def seq_from_psi(y: CountableTerm, n: int) -> CountableTerm:
    """The n-fold iterate of y's attached normal function starting at 1."""
    out = ONE
    for _ in range(n):
        out = psi_eval(y, out)
    return out


def F_from_f_eval(y_base: CountableTerm, x: CountableTerm) -> CountableTerm:
    """The normal function whose derivative enumerates the power values
    >= y_base, evaluated at x >= 1.

    Below the first enumerated value the convention is displacement by that
    value's own attached function: F(x) = psi_{f(1)}(x); so for y_base = w,
    F(1) = 2.
    """
    y_base, x = nat(y_base), nat(x)
    if principal_of(y_base) is None or arith.compare(y_base, OMEGA) < 0:
        raise DomainError("the enumerated family starts at a power value >= w")
    if isinstance(x, Zero):
        raise DomainError("argument starts at 1")
    if arith.compare(x, veblen.H1) >= 0:
        raise DomainError("argument at or above the ceiling H1")
    if arith.compare(x, y_base) < 0:
        return psi_eval(y_base, x)
    p = principal_of(x)
    if p is not None:
        return x  # x is an enumerated power value: fixed
    lead = arith.cnf_leading(x)
    v = veblen.omega_power(lead.x0)  # largest enumerated value <= x
    vnext = veblen.omega_power(arith.succ(_power_exponent(v)))
    rest = arith.subtract(x, v)
    return arith.add(v, psi_eval(vnext, rest))
