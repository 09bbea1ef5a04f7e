"""Number-valued hierarchies driven by distinguished sequences.

``hardy_eval`` is the classical index recursion (zero gives 0, successors add
one, a limit defers to the x-th member of its distinguished sequence).
``grow_eval`` is the squaring hierarchy: a base function (default 2^x),
two-fold self-composition at successors, and first values along the
distinguished sequence at limits.  Values explode immediately, so every
evaluation carries an explicit step and bit-length budget and aborts with
``BudgetError`` rather than ever returning a wrong number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import arith, veblen
from .errors import BudgetError, DomainError
from .fundseq import dist_seq
from .terms import (
    CountableTerm,
    Fin,
    Kind,
    Sum,
    Zero,
    classify_kind,
    nat,
)


@dataclass(frozen=True)
class Budget:
    max_recursion_steps: int = 10**6
    max_bit_length: int = 65536  # 2^65536 does not fit; keeps runaways fast

    def __post_init__(self):
        if self.max_recursion_steps < 1 or self.max_bit_length < 1:
            raise ValueError("budgets must be at least 1")


DEFAULT_BUDGET = Budget()


class _Meter:
    def __init__(self, budget: Budget):
        self.budget = budget
        self.steps = 0

    def tick(self):
        self.steps += 1
        if self.steps > self.budget.max_recursion_steps:
            raise BudgetError("recursion step budget exhausted")

    def check_bits(self, bits: int):
        if bits > self.budget.max_bit_length:
            raise BudgetError("bit-length budget exhausted")


def hardy_eval(y: CountableTerm, x: int, budget: Budget = DEFAULT_BUDGET) -> int:
    """Value of the index recursion at y for argument x."""
    y = nat(y)
    if x < 0:
        raise DomainError("argument must be a natural number")
    if arith.compare(y, veblen.H1) >= 0:
        raise DomainError("evaluation is defined below the ceiling H1")
    meter = _Meter(budget)
    acc = 0
    while True:
        meter.tick()
        if isinstance(y, Zero):
            return acc
        if isinstance(y, Fin):
            return acc + y.n
        if y.tail > 0:
            acc += y.tail
            y = Sum(y.parts, 0)
            continue
        y = dist_seq(y, x)


def grow_eval(
    eta: CountableTerm, x: int, budget: Budget = DEFAULT_BUDGET, base: int = 2
) -> int:
    """Value of the squaring hierarchy at stage eta for argument x >= 1."""
    eta = nat(eta)
    if x < 1:
        raise DomainError("argument must be at least 1")
    if base < 2:
        raise DomainError("base must be at least 2")
    if arith.compare(eta, veblen.H1) >= 0:
        raise DomainError("evaluation is defined below the ceiling H1")
    meter = _Meter(budget)
    return _grow(eta, x, meter, base)


def _grow(eta: CountableTerm, x: int, meter: _Meter, base: int) -> int:
    meter.tick()
    if isinstance(eta, Zero):
        bits = x + 1 if base == 2 else int(x * math.log2(base)) + 1
        meter.check_bits(bits)
        return base**x
    if isinstance(eta, Fin):
        prev = nat(eta.n - 1)
        return _grow(prev, _grow(prev, x, meter, base), meter, base)
    if eta.tail > 0:
        prev = Sum(eta.parts, eta.tail - 1)
        return _grow(prev, _grow(prev, x, meter, base), meter, base)
    return _grow(dist_seq(eta, x), 1, meter, base)
