"""Shared test utilities: the vector<->term bridge and random generators.

Terms are generated exclusively through the package's canonical constructors,
so everything produced here is in normal form by construction.
"""

from __future__ import annotations

import random

from ordinals import arith, fundseq, veblen
from ordinals.errors import CapError, DomainError
from ordinals.oracle import VecOrdinal, vec
from ordinals.terms import (
    Count,
    Fin,
    IX_ZERO,
    Kind,
    OMEGA,
    OMEGA_IX,
    Sum,
    Zero,
    classify_kind,
    nat,
)


def term_of_vec(v: VecOrdinal):
    """Encode a vector ordinal as an engine term (bridge used only by tests)."""
    t = nat(0)
    for i in range(v.degree, -1, -1):
        c = v.coeffs[i]
        if c:
            t = arith.add(t, arith.multiply(veblen.omega_power(i), nat(c)))
    return t


def vec_of_term(t) -> VecOrdinal:
    """Decode a term below w^w back into a vector."""
    if isinstance(t, Zero):
        return vec()
    if isinstance(t, Fin):
        return vec(t.n)
    coeffs = {}
    for p, c in t.parts:
        assert p.index == IX_ZERO and isinstance(p.arg, Fin), "term not below w^w"
        coeffs[p.arg.n] = c
    deg = max(coeffs)
    out = [0] * (deg + 1)
    out[0] = t.tail
    for k, c in coeffs.items():
        out[k] = c
    return vec(*out)


def rand_vec(rng: random.Random, max_deg=4, max_coeff=5) -> VecOrdinal:
    return vec(*[rng.randrange(max_coeff) for _ in range(rng.randrange(1, max_deg + 1))])


def rand_countable(rng: random.Random, depth=3):
    """A random canonical countable term (full index range, below H1)."""
    if depth <= 0 or rng.random() < 0.25:
        return nat(rng.randrange(0, 6))
    roll = rng.random()
    try:
        if roll < 0.35:
            return veblen.omega_power(rand_countable(rng, depth - 1))
        if roll < 0.6:
            eta = rand_index(rng, depth - 1)
            arg = _positive(rng, depth - 1)
            return veblen.phi_apply(eta, arg)
        if roll < 0.85:
            return arith.add(rand_countable(rng, depth - 1), rand_countable(rng, depth - 1))
        return arith.multiply(rand_countable(rng, depth - 1), nat(rng.randrange(1, 4)))
    except (DomainError, CapError):
        return nat(rng.randrange(0, 6))


def _positive(rng, depth):
    t = rand_countable(rng, depth)
    return t if not isinstance(t, Zero) else nat(1 + rng.randrange(4))


def rand_index(rng: random.Random, depth=2):
    """A random canonical index term <= F_W(1)."""
    roll = rng.random()
    try:
        if roll < 0.4 or depth <= 0:
            return Count(rand_countable(rng, max(depth - 1, 0)))
        if roll < 0.55:
            return OMEGA_IX
        if roll < 0.75:
            return veblen.F_apply(IX_ZERO, rand_index(rng, depth - 1))
        if roll < 0.9:
            zeta = Count(_positive(rng, 0))
            xi = rand_index(rng, depth - 1)
            if arith.compare(xi, IX_ZERO) == 0:
                xi = Count(nat(1))
            return veblen.F_apply(zeta, xi)
        return arith.index_add(rand_index(rng, depth - 1), rand_index(rng, depth - 1))
    except (DomainError, CapError):
        return Count(nat(rng.randrange(1, 5)))


def rand_below_lambda0(rng: random.Random, depth=3):
    """A random countable term below lambda0 = phi_2(w)."""
    if depth <= 0 or rng.random() < 0.3:
        return nat(rng.randrange(0, 6))
    roll = rng.random()
    try:
        if roll < 0.35:
            return veblen.omega_power(rand_below_lambda0(rng, depth - 1))
        if roll < 0.55:
            arg = rand_below_lambda0(rng, depth - 1)
            if isinstance(arg, Zero):
                arg = nat(1)
            return veblen.phi_apply(Count(nat(1)), arg)
        if roll < 0.62:
            return veblen.phi_apply(Count(nat(2)), nat(rng.randrange(1, 5)))
        if roll < 0.85:
            return arith.add(
                rand_below_lambda0(rng, depth - 1), rand_below_lambda0(rng, depth - 1)
            )
        return arith.multiply(rand_below_lambda0(rng, depth - 1), nat(rng.randrange(1, 4)))
    except (DomainError, CapError):
        return nat(rng.randrange(0, 6))


def rand_limit_below_lambda0(rng: random.Random, depth=3):
    """A random countable limit w <= y < lambda0."""
    while True:
        t = rand_below_lambda0(rng, depth)
        if (
            classify_kind(t) == Kind.SECOND
            and arith.compare(t, OMEGA) >= 0
            and arith.compare(t, veblen.LAMBDA0) < 0
        ):
            return t


def rand_limit_below_h1(rng: random.Random, depth=3):
    """A random countable limit w <= y < H1 over the full index range."""
    while True:
        t = rand_countable(rng, depth)
        if classify_kind(t) == Kind.SECOND and arith.compare(t, OMEGA) >= 0:
            if arith.compare(t, veblen.H1) < 0:
                return t
