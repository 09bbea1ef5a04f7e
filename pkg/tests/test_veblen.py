"""Hierarchy constructors: absorption, named constants, membership, levels."""

import random

import pytest

from helpers import rand_countable, rand_index
from ordinals import arith, veblen
from ordinals.errors import CapError, DomainError
from ordinals.notation import parse
from ordinals.terms import (
    Count,
    Fin,
    IX_ZERO,
    OMEGA,
    OMEGA_IX,
    Sum,
    TOP1,
    TOP_FAPP,
    Zero,
    nat,
)
from ordinals.veblen import (
    E1,
    ETA0,
    H1,
    LAMBDA0,
    ZETA0,
    F_apply,
    eps,
    last_F_index,
    last_index,
    named,
    phi_apply,
    value_set_member,
)


def ix(s):
    t = parse(s)
    return Count(t) if isinstance(t, (Zero, Fin, Sum)) else t


def test_phi_apply_examples():
    assert phi_apply(0, 2) == parse("w^2")
    eps0 = parse("phi(1;1)")
    assert phi_apply(0, eps0) == eps0
    assert phi_apply(1, 2) == parse("phi(1;2)")
    with pytest.raises(DomainError):
        phi_apply(0, 0)


def test_F_apply_examples():
    assert F_apply(0, 2) == ix("W^2")
    f11 = ix("F(1;1)")
    assert F_apply(0, f11) == f11
    assert F_apply(OMEGA_IX, 1) == TOP_FAPP
    with pytest.raises(CapError):
        F_apply(OMEGA_IX, 2)
    with pytest.raises(DomainError):
        F_apply(ix("W^2"), ix("1"))


def test_value_set_member_examples():
    assert value_set_member(parse("w^w"), 0)
    assert value_set_member(parse("phi(1;1)"), 0)
    assert not value_set_member(parse("w*2"), 0)
    assert value_set_member(ETA0, 1)
    assert not value_set_member(parse("w^2"), 1)


def test_last_index_examples():
    assert last_index(parse("w^w")) == (IX_ZERO, OMEGA)
    assert last_index(parse("phi(1;1)")) == (Count(nat(1)), nat(1))
    assert last_index(parse("w*2")) is None
    with pytest.raises(DomainError):
        last_index(nat(3))


def test_named_constants():
    assert named("eps(1)").value == parse("phi(1;2)")
    assert ETA0 == parse("phi(2;1)")
    assert ZETA0 == parse("phi(2;2)")
    assert LAMBDA0 == parse("phi(2;w)")
    assert E1 == phi_apply(arith.index_add(F_apply(0, OMEGA_IX), Count(nat(1))), 1)
    assert H1 == phi_apply(TOP1, 1)
    with pytest.raises(DomainError):
        named("nonsense")


def test_eps_chain():
    prev = None
    for nu in range(1, 11):
        e = eps(nu)
        assert phi_apply(0, e) == e  # critical point of w^x
        assert phi_apply(1, arith.add(nat(1), nat(nu))) == e
        if prev is not None:
            assert arith.compare(prev, e) == -1
        prev = e


def test_fixed_point_absorption_random():
    rng = random.Random(61)
    for _ in range(300):
        eta = rand_index(rng, 1)
        x = rand_countable(rng, 2)
        if isinstance(x, Zero):
            continue
        try:
            hi = phi_apply(arith.index_add(eta, Count(nat(1))), x)
        except (DomainError, CapError):
            continue
        assert phi_apply(eta, hi) == hi


def test_phi0_monotone_matches_argument_order():
    rng = random.Random(67)
    for _ in range(300):
        x1, x2 = rand_countable(rng), rand_countable(rng)
        if isinstance(x1, Zero) or isinstance(x2, Zero):
            continue
        assert arith.compare(phi_apply(0, x1), phi_apply(0, x2)) == arith.compare(x1, x2)


def test_phi_at_least_argument():
    rng = random.Random(71)
    for _ in range(300):
        eta = rand_index(rng, 1)
        x = rand_countable(rng, 2)
        if isinstance(x, Zero):
            continue
        try:
            v = phi_apply(eta, x)
        except (DomainError, CapError):
            continue
        assert arith.compare(v, x) >= 0


def test_last_index_reads_off_unabsorbed_values():
    rng = random.Random(73)
    for _ in range(300):
        eta = rand_index(rng, 1)
        x = rand_countable(rng, 2)
        if isinstance(x, Zero):
            continue
        try:
            v = phi_apply(eta, x)
        except (DomainError, CapError):
            continue
        li = last_index(v) if arith.compare(v, OMEGA) >= 0 else None
        if li is not None and v != x and arith.compare(v, H1) < 0:
            stored_eta, stored_x = li
            assert phi_apply(stored_eta, stored_x) == v


def test_diagonal_index_regression():
    # the value at a third-kind index equals the first value one sequence step in
    assert phi_apply(ix("F(W;1)"), 1) == phi_apply(ix("F(2;1)"), 1)
    assert phi_apply(OMEGA_IX, 1) == ETA0  # phi_W(1) = phi_2(1)
    assert phi_apply(OMEGA_IX, 2) == phi_apply(3, 1)
    assert phi_apply(ix("W^2"), 1) == phi_apply(ix("W + 2"), 1)


def test_degenerate_first_value_collapses():
    gamma0 = phi_apply(ix("W + 1"), 1)
    assert phi_apply(Count(gamma0), 1) == gamma0
    ix_e1 = F_apply(0, Count(E1))
    assert phi_apply(ix_e1, 1) == E1
    v2 = phi_apply(ix_e1, 2)
    assert v2 != E1 and arith.compare(E1, v2) == -1


def test_last_F_index():
    assert last_F_index(ix("W^2")) == IX_ZERO
    assert last_F_index(ix("F(3;1)")) == Count(nat(3))
    assert last_F_index(ix("W^2 + W")) is None
    assert last_F_index(Count(OMEGA)) is None


def test_ceiling_is_enforced():
    with pytest.raises(CapError):
        phi_apply(TOP1, 2)
    with pytest.raises(CapError):
        arith.add(H1, nat(1))
    with pytest.raises(CapError):
        arith.index_add(TOP1, Count(nat(1)))
