"""Kind classification, normal-form diagnostics, and the rank measure."""

import random

import pytest

from helpers import rand_countable, rand_index
from ordinals import arith, veblen
from ordinals.notation import parse
from ordinals.terms import (
    Count,
    FApp,
    Fin,
    IX_ZERO,
    Kind,
    OMEGA,
    OMEGA_IX,
    Phi,
    Sum,
    TOP1,
    ZERO,
    assert_normal_form,
    classify_kind,
    iter_nodes,
    nat,
    principal,
    term_rank,
)


def ix(s):
    t = parse(s)
    return Count(t) if isinstance(t, (type(ZERO), Fin, Sum)) else t


def test_kind_examples():
    assert classify_kind(nat(5)) == Kind.FIRST
    assert classify_kind(nat(0)) == Kind.ZERO
    assert classify_kind(OMEGA) == Kind.SECOND
    assert classify_kind(OMEGA_IX) == Kind.THIRD
    assert classify_kind(ix("W*w")) == Kind.SECOND
    assert classify_kind(ix("W^2")) == Kind.THIRD
    assert classify_kind(ix("W^w")) == Kind.SECOND
    assert classify_kind(ix("W^W")) == Kind.THIRD
    assert classify_kind(ix("W + w")) == Kind.SECOND
    assert classify_kind(ix("W + 1")) == Kind.FIRST
    assert classify_kind(ix("F(1;1)")) == Kind.SECOND
    assert classify_kind(ix("F(W;1)")) == Kind.THIRD
    assert classify_kind(TOP1) == Kind.FIRST


def test_countable_never_third():
    rng = random.Random(7)
    for _ in range(300):
        t = rand_countable(rng)
        assert classify_kind(t) != Kind.THIRD


def test_assert_normal_form_accepts_generated():
    rng = random.Random(11)
    for _ in range(300):
        assert assert_normal_form(rand_countable(rng)) == []
        assert assert_normal_form(rand_index(rng)) == []


def test_assert_normal_form_examples():
    assert assert_normal_form(principal(Phi(IX_ZERO, nat(2)))) == []
    increasing = Sum(((Phi(IX_ZERO, nat(1)), 1), (Phi(IX_ZERO, nat(2)), 1)), 0)
    assert any("decreasing" in d for d in assert_normal_form(increasing))
    eps0 = parse("phi(1;1)")
    fixed = principal(Phi(IX_ZERO, eps0))
    assert any("fixed point" in d for d in assert_normal_form(fixed))


def test_assert_normal_form_rejects_f0_and_bad_index():
    bad = FApp(IX_ZERO, Count(nat(2)))
    assert any("index 0" in d for d in assert_normal_form(bad))


def test_rank_examples_and_subterm_property():
    assert term_rank(ZERO) == 0
    assert term_rank(Fin(7)) >= 1
    t = veblen.phi_apply(IX_ZERO, OMEGA)
    assert term_rank(t) > term_rank(OMEGA)
    rng = random.Random(13)
    for _ in range(100):
        t = rand_countable(rng)
        for sub in iter_nodes(t):
            if sub is not t:
                assert term_rank(sub) < term_rank(t)


def test_no_stored_diagonal_or_f0():
    rng = random.Random(17)
    for _ in range(400):
        for t in (rand_countable(rng), rand_index(rng)):
            for node in iter_nodes(t):
                if isinstance(node, FApp):
                    assert node.zeta != IX_ZERO
                    # the only W-or-above index is the ceiling F_W(1)
                    if not isinstance(node.zeta, Count):
                        assert node == veblen.TOP_FAPP


def test_terms_hashable_and_immutable():
    t = parse("w^2*3 + w + 4")
    assert hash(t) == hash(parse("w^2*3 + w + 4"))
    with pytest.raises(Exception):
        t.tail = 5
