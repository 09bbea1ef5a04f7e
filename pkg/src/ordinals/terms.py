"""Term language for the two-tier ordinal notation system.

Countable tier (ordinals of the first and second number class, below the
ceiling H1): ``Zero``, ``Fin(n)``, and ``Sum`` of principal ``Phi`` parts with
collapsed natural coefficients and a finite tail, so ``w^2*3 + w + 4`` is one
``Sum`` node.  A ``Phi(index, arg)`` node denotes the value of the
``index``-th function of the first-class hierarchy at ``arg``.

Index tier (ordinals of the third number class up to F_W(1)+1, used as
subscripts of the first-class hierarchy): ``Count`` embeds a countable term,
``HSum`` is a base-W sum with strictly decreasing exponents and countable
coefficients, ``FApp(zeta, xi)`` is the value F_zeta(xi) of the second-class
hierarchy, and ``TopSucc(1)`` is the ceiling index F_W(1)+1.

All nodes are immutable; every operation in the package is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Union


class Kind(Enum):
    ZERO = "Zero"
    FIRST = "FirstKind"
    SECOND = "SecondKind"
    THIRD = "ThirdKind"


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class Fin:
    n: int  # n >= 1; zero is the separate Zero node

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("Fin requires n >= 1")


@dataclass(frozen=True)
class Phi:
    """Principal countable term: the value of the index-th hierarchy function."""

    index: "IndexTerm"
    arg: "CountableTerm"


@dataclass(frozen=True)
class Sum:
    """p1*c1 + p2*c2 + ... + tail with strictly decreasing principal parts."""

    parts: tuple  # tuple[tuple[Phi, int], ...], nonempty
    tail: int  # finite remainder >= 0


@dataclass(frozen=True)
class Count:
    """A countable ordinal used as an index (below W)."""

    value: "CountableTerm"


@dataclass(frozen=True)
class HSum:
    """Base-W sum:  W^x1*y1 + ... + W^xn*yn + tail  (xi decreasing, yi countable)."""

    terms: tuple  # tuple[tuple[IndexTerm, CountableTerm], ...], nonempty
    tail: "CountableTerm"


@dataclass(frozen=True)
class FApp:
    """F_zeta(xi): a value of the second-class hierarchy (zeta is Count(..) or W)."""

    zeta: "IndexTerm"
    xi: "IndexTerm"


@dataclass(frozen=True)
class TopSucc:
    """F_W(1)+k; only k = 1 is admitted (the index of the ceiling H1)."""

    k: int = 1

    def __post_init__(self):
        if self.k != 1:
            raise ValueError("TopSucc admits only k = 1")


CountableTerm = Union[Zero, Fin, Sum]
IndexTerm = Union[Count, HSum, FApp, TopSucc]

ZERO = Zero()
ONE = Fin(1)
IX_ZERO = Count(ZERO)
IX_ONE = Count(ONE)

#: the countable term for w = phi_0(1)
OMEGA = Sum(((Phi(IX_ZERO, ONE), 1),), 0)
#: the index term for W itself (W^1 * 1)
OMEGA_IX = HSum(((IX_ONE, ONE),), ZERO)
#: the ceiling index F_W(1); terms never compare above TopSucc(1) = F_W(1)+1
TOP_FAPP = FApp(OMEGA_IX, IX_ONE)
TOP1 = TopSucc(1)


def nat(n) -> CountableTerm:
    """The countable term for a natural number."""
    if isinstance(n, (Zero, Fin, Sum)):
        return n
    if n < 0:
        raise ValueError("no negative ordinals")
    return ZERO if n == 0 else Fin(n)


def principal(p: Phi) -> Sum:
    """Wrap a principal node in its canonical single-part Sum."""
    return Sum(((p, 1),), 0)


def principal_of(t: CountableTerm) -> Optional[Phi]:
    """The Phi node if t is principal (one part, coefficient 1, tail 0)."""
    if isinstance(t, Sum) and len(t.parts) == 1 and t.parts[0][1] == 1 and t.tail == 0:
        return t.parts[0][0]
    return None


def is_pure_power(t: IndexTerm) -> bool:
    """True for an HSum of shape W^e (single term, coefficient 1, no tail)."""
    return (
        isinstance(t, HSum)
        and len(t.terms) == 1
        and t.terms[0][1] == ONE
        and t.tail == ZERO
    )


def classify_kind(t) -> Kind:
    """Classify a normal-form term as zero / first / second / third kind."""
    if isinstance(t, Zero):
        return Kind.ZERO
    if isinstance(t, Fin):
        return Kind.FIRST
    if isinstance(t, Sum):
        return Kind.FIRST if t.tail > 0 else Kind.SECOND
    if isinstance(t, Count):
        return classify_kind(t.value)
    if isinstance(t, TopSucc):
        return Kind.FIRST
    if isinstance(t, HSum):
        if not isinstance(t.tail, Zero):
            return classify_kind(t.tail)
        xn, yn = t.terms[-1]
        if classify_kind(yn) == Kind.SECOND:
            return Kind.SECOND  # W^xn approached through its coefficient
        # yn is a successor: the low end is a whole power W^xn
        k = classify_kind(xn)
        return Kind.SECOND if k == Kind.SECOND else Kind.THIRD
    if isinstance(t, FApp):
        return _fapp_kind(t)
    raise TypeError(f"not a term: {t!r}")


def _fapp_kind(t: FApp) -> Kind:
    zeta, xi = t.zeta, t.xi
    if xi == IX_ONE:
        # first value: reached through the diagonal, length depends on zeta
        if zeta == OMEGA_IX:
            return Kind.THIRD
        # zeta successor -> omega-iteration; zeta a countable limit -> tau = zeta < W
        return Kind.SECOND
    kx = classify_kind(xi)
    if kx == Kind.FIRST:
        # argument successor >= 2: omega-iteration for successor zeta,
        # tau = zeta for limit zeta
        return Kind.THIRD if zeta == OMEGA_IX else Kind.SECOND
    # argument limit: the assigned sequence tracks the argument's own length
    return kx


def is_limit(t) -> bool:
    return classify_kind(t) in (Kind.SECOND, Kind.THIRD)


def is_successor(t) -> bool:
    return classify_kind(t) == Kind.FIRST


def term_rank(t) -> int:
    """Structural size; strictly larger than the rank of every subterm."""
    if isinstance(t, (Zero, TopSucc)):
        return 0 if isinstance(t, Zero) else 1
    if isinstance(t, Fin):
        return 1
    if isinstance(t, Phi):
        return 1 + term_rank(t.index) + term_rank(t.arg)
    if isinstance(t, Sum):
        return 1 + sum(term_rank(p) + c for p, c in t.parts) + t.tail
    if isinstance(t, Count):
        return 1 + term_rank(t.value)
    if isinstance(t, HSum):
        return 1 + sum(term_rank(e) + term_rank(c) for e, c in t.terms) + term_rank(t.tail)
    if isinstance(t, FApp):
        return 1 + term_rank(t.zeta) + term_rank(t.xi)
    raise TypeError(f"not a term: {t!r}")


def iter_nodes(t) -> Iterator:
    """Yield every node of the term, including the term itself."""
    yield t
    if isinstance(t, Phi):
        yield from iter_nodes(t.index)
        yield from iter_nodes(t.arg)
    elif isinstance(t, Sum):
        for p, _ in t.parts:
            yield from iter_nodes(p)
    elif isinstance(t, Count):
        yield from iter_nodes(t.value)
    elif isinstance(t, HSum):
        for e, c in t.terms:
            yield from iter_nodes(e)
            yield from iter_nodes(c)
        yield from iter_nodes(t.tail)
    elif isinstance(t, FApp):
        yield from iter_nodes(t.zeta)
        yield from iter_nodes(t.xi)


def assert_normal_form(t) -> list:
    """Diagnostics for every violated normal-form invariant (empty iff canonical)."""
    diags = []
    _check(t, diags)
    return diags


def _check(t, diags):
    from . import arith  # cycle: comparison is needed for ordering checks

    if isinstance(t, (Zero, TopSucc)):
        return
    if isinstance(t, Fin):
        if t.n < 1:
            diags.append("Fin coefficient below 1")
        return
    if isinstance(t, Sum):
        if not t.parts:
            diags.append("empty Sum")
            return
        if t.tail < 0:
            diags.append("negative Sum tail")
        for (p, c) in t.parts:
            if not isinstance(p, Phi):
                diags.append("Sum part is not principal")
                continue
            if c < 1:
                diags.append("Sum coefficient below 1")
            _check_phi(p, diags)
        for (p1, _), (p2, _) in zip(t.parts, t.parts[1:]):
            if arith.compare(principal(p1), principal(p2)) <= 0:
                diags.append("Sum parts not strictly decreasing")
        return
    if isinstance(t, Count):
        _check(t.value, diags)
        return
    if isinstance(t, HSum):
        if not t.terms:
            diags.append("empty HSum")
            return
        for (e, c) in t.terms:
            if isinstance(e, Count) and isinstance(e.value, Zero):
                diags.append("HSum exponent below 1")
            if isinstance(c, Zero):
                diags.append("HSum coefficient below 1")
            if not isinstance(c, (Zero, Fin, Sum)):
                diags.append("HSum coefficient not countable")
            _check(e, diags)
            _check(c, diags)
        if not isinstance(t.tail, (Zero, Fin, Sum)):
            diags.append("HSum tail not countable")
        else:
            _check(t.tail, diags)
        for (e1, _), (e2, _) in zip(t.terms, t.terms[1:]):
            if arith.compare(e1, e2) <= 0:
                diags.append("HSum exponents not strictly decreasing")
        if is_pure_power(t) and isinstance(t.terms[0][0], FApp):
            diags.append("pure W-power of a fixed-point exponent (should absorb)")
        if arith.compare(t, TOP1) > 0:
            diags.append("index above the ceiling F_W(1)+1")
        return
    if isinstance(t, FApp):
        _check_fapp(t, diags)
        return
    if isinstance(t, Phi):
        _check_phi(t, diags)
        return
    diags.append(f"unknown node {type(t).__name__}")


def _check_phi(p: Phi, diags):
    from . import arith, veblen
    from .errors import CapError, DomainError

    _check(p.index, diags)
    _check(p.arg, diags)
    if isinstance(p.arg, Zero):
        diags.append("Phi argument is 0")
        return
    try:
        rebuilt = veblen.phi_apply(p.index, p.arg)
    except (CapError, DomainError) as e:
        diags.append(f"Phi not constructible: {e}")
        return
    if rebuilt != principal(p):
        if rebuilt == p.arg:
            diags.append("Phi argument is a fixed point at this index (should absorb)")
        else:
            diags.append("Phi is not the canonical form of its value")


def _check_fapp(f: FApp, diags):
    from . import arith, veblen
    from .errors import CapError, DomainError

    _check(f.zeta, diags)
    _check(f.xi, diags)
    if f.zeta == IX_ZERO:
        diags.append("FApp with index 0 (W-powers are HSum terms)")
        return
    if not (isinstance(f.zeta, Count) or f.zeta == OMEGA_IX):
        diags.append("FApp index above W")
        return
    try:
        rebuilt = veblen.F_apply(f.zeta, f.xi)
    except (CapError, DomainError) as e:
        diags.append(f"FApp not constructible: {e}")
        return
    if rebuilt != f:
        if rebuilt == f.xi:
            diags.append("FApp argument is a fixed point at this index (should absorb)")
        else:
            diags.append("FApp is not the canonical form of its value")
