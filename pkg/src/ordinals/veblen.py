"""Normal-form constructors for the two function hierarchies.

``phi_apply`` builds the countable value phi_eta(x) of the first-class
hierarchy (phi_0(x) = w^x, successor index = derivative, second-kind index =
intersection of the value sets along the assigned sequence, third-kind index
= diagonal over first values).  ``F_apply`` does the same one tier up for the
second-class hierarchy F_zeta (F_0(xi) = W^xi).

Derivatives and intersections are never materialised as sets: a value of a
higher function is a fixed point of every lower one, so application absorbs
such arguments, and a third-kind index rewrites through its assigned sequence
(phi_eta(x) = phi_{eta_x}(1)), keeping normal forms unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from . import arith
from .errors import CapError, DomainError
from .terms import (
    Count,
    CountableTerm,
    FApp,
    Fin,
    HSum,
    IX_ONE,
    IX_ZERO,
    IndexTerm,
    Kind,
    ONE,
    OMEGA,
    OMEGA_IX,
    Phi,
    Sum,
    TOP1,
    TOP_FAPP,
    TopSucc,
    ZERO,
    Zero,
    classify_kind,
    is_pure_power,
    nat,
    principal,
    principal_of,
)


def last_F_index(xi: IndexTerm) -> Optional[IndexTerm]:
    """The last second-class hierarchy level whose value set contains xi,
    read off the normal form; None if xi is not a W-power value."""
    if isinstance(xi, FApp):
        return xi.zeta
    if is_pure_power(xi):
        return IX_ZERO
    return None


def F_apply(zeta, xi) -> IndexTerm:
    """The normal-form index term for F_zeta(xi)."""
    zeta = _coerce_ix(zeta)
    xi = _coerce_ix(xi)
    if xi == IX_ZERO:
        raise DomainError("F argument starts at 1")
    if zeta == OMEGA_IX:
        if xi != IX_ONE:
            raise CapError("F_W is admitted only at argument 1 (the ceiling)")
        return TOP_FAPP
    if not isinstance(zeta, Count):
        raise DomainError("F index must be countable or W")
    if arith.compare(xi, TOP_FAPP) > 0:
        raise CapError("F value above the ceiling F_W(1)+1")
    lvl = last_F_index(xi)
    if lvl is not None and arith.compare(lvl, zeta) > 0:
        return xi  # xi is a critical point of F_zeta
    if zeta == IX_ZERO:
        return arith.mk_hsum(((xi, ONE),), ZERO)
    return FApp(zeta, xi)


def phi_apply(eta, x) -> CountableTerm:
    """The normal-form countable term for phi_eta(x)."""
    eta = _coerce_ix(eta)
    x = nat(x)
    if isinstance(x, Zero):
        raise DomainError("phi argument starts at 1")
    if arith.compare(eta, TOP1) > 0:
        raise CapError("phi index above the ceiling F_W(1)+1")
    while True:
        p = principal_of(x)
        if p is not None and arith.compare(p.index, eta) > 0 and not _is_first_value_of(eta, x):
            return x  # x is a critical point of phi_eta
        if classify_kind(eta) == Kind.THIRD:
            # diagonal: phi_eta(x) = phi_{eta_x}(1)
            from .fundseq import index_fs

            eta, x = index_fs(eta, x), ONE
            continue
        break
    if isinstance(eta, TopSucc) and x != ONE:
        raise CapError("countable term above the ceiling H1")
    if classify_kind(eta) == Kind.SECOND and x == ONE:
        t = _degenerate_value(eta)
        if t is not None:
            return t  # first value collapses to the sequence length
    return principal(Phi(eta, x))


def _degenerate_value(eta: IndexTerm) -> Optional[CountableTerm]:
    """tau_eta when phi_eta(1) equals its own sequence length, else None.
    Holds exactly when tau_eta lies in every value set along eta's sequence,
    i.e. its stored level is at least eta."""
    from .fundseq import tau_countable

    t = tau_countable(eta)
    p = principal_of(t)
    if p is not None and arith.compare(p.index, eta) >= 0:
        return t
    return None


def _is_first_value_of(eta: IndexTerm, x: CountableTerm) -> bool:
    """True when x is the collapsed first value of the eta-indexed function
    (degenerate second-kind case); such x is not a critical point of it."""
    if classify_kind(eta) != Kind.SECOND:
        return False
    t = _degenerate_value(eta)
    return t is not None and t == x


def _coerce_ix(v) -> IndexTerm:
    if isinstance(v, int):
        return Count(nat(v))
    if isinstance(v, (Zero, Fin, Sum)):
        return Count(v)
    return v


def omega_power(x) -> CountableTerm:
    """w^x with fixed-point absorption (w^0 = 1)."""
    x = nat(x)
    if isinstance(x, Zero):
        return ONE
    return phi_apply(IX_ZERO, x)


def value_set_member(y: CountableTerm, eta) -> bool:
    """Syntactic membership of y in the value set at level eta: y's stored
    principal level must not be below eta (sound on the constructed chain)."""
    eta = _coerce_ix(eta)
    p = principal_of(y)
    if p is None:
        return False
    return arith.compare(p.index, eta) >= 0


def last_index(y: CountableTerm) -> Optional[Tuple[IndexTerm, CountableTerm]]:
    """(eta, x) read off the stored normal form of a principal term >= w;
    None when y is not a W-power-hierarchy value."""
    if arith.compare(y, OMEGA) < 0:
        raise DomainError("last_index requires a term >= w")
    p = principal_of(y)
    if p is None:
        return None
    return (p.index, p.arg)


# ---------------------------------------------------------------------------
# named constants

@dataclass(frozen=True)
class NamedOrdinal:
    name: str
    value: CountableTerm


def eps(nu) -> CountableTerm:
    """The nu-th critical point of w^x: eps(nu) = phi_1(1+nu), 1 <= nu < W."""
    nu = nat(nu)
    if isinstance(nu, Zero):
        raise DomainError("eps is indexed from 1")
    return phi_apply(IX_ONE, arith.add(ONE, nu))


#: w^w^... tower limit, first value of the second hierarchy level
ETA0 = phi_apply(Count(Fin(2)), ONE)
ZETA0 = phi_apply(Count(Fin(2)), Fin(2))
LAMBDA0 = phi_apply(Count(Fin(2)), OMEGA)
#: index W^W + 1 and its first value (the classical transfinite-symbol bound)
_E1_IX = arith.index_add(arith.mk_hsum(((OMEGA_IX, ONE),), ZERO), IX_ONE)
E1 = phi_apply(_E1_IX, ONE)
#: the ceiling: first value at index F_W(1)+1
H1 = phi_apply(TOP1, ONE)


def named(name: str) -> NamedOrdinal:
    """Resolve one of the addressable constant names (eps(k), eta0, ... H1)."""
    table = {"eta0": ETA0, "zeta0": ZETA0, "lambda0": LAMBDA0, "E1": E1, "H1": H1}
    if name in table:
        return NamedOrdinal(name, table[name])
    if name.startswith("eps(") and name.endswith(")"):
        try:
            k = int(name[4:-1])
        except ValueError:
            raise DomainError(f"unknown name {name!r}")
        return NamedOrdinal(name, eps(k))
    raise DomainError(f"unknown name {name!r}")
