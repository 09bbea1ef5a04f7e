"""Assigned ascending sequences: fundamental sequences for index ordinals and
distinguished sequences (length w) for countable limits below the ceiling.

Every limit index W < eta <= F_W(1) is written as eta = Phi_eta(xi_eta) for a
normal function Phi_eta and a smaller limit xi_eta (cases A..G), and its
sequence is Phi_eta applied to xi_eta's own sequence; below W the sequence is
simply 1+x.  Distinguished sequences for countable limits follow the same
scheme one tier down, using the three classical limit theorems (continuity,
derivative iteration, intersection enumeration).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import arith, veblen
from .errors import DomainError, GuardViolation
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


@dataclass(frozen=True)
class SeqSpec:
    """A lazily evaluated ascending sequence: its length and member generator."""

    length: IndexTerm
    at: Callable = field(compare=False)


@dataclass(frozen=True)
class PhiEtaSpec:
    """Decomposition eta = apply(xi_eta): the case tag, the limit xi_eta, and
    the normal function realised by ``apply`` on members of xi_eta's sequence."""

    case_tag: str
    xi_eta: IndexTerm
    apply: Callable = field(compare=False)


def pred_countable(x: CountableTerm) -> CountableTerm:
    """Strip one successor step (x must be of the first kind or 1)."""
    if isinstance(x, Fin):
        return nat(x.n - 1)
    if isinstance(x, Sum) and x.tail > 0:
        return Sum(x.parts, x.tail - 1)
    raise DomainError("term has no predecessor")


def index_pred(eta: IndexTerm) -> IndexTerm:
    """Predecessor of a first-kind index term."""
    if isinstance(eta, TopSucc):
        return TOP_FAPP
    if isinstance(eta, Count):
        return Count(pred_countable(eta.value))
    if isinstance(eta, HSum) and not isinstance(eta.tail, Zero):
        return arith.mk_hsum(eta.terms, pred_countable(eta.tail))
    raise DomainError("index has no predecessor")


def fp_below(level: IndexTerm, x: IndexTerm):
    """The largest fixed point of the (level-1)-th second-class function below
    x, i.e. the last member of VF_level under x; None when there is none."""
    if isinstance(x, Count):
        return None
    if isinstance(x, FApp):
        return fp_below(level, x.xi)  # v = F(v) < F(mu)  iff  v < mu
    if isinstance(x, HSum):
        x0 = x.terms[0][0]
        if is_pure_power(x):
            return fp_below(level, x0)  # v = W^v < W^x0  iff  v < x0
        lvl0 = veblen.last_F_index(x0)
        if lvl0 is not None and arith.compare(lvl0, level) >= 0:
            return x0  # largest v <= x0 is x0 itself
        return fp_below(level, x0)
    raise DomainError("no fixed-point search above the ceiling")


def phi_eta_decompose(eta: IndexTerm) -> PhiEtaSpec:
    """The unique case A..G decomposition of a limit index W < eta <= F_W(1)."""
    if arith.compare(eta, OMEGA_IX) <= 0:
        raise DomainError("decomposition starts above W")
    if arith.compare(eta, TOP_FAPP) > 0:
        raise DomainError("no decomposition above F_W(1)")
    if isinstance(eta, HSum):
        return _decompose_hsum(eta)
    if isinstance(eta, FApp):
        return _decompose_fapp(eta)
    raise DomainError("not a limit index above W")


def _decompose_hsum(eta: HSum) -> PhiEtaSpec:
    x0, y0 = eta.terms[0]
    if is_pure_power(eta):
        # eta = W^x0 with x0 not a hierarchy value; last containing level is 0
        if classify_kind(x0) == Kind.FIRST:
            e = index_pred(x0)  # >= 1 since eta > W
            return PhiEtaSpec(
                "D", OMEGA_IX, lambda xi: arith.mk_hsum(((e, _as_countable(xi)),), ZERO)
            )
        rho = fp_below(IX_ONE, x0) or IX_ZERO
        xi_eta = arith.index_sub(x0, rho) if rho != IX_ZERO else x0
        return PhiEtaSpec(
            "G", xi_eta, lambda xi: veblen.F_apply(IX_ZERO, arith.index_add(rho, xi))
        )
    rest = arith.mk_hsum(eta.terms[1:], eta.tail)
    if rest != IX_ZERO:
        lead = HSum((eta.terms[0],), ZERO)
        return PhiEtaSpec("A", rest, lambda xi: arith.index_add(lead, xi))
    if classify_kind(y0) == Kind.FIRST:
        y0p = pred_countable(y0)  # >= 1: coefficient 1 would make eta a pure power
        lead = HSum(((x0, y0p),), ZERO)
        return PhiEtaSpec(
            "B", veblen.F_apply(IX_ZERO, x0), lambda xi: arith.index_add(lead, xi)
        )
    return PhiEtaSpec(
        "C", Count(y0), lambda xi: arith.mk_hsum(((x0, _as_countable(xi)),), ZERO)
    )


def _decompose_fapp(eta: FApp) -> PhiEtaSpec:
    zeta, arg = eta.zeta, eta.xi
    if arg == IX_ONE:
        # first value: the last containing function is the diagonal F_zeta(1)
        if classify_kind(zeta) == Kind.FIRST:
            zpp = index_pred(zeta)
            return PhiEtaSpec(
                "E'", Count(OMEGA), lambda xi: _iterate_F(zpp, IX_ONE, xi)
            )
        # diagonal at a limit: its critical points lie beyond the ceiling, rho = 0
        return PhiEtaSpec("G", zeta, lambda xi: veblen.F_apply(xi, IX_ONE))
    karg = classify_kind(arg)
    if karg == Kind.FIRST:
        app = index_pred(arg)  # >= 1
        delta = arith.index_succ(veblen.F_apply(zeta, app))
        if classify_kind(zeta) == Kind.FIRST:
            zp = index_pred(zeta)
            return PhiEtaSpec("E", Count(OMEGA), lambda xi: _iterate_F(zp, delta, xi))
        return PhiEtaSpec("F", zeta, lambda xi: veblen.F_apply(xi, delta))
    rho = fp_below(arith.index_succ(zeta), arg) or IX_ZERO
    xi_eta = arith.index_sub(arg, rho) if rho != IX_ZERO else arg
    return PhiEtaSpec(
        "G", xi_eta, lambda xi: veblen.F_apply(zeta, arith.index_add(rho, xi))
    )


def _as_countable(xi: IndexTerm) -> CountableTerm:
    if not isinstance(xi, Count):
        raise DomainError("sequence member is not countable")
    return xi.value


def _iterate_F(zeta: IndexTerm, start: IndexTerm, xi: IndexTerm) -> IndexTerm:
    """xi-fold application of F_zeta from start (xi a finite member)."""
    v = _as_countable(xi)
    if not isinstance(v, Fin):
        raise DomainError("iteration count must be finite")
    out = start
    for _ in range(v.n):
        out = veblen.F_apply(zeta, out)
    return out


def tau(eta: IndexTerm) -> IndexTerm:
    """The length of eta's assigned sequence (a limit ordinal <= W)."""
    if classify_kind(eta) not in (Kind.SECOND, Kind.THIRD):
        raise DomainError("tau is defined for limit indices only")
    while True:
        if isinstance(eta, Count) or eta == OMEGA_IX:
            return eta
        eta = phi_eta_decompose(eta).xi_eta


def tau_countable(eta: IndexTerm) -> CountableTerm:
    """tau(eta) as a countable term (second-kind eta only)."""
    t = tau(eta)
    if not isinstance(t, Count):
        raise DomainError("sequence length is W, not countable")
    return t.value


def index_fs(eta: IndexTerm, x) -> IndexTerm:
    """The x-th member of eta's assigned fundamental sequence (0-indexed by
    ordinal positions x < tau(eta))."""
    x = _as_position(x)
    t = tau(eta)
    if arith.compare(Count(x), t) >= 0:
        raise DomainError("position is not below the sequence length")
    if isinstance(eta, Count) or eta == OMEGA_IX:
        return Count(arith.add(ONE, x))
    spec = phi_eta_decompose(eta)
    return spec.apply(index_fs(spec.xi_eta, x))


def _as_position(x) -> CountableTerm:
    if isinstance(x, int):
        return nat(x)
    if isinstance(x, Count):
        return x.value
    if isinstance(x, (Zero, Fin, Sum)):
        return x
    raise DomainError("sequence positions are countable")


def index_seq(eta: IndexTerm) -> SeqSpec:
    return SeqSpec(tau(eta), lambda x: index_fs(eta, x))


# ---------------------------------------------------------------------------
# distinguished sequences (length w) for countable limits

def dist_seq(y: CountableTerm, n: int) -> CountableTerm:
    """The n-th member of the distinguished sequence of a countable limit
    w <= y < H1."""
    y = nat(y)
    if n < 0:
        raise DomainError("sequence members are indexed from 0")
    if classify_kind(y) != Kind.SECOND or arith.compare(y, OMEGA) < 0:
        raise DomainError("distinguished sequences exist for countable limits >= w")
    if arith.compare(y, veblen.H1) >= 0:
        raise DomainError("no distinguished sequence at or above the ceiling H1")
    if y == OMEGA:
        return nat(1 + n)
    p = principal_of(y)
    if p is None:
        lead, c = y.parts[0]
        if len(y.parts) > 1:
            rest = Sum(y.parts[1:], 0)  # tail is 0 for a limit
            return arith.add(Sum(((lead, c),), 0), dist_seq(rest, n))
        # y = w^x0 * c with c >= 2: approach through the last power
        power = principal(lead)
        return arith.add(Sum(((lead, c - 1),), 0), dist_seq(power, n))
    eta, x = p.index, p.arg
    if classify_kind(x) == Kind.SECOND:
        # continuity: follow the argument's own sequence
        return veblen.phi_apply(eta, dist_seq(x, n))
    xp = pred_countable(x)
    if eta == IX_ZERO:
        # w^(x'+1): multiples of the previous power
        return arith.multiply(veblen.omega_power(xp), nat(1 + n))
    keta = classify_kind(eta)
    if keta == Kind.FIRST:
        # derivative: iterate the previous function
        ep = index_pred(eta)
        start = ONE if isinstance(xp, Zero) else arith.succ(veblen.phi_apply(eta, xp))
        out = start
        for _ in range(n):
            out = veblen.phi_apply(ep, out)
        return out
    if keta == Kind.SECOND:
        # intersection enumerator: climb the index's sequence along the
        # distinguished sequence of its length
        t = tau_countable(eta)
        if t == y:
            raise GuardViolation(
                "first value equals its sequence length; non-canonical term"
            )
        if arith.compare(t, y) >= 0:
            raise GuardViolation("sequence length is not below the value")
        sigma = dist_seq(t, n)
        lvl = index_fs(eta, sigma)
        if isinstance(xp, Zero):
            return veblen.phi_apply(lvl, ONE)
        return veblen.phi_apply(lvl, arith.succ(veblen.phi_apply(eta, xp)))
    # third-kind index: canonical terms never store one; renormalise and retry
    return dist_seq(veblen.phi_apply(eta, x), n)


def dist_seq_spec(y: CountableTerm) -> SeqSpec:
    return SeqSpec(Count(OMEGA), lambda n: dist_seq(y, n))


# ---------------------------------------------------------------------------
# coherence checks

def check_coherence(eta: IndexTerm) -> list:
    """Diagnostics for the initial-subsequence and first-member conditions of
    eta's assigned sequence, sampled at desk scale (empty iff coherent)."""
    diags = []
    t = tau(eta)
    w2 = arith.multiply(OMEGA, nat(2))
    ww = veblen.omega_power(2)
    limit_positions = [
        pos for pos in (OMEGA, w2, ww) if arith.compare(Count(pos), t) < 0
    ]
    for pos in limit_positions:
        m = index_fs(eta, pos)
        if classify_kind(m) not in (Kind.SECOND, Kind.THIRD):
            diags.append(f"member at limit position {pos!r} is not a limit")
            continue
        if arith.compare(tau(m), Count(pos)) != 0:
            diags.append("member at a limit position has sequence length != position")
        inner = [nat(i) for i in range(4)]
        if arith.compare(Count(OMEGA), Count(pos)) < 0:
            inner.append(OMEGA)
        for q in inner:
            if index_fs(m, q) != index_fs(eta, q):
                diags.append(
                    f"initial-subsequence violation at position {pos!r}/{q!r}"
                )
    for i in range(3):
        if arith.compare(Count(nat(i + 1)), t) >= 0:
            break
        m0 = index_fs(eta, i)
        m1 = index_fs(eta, i + 1)
        candidates = [m1]
        try:
            between = arith.index_add(m0, OMEGA_IX)
            if arith.compare(between, m1) <= 0:
                candidates.append(between)
        except DomainError:
            pass
        for cand in candidates:
            if classify_kind(cand) not in (Kind.SECOND, Kind.THIRD):
                continue
            first = index_fs(cand, 0)
            if arith.compare(first, m0) < 0:
                diags.append(f"first member of {cand!r} is below member {i}")
    return diags
