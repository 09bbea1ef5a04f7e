"""Total-order comparison and ordinal arithmetic on both term tiers.

Comparison of principal terms uses the three-way rule: with equal indices
compare arguments; with index a < index b the whole right term is a fixed
point of the left term's function, so the left term is below iff its argument
is.  Addition, front subtraction and multiplication follow the usual normal
form laws, with absorption justified by the residue property of principal
values.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapError, DomainError
from .terms import (
    Count,
    CountableTerm,
    FApp,
    Fin,
    HSum,
    IndexTerm,
    IX_ONE,
    IX_ZERO,
    ONE,
    OMEGA_IX,
    Phi,
    Sum,
    TOP_FAPP,
    TopSucc,
    ZERO,
    Zero,
    nat,
    principal,
    principal_of,
    is_pure_power,
)

LESS, EQUAL, GREATER = -1, 0, 1

_COUNTABLE = (Zero, Fin, Sum)
_INDEX = (Count, HSum, FApp, TopSucc)


def compare(a, b) -> int:
    """-1 / 0 / 1 for a < b / a = b / a > b; countables embed into the index tier."""
    a_ix, b_ix = isinstance(a, _INDEX), isinstance(b, _INDEX)
    if a_ix or b_ix:
        return _cmp_ix(a if a_ix else Count(a), b if b_ix else Count(b))
    return _cmp_ct(a, b)


def _cmp_int(a: int, b: int) -> int:
    return (a > b) - (a < b)


def _cmp_ct(a: CountableTerm, b: CountableTerm) -> int:
    ra = 0 if isinstance(a, Zero) else 1 if isinstance(a, Fin) else 2
    rb = 0 if isinstance(b, Zero) else 1 if isinstance(b, Fin) else 2
    if ra != rb:
        return _cmp_int(ra, rb)
    if ra == 0:
        return EQUAL
    if ra == 1:
        return _cmp_int(a.n, b.n)
    for (p1, c1), (p2, c2) in zip(a.parts, b.parts):
        c = _cmp_phi(p1, p2)
        if c != EQUAL:
            return c
        if c1 != c2:
            return _cmp_int(c1, c2)
    if len(a.parts) != len(b.parts):
        return _cmp_int(len(a.parts), len(b.parts))
    return _cmp_int(a.tail, b.tail)


def _cmp_phi(p: Phi, q: Phi) -> int:
    p, q = _deflate(p), _deflate(q)
    c = _cmp_ix(p.index, q.index)
    if c == EQUAL:
        return _cmp_ct(p.arg, q.arg)
    if c == LESS:
        # q's value is a critical point of p's function (chain property),
        # except when it is that function's own collapsed first value
        bt = principal(q)
        if _is_first_value(p.index, bt):
            return _cmp_ct(p.arg, ONE)
        return _cmp_ct(p.arg, bt)
    bt = principal(p)
    if _is_first_value(q.index, bt):
        return -_cmp_ct(q.arg, ONE)
    return -_cmp_ct(q.arg, bt)


def _deflate(p: Phi) -> Phi:
    """Defensively rewrite a third-kind index through its assigned sequence."""
    from .terms import classify_kind, Kind

    while classify_kind(p.index) == Kind.THIRD:
        from .fundseq import index_fs

        p = Phi(index_fs(p.index, p.arg), ONE)
    return p


def _is_first_value(eta: IndexTerm, x: CountableTerm) -> bool:
    """Whether x is stored as the (collapsed) first value of the eta-indexed
    function, i.e. the degenerate case where that value equals the sequence
    length of eta.  Such x is *not* a critical point of the function."""
    from .terms import classify_kind, Kind

    if classify_kind(eta) != Kind.SECOND:
        return False
    p = principal_of(x)
    if p is None or _cmp_ix(p.index, eta) < 0:
        return False
    from .fundseq import tau_countable

    try:
        return tau_countable(eta) == x
    except DomainError:
        return False


def _cmp_ix(a: IndexTerm, b: IndexTerm) -> int:
    # tier ranks: countable < (HSum | FApp) < TopSucc
    ra = 0 if isinstance(a, Count) else 2 if isinstance(a, TopSucc) else 1
    rb = 0 if isinstance(b, Count) else 2 if isinstance(b, TopSucc) else 1
    if ra != rb:
        return _cmp_int(ra, rb)
    if ra == 0:
        return _cmp_ct(a.value, b.value)
    if ra == 2:
        return _cmp_int(a.k, b.k)
    if isinstance(a, FApp) and isinstance(b, FApp):
        c = _cmp_ix(a.zeta, b.zeta)
        if c == EQUAL:
            return _cmp_ix(a.xi, b.xi)
        if c == LESS:
            r = _cmp_ix(a.xi, b)  # b is a fixed point of a's function
            return LESS if r <= 0 else GREATER
        r = _cmp_ix(b.xi, a)
        return GREATER if r <= 0 else LESS
    if isinstance(a, FApp):
        return -_cmp_fapp_hsum(a, b)
    if isinstance(b, FApp):
        return _cmp_fapp_hsum(b, a)
    for (e1, c1), (e2, c2) in zip(a.terms, b.terms):
        c = _cmp_ix(e1, e2)
        if c != EQUAL:
            return c
        c = _cmp_ct(c1, c2)
        if c != EQUAL:
            return c
    if len(a.terms) != len(b.terms):
        return _cmp_int(len(a.terms), len(b.terms))
    return _cmp_ct(a.tail, b.tail)


def _cmp_fapp_hsum(f: FApp, h: HSum) -> int:
    """Compare F_zeta(xi) (a W-power fixed point) with a base-W sum; result
    is for h ? f so it can be negated uniformly."""
    x0, _ = h.terms[0]
    c = _cmp_ix(x0, f)  # h's leading exponent against f = W^f
    if c != EQUAL:
        return c
    return EQUAL if is_pure_power(h) else GREATER


# ---------------------------------------------------------------------------
# countable-tier arithmetic

def add(a: CountableTerm, b: CountableTerm) -> CountableTerm:
    """Ordinal sum in normal form (left parts below b's leading part vanish)."""
    a, b = nat(a), nat(b)
    if isinstance(b, Zero):
        return a
    if isinstance(a, Zero):
        return b
    if isinstance(b, Fin):
        if isinstance(a, Fin):
            return Fin(a.n + b.n)
        return _mk_sum(a.parts, a.tail + b.n)
    if isinstance(a, Fin):
        return b
    q0, d0 = b.parts[0]
    keep = []
    for (p, c) in a.parts:
        r = _cmp_phi(p, q0)
        if r == GREATER:
            keep.append((p, c))
        elif r == EQUAL:
            keep.append((p, c + d0))
            return _mk_sum(tuple(keep) + b.parts[1:], b.tail)
        else:
            break
    return _mk_sum(tuple(keep) + b.parts, b.tail)


def succ(a: CountableTerm) -> CountableTerm:
    return add(a, ONE)


def subtract(x: CountableTerm, y: CountableTerm) -> CountableTerm:
    """Front subtraction: the unique d with y + d = x.  Error if y > x."""
    x, y = nat(x), nat(y)
    if compare(y, x) == GREATER:
        raise DomainError("cannot subtract a larger ordinal from the front")
    if isinstance(y, Zero):
        return x
    if isinstance(x, (Zero, Fin)):
        return nat(x_int(x) - x_int(y))
    if isinstance(y, Fin):
        return x  # finite prefix absorbed by the leading limit part
    for i, ((p1, c1), (p2, c2)) in enumerate(zip(x.parts, y.parts)):
        if _cmp_phi(p1, p2) != EQUAL:
            return _mk_sum(x.parts[i:], x.tail)
        if c1 != c2:
            return _mk_sum(((p1, c1 - c2),) + x.parts[i + 1 :], x.tail)
    if len(x.parts) > len(y.parts):
        return _mk_sum(x.parts[len(y.parts) :], x.tail)
    return nat(x.tail - y.tail)


def x_int(t: CountableTerm) -> int:
    if isinstance(t, Zero):
        return 0
    if isinstance(t, Fin):
        return t.n
    raise DomainError("not a finite term")


def multiply(a: CountableTerm, b: CountableTerm) -> CountableTerm:
    """Ordinal product in normal form; distributes over b's normal form."""
    a, b = nat(a), nat(b)
    if isinstance(a, Zero) or isinstance(b, Zero):
        return ZERO
    if isinstance(a, Fin):
        if isinstance(b, Fin):
            return Fin(a.n * b.n)
        return _mk_sum(b.parts, a.n * b.tail if b.tail else 0)
    if isinstance(b, Fin):
        (p0, c0) = a.parts[0]
        return _mk_sum(((p0, c0 * b.n),) + a.parts[1:], a.tail)
    e0 = cnf_leading(a).x0
    parts = []
    for (p, c) in b.parts:
        exp = p.arg if p.index == IX_ZERO else principal(p)
        power = _opow(add(e0, exp))
        parts.append((principal_of(power), c))
    if b.tail:
        (p0, c0) = a.parts[0]
        return _mk_sum(tuple(parts) + ((p0, c0 * b.tail),) + a.parts[1:], a.tail)
    return _mk_sum(tuple(parts), 0)


def _opow(x: CountableTerm):
    """w^x as a countable term (with fixed-point absorption)."""
    from .veblen import phi_apply

    if isinstance(x, Zero):
        return ONE
    return phi_apply(IX_ZERO, x)


def _mk_sum(parts: tuple, tail: int) -> CountableTerm:
    if not parts:
        return nat(tail)
    from .veblen import H1

    lead = principal(parts[0][0])
    if lead == H1 and (len(parts) > 1 or parts[0][1] > 1 or tail > 0):
        raise CapError("countable term above the ceiling H1")
    return Sum(parts, tail)


@dataclass(frozen=True)
class CnfView:
    """Leading base-w split y = w^x0 * x1 + x2 with x2 < w^x0 and x1 finite."""

    x0: CountableTerm
    x1: int
    x2: CountableTerm


def cnf_leading(y: CountableTerm) -> CnfView:
    """The unambiguous leading split of a countable term >= w."""
    if not isinstance(y, Sum):
        raise DomainError("cnf_leading requires a term >= w")
    (p, c) = y.parts[0]
    x0 = p.arg if p.index == IX_ZERO else principal(p)
    rest = Sum(y.parts[1:], y.tail) if len(y.parts) > 1 else nat(y.tail)
    return CnfView(x0, c, rest)


# ---------------------------------------------------------------------------
# index-tier arithmetic

@dataclass(frozen=True)
class HausdorffView:
    """Base-W form of an index term above W: terms (x_i, y_i) plus countable z."""

    terms: tuple
    z: CountableTerm


def hausdorff_view(eta: IndexTerm) -> HausdorffView:
    """The base-W sum form of an index term; error if eta <= W."""
    if compare(eta, OMEGA_IX) <= 0:
        raise DomainError("hausdorff_view requires a term above W")
    terms, tail = _hparts(eta)
    return HausdorffView(terms, tail)


def _hparts(eta: IndexTerm):
    """(terms, countable tail) with FApp read as a single W-power term."""
    if isinstance(eta, Count):
        return (), eta.value
    if isinstance(eta, HSum):
        return eta.terms, eta.tail
    if isinstance(eta, FApp):
        return ((eta, ONE),), ZERO
    if isinstance(eta, TopSucc):
        return ((TOP_FAPP, ONE),), ONE
    raise TypeError(f"not an index term: {eta!r}")


def mk_hsum(terms: tuple, tail: CountableTerm) -> IndexTerm:
    """Canonical index term for a base-W sum (absorbs pure fixed-point powers,
    produces TopSucc at the ceiling, errors above it)."""
    if not terms:
        return Count(tail)
    if terms == ((TOP_FAPP, ONE),):
        if isinstance(tail, Zero):
            return TOP_FAPP
        if tail == ONE:
            return TopSucc(1)
        raise CapError("index above the ceiling F_W(1)+1")
    if compare(terms[0][0], TOP_FAPP) >= 0:
        raise CapError("index above the ceiling F_W(1)+1")
    h = HSum(terms, tail)
    if is_pure_power(h) and isinstance(terms[0][0], FApp):
        return terms[0][0]  # W^e = e when e is itself a hierarchy value (level >= 1)
    return h


def index_add(a: IndexTerm, b: IndexTerm) -> IndexTerm:
    """Ordinal sum at the index tier."""
    if isinstance(b, TopSucc):
        raise CapError("index above the ceiling F_W(1)+1")
    if isinstance(a, TopSucc):
        if b == IX_ZERO:
            return a
        raise CapError("index above the ceiling F_W(1)+1")
    ta, za = _hparts(a)
    tb, zb = _hparts(b)
    if not tb:
        if isinstance(zb, Zero):
            return a
        if not ta:
            return Count(add(za, zb))
        return mk_hsum(ta, add(za, zb))
    e0, c0 = tb[0]
    keep = []
    for (e, c) in ta:
        r = compare(e, e0)
        if r == GREATER:
            keep.append((e, c))
        elif r == EQUAL:
            keep.append((e, add(c, c0)))
            return mk_hsum(tuple(keep) + tb[1:], zb)
        else:
            break
    return mk_hsum(tuple(keep) + tb, zb)


def index_succ(a: IndexTerm) -> IndexTerm:
    return index_add(a, IX_ONE)


def index_sub(x: IndexTerm, y: IndexTerm) -> IndexTerm:
    """Front subtraction at the index tier (y <= x)."""
    if compare(y, x) == GREATER:
        raise DomainError("cannot subtract a larger index from the front")
    tx, zx = _hparts(x)
    ty, zy = _hparts(y)
    for i, ((e1, c1), (e2, c2)) in enumerate(zip(tx, ty)):
        if compare(e1, e2) != EQUAL:
            return mk_hsum(tx[i:], zx)
        if c1 != c2:
            return mk_hsum(((e1, subtract(c1, c2)),) + tx[i + 1 :], zx)
    if len(tx) > len(ty):
        return mk_hsum(tx[len(ty) :], zx)
    return Count(subtract(zx, zy))


def index_multiply(a: IndexTerm, b) -> IndexTerm:
    """Index-tier product a * b (b countable or index)."""
    if isinstance(b, _COUNTABLE):
        b = Count(b)
    ta, za = _hparts(a)
    tb, zb = _hparts(b)
    if (not ta and isinstance(za, Zero)) or (not tb and isinstance(zb, Zero)):
        return IX_ZERO
    if not ta:  # countable * index
        if not tb:
            return Count(multiply(za, zb))
        return mk_hsum(tb, multiply(za, zb) if not isinstance(zb, Zero) else ZERO)
    e0, c0 = ta[0]
    if not tb:  # index * countable coefficient
        zlim, m = _split_fin(zb)
        out = ()
        if not isinstance(zlim, Zero):
            out += ((e0, multiply(c0, zlim)),)
        if m:
            lead = add(multiply(c0, zlim), multiply(c0, nat(m))) if not isinstance(zlim, Zero) else multiply(c0, nat(m))
            out = ((e0, lead),) + ta[1:]
            return mk_hsum(out, za)
        return mk_hsum(out, ZERO)
    parts = []
    for (e, c) in tb:
        parts.append((index_add_exp(e0, e), c))
    if not isinstance(zb, Zero):
        tail_prod = index_multiply(a, Count(zb))
        tt, tz = _hparts(tail_prod)
        return mk_hsum(tuple(parts) + tt, tz)
    return mk_hsum(tuple(parts), ZERO)


def index_add_exp(e0: IndexTerm, e: IndexTerm) -> IndexTerm:
    """Exponent addition for products (kept separate for clarity)."""
    return index_add(e0, e)


def _split_fin(t: CountableTerm):
    """(limit part, finite tail) of a countable term."""
    if isinstance(t, Zero):
        return ZERO, 0
    if isinstance(t, Fin):
        return ZERO, t.n
    if t.tail:
        return Sum(t.parts, 0), t.tail
    return t, 0
