"""Brute-force ground truth for ordinals below w^w, as coefficient vectors.

A ``VecOrdinal`` stores the coefficient of w^i at position i (little-endian,
no trailing zeros).  Everything here is derived directly from the normal-form
laws for this small segment and deliberately shares no code with the main
engine: its whole value is independence.  Test-only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError

LESS, EQUAL, GREATER = -1, 0, 1


@dataclass(frozen=True)
class VecOrdinal:
    coeffs: tuple  # tuple[int, ...]; coeffs[i] multiplies w^i; no trailing zeros

    def __post_init__(self):
        if any(c < 0 for c in self.coeffs):
            raise ValueError("negative coefficient")
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("trailing zero coefficient")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_limit(self) -> bool:
        return bool(self.coeffs) and self.coeffs[0] == 0


def vec(*coeffs) -> VecOrdinal:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return VecOrdinal(tuple(cs))


def vec_compare(a: VecOrdinal, b: VecOrdinal) -> int:
    if a.degree != b.degree:
        return LESS if a.degree < b.degree else GREATER
    for ca, cb in zip(reversed(a.coeffs), reversed(b.coeffs)):
        if ca != cb:
            return LESS if ca < cb else GREATER
    return EQUAL


def vec_add(a: VecOrdinal, b: VecOrdinal) -> VecOrdinal:
    if b.is_zero():
        return a
    d = b.degree
    out = list(b.coeffs)
    if a.degree >= d:
        out[d] += a.coeffs[d]
        out.extend(a.coeffs[d + 1 :])
    return vec(*out)


def vec_sub(a: VecOrdinal, b: VecOrdinal) -> VecOrdinal:
    """Front subtraction: the d with b + d = a (requires b <= a)."""
    if vec_compare(b, a) == GREATER:
        raise DomainError("oracle: cannot subtract a larger ordinal")
    for i in range(a.degree, -1, -1):
        ca = a.coeffs[i]
        cb = b.coeffs[i] if i <= b.degree else 0
        if ca != cb:
            return vec(*(a.coeffs[:i] + (ca - cb,)))
    return vec()


def vec_mul(a: VecOrdinal, b: VecOrdinal) -> VecOrdinal:
    if a.is_zero() or b.is_zero():
        return vec()
    da = a.degree
    out = [0] * (da + b.degree + 1)
    for j in range(b.degree, 0, -1):
        out[da + j] += b.coeffs[j]
    m = b.coeffs[0]
    if m:
        out[da] += a.coeffs[da] * m
        for i in range(da):
            out[i] += a.coeffs[i]
    return vec(*out)


def vec_fs(a: VecOrdinal, n: int) -> VecOrdinal:
    """The canonical sequence member: decrement the least nonzero coefficient
    and put 1+n one position down."""
    if not a.is_limit():
        raise DomainError("oracle: sequences exist for limits only")
    k = next(i for i, c in enumerate(a.coeffs) if c > 0)
    out = list(a.coeffs)
    out[k] -= 1
    out[k - 1] = 1 + n
    return vec(*out)


def vec_hardy(a: VecOrdinal, x: int) -> int:
    """Direct unmemoised recursion of the index-function hierarchy."""
    if a.is_zero():
        return 0
    if not a.is_limit():
        out = list(a.coeffs)
        out[0] -= 1
        return vec_hardy(vec(*out), x) + 1
    return vec_hardy(vec_fs(a, x), x)
