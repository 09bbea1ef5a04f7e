"""The vector oracle's own sanity checks (hand-derived expected values)."""

import pytest

from ordinals.errors import DomainError
from ordinals.oracle import (
    vec,
    vec_add,
    vec_compare,
    vec_fs,
    vec_hardy,
    vec_mul,
    vec_sub,
)


def test_encode_no_trailing_zeros():
    assert vec(3, 0, 0) == vec(3)
    assert vec().is_zero()


def test_compare_examples():
    assert vec_compare(vec(3), vec(0, 1)) == -1  # 3 < w
    assert vec_compare(vec(0, 2, 1), vec(0, 0, 1)) == 1  # w^2+w*2 > w^2
    assert vec_compare(vec(5), vec(5)) == 0


def test_add_examples():
    assert vec_add(vec(0, 1), vec(0, 0, 1)) == vec(0, 0, 1)  # w + w^2 = w^2
    assert vec_add(vec(0, 0, 1), vec(0, 1)) == vec(0, 1, 1)
    assert vec_add(vec(5), vec(0, 1)) == vec(0, 1)
    assert vec_add(vec(0, 1), vec(5)) == vec(5, 1)


def test_sub_examples():
    assert vec_sub(vec(5, 1), vec(0, 1)) == vec(5)  # (w+5) - w = 5
    assert vec_sub(vec(0, 0, 1), vec(0, 1)) == vec(0, 0, 1)  # w^2 - w = w^2
    assert vec_sub(vec(0, 3), vec(0, 3)) == vec()
    with pytest.raises(DomainError):
        vec_sub(vec(0, 1), vec(0, 0, 1))


def test_mul_examples():
    assert vec_mul(vec(0, 1), vec(2)) == vec(0, 2)  # w*2
    assert vec_mul(vec(2), vec(0, 1)) == vec(0, 1)  # 2*w = w
    assert vec_mul(vec(1, 1), vec(0, 1)) == vec(0, 0, 1)  # (w+1)*w = w^2
    assert vec_mul(vec(3), vec(4)) == vec(12)
    assert vec_mul(vec(2, 3), vec(1, 2)) == vec(2, 3, 2)  # (w3+2)(w2+1) = w^2*2+w3+2


def test_fs_examples():
    assert vec_fs(vec(0, 0, 1), 0) == vec(0, 1)  # w^2 -> w*(1+n)
    assert vec_fs(vec(0, 0, 1), 2) == vec(0, 3)
    assert vec_fs(vec(0, 3), 1) == vec(2, 2)  # w*3 -> w*2 + (1+n)
    assert vec_fs(vec(0, 1), 4) == vec(5)  # w -> 1+n
    with pytest.raises(DomainError):
        vec_fs(vec(3), 0)


def test_fs_closure_and_descent():
    a = vec(0, 2, 1)
    for n in range(5):
        m = vec_fs(a, n)
        assert vec_compare(m, a) == -1


def test_hardy_examples():
    assert vec_hardy(vec(3), 10) == 3
    assert vec_hardy(vec(0, 1), 4) == 5
    assert vec_hardy(vec(0, 2), 3) == 8
    assert vec_hardy(vec(0, 0, 1), 2) == 9
