import random
from fractions import Fraction

import pytest

from dihedralcovers.fields import QQ, GF, FpElem, field_from_name


def test_rationals_protocol():
    assert QQ.zero == 0
    assert QQ.one == 1
    assert QQ.of(3) == Fraction(3)
    assert QQ.inv(Fraction(2, 3)) == Fraction(3, 2)
    assert QQ.characteristic == 0


def test_prime_field_arithmetic():
    K = GF(7)
    a = K.of(3)
    b = K.of(5)
    assert a + b == K.of(1)
    assert a - b == K.of(5)
    assert a * b == K.of(1)
    assert a / b == a * b.inverse()
    assert -a == K.of(4)
    assert a ** 6 == K.one
    assert K.of(Fraction(1, 2)) == K.of(4)


def test_prime_field_rejects_composites():
    with pytest.raises(ValueError):
        GF(9)
    with pytest.raises(ValueError):
        GF(2)


def test_division_by_zero():
    K = GF(11)
    with pytest.raises(ZeroDivisionError):
        K.inv(K.zero)


def test_sqrt():
    for p in (7, 11, 13, 101, 211):
        K = GF(p)
        squares = {(K.of(v) * K.of(v)).v for v in range(p)}
        for v in range(p):
            a = K.of(v)
            r = K.sqrt(a)
            if v in squares:
                assert r is not None and r * r == a
            else:
                assert r is None


def test_random_elements_are_reproducible():
    K = GF(101)
    a = K.random(random.Random(3))
    b = K.random(random.Random(3))
    assert a == b
    assert K.random_nonzero(random.Random(3)) != K.zero


def test_field_from_name():
    assert field_from_name("Q") is QQ
    assert field_from_name("Fp:101") == GF(101)
    with pytest.raises(ValueError):
        field_from_name("Fp:10")
    with pytest.raises(ValueError):
        field_from_name("R")


def test_mixed_characteristic_rejected():
    with pytest.raises(ValueError):
        FpElem(1, 7) + FpElem(1, 11)
