import random
from fractions import Fraction

import pytest

from dihedralcovers.fields import QQ, GF
from dihedralcovers.poly import (Poly, NEG_INF, poly_gcd, poly_xgcd,
                                 resultant, is_squarefree,
                                 lagrange_interpolate)


def P(*coeffs):
    return Poly(QQ, [Fraction(c) for c in coeffs])


def test_degree_and_zero():
    assert Poly.zero(QQ).degree == NEG_INF
    assert P(5).degree == 0
    assert P(0, 0, 1).degree == 2
    assert Poly.x(QQ) == P(0, 1)


def test_ring_operations():
    a = P(1, 2, 1)          # (x+1)^2
    b = P(1, 1)
    assert a == b * b
    assert a - a == Poly.zero(QQ)
    assert (a * b)(Fraction(2)) == a(Fraction(2)) * b(Fraction(2))
    assert a.derivative() == P(2, 2)


def test_divmod_roundtrip(rng):
    K = GF(101)
    for _ in range(50):
        a = Poly(K, [K.random(rng) for _ in range(rng.randrange(1, 8))])
        b = Poly(K, [K.random(rng) for _ in range(rng.randrange(1, 6))])
        if b.is_zero():
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree


def test_exact_div_raises_on_remainder():
    with pytest.raises(ValueError):
        P(1, 0, 1).exact_div(P(1, 1))


def test_gcd_and_xgcd():
    a = P(1, 1) * P(2, 1) * P(3, 1)
    b = P(1, 1) * P(5, 1)
    g = poly_gcd(a, b)
    assert g == P(1, 1)
    g2, s, t = poly_xgcd(a, b)
    assert s * a + t * b == g2
    assert g2.monic() == g


def test_resultant_vanishes_iff_common_root():
    a = P(-1, 1) * P(-2, 1)
    b = P(-2, 1) * P(-3, 1)
    assert resultant(a, b) == 0
    c = P(-5, 1)
    assert resultant(a, c) != 0
    # resultant of (x-1)(x-2) and (x-3)(x-4): prod of differences
    d = P(-3, 1) * P(-4, 1)
    assert resultant(a, d) == Fraction((1 - 3) * (1 - 4) * (2 - 3) * (2 - 4))


def test_squarefree():
    assert is_squarefree(P(-1, 0, 1))
    assert not is_squarefree(P(1, 2, 1))
    K = GF(7)
    x = Poly.x(K)
    assert is_squarefree(x * x - Poly.one(K))
    assert not is_squarefree(x * x)


def test_interpolation():
    pts = [(Fraction(i), Fraction(i * i + 1)) for i in range(5)]
    p = lagrange_interpolate(QQ, pts)
    assert p == P(1, 0, 1)


def test_compose_and_shift():
    a = P(1, 0, 1)
    assert a.compose(P(0, 2)) == P(1, 0, 4)
    assert a.shift(2) == P(0, 0, 1, 0, 1)
