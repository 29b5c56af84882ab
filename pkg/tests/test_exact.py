"""Exact scalar/polynomial layer: square roots, polynomials, moments."""

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from deltafock.exact import (
    IncommensurableError,
    Poly,
    ScaledRational,
    SqrtRational,
    split_square,
    wallis_moment,
)


def test_split_square_examples():
    assert split_square(1) == (1, 1)
    assert split_square(4) == (2, 1)
    assert split_square(12) == (2, 3)
    assert split_square(360) == (6, 10)
    assert split_square(7) == (1, 7)


@given(st.integers(min_value=1, max_value=10**6))
def test_split_square_reconstructs(n):
    root, rest = split_square(n)
    assert root * root * rest == n


def test_sqrt_of_rational():
    v = SqrtRational.sqrt_of(Fraction(1, 2))
    assert v.square() == Fraction(1, 2)
    assert v.to_float() == pytest.approx(math.sqrt(0.5))
    w = SqrtRational.sqrt_of(Fraction(9, 4))
    assert w.is_rational and w.as_fraction() == Fraction(3, 2)


def test_sqrt_arithmetic():
    a = SqrtRational.sqrt_of(2)
    b = SqrtRational.sqrt_of(8)
    assert (a * b).as_fraction() == 4
    assert (b / a).as_fraction() == 2
    assert (a + a).square() == 8
    with pytest.raises(IncommensurableError):
        a + SqrtRational.sqrt_of(3)
    assert (a - a) == SqrtRational.zero()
    assert not (a - a)


@given(
    st.fractions(min_value=Fraction(1, 100), max_value=100),
    st.fractions(min_value=Fraction(1, 100), max_value=100),
)
def test_sqrt_product_matches_float(p, q):
    lhs = (SqrtRational.sqrt_of(p) * SqrtRational.sqrt_of(q)).to_float()
    assert lhs == pytest.approx(math.sqrt(float(p) * float(q)), rel=1e-12)


def test_poly_basics():
    p = Poly([1, 0, 3])
    assert p.degree == 2
    assert p(2) == Fraction(13)
    assert p.derivative() == Poly([0, 6])
    assert Poly([0, 0, 0]).degree == -1
    assert not Poly.zero()
    assert Poly.monomial(3, 5) == Poly([0, 0, 0, 5])


def _random_poly(rng, max_deg=6):
    return Poly([Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                 for _ in range(rng.randint(0, max_deg))])


def test_poly_product_rule():
    rng = random.Random(7)
    for _ in range(100):
        p, q = _random_poly(rng), _random_poly(rng)
        lhs = (p * q).derivative()
        rhs = p.derivative() * q + p * q.derivative()
        assert lhs == rhs


def test_poly_ring_axioms():
    rng = random.Random(11)
    for _ in range(50):
        p, q, r = (_random_poly(rng) for _ in range(3))
        assert p * (q + r) == p * q + p * r
        assert p * q == q * p
        x = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
        assert (p * q)(x) == p(x) * q(x)


def test_wallis_examples():
    assert wallis_moment(0, 0) == 1
    assert wallis_moment(1, 0) == Fraction(1, 2)
    assert wallis_moment(0, 1) == Fraction(1, 2)
    assert wallis_moment(1, 1) == Fraction(1, 8)
    assert wallis_moment(2, 0) == Fraction(3, 8)
    assert wallis_moment(0, 3) == Fraction(5, 16)


def test_wallis_symmetry():
    for a in range(13):
        for b in range(13):
            assert wallis_moment(a, b) == wallis_moment(b, a)


def test_wallis_against_quadrature():
    # the integrand is a trig polynomial, so the periodic trapezoid rule
    # with more nodes than the bandwidth is exact up to rounding
    for a in range(0, 7):
        for b in range(0, 7):
            n = 4 * (a + b) + 8
            total = 0.0
            for k in range(n):
                theta = 2 * math.pi * k / n
                total += math.sin(theta) ** (2 * a) * math.cos(theta) ** (2 * b)
            assert total / n == pytest.approx(float(wallis_moment(a, b)), abs=1e-13)


def test_scaled_rational():
    half = ScaledRational(SqrtRational.from_rational(Fraction(1, 2)), 4)
    assert half.to_float() == pytest.approx(0.5 * math.sqrt(4 / math.pi))
    assert (half + half).coefficient.as_fraction() == 1
    assert not ScaledRational.zero(4)
    other_unit = ScaledRational(SqrtRational.one(), 9)
    with pytest.raises(ValueError):
        half + other_unit
