"""Exact scalar and polynomial arithmetic.

Everything in this module is exact: rationals are ``fractions.Fraction``,
square roots of rationals are kept symbolically, and the trigonometric
moment integrals used for inner products are evaluated in closed form.
Floating point never enters except through explicit ``to_float`` calls.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

RationalLike = Union[int, Fraction]


def _sieve(limit: int) -> tuple[int, ...]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return tuple(i for i, f in enumerate(flags) if f)


_PRIMES = _sieve(1000)


def split_square(n: int) -> tuple[int, int]:
    """Write n > 0 as root**2 * rest with rest free of small square factors."""
    root, rest = 1, 1
    for p in _PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            root *= p ** (e // 2)
            if e % 2:
                rest *= p
    r = math.isqrt(n)
    if r * r == n:
        root *= r
    else:
        rest *= n
    return root, rest


class IncommensurableError(ArithmeticError):
    """Sum of square roots with different radicands has no exact result here."""


@dataclass(frozen=True)
class SqrtRational:
    """A signed value sign * rational * sqrt(radicand), kept exact.

    ``radicand`` is a positive integer with no small square factors; a
    rational value has radicand 1.  The type is closed under products and
    quotients; sums are defined only between commensurable values (same
    radicand), which is all the surrounding algebra ever produces.
    """

    sign: int
    rational: Fraction
    radicand: int

    @staticmethod
    def zero() -> "SqrtRational":
        return SqrtRational(0, Fraction(0), 1)

    @staticmethod
    def one() -> "SqrtRational":
        return SqrtRational(1, Fraction(1), 1)

    @staticmethod
    def from_rational(value: RationalLike) -> "SqrtRational":
        value = Fraction(value)
        if value == 0:
            return SqrtRational.zero()
        return SqrtRational(1 if value > 0 else -1, abs(value), 1)

    @staticmethod
    def sqrt_of(value: RationalLike) -> "SqrtRational":
        """Exact square root of a non-negative rational."""
        value = Fraction(value)
        if value < 0:
            raise ValueError(f"negative radicand {value}")
        if value == 0:
            return SqrtRational.zero()
        # sqrt(p/q) = sqrt(p*q)/q
        root, rest = split_square(value.numerator * value.denominator)
        return SqrtRational(1, Fraction(root, value.denominator), rest)

    def __bool__(self) -> bool:
        return self.sign != 0

    @property
    def is_rational(self) -> bool:
        return self.radicand == 1 or self.sign == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.sign * self.rational

    def square(self) -> Fraction:
        return self.rational * self.rational * self.radicand

    def __neg__(self) -> "SqrtRational":
        return SqrtRational(-self.sign, self.rational, self.radicand)

    def _coerce(self, other) -> "SqrtRational":
        if isinstance(other, SqrtRational):
            return other
        if isinstance(other, (int, Fraction)):
            return SqrtRational.from_rational(other)
        return NotImplemented

    def __mul__(self, other) -> "SqrtRational":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        sign = self.sign * other.sign
        if sign == 0:
            return SqrtRational.zero()
        g = math.gcd(self.radicand, other.radicand)
        rest = (self.radicand // g) * (other.radicand // g)
        return SqrtRational(sign, self.rational * other.rational * g, rest)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "SqrtRational":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.sign == 0:
            raise ZeroDivisionError("division by exact zero")
        inverse = SqrtRational(
            other.sign, 1 / (other.rational * other.radicand), other.radicand
        )
        return self * inverse

    def __add__(self, other) -> "SqrtRational":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.sign == 0:
            return other
        if other.sign == 0:
            return self
        if self.radicand != other.radicand:
            raise IncommensurableError(
                f"cannot add sqrt({self.radicand}) and sqrt({other.radicand}) terms"
            )
        total = self.sign * self.rational + other.sign * other.rational
        if total == 0:
            return SqrtRational.zero()
        return SqrtRational(1 if total > 0 else -1, abs(total), self.radicand)

    __radd__ = __add__

    def __sub__(self, other) -> "SqrtRational":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def to_float(self) -> float:
        return self.sign * float(self.rational) * math.sqrt(self.radicand)

    def __repr__(self) -> str:
        if self.sign == 0:
            return "0"
        s = "-" if self.sign < 0 else ""
        if self.radicand == 1:
            return f"{s}{self.rational}"
        return f"{s}{self.rational}*sqrt({self.radicand})"


class Poly:
    """Dense univariate polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def one() -> "Poly":
        return Poly([1])

    @staticmethod
    def monomial(power: int, coeff: RationalLike = 1) -> "Poly":
        return Poly([0] * power + [coeff])

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def coeff(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            [self.coeff(i) + other.coeff(i) for i in range(n)]
        )

    def __sub__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: RationalLike) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        terms = [
            f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c != 0
        ]
        return "Poly(" + " + ".join(terms) + ")"


def poly_derivative(p: Poly) -> Poly:
    return p.derivative()


def poly_eval(p: Poly, x: RationalLike) -> Fraction:
    return p(x)


def wallis_moment(a: int, b: int) -> Fraction:
    """Full-period average of sin^(2a) * cos^(2b).

    Equals (2a)!(2b)! / (4**(a+b) * a! * b! * (a+b)!).  Callers are in
    charge of odd-power moments, which vanish by symmetry.
    """
    if a < 0 or b < 0:
        raise ValueError("moment orders must be non-negative")
    num = math.factorial(2 * a) * math.factorial(2 * b)
    den = 4 ** (a + b) * math.factorial(a) * math.factorial(b) * math.factorial(a + b)
    return Fraction(num, den)


@dataclass(frozen=True)
class ScaledRational:
    """An exact multiple of the unit sqrt(s_max / pi).

    The coefficient is allowed to be a signed square root of a rational:
    the Gram matrix of the deformed number states has off-diagonal entries
    whose coefficient relative to sqrt(s_max/pi) is irrational (already at
    the (0, 2) entry for s_max = 2), so a plain rational does not close.
    """

    coefficient: SqrtRational
    s_max: int

    @staticmethod
    def zero(s_max: int) -> "ScaledRational":
        return ScaledRational(SqrtRational.zero(), s_max)

    def __bool__(self) -> bool:
        return bool(self.coefficient)

    def _check(self, other: "ScaledRational") -> None:
        if self.s_max != other.s_max:
            raise ValueError("mixing values with different scale units")

    def __add__(self, other: "ScaledRational") -> "ScaledRational":
        self._check(other)
        return ScaledRational(self.coefficient + other.coefficient, self.s_max)

    def __sub__(self, other: "ScaledRational") -> "ScaledRational":
        self._check(other)
        return ScaledRational(self.coefficient - other.coefficient, self.s_max)

    def __neg__(self) -> "ScaledRational":
        return ScaledRational(-self.coefficient, self.s_max)

    def __mul__(self, other) -> "ScaledRational":
        if isinstance(other, (int, Fraction, SqrtRational)):
            return ScaledRational(self.coefficient * other, self.s_max)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ScaledRational":
        if isinstance(other, (int, Fraction, SqrtRational)):
            return ScaledRational(self.coefficient / other, self.s_max)
        return NotImplemented

    def to_float(self) -> float:
        return self.coefficient.to_float() * math.sqrt(self.s_max / math.pi)

    def __repr__(self) -> str:
        return f"({self.coefficient})*sqrt({self.s_max}/pi)"
