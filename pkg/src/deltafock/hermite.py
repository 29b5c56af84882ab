"""Deformed Hermite polynomials built by two independent routes.

The polynomials are generated either by iterating the first-order
recurrence H_{s+1} = (2 - d*s) x H_s - (1 + d*x^2) H_s' (with d the
squared lattice spacing) or from the closed-form coefficient sum; both
routes are exact and must agree coefficient by coefficient.  Setting
d = 0 recovers the classical physicists' Hermite polynomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import Poly


@dataclass(frozen=True)
class DeformationParam:
    """The single deformation knob: a positive integer s_max with
    squared spacing delta_sq = 1/s_max (the inverse of the dimension
    of the truncated state ladder, minus one)."""

    s_max: int

    def __post_init__(self):
        if not isinstance(self.s_max, int) or self.s_max < 1:
            raise ValueError(f"s_max must be a positive integer, got {self.s_max!r}")

    @property
    def delta_sq(self) -> Fraction:
        return Fraction(1, self.s_max)

    @property
    def delta_float(self) -> float:
        return 1.0 / math.sqrt(self.s_max)


def _check_range(params: DeformationParam, s: int, top: int) -> None:
    if s < 0 or s > top:
        raise ValueError(f"index s={s} outside range 0..{top} for s_max={params.s_max}")


def hermite_delta_rec(params: DeformationParam, s: int) -> Poly:
    """Deformed Hermite polynomial by iterating the recurrence.

    The index s_max + 1 is admitted on purpose: the truncation identity
    lives there (the polynomial collapses to degree s_max - 1).
    """
    _check_range(params, s, params.s_max + 1)
    d = params.delta_sq
    h = Poly.one()
    weight = Poly([1, 0, d])  # 1 + d*x^2
    for k in range(s):
        h = Poly([0, 2 - d * k]) * h - weight * h.derivative()
    return h


def hermite_delta_closed(params: DeformationParam, s: int) -> Poly:
    """Deformed Hermite polynomial from the closed coefficient formula."""
    _check_range(params, s, params.s_max)
    return _closed_form(params.delta_sq, s)


def _closed_form(d: Fraction, s: int) -> Poly:
    coeffs = [Fraction(0)] * (s + 1)
    for j in range(s // 2 + 1):
        c = Fraction((-1) ** j * math.factorial(s), math.factorial(j) * math.factorial(s - 2 * j))
        c *= 2 ** (s - 2 * j)
        for k in range(s - j):
            c *= 1 - d * k
        coeffs[s - 2 * j] = c
    return Poly(coeffs)


def hermite_classical(s: int) -> Poly:
    """Classical physicists' Hermite polynomial (the zero-spacing limit)."""
    if s < 0:
        raise ValueError("index must be non-negative")
    return _closed_form(Fraction(0), s)


def max_rel_coeff_error(deformed: Poly, classical: Poly) -> Fraction:
    """Max over nonzero classical coefficients of |c_d - c_0| / |c_0|.

    Parity zeros are exact on both sides and are skipped, so the measure
    is well defined.
    """
    worst = Fraction(0)
    for power, c0 in enumerate(classical.coeffs):
        if c0 == 0:
            continue
        err = abs(deformed.coeff(power) - c0) / abs(c0)
        worst = max(worst, err)
    return worst


def hermite_limit_table(s: int, s_max_list: list[int]) -> list[tuple[int, float]]:
    """Per-s_max contraction error of the deformed polynomial of index s
    against the classical one, as (s_max, max relative coefficient error)."""
    if s_max_list and s > min(s_max_list):
        raise ValueError(f"s={s} exceeds the smallest s_max in {s_max_list}")
    classical = hermite_classical(s)
    table = []
    for m in s_max_list:
        deformed = hermite_delta_closed(DeformationParam(m), s)
        table.append((m, float(max_rel_coeff_error(deformed, classical))))
    return table
