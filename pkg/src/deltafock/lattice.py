"""The deformed Heisenberg algebra on finite lattice windows.

Operators are dense matrices over a window of integer lattice indices.
Entries are exact: an integer matrix times a rational scalar times a
symbolic power of the spacing delta = 1/sqrt(s_max) (only the parity of
the power matters, since delta**2 = 1/s_max is rational).  Identity
checks are therefore literal zero tests, restricted to an interior block
because the truncation to a finite window breaks banded identities in a
margin near the boundary.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .exact import SqrtRational
from .hermite import DeformationParam


@dataclass(frozen=True)
class LatticeWindow:
    j_min: int
    j_max: int
    params: DeformationParam

    def __post_init__(self):
        if self.j_min >= self.j_max:
            raise ValueError("empty window")
        if self.size < 5:
            raise ValueError("window too small: need at least 5 sites")

    @property
    def size(self) -> int:
        return self.j_max - self.j_min + 1

    @property
    def js(self) -> range:
        return range(self.j_min, self.j_max + 1)

    @property
    def is_symmetric(self) -> bool:
        return self.j_min == -self.j_max


class LatticeOperator:
    """Exact operator on a window: scale * mat * delta**delta_power.

    ``mat`` is an integer matrix, ``scale`` a rational, ``delta_power``
    0 or 1 after normalization.  ``margin`` counts boundary rows on each
    side excluded from identity checks.
    """

    __slots__ = ("window", "mat", "scale", "delta_power", "margin")

    def __init__(self, window: LatticeWindow, mat: np.ndarray, scale: Fraction,
                 delta_power: int, margin: int):
        n = window.size
        if mat.shape != (n, n):
            raise ValueError("matrix does not match window size")
        s_max = window.params.s_max
        scale = Fraction(scale)
        while delta_power < 0:
            delta_power += 2
            scale *= s_max
        while delta_power >= 2:
            delta_power -= 2
            scale /= s_max
        if not mat.any():
            scale = Fraction(0)
            delta_power = 0
        self.window = window
        self.mat = mat.astype(np.int64)
        self.scale = scale
        self.delta_power = delta_power
        self.margin = margin

    def entry(self, row: int, col: int) -> SqrtRational:
        value = self.scale * int(self.mat[row, col])
        if self.delta_power:
            return SqrtRational.from_rational(value) * SqrtRational.sqrt_of(
                Fraction(1, self.window.params.s_max)
            )
        return SqrtRational.from_rational(value)

    def to_float(self) -> np.ndarray:
        delta = self.window.params.delta_float
        return self.mat.astype(float) * float(self.scale) * delta**self.delta_power

    def __matmul__(self, other: "LatticeOperator") -> "LatticeOperator":
        if other.window != self.window:
            raise ValueError("operators on different windows")
        return LatticeOperator(
            self.window,
            self.mat @ other.mat,
            self.scale * other.scale,
            self.delta_power + other.delta_power,
            self.margin + other.margin,
        )

    def __add__(self, other: "LatticeOperator") -> "LatticeOperator":
        if other.window != self.window:
            raise ValueError("operators on different windows")
        margin = max(self.margin, other.margin)
        if self.scale == 0:
            return LatticeOperator(self.window, other.mat, other.scale,
                                   other.delta_power, margin)
        if other.scale == 0:
            return LatticeOperator(self.window, self.mat, self.scale,
                                   self.delta_power, margin)
        if self.delta_power != other.delta_power:
            raise ValueError("adding operators of different delta parity")
        a, b = self.scale, other.scale
        g = Fraction(
            math.gcd(abs(a.numerator) * b.denominator, abs(b.numerator) * a.denominator),
            a.denominator * b.denominator,
        )
        p, q = a / g, b / g
        assert p.denominator == 1 and q.denominator == 1
        mat = int(p) * self.mat + int(q) * other.mat
        return LatticeOperator(self.window, mat, g, self.delta_power, margin)

    def __neg__(self) -> "LatticeOperator":
        return LatticeOperator(self.window, -self.mat, self.scale,
                               self.delta_power, self.margin)

    def __sub__(self, other: "LatticeOperator") -> "LatticeOperator":
        return self + (-other)

    def scaled(self, factor: Fraction, delta_power: int = 0) -> "LatticeOperator":
        """Multiply by an exact scalar factor * delta**delta_power."""
        factor = Fraction(factor)
        return LatticeOperator(self.window, self.mat, self.scale * factor,
                               self.delta_power + delta_power, self.margin)

    def transpose(self) -> "LatticeOperator":
        return LatticeOperator(self.window, self.mat.T.copy(), self.scale,
                               self.delta_power, self.margin)

    def commutator(self, other: "LatticeOperator") -> "LatticeOperator":
        return (self @ other) - (other @ self)

    def interior_slice(self, margin: int | None = None) -> np.ndarray:
        m = self.margin if margin is None else margin
        n = self.window.size
        if 2 * m >= n:
            raise ValueError(f"window of size {n} has no interior at margin {m}")
        return self.mat[m : n - m, m : n - m]

    def interior_is_zero(self, margin: int | None = None) -> bool:
        if self.scale == 0:
            return True
        return not self.interior_slice(margin).any()

    def interior_block(self, margin: int | None = None) -> tuple:
        """Interior entries as exact scalars."""
        m = self.margin if margin is None else margin
        block = self.interior_slice(m)
        offset = m
        return tuple(
            tuple(self.entry(offset + r, offset + c) for c in range(block.shape[1]))
            for r in range(block.shape[0])
        )


@dataclass(frozen=True)
class LatticeFunction:
    window: LatticeWindow
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.window.size:
            raise ValueError("value list does not match window size")


def _empty(window: LatticeWindow) -> np.ndarray:
    return np.zeros((window.size, window.size), dtype=np.int64)


def identity_operator(window: LatticeWindow) -> LatticeOperator:
    return LatticeOperator(window, np.eye(window.size, dtype=np.int64),
                           Fraction(1), 0, 0)


def zero_operator(window: LatticeWindow) -> LatticeOperator:
    return LatticeOperator(window, _empty(window), Fraction(0), 0, 0)


def build_position(window: LatticeWindow) -> LatticeOperator:
    """Multiplication by the lattice coordinate j*delta (diagonal)."""
    mat = np.diag(np.array(list(window.js), dtype=np.int64))
    return LatticeOperator(window, mat, Fraction(1), 1, 0)


def build_central_difference(window: LatticeWindow) -> LatticeOperator:
    """f -> [f((j+1)d) - f((j-1)d)] / (2d) acting on sample vectors."""
    mat = _empty(window)
    n = window.size
    for r in range(n):
        if r + 1 < n:
            mat[r, r + 1] = 1
        if r - 1 >= 0:
            mat[r, r - 1] = -1
    return LatticeOperator(window, mat, Fraction(1, 2), -1, 1)


def build_average(window: LatticeWindow) -> LatticeOperator:
    """f -> [f((j+1)d) + f((j-1)d)] / 2 acting on sample vectors."""
    mat = _empty(window)
    n = window.size
    for r in range(n):
        if r + 1 < n:
            mat[r, r + 1] = 1
        if r - 1 >= 0:
            mat[r, r - 1] = 1
    return LatticeOperator(window, mat, Fraction(1, 2), 0, 1)


def build_shift(window: LatticeWindow) -> tuple[LatticeOperator, LatticeOperator]:
    """The unit shift pair (U, U^dagger): U maps the basis ket at j to j+1."""
    up = _empty(window)
    n = window.size
    for c in range(n - 1):
        up[c + 1, c] = 1
    u = LatticeOperator(window, up, Fraction(1), 0, 1)
    return u, u.transpose()


def build_parity(window: LatticeWindow) -> LatticeOperator:
    """Reflection j -> -j; requires a window symmetric about zero."""
    if not window.is_symmetric:
        raise ValueError("parity needs a window symmetric about j = 0")
    mat = np.fliplr(np.eye(window.size, dtype=np.int64)).copy()
    return LatticeOperator(window, mat, Fraction(1), 0, 0)


def interior_commutator_residual(a: LatticeOperator, b: LatticeOperator,
                                 expected: LatticeOperator) -> LatticeOperator:
    """(AB - BA - expected) with margin widened to the combined bandwidth."""
    res = a.commutator(b) - expected
    margin = max(a.margin + b.margin, expected.margin)
    if 2 * margin >= a.window.size:
        raise ValueError("window too small for the combined margins")
    return LatticeOperator(res.window, res.mat, res.scale, res.delta_power, margin)


def casimir_residual_lattice(window: LatticeWindow) -> LatticeOperator:
    """Residual of avg^2 - delta^2 * diff^2 - 1 on the interior block."""
    if window.size < 7:
        raise ValueError("window too small: Casimir check needs size >= 7")
    avg = build_average(window)
    diff = build_central_difference(window)
    res = (avg @ avg) - (diff @ diff).scaled(Fraction(1), 2) - identity_operator(window)
    return LatticeOperator(res.window, res.mat, res.scale, res.delta_power, 2)


def parity_conjugation_check(window: LatticeWindow) -> tuple[LatticeOperator, LatticeOperator]:
    """Residuals of (P x P + x) and (P U P - U^dagger); both must vanish."""
    p = build_parity(window)
    x = build_position(window)
    u, udag = build_shift(window)
    res_x = (p @ x @ p) + x
    res_u = (p @ u @ p) - udag
    return res_x, res_u


def lattice_to_phi(f: LatticeFunction, phi: float) -> complex:
    """Transform a finitely-supported lattice function to the periodic
    representation: sum_j delta * exp(-i j delta phi) * f(j delta).

    A phi outside the fundamental interval is folded back by periodicity
    (the transform has period 2*pi/delta) with a warning.
    """
    delta = f.window.params.delta_float
    half_period = math.pi / delta
    if abs(phi) > half_period:
        warnings.warn("phi outside the fundamental interval; folding by periodicity")
        phi = (phi + half_period) % (2 * half_period) - half_period
    acc = 0j
    for j, value in zip(f.window.js, f.values):
        acc += delta * cmath.exp(-1j * j * delta * phi) * value
    return acc


def lattice_from_phi(transform: Callable[[float], complex], window: LatticeWindow,
                     nodes: int) -> list[complex]:
    """Invert the transform by trapezoidal quadrature over one period.

    The transform of a finitely-supported lattice function is a
    trigonometric polynomial, for which the periodic trapezoid rule with
    enough nodes (> twice the index span) is exact up to rounding.
    """
    delta = window.params.delta_float
    half_period = math.pi / delta
    phis = -half_period + (2 * half_period / nodes) * np.arange(nodes)
    samples = np.array([transform(p) for p in phis])
    out = []
    for j in window.js:
        kernel = np.exp(1j * j * delta * phis)
        out.append(complex((kernel * samples).sum() * (2 * half_period / nodes) / (2 * math.pi)))
    return out


def overlap_kernel(j: int, j_prime: int, params: DeformationParam) -> SqrtRational:
    """Exact overlap of two lattice kets: sqrt(s_max) on the diagonal,
    zero otherwise (the sinc kernel vanishes at nonzero integer separation)."""
    if j == j_prime:
        return SqrtRational.sqrt_of(params.s_max)
    return SqrtRational.zero()


def continuum_limit_study(x_pairs: Sequence[tuple[float, float]],
                          s_max_list: Sequence[int]) -> list[dict]:
    """Kernel values at fixed physical separations across a spacing sweep.

    The diagonal grows like sqrt(s_max) while off-diagonal values stay
    bounded, exhibiting the concentration of the overlap kernel onto a
    Dirac delta in the continuum limit.
    """
    rows = []
    for s_max in s_max_list:
        delta = DeformationParam(s_max).delta_float
        for x, x_prime in x_pairs:
            sep = x - x_prime
            if sep == 0.0:
                value = 1.0 / delta
            else:
                value = math.sin(math.pi * sep / delta) / (math.pi * sep)
            rows.append({"s_max": s_max, "x": x, "x_prime": x_prime, "kernel": value})
    return rows
