"""Acceptance suite: eight end-to-end criteria, one test per criterion.

Each test prints a single pass/fail line so the suite's transcript reads
as a checklist.  Everything labelled "exact" is asserted with zero
tolerance; float criteria state their tolerance inline.
"""

import math
import random
from fractions import Fraction

import pytest

from deltafock import fock, lattice, suites
from deltafock.exact import Poly
from deltafock.hermite import (
    DeformationParam,
    hermite_classical,
    hermite_delta_closed,
    hermite_delta_rec,
    max_rel_coeff_error,
)


def report(number: int, label: str, ok: bool) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {label}")
    assert ok, f"criterion {number}: {label}"


def test_criterion_1_algebra_suite_exact():
    ok = True
    for s_max in (1, 2, 4, 9):
        params = DeformationParam(s_max)
        for size in range(7, 42):
            window = lattice.LatticeWindow(0, size - 1, params)
            x = lattice.build_position(window)
            diff = lattice.build_central_difference(window)
            avg = lattice.build_average(window)
            u, udag = lattice.build_shift(window)
            zero = lattice.zero_operator(window)
            ok &= lattice.interior_commutator_residual(diff, x, avg).interior_is_zero()
            ok &= lattice.interior_commutator_residual(
                avg, x, diff.scaled(Fraction(1), 2)
            ).interior_is_zero()
            ok &= lattice.interior_commutator_residual(avg, diff, zero).interior_is_zero()
            ok &= lattice.casimir_residual_lattice(window).interior_is_zero()
            ok &= lattice.interior_commutator_residual(
                x, u, u.scaled(Fraction(1), 1)
            ).interior_is_zero()
            ok &= lattice.interior_commutator_residual(
                x, udag, udag.scaled(Fraction(-1), 1)
            ).interior_is_zero()
        for size in (7, 9, 13, 21, 41):
            window = lattice.LatticeWindow(-(size // 2), size // 2, params)
            res_x, res_u = lattice.parity_conjugation_check(window)
            ok &= res_x.interior_is_zero(0) and res_u.interior_is_zero(1)
    report(1, "lattice algebra residuals exactly zero on all windows", ok)


def test_criterion_2_hermite_route_equivalence():
    ok = True
    for s_max in range(1, 21):
        params = DeformationParam(s_max)
        for s in range(s_max + 1):
            ok &= hermite_delta_rec(params, s) == hermite_delta_closed(params, s)
    # the four explicit low-order polynomials as rational functions of the
    # squared spacing, instantiated at 1/2, 1/3, 1/5
    for s_max in (2, 3, 5):
        d = Fraction(1, s_max)
        params = DeformationParam(s_max)
        explicit = [
            Poly.one(),
            Poly([0, 2]),
            Poly([-2, 0, 4 * (1 - d)]),
            Poly([0, -12 * (1 - d), 0, 8 * (1 - d) * (1 - 2 * d)]),
        ]
        for s, expected in enumerate(explicit):
            if s > s_max:
                continue
            ok &= hermite_delta_closed(params, s) == expected
    report(2, "polynomial routes agree coefficient-exactly (s_max <= 20)", ok)


def test_criterion_3_gram_triple_agreement():
    ok = True
    for s_max in range(1, 13):
        params = DeformationParam(s_max)
        exact = fock.gram_exact(params)
        rec = fock.gram_recurrence(params, fock.vacuum_norm_closed(params))
        for i in range(s_max + 1):
            for j in range(s_max + 1):
                ok &= exact.entry(i, j).coefficient == rec.entry(i, j).coefficient
                if (i + j) % 2:
                    ok &= not exact.entry(i, j)
        ok &= exact.entry(0, 0).coefficient == fock.vacuum_norm_closed(params).coefficient
        for s in range(1, s_max):
            ok &= not fock.gram_diagonal_residual(params, exact, s)
    report(3, "Gram matrix identical across integration, recurrence, closed form", ok)


def test_criterion_4_fock_operator_suite():
    ok = True
    reported_seen = False
    for s_max in range(1, 9):
        params = DeformationParam(s_max)
        for check in fock.commutator_suite(params, s_max):
            if check.status == "reported":
                reported_seen = True
            else:
                ok &= check.status == "exact-pass"
        states = fock.build_states(params)
        for s in range(s_max + 1):
            for a in range(s_max + 1):
                for b in range(s_max):
                    lhs = fock.inner_product(
                        states[a], fock.apply_creation(params, s, states[b])
                    )
                    rhs = fock.inner_product(
                        fock.apply_annihilation(params, s, states[a]), states[b]
                    )
                    ok &= lhs.coefficient == rhs.coefficient
        for s in range(1, s_max):
            ok &= not fock.casimir_fock_residual(params, s)
    ok &= reported_seen
    report(4, "ladder operator relations exact (top-index case reported)", ok)


def test_criterion_5_truncation():
    ok = True
    for s_max in range(1, 9):
        result = fock.truncation_check(DeformationParam(s_max))
        ok &= result.raising_equals_lowering_at_top
        ok &= not result.state_residual
        ok &= result.hermite_top_degree == s_max - 1
    report(5, "ladder truncates exactly at the top index", ok)


def test_criterion_6_factorization_system():
    ok = True
    points = [0.0, 0.2, -0.35, 0.5, -0.65, 0.8, -0.95, 1.05, -1.15, 1.25]
    for s_max in range(1, 7):
        params = DeformationParam(s_max)
        for s in range(1, s_max + 1):
            ok &= fock.factorization_residual(params, s, points) < 1e-12
    for s_max in range(1, 21):
        params = DeformationParam(s_max)
        d = params.delta_sq
        for s in range(1, s_max + 1):
            product = (fock.ladder_coefficients(params, s).alpha
                       * fock.ladder_coefficients(params, s - 1).beta)
            ok &= product.is_rational
            ok &= product.as_fraction() == s - d / 2 * s * (s - 1)
    report(6, "first-order factorization exact in product, <1e-12 pointwise", ok)


def test_criterion_7_contraction_trends():
    ok = True
    devs = [suites.gaussian_weight_deviation(m) for m in (4, 16, 64, 256)]
    for d1, d2 in zip(devs, devs[1:]):
        ok &= d1 > d2 and 3 <= d1 / d2 <= 5
    errs = [
        max_rel_coeff_error(hermite_delta_closed(DeformationParam(m), 4),
                            hermite_classical(4))
        for m in (100, 400)
    ]
    ok &= 3 <= errs[0] / errs[1] <= 5
    for s_max in range(8, 129):
        ok &= abs(suites.vacuum_norm_times_pi(s_max) - 1.0) < 1.0 / s_max
    report(7, "all contraction trends match the quadratic rate", ok)


def test_criterion_8_transform_round_trip():
    ok = True
    rng = random.Random(20260826)
    params = DeformationParam(6)
    window = lattice.LatticeWindow(-8, 8, params)
    delta = params.delta_float
    half_period = math.pi / delta
    for _ in range(50):
        values = tuple(
            complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in window.js
        )
        f = lattice.LatticeFunction(window, values)
        back = lattice.lattice_from_phi(
            lambda phi: lattice.lattice_to_phi(f, phi), window, 128
        )
        ok &= max(abs(a - b) for a, b in zip(values, back)) < 1e-12
        lattice_norm = sum(delta * abs(v) ** 2 for v in values)
        n = 256
        phi_norm = sum(
            abs(lattice.lattice_to_phi(f, -half_period + 2 * half_period * k / n)) ** 2
            for k in range(n)
        ) * (2 * half_period / n) / (2 * math.pi)
        ok &= abs(phi_norm - lattice_norm) < 1e-12
    report(8, "representation transform round-trips and preserves norms", ok)
