"""Tests for the complex log-gamma / 2F1 engine.

Expected values come from closed forms (Gamma(1/2) = sqrt(pi), the
logarithm and binomial reductions of 2F1, the Gauss summation theorem) or
from brute-force series summation done independently inside the test.
"""

import cmath
import math
import random
import warnings

import mpmath
import pytest

from kmodes.errors import (
    ConvergenceError,
    DegenerateParameterError,
    DivergenceError,
    PoleError,
    ValidationError,
)
from kmodes.hypergeom import (
    EvalOptions,
    HypParams,
    cpow_principal,
    hyp2f1,
    hyp2f1_deriv,
    hyp2f1_jet,
    lngamma,
)


def brute_series(a, b, c, z, terms=400):
    """Independent oracle: the defining series, summed directly."""
    term = 1.0 + 0j
    total = term
    for n in range(terms):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        total += term
    return total


class TestLnGamma:
    def test_at_one(self):
        assert lngamma(1) == 0

    def test_at_half(self):
        assert abs(lngamma(0.5) - math.log(math.sqrt(math.pi))) < 1e-14

    def test_at_five(self):
        assert abs(lngamma(5) - math.log(24)) < 1e-14

    def test_pole(self):
        for z in (0, -1, -7):
            with pytest.raises(PoleError):
                lngamma(z)

    def test_recurrence_random(self):
        rng = random.Random(7)
        for _ in range(200):
            z = complex(rng.uniform(-8, 8), rng.uniform(-8, 8))
            if min(abs(z - n) for n in range(-9, 1)) < 0.05:
                continue
            lhs = cmath.exp(lngamma(z + 1) - lngamma(z))
            assert abs(lhs - z) < 1e-12 * max(1.0, abs(z))

    def test_against_mpmath(self):
        rng = random.Random(11)
        for _ in range(100):
            z = complex(rng.uniform(-5, 6), rng.uniform(-6, 6))
            if min(abs(z - n) for n in range(-6, 1)) < 0.05:
                continue
            ref = complex(mpmath.gamma(z))
            assert abs(cmath.exp(lngamma(z)) - ref) < 1e-12 * abs(ref)


class TestCpow:
    def test_principal_sqrt_of_minus_one(self):
        assert abs(cpow_principal(-1, 0.5) - 1j) < 1e-15

    def test_zero_exponent(self):
        for z in (2.0, -3.5, 1j, -1 - 1j):
            assert cpow_principal(z, 0) == 1

    def test_real_positive_base(self):
        p = 0.5 * (1 + math.sqrt(0.5))
        assert abs(cpow_principal(4, p - 0.5) - 4 ** (p - 0.5)) < 1e-14

    def test_zero_base(self):
        assert cpow_principal(0, 2.0) == 0
        with pytest.raises(PoleError):
            cpow_principal(0, -1.0)
        with pytest.raises(PoleError):
            cpow_principal(0, 0)


class TestHyp2F1Values:
    def test_z_zero(self):
        assert hyp2f1(HypParams(0.3 + 1j, -2.2, 1.7), 0) == 1

    def test_log_case(self):
        # 2F1(1,1;2;z) = -log(1-z)/z; brute series agrees
        val = hyp2f1(HypParams(1, 1, 2), 0.5)
        assert abs(val - 2 * math.log(2)) < 1e-12
        assert abs(val - brute_series(1, 1, 2, 0.5)) < 1e-12

    def test_gauss_point(self):
        val = hyp2f1(HypParams(0.5, 0.5, 1.5), 1)
        assert abs(val - math.pi / 2) < 1e-10
        # cross-check: approach the point from inside the disk
        near = hyp2f1(HypParams(0.5, 0.5, 1.5), 1 - 1e-6)
        assert abs(near - math.pi / 2) < 5e-3

    def test_binomial_shortcut(self):
        assert abs(hyp2f1(HypParams(0.3, 2, 0.3), 0.5) - 4) < 1e-14
        z = 0.2 - 0.7j
        b = 1.3 + 0.4j
        assert abs(
            hyp2f1(HypParams(0.6, b, b), z) - cpow_principal(1 - z, -0.6)
        ) < 1e-13

    def test_polynomial_case(self):
        # a = -3 terminates after 4 terms even with c = -5
        val = hyp2f1(HypParams(-3, 1.2, -5), 0.7)
        assert abs(val - brute_series(-3, 1.2, -5 + 1e-30, 0.7, terms=3)) < 1e-13

    def test_degenerate_c_rejected(self):
        with pytest.raises(DegenerateParameterError):
            HypParams(0.4, 1.1, -2)
        with pytest.raises(DegenerateParameterError):
            # termination happens after the pole of the c Pochhammer
            HypParams(-5, 1.1, -2)

    def test_divergence_at_one(self):
        with pytest.raises(DivergenceError):
            hyp2f1(HypParams(1, 1, 1.5), 1)

    def test_max_terms_exhaustion(self):
        with pytest.raises(ConvergenceError):
            hyp2f1(HypParams(0.5, 0.7, 1.9), 0.79, EvalOptions(max_terms=5))

    def test_options_validation(self):
        with pytest.raises(ValidationError):
            EvalOptions(target_rel_tol=2.0)
        with pytest.raises(ValidationError):
            EvalOptions(max_terms=0)

    def test_determinism(self):
        p = HypParams(0.3 + 0.4j, 1.7 - 0.2j, 1.1 + 0.05j)
        z = 0.5 - 1.9j
        first = hyp2f1(p, z)
        again = hyp2f1(p, z)
        assert first == again


class TestHyp2F1Continuation:
    def test_against_mpmath_line(self):
        # the vertical line Re(z)=1/2 walked out to |z| ~ 15, with the
        # integer-parameter-difference family that forces path continuation
        p = 0.5 * (1 + cmath.sqrt(1 - 4))
        q = 0.5 * (1 + cmath.sqrt(5))
        for i in range(40):
            t = 0.04 + i * 0.038
            z = (1 - 1j * math.tan(t)) / 2
            for (a, b, c) in [(p + q, p + q - 1, 2 * p), (q - p, q - p + 1, 2 - 2 * p)]:
                ref = complex(mpmath.hyp2f1(a, b, c, z))
                assert abs(hyp2f1(HypParams(a, b, c), z) - ref) < 1e-11 * abs(ref)

    def test_against_mpmath_cut(self):
        # real z > 1: continuation from below (principal-branch prefactors)
        r = 0.5 * cmath.sqrt(1 + 1j)
        s = 0.5 * cmath.sqrt(1 - 1j)
        for z in (1.0025, 1.1, 1.3, 1.58, 2.5):
            a, b, c = r + s, r + s + 1, 1 + 2 * r
            ref = complex(mpmath.hyp2f1(a, b, c, z))
            assert abs(hyp2f1(HypParams(a, b, c), z) - ref) < 1e-11 * abs(ref)

    def test_random_plane(self):
        rng = random.Random(23)
        for _ in range(80):
            a = complex(rng.uniform(-2, 2.5), rng.uniform(-1.5, 1.5))
            b = complex(rng.uniform(-2, 2.5), rng.uniform(-1.5, 1.5))
            c = complex(rng.uniform(0.4, 3.0), rng.uniform(-1.0, 1.0))
            z = rng.choice([0.4, 0.9, 1.1, 2.0, 6.0]) * cmath.exp(
                1j * rng.uniform(-math.pi, math.pi)
            )
            if abs(z - 1) < 0.08:
                continue
            ref = complex(mpmath.hyp2f1(a, b, c, z))
            got = hyp2f1(HypParams(a, b, c), z)
            assert abs(got - ref) < 1e-10 * max(abs(ref), 1.0)

    def test_pfaff_invariance(self):
        # 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1)) off the cut
        rng = random.Random(99)
        checked = 0
        while checked < 100:
            a = complex(rng.uniform(-2, 2.5), rng.uniform(-1, 1))
            b = complex(rng.uniform(-2, 2.5), rng.uniform(-1, 1))
            c = complex(rng.uniform(0.4, 3.0), rng.uniform(-0.8, 0.8))
            z = rng.uniform(0.05, 0.75) * cmath.exp(1j * rng.uniform(-math.pi, math.pi))
            lhs = hyp2f1(HypParams(a, b, c), z)
            rhs = cpow_principal(1 - z, -a) * hyp2f1(HypParams(a, c - b, c), z / (z - 1))
            assert abs(lhs - rhs) < 1e-11 * max(abs(lhs), 1.0)
            checked += 1

    def test_perturbation_warns(self):
        # forcing the 1/z transformation with an integer parameter difference
        from kmodes.hypergeom import DEFAULT_OPTIONS, _inv_z

        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            val = _inv_z(0.4, 1.4, 1.9, 4.0 + 0.3j, DEFAULT_OPTIONS)
        assert any("perturb" in str(w.message) for w in caught)
        ref = complex(mpmath.hyp2f1(0.4, 1.4, 1.9, 4.0 + 0.3j))
        assert abs(val - ref) < 1e-6 * abs(ref)


class TestHyp2F1Deriv:
    def test_at_zero(self):
        assert abs(hyp2f1_deriv(HypParams(1, 1, 2), 0, 1) - 0.5) < 1e-15

    def test_parameter_shift_matches_fd(self):
        # central finite difference of the function itself as oracle
        p = HypParams(1, 1, 2)
        h = 1e-6
        fd = (hyp2f1(p, 0.5 + h) - hyp2f1(p, 0.5 - h)) / (2 * h)
        assert abs(hyp2f1_deriv(p, 0.5, 1) - fd) < 1e-8

    def test_second_deriv_at_zero(self):
        # (ab/c)((a+1)(b+1)/(c+1)) for (0.5,0.5,1.5) = (1/6)(9/10) = 0.15
        val = hyp2f1_deriv(HypParams(0.5, 0.5, 1.5), 0, 2)
        assert abs(val - 0.15) < 1e-14

    def test_second_deriv_vs_five_point(self):
        p = HypParams(0.5, 0.5, 1.5)
        h = 5e-3
        z0 = 0.3
        vals = [hyp2f1(p, z0 + k * h) for k in (-2, -1, 0, 1, 2)]
        fd2 = (-vals[0] + 16 * vals[1] - 30 * vals[2] + 16 * vals[3] - vals[4]) / (
            12 * h * h
        )
        assert abs(hyp2f1_deriv(p, z0, 2) - fd2) < 1e-8

    def test_contiguous_relation_random(self):
        rng = random.Random(5)
        for _ in range(40):
            a = complex(rng.uniform(-1.5, 2), rng.uniform(-1, 1))
            b = complex(rng.uniform(-1.5, 2), rng.uniform(-1, 1))
            c = complex(rng.uniform(0.5, 2.5), rng.uniform(-0.5, 0.5))
            z = rng.uniform(0.05, 0.6) * cmath.exp(1j * rng.uniform(-math.pi, math.pi))
            p = HypParams(a, b, c)
            h = 1e-6
            fd = (hyp2f1(p, z + h) - hyp2f1(p, z - h)) / (2 * h)
            d = hyp2f1_deriv(p, z, 1)
            assert abs(d - fd) < 1e-7 * max(abs(d), 1.0)

    def test_invalid_order(self):
        with pytest.raises(ValidationError):
            hyp2f1_deriv(HypParams(1, 1, 2), 0.3, 3)

    def test_jet_consistency(self):
        f, f1, f2 = hyp2f1_jet(1, 1, 2, 0.4)
        p = HypParams(1, 1, 2)
        assert f == hyp2f1(p, 0.4)
        assert f1 == hyp2f1_deriv(p, 0.4, 1)
        assert f2 == hyp2f1_deriv(p, 0.4, 2)
