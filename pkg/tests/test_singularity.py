import gmpy2
import math
import pytest
from gmpy2 import mpfr, mpq

from gwasym.errors import (BracketFailureError, DiscriminantError,
                           DomainError)
from gwasym.numerics import workprec
from gwasym.recursions import p2_genus0
from gwasym.singularity import (X0_BRACKET, asymptotic_predict,
                                continuation_check, eval_f0,
                                frobenius_coeffs, genus1_coeffs,
                                ode_residual, pole_residue, solve_x0)


class TestEvalF0:
    def test_first_term_dominates_far_left(self, p2g0_400):
        ev = eval_f0(p2g0_400, mpfr(-20), 0, 10)
        with workprec(256):
            want = gmpy2.exp(mpfr(-20)) / 6
            assert abs(ev.partial_sum / want - 1) < mpfr("1e-8")
        assert ev.rigorous_lower

    def test_partial_sums_increase_with_terms(self, p2g0_400, profile):
        x0 = profile.x0.value
        lo = eval_f0(p2g0_400, x0, 2, 200).partial_sum
        hi = eval_f0(p2g0_400, x0, 2, 400).partial_sum
        assert lo < hi

    def test_derivative_matches_finite_difference(self, p2g0_400, profile):
        x = profile.x0.value - 1
        with workprec(256):
            h = mpfr("1e-8")
            for r in range(3):
                plus = eval_f0(p2g0_400, x + h, r, 400).partial_sum
                minus = eval_f0(p2g0_400, x - h, r, 400).partial_sum
                deriv = eval_f0(p2g0_400, x, r + 1, 400).partial_sum
                assert abs((plus - minus) / (2 * h) / deriv - 1) \
                    < mpfr("1e-6")

    def test_insufficient_table(self, p2g0_400):
        with pytest.raises(DomainError):
            eval_f0(p2g0_400, mpfr(1), 0, 500)


class TestSolveX0:
    def test_bracket_and_agreement(self, p2g0_400):
        est = solve_x0(p2g0_400)
        assert X0_BRACKET[0] < est.value < X0_BRACKET[1]
        assert abs(est.root_value - est.ratio_value) < mpfr("1e-6")

    def test_stability_under_doubling(self, p2g0_400):
        est200 = solve_x0(p2g0_400, D=200)
        est400 = solve_x0(p2g0_400, D=400)
        assert abs(est400.value - est200.value) < est200.error_bar

    def test_short_table_bracket_failure(self):
        with pytest.raises(BracketFailureError):
            solve_x0(p2_genus0(20))


class TestFrobeniusCoeffs:
    def test_a4_from_one_three(self):
        coeffs = frobenius_coeffs(mpfr(1), mpfr(3), 8)
        a4 = coeffs[0]
        assert a4.index == 4
        assert abs(a4.value - mpfr(5) / 2) < mpfr(2) ** -250

    def test_a5_at_origin(self):
        coeffs = frobenius_coeffs(mpfr(0), mpfr(0), 8)
        a5 = coeffs[1]
        with workprec(256):
            want = -gmpy2.sqrt(mpfr(32 * 567) / 6075)
            assert abs(a5.value - want) < mpfr(2) ** -250
        assert a5.is_imaginary
        assert a5.value < 0

    def test_parity_flags(self, profile):
        for c in profile.a_coeffs:
            assert c.is_imaginary == (c.index % 2 == 1)
        for c in profile.b_coeffs:
            assert c.is_imaginary == (c.index % 2 == 1)

    def test_discriminant_guard(self):
        # 4 a2^2 + 45 a2 + 18 a0 + 567 < 0 at a0 = -1000, a2 = 0
        with pytest.raises(DiscriminantError):
            frobenius_coeffs(mpfr(-1000), mpfr(0), 8)

    def test_profile_relation_to_thirty_digits(self, profile):
        with workprec(300):
            lhs = profile.a_reduced(4)
            rhs = mpfr(3) / 2 + profile.a2 / 3
            assert abs(lhs / rhs - 1) < mpfr(10) ** -30

    def test_profile_discriminant_positive(self, profile):
        with workprec(280):
            disc = (4 * profile.a2 ** 2 + 45 * profile.a2
                    + 18 * profile.a0 + 567)
            assert disc > 0


class TestGenus1Coeffs:
    def test_residue_symbolic(self):
        # (15/64) a5 / (-(45/4) a5) cancels exactly for any a5 != 0
        assert pole_residue(mpfr("-1.25")) == mpq(-1, 48)
        assert pole_residue(mpfr("3")) == mpq(-1, 48)
        with pytest.raises(DomainError):
            pole_residue(mpfr(0))

    def test_residue_independent_of_boundary_values(self):
        for a0, a2 in [(mpfr(0), mpfr(0)), (mpfr(1), mpfr(3))]:
            coeffs = frobenius_coeffs(a0, a2, 14)
            residue, _ = genus1_coeffs(coeffs, 5)
            assert residue == mpq(-1, 48)

    def test_residue_is_exact_rational(self, profile):
        assert profile.residue == mpq(-1, 48)
        assert isinstance(profile.residue, type(mpq(1)))

    def test_insufficient_coefficients(self):
        coeffs = frobenius_coeffs(mpfr(1), mpfr(3), 8)
        with pytest.raises(DomainError):
            genus1_coeffs(coeffs, 10)


class TestOdeResidual:
    def test_scaling_exponent(self, profile):
        res = ode_residual(profile, 20,
                           [mpfr(s) for s in ("-1e-3", "-1e-4", "-1e-5")])
        r3, r5 = res[-1e-3], res[-1e-5]
        slope = ((math.log(float(r3)) - math.log(float(r5)))
                 / (math.log(1e-3) - math.log(1e-5)))
        assert abs(slope - (20 - 5) / 2) < 0.25

    def test_tiny_residual_at_m20(self, profile):
        res = ode_residual(profile, 20, [mpfr("-1e-4")])
        assert res[-1e-4] < mpfr("1e-20")

    def test_more_terms_smaller_residual(self, profile):
        z = [mpfr("-1e-3")]
        lo = ode_residual(profile, 12, z)[-1e-3]
        hi = ode_residual(profile, 20, z)[-1e-3]
        assert hi < lo

    def test_halving_z_reduces_residual_geometrically(self, profile):
        m = 20
        big = ode_residual(profile, m, [mpfr("-1e-3")])[-1e-3]
        small = ode_residual(profile, m, [mpfr("-5e-4")])[-5e-4]
        assert big / small >= mpfr(2) ** ((m - 7) / 2)

    def test_trust_radius(self, profile):
        with pytest.raises(DomainError):
            ode_residual(profile, 20, [mpfr("-0.5")])


class TestAsymptoticPredict:
    def test_genus0_close_at_d300(self, p2g0_400, profile):
        pred = asymptotic_predict(0, profile, 300, 5)
        with workprec(256):
            exact = mpfr(p2g0_400.n(300), 256)
            assert abs(pred / exact - 1) < mpfr("1e-3")

    def test_genus1_pole_only_term(self, profile):
        pred = asymptotic_predict(1, profile, 300, 0)
        with workprec(256):
            check = 48 * 300 * pred * gmpy2.exp(300 * profile.x0.value)
            assert abs(check - 1) < mpfr(2) ** -240

    def test_prediction_is_real_and_positive(self, profile):
        for d in (50, 100, 200):
            assert asymptotic_predict(0, profile, d, 5) > 0

    def test_insufficient_coefficients(self, profile):
        with pytest.raises(DomainError):
            asymptotic_predict(0, profile, 100, profile.M)


class TestContinuationCheck:
    def test_positive_margins_off_axis(self, p2g0_400, profile):
        x0 = profile.x0.value
        pi = gmpy2.const_pi(precision=256)
        out = continuation_check(p2g0_400, [mpfr("1e-3"), pi], x0)
        for _, margin in out:
            assert margin > 0
        # margin at y=pi is much larger than near the singular direction
        assert out[1][1] > out[0][1]

    def test_margin_shrinks_on_axis(self, p2g0_400, profile):
        x0 = profile.x0.value
        m200 = continuation_check(p2g0_400, [mpfr(0)], x0, D=200)[0][1]
        m400 = continuation_check(p2g0_400, [mpfr(0)], x0, D=400)[0][1]
        assert 0 < m400 < m200
