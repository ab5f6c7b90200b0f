import gmpy2
import pytest
from gmpy2 import mpfr, mpq

from gwasym.empirics import (analyze_sequence, fit_exponent, monotone_from,
                             p3_ray, ratio_extrapolate, root_sequence)
from gwasym.errors import DomainError
from gwasym.numerics import workprec
from gwasym.recursions import ModelSpec, model_recursion


def synthetic(b, s, d_max):
    """Exact rational b**d * d**s samples (s a negative integer times 1/2
    is emulated by squaring: here s integer only)."""
    return [mpq(b) ** d * mpq(d) ** s for d in range(1, d_max + 1)]


class TestRootSequence:
    def test_catalan_roots(self):
        seq = model_recursion(ModelSpec(mpq(1), 0, mpq(1)), 5).sequence()
        roots = root_sequence(seq)
        with workprec(256):
            want = [mpfr(1), mpfr(1), mpfr(2) ** (mpfr(1) / 3),
                    mpfr(5) ** (mpfr(1) / 4), mpfr(14) ** (mpfr(1) / 5)]
            for got, expect in zip(roots, want):
                assert abs(got - expect) < mpfr(2) ** -240

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            root_sequence([mpq(1), mpq(0), mpq(1)])


class TestMonotoneFrom:
    def test_catalan_immediately_monotone(self):
        seq = model_recursion(ModelSpec(mpq(1), 0, mpq(1)), 30).sequence()
        d_star = monotone_from(seq)
        assert d_star is not None and d_star <= 2

    def test_exact_cross_powers_agree_with_float_roots(self):
        seq = model_recursion(ModelSpec(mpq(1), 3, mpq(1)), 40).sequence()
        roots = root_sequence(seq)
        for i in range(len(seq) - 1):
            d = i + 1
            exact = mpq(seq[i]) ** (d + 1) <= mpq(seq[i + 1]) ** d
            approx = roots[i] <= roots[i + 1]
            assert exact == approx

    def test_k3_model_has_finite_threshold(self):
        seq = model_recursion(ModelSpec(mpq(1), 3, mpq(1)), 200).sequence()
        assert monotone_from(seq) is not None

    def test_decreasing_tail_not_observed(self):
        seq = [mpq(1, 10) ** (d * d) for d in range(1, 10)]
        assert monotone_from(seq) is None

    def test_p2_sequences(self, p2g0_400, p2g1_400):
        assert monotone_from(p2g0_400.sequence()[:200]) == 4
        g1 = p2g1_400.sequence()[2:202]
        assert monotone_from(g1, d_start=3) is not None


class TestRatioExtrapolate:
    def test_geometric_exact_at_order0(self):
        seq = [mpq(3) ** d for d in range(1, 8)]
        b, err = ratio_extrapolate(seq, order=0)
        assert b == 3

    def test_power_law_recovery(self):
        seq = synthetic(mpq(1, 5), -3, 300)
        b, _ = ratio_extrapolate(seq, order=3)
        assert abs(b - mpfr("0.2")) < mpfr("1e-8")

    def test_insufficient_length(self):
        with pytest.raises(DomainError):
            ratio_extrapolate([mpq(1), mpq(2)], order=2)

    def test_genus0_genus1_agree(self, p2g0_400, p2g1_400):
        b0, e0 = ratio_extrapolate(p2g0_400.sequence())
        b1, e1 = ratio_extrapolate(p2g1_400.sequence()[2:], d_start=3)
        assert abs(b0 - b1) < e0 + e1 + mpfr("1e-9")


class TestFitExponent:
    def test_synthetic_slopes(self):
        for s in (-3, -1, 0):
            seq = synthetic(mpq(1, 5), s, 200)
            slope, _ = fit_exponent(seq, mpfr(1) / 5, (50, 200))
            assert abs(slope - s) < mpfr("1e-6")

    def test_half_integer_slope(self):
        # b^d d^-7/2 realized as (1/25)^d d^-7 under d -> squared samples
        with workprec(256):
            seq = [gmpy2.exp(-d * mpfr("0.5")) * mpfr(d) ** mpfr("-3.5")
                   for d in range(1, 201)]
            slope, _ = fit_exponent(seq, gmpy2.exp(mpfr("-0.5")), (50, 200))
            assert abs(slope + mpfr("3.5")) < mpfr("1e-6")

    def test_window_validation(self):
        seq = synthetic(mpq(1, 2), -1, 50)
        with pytest.raises(DomainError):
            fit_exponent(seq, mpfr("0.5"), (10, 100))


class TestP3Ray:
    def test_rays_bounded_by_coarse_bound(self, p3_40):
        rep = p3_ray(p3_40, 1, 2)
        assert len(rep.roots) == 40
        for root in rep.roots:
            assert 0 < root <= 256

    def test_point_ray_positive(self, p3_40):
        rep = p3_ray(p3_40, 1, 0)
        # n_{0,2}(0) = 0 is reported as a zero root, the rest positive
        assert rep.roots[0] > 0
        assert rep.roots[1] == 0
        assert all(r > 0 for r in rep.roots[2:])

    def test_slope_out_of_range(self, p3_40):
        with pytest.raises(DomainError):
            p3_ray(p3_40, 1, 3)

    def test_slope_comparison_data(self, p3_40):
        # comparative data across rays of equal slope beta/alpha
        r11 = p3_ray(p3_40, 1, 1)
        r22 = p3_ray(p3_40, 2, 2)
        assert len(r22.roots) == 20
        # nothing asserted about limits; both sequences must be positive
        assert all(r > 0 for r in r11.roots[1:])


class TestAnalyzeSequence:
    def test_p2_genus0_report(self, p2g0_400):
        rep = analyze_sequence("p2-g0", p2g0_400.sequence(),
                               fit_window=(200, 400))
        assert rep.monotone_d_star == 4
        assert abs(rep.exponent_fit + mpfr("3.5")) < mpfr("0.05")
        s = rep.summary()
        assert s["fit_window"] == [200, 400]
