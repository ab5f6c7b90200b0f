"""Singularity analysis of the genus-0 and genus-1 generating series.

The genus-0 series ``F0(z) = (1/3) sum n_d e^(dz)`` has a square-root-type
singular point at a real abscissa ``x0``.  This module locates ``x0`` as
the root of ``3 F0'' - 2 F0' = 9``, extracts the half-power (Puiseux)
expansion coefficients ``a_d`` of ``F0`` at ``x0`` from a quadratic
recursion, derives the genus-1 expansion coefficients ``b_d`` (with an
exact pole residue ``-1/48``) by series division, and converts both
expansions into asymptotic predictions for the counts via the standard
transfer formula ``n_d ~ e^(-d x0) (-a_(-1) + (1/(pi i)) sum a_k
Gamma(k+1) d^(-k-1))`` over half-odd ``k``.

Coefficients of odd index are purely imaginary; all arithmetic stays real
by carrying the imaginary unit in a parity flag (see ``numerics``).  The
reduced representative of the leading odd coefficient is taken negative,
and the transfer sum is applied with the matching orientation ``-1/pi``;
the opposite choice of square-root branch flips both signs at once, so the
predictions are branch-independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import gmpy2
import mpmath
from gmpy2 import mpfr, mpq

from .errors import (BracketFailureError, DiscriminantError, DomainError,
                     GwasymError)
from .numerics import (DEFAULT_PBITS, BigReal, SignedHalfPowerCoeff,
                       gamma_half, rational_to_real, workprec)
from .recursions import CountTable

__all__ = [
    "SeriesEvaluation",
    "X0Estimate",
    "SingularityProfile",
    "eval_f0",
    "solve_x0",
    "estimate_boundary_values",
    "frobenius_coeffs",
    "pole_residue",
    "genus1_coeffs",
    "asymptotic_predict",
    "ode_residual",
    "continuation_check",
    "build_profile",
    "X0_BRACKET",
]

# The counts obey (8/5) 27^-d d^-7/2 <= n_d <= (45/16) (4/15)^d d^-7/2,
# which traps the abscissa of convergence between ln(15/4) and ln 27.
X0_BRACKET = (gmpy2.log(mpfr(15) / 4), gmpy2.log(mpfr(27)))

_MIN_SOLVE_DMAX = 200


@dataclass(frozen=True)
class SeriesEvaluation:
    """One evaluation of the genus-0 series or a derivative.

    ``partial_sum`` is the truncated sum through ``terms_used`` degrees;
    with all series terms positive it is a rigorous lower bound
    (``rigorous_lower``).  ``tail_estimate`` comes from the fitted
    asymptotic tail model and carries no rigor.
    """

    x: BigReal
    r: int
    partial_sum: BigReal
    terms_used: int
    tail_estimate: BigReal
    rigorous_lower: bool

    @property
    def value(self) -> BigReal:
        return self.partial_sum + self.tail_estimate


@dataclass(frozen=True)
class X0Estimate:
    """Singular-point estimate with its cross-validation data."""

    value: BigReal
    error_bar: BigReal
    root_value: BigReal
    ratio_value: BigReal
    d_used: int


def _tail_power_sum(s, start: int, p_bits: int) -> BigReal:
    """Euler-Maclaurin estimate of ``sum_{d >= start} d**-s``."""
    with workprec(p_bits):
        a = mpfr(start)
        return (a ** (1 - mpfr(s)) / (mpfr(s) - 1) + a ** (-mpfr(s)) / 2
                + mpfr(s) * a ** (-mpfr(s) - 1) / 12)


def _tail_power_sum_exp(s, lam, start: int, p_bits: int) -> BigReal:
    """Estimate of ``sum_{d >= start} d**-s e**(-lam d)`` for ``lam >= 0``.

    ``lam = 0`` uses the Euler-Maclaurin closed form; ``lam > 0`` uses the
    incomplete-gamma integral ``integral_start^inf t**-s e**(-lam t) dt =
    lam**(s-1) Gamma(1-s, lam*start)`` plus half the first term.
    """
    if lam == 0:
        return _tail_power_sum(s, start, p_bits)
    if lam < 0:
        raise DomainError("tail model only valid at or below x0")
    with mpmath.workprec(p_bits):
        integral = (mpmath.mpf(str(lam)) ** (mpmath.mpf(str(s)) - 1)
                    * mpmath.gammainc(1 - mpmath.mpf(str(s)),
                                      mpmath.mpf(str(lam)) * start))
        val = mpfr(str(integral), p_bits)
    with workprec(p_bits):
        return val + mpfr(start) ** (-mpfr(s)) * gmpy2.exp(-lam * start) / 2


def _fit_tail_coeffs(table: CountTable, x, D: int, p_bits: int) -> tuple:
    """Least-squares fit ``n_d e^(dx) d^(7/2) / 3 ~ c1 + c2/d`` over the
    last tenth of the table, treating ``x`` as the singular point."""
    lo = max(1, (9 * D) // 10)
    with workprec(p_bits):
        s11 = s12 = s22 = t1 = t2 = mpfr(0)
        for d in range(lo, D + 1):
            y = (rational_to_real(table.n(d), p_bits) * gmpy2.exp(d * x)
                 * mpfr(d) ** 3 * gmpy2.sqrt(mpfr(d)) / 3)
            w = 1 / mpfr(d)
            s11 += 1
            s12 += w
            s22 += w * w
            t1 += y
            t2 += y * w
        det = s11 * s22 - s12 * s12
        c1 = (s22 * t1 - s12 * t2) / det
        c2 = (s11 * t2 - s12 * t1) / det
    return c1, c2


def eval_f0(table: CountTable, x, r: int, D: Optional[int] = None,
            p_bits: int = DEFAULT_PBITS,
            x0=None) -> SeriesEvaluation:
    """Partial sum of the ``r``-th derivative of the genus-0 series at ``x``.

    ``partial_sum = (1/3) sum_{d<=D} d**r n_d e**(dx)``.  When ``x0`` is
    supplied and ``x <= x0``, a tail estimate is attached from the fitted
    ``n_d ~ 3 c e**(-d x0) d**(-7/2)`` model; otherwise the tail estimate
    is zero and only the rigorous lower bound is meaningful.
    """
    if table.target != "p2" or table.genus != 0:
        raise DomainError("eval_f0 requires a p2 genus-0 table")
    if r not in (0, 1, 2, 3):
        raise DomainError(f"derivative order r must be 0..3, got {r}")
    if D is None:
        D = table.d_max
    if D > table.d_max:
        raise DomainError(f"D={D} exceeds table d_max={table.d_max}")
    with workprec(p_bits):
        x = mpfr(x)
        total = mpfr(0)
        for d in range(1, D + 1):
            total += (mpfr(d) ** r * rational_to_real(table.n(d), p_bits)
                      * gmpy2.exp(d * x))
        total /= 3
        tail = mpfr(0)
        if x0 is not None:
            lam = mpfr(x0) - x
            c1, c2 = _fit_tail_coeffs(table, mpfr(x0), D, p_bits)
            s = mpfr(7) / 2 - r
            tail = (c1 * _tail_power_sum_exp(s, lam, D + 1, p_bits)
                    + c2 * _tail_power_sum_exp(s + 1, lam, D + 1, p_bits))
    return SeriesEvaluation(x, r, total, D, tail, True)


def _root_solve(table: CountTable, D: int, p_bits: int) -> BigReal:
    """Bisection root of ``g(x) = 3 F0''(x) - 2 F0'(x) - 9`` with
    self-consistent tails.

    At each candidate ``x`` the tail beyond ``D`` is modelled by treating
    ``x`` as the singular point: the tail coefficients are fitted at ``x``
    itself and summed with the flat (``lam = 0``) Euler-Maclaurin formula.
    At the true ``x0`` this model is asymptotically exact; away from it the
    mismatch only steepens ``g``, preserving the sign change.
    """
    with workprec(p_bits):
        exps = [mpfr(0)] + [rational_to_real(table.n(d), p_bits)
                            for d in range(1, D + 1)]

        def g(x):
            c1, c2 = _fit_tail_coeffs(table, x, D, p_bits)
            s1 = s2 = mpfr(0)
            for d in range(1, D + 1):
                term = exps[d] * gmpy2.exp(d * x)
                s1 += d * term
                s2 += d * d * term
            s1 /= 3
            s2 /= 3
            # F0'' tail: sum (c1 d^-3/2 + c2 d^-5/2); F0' tail: one power up
            t2 = (c1 * _tail_power_sum(mpfr(3) / 2, D + 1, p_bits)
                  + c2 * _tail_power_sum(mpfr(5) / 2, D + 1, p_bits))
            t1 = (c1 * _tail_power_sum(mpfr(5) / 2, D + 1, p_bits)
                  + c2 * _tail_power_sum(mpfr(7) / 2, D + 1, p_bits))
            return 3 * (s2 + t2) - 2 * (s1 + t1) - 9

        lo, hi = X0_BRACKET
        lo, hi = mpfr(lo), mpfr(hi)
        glo, ghi = g(lo), g(hi)
        if not (glo < 0 < ghi):
            raise BracketFailureError(
                "no sign change of 3F0''-2F0'-9 on the a-priori bracket; "
                "the table is too short for trustworthy tail corrections "
                f"(d_max={table.d_max}, D={D})")
        for _ in range(p_bits // 2):
            mid = (lo + hi) / 2
            if g(mid) < 0:
                lo = mid
            else:
                hi = mid
            if hi - lo < mpfr(2) ** (-p_bits + 8):
                break
        return (lo + hi) / 2


def solve_x0(table: CountTable, p_bits: int = DEFAULT_PBITS,
             D: Optional[int] = None) -> X0Estimate:
    """Singular point ``x0`` with an error bar and a cross-check.

    The primary estimator is the bisection root of ``3F0'' - 2F0' = 9``
    (see :func:`_root_solve`); the cross-check is ``-log b`` with ``b``
    from ratio extrapolation of the counts.  The error bar combines the
    movement of the root under halving ``D`` with the spread between the
    two estimators.
    """
    from .empirics import ratio_extrapolate

    if table.target != "p2" or table.genus != 0:
        raise DomainError("solve_x0 requires a p2 genus-0 table")
    if D is None:
        D = table.d_max
    if D > table.d_max:
        raise DomainError(f"D={D} exceeds table d_max={table.d_max}")
    if D < _MIN_SOLVE_DMAX:
        raise BracketFailureError(
            f"solve_x0 needs d_max >= {_MIN_SOLVE_DMAX} for usable tail "
            f"corrections, got {D}")
    root = _root_solve(table, D, p_bits)
    root_half = _root_solve(table, D // 2, p_bits)
    b, _ = ratio_extrapolate(table.sequence()[:D], 1, 2, p_bits)
    with workprec(p_bits):
        ratio_x0 = -gmpy2.log(b)
        err = 2 * abs(root - root_half) + abs(root - ratio_x0)
    return X0Estimate(root, err, root, ratio_x0, D)


def estimate_boundary_values(table: CountTable, x0, D: Optional[int] = None,
                             p_bits: int = DEFAULT_PBITS) -> tuple:
    """Boundary values ``(a0, a2) = (F0(x0), F0'(x0))`` with fitted tails.

    Raw partial sums are corrected by the self-consistent tail model
    fitted on the last computed decade; this is the tail-refined pass of
    the estimation scheme (the fit depends only on the table and ``x0``,
    so further iteration is a fixed point).
    """
    a0_eval = eval_f0(table, x0, 0, D, p_bits, x0=x0)
    a2_eval = eval_f0(table, x0, 1, D, p_bits, x0=x0)
    return a0_eval.value, a2_eval.value


def _coeff(index: int, reduced) -> SignedHalfPowerCoeff:
    return SignedHalfPowerCoeff(index, reduced)


def _frobenius_reduced(a0, a2, M: int, p_bits: int) -> list:
    """Reduced (real-representative) expansion coefficients ``c[0..M]``.

    ``c[j]`` represents ``a_j = i**(j mod 2) c[j]``.  The quadratic
    recursion for ``a_{d+5}`` is evaluated entirely on the reduced values;
    a product of two odd-index coefficients picks up a ``-1``.
    """
    if M < 6:
        raise DomainError(f"need M >= 6, got {M}")
    with workprec(p_bits):
        a0 = mpfr(a0)
        a2 = mpfr(a2)
        disc = 4 * a2 * a2 + 45 * a2 + 18 * a0 + 567
        if not disc > 0:
            raise DiscriminantError(
                f"discriminant 4a2^2+45a2+18a0+567 = {disc} is not positive")
        c = [mpfr(0)] * (M + 1)
        c[0] = a0
        c[2] = a2
        c[4] = mpfr(3) / 2 + a2 / 3
        # a5 in i R^-: reduced representative is the negative real root
        c[5] = -gmpy2.sqrt(mpfr(32) / 6075 * disc)

        def s2(u: int, v: int) -> int:
            return -1 if (u % 2 == 1 and v % 2 == 1) else 1

        for d in range(1, M - 4):
            rhs = (-2 * c[d] + mpfr(11 * (d + 2)) / 2 * c[d + 2]
                   + mpfr((d + 2) * (d + 4)) / 2 * ((d - 2) * c[4] - 9)
                   * c[d + 4])
            for d1 in range(1, d):
                d2 = d - d1
                rhs -= (mpfr(3 * (d + 2) * (d1 + 3) * (d1 + 5)
                             * (d2 + 3) * (d2 + 5)) / 64
                        * s2(d1 + 5, d2 + 5) * c[d1 + 5] * c[d2 + 5])
                rhs += (mpfr((d1 * d1 + d2 * d2 - d1 * d2 - 4)
                             * (d1 + 4) * (d2 + 4)) / 16
                        * s2(d1 + 4, d2 + 4) * c[d1 + 4] * c[d2 + 4])
            lead = mpfr(45 * (d + 2) * (d + 3) * (d + 5)) / 32 * c[5]
            # a5 * a_{d+5}: both odd iff d even, contributing a -1
            sign = -1 if d % 2 == 0 else 1
            c[d + 5] = rhs / (lead * sign)
    return c


def frobenius_coeffs(a0, a2, M: int,
                     p_bits: int = DEFAULT_PBITS) -> list:
    """Half-power expansion coefficients ``a_4 .. a_M`` of the genus-0
    series at its singular point, given the boundary values.

    ``a_4 = 3/2 + a_2/3`` and ``a_5`` is the negative imaginary square
    root fixed by the discriminant; higher coefficients follow from the
    quadratic recursion with ``a_1 = a_3 = 0``.
    """
    c = _frobenius_reduced(a0, a2, M, p_bits)
    return [_coeff(j, c[j]) for j in range(4, M + 1)]


def pole_residue(a5_reduced) -> mpq:
    """Residue of the genus-1 derivative series at the singular point.

    The leading numerator coefficient ``(15/64) a5`` divides the leading
    denominator coefficient ``-(45/4) a5``; the ``a5`` cancel exactly and
    the residue is the rational ``-1/48`` whenever ``a5`` is nonzero.
    """
    if a5_reduced == 0:
        raise DomainError("a5 = 0: the genus-1 series division degenerates")
    return mpq(15, 64) / mpq(-45, 4)


def genus1_coeffs(a_coeffs: Sequence[SignedHalfPowerCoeff],
                  M1: Optional[int] = None,
                  p_bits: int = DEFAULT_PBITS) -> tuple:
    """Genus-1 expansion coefficients from the genus-0 ones.

    The genus-1 derivative series satisfies a linear relation whose
    right-hand side and whose vanishing factor ``9 + 2F0' - 3F0''`` are
    both determined by the ``a``-coefficients; dividing the two half-power
    series termwise yields ``F1'(x0+z) = -1/(48 z) + sum b_d z**(d/2)``.
    Returns ``(residue, [b_(-1) .. b_(M1)])`` with the residue exact.

    Needs ``a``-coefficients through index ``M1 + 7``.
    """
    a = {co.index: co.value for co in a_coeffs}
    a.setdefault(1, mpfr(0))
    a.setdefault(3, mpfr(0))
    if 5 not in a or a[5] == 0:
        raise DomainError("a5 missing or zero: cannot divide by the "
                          "vanishing factor")
    if M1 is None:
        M1 = max(a) - 7
    if M1 < -1:
        raise DomainError(f"need M1 >= -1, got {M1}")
    top = M1 + 2  # w-power order needed in the divided series
    for j in range(3, top + 6):
        if j not in a:
            raise DomainError(
                f"a-coefficient index {j} missing; genus1_coeffs needs "
                f"indices through {top + 5}")

    def s(u: int, v: int) -> int:
        return -1 if (u % 2 == 1 and v % 2 == 1) else 1

    with workprec(p_bits):
        # P_k: reduced coeff of w^k in (9+2F0'-3F0'')/w, parity (k+1) mod 2
        # W_k: reduced coeff of w^k in (1/8)(F0''' w + zP w ... ), same shift
        P = [mpfr(d + 3) / 4 * (4 * a[d + 3] - 3 * (d + 5) * a[d + 5])
             for d in range(0, top + 1)]
        Q = [mpfr((d + 1) * (d + 3) * (d + 5)) / 8 * a[d + 5]
             for d in range(0, top + 1)]
        W = [Q[k] / 8 for k in range(0, top + 1)]
        for k in range(2, top + 1):
            W[k] += P[k - 2] / 8
        if top >= 1:
            W[1] -= mpfr(9) / 8
        # divide: W (parity shift 1) by P (parity shift 1) -> V (shift 0)
        resid = pole_residue(a[5])
        V = [rational_to_real(resid, p_bits)]
        for k in range(1, top + 1):
            acc = W[k]
            for j in range(1, k + 1):
                acc -= s(j + 1, k - j) * P[j] * V[k - j]
            V.append(acc / (s(1, k) * P[0]))
    b = [_coeff(k - 2, V[k]) for k in range(1, top + 1)]
    return pole_residue(a[5]), b


@dataclass(frozen=True)
class SingularityProfile:
    """Complete singular-expansion data for the plane-curve series."""

    x0: X0Estimate
    a0: BigReal
    a2: BigReal
    a_coeffs: tuple  # SignedHalfPowerCoeff, indices 4..M
    b_coeffs: tuple  # SignedHalfPowerCoeff, indices -1..M1
    residue: mpq
    M: int
    M1: int
    p_bits: int

    def a_reduced(self, j: int) -> BigReal:
        """Reduced representative of ``a_j`` including the low indices."""
        if j == 0:
            return self.a0
        if j == 2:
            return self.a2
        if j in (1, 3):
            return mpfr(0)
        if 4 <= j <= self.M:
            return self.a_coeffs[j - 4].value
        raise DomainError(f"a-coefficient index {j} not in profile")

    def b_reduced(self, j: int) -> BigReal:
        if -1 <= j <= self.M1:
            return self.b_coeffs[j + 1].value
        raise DomainError(f"b-coefficient index {j} not in profile")


def build_profile(table: CountTable, p_bits: int = DEFAULT_PBITS,
                  M: int = 24, M1: Optional[int] = None,
                  D: Optional[int] = None) -> SingularityProfile:
    """End-to-end profile construction from a genus-0 table."""
    x0 = solve_x0(table, p_bits, D)
    a0, a2 = estimate_boundary_values(table, x0.value, D, p_bits)
    a_coeffs = frobenius_coeffs(a0, a2, M, p_bits)
    if M1 is None:
        M1 = M - 7
    residue, b_coeffs = genus1_coeffs(a_coeffs, M1, p_bits)
    return SingularityProfile(x0, a0, a2, tuple(a_coeffs), tuple(b_coeffs),
                              residue, M, M1, p_bits)


def asymptotic_predict(genus: int, profile: SingularityProfile, d: int,
                       N: int, p_bits: Optional[int] = None) -> BigReal:
    """Transfer-formula prediction for the normalized count at degree ``d``.

    Only half-odd powers contribute to the sum (integer powers are killed
    by the transfer), truncated at exponent ``k < N - 1``.  Genus 0
    predicts ``n_{0,d}``; genus 1 includes the pole term ``e^{-d x0}/48``
    of the derivative series and predicts ``n_{1,d}`` after dividing by
    ``d``.
    """
    if d < 1:
        raise DomainError(f"degree must be >= 1, got {d}")
    if p_bits is None:
        p_bits = profile.p_bits
    with workprec(p_bits):
        x0 = mpfr(profile.x0.value)
        damp = gmpy2.exp(-d * x0)
        pi = gmpy2.const_pi()
        if genus == 0:
            # coefficients of F0 = (1/3) sum n e^{dz}; undo the 1/3
            total = mpfr(0)
            for j in range(5, 2 * N - 2, 2):
                if j > profile.M:
                    raise DomainError(
                        f"N={N} needs a-coefficients through index "
                        f"{2 * N - 3}, profile has M={profile.M}")
                total += (profile.a_reduced(j) * gamma_half(j + 2, p_bits)
                          * mpfr(d) ** (-mpfr(j) / 2 - 1))
            return 3 * damp * (-total / pi)
        if genus == 1:
            # F1' = sum d n_{1,d} e^{dz}, pole residue -1/48 at x0
            total = damp / 48
            acc = mpfr(0)
            for j in range(-1, 2 * N - 2, 2):
                if j > profile.M1:
                    raise DomainError(
                        f"N={N} needs b-coefficients through index "
                        f"{2 * N - 3}, profile has M1={profile.M1}")
                acc += (profile.b_reduced(j) * gamma_half(j + 2, p_bits)
                        * mpfr(d) ** (-mpfr(j) / 2 - 1))
            total += damp * (-acc / pi)
            return total / d
    raise DomainError(f"genus must be 0 or 1, got {genus}")


ODE_TRUST_RADIUS = mpfr("1e-2")


def _eval_derivative(profile: SingularityProfile, m: int, u, M: int,
                     p_bits: int) -> BigReal:
    """``d^m/dz^m`` of the truncated expansion at ``z = -u`` on the branch
    where ``z**(1/2) = -i sqrt(u)``; the result is real."""
    with workprec(p_bits):
        u = mpfr(u)
        total = mpfr(0)
        for j in range(0, M):
            cj = profile.a_reduced(j)
            if cj == 0:
                continue
            coeff = mpfr(1)
            for t in range(m):
                coeff *= mpfr(j) / 2 - t
            if coeff == 0:
                continue
            # i^{j%2} z^{(j-2m)/2} = (-1)^{j//2} (-1)^m u^{(j-2m)/2}
            sign = _branch_sign(j, m)
            total += sign * coeff * cj * u ** (mpfr(j - 2 * m) / 2)
        return total


def _branch_sign(j: int, m: int) -> int:
    """Sign of ``i**(j mod 2) * (-i)**(j - 2m)``, which is real."""
    base = -1 if (j // 2) % 2 == 1 else 1
    return base * (-1 if m % 2 == 1 else 1)


def ode_residual(profile: SingularityProfile, M: int, z_samples,
                 p_bits: Optional[int] = None) -> dict:
    """Residual of the genus-0 differential equation on the truncated
    expansion.

    Both sides of ``(9 + 2F0' - 3F0'') F0''' = 2F0 - 11F0' + 18F0''
    + (F0'')**2`` are evaluated from the expansion truncated to indices
    strictly below ``M``, at real samples ``z = -u`` inside the trust
    radius.  The residual vanishes like ``|z|**((M-5)/2)`` as ``z -> 0``.
    Returns ``{u: residual}``.
    """
    if p_bits is None:
        p_bits = profile.p_bits
    if M < 10:
        raise DomainError(f"need M >= 10 for a meaningful residual, got {M}")
    if M > profile.M + 1:
        raise DomainError(f"profile holds indices through {profile.M}")
    out = {}
    with workprec(p_bits):
        for z in z_samples:
            u = -mpfr(z)
            if not 0 < u <= ODE_TRUST_RADIUS:
                raise DomainError(
                    f"sample z={z} outside trust radius |z| <= "
                    f"{ODE_TRUST_RADIUS}")
            f0 = _eval_derivative(profile, 0, u, M, p_bits)
            f1 = _eval_derivative(profile, 1, u, M, p_bits)
            f2 = _eval_derivative(profile, 2, u, M, p_bits)
            f3 = _eval_derivative(profile, 3, u, M, p_bits)
            lhs = (9 + 2 * f1 - 3 * f2) * f3
            rhs = 2 * f0 - 11 * f1 + 18 * f2 + f2 * f2
            out[float(z)] = abs(lhs - rhs)
    return out


def continuation_check(table: CountTable, y_samples, x0,
                       D: Optional[int] = None,
                       p_bits: int = DEFAULT_PBITS) -> list:
    """Margins ``9 - Re(3F0'' - 2F0')`` on the vertical line through ``x0``.

    A positive margin at ``y`` indicates the series continues analytically
    through ``x0 + iy``; at ``y = 0`` the margin tends to zero, which is
    the defining equation of ``x0``.  Returns ``[(y, margin), ...]``.
    """
    if table.target != "p2" or table.genus != 0:
        raise DomainError("continuation_check requires a p2 genus-0 table")
    if D is None:
        D = table.d_max
    out = []
    with workprec(p_bits):
        x0 = mpfr(x0)
        terms = []
        for d in range(1, D + 1):
            terms.append((3 * d - 2) * d
                         * rational_to_real(table.n(d), p_bits)
                         * gmpy2.exp(d * x0) / 3)
        for y in y_samples:
            y = mpfr(y)
            acc = mpfr(0)
            for d, t in enumerate(terms, start=1):
                acc += t * gmpy2.cos(d * y)
            out.append((y, 9 - acc))
    return out
