"""Data-driven sequence analysis: d-th roots, growth constants, exponents.

Monotonicity verdicts are decided by exact cross-power comparisons on the
rational values; floating-point roots are computed only for display and
extrapolation.  Growth constants come from Richardson extrapolation of
consecutive ratios, which admit an expansion in integer powers of ``1/d``
even though the sequences themselves carry half-integer correction terms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import gmpy2
from gmpy2 import mpfr, mpq

from .errors import DomainError
from .numerics import DEFAULT_PBITS, BigReal, rational_to_real, workprec
from .recursions import CountTable

__all__ = [
    "AsymptoticReport",
    "RayReport",
    "root_sequence",
    "monotone_from",
    "ratio_extrapolate",
    "fit_exponent",
    "p3_ray",
    "analyze_sequence",
]


def _check_positive(values: Sequence, d_start: int) -> None:
    for i, v in enumerate(values):
        if not v > 0:
            raise DomainError(
                f"nonpositive entry at d={d_start + i}; trim leading zeros "
                "before root/ratio analysis")


def root_sequence(values: Sequence, d_start: int = 1,
                  p_bits: int = DEFAULT_PBITS) -> list:
    """d-th roots ``values[i] ** (1/d)`` with ``d = d_start + i``.

    Computed as ``exp(log(n)/d)`` at working precision; display-grade,
    never used for monotonicity verdicts.
    """
    _check_positive(values, d_start)
    out = []
    with workprec(p_bits):
        for i, v in enumerate(values):
            d = d_start + i
            out.append(gmpy2.exp(gmpy2.log(mpfr(v)) / d))
    return out


def monotone_from(values: Sequence, d_start: int = 1) -> Optional[int]:
    """Smallest ``d*`` from which the d-th roots are non-decreasing.

    ``n_d**(1/d) <= n_{d+1}**(1/(d+1))`` is decided by the exact rational
    comparison ``n_d**(d+1) <= n_{d+1}**d``.  Returns ``None`` when the
    last available comparison still fails (monotone tail not observed).
    """
    if len(values) < 3:
        raise DomainError("need at least 3 entries for a monotonicity verdict")
    _check_positive(values, d_start)
    last_violation = None
    for i in range(len(values) - 1):
        d = d_start + i
        if not mpq(values[i]) ** (d + 1) <= mpq(values[i + 1]) ** d:
            last_violation = d
    if last_violation is None:
        return d_start
    d_star = last_violation + 1
    if d_star > d_start + len(values) - 2:
        return None
    return d_star


def ratio_extrapolate(values: Sequence, d_start: int = 1, order: int = 2,
                      p_bits: int = DEFAULT_PBITS) -> tuple:
    """Growth constant ``b = lim n_{d+1}/n_d`` by Richardson extrapolation.

    The ratio sequence expands as ``b (1 + c1/d + c2/d**2 + ...)``, so the
    order-``k`` extrapant is the ``k``-th forward difference of
    ``d**k r_d / k!`` taken at the end of the sequence.  Half-integer
    corrections in the underlying counts cancel in the ratios only through
    the first couple of orders, so ``order`` defaults to 2 and the spread
    between the last two orders is returned as the error estimate.

    Returns ``(b, err)`` as BigReals.
    """
    if order < 0:
        raise DomainError(f"order must be >= 0, got {order}")
    if len(values) < order + 3:
        raise DomainError(
            f"need at least order+3 = {order + 3} entries, got {len(values)}")
    _check_positive(values, d_start)

    def extrapolant(k: int) -> BigReal:
        # k-th forward difference of d^k * r_d / k! over the last k+1 ratios
        m = len(values) - 1  # number of ratios
        ds = [d_start + m - 1 - k + j for j in range(k + 1)]
        with workprec(p_bits):
            row = [mpfr(ds[j]) ** k
                   * mpfr(mpq(values[m - k + j]) / mpq(values[m - k + j - 1]))
                   for j in range(k + 1)]
            for _ in range(k):
                row = [row[j + 1] - row[j] for j in range(len(row) - 1)]
            return row[0] / gmpy2.fac(k)

    with workprec(p_bits):
        b = extrapolant(order)
        prev = extrapolant(order - 1) if order >= 1 else b
        err = abs(b - prev)
    return b, err


def fit_exponent(values: Sequence, b, d_window: tuple,
                 d_start: int = 1, p_bits: int = DEFAULT_PBITS) -> tuple:
    """Least-squares slope of ``log(n_d b**-d)`` against ``log d``.

    ``d_window = (lo, hi)`` selects the fitted degrees; windows reaching
    below ``d = 50`` are noisy because of transient terms, so choose
    ``lo >= 50`` unless probing the transient itself.  Returns
    ``(slope, rms_residual)``.
    """
    lo, hi = d_window
    if not (d_start <= lo < hi <= d_start + len(values) - 1):
        raise DomainError(f"window {d_window} outside data range")
    if not b > 0:
        raise DomainError("growth constant must be positive")
    with workprec(p_bits):
        log_b = gmpy2.log(mpfr(b))
        xs, ys = [], []
        for d in range(lo, hi + 1):
            v = values[d - d_start]
            if not v > 0:
                raise DomainError(f"nonpositive entry at d={d} in window")
            xs.append(gmpy2.log(mpfr(d)))
            ys.append(gmpy2.log(mpfr(v)) - d * log_b)
        m = len(xs)
        sx = sum(xs)
        sy = sum(ys)
        sxx = sum(x * x for x in xs)
        sxy = sum(x * y for x, y in zip(xs, ys))
        denom = m * sxx - sx * sx
        if denom == 0:
            raise DomainError("degenerate window: single distinct abscissa")
        slope = (m * sxy - sx * sy) / denom
        intercept = (sy - slope * sx) / m
        rss = sum((y - slope * x - intercept) ** 2
                  for x, y in zip(xs, ys))
        rms = gmpy2.sqrt(rss / m)
    return slope, rms


@dataclass
class RayReport:
    """d-th roots of ``n_{alpha d}(beta d)`` along a ray in the (d, p) grid."""

    alpha: int
    beta: int
    roots: list
    diffs: list
    verdict: str

    def summary(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "n_points": len(self.roots),
            "roots": [float(r) for r in self.roots],
            "last_diff": float(self.diffs[-1]) if self.diffs else None,
            "verdict": self.verdict,
        }


def p3_ray(table: CountTable, alpha: int, beta: int,
           d_max: Optional[int] = None,
           p_bits: int = DEFAULT_PBITS) -> RayReport:
    """Root sequence ``n_{alpha d}(beta d) ** (1/d)`` along a grid ray.

    Requires ``beta <= 2 alpha`` so the ray stays inside the grid.  The
    verdict is descriptive only: convergence of these sequences is slow and
    nothing is asserted about a limit.
    """
    if table.target != "p3":
        raise DomainError("p3_ray requires a p3 table")
    if alpha < 1 or beta < 0:
        raise DomainError("alpha must be >= 1 and beta >= 0")
    if beta > 2 * alpha:
        raise DomainError(
            f"ray (alpha, beta)=({alpha},{beta}) leaves the grid: "
            "need beta <= 2 alpha")
    if d_max is None:
        d_max = table.d_max // alpha
    if alpha * d_max > table.d_max:
        raise DomainError("table does not cover alpha * d_max")
    roots = []
    with workprec(p_bits):
        for d in range(1, d_max + 1):
            v = table.n(alpha * d, beta * d)
            if v > 0:
                roots.append(gmpy2.exp(gmpy2.log(mpfr(v)) / d))
            else:
                roots.append(mpfr(0))
        diffs = [roots[i + 1] - roots[i] for i in range(len(roots) - 1)]
    if len(diffs) >= 2 and abs(diffs[-1]) <= abs(diffs[-2]):
        verdict = "slow"
    else:
        verdict = "inconclusive"
    return RayReport(alpha, beta, roots, diffs, verdict)


@dataclass
class AsymptoticReport:
    """Summary of the asymptotic behaviour of one sequence."""

    sequence_id: str
    d_start: int
    d_max: int
    b_estimate: BigReal
    b_error: BigReal
    b_order: int
    exponent_fit: BigReal
    exponent_residual: BigReal
    fit_window: tuple
    monotone_d_star: Optional[int]
    residuals: list = field(default_factory=list)

    def summary(self) -> dict:
        return {
            "sequence_id": self.sequence_id,
            "d_range": [self.d_start, self.d_max],
            "b_estimate": float(self.b_estimate),
            "b_error": float(self.b_error),
            "b_order": self.b_order,
            "exponent_fit": float(self.exponent_fit),
            "exponent_residual": float(self.exponent_residual),
            "fit_window": list(self.fit_window),
            "monotone_from": self.monotone_d_star,
        }


def analyze_sequence(sequence_id: str, values: Sequence, d_start: int = 1,
                     fit_window: Optional[tuple] = None, order: int = 2,
                     p_bits: int = DEFAULT_PBITS) -> AsymptoticReport:
    """Full empirical work-up of a positive sequence.

    Combines ratio extrapolation, the power-law exponent fit against the
    extrapolated ``b``, and the exact monotonicity threshold.
    """
    d_max = d_start + len(values) - 1
    if fit_window is None:
        fit_window = (max(d_start, min(50, (d_start + d_max) // 2)), d_max)
    b, b_err = ratio_extrapolate(values, d_start, order, p_bits)
    slope, rms = fit_exponent(values, b, fit_window, d_start, p_bits)
    d_star = monotone_from(values, d_start)
    with workprec(p_bits):
        log_b = gmpy2.log(b)
        residuals = []
        for d in range(fit_window[0], fit_window[1] + 1):
            v = rational_to_real(values[d - d_start], p_bits)
            model = gmpy2.exp(d * log_b + slope * gmpy2.log(mpfr(d)))
            residuals.append((d, gmpy2.log(v) - gmpy2.log(model)))
    return AsymptoticReport(sequence_id, d_start, d_max, b, b_err, order,
                            slope, rms, fit_window, d_star, residuals)
