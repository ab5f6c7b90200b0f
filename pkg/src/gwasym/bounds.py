"""Exact verification of the inequalities satisfied by the count sequences.

Every verdict about counts is decided in exact rational arithmetic.  Bounds
involving half-integer powers of ``d`` are compared after squaring and
clearing the power of ``d``, so no floating-point rounding can flip a
pass/fail.  Only the generating-function ordering check works with big
floats, since it samples the series at real points; its partial sums are
rigorous lower bounds because all terms are positive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from gmpy2 import bincoef, mpq, mpz
from gmpy2 import fac as gmpy2_fac

from .errors import DomainError
from .numerics import DEFAULT_PBITS
from .recursions import CountTable

__all__ = [
    "BoundReport",
    "check_integrality",
    "check_p2_sandwich",
    "check_catalan_sandwich",
    "check_stirling",
    "check_p3_coarse_bound",
    "p3_majorants",
    "check_ordering_f0",
]


@dataclass
class BoundReport:
    """Outcome of one bound check over a range of indices.

    ``violations`` holds ``(index, lhs, rhs)`` triples in exact form (the
    failed comparison was ``lhs <= rhs``); the check passes iff it is empty.
    """

    bound_id: str
    d_range: tuple
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> dict:
        out = {
            "bound_id": self.bound_id,
            "d_range": list(self.d_range),
            "pass": self.passed,
            "n_violations": len(self.violations),
        }
        if self.violations:
            idx, lhs, rhs = self.violations[0]
            out["first_violation"] = {
                "index": list(idx) if isinstance(idx, tuple) else idx,
                "lhs": str(lhs),
                "rhs": str(rhs),
            }
        return out


def _require(table: CountTable, target: str, genus: int) -> None:
    if table.target != target or table.genus != genus:
        raise DomainError(
            f"expected a {target} genus-{genus} table, got "
            f"{table.target} genus {table.genus}")


def check_integrality(table: CountTable) -> BoundReport:
    """The factorial-scaled counts must be nonnegative integers.

    For plane curves ``n_{g,d} (3d-1+g)!`` and for space curves
    ``n_d(p) (2d+p)!`` recover the classical counts, so any denominator
    left over or any negative value flags a corrupted table.
    """
    report = BoundReport("integrality", (1, table.d_max))
    if table.target == "p3":
        index_iter = ((d, p) for d in range(1, table.d_max + 1)
                      for p in range(0, 2 * d + 1))
    else:
        index_iter = ((d,) for d in range(1, table.d_max + 1))
    for idx in index_iter:
        if table.target == "p3":
            scaled = table.n(*idx) * gmpy2_fac(2 * idx[0] + idx[1])
        else:
            scaled = table.n(idx[0]) * gmpy2_fac(3 * idx[0] - 1 + table.genus)
        if scaled.denominator != 1 or scaled < 0:
            report.violations.append((idx, scaled, "nonnegative integer"))
    return report


def check_p2_sandwich(table: CountTable) -> BoundReport:
    """Exact two-sided growth bound for the genus-0 plane counts.

    Verifies ``(8/5) 27**-d d**(-7/2) <= n_d <= (45/16) (4/15)**d d**(-7/2)``
    for every computed ``d``.  Both sides are compared in the squared form
    ``(64/25) 27**(-2d) <= n_d**2 d**7 <= (2025/256) (4/15)**(2d)``, which is
    a pure rational comparison.
    """
    _require(table, "p2", 0)
    report = BoundReport("p2_sandwich", (1, table.d_max))
    for d in range(1, table.d_max + 1):
        mid = table.n(d) ** 2 * mpz(d) ** 7
        lo = mpq(64, 25 * mpz(27) ** (2 * d))
        hi = mpq(2025, 256) * mpq(4, 15) ** (2 * d)
        if not lo <= mid:
            report.violations.append(((d,), lo, mid))
        if not mid <= hi:
            report.violations.append(((d,), mid, hi))
    return report


def check_catalan_sandwich(table: CountTable) -> BoundReport:
    """Exact binomial-sequence sandwich for the genus-0 plane counts.

    The convolution recursion is dominated below and above by model
    sequences with constant-kernel closed forms, giving
    ``(9/2) C(2d,d) 108**-d d**-3 <= n_d <= (15/4) C(2d,d) 15**-d d**-3``.
    All quantities are rational, so the comparison is exact.
    """
    _require(table, "p2", 0)
    report = BoundReport("p2_catalan_sandwich", (1, table.d_max))
    for d in range(1, table.d_max + 1):
        central = bincoef(2 * d, d)
        lo = mpq(9 * central, 2 * mpz(108) ** d * mpz(d) ** 3)
        hi = mpq(15 * central, 4 * mpz(15) ** d * mpz(d) ** 3)
        n = table.n(d)
        if not lo <= n:
            report.violations.append(((d,), lo, n))
        if not n <= hi:
            report.violations.append(((d,), n, hi))
    return report


def check_stirling(d_max: int) -> BoundReport:
    """Exact central-binomial sandwich ``(16/45) 4**d d**(-1/2) <= C(2d,d)
    <= (3/4) 4**d d**(-1/2)``, compared in the squared form
    ``(256/2025) 16**d <= C(2d,d)**2 d <= (9/16) 16**d``.
    """
    if d_max < 1:
        raise DomainError(f"d_max must be >= 1, got {d_max}")
    report = BoundReport("stirling_sandwich", (1, d_max))
    for d in range(1, d_max + 1):
        mid = bincoef(2 * d, d) ** 2 * d
        pw = mpz(16) ** d
        lo = mpq(256 * pw, 2025)
        hi = mpq(9 * pw, 16)
        if not lo <= mid:
            report.violations.append(((d,), lo, mid))
        if not mid <= hi:
            report.violations.append(((d,), mid, hi))
    return report


def check_p3_coarse_bound(table: CountTable) -> BoundReport:
    """Exact coarse upper bound ``n_d(p) <= 2**(8d) d**-4`` on the full
    space-curve grid."""
    _require(table, "p3", 0)
    report = BoundReport("p3_coarse", (1, table.d_max))
    for d in range(1, table.d_max + 1):
        hi = mpq(mpz(2) ** (8 * d), mpz(d) ** 4)
        for p in range(0, 2 * d + 1):
            n = table.n(d, p)
            if not n <= hi:
                report.violations.append(((d, p), n, hi))
    return report


def p3_majorant_table(d_max: int) -> dict:
    """The positive majorant grid built from the simplified recursion.

    Base 1/2 at (1,0); then ``m_d(0) = 8 * sum m(0) m(0)`` over splittings
    for ``d >= 2`` and ``m_d(p) = m_d(p-1)/2 + 8 * sum sum m m`` for
    ``p >= 1``.  All kernel weights of the true recursion are bounded by
    these constants, so the grid dominates ``d**3 n_d(p)`` termwise.
    """
    if d_max < 1:
        raise DomainError(f"d_max must be >= 1, got {d_max}")
    m = {(1, 0): mpq(1, 2)}
    for d in range(1, d_max + 1):
        if d >= 2:
            total = mpq(0)
            for d1 in range(1, d):
                total += m[(d1, 0)] * m[(d - d1, 0)]
            m[(d, 0)] = 8 * total
        for p in range(1, 2 * d + 1):
            total = mpq(0)
            for d1 in range(1, d):
                d2 = d - d1
                for p1 in range(max(0, p - 2 * d2), min(p, 2 * d1) + 1):
                    total += m[(d1, p1)] * m[(d2, p - p1)]
            m[(d, p)] = mpq(1, 2) * m[(d, p - 1)] + 8 * total
    return m


def p3_majorants(table: CountTable) -> tuple:
    """Builds the majorant grid and verifies ``n_d(p) <= m_d(p) / d**3``
    exactly for every computed entry.  Returns ``(majorants, report)``.
    """
    _require(table, "p3", 0)
    m = p3_majorant_table(table.d_max)
    report = BoundReport("p3_majorant", (1, table.d_max))
    for d in range(1, table.d_max + 1):
        cube = mpz(d) ** 3
        for p in range(0, 2 * d + 1):
            n = table.n(d, p)
            hi = m[(d, p)] / cube
            if not n <= hi:
                report.violations.append(((d, p), n, hi))
    return m, report


def check_ordering_f0(table: CountTable, x_samples, x0,
                      D: Optional[int] = None,
                      p_bits: int = DEFAULT_PBITS) -> BoundReport:
    """Ordering of the genus-0 series and its derivatives below the
    singular point.

    At each sample ``x < x0`` the partial sums satisfy the strict chain
    ``0 < F0 < F0' < F0'' < F0'''`` and ``3 F0'' - 2 F0' < 9``.  All series
    terms are positive, so each partial sum is a rigorous lower bound for
    its series; the chain among partial sums holds termwise (``d >= 1``
    makes ``d**r`` strictly increasing in ``r`` except at ``d = 1``, where
    the inequality comes from the ``d >= 2`` terms), and the ``< 9`` check
    on a lower bound is the only direction the truncation cannot break.
    """
    from .singularity import eval_f0

    if D is None:
        D = table.d_max
    report = BoundReport("f0_ordering", (1, D))
    for x in x_samples:
        if not x < x0:
            raise DomainError(f"sample x={x} is not strictly below x0={x0}")
        vals = [eval_f0(table, x, r, D, p_bits=p_bits).partial_sum
                for r in range(4)]
        chain = [0] + vals
        for r in range(4):
            if not chain[r] < chain[r + 1]:
                report.violations.append(((float(x), r), chain[r],
                                          chain[r + 1]))
        combo = 3 * vals[2] - 2 * vals[1]
        if not combo < 9:
            report.violations.append(((float(x), "3F''-2F'"), combo, 9))
    return report
