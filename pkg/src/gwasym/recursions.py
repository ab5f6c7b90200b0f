"""Exact recursions for rational-normalized curve counts.

Three families are implemented, all in exact rational arithmetic:

* plane curves: the Kontsevich recursion for genus 0 and the
  Eguchi-Hori-Xiong recursion for genus 1, in the normalization
  ``n_{g,d} = N_{g,d} / (3d - 1 + g)!``;
* space lines through point/line constraints: a two-index recursion for
  genus-0 counts ``n_d(p) = N_d(p) / (2d + p)!`` on the grid
  ``0 <= p <= 2d``, where ``N_d(p)`` is the number of degree-``d`` rational
  space curves through ``p`` general points and ``2d - p`` general lines;
* a family of model sequences with convolution kernel
  ``a * (d1 d2 / d)**k``, whose closed form is known and serves as a
  cross-check for the asymptotic machinery.

Counts grow super-exponentially in the classical normalization, so tables
store the rational ``n`` values; integer counts are recovered on demand by
multiplying back the factorial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import gmpy2
from gmpy2 import mpq, mpz

from .errors import DomainError

ProgressFn = Optional[Callable[[int, int], None]]


def _tick(progress: ProgressFn, d: int, d_max: int) -> None:
    if progress is not None and (d % 10 == 0 or d == d_max):
        progress(d, d_max)


@dataclass
class CountTable:
    """A table of exact normalized counts up to degree ``d_max``.

    ``values`` maps ``d -> mpq`` for plane-curve tables and model tables,
    and ``(d, p) -> mpq`` for space-curve tables.  ``meta`` carries
    target-specific parameters (e.g. the model kernel) and is not part of
    equality comparisons beyond its content.
    """

    target: str  # "p2", "p3", or "model"
    genus: int
    d_max: int
    values: dict
    meta: dict = field(default_factory=dict)

    def n(self, d: int, p: Optional[int] = None) -> mpq:
        """Normalized count; ``p`` is required for (and only for) p3."""
        if self.target == "p3":
            if p is None:
                raise DomainError("p3 tables are indexed by (d, p)")
            return self.values[(d, p)]
        if p is not None:
            raise DomainError(f"{self.target} tables are indexed by d only")
        return self.values[d]

    def N(self, d: int, p: Optional[int] = None):
        """Integer count recovered from the normalized value.

        Raises :class:`DomainError` for model tables, which have no
        factorial normalization.
        """
        if self.target == "p2":
            count = self.n(d) * gmpy2.fac(3 * d - 1 + self.genus)
        elif self.target == "p3":
            count = self.n(d, p) * gmpy2.fac(2 * d + p)
        else:
            raise DomainError("model tables carry no integer normalization")
        if count.denominator != 1:
            raise DomainError(f"count at d={d}, p={p} is not an integer")
        return mpz(count)

    def sequence(self, d_start: int = 1) -> list:
        """The values ``n(d_start), ..., n(d_max)`` for single-index tables."""
        if self.target == "p3":
            raise DomainError("p3 tables have no single-index sequence")
        return [self.values[d] for d in range(d_start, self.d_max + 1)]


def p2_kernel(d1: int, d2: int) -> mpq:
    """Kontsevich convolution weight for splitting degree ``d1 + d2``."""
    if d1 < 1 or d2 < 1:
        raise DomainError("kernel needs positive part degrees (the total "
                          "degree must be at least 2)")
    d = d1 + d2
    num = d1 * d2 * (3 * d1 * d2 * (d + 2) - 2 * d * d)
    den = 2 * (3 * d - 3) * (3 * d - 2) * (3 * d - 1)
    return mpq(num, den)


def p2_genus0(d_max: int, progress: ProgressFn = None) -> CountTable:
    """Genus-0 plane-curve counts ``n_{0,d}`` for ``1 <= d <= d_max``."""
    if d_max < 1:
        raise DomainError(f"d_max must be >= 1, got {d_max}")
    n = {1: mpq(1, 2)}
    for d in range(2, d_max + 1):
        total = mpq(0)
        for d1 in range(1, d):
            total += p2_kernel(d1, d - d1) * n[d1] * n[d - d1]
        n[d] = total
        _tick(progress, d, d_max)
    return CountTable("p2", 0, d_max, n)


def p2_genus1(d_max: int, genus0: Optional[CountTable] = None,
              progress: ProgressFn = None) -> CountTable:
    """Genus-1 plane-curve counts ``n_{1,d}`` via Eguchi-Hori-Xiong.

    The recursion needs the genus-0 table through the same degree; it is
    computed on the fly when not supplied.  No genus-1 seed is needed:
    the ``d = 1`` term of the sum involves only ``n_{1,d'}`` with
    ``d' < d``, and ``n_{1,1} = 0`` falls out of the ``d = 1`` instance.
    """
    if genus0 is None:
        genus0 = p2_genus0(d_max)
    if genus0.target != "p2" or genus0.genus != 0 or genus0.d_max < d_max:
        raise DomainError("genus0 must be a p2 genus-0 table through d_max")
    n0 = genus0.values
    n1 = {}
    for d in range(1, d_max + 1):
        total = mpq((d - 1) * (d - 2), 216) * n0[d]
        conv = mpq(0)
        for d0 in range(1, d):
            d1 = d - d0
            conv += (3 * d0 * d0 - 2 * d0) * d1 * n0[d0] * n1[d1]
        n1[d] = total + conv / (27 * d)
        _tick(progress, d, d_max)
    return CountTable("p2", 1, d_max, n1)


def _binom(n: int, k: int) -> int:
    """Binomial coefficient extended by zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def p3_kernel(d1: int, d2: int, p1: int, p2: int) -> mpq:
    """Convolution weight for the interior space-curve recursion.

    Defined for ``p1 <= 2 d1``, ``p2 <= 2 d2`` and ``1 < p1 + p2 < 2 (d1 + d2)``;
    out-of-range binomials vanish.  The weight may be negative, but it is
    always bounded by ``8 d1^3 d2^3 / d^3`` in absolute value.
    """
    d = d1 + d2
    p = p1 + p2
    if d1 < 1 or d2 < 1 or p1 < 0 or p2 < 0:
        raise DomainError("degrees must be positive and p indices nonnegative")
    if p1 > 2 * d1 or p2 > 2 * d2 or not (1 < p < 2 * d):
        raise DomainError(
            f"kernel undefined at (d1,d2,p1,p2)=({d1},{d2},{p1},{p2})")
    pref = mpq(gmpy2.fac(2 * d1 + p1) * gmpy2.fac(2 * d2 + p2),
               gmpy2.fac(2 * d + p))
    core = d2 * _binom(2 * d - p - 1, 2 * d1 - p1 - 1) * (
        d1 * d1 * _binom(2 * p - 2, 2 * p1)
        - d2 * d2 * _binom(2 * p - 2, 2 * p2))
    return pref * core


def p3_genus0(d_max: int, progress: ProgressFn = None) -> CountTable:
    """Genus-0 space-curve counts ``n_d(p)`` on ``0 <= p <= 2d``.

    Each degree is filled in the order ``p = 0`` (its own bilinear sum in
    the ``p <= 1`` entries of lower degree), ``p = 1`` (a linear term in
    ``n_d(0)`` plus a similar bilinear sum), rising ``2 <= p <= 2d - 1``
    (linear term plus the :func:`p3_kernel` double convolution), then the
    top boundary ``p = 2d`` (its own bilinear sum over top-boundary
    entries).  Every right-hand side then only involves entries already
    present.
    """
    if d_max < 1:
        raise DomainError(f"d_max must be >= 1, got {d_max}")
    n = {(1, 0): mpq(1, 2)}

    def interior_conv(d: int, p: int) -> mpq:
        total = mpq(0)
        for d1 in range(1, d):
            d2 = d - d1
            for p1 in range(max(0, p - 2 * d2), min(p, 2 * d1) + 1):
                total += (p3_kernel(d1, d2, p1, p - p1)
                          * n[(d1, p1)] * n[(d2, p - p1)])
        return total

    for d in range(1, d_max + 1):
        if d >= 2:
            total = mpq(0)
            for d1 in range(1, d):
                d2 = d - d1
                w = mpq((d2 - d1) * d1 * d1 * d2 * (2 * d2 + 1),
                        d * (d - 1) * (2 * d - 1))
                total += w * n[(d1, 0)] * n[(d2, 1)]
            n[(d, 0)] = total
        lin = mpq(d, 2 * d + 1) * n[(d, 0)]
        for d1 in range(1, d):
            d2 = d - d1
            w = mpq(d1 ** 3 * d2 * (2 * d2 + 1),
                    d * (2 * d - 1) * (2 * d + 1))
            lin += w * n[(d1, 0)] * n[(d2, 1)]
        n[(d, 1)] = lin
        for p in range(2, 2 * d):
            n[(d, p)] = (mpq(d, 2 * d + p) * n[(d, p - 1)]
                         + interior_conv(d, p))
        top = mpq(1, 2) * n[(d, 2 * d - 1)]
        for d1 in range(1, d):
            d2 = d - d1
            w = mpq(d1 * d2 * (4 * d * d1 * d2 - d * d + 2 * d1 * d2),
                    2 * d * (2 * d - 1) * (4 * d - 1))
            top += w * n[(d1, 2 * d1)] * n[(d2, 2 * d2)]
        n[(d, 2 * d)] = top
        _tick(progress, d, d_max)
    return CountTable("p3", 0, d_max, n)


@dataclass(frozen=True)
class ModelSpec:
    """Parameters of a model sequence: kernel ``a (d1 d2 / d)**k`` with
    initial value ``n1``."""

    a: mpq
    k: int
    n1: mpq

    def __post_init__(self):
        if self.k < 0:
            raise DomainError(f"model exponent k must be >= 0, got {self.k}")


def model_closed_form(spec: ModelSpec, d: int) -> mpq:
    """Closed form ``Catalan(d-1) a**(d-1) n1**d / d**k``."""
    catalan = mpq(_binom(2 * d - 2, d - 1), d)
    return catalan * spec.a ** (d - 1) * spec.n1 ** d / mpz(d) ** spec.k


def model_recursion(spec: ModelSpec, d_max: int,
                    progress: ProgressFn = None) -> CountTable:
    """Model sequence by direct convolution, the oracle for the closed form."""
    if d_max < 1:
        raise DomainError(f"d_max must be >= 1, got {d_max}")
    n = {1: spec.n1}
    for d in range(2, d_max + 1):
        total = mpq(0)
        for d1 in range(1, d):
            d2 = d - d1
            total += spec.a * mpq(d1 * d2, d) ** spec.k * n[d1] * n[d2]
        n[d] = total
        _tick(progress, d, d_max)
    meta = {"a": str(spec.a), "k": spec.k, "n1": str(spec.n1)}
    return CountTable("model", 0, d_max, n, meta)
