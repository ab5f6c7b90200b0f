"""Shared numeric kinds and helpers.

Exact arithmetic uses ``gmpy2.mpq`` (aliased :data:`ExactRational`) and big
floats use ``gmpy2.mpfr`` (aliased :data:`BigReal`) at a caller-chosen
precision, default 256 bits.  Coefficients of half-integer powers of the
local variable are stored as real numbers together with a parity flag, so
that no complex arithmetic is ever needed: the coefficient of ``z**(j/2)``
with odd ``j`` is a pure-imaginary number ``i * c`` and we store the real
``c``.  Multiplying two odd-parity coefficients therefore picks up a factor
``i * i = -1``, which :func:`product_sign` encodes.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import gmpy2
from gmpy2 import mpfr, mpq, mpz

from .errors import PrecisionError

ExactRational = mpq
BigReal = mpfr

DEFAULT_PBITS = 256
MIN_PBITS = 64


def workprec(p_bits: int):
    """Context manager setting the gmpy2 working precision to ``p_bits``.

    Raises :class:`PrecisionError` below :data:`MIN_PBITS`; results with
    fewer than 64 bits would be noise for the series manipulations done here.
    """
    if p_bits < MIN_PBITS:
        raise PrecisionError(
            f"working precision {p_bits} bits is below the minimum {MIN_PBITS}"
        )
    return gmpy2.context(precision=p_bits)


def rational_to_real(q, p_bits: int = DEFAULT_PBITS) -> BigReal:
    """Round an exact rational (or int) to a BigReal with ``p_bits`` bits."""
    if p_bits < MIN_PBITS:
        raise PrecisionError(
            f"working precision {p_bits} bits is below the minimum {MIN_PBITS}"
        )
    return mpfr(q, p_bits)


@functools.lru_cache(maxsize=None)
def sqrt_pi(p_bits: int = DEFAULT_PBITS) -> BigReal:
    """sqrt(pi) at ``p_bits`` bits, cached per precision."""
    with workprec(p_bits + 8):
        v = gmpy2.sqrt(gmpy2.const_pi())
    return mpfr(v, p_bits)


def gamma_half(n: int, p_bits: int = DEFAULT_PBITS) -> BigReal:
    """Gamma(n/2) for a positive integer ``n``, via closed forms.

    Even ``n``: Gamma(k) = (k-1)!.  Odd ``n = 2m+1``:
    Gamma(m + 1/2) = (2m)! / (4**m m!) * sqrt(pi).
    Only integer factorials and one cached sqrt(pi) are involved, so the
    result is correctly rounded to well under an ulp at ``p_bits``.
    """
    if n <= 0:
        raise ValueError(f"gamma_half requires a positive integer, got {n}")
    if n % 2 == 0:
        return rational_to_real(gmpy2.fac(n // 2 - 1), p_bits)
    m = (n - 1) // 2
    ratio = mpq(gmpy2.fac(2 * m), mpz(4) ** m * gmpy2.fac(m))
    with workprec(p_bits + 8):
        v = mpfr(ratio) * sqrt_pi(p_bits + 8)
    return mpfr(v, p_bits)


def product_sign(i: int, j: int) -> int:
    """Sign contributed when coefficients of parity ``i`` and ``j`` multiply.

    Both odd means both carry a factor ``i`` (the imaginary unit), whose
    product is ``-1``; every other combination is real times real or real
    times imaginary and contributes ``+1``.
    """
    return -1 if (i % 2 == 1 and j % 2 == 1) else 1


@dataclass(frozen=True)
class SignedHalfPowerCoeff:
    """Coefficient of ``z**(index/2)`` in a half-power series.

    ``value`` is the stored real representative: the actual coefficient is
    ``value`` itself for even ``index`` and ``i * value`` for odd ``index``.
    """

    index: int
    value: BigReal

    @property
    def is_imaginary(self) -> bool:
        return self.index % 2 == 1

    def real_axis_value(self, u: BigReal) -> BigReal:
        """Contribution to the series evaluated at ``z = -u`` for ``u > 0``,
        on the branch where ``z**(1/2) = -i * sqrt(u)``.

        There ``z**(j/2) = (-i)**j * u**(j/2)``; combined with the stored
        ``i**j`` convention for odd indices the term is real and equals
        ``(-1)**(j // 2) * value * u**(j/2)`` for every parity.
        """
        sign = -1 if (self.index // 2) % 2 == 1 else 1
        if self.index % 2 == 0:
            return sign * self.value * u ** (self.index // 2)
        return sign * self.value * gmpy2.sqrt(u) * u ** (self.index // 2)
