"""Independent oracles for the exact recursions.

These transcriptions deliberately avoid the package's code paths: they use
``fractions.Fraction`` instead of gmpy2 and, where an equivalent algebraic
form of a kernel exists, the other form.  Agreement between package and
oracle therefore catches transcription slips in either place.
"""

from fractions import Fraction
from math import comb, factorial

# Classical counts of degree-d rational plane curves through 3d-1 points.
CLASSICAL_P2_G0 = [1, 1, 12, 620, 87304, 26312976, 14616808192]

# Classical genus-1 plane counts through 3d points (zero for d <= 2).
CLASSICAL_P2_G1 = [0, 0, 1, 225, 87192, 57435240]

# Classical space-curve counts: (d, p) -> N, with 2d-p points and 2p lines.
CLASSICAL_P3 = {(1, 0): 1, (1, 1): 1, (1, 2): 2, (2, 4): 92, (3, 6): 80160}


def kontsevich_fraction(d_max):
    """Genus-0 plane recursion with the factored kernel form
    ``d1 d2 ((3d1-2)(3d2-2)(d+2) + 8(d-1)) / (6 (3d-3)(3d-2)(3d-1))``."""
    n = {1: Fraction(1, 2)}
    for d in range(2, d_max + 1):
        total = Fraction(0)
        for d1 in range(1, d):
            d2 = d - d1
            ker = Fraction(
                d1 * d2 * ((3 * d1 - 2) * (3 * d2 - 2) * (d + 2)
                           + 8 * (d - 1)),
                6 * (3 * d - 3) * (3 * d - 2) * (3 * d - 1))
            total += ker * n[d1] * n[d2]
        n[d] = total
    return n


def genus1_fraction(d_max):
    """Genus-1 plane recursion transcribed over Fractions."""
    n0 = kontsevich_fraction(d_max)
    n1 = {}
    for d in range(1, d_max + 1):
        acc = Fraction((d - 1) * (d - 2), 216) * n0[d]
        s = Fraction(0)
        for d0 in range(1, d):
            s += (3 * d0 * d0 - 2 * d0) * (d - d0) * n0[d0] * n1[d - d0]
        n1[d] = acc + s / (27 * d)
    return n1


def _b(n, k):
    return comb(n, k) if 0 <= k <= n else 0


def p3_fraction(d_max):
    """Space-curve grid recursion transcribed over Fractions."""
    n = {(1, 0): Fraction(1, 2)}

    def kern(d1, d2, p1, p2):
        d, p = d1 + d2, p1 + p2
        pref = Fraction(factorial(2 * d1 + p1) * factorial(2 * d2 + p2),
                        factorial(2 * d + p))
        return pref * d2 * _b(2 * d - p - 1, 2 * d1 - p1 - 1) * (
            d1 ** 2 * _b(2 * p - 2, 2 * p1)
            - d2 ** 2 * _b(2 * p - 2, 2 * p2))

    for d in range(1, d_max + 1):
        if d >= 2:
            n[(d, 0)] = sum(
                (Fraction((d2 - d1) * d1 ** 2 * d2 * (2 * d2 + 1),
                          d * (d - 1) * (2 * d - 1))
                 * n[(d1, 0)] * n[(d2, 1)]
                 for d1 in range(1, d) for d2 in [d - d1]),
                Fraction(0))
        n[(d, 1)] = Fraction(d, 2 * d + 1) * n[(d, 0)] + sum(
            (Fraction(d1 ** 3 * d2 * (2 * d2 + 1),
                      d * (2 * d - 1) * (2 * d + 1))
             * n[(d1, 0)] * n[(d2, 1)]
             for d1 in range(1, d) for d2 in [d - d1]),
            Fraction(0))
        for p in range(2, 2 * d):
            total = Fraction(d, 2 * d + p) * n[(d, p - 1)]
            for d1 in range(1, d):
                d2 = d - d1
                for p1 in range(max(0, p - 2 * d2), min(p, 2 * d1) + 1):
                    total += kern(d1, d2, p1, p - p1) * n[(d1, p1)] \
                        * n[(d2, p - p1)]
            n[(d, p)] = total
        top = Fraction(1, 2) * n[(d, 2 * d - 1)]
        for d1 in range(1, d):
            d2 = d - d1
            top += (Fraction(d1 * d2 * (4 * d * d1 * d2 - d * d
                                        + 2 * d1 * d2),
                             2 * d * (2 * d - 1) * (4 * d - 1))
                    * n[(d1, 2 * d1)] * n[(d2, 2 * d2)])
        n[(d, 2 * d)] = top
    return n
