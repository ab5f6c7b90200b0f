"""gwasym: exact curve counts with asymptotic singularity analysis.

Exact convolution recursions for plane- and space-curve counts, rigorous
rational verification of their growth bounds, numerical reconstruction of
the generating-function singularity (location, half-power expansion
coefficients, asymptotic transfer), and empirical conjecture checks.
"""

__version__ = "0.1.0"
