"""Independent brute-force oracles shared across test modules."""

from fractions import Fraction
from math import comb


def classical_bernoulli(n):
    """B_0..B_n by the classical recurrence sum_k C(n+1,k) B_k = 0."""
    out = [Fraction(1)]
    for m in range(1, n + 1):
        out.append(-sum(Fraction(comb(m + 1, k)) * out[k] for k in range(m)) / (m + 1))
    return out
