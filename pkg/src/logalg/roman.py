"""Roman numbers, factorials, and coefficients.

The Roman value of an integer n is n itself, except that the Roman value
of 0 is 1.  Extending the ordinary factorial through the recurrence
rf(n) = roman(n) * rf(n-1) with rf(0) = 1 yields a factorial defined for
*all* integers; for negative n it takes the closed form

    rf(n) = (-1)**(-n-1) / (-n-1)!        (n < 0)

These scalars drive every formula in the logarithmic algebra: the
derivative acts on the harmonic-logarithm basis by D lam_a = roman(a)
lam_{a-1}, and the binomial-type identities use the Roman coefficient
rc(a, b) = rf(a) / (rf(b) * rf(a-b)), which is defined (and generally
nonzero) even when a < b or either index is negative.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

__all__ = ["roman", "roman_factorial", "roman_coeff", "roman_ratio"]


def roman(n: int) -> Fraction:
    """The Roman value of n: n itself, except roman(0) == 1."""
    return Fraction(n) if n != 0 else Fraction(1)


def roman_factorial(n: int) -> Fraction:
    """The Roman factorial rf(n), defined for every integer n.

    Agrees with n! for n >= 0.  Anchored at rf(0) = 1 and extended
    downward by rf(n-1) = rf(n) / roman(n); e.g. rf(-1) = 1,
    rf(-2) = -1, rf(-3) = 1/2.
    """
    if n >= 0:
        return Fraction(factorial(n))
    m = -n - 1
    return Fraction((-1) ** m, factorial(m))


def roman_ratio(a: int, b: int) -> Fraction:
    """rf(a)/rf(b), computed as a telescoping product of Roman values.

    Never forms the two factorials separately, so it stays cheap for
    large |a|, |b| of like sign.
    """
    if a >= b:
        prod = Fraction(1)
        for k in range(b + 1, a + 1):
            prod *= roman(k)
        return prod
    return 1 / roman_ratio(b, a)


def roman_coeff(a: int, b: int) -> Fraction:
    """The Roman (logarithmic binomial) coefficient rf(a)/(rf(b)*rf(a-b))."""
    return roman_ratio(a, b) / roman_factorial(a - b)
