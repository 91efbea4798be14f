"""Floating-point interpretation of harmonic logarithms.

Two iterated-log levels are supported:

* level 0:  lam_n(x) = x**n for n >= 0, and 0 for n < 0 (polynomials).
* level 1:  lam_n(x) = x**n (log x - h_n) for n >= 0, where h_n is the
  n-th harmonic number, and lam_n(x) = x**n for n < 0.

The harmonic-number correction at level 1 is the unique choice for which
the symbolic rule D lam_n = roman(n) lam_{n-1} survives numerically with
lam_0 = log x and lam_{-1} = 1/x; finite_diff_check enforces exactly
that.  Floats appear only here, never in the symbolic engine.
"""

from __future__ import annotations

import math

from .series import LogSeries, OrderTag
from .roman import roman

__all__ = ["eval_lambda", "eval_series", "finite_diff_check"]

_LEVELS = (0, 1)


def _harmonic_number(n: int) -> float:
    return sum(1.0 / j for j in range(1, n + 1))


def eval_lambda(level: int, n: int, x: float) -> float:
    if level not in _LEVELS:
        raise ValueError("only iterated-log levels 0 and 1 are evaluated numerically")
    if x <= 0:
        raise ValueError("x must be positive")
    if n < 0:
        return 0.0 if level == 0 else x**n
    if level == 0:
        return x**n
    return x**n * (math.log(x) - _harmonic_number(n))


def eval_series(p: LogSeries, level: int, x: float) -> tuple[float, float]:
    """Evaluate a truncated series; returns (value, trunc_bound).

    trunc_bound is a crude tail indicator built from the last retained
    coefficient, not a certified bound.
    """
    if p.order is OrderTag.ZERO and level != 0:
        raise ValueError("polynomial-order series evaluate at level 0 only")
    if x <= 0:
        raise ValueError("x must be positive")
    value = math.fsum(float(c) * eval_lambda(level, d, x) for d, c in p.coeffs.items())
    if p.coeffs:
        last = abs(float(p.coeffs[min(p.coeffs)]))
    else:
        last = 0.0
    bound = last * x**p.floor * max(1.0, math.log(x)) if x > 1 else float("nan")
    return value, bound


def finite_diff_check(level: int, n: int, x: float, h: float) -> float:
    """|central difference of lam_n at x minus roman(n) lam_{n-1}(x)|."""
    approx = (eval_lambda(level, n, x + h) - eval_lambda(level, n, x - h)) / (2 * h)
    exact = float(roman(n)) * eval_lambda(level, n - 1, x)
    return abs(approx - exact)
