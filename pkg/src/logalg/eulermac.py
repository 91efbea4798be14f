"""Logarithmic Euler-MacLaurin machinery.

The identity I = B_0 J + B_1 Delta + sum_{k>=2} (B_k/k!) Delta D^{k-1}
is exact in the operator ring (not merely asymptotic): the sum equals
J**-1 * Delta D**-1 = J**-1 J.  This module checks it symbolically at
any truncation order, evaluates the telescoping lambda-sum closed form,
and runs the two classical numeric instances (harmonic numbers and
Stirling's formula) against exact summation oracles.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .classics import bernoulli_member, bernoulli_number
from .operators import bernoulli_j, forward_difference, identity_op, monomial_op
from .roman import roman
from .series import LogSeries, OrderTag, harmonic, zero_series

__all__ = [
    "EMReport",
    "em_operator_residual",
    "lambda_sum_closed_form",
    "harmonic_identity",
    "stirling_identity",
    "em_apply",
    "first_omitted_term_bound",
]

RatLike = Union[Fraction, int]


@dataclass(frozen=True)
class EMReport:
    truncation_order: int
    residual_lead: int | None
    symbolic_ok: bool
    numeric_abs_err: float | None = None

    def to_obj(self) -> dict:
        return {
            "truncation_order": self.truncation_order,
            "residual_lead": self.residual_lead,
            "symbolic_ok": self.symbolic_ok,
            "numeric_abs_err": self.numeric_abs_err,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_obj())


def em_operator_residual(K: int, *, omit_linear_term: bool = False) -> EMReport:
    """Residual of I - [B_0 J + sum_{k=1..K} (B_k/k!) Delta D^{k-1}] at cap K.

    ``omit_linear_term`` drops the B_1 Delta term; a deliberate negative
    control that leaves a residual at D^1.
    """
    if K < 0:
        raise ValueError("truncation order must be nonnegative")
    delta = forward_difference(K + 1)
    rhs = bernoulli_j(K)  # B_0 = 1
    for k in range(1, K + 1):
        if k == 1 and omit_linear_term:
            continue
        w = bernoulli_number(k) / math.factorial(k)
        if w != 0:
            rhs = rhs + (delta * monomial_op(k - 1, K + 1)).scale(w)
    residual = identity_op(K) - rhs
    lead = None if residual.is_zero() else residual.lead
    ok = residual.is_zero() or residual.lead > K
    return EMReport(K, lead, ok)


def lambda_sum_closed_form(
    order: OrderTag, a: int, k: int, floor: int
) -> tuple[LogSeries, LogSeries]:
    """Both sides of the telescoping sum

        lam_a(x) + lam_a(x+1) + ... + lam_a(x+k)
            = roman(a+1)**-1 [B_{a+1}(x+k+1) - B_{a+1}(x)],

    which telescopes Delta B_{a+1} = roman(a+1) lam_a.  roman(a+1) is
    never zero (roman(0) = 1), so the division is safe.
    """
    if k < 0:
        raise ValueError("summand count k must be nonnegative")
    lam = harmonic(order, a, floor)
    direct = zero_series(order, floor)
    for j in range(k + 1):
        direct = direct + lam.shift(j)
    if order is OrderTag.ZERO and a + 1 < 0:
        bern = zero_series(order, floor)
    else:
        bern = bernoulli_member(order, a + 1, min(floor, a + 1))
    closed = (bern.shift(k + 1) - bern).scale(1 / roman(a + 1)).truncate(floor)
    return direct.truncate(closed.floor), closed


def _bernoulli_weights(cutoff: int) -> list[Fraction]:
    return [bernoulli_number(j) / math.factorial(j) for j in range(cutoff + 1)]


def harmonic_identity(x: RatLike, n: int, order_cutoff: int) -> tuple[Fraction, float, float]:
    """1/x + ... + 1/(x+n) against its Bernoulli expansion.

    The left side is summed in exact rational arithmetic (the oracle);
    the right side evaluates the truncated expansion in floats.  Returns
    (exact_lhs, series_rhs, abs_err).
    """
    x = Fraction(x)
    if x <= 0:
        raise ValueError("x must be positive")
    lhs = sum((1 / (x + j) for j in range(n + 1)), Fraction(0))
    xf, Xf = float(x), float(x + n + 1)
    rhs = math.log(Xf) - math.log(xf)  # B_0 term: the integral of 1/t
    weights = _bernoulli_weights(order_cutoff)
    for j in range(1, order_cutoff + 1):
        # (d/dt)^{j-1} (1/t) = (-1)^{j-1} (j-1)! t^-j
        deriv = (-1.0) ** (j - 1) * math.factorial(j - 1)
        rhs += float(weights[j]) * deriv * (Xf**-j - xf**-j)
    return lhs, rhs, abs(float(lhs) - rhs)


def stirling_identity(x: RatLike, n: int, order_cutoff: int) -> tuple[float, float, float]:
    """log(x (x+1) ... (x+n)) against its Bernoulli expansion.

    The left side is a direct floating-point log summation (the oracle).
    Returns (lhs, series_rhs, abs_err).
    """
    x = Fraction(x)
    if x <= 0:
        raise ValueError("x must be positive")
    xf, Xf = float(x), float(x + n + 1)
    lhs = sum(math.log(float(x + j)) for j in range(n + 1))
    rhs = Xf * math.log(Xf) - xf * math.log(xf) - (n + 1)  # B_0: integral of log t
    weights = _bernoulli_weights(order_cutoff)
    if order_cutoff >= 1:
        rhs += float(weights[1]) * (math.log(Xf) - math.log(xf))
    for j in range(2, order_cutoff + 1):
        # (d/dt)^{j-1} log t = (-1)^j (j-2)! t^{-(j-1)}
        deriv = (-1.0) ** j * math.factorial(j - 2)
        rhs += float(weights[j]) * deriv * (Xf ** -(j - 1) - xf ** -(j - 1))
    return lhs, rhs, abs(lhs - rhs)


def first_omitted_term_bound(x: float, n: int, order_cutoff: int, *, log_case: bool = False) -> float:
    """Size of the first Bernoulli term beyond the cutoff, times a safety
    factor of 10; the run-time acceptance threshold for the numeric checks."""
    k = order_cutoff + 1
    while bernoulli_number(k) == 0:
        k += 1
    w = abs(float(bernoulli_number(k))) / math.factorial(k)
    X = x + n + 1
    if log_case:
        deriv = math.factorial(k - 2)
        scale = x ** -(k - 1) + X ** -(k - 1)
    else:
        deriv = math.factorial(k - 1)
        scale = x**-k + X**-k
    return 10.0 * w * deriv * scale


def em_apply(p: LogSeries, n: int, K: int) -> LogSeries:
    """Difference between sum_{j=0..n} E^j p and its Euler-MacLaurin form

        B_0 (E^{n+1}-I) D^{-1} p + sum_{k=1..K} (B_k/k!) (E^{n+1}-I) D^{k-1} p.

    The difference vanishes identically above the returned floor once
    K >= top(p) - floor; terms beyond K only reach degrees <= top(p) - K.
    """
    if p.order is OrderTag.ZERO:
        raise ValueError("the integral term needs D**-1: generic order required")
    lhs = zero_series(p.order, p.floor)
    for j in range(n + 1):
        lhs = lhs + p.shift(j)
    anti = p.antiderivative()
    rhs = anti.shift(n + 1) - anti
    q = p
    for k in range(1, K + 1):
        w = bernoulli_number(k) / math.factorial(k)
        if w != 0:
            rhs = rhs + (q.shift(n + 1) - q).scale(w)
        q = q.derivative()
    diff = lhs - rhs
    top = p.top_degree()
    if top is not None:
        diff = diff.truncate(max(diff.floor, top - K + 1))
    return diff
