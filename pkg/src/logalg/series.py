"""Truncated formal power series of logarithmic type.

A series lives at one of two orders:

* ``OrderTag.ZERO`` -- ordinary polynomials.  The basis element lam_a is
  x**a for a >= 0 and vanishes for a < 0.
* ``OrderTag.GENERIC`` -- any fixed nonzero order.  Degrees range over
  all integers, bounded above; every identity implemented here has the
  same coefficients for every nonzero order, so a single tag suffices.

Coefficients are kept in a finite map degree -> Fraction, together with
an *exactness floor*: degrees at or above the floor that are absent are
exactly zero, degrees below the floor were truncated away and are
unknown.  All operations are pure and propagate the floor so that every
retained coefficient is provably exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterator, Mapping, Union

from .roman import roman, roman_coeff

__all__ = ["OrderTag", "LogSeries", "harmonic", "zero_series", "agrees"]

RatLike = Union[Fraction, int]


class OrderTag(Enum):
    ZERO = "zero"
    GENERIC = "generic"


@dataclass(frozen=True)
class LogSeries:
    order: OrderTag
    floor: int
    coeffs: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {d: Fraction(c) for d, c in self.coeffs.items() if c != 0}
        if self.order is OrderTag.ZERO:
            if self.floor < 0:
                object.__setattr__(self, "floor", max(self.floor, 0))
            if any(d < 0 for d in clean):
                raise ValueError("polynomial-order series cannot carry negative degrees")
        if any(d < self.floor for d in clean):
            raise ValueError("coefficient below the exactness floor")
        object.__setattr__(self, "coeffs", clean)

    # -- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def top_degree(self) -> int | None:
        """Largest degree with a nonzero coefficient, or None for the zero series."""
        return max(self.coeffs) if self.coeffs else None

    def coeff(self, a: int) -> Fraction:
        if a < self.floor:
            raise ValueError(f"degree {a} is below the exactness floor {self.floor}")
        return self.coeffs.get(a, Fraction(0))

    def items(self) -> Iterator[tuple[int, Fraction]]:
        """(degree, coefficient) pairs in descending degree order."""
        return iter(sorted(self.coeffs.items(), reverse=True))

    # -- vector-space structure --------------------------------------

    def __add__(self, other: "LogSeries") -> "LogSeries":
        if self.order is not other.order:
            raise ValueError("cannot add series of different orders")
        floor = max(self.floor, other.floor)
        out = {d: c for d, c in self.coeffs.items() if d >= floor}
        for d, c in other.coeffs.items():
            if d >= floor:
                out[d] = out.get(d, Fraction(0)) + c
        return LogSeries(self.order, floor, out)

    def __sub__(self, other: "LogSeries") -> "LogSeries":
        return self + other.scale(-1)

    def scale(self, c: RatLike) -> "LogSeries":
        c = Fraction(c)
        return LogSeries(self.order, self.floor, {d: c * v for d, v in self.coeffs.items()})

    def __neg__(self) -> "LogSeries":
        return self.scale(-1)

    # -- calculus -----------------------------------------------------

    def derivative(self) -> "LogSeries":
        """Apply D: the coefficient at m becomes roman(m+1) * c_{m+1}.

        At polynomial order the constant term simply dies; at generic
        order D lam_0 = lam_{-1}, the hallmark of the logarithmic algebra.
        """
        out = {d - 1: roman(d) * c for d, c in self.coeffs.items()}
        if self.order is OrderTag.ZERO:
            out.pop(-1, None)
        return LogSeries(self.order, self.floor - 1, out)

    def antiderivative(self) -> "LogSeries":
        """Apply D**-1.  Only defined at generic order, where D is invertible."""
        if self.order is OrderTag.ZERO:
            raise ValueError("D is not invertible on polynomial-order series")
        return LogSeries(
            self.order, self.floor + 1, {d + 1: c / roman(d + 1) for d, c in self.coeffs.items()}
        )

    def shift(self, z: RatLike) -> "LogSeries":
        """Apply the shift E^z = sum_k z^k D^k / k!.

        On the basis, E^z lam_a = sum_{k>=0} rc(a,k) z^k lam_{a-k}; since
        the top degree is finite, every retained coefficient is a finite
        exact sum and the floor is preserved.
        """
        z = Fraction(z)
        if z == 0:
            return self
        out: dict[int, Fraction] = {}
        for a, c in self.coeffs.items():
            zk = Fraction(1)
            for k in range(a - self.floor + 1):
                if zk != 0:
                    target = a - k
                    out[target] = out.get(target, Fraction(0)) + c * roman_coeff(a, k) * zk
                zk *= z
        if self.order is OrderTag.ZERO:
            out = {d: v for d, v in out.items() if d >= 0}
        return LogSeries(self.order, self.floor, out)

    def eval_functional(self) -> Fraction:
        """The augmentation: the coefficient of lam_0.

        Requires floor <= 0, otherwise the answer would live in the
        truncated-away region.
        """
        if self.floor > 0:
            raise ValueError("floor > 0: the lam_0 coefficient was truncated away")
        return self.coeffs.get(0, Fraction(0))

    def truncate(self, new_floor: int) -> "LogSeries":
        """Raise the exactness floor, dropping coefficients below it."""
        floor = max(self.floor, new_floor)
        return LogSeries(self.order, floor, {d: c for d, c in self.coeffs.items() if d >= floor})

    # -- serialization ------------------------------------------------

    def to_obj(self) -> dict:
        return {
            "order": self.order.value,
            "floor": self.floor,
            "coeffs": [[d, str(c)] for d, c in self.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_obj())

    @classmethod
    def from_obj(cls, obj: dict) -> "LogSeries":
        try:
            order = OrderTag(obj["order"])
            coeffs = {int(d): Fraction(c) for d, c in obj["coeffs"]}
            floor = int(obj["floor"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed series object: {exc}") from exc
        return cls(order, floor, coeffs)

    @classmethod
    def from_json(cls, text: str) -> "LogSeries":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid series JSON: {exc}") from exc
        return cls.from_obj(obj)


def zero_series(order: OrderTag, floor: int) -> LogSeries:
    return LogSeries(order, floor, {})


def harmonic(order: OrderTag, a: int, floor: int) -> LogSeries:
    """The harmonic logarithm lam_a as a one-term series.

    At polynomial order, lam_a = 0 for a < 0.
    """
    if order is OrderTag.ZERO and a < 0:
        return zero_series(order, floor)
    if floor > a:
        raise ValueError(f"floor {floor} lies above the requested degree {a}")
    return LogSeries(order, floor, {a: Fraction(1)})


def agrees(p: LogSeries, q: LogSeries) -> bool:
    """Exact coefficient agreement on the region where both are exact."""
    if p.order is not q.order:
        return False
    fl = max(p.floor, q.floor)
    left = {d: c for d, c in p.coeffs.items() if d >= fl}
    right = {d: c for d, c in q.coeffs.items() if d >= fl}
    return left == right
