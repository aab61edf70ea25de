"""Truncated formal power series over exact rationals.

A :class:`TruncatedSeries` holds coefficients c_0..c_N of a series
sum c_n t^n taken modulo t^(N+1).  All arithmetic stays below the
truncation order and all coefficients are exact rationals, so every
identity checked through this module is verified exactly mod t^(N+1).

Coefficient extraction in exponential-generating-function form
(n! * c_n) is the reference computation path for every number family
in this package.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

from .exact import Rational, falling_factorial_deg

_Scalar = Union[int, Fraction]


class TruncatedSeries:
    """Immutable dense series mod t^(order+1)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[Rational], order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            if not cs:
                raise ValueError("need at least the constant coefficient")
            order = len(cs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        if len(cs) < order + 1:
            cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        elif len(cs) > order + 1:
            cs = cs[: order + 1]
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def monomial(cls, degree: int, order: int, coeff: Rational = 1) -> "TruncatedSeries":
        cs = [Fraction(0)] * (order + 1)
        if 0 <= degree <= order:
            cs[degree] = Fraction(coeff)
        return cls(cs, order)

    def coefficient(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError("coefficient %d beyond truncation order %d" % (n, self.order))
        return self.coeffs[n]

    def _check_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(
                "mismatched truncation orders: %d vs %d" % (self.order, other.order)
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        return TruncatedSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        return TruncatedSeries(
            [a - b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check_order(other)
            n = self.order
            out = [Fraction(0)] * (n + 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
            return TruncatedSeries(out, n)
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([a * other for a in self.coeffs], self.order)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TruncatedSeries":
        if not isinstance(k, int) or k < 0:
            raise ValueError("series power needs an integer exponent >= 0")
        result = TruncatedSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if self.order > 5 else ""
        return "TruncatedSeries([%s%s], order=%d)" % (head, tail, self.order)


def exp_series(gamma: Rational, order: int) -> TruncatedSeries:
    """e^(gamma*t): coefficients gamma^n / n!."""
    g = Fraction(gamma)
    cs = []
    p = Fraction(1)
    for n in range(order + 1):
        cs.append(p / math.factorial(n))
        p *= g
    return TruncatedSeries(cs, order)


def degenerate_exp(x_param: Rational, lam: Rational, order: int) -> TruncatedSeries:
    """Degenerate exponential: coefficient of t^n is (x)_{n,lam} / n!.

    (x)_{n,lam} is the degenerate falling factorial; lam = 0 recovers
    e^(x*t) exactly.
    """
    cs = [
        Fraction(falling_factorial_deg(x_param, n, lam)) / math.factorial(n)
        for n in range(order + 1)
    ]
    return TruncatedSeries(cs, order)


def incomplete_exp(ell: int, order: int, strict: bool = False) -> TruncatedSeries:
    """Exponential truncated at degree ell (or ell-1 when strict).

    Coefficients 1/i! for i up to the bound, zero beyond; the result is
    a polynomial even when order exceeds the bound.
    """
    if ell < 0:
        raise ValueError("incomplete_exp needs ell >= 0")
    top = ell - 1 if strict else ell
    cs = [
        Fraction(1, math.factorial(i)) if i <= top else Fraction(0)
        for i in range(order + 1)
    ]
    return TruncatedSeries(cs, order)


def incomplete_degenerate_exp(
    x_param: Rational, lam: Rational, ell: int, order: int
) -> TruncatedSeries:
    """Degenerate exponential cut off after degree ell."""
    if ell < 0:
        raise ValueError("incomplete_degenerate_exp needs ell >= 0")
    cs = [
        Fraction(falling_factorial_deg(x_param, n, lam)) / math.factorial(n)
        if n <= ell
        else Fraction(0)
        for n in range(order + 1)
    ]
    return TruncatedSeries(cs, order)


def egf_coeff(series: TruncatedSeries, n: int) -> Fraction:
    """n! times the coefficient of t^n: the number encoded at index n."""
    return series.coefficient(n) * math.factorial(n)
