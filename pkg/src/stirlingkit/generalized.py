"""Three-parameter generalized Stirling numbers and their degenerate case.

S(n,k) for parameters (alpha, beta, gamma) is defined as the connection
coefficient between the degenerate falling factorials (t)_{n,alpha} and
(t-gamma)_{k,beta}.  Its exponential generating function in our exact
truncated-series form is

    e_alpha^gamma(t) * (e_alpha^beta(t) - 1)^k / (beta^k * k!),

which requires beta != 0; that is the canonical computation path here.
For beta = 0 the triangular recursion

    S(n+1,k) = S(n,k-1) + (k*beta - n*alpha + gamma) * S(n,k)

is the sole path.  An explicit alternating sum (finite-difference style)
is provided as an independent third route when beta != 0.

Combinatorially the numbers are weighted sums over mixed partitions
(a possibly-empty special set G plus k non-empty blocks): G carries
weight (gamma)_{|G|,alpha} and a block B carries (beta-alpha)_{|B|-1,alpha}.
The brute-force enumeration of that model lives in the oracle module.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import cache

from .core import stirling2
from .exact import Rational, binomial, falling_factorial_deg
from .series import TruncatedSeries, degenerate_exp, egf_coeff

__all__ = [
    "gen_stirling",
    "gen_stirling_rec",
    "gen_stirling_explicit",
    "degenerate_stirling",
]


def _validate(n: int, k: int, alpha: Fraction, beta: Fraction, gamma: Fraction) -> None:
    if n < 0 or k < 0:
        raise ValueError("indices must be non-negative, got n=%r k=%r" % (n, k))
    if alpha == 0 and beta == 0 and gamma == 0:
        raise ValueError("parameter triple (0, 0, 0) is excluded")


@cache
def _gen_egf(k: int, alpha: Fraction, beta: Fraction, gamma: Fraction, order: int) -> TruncatedSeries:
    base = degenerate_exp(beta, alpha, order) - TruncatedSeries.one(order)
    scale = Fraction(1, math.factorial(k)) / beta ** k
    return degenerate_exp(gamma, alpha, order) * (base ** k) * scale


def gen_stirling(n: int, k: int, alpha: Rational, beta: Rational, gamma: Rational) -> Fraction:
    """Generalized Stirling number for the parameter triple (alpha, beta, gamma)."""
    a, b, g = Fraction(alpha), Fraction(beta), Fraction(gamma)
    _validate(n, k, a, b, g)
    if k > n:
        return Fraction(0)
    if b == 0:
        return gen_stirling_rec(n, k, a, b, g)
    return egf_coeff(_gen_egf(k, a, b, g, n), n)


def gen_stirling_rec(n: int, k: int, alpha: Rational, beta: Rational, gamma: Rational) -> Fraction:
    """Same value through the triangular recursion (works for any beta)."""
    a, b, g = Fraction(alpha), Fraction(beta), Fraction(gamma)
    _validate(n, k, a, b, g)
    return _gen_rec_full(n, k, a, b, g)


@cache
def _gen_rec_full(n: int, k: int, alpha: Fraction, beta: Fraction, gamma: Fraction) -> Fraction:
    if n == 0:
        return Fraction(1 if k == 0 else 0)
    if k > n:
        return Fraction(0)
    m = n - 1
    lower = _gen_rec_full(m, k - 1, alpha, beta, gamma) if k >= 1 else Fraction(0)
    return lower + (k * beta - m * alpha + gamma) * _gen_rec_full(m, k, alpha, beta, gamma)


def gen_stirling_explicit(n: int, k: int, alpha: Rational, beta: Rational, gamma: Rational) -> Fraction:
    """Alternating-sum formula; requires beta != 0.

    (1 / (beta^k k!)) * sum_{j=0..k} (-1)^(k-j) C(k,j) (beta*j + gamma)_{n,alpha}
    """
    a, b, g = Fraction(alpha), Fraction(beta), Fraction(gamma)
    _validate(n, k, a, b, g)
    if b == 0:
        raise ValueError("explicit sum is undefined for beta = 0; use the recursion path")
    total = Fraction(0)
    for j in range(k + 1):
        sign = -1 if (k - j) % 2 else 1
        total += sign * binomial(k, j) * falling_factorial_deg(b * j + g, n, a)
    return total / (b ** k * math.factorial(k))


def degenerate_stirling(n: int, k: int, lam: Rational) -> Fraction:
    """Degenerate Stirling numbers: the (lam, 1, 0) parameter specialization.

    lam = 0 is accepted as the limit case and returns the classic numbers.
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be non-negative, got n=%r k=%r" % (n, k))
    lam_f = Fraction(lam)
    if lam_f == 0:
        return Fraction(stirling2(n, k))
    return gen_stirling(n, k, lam_f, 1, 0)
