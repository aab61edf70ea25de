"""Classic, restricted and associated Stirling numbers of the second kind.

Values are defined here through coefficient extraction from the
exponential generating functions

    classic:     (e^x - 1)^k / k!
    restricted:  (e_{<=ell}(x) - 1)^k / k!      blocks of size at most ell
    associated:  (e^x - e_{<ell}(x))^k / k!     blocks of size at least ell

with e_{<=ell} and e_{<ell} the truncated exponentials.  The classical
recurrences are provided separately as verification targets; the audit
module compares them (including a commonly printed but wrong variant of
the basic recursion) against these reference values.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import cache

from .exact import as_integer, binomial
from .series import TruncatedSeries, egf_coeff, exp_series, incomplete_exp

__all__ = [
    "stirling2",
    "stirling2_restricted",
    "stirling2_associated",
    "stirling2_rec",
    "stirling2_rec_literal",
    "stirling2_restricted_rec",
    "stirling2_associated_rec",
]


def _check_nk(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise ValueError("indices must be non-negative, got n=%r k=%r" % (n, k))


def _inv_factorial(k: int) -> Fraction:
    return Fraction(1, math.factorial(k))


@cache
def _classic_egf(k: int, order: int) -> TruncatedSeries:
    base = exp_series(1, order) - TruncatedSeries.one(order)
    return (base ** k) * _inv_factorial(k)


@cache
def _restricted_egf(k: int, ell: int, order: int) -> TruncatedSeries:
    base = incomplete_exp(ell, order) - TruncatedSeries.one(order)
    return (base ** k) * _inv_factorial(k)


@cache
def _associated_egf(k: int, ell: int, order: int) -> TruncatedSeries:
    base = exp_series(1, order) - incomplete_exp(ell, order, strict=True)
    return (base ** k) * _inv_factorial(k)


def stirling2(n: int, k: int) -> int:
    """Partitions of an n-set into k non-empty blocks."""
    _check_nk(n, k)
    if k > n:
        return 0
    return as_integer(egf_coeff(_classic_egf(k, n), n))


def stirling2_restricted(n: int, k: int, ell: int) -> int:
    """Partitions of an n-set into k blocks, each of size at most ell."""
    _check_nk(n, k)
    if ell < 1:
        raise ValueError("restricted numbers need ell >= 1 (no non-empty block fits)")
    if k > n or n > k * ell:
        return 0
    return as_integer(egf_coeff(_restricted_egf(k, ell, n), n))


def stirling2_associated(n: int, k: int, ell: int) -> int:
    """Partitions of an n-set into k blocks, each of size at least ell."""
    _check_nk(n, k)
    if ell < 1:
        raise ValueError("associated numbers need ell >= 1")
    if n < k * ell:
        return 0
    return as_integer(egf_coeff(_associated_egf(k, ell, n), n))


# -- recurrence evaluators (verification targets) ---------------------------


@cache
def stirling2_rec(n: int, k: int) -> int:
    """Standard recursion S(n,k) = k*S(n-1,k) + S(n-1,k-1)."""
    _check_nk(n, k)
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    return k * stirling2_rec(n - 1, k) + stirling2_rec(n - 1, k - 1)


@cache
def stirling2_rec_literal(n: int, k: int) -> int:
    """As-printed variant with second term S(n-2,k) instead of S(n-1,k-1).

    Seeded only with S(0,0) = 1 and zero row/column, exactly as stated
    alongside it; entries the rule cannot reach stay 0.  Kept for the
    identity audit, where it fails (first counterexample S(2,1)).
    """
    _check_nk(n, k)
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    prev2 = stirling2_rec_literal(n - 2, k) if n >= 2 else 0
    return k * stirling2_rec_literal(n - 1, k) + prev2


@cache
def stirling2_restricted_rec(n: int, k: int, ell: int) -> int:
    """Size-limited recursion: the new element's block takes i more members,
    i <= ell-1, and the rest form k-1 blocks."""
    _check_nk(n, k)
    if ell < 1:
        raise ValueError("restricted numbers need ell >= 1")
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    m = n - 1
    return sum(
        binomial(m, i) * stirling2_restricted_rec(m - i, k - 1, ell)
        for i in range(0, min(ell - 1, m) + 1)
    )


@cache
def stirling2_associated_rec(n: int, k: int, ell: int) -> int:
    """Size-floored recursion: the new element's block takes i >= ell-1 more
    members."""
    _check_nk(n, k)
    if ell < 1:
        raise ValueError("associated numbers need ell >= 1")
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    m = n - 1
    return sum(
        binomial(m, i) * stirling2_associated_rec(m - i, k - 1, ell)
        for i in range(ell - 1, m + 1)
    )
