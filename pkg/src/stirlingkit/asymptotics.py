"""Integer partitions, partial Bell-type coefficients and the power-of-a-series
asymptotic expansion, applied to the mixed-cell partition numbers.

For a series phi(t) = sum a_n t^n with a_0 = 1, the coefficient of t^n in
phi(t)^lam satisfies the exact finite identity

    [t^n] phi^lam = sum_{j=0..n} B(n,j) * (lam)_{n-j},

where B(n,j) collects the integer partitions of n into n-j parts with
coefficient products a_1^{k_1} a_2^{k_2} .../ (k_1! k_2! ...).  Dividing
by (lam)_n gives the expansion

    [t^n] phi^lam / (lam)_n  ~  sum_{j=0..m} B(n,j) / (lam-n+j)_j,

whose truncation at m < n is the asymptotic approximation for large lam.
Everything here stays an exact rational.

Application: the mixed-cell numbers with special-set parameter scaled by
the block count k have generating function phi(t)^k / k! with phi(0) = 0
and [t^1] phi = 1, so phi = t * psi with psi(0) = 1 and

    [t^d] psi^k = k! * S(k+d, k) / (k+d)!        (d = n - k).

The normalized mode estimates exactly that; beyond it, a literal mode
evaluates the uncorrected published-style normalization for the audit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Sequence

from .exact import Rational, falling_factorial
from .partial import _mixed_block_series, partial_deg
from .series import TruncatedSeries, exp_series

__all__ = [
    "integer_partitions",
    "partition_count",
    "partial_bell",
    "VanishingPochhammer",
    "hsu_expansion",
    "shifted_mixed_series",
    "AsymptoticRow",
    "asymptotic_partial",
    "decimal_str",
]

# literal mode walks every integer partition of n; p(40) is already 37338
LITERAL_MODE_N_CAP = 40


def integer_partitions(n: int, parts: int) -> list[tuple[int, ...]]:
    """All partitions of n with exactly `parts` parts, as multiplicity
    vectors (k_1, ..., k_n) with sum i*k_i = n and sum k_i = parts."""
    if n < 0 or parts < 0:
        raise ValueError("arguments must be non-negative")
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, left: int, max_part: int, acc: list[int]) -> None:
        if left == 0:
            if remaining == 0:
                mult = [0] * n
                for p in acc:
                    mult[p - 1] += 1
                out.append(tuple(mult))
            return
        top = min(max_part, remaining - (left - 1))
        for part in range(top, 0, -1):
            acc.append(part)
            rec(remaining - part, left - 1, part, acc)
            acc.pop()

    rec(n, parts, n if n else 0, [])
    return out


@cache
def partition_count(n: int, parts: int) -> int:
    """p(n, parts) by the direct two-term recurrence (no enumeration)."""
    if n < 0 or parts < 0:
        return 0
    if n == 0:
        return 1 if parts == 0 else 0
    if parts == 0:
        return 0
    return partition_count(n - 1, parts - 1) + partition_count(n - parts, parts)


def partial_bell(n: int, j: int, a: Sequence[Rational]) -> Fraction:
    """sum over partitions of n into n-j parts of prod a_i^{k_i} / k_i!.

    a is indexed by part size; a[0] is never used (parts are >= 1), and
    entries up to a[n] must exist.
    """
    if not 0 <= j <= n:
        raise ValueError("need 0 <= j <= n, got j=%r n=%r" % (j, n))
    if len(a) < n + 1:
        raise ValueError("coefficient sequence too short: need indices up to %d" % n)
    total = Fraction(0)
    for mult in integer_partitions(n, n - j):
        term = Fraction(1)
        for size_minus_1, count in enumerate(mult):
            if count:
                term *= Fraction(a[size_minus_1 + 1]) ** count / math.factorial(count)
        total += term
    return total


class VanishingPochhammer(ValueError):
    """A denominator (lam-n+j)_j vanished; carries the offending j."""

    def __init__(self, j: int, lam: Fraction, n: int):
        self.j = j
        super().__init__(
            "(lam-n+j)_j vanishes at j=%d for lam=%s, n=%d" % (j, lam, n)
        )


def hsu_expansion(a: Sequence[Rational], n: int, lam: Rational, m: int) -> Fraction:
    """Truncated expansion sum_{j=0..m} B(n,j) / (lam-n+j)_j.

    Requires a[0] = 1, 0 <= m <= n, and non-vanishing denominators.
    With m = n the sum reproduces [t^n] phi^lam / (lam)_n exactly.
    """
    if Fraction(a[0]) != 1:
        raise ValueError("expansion needs a_0 = 1, got %s" % (a[0],))
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n, got m=%r n=%r" % (m, n))
    lam_f = Fraction(lam)
    total = Fraction(0)
    for j in range(m + 1):
        den = falling_factorial(lam_f - n + j, j)
        if den == 0:
            raise VanishingPochhammer(j, lam_f, n)
        total += partial_bell(n, j, a) / den
    return total


@cache
def shifted_mixed_series(
    gamma: Fraction, alpha: Fraction, beta: Fraction, ell: int, order: int
) -> TruncatedSeries:
    """psi with psi_j = [t^(j+1)] of e^(gamma*t) * mixed block series.

    The product vanishes at t = 0 with unit linear coefficient, so psi
    is a valid a_0 = 1 input for the expansion machinery.
    """
    phi = exp_series(gamma, order + 1) * _mixed_block_series(alpha, beta, ell, order + 1)
    assert phi.coefficient(0) == 0 and phi.coefficient(1) == 1
    return TruncatedSeries(phi.coeffs[1:], order)


@dataclass(frozen=True)
class AsymptoticRow:
    """One estimate/exact comparison; note explains any undefined field."""

    k: int
    n_total: int
    mode: str
    estimate: Fraction | None
    exact: Fraction | None
    rel_error: Fraction | None
    note: str | None = None


def asymptotic_partial(
    n: int,
    k: int,
    gamma: Rational,
    alpha: Rational,
    beta: Rational,
    ell: int,
    m: int,
    mode: str = "normalized",
) -> AsymptoticRow:
    """Estimate the mixed-cell number with special parameter gamma*k.

    Normalized mode targets [t^d] psi^k with d = n - k.  When n < k the
    given n is read as the offset d itself (total n + k); the returned
    row records the total actually used.  Estimate and exact value are
    exact rationals; the relative error is None when the exact value is
    zero or the row is otherwise undefined, with the reason in `note`.

    Literal mode evaluates the uncorrected normalization
    S(n,k)/((k)_n n!) against its own expansion; rows where that is
    undefined are flagged, never silently skipped.
    """
    g, a, b = Fraction(gamma), Fraction(alpha), Fraction(beta)
    if n < 0 or k < 0 or ell < 0 or m < 0:
        raise ValueError("arguments must be non-negative")
    if b == 0:
        raise ValueError("beta = 0 is rejected")
    if mode == "normalized":
        n_total = n if n >= k else n + k
        d = n_total - k
        psi = shifted_mixed_series(g, a, b, ell, max(d, 0))
        exact = partial_deg(n_total, k, ell, g * k, a, b) * Fraction(
            math.factorial(k), math.factorial(n_total)
        )
        try:
            est = falling_factorial(Fraction(k), d) * hsu_expansion(
                psi.coeffs, d, k, min(m, d)
            )
        except VanishingPochhammer as exc:
            return AsymptoticRow(k, n_total, mode, None, exact, None, str(exc))
        if exact == 0:
            return AsymptoticRow(k, n_total, mode, est, exact, None, "exact value is zero")
        return AsymptoticRow(k, n_total, mode, est, exact, abs(est - exact) / abs(exact))
    if mode != "literal":
        raise ValueError("mode must be 'normalized' or 'literal', got %r" % (mode,))

    if n > LITERAL_MODE_N_CAP:
        raise ValueError(
            "literal mode enumerates integer partitions of n; capped at n=%d"
            % LITERAL_MODE_N_CAP
        )
    # coefficient sequence as printed: k! * S(i,k)/i! with the unscaled gamma
    coeffs = [Fraction(1)] + [
        partial_deg(i, k, ell, g, a, b) * Fraction(math.factorial(k), math.factorial(i))
        for i in range(1, n + 1)
    ]
    try:
        est = hsu_expansion(coeffs, n, k, min(m, n))
    except VanishingPochhammer as exc:
        return AsymptoticRow(k, n, mode, None, None, None, str(exc))
    kn = falling_factorial(Fraction(k), n)
    if kn == 0:
        return AsymptoticRow(
            k, n, mode, est, None, None, "(k)_n vanishes; left side undefined"
        )
    exact = partial_deg(n, k, ell, g * k, a, b) / (kn * math.factorial(n))
    if exact == 0:
        return AsymptoticRow(k, n, mode, est, exact, None, "exact value is zero")
    return AsymptoticRow(k, n, mode, est, exact, abs(est - exact) / abs(exact))


def decimal_str(value: Fraction, digits: int = 6) -> str:
    """Fixed-precision decimal rendering of an exact rational."""
    if value < 0:
        return "-" + decimal_str(-value, digits)
    scaled = value * 10 ** digits
    whole = scaled.numerator // scaled.denominator
    text = str(whole).rjust(digits + 1, "0")
    return "%s.%s" % (text[:-digits], text[-digits:])
