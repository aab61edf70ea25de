"""Truncated series as the reference computation path.

Every family's numbers are n! times a coefficient of an exact truncated
series.  This walk-through builds the pieces by hand and matches them
against the library's values.

Run top to bottom:  python demos/generating_functions.py
"""

import math
from fractions import Fraction

from stirlingkit import (
    TruncatedSeries,
    degenerate_exp,
    egf_coeff,
    exp_series,
    format_rational,
    incomplete_exp,
    stirling2,
    stirling2_associated,
    stirling2_restricted,
)

ORDER = 10

# (e^x - 1)^k / k! carries the classic numbers in exponential form.
k = 3
base = exp_series(1, ORDER) - TruncatedSeries.one(ORDER)
classic_egf = (base ** k) * Fraction(1, math.factorial(k))
print("coefficients of (e^x - 1)^%d / %d!:" % (k, k))
for n in range(ORDER + 1):
    c = classic_egf.coefficient(n)
    print(
        "  n=%2d  c_n=%-10s n!*c_n=%-6s stirling2=%d"
        % (n, format_rational(c), format_rational(egf_coeff(classic_egf, n)), stirling2(n, k))
    )

# Cutting the exponential at degree ell caps block sizes...
ell = 2
capped = (incomplete_exp(ell, ORDER) - TruncatedSeries.one(ORDER)) ** k * Fraction(
    1, math.factorial(k)
)
print("\nwith e_{<=%d} instead of e^x (blocks of size <= %d):" % (ell, ell))
for n in range(ORDER + 1):
    assert egf_coeff(capped, n) == stirling2_restricted(n, k, ell)
print("  matches the size-capped numbers for all n <= %d" % ORDER)

# ...and subtracting the cut-off part floors them.
floored = (exp_series(1, ORDER) - incomplete_exp(ell, ORDER, strict=True)) ** k * Fraction(
    1, math.factorial(k)
)
print("with e^x - e_{<%d} (blocks of size >= %d):" % (ell, ell))
for n in range(ORDER + 1):
    assert egf_coeff(floored, n) == stirling2_associated(n, k, ell)
print("  matches the size-floored numbers for all n <= %d" % ORDER)

# The degenerate exponential interpolates: its n-th coefficient is the
# degenerate falling factorial over n!.
lam = Fraction(1, 2)
print("\ndegenerate exponential at x=3, lam=1/2:")
series = degenerate_exp(3, lam, 6)
for n in range(7):
    print("  n=%d  %s" % (n, format_rational(series.coefficient(n))))

# Sending lam -> 0 recovers e^(3t) exactly, coefficient by coefficient.
assert degenerate_exp(3, 0, ORDER) == exp_series(3, ORDER)
print("lam=0 equals e^(3t) exactly, coefficient by coefficient")

# Series arithmetic is exact mod t^(N+1): the ring axioms are testable
# equalities, not approximations.
a = exp_series(Fraction(2, 3), 8)
b = degenerate_exp(1, Fraction(1, 5), 8)
assert a * b == b * a
assert a * (a + b) == a * a + a * b
print("ring identities hold exactly at truncation order 8")
