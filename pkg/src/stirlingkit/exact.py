"""Exact rational arithmetic and factorial-type primitives.

Every quantity in this package is an exact rational.  We use
:class:`fractions.Fraction`, which keeps values in canonical form
(gcd(|num|, den) = 1, den > 0) after every operation.  Plain Python
ints are accepted everywhere a rational is expected; results stay
int when all inputs are int.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Sequence, Union

Rational = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"([+-]?\d+)(?:/(\d+))?\Z")


def falling_factorial_deg(t: Rational, n: int, lam: Rational) -> Rational:
    """Product t(t-lam)(t-2*lam)...(t-(n-1)*lam); 1 when n = 0.

    The lam=0 case degenerates to t**n and lam=1 to the ordinary
    falling factorial.  Total function for n >= 0.
    """
    if n < 0:
        raise ValueError("falling_factorial_deg needs n >= 0, got %r" % (n,))
    out: Rational = 1
    for i in range(n):
        out *= t - i * lam
    return out


def falling_factorial(t: Rational, n: int) -> Rational:
    """Ordinary falling factorial t(t-1)...(t-n+1)."""
    return falling_factorial_deg(t, n, 1)


def binomial(n: int, k: int) -> int:
    """C(n, k); zero outside the range 0 <= k <= n."""
    if n < 0:
        raise ValueError("binomial needs n >= 0, got %r" % (n,))
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """n! / (parts[0]! * parts[1]! * ...).  The parts must sum to n."""
    if any(p < 0 for p in parts):
        raise ValueError("multinomial parts must be non-negative: %r" % (parts,))
    if sum(parts) != n:
        raise ValueError(
            "multinomial parts %r sum to %d, expected %d" % (list(parts), sum(parts), n)
        )
    out = math.factorial(n)
    for p in parts:
        out //= math.factorial(p)
    return out


def parse_rational(text: str) -> Fraction:
    """Parse the literal format used across the CLI: '-3', '7', '3/2', '-3/2'.

    The denominator, when present, must be a positive integer with no sign.
    """
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError("not a rational literal: %r" % (text,))
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError("zero denominator in rational literal: %r" % (text,))
    return Fraction(num, den)


def format_rational(value: Rational) -> str:
    """Render a rational as 'p' or 'p/q' with q > 0."""
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)


def as_integer(value: Rational) -> int:
    """Convert an integral rational to int; reject non-integers."""
    f = Fraction(value)
    if f.denominator != 1:
        raise ValueError("expected an integer value, got %s" % (f,))
    return f.numerator
