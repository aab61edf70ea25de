"""Mixed free/degenerate-cell partition numbers, computed five ways.

The model: a free special set G of weight gamma^|G| plus k non-empty
blocks, where a block of size at most ell carries the degenerate weight
(beta-alpha)_{size-1,alpha} and a larger block is free (weight 1).

Reference path is coefficient extraction from

    e^(gamma*x) / k! * (e^x + sum_{i=1..ell} (beta-alpha)_{i-1,alpha} x^i/i!
                            - e_{<=ell}(x))^k

and four independent routes re-derive the same value: a binomial
convolution splitting free from weighted cells, an element-shift
recursion, a multinomial block decomposition, and a derivative-style
recursion.  The multinomial and derivative routes exist in a literal
and a corrected reading; the audit compares both.

Colored-singleton numbers (special set weight r^|G|, singleton blocks
in one of s colors) share the machinery and close the module.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import cache
from typing import Iterator

from .exact import Rational, as_integer, binomial, falling_factorial_deg, multinomial
from .incomplete import free_atleast, gen_restricted
from .series import TruncatedSeries, egf_coeff, exp_series, incomplete_exp

__all__ = [
    "partial_deg",
    "partial_deg_rec",
    "partial_deg_convolution",
    "partial_deg_recursion",
    "partial_deg_multinomial",
    "partial_deg_derivative_recursion",
    "colored_singleton",
    "colored_singleton_rec",
]


def _validate(n: int, k: int, ell: int, beta: Fraction) -> None:
    if n < 0 or k < 0 or ell < 0:
        raise ValueError("indices must be non-negative, got n=%r k=%r ell=%r" % (n, k, ell))
    if beta == 0:
        raise ValueError("beta = 0 is rejected: block weights divide by beta")


@cache
def _mixed_block_series(
    alpha: Fraction, beta: Fraction, ell: int, order: int
) -> TruncatedSeries:
    """e^x + sum_{i<=ell} (beta-alpha)_{i-1,alpha} x^i/i! - e_{<=ell}(x)."""
    cs = list(exp_series(1, order).coeffs)
    for i in range(1, min(ell, order) + 1):
        cs[i] += Fraction(falling_factorial_deg(beta - alpha, i - 1, alpha)) / math.factorial(i)
    cut = incomplete_exp(ell, order)
    return TruncatedSeries([c - d for c, d in zip(cs, cut.coeffs)], order)


@cache
def _partial_egf(
    k: int, ell: int, gamma: Fraction, alpha: Fraction, beta: Fraction, order: int
) -> TruncatedSeries:
    inner = _mixed_block_series(alpha, beta, ell, order)
    return exp_series(gamma, order) * (inner ** k) * Fraction(1, math.factorial(k))


def partial_deg(
    n: int, k: int, ell: int, gamma: Rational, alpha: Rational, beta: Rational
) -> Fraction:
    """Weighted count of mixed free/degenerate-cell partitions."""
    g, a, b = Fraction(gamma), Fraction(alpha), Fraction(beta)
    _validate(n, k, ell, b)
    if k > n:
        return Fraction(0)
    return egf_coeff(_partial_egf(k, ell, g, a, b, n), n)


def _restricted_factor(
    m: int, j: int, alpha: Fraction, beta: Fraction, ell: int
) -> Fraction:
    """Size-capped weighted blocks with empty special set; ell = 0 leaves
    room only for the empty configuration."""
    if j < 0 or m < 0:
        return Fraction(0)
    if ell == 0 or j == 0:
        return Fraction(1 if (m == 0 and j == 0) else 0)
    return gen_restricted(m, j, alpha, beta, 0, ell)


def partial_deg_convolution(
    n: int, k: int, ell: int, gamma: Rational, alpha: Rational, beta: Rational
) -> Fraction:
    """Split by the element set living in free cells: a binomial convolution
    of the free-cell numbers with the size-capped weighted numbers."""
    g, a, b = Fraction(gamma), Fraction(alpha), Fraction(beta)
    _validate(n, k, ell, b)
    total = Fraction(0)
    for i in range(0, n + 1):
        c = binomial(n, i)
        for j in range(0, k + 1):
            fa = free_atleast(i, j, g, ell)
            if not fa:
                continue
            total += c * fa * _restricted_factor(n - i, k - j, a, b, ell)
    return total


def partial_deg_recursion(
    n_plus_1: int, k: int, ell: int, gamma: Rational, alpha: Rational, beta: Rational
) -> Fraction:
    """Recursion on the newest element's position: it joins either a free
    cell or a weighted cell, shifting one factor of the convolution."""
    g, a, b = Fraction(gamma), Fraction(alpha), Fraction(beta)
    _validate(n_plus_1, k, ell, b)
    if n_plus_1 == 0:
        return Fraction(1 if k == 0 else 0)
    n = n_plus_1 - 1
    total = Fraction(0)
    for i in range(0, n + 1):
        c = binomial(n, i)
        for j in range(0, k + 1):
            left = free_atleast(i + 1, j, g, ell) * _restricted_factor(n - i, k - j, a, b, ell)
            right = free_atleast(i, j, g, ell) * _restricted_factor(n - i + 1, k - j, a, b, ell)
            total += c * (left + right)
    return total


def _single_block(m: int, ell: int, alpha: Fraction, beta: Fraction) -> Fraction:
    """Weight of one block of size m: degenerate up to ell, free beyond."""
    if m <= 0:
        return Fraction(0)
    if m <= ell:
        return Fraction(falling_factorial_deg(beta - alpha, m - 1, alpha))
    return Fraction(1)


def partial_deg_multinomial(
    n: int,
    k: int,
    ell: int,
    gamma: Rational,
    alpha: Rational,
    beta: Rational,
    literal: bool = False,
) -> Fraction:
    """Block-by-block multinomial decomposition.

    Corrected reading: sum over ordered size compositions r_1..r_k >= 1
    plus a special-set remainder, each block contributing its own
    single-block weight, divided by k! because blocks are unordered.
    The literal reading keeps the product subscripts at 1..k and drops
    the 1/k!; the audit scores it.
    """
    g, a, b = Fraction(gamma), Fraction(alpha), Fraction(beta)
    _validate(n, k, ell, b)
    total = Fraction(0)
    if literal:
        fixed = Fraction(1)
        for i in range(1, k + 1):
            fixed *= _single_block(i, ell, a, b)
        for head in _iter_head_compositions(n, k, ell):
            remainder = n - sum(head)
            total += multinomial(n, list(head) + [remainder]) * g ** remainder * fixed
        return total
    for head in _iter_head_compositions(n, k, 1):
        remainder = n - sum(head)
        w = Fraction(multinomial(n, list(head) + [remainder])) * g ** remainder
        for size in head:
            w *= _single_block(size, ell, a, b)
        total += w
    return total / math.factorial(k)


def _iter_head_compositions(n: int, k: int, minimum: int) -> Iterator[tuple[int, ...]]:
    """Ordered block-size tuples r_1..r_k >= minimum with sum <= n."""
    if k == 0:
        yield ()
        return
    for first in range(minimum, n - minimum * (k - 1) + 1):
        for rest in _iter_head_compositions(n - first, k - 1, minimum):
            yield (first,) + rest


def partial_deg_derivative_recursion(
    n_plus_1: int,
    k: int,
    ell: int,
    gamma: Rational,
    alpha: Rational,
    beta: Rational,
    literal: bool = False,
) -> Fraction:
    """Recursion from differentiating the generating function.

    Corrected inner index k-1: the newest element either joins the
    special set or completes one distinguished block.  The literal
    variant keeps the inner index at k; the audit scores it.
    """
    g, a, b = Fraction(gamma), Fraction(alpha), Fraction(beta)
    _validate(n_plus_1, k, ell, b)
    if k < 1:
        raise ValueError("derivative recursion needs k >= 1")
    n = n_plus_1 - 1
    total = g * partial_deg(n, k, ell, g, a, b)
    inner_k = k if literal else k - 1
    for i in range(0, n + 1):
        total += (
            binomial(n, i)
            * partial_deg(i, inner_k, ell, g, a, b)
            * _single_block(n - i + 1, ell, a, b)
        )
    return total


@cache
def _partial_rec(
    n: int, k: int, ell: int, gamma: Fraction, alpha: Fraction, beta: Fraction
) -> Fraction:
    if n == 0:
        return Fraction(1 if k == 0 else 0)
    if k > n:
        return Fraction(0)
    if k == 0:
        return gamma ** n
    m = n - 1
    total = gamma * _partial_rec(m, k, ell, gamma, alpha, beta)
    for i in range(0, m + 1):
        total += (
            binomial(m, i)
            * _partial_rec(i, k - 1, ell, gamma, alpha, beta)
            * _single_block(m - i + 1, ell, alpha, beta)
        )
    return total


def partial_deg_rec(
    n: int, k: int, ell: int, gamma: Rational, alpha: Rational, beta: Rational
) -> Fraction:
    """Full recursion path (derivative-style rule applied recursively)."""
    g, a, b = Fraction(gamma), Fraction(alpha), Fraction(beta)
    _validate(n, k, ell, b)
    return _partial_rec(n, k, ell, g, a, b)


@cache
def _colored_rec(n: int, k: int, r: int, s: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if k > n:
        return 0
    if k == 0:
        return r ** n
    m = n - 1
    total = r * _colored_rec(m, k, r, s)
    for i in range(0, m + 1):
        block = s if m - i + 1 == 1 else 1
        total += binomial(m, i) * _colored_rec(i, k - 1, r, s) * block
    return total


def colored_singleton_rec(n: int, k: int, r: int, s: int) -> int:
    """Full recursion path for the colored-singleton numbers."""
    if n < 0 or k < 0 or r < 0 or s < 0:
        raise ValueError("all arguments must be non-negative")
    return _colored_rec(n, k, r, s)


@cache
def _colored_egf(k: int, r: int, s: int, order: int) -> TruncatedSeries:
    inner_cs = list(exp_series(1, order).coeffs)
    inner_cs[0] -= 1
    if order >= 1:
        inner_cs[1] += s - 1
    inner = TruncatedSeries(inner_cs, order)
    return exp_series(r, order) * (inner ** k) * Fraction(1, math.factorial(k))


def colored_singleton(n: int, k: int, r: int, s: int) -> int:
    """Partition count with an r-compartment free special set and singleton
    blocks colored one of s ways."""
    if n < 0 or k < 0 or r < 0 or s < 0:
        raise ValueError("all arguments must be non-negative")
    if k > n:
        return 0
    return as_integer(egf_coeff(_colored_egf(k, r, s, n), n))
