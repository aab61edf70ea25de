"""Brute-force enumeration of weighted mixed partitions: the ground truth.

A mixed partition of {1..n} is a pair (G, P): a possibly-empty special
set G together with k pairwise-disjoint non-empty blocks covering the
rest.  Every number family in this package is a weighted sum over these
pairs for some weight scheme, so exhaustive enumeration at small n
defines the expected value of everything else.

Enumeration is restricted-growth style with the special set as an extra
always-available class: element 1 is offered the special set, any block
already started, or a fresh block.  Each pair is produced exactly once,
blocks canonically ordered by first element, and the stream order is
deterministic so failures reproduce.

Weights depend only on |G| and the block sizes, so the summation helper
groups the enumeration by size profile; the grouping is built by running
the same generator, not by any closed-form shortcut.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Callable, Iterator

from .exact import Rational, falling_factorial_deg

__all__ = [
    "ENUMERATION_CAP",
    "MixedPartition",
    "WeightScheme",
    "enumerate_mixed",
    "oracle_sum",
    "oracle_sum_blocksum",
    "classic_scheme",
    "restricted_scheme",
    "associated_scheme",
    "generalized_scheme",
    "gen_restricted_scheme",
    "gen_associated_scheme",
    "free_atleast_scheme",
    "partial_degenerate_scheme",
    "partial_degenerate_swapped_scheme",
    "colored_singleton_scheme",
]

# Bell-like growth with an extra class; n=11 is ~4M pairs, still desk scale.
ENUMERATION_CAP = 11


@dataclass(frozen=True)
class MixedPartition:
    special_set: frozenset
    blocks: tuple

    def is_valid(self, n: int) -> bool:
        seen = set(self.special_set)
        if any(not b for b in self.blocks):
            return False
        for b in self.blocks:
            if seen & b:
                return False
            seen |= b
        return seen == set(range(1, n + 1))


@dataclass(frozen=True)
class WeightScheme:
    """Multiplicative weights by size: w(G,P) = sw(|G|) * prod bw(|B_i|).

    block_size_ok filters which block sizes are admissible at all;
    sw(0) must be 1 (the empty special set always carries weight one).
    """

    name: str
    special_weight: Callable[[int], Rational]
    block_weight: Callable[[int], Rational]
    block_size_ok: Callable[[int], bool] = staticmethod(lambda size: True)


def enumerate_mixed(
    n: int,
    k: int,
    block_size_ok: Callable[[int], bool] | None = None,
    cap: int = ENUMERATION_CAP,
) -> Iterator[MixedPartition]:
    """Yield every (G, P_k) pair over {1..n} exactly once.

    block_size_ok, when given, drops pairs containing a block of an
    inadmissible size.  n beyond the enumeration cap is refused.
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be non-negative, got n=%r k=%r" % (n, k))
    if n > cap:
        raise ValueError(
            "enumeration of mixed partitions is capped at n=%d (asked for n=%d); "
            "raise the cap explicitly if you really want this" % (cap, n)
        )

    special: list[int] = []
    blocks: list[list[int]] = []

    def rec(element: int) -> Iterator[MixedPartition]:
        if element > n:
            if len(blocks) == k:
                if block_size_ok is not None and not all(
                    block_size_ok(len(b)) for b in blocks
                ):
                    return
                yield MixedPartition(
                    frozenset(special), tuple(frozenset(b) for b in blocks)
                )
            return
        # remaining elements must still be able to open all missing blocks
        if k - len(blocks) > n - element + 1:
            return
        special.append(element)
        yield from rec(element + 1)
        special.pop()
        for b in blocks:
            b.append(element)
            yield from rec(element + 1)
            b.pop()
        if len(blocks) < k:
            blocks.append([element])
            yield from rec(element + 1)
            blocks.pop()

    return rec(1)


@cache
def _profile_counts(n: int, k: int, cap: int = ENUMERATION_CAP) -> dict:
    """Count pairs by (|G|, sorted block sizes), via the real enumeration."""
    counts: dict = {}
    for mp in enumerate_mixed(n, k, cap=cap):
        key = (len(mp.special_set), tuple(sorted(len(b) for b in mp.blocks)))
        counts[key] = counts.get(key, 0) + 1
    return counts


def oracle_sum(
    n: int, k: int, scheme: WeightScheme, cap: int = ENUMERATION_CAP
) -> Fraction:
    """Sum of w(G, P) over all admissible pairs under the scheme."""
    total = Fraction(0)
    for (g, sizes), count in _profile_counts(n, k, cap).items():
        if not all(scheme.block_size_ok(s) for s in sizes):
            continue
        w = Fraction(scheme.special_weight(g))
        for s in sizes:
            w *= scheme.block_weight(s)
        total += count * w
    return total


def oracle_sum_blocksum(
    n: int, k: int, scheme: WeightScheme, cap: int = ENUMERATION_CAP
) -> Fraction:
    """Variant folding block weights by sum instead of product.

    The notation w(P_k) = sum_i w(B_i) circulates alongside the product
    form; the audit evaluates this variant to show it breaks the special
    values.  The empty partition keeps weight 1.
    """
    total = Fraction(0)
    for (g, sizes), count in _profile_counts(n, k, cap).items():
        if not all(scheme.block_size_ok(s) for s in sizes):
            continue
        if sizes:
            w_blocks = sum(Fraction(scheme.block_weight(s)) for s in sizes)
        else:
            w_blocks = Fraction(1)
        total += count * Fraction(scheme.special_weight(g)) * w_blocks
    return total


# -- built-in weight schemes -------------------------------------------------


def generalized_scheme(alpha: Rational, beta: Rational, gamma: Rational) -> WeightScheme:
    a, b, g = Fraction(alpha), Fraction(beta), Fraction(gamma)
    return WeightScheme(
        name="generalized(%s,%s,%s)" % (a, b, g),
        special_weight=lambda size: falling_factorial_deg(g, size, a),
        block_weight=lambda size: falling_factorial_deg(b - a, size - 1, a),
    )


def gen_restricted_scheme(
    alpha: Rational, beta: Rational, gamma: Rational, ell: int
) -> WeightScheme:
    base = generalized_scheme(alpha, beta, gamma)
    return WeightScheme(
        name="gen_restricted(%s,%s,%s,ell=%d)" % (alpha, beta, gamma, ell),
        special_weight=base.special_weight,
        block_weight=base.block_weight,
        block_size_ok=lambda size: size <= ell,
    )


def gen_associated_scheme(
    alpha: Rational, beta: Rational, gamma: Rational, ell: int
) -> WeightScheme:
    base = generalized_scheme(alpha, beta, gamma)
    return WeightScheme(
        name="gen_associated(%s,%s,%s,ell=%d)" % (alpha, beta, gamma, ell),
        special_weight=base.special_weight,
        block_weight=base.block_weight,
        block_size_ok=lambda size: size >= ell,
    )


def free_atleast_scheme(gamma: Rational, ell: int) -> WeightScheme:
    g = Fraction(gamma)
    return WeightScheme(
        name="free_atleast(%s,ell=%d)" % (g, ell),
        special_weight=lambda size: g ** size,
        block_weight=lambda size: Fraction(1),
        block_size_ok=lambda size: size >= ell + 1,
    )


def partial_degenerate_scheme(
    gamma: Rational, alpha: Rational, beta: Rational, ell: int
) -> WeightScheme:
    """Free special set gamma^|G|; blocks of size <= ell carry the degenerate
    weight, larger blocks are free (weight 1)."""
    a, b, g = Fraction(alpha), Fraction(beta), Fraction(gamma)
    return WeightScheme(
        name="partial_degenerate(%s,%s,%s,ell=%d)" % (g, a, b, ell),
        special_weight=lambda size: g ** size,
        block_weight=lambda size: (
            falling_factorial_deg(b - a, size - 1, a) if size <= ell else Fraction(1)
        ),
    )


def partial_degenerate_swapped_scheme(
    gamma: Rational, alpha: Rational, beta: Rational, ell: int
) -> WeightScheme:
    """Orientation with the weights on the wrong side of ell (audit target)."""
    a, b, g = Fraction(alpha), Fraction(beta), Fraction(gamma)
    return WeightScheme(
        name="partial_degenerate_swapped(%s,%s,%s,ell=%d)" % (g, a, b, ell),
        special_weight=lambda size: g ** size,
        block_weight=lambda size: (
            Fraction(1) if size <= ell else falling_factorial_deg(b - a, size - 1, a)
        ),
    )


def classic_scheme() -> WeightScheme:
    return WeightScheme(
        name="classic",
        special_weight=lambda size: Fraction(1 if size == 0 else 0),
        block_weight=lambda size: Fraction(1),
    )


def restricted_scheme(ell: int) -> WeightScheme:
    base = classic_scheme()
    return WeightScheme(
        name="restricted(ell=%d)" % ell,
        special_weight=base.special_weight,
        block_weight=base.block_weight,
        block_size_ok=lambda size: size <= ell,
    )


def associated_scheme(ell: int) -> WeightScheme:
    base = classic_scheme()
    return WeightScheme(
        name="associated(ell=%d)" % ell,
        special_weight=base.special_weight,
        block_weight=base.block_weight,
        block_size_ok=lambda size: size >= ell,
    )


def colored_singleton_scheme(r: int, s: int) -> WeightScheme:
    """Special set r^|G|; singleton blocks may take one of s colors."""
    return WeightScheme(
        name="colored_singleton(r=%d,s=%d)" % (r, s),
        special_weight=lambda size: Fraction(r) ** size,
        block_weight=lambda size: Fraction(s if size == 1 else 1),
    )
