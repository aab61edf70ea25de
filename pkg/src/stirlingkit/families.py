"""Family descriptors and uniform value dispatch.

A FamilySpec names one of the nine number families together with
exactly the parameters that family takes.  Values can be computed by
several methods:

    egf         coefficient extraction from the generating function
                (the canonical path; beta = 0 cases transparently use
                the recursion instead)
    recurrence  self-contained recursion, no series involved
    explicit    alternating-sum formula (classic, degenerate and
                generalized families only, beta != 0)
    oracle      brute-force weighted enumeration (small n only)

Cross-method agreement is part of the test suite and of the CLI
--check flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import oracle as _oracle
from .core import (
    stirling2,
    stirling2_associated,
    stirling2_associated_rec,
    stirling2_rec,
    stirling2_restricted,
    stirling2_restricted_rec,
)
from .generalized import degenerate_stirling, gen_stirling, gen_stirling_explicit, gen_stirling_rec
from .incomplete import free_atleast, free_atleast_rec, gen_restricted, gen_restricted_rec
from .partial import colored_singleton, colored_singleton_rec, partial_deg, partial_deg_rec

__all__ = [
    "FAMILY_TAGS",
    "REQUIRED_PARAMS",
    "FamilySpec",
    "ValueTable",
    "family_value",
    "family_egf",
]

FAMILY_TAGS = (
    "classic",
    "restricted",
    "associated",
    "degenerate",
    "generalized",
    "gen_restricted",
    "free_atleast",
    "partial_degenerate",
    "colored_singleton",
)

REQUIRED_PARAMS = {
    "classic": (),
    "restricted": ("ell",),
    "associated": ("ell",),
    "degenerate": ("lam",),
    "generalized": ("alpha", "beta", "gamma"),
    "gen_restricted": ("alpha", "beta", "gamma", "ell"),
    "free_atleast": ("gamma", "ell"),
    "partial_degenerate": ("gamma", "alpha", "beta", "ell"),
    "colored_singleton": ("r", "s"),
}

METHODS = ("egf", "recurrence", "explicit", "oracle")


@dataclass(frozen=True)
class FamilySpec:
    """One family tag plus exactly the parameters the tag requires."""

    tag: str
    alpha: Fraction | None = None
    beta: Fraction | None = None
    gamma: Fraction | None = None
    lam: Fraction | None = None
    ell: int | None = None
    r: int | None = None
    s: int | None = None

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise ValueError("unknown family tag %r (one of %s)" % (self.tag, ", ".join(FAMILY_TAGS)))
        required = set(REQUIRED_PARAMS[self.tag])
        for name in ("alpha", "beta", "gamma", "lam", "ell", "r", "s"):
            value = getattr(self, name)
            if name in required and value is None:
                raise ValueError("family %r requires parameter %s" % (self.tag, name))
            if name not in required and value is not None:
                raise ValueError("family %r does not take parameter %s" % (self.tag, name))
        for name in ("alpha", "beta", "gamma", "lam"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, Fraction(value))
        for name in ("ell", "r", "s"):
            value = getattr(self, name)
            if value is not None and (not isinstance(value, int) or value < 0):
                raise ValueError("parameter %s must be a non-negative integer" % name)

    @property
    def is_combinatorial(self) -> bool:
        """True when the parameters make the family a plain partition count:
        non-negative integers with alpha dividing beta and gamma."""
        a, b, g = self.alpha, self.beta, self.gamma
        vals = [v for v in (a, b, g, self.lam) if v is not None]
        if any(v.denominator != 1 or v < 0 for v in vals):
            return False
        if a is not None and a != 0:
            if b is not None and b % a != 0:
                return False
            if g is not None and g % a != 0:
                return False
        return True

    def describe(self) -> str:
        parts = [self.tag]
        for name in REQUIRED_PARAMS[self.tag]:
            parts.append("%s=%s" % (name, getattr(self, name)))
        return " ".join(parts)


def _oracle_scheme(spec: FamilySpec) -> _oracle.WeightScheme:
    t = spec.tag
    if t == "classic":
        return _oracle.classic_scheme()
    if t == "restricted":
        return _oracle.restricted_scheme(spec.ell)
    if t == "associated":
        return _oracle.associated_scheme(spec.ell)
    if t == "degenerate":
        return _oracle.generalized_scheme(spec.lam, 1, 0)
    if t == "generalized":
        return _oracle.generalized_scheme(spec.alpha, spec.beta, spec.gamma)
    if t == "gen_restricted":
        return _oracle.gen_restricted_scheme(spec.alpha, spec.beta, spec.gamma, spec.ell)
    if t == "free_atleast":
        return _oracle.free_atleast_scheme(spec.gamma, spec.ell)
    if t == "partial_degenerate":
        return _oracle.partial_degenerate_scheme(spec.gamma, spec.alpha, spec.beta, spec.ell)
    if t == "colored_singleton":
        return _oracle.colored_singleton_scheme(spec.r, spec.s)
    raise AssertionError(t)


def family_value(spec: FamilySpec, n: int, k: int, method: str = "egf") -> Fraction:
    """Value of the family member at (n, k) by the chosen method."""
    if method not in METHODS:
        raise ValueError("unknown method %r (one of %s)" % (method, ", ".join(METHODS)))
    t = spec.tag
    if method == "oracle":
        return _oracle.oracle_sum(n, k, _oracle_scheme(spec))
    if method == "explicit":
        if t == "classic":
            return gen_stirling_explicit(n, k, 0, 1, 0)
        if t == "degenerate":
            if spec.lam == 0:
                return gen_stirling_explicit(n, k, 0, 1, 0)
            return gen_stirling_explicit(n, k, spec.lam, 1, 0)
        if t == "generalized":
            return gen_stirling_explicit(n, k, spec.alpha, spec.beta, spec.gamma)
        raise ValueError("no explicit-sum formula for family %r" % t)
    if method == "recurrence":
        if t == "classic":
            return Fraction(stirling2_rec(n, k))
        if t == "restricted":
            return Fraction(stirling2_restricted_rec(n, k, spec.ell))
        if t == "associated":
            return Fraction(stirling2_associated_rec(n, k, spec.ell))
        if t == "degenerate":
            if spec.lam == 0:
                return Fraction(stirling2_rec(n, k))
            return gen_stirling_rec(n, k, spec.lam, 1, 0)
        if t == "generalized":
            return gen_stirling_rec(n, k, spec.alpha, spec.beta, spec.gamma)
        if t == "gen_restricted":
            return gen_restricted_rec(n, k, spec.alpha, spec.beta, spec.gamma, spec.ell)
        if t == "free_atleast":
            return free_atleast_rec(n, k, spec.gamma, spec.ell)
        if t == "partial_degenerate":
            return partial_deg_rec(n, k, spec.ell, spec.gamma, spec.alpha, spec.beta)
        if t == "colored_singleton":
            return Fraction(colored_singleton_rec(n, k, spec.r, spec.s))
        raise AssertionError(t)
    # canonical generating-function path
    if t == "classic":
        return Fraction(stirling2(n, k))
    if t == "restricted":
        return Fraction(stirling2_restricted(n, k, spec.ell))
    if t == "associated":
        return Fraction(stirling2_associated(n, k, spec.ell))
    if t == "degenerate":
        return degenerate_stirling(n, k, spec.lam)
    if t == "generalized":
        return gen_stirling(n, k, spec.alpha, spec.beta, spec.gamma)
    if t == "gen_restricted":
        return gen_restricted(n, k, spec.alpha, spec.beta, spec.gamma, spec.ell)
    if t == "free_atleast":
        return free_atleast(n, k, spec.gamma, spec.ell)
    if t == "partial_degenerate":
        return partial_deg(n, k, spec.ell, spec.gamma, spec.alpha, spec.beta)
    if t == "colored_singleton":
        return Fraction(colored_singleton(n, k, spec.r, spec.s))
    raise AssertionError(t)


def family_egf(spec: FamilySpec, k: int, order: int):
    """The family's generating function at block count k, truncated.

    Families whose generating function divides by beta refuse beta = 0
    here (their values fall back to the recursion instead).
    """
    from .core import _associated_egf, _classic_egf, _restricted_egf
    from .generalized import _gen_egf
    from .incomplete import _free_atleast_egf, _gen_restricted_egf
    from .partial import _colored_egf, _partial_egf

    t = spec.tag
    if k < 0 or order < 0:
        raise ValueError("k and order must be non-negative")
    if t == "classic":
        return _classic_egf(k, order)
    if t == "restricted":
        return _restricted_egf(k, spec.ell, order)
    if t == "associated":
        return _associated_egf(k, spec.ell, order)
    if t == "degenerate":
        if spec.lam == 0:
            return _classic_egf(k, order)
        return _gen_egf(k, spec.lam, Fraction(1), Fraction(0), order)
    if t == "generalized":
        if spec.beta == 0:
            raise ValueError("the generating function divides by beta; beta = 0 has none")
        return _gen_egf(k, spec.alpha, spec.beta, spec.gamma, order)
    if t == "gen_restricted":
        if spec.beta == 0:
            raise ValueError("the generating function divides by beta; beta = 0 has none")
        return _gen_restricted_egf(k, spec.alpha, spec.beta, spec.gamma, spec.ell, order)
    if t == "free_atleast":
        return _free_atleast_egf(k, spec.gamma, spec.ell, order)
    if t == "partial_degenerate":
        if spec.beta == 0:
            raise ValueError("the generating function divides by beta; beta = 0 has none")
        return _partial_egf(k, spec.ell, spec.gamma, spec.alpha, spec.beta, order)
    if t == "colored_singleton":
        return _colored_egf(k, spec.r, spec.s, order)
    raise AssertionError(t)


class ValueTable:
    """Triangle of values for one family, filled on demand."""

    def __init__(self, family: FamilySpec, method: str = "egf"):
        self.family = family
        self.method = method
        self.entries: dict = {}

    def value(self, n: int, k: int) -> Fraction:
        key = (n, k)
        if key not in self.entries:
            if k > n:
                self.entries[key] = Fraction(0)
            else:
                self.entries[key] = family_value(self.family, n, k, self.method)
        return self.entries[key]

    def rows(self, nmax: int):
        for n in range(nmax + 1):
            for k in range(n + 1):
                yield n, k, self.value(n, k)
