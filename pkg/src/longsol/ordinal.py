"""Cantor normal form arithmetic for ordinals below epsilon_0.

An ordinal is written as w^e1*c1 + ... + w^ek*ck with strictly decreasing
exponents (themselves ordinals in the same form) and integer coefficients
ci >= 1; the empty sum is 0.  This representation is unique, so structural
equality is ordinal equality.  It is the substrate for every symbolic
coordinate in the package: block counts on the long line, countable
remainders, and tower base coordinates.

Addition and multiplication are the usual non-commutative ordinal
operations.  Nesting depth is bounded (default 16) so that ``omega_pow``
cannot silently build towers the rest of the code cannot afford to
normalize; exceeding the bound raises :class:`DepthBoundError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering

from .errors import DepthBoundError

DEFAULT_DEPTH_BOUND = 16


@total_ordering
@dataclass(frozen=True, repr=False)
class CnfOrdinal:
    """An ordinal below epsilon_0 as a tuple of (exponent, coefficient) terms."""

    terms: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        prev = None
        for term in self.terms:
            exp, coeff = term
            if not isinstance(exp, CnfOrdinal):
                raise TypeError("exponents must be CnfOrdinal instances")
            if not isinstance(coeff, int) or coeff < 1:
                raise ValueError("coefficients must be integers >= 1")
            if prev is not None and compare(prev, exp) <= 0:
                raise ValueError("exponents must be strictly decreasing")
            prev = exp

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_finite(self):
        """True for 0 and for naturals w^0*c."""
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero)

    def as_int(self):
        if not self.is_finite:
            raise ValueError("%s is not a finite ordinal" % self)
        return self.terms[0][1] if self.terms else 0

    @property
    def leading_exponent(self):
        if not self.terms:
            raise ValueError("0 has no leading exponent")
        return self.terms[0][0]

    @property
    def depth(self):
        """Nesting depth: 0 for 0, else 1 + the deepest exponent."""
        if not self.terms:
            return 0
        return 1 + max(exp.depth for exp, _ in self.terms)

    def __lt__(self, other):
        return compare(self, other) < 0

    def __add__(self, other):
        return add(self, other)

    def __mul__(self, other):
        return mul(self, other)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, coeff in self.terms:
            if exp.is_zero:
                parts.append(str(coeff))
                continue
            if exp == ONE:
                base = "w"
            else:
                shown = str(exp)
                if "+" in shown or "*" in shown:
                    shown = "(%s)" % shown
                base = "w^" + shown
            parts.append(base if coeff == 1 else "%s*%d" % (base, coeff))
        return "+".join(parts)

    def __repr__(self):
        return "ord[%s]" % self


ZERO = CnfOrdinal()
ONE = CnfOrdinal(((ZERO, 1),))
OMEGA = CnfOrdinal(((ONE, 1),))


def nat(n):
    """The finite ordinal n >= 0."""
    if not isinstance(n, int) or n < 0:
        raise ValueError("naturals must be integers >= 0")
    return ZERO if n == 0 else CnfOrdinal(((ZERO, n),))


def compare(a, b):
    """Total order on ordinals: -1, 0 or 1.

    Term lists are compared lexicographically, exponent before coefficient;
    a longer list extends a shorter equal prefix and is therefore larger.
    """
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        by_exp = compare(ea, eb)
        if by_exp:
            return by_exp
        if ca != cb:
            return -1 if ca < cb else 1
    if len(a.terms) != len(b.terms):
        return -1 if len(a.terms) < len(b.terms) else 1
    return 0


def add(a, b):
    """Ordinal sum a + b.

    Terms of a whose exponent is below the leading exponent of b are
    absorbed; an equal-exponent term merges its coefficient into b's head.
    """
    if not b.terms:
        return a
    if not a.terms:
        return b
    lead = b.terms[0][0]
    keep = []
    merged = None
    for exp, coeff in a.terms:
        rel = compare(exp, lead)
        if rel > 0:
            keep.append((exp, coeff))
        elif rel == 0:
            merged = coeff
            break
        else:
            break
    if merged is None:
        return CnfOrdinal(tuple(keep) + b.terms)
    head = (lead, merged + b.terms[0][1])
    return CnfOrdinal(tuple(keep) + (head,) + b.terms[1:])


def mul(a, b):
    """Ordinal product a * b (left distributive over b's normal form).

    For a limit power on the right, a * w^f = w^(e1 + f) where e1 is a's
    leading exponent; a finite right factor scales a's leading coefficient
    and keeps the tail.
    """
    if not a.terms or not b.terms:
        return ZERO
    e1, c1 = a.terms[0]
    out = []
    for exp, coeff in b.terms:
        if exp.is_zero:
            out.append((e1, c1 * coeff))
            out.extend(a.terms[1:])
        else:
            out.append((add(e1, exp), coeff))
    return CnfOrdinal(tuple(out))


def omega_pow(a, depth_bound=DEFAULT_DEPTH_BOUND):
    """w raised to the ordinal a, subject to the nesting depth bound."""
    if a.depth + 1 > depth_bound:
        raise DepthBoundError(
            "w^(%s) would exceed the nesting depth bound %d" % (a, depth_bound)
        )
    return CnfOrdinal(((a, 1),))
