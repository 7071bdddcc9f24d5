"""Finite towers of long lines and their point classification.

Level 1 is the closed long line [0, omega_1].  Each further level is the
two-point compactification of integer-many copies of the previous level
with its right endpoint removed, ordered lexicographically.  On the
quotient circle (both endpoints identified into one joint) a point is:

  * the joint,
  * an address [z1, ..., zj] of integers ending at the minimum of the
    remaining factor (an "integer stop", 1 <= j <= kappa - 1), or
  * a full address [z1, ..., z(kappa-1)] ending in a base coordinate
    rho + t on the bottom long line, with (rho, t) != (0, 0).

Classification assigns type 1 to base points, type kappa + 1 - j to an
integer stop at depth j, and type kappa + 1 to the joint, giving exactly
kappa + 1 orbit classes with the joint alone on top.  The closed form is
validated in the test suite against an independent neighborhood-germ
classifier for the small levels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InvalidPointError,
    LevelMismatchError,
    NotSameOrbitError,
)
from .ordinal import CnfOrdinal, add, compare, nat
from .tokens import IDENTITY_TOKEN, IntervalAutToken


class _MinMarker:
    """Left endpoint of a tower factor, produced when stripping addresses."""

    def __repr__(self):
        return "min"


MIN = _MinMarker()


@dataclass(frozen=True)
class Address:
    """Within-copy address; an integer stop when rho is None, else a base."""

    ints: tuple = ()
    rho: CnfOrdinal | None = None
    frac: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "ints", tuple(self.ints))
        for z in self.ints:
            if not isinstance(z, int):
                raise InvalidPointError("address entries must be integers")
        if self.rho is None:
            if self.frac is not None:
                raise InvalidPointError("an integer stop carries no base coordinate")
        else:
            frac = Fraction(self.frac) if self.frac is not None else Fraction(0)
            object.__setattr__(self, "frac", frac)
            if not 0 <= frac < 1:
                raise InvalidPointError("the unit offset must lie in [0, 1)")
            if self.rho.is_zero and frac == 0:
                raise InvalidPointError(
                    "a zero base coordinate is written as the integer stop above it"
                )

    @property
    def is_base(self):
        return self.rho is not None

    @property
    def depth(self):
        return len(self.ints)

    def __str__(self):
        ints = ",".join(str(z) for z in self.ints)
        if not self.is_base:
            return "[%s]" % ints
        parts = []
        if not self.rho.is_zero:
            parts.append(str(self.rho))
        if self.frac != 0:
            parts.append("%d/%d" % (self.frac.numerator, self.frac.denominator))
        return "[%s; %s]" % (ints, "+".join(parts))


@dataclass(frozen=True)
class TowerPoint:
    """A point of the level-kappa quotient circle; address None is the joint."""

    kappa: int
    address: Address | None = None

    def __post_init__(self):
        if not isinstance(self.kappa, int) or self.kappa < 1:
            raise InvalidPointError("tower levels start at 1")
        a = self.address
        if a is None:
            return
        if a.is_base:
            if a.depth != self.kappa - 1:
                raise InvalidPointError(
                    "a base address at level %d needs exactly %d integers"
                    % (self.kappa, self.kappa - 1)
                )
        else:
            if not 1 <= a.depth <= self.kappa - 1:
                raise InvalidPointError(
                    "an integer stop at level %d needs 1..%d integers"
                    % (self.kappa, self.kappa - 1)
                )

    @property
    def is_joint(self):
        return self.address is None

    def __str__(self):
        return "inf" if self.is_joint else str(self.address)


def point_type(p):
    """Orbit type in 1..kappa+1: base 1, stop at depth j kappa+1-j, joint top."""
    if p.is_joint:
        return p.kappa + 1
    if p.address.is_base:
        return 1
    return p.kappa + 1 - p.address.depth


def same_orbit(x, y):
    """Equal types at equal levels; distinct levels are a caller error."""
    if x.kappa != y.kappa:
        raise LevelMismatchError(
            "cannot compare levels %d and %d" % (x.kappa, y.kappa)
        )
    return point_type(x) == point_type(y)


def strip_top(p):
    """Drop the leading integer: the within-copy rest one level down.

    A depth-1 integer stop strips to the minimum marker of the factor, the
    boundary point every endpoint-fixing automorphism leaves alone.
    """
    if p.is_joint or p.kappa < 2:
        raise InvalidPointError("only addressed points above level 1 can be stripped")
    a = p.address
    if not a.is_base and a.depth == 1:
        return MIN
    return TowerPoint(p.kappa - 1, Address(a.ints[1:], a.rho, a.frac))


def _countable_ceiling(x, y):
    """A countable ordinal strictly above both base coordinates."""
    top = x.address.rho if compare_base(x, y) >= 0 else y.address.rho
    return add(top, nat(2))


def compare_base(x, y):
    """Order of two level-1 base coordinates, -1 / 0 / 1."""
    by_rho = compare(x.address.rho, y.address.rho)
    if by_rho:
        return by_rho
    fx, fy = x.address.frac, y.address.frac
    return (fx > fy) - (fx < fy)


def base_automorphism_token(x, y):
    """Witness an endpoint-fixing automorphism of the level with A(x) = y.

    For level 1 the witness lives on an initial segment [0, alpha] with
    alpha countable and above both coordinates; beyond alpha everything is
    fixed.  For higher levels the map factors as a top-integer shift by
    the difference of leading address entries composed with an
    automorphism of the stripped rest, and the token records that shift.
    """
    if x.is_joint or y.is_joint:
        raise InvalidPointError("the joint has no within-copy component")
    if x.kappa != y.kappa:
        raise LevelMismatchError(
            "cannot relate levels %d and %d" % (x.kappa, y.kappa)
        )
    if point_type(x) != point_type(y):
        raise NotSameOrbitError(
            "types %d and %d are never related" % (point_type(x), point_type(y))
        )
    if x.kappa == 1:
        ceiling = TowerPoint(1, Address((), _countable_ceiling(x, y), Fraction(0)))
        if x == y:
            return IntervalAutToken(kappa=1, fixed_above=ceiling)
        return IntervalAutToken(
            mode="mapping", source=x, target=y, kappa=1, fixed_above=ceiling
        )
    if x == y:
        return IntervalAutToken(kappa=x.kappa)
    shift = y.address.ints[0] - x.address.ints[0]
    return IntervalAutToken(
        mode="mapping", source=x, target=y, kappa=x.kappa, translate_by=shift
    )


def within_copy_hat(x, y):
    """Split a same-orbit pair into (top shift, hat token one level down).

    The hat token is what a stage recipe stores: it acts on the stripped
    rest of an address inside every copy, after the recorded shift has
    aligned the leading integers.  Depth-1 integer stops strip to the
    fixed minimum marker, so their hat is the identity.
    """
    if x.is_joint or y.is_joint:
        raise InvalidPointError("the joint has no within-copy component")
    if not same_orbit(x, y):
        raise NotSameOrbitError("within-copy pair must share an orbit class")
    if x.kappa == 1:
        return 0, (IDENTITY_TOKEN if x == y else base_automorphism_token(x, y))
    shift = y.address.ints[0] - x.address.ints[0]
    sx, sy = strip_top(x), strip_top(y)
    if sx is MIN or sy is MIN:
        return shift, IDENTITY_TOKEN
    if sx == sy:
        return shift, IDENTITY_TOKEN
    return shift, IntervalAutToken(
        mode="mapping", source=sx, target=sy, kappa=x.kappa - 1
    )
