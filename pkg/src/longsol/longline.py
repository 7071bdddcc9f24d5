"""Points and orbit classes of the closed long line used as circle material.

The ambient space is the interval from 0 up to the ordinal product
"omega_1 times w^w", with a copy of (0,1) glued between every ordinal and
its successor.  A point is coded as

    omega_1 * gamma + rho + t

where gamma is an ordinal below w^w (all exponents finite), rho is a
countable ordinal below epsilon_0, and t is an exact rational in [0,1).
The right endpoint carries the flag ``end`` and is excluded from most
operations, since stage circles identify both endpoints into a joint.

Points that are non-Gdelta, or limits of such, are exactly the positive
multiples of omega_1; everything else lives in an open block between two
consecutive multiples.  Orbit classification is complete inside a block
and provable-distinctness across blocks is limited to the two recorded
argument patterns; the remaining cross-block cases are reported as not
proven rather than guessed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from .errors import EndpointError, InvalidPointError
from .ordinal import ONE, ZERO, CnfOrdinal, add, compare
from .tokens import IDENTITY_TOKEN, IntervalAutToken

NG_KIND = "ng"
INTERVAL_KIND = "interval"

PROVEN_DISTINCT = "proven_distinct"
NOT_PROVEN = "not_proven"

SAME = "same"
UNKNOWN = "unknown"


@total_ordering
@dataclass(frozen=True)
class LongPoint:
    """A point omega_1 * gamma + rho + t, or the right endpoint."""

    gamma: CnfOrdinal = ZERO
    rho: CnfOrdinal = ZERO
    frac: Fraction = Fraction(0)
    end: bool = False

    def __post_init__(self):
        object.__setattr__(self, "frac", Fraction(self.frac))
        if self.end:
            if not (self.gamma.is_zero and self.rho.is_zero and self.frac == 0):
                raise InvalidPointError("the endpoint carries no coordinates")
            return
        if not 0 <= self.frac < 1:
            raise InvalidPointError("the unit offset must lie in [0, 1)")
        for exp, _ in self.gamma.terms:
            if not exp.is_finite:
                raise InvalidPointError(
                    "the omega_1 block count must stay below w^w "
                    "(every exponent finite)"
                )

    @property
    def is_zero(self):
        return (
            not self.end
            and self.gamma.is_zero
            and self.rho.is_zero
            and self.frac == 0
        )

    def __lt__(self, other):
        if self.end:
            return False
        if other.end:
            return True
        by_gamma = compare(self.gamma, other.gamma)
        if by_gamma:
            return by_gamma < 0
        by_rho = compare(self.rho, other.rho)
        if by_rho:
            return by_rho < 0
        return self.frac < other.frac

    def __str__(self):
        if self.end:
            return "end"
        parts = []
        if not self.gamma.is_zero:
            parts.append("w1*(%s)" % self.gamma)
        if not self.rho.is_zero:
            parts.append(str(self.rho))
        if self.frac != 0:
            parts.append("%d/%d" % (self.frac.numerator, self.frac.denominator))
        return "+".join(parts) if parts else "0"


@dataclass(frozen=True)
class OrbitClassLabel:
    """Either the multiple-of-omega_1 with index gamma, or its open block."""

    kind: str
    gamma: CnfOrdinal

    def __post_init__(self):
        if self.kind not in (NG_KIND, INTERVAL_KIND):
            raise ValueError("unknown orbit class kind %r" % self.kind)
        if self.kind == NG_KIND and self.gamma.is_zero:
            raise ValueError("multiples of omega_1 start at gamma = 1")


@dataclass(frozen=True)
class OrbitAnswer:
    """Outcome of a same-orbit query: same with a witness token, or unknown."""

    status: str
    token: IntervalAutToken | None = None


def _require_line_point(x):
    if x.end:
        raise EndpointError("the right endpoint is identified into the joint")


def is_ng(x):
    """True when x is a positive multiple of omega_1."""
    _require_line_point(x)
    return (not x.gamma.is_zero) and x.rho.is_zero and x.frac == 0


def partition_class(x):
    """The orbit partition label of a nonzero interior point."""
    _require_line_point(x)
    if x.is_zero:
        raise EndpointError("0 is identified into the joint and not classified here")
    if is_ng(x):
        return OrbitClassLabel(NG_KIND, x.gamma)
    return OrbitClassLabel(INTERVAL_KIND, x.gamma)


def _power_exponent(gamma):
    """The a with gamma = w^a, or None when gamma is not a power of w."""
    if len(gamma.terms) == 1 and gamma.terms[0][1] == 1:
        return gamma.terms[0][0]
    return None


def distinct_orbit_proof(x, y):
    """Report proven distinctness, using only the two recorded arguments.

    Two multiples of omega_1 whose block counts are distinct powers of w
    cannot share an orbit (tail segments of the longer block do not embed
    below it), and a multiple of omega_1 never shares an orbit with a
    block-interior point (the latter is Gdelta).  Everything else is
    reported as not proven; in particular distinct multiples of omega_1
    with non-power counts stay open by design.
    """
    _require_line_point(x)
    _require_line_point(y)
    ng_x, ng_y = is_ng(x), is_ng(y)
    if ng_x != ng_y:
        return PROVEN_DISTINCT
    if ng_x and ng_y:
        ax = _power_exponent(x.gamma)
        ay = _power_exponent(y.gamma)
        if ax is not None and ay is not None and ax != ay:
            return PROVEN_DISTINCT
    return NOT_PROVEN


def same_orbit_recipe(x, y):
    """Same-orbit witness for equal partition labels, unknown otherwise.

    Inside one open block the witness token fixes the two bounding
    multiples of omega_1 and maps x to y.  Equal labels on multiples of
    omega_1 force x == y and yield the identity.  Distinct labels return
    unknown; callers wanting a distinctness proof ask
    :func:`distinct_orbit_proof` separately.
    """
    _require_line_point(x)
    _require_line_point(y)
    if x.is_zero or y.is_zero:
        raise EndpointError("0 is identified into the joint and not classified here")
    if partition_class(x) != partition_class(y):
        return OrbitAnswer(UNKNOWN)
    if is_ng(x):
        return OrbitAnswer(SAME, IDENTITY_TOKEN)
    low = LongPoint(gamma=x.gamma)
    high = LongPoint(gamma=add(x.gamma, ONE))
    if x == y:
        token = IntervalAutToken(fixed_below=low, fixed_above=high)
    else:
        token = IntervalAutToken(
            mode="mapping", source=x, target=y, fixed_below=low, fixed_above=high
        )
    return OrbitAnswer(SAME, token)
