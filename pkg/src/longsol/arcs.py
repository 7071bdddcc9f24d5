"""Cyclic arcs on a stage circle, chain patterns, and the lift witness.

Positions on the size-n stage are rationals in [0, n): the integer part
is the copy index, the fractional part a symbolic location inside that
copy (0 is the joint itself).  An arc is the closed cyclic interval from
``start`` to ``end`` travelling in the increasing direction; since start
and end differ it is always a proper subset.

Component counting under a bond preimage is purely combinatorial: the
preimage of an arc under the m-fold bond is m translates spaced one
stage apart, which are pairwise disjoint because the arc is shorter than
one full turn of the base stage.  That is what makes the defining
sequence indecomposable: a connected lift of one arc sits inside a
single preimage component and therefore misses the others, and one
component of each preimage never covers the whole covering stage.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import StageDomainError, WitnessInputError


@dataclass(frozen=True)
class Arc:
    """Closed cyclic interval on the size-n stage, start to end, increasing."""

    n: int
    start: Fraction
    end: Fraction

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise StageDomainError("stage sizes are integers >= 1")
        object.__setattr__(self, "start", Fraction(self.start))
        object.__setattr__(self, "end", Fraction(self.end))
        if not (0 <= self.start < self.n and 0 <= self.end < self.n):
            raise StageDomainError("arc endpoints must lie in [0, n)")
        if self.start == self.end:
            raise StageDomainError("degenerate arcs are not used here")

    @property
    def length(self):
        return (self.end - self.start) % self.n

    def contains(self, pos):
        return (Fraction(pos) - self.start) % self.n <= self.length

    def __str__(self):
        return "%s..%s" % (format_position(self.start), format_position(self.end))


def format_position(pos):
    whole = int(pos)
    rest = pos - whole
    if rest == 0:
        return str(whole)
    return "%d+%d/%d" % (whole, rest.numerator, rest.denominator)


def arcs_intersect(a, b):
    """Closed cyclic intervals meet iff either contains the other's start."""
    if a.n != b.n:
        raise StageDomainError("arcs live on different stages")
    return a.contains(b.start) or b.contains(a.start)


def _open_overlap_point(s1, l1, s2, l2, circumference):
    """A point interior to both open cyclic intervals, or None."""
    for shift in (-circumference, Fraction(0), circumference):
        low = max(s1, s2 + shift)
        high = min(s1 + l1, s2 + shift + l2)
        if low < high:
            return ((low + high) / 2) % circumference
    return None


def uncovered_point(a, b):
    """A position on the stage missed by both arcs, or None if they cover it."""
    if a.n != b.n:
        raise StageDomainError("arcs live on different stages")
    gap_a = (a.end, a.n - a.length)
    gap_b = (b.end, b.n - b.length)
    return _open_overlap_point(gap_a[0], gap_a[1], gap_b[0], gap_b[1], Fraction(a.n))


def preimage_components(arc, m):
    """The m components of the bond preimage, ascending around the circle."""
    if m < 1:
        raise StageDomainError("bond multiplicity must be >= 1")
    big = arc.n * m
    components = []
    for k in range(m):
        start = (arc.start + k * arc.n) % big
        components.append(Arc(big, start, (start + arc.length) % big))
    return components


@dataclass(frozen=True)
class WitnessReport:
    """Exhibits why no pair of connected lifts can cover the covering stage.

    c_components / g_components   the preimage components of each arc.
    c_separators / g_separators   points strictly between consecutive
                                  components, proving they are disjoint,
                                  so a connected lift stays inside one.
    pair_uncovered                for every choice of one component from
                                  each preimage, a point in neither.
    """

    multiplicity: int
    stage: int
    c_components: tuple
    g_components: tuple
    c_separators: tuple
    g_separators: tuple
    pair_uncovered: tuple

    @property
    def witnesses_indecomposability(self):
        return (
            self.multiplicity >= 2
            and len(self.pair_uncovered) == self.multiplicity ** 2
        )


def _separators(components):
    """One point in the open gap after each component; None never occurs
    because components are translates shorter than their spacing."""
    out = []
    total = Fraction(components[0].n)
    for idx, comp in enumerate(components):
        nxt = components[(idx + 1) % len(components)]
        gap_len = (nxt.start - comp.end) % total
        out.append((comp.end + gap_len / 2) % total)
    return tuple(out)


def indecomposability_witness(multiplicity, n, c_arc, g_arc):
    """Witness one inverse-limit step of the indecomposability argument.

    The two arcs must be proper and together cover the size-n stage.
    Each preimage under the multiplicity-fold bond splits into that many
    disjoint components; the report carries separating points and, for
    every pair of one component from each side, a point their union
    misses.  Hence no union of one connected lift per arc is the whole
    covering stage.
    """
    if multiplicity < 2:
        raise WitnessInputError("the argument needs a bond multiplicity >= 2")
    if c_arc.n != n or g_arc.n != n:
        raise WitnessInputError("arcs must live on the size-%d stage" % n)
    if uncovered_point(c_arc, g_arc) is not None:
        raise WitnessInputError("the two arcs must cover the stage")
    c_comps = preimage_components(c_arc, multiplicity)
    g_comps = preimage_components(g_arc, multiplicity)
    missed = []
    for i, c_comp in enumerate(c_comps):
        for j, g_comp in enumerate(g_comps):
            point = uncovered_point(c_comp, g_comp)
            if point is None:
                raise WitnessInputError(
                    "component pair (%d, %d) unexpectedly covers the stage" % (i, j)
                )
            missed.append(((i, j), point))
    return WitnessReport(
        multiplicity=multiplicity,
        stage=n,
        c_components=tuple(c_comps),
        g_components=tuple(g_comps),
        c_separators=_separators(c_comps),
        g_separators=_separators(g_comps),
        pair_uncovered=tuple(missed),
    )


def circular_chain_check(arcs):
    """True when the arcs meet exactly in the circular chain pattern.

    Arc i and arc j must intersect precisely when their cyclic index
    distance is at most 1.  With three arcs every pair is adjacent, so a
    genuinely non-adjacent pair needs at least four links.
    """
    if not arcs:
        raise StageDomainError("a chain needs at least one arc")
    n = arcs[0].n
    for arc in arcs:
        if arc.n != n:
            raise StageDomainError("chain arcs live on different stages")
    t = len(arcs)
    for i in range(t):
        for j in range(i + 1, t):
            dist = min((i - j) % t, (j - i) % t)
            must_meet = dist <= 1
            if arcs_intersect(arcs[i], arcs[j]) != must_meet:
                return False
    return True
