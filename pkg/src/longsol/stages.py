"""Finite stages of a long solenoid and maps between them.

A stage of size n is a circle made of n copies of the chosen line laid
end to end, with joints inf_0 .. inf_(n-1) between consecutive copies.
The bonding map from the stage of size m*n down to size n sends joint
inf_i to inf_(i mod n) and keeps within-copy coordinates; it is an m-fold
covering.  A thread is a finite-depth point of the inverse limit: one
point per stage, each mapped to the previous one by its bond.

Homeomorphism recipes act level by level as a rotation composed with an
optional top-integer translation and a hat, where the hat applies one
interval automorphism token inside every copy.  Recipes carry the shared
translation and token plus a rotation offset per level; validity means
commuting with every bond on a finite, documented verification set (all
joints, bounded integer-stop addresses, and the recipe's tracked source
points).  Synthesis from a pair of threads answers with a recipe, a
distinctness proof, or unknown; conjectural cases are never upgraded.

Within-copy points are either tower points (finite level, integer
addresses) or long-line points.  Both endpoints of each copy are
identified into joints, so inner points exclude them.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .errors import (
    InvalidPointError,
    StageDomainError,
    ThreadMismatchError,
    TokenUndefinedError,
    UnsupportedTranslationError,
)
from .longline import (
    NOT_PROVEN,
    PROVEN_DISTINCT,
    SAME,
    UNKNOWN,
    LongPoint,
    distinct_orbit_proof,
    is_ng,
    same_orbit_recipe,
)
from .tokens import IDENTITY_TOKEN, IntervalAutToken
from .tower import (
    MIN,
    Address,
    TowerPoint,
    point_type,
    strip_top,
    within_copy_hat,
)

RECIPE = "recipe"

JOINT_MODE = "joint"
TOWER_MODE = "tower"
LONG_MODE = "long"


@dataclass(frozen=True)
class StagePoint:
    """A point of the size-n stage: a joint, or an inner point of one copy."""

    n: int
    index: int
    inner: object = None

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise StageDomainError("stage sizes are integers >= 1")
        object.__setattr__(self, "index", self.index % self.n)
        x = self.inner
        if x is None:
            return
        if isinstance(x, TowerPoint):
            if x.is_joint:
                raise InvalidPointError(
                    "the tower joint is written as a stage joint, not an inner point"
                )
        elif isinstance(x, LongPoint):
            if x.end or x.is_zero:
                raise InvalidPointError(
                    "copy endpoints are identified into joints and are not inner"
                )
        else:
            raise InvalidPointError("inner points are TowerPoint or LongPoint")

    @property
    def is_joint(self):
        return self.inner is None

    @property
    def mode(self):
        if self.inner is None:
            return JOINT_MODE
        return TOWER_MODE if isinstance(self.inner, TowerPoint) else LONG_MODE

    def __str__(self):
        if self.is_joint:
            return "inf%d" % self.index
        return "(%d| %s)" % (self.index, self.inner)


def apply_bond(m, n, p):
    """The m-fold bonding map from the size m*n stage down to size n."""
    if m < 1 or n < 1:
        raise StageDomainError("bond multiplicity and target size must be >= 1")
    if p.n != m * n:
        raise StageDomainError(
            "point lives on stage %d, bond expects %d" % (p.n, m * n)
        )
    return StagePoint(n, p.index % n, p.inner)


def fiber(m, n, q):
    """All m preimages of q under the bond, in ascending index order."""
    if m < 1 or n < 1:
        raise StageDomainError("bond multiplicity and target size must be >= 1")
    if q.n != n:
        raise StageDomainError(
            "point lives on stage %d, fiber expects %d" % (q.n, n)
        )
    return [StagePoint(m * n, q.index + k * n, q.inner) for k in range(m)]


def rotate(k, p):
    """Rotate the stage by k copies; the inner coordinate rides along."""
    return StagePoint(p.n, p.index + k, p.inner)


def translate(k, p):
    """Shift the top-level integer of every within-copy address by k.

    Joints stay fixed.  Only tower points at level 2 or above carry a top
    integer, so other inner points reject translation.
    """
    if p.is_joint:
        return p
    x = p.inner
    if not isinstance(x, TowerPoint) or x.kappa < 2:
        raise UnsupportedTranslationError(
            "translation needs an integer-indexed tower level (kappa >= 2)"
        )
    a = x.address
    shifted = Address((a.ints[0] + k,) + a.ints[1:], a.rho, a.frac)
    return StagePoint(p.n, p.index, TowerPoint(x.kappa, shifted))


def stage_size(p_seq, level):
    """Size of the stage at 1-based level: the product of earlier exponents."""
    if level < 1:
        raise StageDomainError("levels are 1-based")
    return prod(p_seq[: level - 1], start=1)


@dataclass(frozen=True)
class Thread:
    """A finite-depth inverse-limit point over the bonding exponents p.

    points[0] lives on the size-1 stage and each deeper point maps onto
    the previous one under its bond.  The exponent list may extend past
    the current depth; extension consumes it.
    """

    p: tuple = ()
    points: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(self.p))
        object.__setattr__(self, "points", tuple(self.points))
        for entry in self.p:
            if not isinstance(entry, int) or entry < 2:
                raise ThreadMismatchError("bonding exponents are integers >= 2")
        if not self.points:
            raise ThreadMismatchError("threads carry at least one point")
        if len(self.p) < len(self.points) - 1:
            raise ThreadMismatchError(
                "depth %d needs at least %d bonding exponents"
                % (len(self.points), len(self.points) - 1)
            )
        for idx, pt in enumerate(self.points):
            want = stage_size(self.p, idx + 1)
            if pt.n != want:
                raise ThreadMismatchError(
                    "level %d point lives on stage %d, expected %d"
                    % (idx + 1, pt.n, want)
                )
        for idx in range(len(self.points) - 1):
            low = self.points[idx]
            high = self.points[idx + 1]
            if apply_bond(self.p[idx], low.n, high) != low:
                raise ThreadMismatchError(
                    "level %d point does not bond onto level %d" % (idx + 2, idx + 1)
                )

    @property
    def depth(self):
        return len(self.points)

    @property
    def mode(self):
        return self.points[0].mode

    def __str__(self):
        return "; ".join(str(pt) for pt in self.points)


def extend_thread(thread, levels):
    """All compatible extensions by the next `levels` bonding exponents.

    Candidates at each new level are the bond fiber of the current top
    point, taken in ascending index order, so the list is deterministic
    and has exactly the product of the consumed exponents many entries.
    """
    if levels < 0:
        raise StageDomainError("extension lengths are non-negative")
    need = thread.depth - 1 + levels
    if len(thread.p) < need:
        raise StageDomainError(
            "thread carries %d bonding exponents, extension needs %d"
            % (len(thread.p), need)
        )
    results = [thread.points]
    for step in range(levels):
        level = thread.depth + step
        m = thread.p[level - 1]
        n = stage_size(thread.p, level)
        grown = []
        for stack in results:
            for cand in fiber(m, n, stack[-1]):
                grown.append(stack + (cand,))
        results = grown
    return [Thread(thread.p, pts) for pts in results]


@dataclass(frozen=True)
class HomeoRecipe:
    """Level-wise map: rotation per level, one shared translation and hat.

    kappa records the tower level of the within-copy points the recipe
    acts on (None in long-line or joint-only use); it decides which
    integer-stop addresses enter the verification set.
    """

    p: tuple = ()
    rotations: tuple = ()
    translate_by: int = 0
    hat: IntervalAutToken = IDENTITY_TOKEN
    kappa: int | None = None
    tracked: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(self.p))
        if not self.rotations:
            raise ThreadMismatchError("recipes need at least one level")
        if len(self.p) < len(self.rotations) - 1:
            raise ThreadMismatchError("not enough bonding exponents for the depth")
        reduced = tuple(
            l % stage_size(self.p, idx + 1)
            for idx, l in enumerate(self.rotations)
        )
        object.__setattr__(self, "rotations", reduced)
        if self.tracked is not None:
            object.__setattr__(self, "tracked", tuple(self.tracked))
            if len(self.tracked) != len(self.rotations):
                raise ThreadMismatchError("tracked points must match the depth")

    @property
    def depth(self):
        return len(self.rotations)


def _hat_long(hat, x):
    """Evaluate a long-line hat token at one inner coordinate."""
    if hat.mode == "mapping" and x == hat.source:
        return hat.target
    if hat.fixed_below is not None and not hat.fixed_below < x:
        return x
    if hat.fixed_above is not None and not x < hat.fixed_above:
        return x
    if hat.mode == "identity" and hat.fixed_below is None and hat.fixed_above is None:
        return x
    raise TokenUndefinedError(
        "token is only evaluable at its source and its fixed region"
    )


def _hat_tower(hat, x):
    """Evaluate a tower hat token inside one copy.

    The token's level is one below the points' level when the map factors
    through a top-integer shift; at level 1 it acts on the base directly.
    """
    if hat.kappa == x.kappa:
        if hat.mode == "mapping" and x == hat.source:
            return hat.target
        if hat.fixed_above is not None:
            from .tower import compare_base

            if x.address.is_base and compare_base(x, hat.fixed_above) >= 0:
                return x
        raise TokenUndefinedError(
            "token is only evaluable at its source and its fixed region"
        )
    if hat.kappa != x.kappa - 1:
        raise TokenUndefinedError(
            "token lives at level %s, point at level %d" % (hat.kappa, x.kappa)
        )
    rest = strip_top(x)
    if rest is MIN:
        return x
    if hat.mode == "mapping" and rest == hat.source:
        t = hat.target
        merged = Address((x.address.ints[0],) + t.address.ints, t.address.rho,
                         t.address.frac)
        return TowerPoint(x.kappa, merged)
    raise TokenUndefinedError(
        "token is only evaluable at its source and at boundary stops"
    )


def apply_hat(hat, p):
    """Apply an interval automorphism token inside every copy of a stage."""
    if p.is_joint or hat is IDENTITY_TOKEN or hat.is_identity:
        return p
    x = p.inner
    if isinstance(x, TowerPoint):
        if hat.kappa is None:
            raise TokenUndefinedError("long-line token applied to a tower point")
        return StagePoint(p.n, p.index, _hat_tower(hat, x))
    if hat.kappa is not None:
        raise TokenUndefinedError("tower token applied to a long-line point")
    return StagePoint(p.n, p.index, _hat_long(hat, x))


def level_map(recipe, level):
    """The stage map at a 1-based level: hat, then translation, then rotation."""
    l = recipe.rotations[level - 1]
    k = recipe.translate_by

    def act(pt):
        out = apply_hat(recipe.hat, pt)
        if k:
            out = translate(k, out)
        return rotate(l, out)

    return act


def apply_recipe(recipe, thread):
    """Apply the recipe level by level; the image is re-checked as a thread."""
    if recipe.depth != thread.depth or tuple(recipe.p[: recipe.depth - 1]) != tuple(
        thread.p[: thread.depth - 1]
    ):
        raise ThreadMismatchError("recipe and thread disagree on depth or exponents")
    new_points = tuple(
        level_map(recipe, idx + 1)(pt) for idx, pt in enumerate(thread.points)
    )
    return Thread(thread.p, new_points)


def _verification_points(recipe, level):
    """The documented finite check set on the stage at the given level."""
    n = stage_size(recipe.p, level)
    pts = [StagePoint(n, i, None) for i in range(n)]
    if recipe.kappa is not None and recipe.kappa >= 2:
        bound = 8
        for i in range(n):
            for z in range(-bound, bound + 1):
                pts.append(
                    StagePoint(n, i, TowerPoint(recipe.kappa, Address((z,))))
                )
    if recipe.tracked is not None:
        pts.append(recipe.tracked[level - 1])
    return pts


def verify_commutes(recipe, depth=None):
    """Check bond-compatibility of the recipe on the verification set.

    Returns (True, None) when every level pair commutes, otherwise
    (False, record) with the first offending level and point.
    """
    if depth is None:
        depth = recipe.depth
    if depth > recipe.depth:
        raise ThreadMismatchError("cannot verify beyond the recipe depth")
    for level in range(1, depth):
        m = recipe.p[level - 1]
        n = stage_size(recipe.p, level)
        low_map = level_map(recipe, level)
        high_map = level_map(recipe, level + 1)
        for pt in _verification_points(recipe, level + 1):
            lhs = apply_bond(m, n, high_map(pt))
            rhs = low_map(apply_bond(m, n, pt))
            if lhs != rhs:
                return False, {
                    "level": level,
                    "point": str(pt),
                    "bond_then_low": str(rhs),
                    "high_then_bond": str(lhs),
                }
    return True, None


@dataclass(frozen=True)
class SynthesisResult:
    """Outcome of recipe synthesis: recipe, proven_distinct, or unknown."""

    status: str
    recipe: HomeoRecipe | None = None


def _check_same_shape(x, y):
    if x.depth != y.depth:
        raise ThreadMismatchError("threads differ in depth")
    if tuple(x.p) != tuple(y.p):
        raise ThreadMismatchError("threads differ in bonding exponents")
    mx, my = x.mode, y.mode
    if TOWER_MODE in (mx, my) and LONG_MODE in (mx, my):
        raise ThreadMismatchError("threads mix tower and long-line material")
    if mx == my == TOWER_MODE and x.points[0].inner.kappa != y.points[0].inner.kappa:
        raise ThreadMismatchError("threads live at different tower levels")


def _rotations_for(x, y):
    return tuple(
        (y.points[i].index - x.points[i].index) for i in range(x.depth)
    )


def synthesize_recipe(x, y, kappa=None):
    """Build a recipe mapping thread x onto thread y, or explain why not.

    Tower mode is a complete decision: equal types yield a rotation plus
    shared translation and hat, distinct types are provably not related.
    Long-line mode lifts the line-level verdicts; cross-block pairs whose
    distinctness is not covered by a recorded proof stay unknown, as does
    the joint against a multiple-of-omega_1 thread.

    kappa only matters when both threads are all-joints and the caller
    wants the tower verification set; it is ignored otherwise.
    """
    _check_same_shape(x, y)
    xj, yj = x.points[0].is_joint, y.points[0].is_joint
    if xj and yj:
        return SynthesisResult(
            RECIPE,
            HomeoRecipe(
                p=x.p,
                rotations=_rotations_for(x, y),
                kappa=kappa,
                tracked=x.points,
            ),
        )

    if x.mode == TOWER_MODE or y.mode == TOWER_MODE:
        level = (x if x.mode == TOWER_MODE else y).points[0].inner.kappa
        tx = level + 1 if xj else point_type(x.points[0].inner)
        ty = level + 1 if yj else point_type(y.points[0].inner)
        if tx != ty:
            return SynthesisResult(PROVEN_DISTINCT)
        shift, hat = within_copy_hat(x.points[0].inner, y.points[0].inner)
        recipe = HomeoRecipe(
            p=x.p,
            rotations=_rotations_for(x, y),
            translate_by=shift,
            hat=hat,
            kappa=level,
            tracked=x.points,
        )
        return SynthesisResult(RECIPE, recipe)

    # long-line mode, at least one inner thread
    if xj or yj:
        inner = (y if xj else x).points[0].inner
        if not is_ng(inner):
            return SynthesisResult(PROVEN_DISTINCT)
        return SynthesisResult(UNKNOWN)
    xin, yin = x.points[0].inner, y.points[0].inner
    if distinct_orbit_proof(xin, yin) == PROVEN_DISTINCT:
        return SynthesisResult(PROVEN_DISTINCT)
    answer = same_orbit_recipe(xin, yin)
    if answer.status != SAME:
        return SynthesisResult(UNKNOWN)
    recipe = HomeoRecipe(
        p=x.p,
        rotations=_rotations_for(x, y),
        hat=answer.token,
        tracked=x.points,
    )
    return SynthesisResult(RECIPE, recipe)
