"""Partially evaluated automorphism witnesses.

An :class:`IntervalAutToken` asserts that an endpoint-fixing automorphism
of a long interval (or of one tower level) exists, without materializing
it as a pointwise function.  The token is only evaluable at its recorded
source point, at points of its fixed region, and at boundary markers;
anywhere else evaluation raises ``token-undefined``.  Evaluation itself
lives in :mod:`longsol.stages`, next to the stage maps that consume these
tokens.
"""

from __future__ import annotations

from dataclasses import dataclass

IDENTITY_MODE = "identity"
MAPPING_MODE = "mapping"


@dataclass(frozen=True)
class IntervalAutToken:
    """Witness of an automorphism fixing the ends of its ambient interval.

    mode            "identity" or "mapping".
    source, target  the one asserted non-trivial value pair (mapping mode).
    fixed_below     points at or below this stay fixed (long-line style).
    fixed_above     points at or above this stay fixed.
    kappa           tower level of source and target, None for long-line.
    translate_by    top-integer shift folded into the asserted map when the
                    source lives in an integer-indexed tower level.
    """

    mode: str = IDENTITY_MODE
    source: object = None
    target: object = None
    fixed_below: object = None
    fixed_above: object = None
    kappa: int | None = None
    translate_by: int = 0

    def __post_init__(self):
        if self.mode not in (IDENTITY_MODE, MAPPING_MODE):
            raise ValueError("unknown token mode %r" % self.mode)
        if self.mode == MAPPING_MODE and (self.source is None or self.target is None):
            raise ValueError("mapping tokens need a source and a target")

    @property
    def is_identity(self):
        return self.mode == IDENTITY_MODE and self.translate_by == 0


IDENTITY_TOKEN = IntervalAutToken()
