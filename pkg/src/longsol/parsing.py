"""Text forms of ordinals, points, arcs, and descriptors.

Ordinals follow the grammar

    ordinal  := term ("+" term)*
    term     := "w" ("^" exponent)? ("*" nat)? | nat
    exponent := "(" ordinal ")" | "w" ("^" exponent)? | nat

so bare exponents are single powers of w (right associated) or naturals,
and anything else is parenthesized; this keeps printing and parsing
inverse to each other.  Sums in any order are normalized, not rejected.

Long points read ``w1*(ORD) + ORD + N/D`` with each summand optional but
at least one present.  Tower points are ``inf``, ``[z1,...,zj]``, or
``[z1,...,z(kappa-1); ORD + N/D]`` (the integer list may be empty at
level 1).  Stage points are ``infI`` for the joint at index I, or
``(i| POINT)`` for an inner point of copy i.  Bonding descriptors read
``PREFIX:CYCLE`` with comma-separated entries, arcs ``START..END`` with
positions ``I`` or ``I+N/D``.

Every syntax error carries the character position it was noticed at.
"""

from __future__ import annotations

from fractions import Fraction

from .arcs import Arc
from .errors import ParseError
from .longline import LongPoint
from .ordinal import OMEGA, ONE, ZERO, CnfOrdinal, add, nat
from .stages import StagePoint, Thread, stage_size
from .cohomology import SequenceDescriptor
from .tower import Address, TowerPoint


class _Scanner:
    def __init__(self, text, offset=0):
        self.text = text
        self.i = 0
        self.offset = offset

    def error(self, message):
        raise ParseError(message, position=self.offset + self.i)

    def ws(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self):
        return self.text[self.i] if self.i < len(self.text) else ""

    def try_eat(self, ch):
        self.ws()
        if self.peek() == ch:
            self.i += 1
            return True
        return False

    def expect(self, ch):
        self.ws()
        if self.peek() != ch:
            self.error("expected %r" % ch)
        self.i += 1

    def nat(self):
        self.ws()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if start == self.i:
            self.error("expected a number")
        return int(self.text[start : self.i])

    def done(self):
        self.ws()
        return self.i >= len(self.text)


def _split_top(text, sep):
    """Split on a separator at bracket depth zero, keeping offsets."""
    pieces = []
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced bracket", position=i)
        elif ch == sep and depth == 0:
            pieces.append((text[start:i], start))
            start = i + 1
    if depth != 0:
        raise ParseError("unbalanced bracket", position=len(text))
    pieces.append((text[start:], start))
    return pieces


def parse_ordinal(text, offset=0):
    s = _Scanner(text, offset)
    value = _ordinal(s)
    if not s.done():
        s.error("unexpected trailing input")
    return value


def _ordinal(s):
    total = _term(s)
    while s.try_eat("+"):
        total = add(total, _term(s))
    return total


def _term(s):
    s.ws()
    ch = s.peek()
    if ch.isdigit():
        return nat(s.nat())
    if ch != "w":
        s.error("expected a term")
    s.i += 1
    exponent = ONE
    if s.try_eat("^"):
        exponent = _exponent(s)
    coeff = 1
    if s.try_eat("*"):
        coeff = s.nat()
    if coeff == 0:
        return ZERO
    if exponent.is_zero:
        return nat(coeff)
    return CnfOrdinal(((exponent, coeff),))


def _exponent(s):
    s.ws()
    ch = s.peek()
    if ch == "(":
        s.i += 1
        value = _ordinal(s)
        s.expect(")")
        return value
    if ch.isdigit():
        return nat(s.nat())
    if ch != "w":
        s.error("expected an exponent")
    s.i += 1
    if s.try_eat("^"):
        inner = _exponent(s)
        return ONE if inner.is_zero else CnfOrdinal(((inner, 1),))
    return OMEGA


def _parse_unit_fraction(text, offset):
    s = _Scanner(text, offset)
    num = s.nat()
    s.expect("/")
    den_pos = s.offset + s.i
    den = s.nat()
    if not s.done():
        s.error("unexpected trailing input")
    if den == 0:
        raise ParseError("zero denominator", position=den_pos)
    value = Fraction(num, den)
    if not 0 <= value < 1:
        raise ParseError("unit offsets lie in [0, 1)", position=offset)
    return value


def _parse_summands(text, offset, allow_block):
    """Shared reader for `[w1*(ORD) +] ORD parts + [N/D]` sums."""
    gamma = None
    rho = ZERO
    rho_seen = False
    frac = None
    for piece, start in _split_top(text, "+"):
        stripped = piece.strip()
        lead = offset + start + (len(piece) - len(piece.lstrip()))
        if not stripped:
            raise ParseError("empty summand", position=lead)
        if stripped.startswith("w1*("):
            if not allow_block:
                raise ParseError("no omega_1 block here", position=lead)
            if gamma is not None or rho_seen or frac is not None:
                raise ParseError("the block count must come first", position=lead)
            if not stripped.endswith(")"):
                raise ParseError("unterminated block count", position=lead)
            gamma = parse_ordinal(stripped[4:-1], lead + 4)
        elif "/" in stripped:
            if frac is not None:
                raise ParseError("only one unit offset", position=lead)
            frac = _parse_unit_fraction(stripped, lead)
        else:
            if frac is not None:
                raise ParseError("the unit offset must come last", position=lead)
            rho = add(rho, parse_ordinal(stripped, lead))
            rho_seen = True
    return gamma, rho, frac


def parse_long_point(text, offset=0):
    gamma, rho, frac = _parse_summands(text, offset, allow_block=True)
    return LongPoint(
        gamma if gamma is not None else ZERO,
        rho,
        frac if frac is not None else Fraction(0),
    )


def _parse_int(text, offset):
    stripped = text.strip()
    lead = offset + (len(text) - len(text.lstrip()))
    body = stripped[1:] if stripped.startswith("-") else stripped
    if not body.isdigit():
        raise ParseError("expected an integer", position=lead)
    return int(stripped)


def _parse_int_list(text, offset, allow_empty):
    if not text.strip():
        if allow_empty:
            return ()
        raise ParseError("expected at least one integer", position=offset)
    return tuple(
        _parse_int(piece, offset + start) for piece, start in _split_top(text, ",")
    )


def parse_tower_point(text, kappa, offset=0):
    stripped = text.strip()
    lead = offset + (len(text) - len(text.lstrip()))
    if stripped == "inf":
        return TowerPoint(kappa)
    if not (stripped.startswith("[") and stripped.endswith("]")):
        raise ParseError("expected 'inf' or a bracketed address", position=lead)
    inner = stripped[1:-1]
    inner_off = lead + 1
    parts = _split_top(inner, ";")
    if len(parts) == 1:
        ints = _parse_int_list(parts[0][0], inner_off + parts[0][1], allow_empty=False)
        return TowerPoint(kappa, Address(ints))
    if len(parts) != 2:
        raise ParseError("too many ';' in address", position=lead)
    ints = _parse_int_list(parts[0][0], inner_off + parts[0][1], allow_empty=True)
    base_text, base_start = parts[1]
    if not base_text.strip():
        raise ParseError("empty base coordinate", position=inner_off + base_start)
    _, rho, frac = _parse_summands(base_text, inner_off + base_start, allow_block=False)
    return TowerPoint(
        kappa, Address(ints, rho, frac if frac is not None else Fraction(0))
    )


def parse_stage_point(text, n, mode=None, kappa=None, offset=0):
    """Stage point literal; mode is needed only for inner points."""
    stripped = text.strip()
    lead = offset + (len(text) - len(text.lstrip()))
    if stripped.startswith("inf"):
        rest = stripped[3:]
        if not rest.isdigit():
            raise ParseError("joint literals read infI with an index", position=lead)
        return StagePoint(n, int(rest), None)
    if not (stripped.startswith("(") and stripped.endswith(")")):
        raise ParseError("expected infI or (i| POINT)", position=lead)
    inner = stripped[1:-1]
    inner_off = lead + 1
    bar = None
    depth = 0
    for i, ch in enumerate(inner):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "|" and depth == 0:
            bar = i
            break
    if bar is None:
        raise ParseError("inner literals read (i| POINT)", position=lead)
    index = _parse_int(inner[:bar], inner_off)
    body = inner[bar + 1 :]
    body_off = inner_off + bar + 1
    if mode == "tower":
        if kappa is None:
            raise ParseError("tower points need a level", position=body_off)
        point = parse_tower_point(body, kappa, body_off)
    elif mode == "long":
        point = parse_long_point(body, body_off)
    else:
        raise ParseError("inner points need a tower or long mode", position=body_off)
    return StagePoint(n, index, point)


def parse_thread(p, text, mode=None, kappa=None, offset=0):
    """A thread literal: stage point literals joined by ';'."""
    pieces = _split_top(text, ";")
    points = []
    for level, (piece, start) in enumerate(pieces, start=1):
        size = stage_size(p, level)
        points.append(parse_stage_point(piece, size, mode, kappa, offset + start))
    return Thread(tuple(p), tuple(points))


def parse_descriptor(text, offset=0):
    pieces = _split_top(text, ":")
    if len(pieces) != 2:
        raise ParseError(
            "descriptors read PREFIX:CYCLE", position=offset + len(text)
        )
    (pre_text, pre_start), (cyc_text, cyc_start) = pieces
    prefix = _parse_int_list(pre_text, offset + pre_start, allow_empty=True)
    cycle = _parse_int_list(cyc_text, offset + cyc_start, allow_empty=False)
    return SequenceDescriptor(prefix, cycle)


def parse_rational(text, offset=0):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError("expected a rational N/D", position=offset) from None


def _parse_position(text, n, offset):
    pieces = _split_top(text, "+")
    if not 1 <= len(pieces) <= 2:
        raise ParseError("positions read I or I+N/D", position=offset)
    copy = _parse_int(pieces[0][0], offset + pieces[0][1])
    if not 0 <= copy < n:
        raise ParseError("copy index out of range", position=offset + pieces[0][1])
    frac = Fraction(0)
    if len(pieces) == 2:
        frac = _parse_unit_fraction(
            pieces[1][0].strip(), offset + pieces[1][1]
        )
    return copy + frac


def parse_arc(text, n, offset=0):
    halves = text.split("..")
    if len(halves) != 2:
        raise ParseError("arcs read START..END", position=offset)
    start = _parse_position(halves[0], n, offset)
    end = _parse_position(halves[1], n, offset + len(halves[0]) + 2)
    return Arc(n, start, end)
