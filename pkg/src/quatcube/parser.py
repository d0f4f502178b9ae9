"""Text form of quaternions: sign-separated integer and unit terms.

Grammar: an optional leading sign, then terms separated by ``+`` or
``-`` (the Unicode minus sign is accepted too).  A term is an integer, a
unit ``i``/``j``/``k``, or an integer immediately followed by a unit.
Whitespace is ignored everywhere.  Repeated units have their
coefficients summed, so ``-k + 2j - k`` parses to (0, 0, 2, -2).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .quat import Quaternion, RingParams

_UNIT_INDEX = {"i": 1, "j": 2, "k": 3}
_DIGITS = "0123456789"
_SIGNS = "+-−"


def parse_quaternion(text: str, params: RingParams) -> Quaternion:
    """Parse ``text`` into a quaternion of the given ring.

    Raises :class:`ParseError` with the 0-based position of the offending
    character in the original string.
    """
    compact = []
    positions = []
    for idx, ch in enumerate(text):
        if not ch.isspace():
            compact.append(ch)
            positions.append(idx)

    def fail(message: str, at: int) -> None:
        pos = positions[at] if at < len(positions) else len(text)
        raise ParseError(message, pos)

    n = len(compact)
    if n == 0:
        raise ParseError("empty expression", 0)

    coeffs = [0, 0, 0, 0]
    i = 0
    first = True
    while i < n:
        sign = 1
        ch = compact[i]
        if ch in _SIGNS:
            sign = -1 if ch != "+" else 1
            i += 1
        elif not first:
            fail("expected '+' or '-' between terms", i)
        if i >= n:
            fail("expected a term", i)

        digits = ""
        while i < n and compact[i] in _DIGITS:
            digits += compact[i]
            i += 1
        if i < n and compact[i] in _UNIT_INDEX:
            coeffs[_UNIT_INDEX[compact[i]]] += sign * (int(digits) if digits else 1)
            i += 1
        elif digits:
            coeffs[0] += sign * int(digits)
        else:
            fail("expected a digit or one of i, j, k", i)
        first = False

    return Quaternion(params, coeffs[0], coeffs[1], coeffs[2], coeffs[3])


def render(q: Quaternion) -> str:
    """Canonical text form; parsing it back yields an equal quaternion."""
    return str(q)


@dataclass(frozen=True, slots=True)
class QuatExpr:
    """A source string paired with the quaternion it parses to."""

    source: str
    parsed: Quaternion

    @classmethod
    def parse(cls, text: str, params: RingParams) -> "QuatExpr":
        return cls(text, parse_quaternion(text, params))

    def rendered(self) -> str:
        return render(self.parsed)
