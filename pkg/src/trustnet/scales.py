"""The two value scales trust values live on, and the arithmetic between them.

Two representations are used throughout the package:

- A discrete metric on [0, 1] with step 0.1, stored as an integer count of
  tenths so grid membership and equality stay exact.  Floating point enters
  only in derived statistics (running trust, risk), never in stored values.
- A four-level ordinal scale (very-bad, bad, good, very-good), totally
  ordered by rank 0..3.  Outcome grades and trust degrees share this scale.

Shifts on the ordinal scale are plain signed integers; any value outside
[-3, 3] is meaningless on a four-level scale and is rejected wherever
shifts are stored.  Shift addition clamps at the scale ends: a report
adjusted past the top cannot mean more than the top.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

# A signed number of ordinal steps.  Kept as a plain int; bounds are
# enforced at the points where shifts are constructed or stored.
SemanticShift = int

#: Largest meaningful |shift| between two ranks on the four-level scale.
MAX_SHIFT = 3


def validate_shift(shift: int) -> int:
    """Return *shift* unchanged, or raise ValueError if outside [-3, 3]."""
    if not isinstance(shift, int) or isinstance(shift, bool):
        raise ValueError(f"shift must be an integer, got {shift!r}")
    if not -MAX_SHIFT <= shift <= MAX_SHIFT:
        raise ValueError(f"shift must be within [-3, 3], got {shift}")
    return shift


class OrdinalDegree(IntEnum):
    """Four-level ordinal grade, ordered from worst to best."""

    VERY_BAD = 0
    BAD = 1
    GOOD = 2
    VERY_GOOD = 3

    @property
    def token(self) -> str:
        """Short wire token: vb, b, g or vg."""
        return _TOKENS[self]

    @property
    def rank(self) -> int:
        return int(self)

    @classmethod
    def from_token(cls, token: str) -> "OrdinalDegree":
        try:
            return _BY_TOKEN[token]
        except KeyError:
            raise ValueError(f"unknown degree token {token!r}") from None


_TOKENS = {
    OrdinalDegree.VERY_BAD: "vb",
    OrdinalDegree.BAD: "b",
    OrdinalDegree.GOOD: "g",
    OrdinalDegree.VERY_GOOD: "vg",
}
_BY_TOKEN = {token: degree for degree, token in _TOKENS.items()}


@dataclass(frozen=True, order=True)
class TrustTenths:
    """A trust value on the discrete [0, 1] grid, stored as tenths.

    ``TrustTenths(7)`` is the value 0.7.  Only the eleven on-grid values
    exist; constructors reject anything else.
    """

    tenths: int

    def __post_init__(self) -> None:
        if not isinstance(self.tenths, int) or isinstance(self.tenths, bool):
            raise ValueError(f"tenths must be an integer, got {self.tenths!r}")
        if not 0 <= self.tenths <= 10:
            raise ValueError(f"tenths must be within [0, 10], got {self.tenths}")

    @classmethod
    def from_float(cls, value: float) -> "TrustTenths":
        """Build from a real number that must sit on the 0.1 grid.

        Off-grid values (0.75, -0.1, 1.2) raise ValueError; a tolerance of
        1e-9 absorbs binary representation error in literals like 0.3.
        """
        scaled = float(value) * 10.0
        nearest = round(scaled)
        if abs(scaled - nearest) > 1e-9:
            raise ValueError(f"{value!r} is not on the 0.1-step grid")
        if not 0 <= nearest <= 10:
            raise ValueError(f"{value!r} is outside [0.0, 1.0]")
        return cls(int(nearest))

    @classmethod
    def parse(cls, text: str) -> "TrustTenths":
        """Parse a decimal string such as "0.7" or "1.0"."""
        try:
            value = float(text.strip())
        except ValueError:
            raise ValueError(f"{text!r} is not a decimal trust value") from None
        return cls.from_float(value)

    @property
    def value(self) -> float:
        """The value as a float in [0, 1]."""
        return self.tenths / 10.0

    def __str__(self) -> str:
        return f"{self.tenths // 10}.{self.tenths % 10}"


def degree_shift(degree: OrdinalDegree, shift: SemanticShift) -> OrdinalDegree:
    """Move *degree* by *shift* ordinal steps, clamping at the scale ends."""
    return OrdinalDegree(min(3, max(0, degree.rank + shift)))


def degree_distance(own: OrdinalDegree, recommended: OrdinalDegree) -> SemanticShift:
    """Signed step count from *recommended* up (or down) to *own*.

    Chosen so that ``degree_shift(recommended, degree_distance(own,
    recommended)) == own`` always holds.
    """
    return own.rank - recommended.rank


@dataclass(frozen=True)
class Banding:
    """Maps the tenths grid onto the four ordinal grades.

    ``cuts`` are the three ascending tenths values at which the grade steps
    up: a value v maps to the grade with rank = number of cuts <= v.  The
    default (3, 6, 9) yields vb for 0.0-0.2, b for 0.3-0.5, g for 0.6-0.8
    and vg for 0.9-1.0.
    """

    cuts: tuple[int, int, int] = (3, 6, 9)

    def __post_init__(self) -> None:
        if len(self.cuts) != 3:
            raise ValueError("banding needs exactly three cut values")
        a, b, c = self.cuts
        if not (0 < a < b < c <= 10):
            raise ValueError(
                f"banding cuts must be strictly increasing within (0, 10], got {self.cuts}"
            )

    def degree_for(self, value: TrustTenths) -> OrdinalDegree:
        rank = sum(1 for cut in self.cuts if value.tenths >= cut)
        return OrdinalDegree(rank)


DEFAULT_BANDING = Banding()


def tenths_to_degree(value: TrustTenths, banding: Banding = DEFAULT_BANDING) -> OrdinalDegree:
    """Project a tenths value onto the ordinal scale using *banding*."""
    return banding.degree_for(value)
