"""Integer primitives shared by every year-share method.

All functions are pure and operate on plain ints.  The central quantity is
the *year share* of a two-digit year y: floor(5y/4) reduced mod 7, the number
of weekdays the date advances between the century year and year y (one day
per common year, two per leap year).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .trace import StepTrace


def floor_div(p: int, q: int) -> int:
    """Integer quotient of p by q, rounded toward negative infinity.

    Implemented as an explicit three-case rule rather than through the host
    language's division operator, because the congruences the year-share
    formulas rely on break under truncation for negative dividends.

    >>> floor_div(7, 2)
    3
    >>> floor_div(-8, 4)
    -2
    >>> floor_div(-1, 4)
    -1
    """
    if q <= 0:
        raise ValueError(f"divisor must be positive, got {q}")
    if p >= 0:
        return p // q
    mag, rem = divmod(-p, q)
    if rem == 0:
        return -mag
    return -(mag + 1)


def mod7(n: int) -> int:
    """Residue of n modulo 7, always in [0, 6], including for negative n.

    >>> mod7(13)
    6
    >>> mod7(-3)
    4
    """
    return n - 7 * floor_div(n, 7)


def check_year2(y: int) -> int:
    """Validate a two-digit year value.  Out-of-range input is an error,
    never silently wrapped mod 100."""
    if not isinstance(y, int) or isinstance(y, bool):
        raise ValueError(f"two-digit year must be an integer, got {y!r}")
    if not 0 <= y <= 99:
        raise ValueError(f"two-digit year must be in [0, 99], got {y}")
    return y


def year_share(y: int) -> int:
    """The year share of y: mod7(floor(5y/4)), identically mod7(y + y//4).

    This is the reference value every method in the package must be
    congruent to; the test suite uses it as the brute-force oracle.
    """
    check_year2(y)
    return mod7(floor_div(5 * y, 4))


class SignConvention(Enum):
    """Whether a method's raw output represents the year share itself or its
    negative (some day-of-week schemes subtract the share, so methods that
    produce the negated value save a step)."""

    POSITIVE = "pos"
    NEGATIVE = "neg"


@dataclass(frozen=True)
class ShareResult:
    """A method's output: the unreduced raw value, its sign convention, the
    implied positive residue in [0, 6], and the trace of steps taken.

    raw is kept unreduced on purpose: any value in the right mod-7 class is
    usable, and reduction can be deferred to a later stage of a day-of-week
    calculation.
    """

    raw: int
    convention: SignConvention
    residue: int
    trace: "StepTrace | None" = None

    @property
    def negative_residue(self) -> int:
        """Residue of the negated share, mod7(-positive)."""
        return mod7(-self.residue)


def normalize(raw: int, convention: SignConvention, trace: "StepTrace | None" = None) -> ShareResult:
    """Wrap a raw method output with its normalized positive residue."""
    if convention is SignConvention.POSITIVE:
        residue = mod7(raw)
    else:
        residue = mod7(-raw)
    return ShareResult(raw=raw, convention=convention, residue=residue, trace=trace)
