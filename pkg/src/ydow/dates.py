"""Civil dates, ISO parsing, and the day-count weekday oracle.

Proleptic Gregorian throughout.  The oracle never touches weekday formulas:
it counts exact days from a single anchored date, so it can sit in judgment
over every formula-based pipeline in the package.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum

from .arith import mod7


class DateParseError(ValueError):
    """Text does not have the form YYYY-MM-DD; .position is the bad index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DateValidationError(ValueError):
    """Well-formed text, but no such calendar date."""


class Weekday(IntEnum):
    SUNDAY = 0
    MONDAY = 1
    TUESDAY = 2
    WEDNESDAY = 3
    THURSDAY = 4
    FRIDAY = 5
    SATURDAY = 6

    @property
    def display_name(self) -> str:
        return self.name.capitalize()


def is_leap(year: int) -> bool:
    """Gregorian leap rule.

    >>> [is_leap(y) for y in (2000, 1900, 1996, 1997)]
    [True, False, True, False]
    """
    return year % 4 == 0 and (year % 100 != 0 or year % 400 == 0)


_MONTH_DAYS = (31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31)
# days before month m in a common year, cumulative
_DAYS_BEFORE = tuple(sum(_MONTH_DAYS[:m]) for m in range(12))


def month_length(year: int, month: int) -> int:
    if month == 2 and is_leap(year):
        return 29
    return _MONTH_DAYS[month - 1]


@dataclass(frozen=True)
class CivilDate:
    year: int
    month: int
    day: int

    def __post_init__(self):
        if self.year < 1:
            raise DateValidationError(f"year must be >= 1, got {self.year}")
        if not 1 <= self.month <= 12:
            raise DateValidationError(f"month must be in [1, 12], got {self.month}")
        limit = month_length(self.year, self.month)
        if not 1 <= self.day <= limit:
            raise DateValidationError(
                f"day must be in [1, {limit}] for {self.year:04d}-{self.month:02d}, got {self.day}"
            )

    def __str__(self) -> str:
        return f"{self.year:04d}-{self.month:02d}-{self.day:02d}"

    def to_ordinal(self) -> int:
        """Day number with 0001-01-01 = 1 (proleptic Gregorian).

        >>> CivilDate(1, 1, 1).to_ordinal()
        1
        >>> CivilDate(2000, 1, 1).to_ordinal()
        730120
        """
        y = self.year - 1
        days = 365 * y + y // 4 - y // 100 + y // 400
        days += _DAYS_BEFORE[self.month - 1]
        if self.month > 2 and is_leap(self.year):
            days += 1
        return days + self.day


_ISO_RE = re.compile(r"(\d{4})-(\d{2})-(\d{2})")


def parse_date(text: str) -> CivilDate:
    """Parse exactly YYYY-MM-DD.

    Structural problems raise DateParseError with the offending character
    position; impossible dates (like a Feb 29 in a common year) raise
    DateValidationError.
    """
    m = _ISO_RE.fullmatch(text)
    if m is None:
        template = "dddd-dd-dd"
        for i, want in enumerate(template):
            if i >= len(text):
                raise DateParseError(f"expected YYYY-MM-DD, input too short: {text!r}", i)
            ch = text[i]
            if want == "d" and not ch.isdigit():
                raise DateParseError(f"expected a digit, got {ch!r}", i)
            if want == "-" and ch != "-":
                raise DateParseError(f"expected '-', got {ch!r}", i)
        raise DateParseError(f"expected YYYY-MM-DD, trailing input: {text!r}", len(template))
    return CivilDate(int(m.group(1)), int(m.group(2)), int(m.group(3)))


@dataclass(frozen=True)
class AnchorConfig:
    reference_date: CivilDate
    reference_weekday: Weekday


# 2000-01-01 was a Saturday; everything else is counted from there.
DEFAULT_ANCHOR = AnchorConfig(CivilDate(2000, 1, 1), Weekday.SATURDAY)


def daycount_weekday(date: CivilDate, anchor: AnchorConfig = DEFAULT_ANCHOR) -> Weekday:
    """Weekday by pure day counting from the anchor; no weekday formulas."""
    delta = date.to_ordinal() - anchor.reference_date.to_ordinal()
    return Weekday(mod7(anchor.reference_weekday + delta))
