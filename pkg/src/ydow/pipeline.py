"""End-to-end day-of-week computation with a pluggable year-share method.

Two assemblies are provided.  The Doomsday-style one adds the positive year
share to a century anchor and compares against the month's memorable anchor
date.  The First-Sunday-style one locates the first Sunday of the month and
consumes the *negative* year share directly -- methods that produce a
negative share plug in without a sign flip, which is the whole point of
that convention.

Both must agree with the day-count oracle for every valid date; the test
suite enforces this exhaustively for 2000-2099 and on a large sample of
1583-2599.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .arith import SignConvention, mod7
from .dates import CivilDate, Weekday, is_leap
from .registry import evaluate, get_method
from .trace import Step, StepKind, StepTrace


class CalendarPolicyError(ValueError):
    """Date outside the supported Gregorian range (pre-1583 without opt-in)."""


class PipelineId(str, Enum):
    DOOMSDAY = "doomsday"
    FIRST_SUNDAY = "first-sunday"


GREGORIAN_START_YEAR = 1583

# Anchor-date of each month: the day-of-month sharing the year's anchor
# weekday.  January and February shift in leap years.
_ANCHOR_DATES = {1: 3, 2: 28, 3: 14, 4: 4, 5: 9, 6: 6, 7: 11, 8: 8, 9: 5, 10: 10, 11: 7, 12: 12}
_ANCHOR_DATES_LEAP = {1: 4, 2: 29}


def month_anchor_date(month: int, leap: bool) -> int:
    if leap and month in _ANCHOR_DATES_LEAP:
        return _ANCHOR_DATES_LEAP[month]
    return _ANCHOR_DATES[month]


def century_anchor(century: int) -> int:
    """Weekday number of the century's reference day (the 400-year cycle)."""
    return (5 * (century % 4) + 2) % 7


@dataclass(frozen=True)
class DowResult:
    date: CivilDate
    weekday: Weekday
    method_id: str
    pipeline: PipelineId
    trace: StepTrace | None = None


def dow(
    date: CivilDate,
    method_id: str = "odd11",
    pipeline: PipelineId = PipelineId.DOOMSDAY,
    *,
    proleptic: bool = False,
    with_trace: bool = True,
) -> DowResult:
    """Day of the week of a civil date via the chosen method and assembly.

    with_trace=False skips building the step-by-step explanation, which
    matters when sweeping millions of dates; the weekday is identical.
    """
    get_method(method_id)  # fail fast on unknown ids
    if not isinstance(pipeline, PipelineId):
        pipeline = PipelineId(pipeline)
    if date.year < GREGORIAN_START_YEAR and not proleptic:
        raise CalendarPolicyError(
            f"{date} precedes the Gregorian calendar ({GREGORIAN_START_YEAR}); "
            "pass proleptic=True to compute anyway"
        )
    century, y = divmod(date.year, 100)
    share = evaluate(method_id, y)
    anchor = century_anchor(century)
    dd = month_anchor_date(date.month, is_leap(date.year))

    if pipeline is PipelineId.DOOMSDAY:
        weekday = Weekday(mod7(anchor + share.residue + date.day - dd))
    else:
        s = mod7(mod7(-anchor) + share.negative_residue + dd)
        first_sunday = s if s else 7
        weekday = Weekday(mod7(date.day - first_sunday))

    trace = None
    if with_trace:
        trace = _build_trace(date, share, pipeline, anchor, dd, weekday)
    return DowResult(date, weekday, method_id, pipeline, trace)


def _build_trace(
    date: CivilDate,
    share,
    pipeline: PipelineId,
    anchor: int,
    dd: int,
    weekday: Weekday,
) -> StepTrace:
    steps = list(share.trace.steps) if share.trace is not None else []
    raw = share.raw
    if pipeline is PipelineId.DOOMSDAY:
        if share.convention is SignConvention.NEGATIVE:
            steps.append(
                Step(StepKind.SIGN_FLIP, f"positive share is the negation: {-raw}", (raw,), -raw)
            )
            raw = -raw
        steps.append(
            Step(StepKind.MOD7_REDUCE, f"reduce mod 7: year share {share.residue}", (raw,), share.residue)
        )
        a1 = share.residue + anchor
        steps.append(
            Step(StepKind.ADD_CONST, f"add the century anchor {anchor}: {share.residue} + {anchor} = {a1}",
                 (share.residue, anchor), a1)
        )
        a2 = a1 + date.day
        steps.append(
            Step(StepKind.ADD_CONST, f"add the day of the month: {a1} + {date.day} = {a2}", (a1, date.day), a2)
        )
        a3 = a2 - dd
        steps.append(
            Step(StepKind.SUB_CONST, f"subtract the month's anchor date {dd}: {a2} - {dd} = {a3}", (a2, dd), a3)
        )
        steps.append(
            Step(StepKind.MOD7_REDUCE, f"reduce mod 7: weekday {int(weekday)} ({weekday.display_name})",
                 (a3,), int(weekday))
        )
        return StepTrace(tuple(steps))

    neg = share.negative_residue
    if share.convention is SignConvention.POSITIVE:
        steps.append(
            Step(StepKind.SIGN_FLIP, f"negative share is the negation: {-raw}", (raw,), -raw)
        )
        raw = -raw
    steps.append(
        Step(StepKind.MOD7_REDUCE, f"reduce mod 7: negative year share {neg}", (raw,), neg)
    )
    cterm = mod7(-anchor)
    a1 = neg + cterm
    steps.append(
        Step(StepKind.ADD_CONST, f"add the century term {cterm}: {neg} + {cterm} = {a1}", (neg, cterm), a1)
    )
    a2 = a1 + dd
    steps.append(
        Step(StepKind.ADD_CONST, f"add the month's anchor date {dd}: {a1} + {dd} = {a2}", (a1, dd), a2)
    )
    s = mod7(a2)
    steps.append(Step(StepKind.MOD7_REDUCE, f"reduce mod 7: {s}", (a2,), s))
    f = s if s else 7
    steps.append(
        Step(StepKind.SET, f"first Sunday of the month falls on day {f}", (f,), f)
    )
    diff = date.day - f
    steps.append(
        Step(StepKind.SUB_CONST, f"day {date.day} minus the first Sunday {f}: {diff}", (date.day, f), diff)
    )
    steps.append(
        Step(StepKind.MOD7_REDUCE, f"reduce mod 7: weekday {int(weekday)} ({weekday.display_name})",
             (diff,), int(weekday))
    )
    return StepTrace(tuple(steps))
