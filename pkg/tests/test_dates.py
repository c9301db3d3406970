import datetime
import doctest

import pytest
from hypothesis import given
from hypothesis import strategies as st

import ydow.dates as dates
from ydow.dates import (
    DEFAULT_ANCHOR,
    AnchorConfig,
    CivilDate,
    DateParseError,
    DateValidationError,
    Weekday,
    daycount_weekday,
    is_leap,
    month_length,
    parse_date,
)


def test_doctests():
    failures, _ = doctest.testmod(dates)
    assert failures == 0


def test_leap_rule():
    assert is_leap(2000)
    assert is_leap(2400)
    assert not is_leap(1900)
    assert not is_leap(2100)
    assert is_leap(1996)
    assert not is_leap(1997)


def test_month_length():
    assert month_length(2023, 2) == 28
    assert month_length(2024, 2) == 29
    assert month_length(2023, 1) == 31
    assert month_length(2023, 4) == 30


def test_weekday_numbering():
    assert Weekday.SUNDAY == 0
    assert Weekday.SATURDAY == 6
    assert Weekday(3).display_name == "Wednesday"


def test_parse_valid():
    assert parse_date("2000-01-01") == CivilDate(2000, 1, 1)
    assert parse_date("2000-02-29") == CivilDate(2000, 2, 29)
    assert parse_date("1583-12-31") == CivilDate(1583, 12, 31)


def test_parse_rejects_impossible_dates():
    with pytest.raises(DateValidationError):
        parse_date("1900-02-29")  # century rule: not a leap year
    with pytest.raises(DateValidationError):
        parse_date("2023-02-29")
    with pytest.raises(DateValidationError):
        parse_date("2023-13-01")
    with pytest.raises(DateValidationError):
        parse_date("2023-04-31")
    with pytest.raises(DateValidationError):
        parse_date("0000-01-01")


def test_parse_errors_carry_positions():
    with pytest.raises(DateParseError) as e:
        parse_date("2000/01/01")
    assert e.value.position == 4
    with pytest.raises(DateParseError) as e:
        parse_date("2000-1-01")
    assert e.value.position == 6
    with pytest.raises(DateParseError) as e:
        parse_date("2000-01-001")
    assert e.value.position == 10
    with pytest.raises(DateParseError) as e:
        parse_date("2000-01")
    assert e.value.position == 7
    with pytest.raises(DateParseError) as e:
        parse_date("")
    assert e.value.position == 0


def test_parse_round_trips_with_formatting():
    for text in ("2000-01-01", "1583-10-15", "2599-12-31", "0044-03-15"):
        assert str(parse_date(text)) == text


@st.composite
def civil_dates(draw):
    y = draw(st.integers(1, 9999))
    m = draw(st.integers(1, 12))
    d = draw(st.integers(1, month_length(y, m)))
    return CivilDate(y, m, d)


@given(civil_dates())
def test_ordinal_matches_datetime(cd):
    assert cd.to_ordinal() == datetime.date(cd.year, cd.month, cd.day).toordinal()


@given(civil_dates())
def test_daycount_matches_datetime(cd):
    # datetime: Monday=0 ... Sunday=6; ours: Sunday=0 ... Saturday=6
    expected = (datetime.date(cd.year, cd.month, cd.day).weekday() + 1) % 7
    assert daycount_weekday(cd) == expected


def test_anchor_datum():
    assert daycount_weekday(CivilDate(2000, 1, 1)) is Weekday.SATURDAY
    assert daycount_weekday(CivilDate(2000, 1, 2)) is Weekday.SUNDAY
    assert daycount_weekday(CivilDate(1970, 1, 1)) is Weekday.THURSDAY


def test_alternate_anchor():
    # anchoring on a different known day must not change any answer
    alt = AnchorConfig(CivilDate(1970, 1, 1), Weekday.THURSDAY)
    for cd in (CivilDate(2000, 1, 1), CivilDate(1912, 6, 23), CivilDate(2037, 11, 5)):
        assert daycount_weekday(cd, alt) == daycount_weekday(cd, DEFAULT_ANCHOR)


def test_civil_date_validation():
    with pytest.raises(DateValidationError):
        CivilDate(2023, 2, 29)
    with pytest.raises(DateValidationError):
        CivilDate(2023, 0, 1)
    with pytest.raises(DateValidationError):
        CivilDate(0, 1, 1)
    CivilDate(2024, 2, 29)  # fine
