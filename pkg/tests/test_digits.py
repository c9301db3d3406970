import pytest

from ydow.arith import SignConvention, mod7, year_share
from ydow.digits import digits_aa, digits_ab, eisele, fong, harringer, wang

POS = SignConvention.POSITIVE
NEG = SignConvention.NEGATIVE

ALL = [eisele, harringer, digits_aa, fong, wang, digits_ab]


def test_conventions():
    assert eisele(0).convention is POS
    assert harringer(0).convention is POS
    assert fong(0).convention is POS
    assert wang(0).convention is POS
    assert digits_aa(0).convention is NEG
    assert digits_ab(0).convention is NEG


def test_eisele_worked_examples():
    # 87: multiple-of-four 84, digits 8/4, remainder 3: 16 - 2 + 3
    assert eisele(87).raw == 17
    assert eisele(59).raw == 10
    assert eisele(24).raw == 2
    assert eisele(0).raw == 0


def test_harringer_worked_examples():
    # same digit split as eisele, 2t + 3u + r
    assert harringer(87).raw == 31
    assert harringer(24).raw == 16


def test_harringer_eisele_differ_by_seven_halves_of_u():
    for y in range(100):
        u = (4 * (y // 4)) % 10
        assert harringer(y).raw - eisele(y).raw == 7 * u // 2, y


def test_digits_aa_worked_example():
    # 59: quarter of 2t+u=19 is 4, plus u is 13, subtracted from 2t=10
    res = digits_aa(59)
    assert res.raw == -3
    assert mod7(res.raw) == 4  # reduced immediately, the negative share is 4
    assert res.residue == year_share(59) == 3
    assert digits_aa(87).raw == 4


def test_fong_worked_examples():
    assert fong(59).raw == 31
    assert fong(24).raw == 9


def test_fong_parity_branch_changes_step_count():
    # odd tens digit adds two extra mental steps
    assert len(fong(59).trace.steps) == len(fong(24).trace.steps) + 2


def test_wang_worked_examples():
    assert wang(59).raw == 3
    assert wang(87).raw == -4


def test_wang_needs_floored_quarters():
    # truncating the quarter toward zero would give 87 the wrong class
    t, u = 8, 7
    truncated = u - t + int((u - 2 * t) / 4)
    assert mod7(truncated) != year_share(87)
    assert mod7(wang(87).raw) == year_share(87)


def test_digits_ab_worked_example():
    # 87: 5u-6t = -13, quarter of 13 bumps to 4 on the minus sign, flip
    res = digits_ab(87)
    assert res.raw == 4
    assert res.residue == year_share(87)
    assert digits_ab(59).raw == -3


def test_digits_ab_exact_quarter_branch():
    # 5u - 6t = -4 at t=4, u=4 (y=44): no bump, quarter is exactly 1
    assert digits_ab(44).raw == 1
    assert mod7(-1) == year_share(44)


def test_all_digit_methods_exhaustive():
    for fn in ALL:
        for y in range(100):
            res = fn(y)
            assert res.residue == year_share(y), (fn.__name__, y)
            assert res.trace.replay() == res.raw, (fn.__name__, y)


def test_input_validation():
    for fn in ALL:
        with pytest.raises(ValueError):
            fn(100)
