import pytest

from ydow.arith import SignConvention, mod7, year_share
from ydow.special import odd11, parity3


def test_odd11_worked_example():
    res = odd11(99)
    assert res.raw == 66
    assert res.convention is SignConvention.NEGATIVE
    assert mod7(-66) == year_share(99)


def test_odd11_even_start():
    assert odd11(85).raw == 48
    assert odd11(0).raw == 0
    assert odd11(24).raw == 12


def test_odd11_always_four_steps():
    for y in range(100):
        assert len(odd11(y).trace.steps) == 4


def test_odd11_exhaustive():
    for y in range(100):
        res = odd11(y)
        assert res.residue == year_share(y), y
        assert res.trace.replay() == res.raw


def test_parity3_worked_examples():
    assert parity3(24).raw == 12
    assert parity3(37).raw == 17
    assert parity3(58).raw == 26
    assert parity3(79).raw == 35


def test_parity3_small_years_stay_negative():
    # the subtract-3 branch fires even when it pushes below zero; any value
    # in the right residue class is fine
    assert parity3(1).raw == -1
    assert parity3(2).raw == -2
    assert parity3(3).raw == -3


def test_parity3_exhaustive():
    for y in range(100):
        res = parity3(y)
        assert res.convention is SignConvention.NEGATIVE
        assert res.residue == year_share(y), y
        assert res.trace.replay() == res.raw


def test_parity3_intermediates_never_exceed_input_range():
    # the whole point of the variant: no intermediate above 99
    for y in range(100):
        assert parity3(y).trace.max_magnitude() <= 99


def test_odd11_intermediate_tops_out_at_110():
    assert max(odd11(y).trace.max_magnitude() for y in range(100)) == 110


def test_input_validation():
    with pytest.raises(ValueError):
        odd11(100)
    with pytest.raises(ValueError):
        parity3(-1)
