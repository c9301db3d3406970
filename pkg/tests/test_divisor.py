import pytest

from ydow.arith import SignConvention, mod7, year_share
from ydow.divisor import (
    BUILTIN_DIVISOR_SPECS,
    DivisorSpec,
    NotRepresentableError,
    derive_divisor_formula,
    div4,
    div12,
    divmod_split,
    eval_divisor,
)

POS = SignConvention.POSITIVE
NEG = SignConvention.NEGATIVE


def spec_residue(spec, y):
    v = spec.value(y)
    return mod7(v) if spec.convention is POS else mod7(-v)


def test_builtin_table_shape():
    assert sorted(BUILTIN_DIVISOR_SPECS) == [4, 5, 11, 12, 16, 17]
    for d, spec in BUILTIN_DIVISOR_SPECS.items():
        assert spec.d == d


def test_builtin_specs_exhaustive():
    for d, spec in BUILTIN_DIVISOR_SPECS.items():
        for y in range(100):
            assert spec_residue(spec, y) == year_share(y), (d, y)


def test_dozens_rule_is_a_positive_share():
    # q + r + floor(r/4) lands in the same class as the share itself, not
    # its negative; y=1 settles it (value 1, share 1)
    spec = BUILTIN_DIVISOR_SPECS[12]
    assert spec.convention is POS
    assert spec.value(1) == 1 and year_share(1) == 1


def test_formula_text():
    assert BUILTIN_DIVISOR_SPECS[4].formula() == "2q - r"
    assert BUILTIN_DIVISOR_SPECS[5].formula() == "q - r - floor((q + r)/4)"
    assert BUILTIN_DIVISOR_SPECS[11].formula() == "r + floor((-q + r)/4)"
    assert BUILTIN_DIVISOR_SPECS[12].formula() == "q + r + floor(r/4)"
    assert BUILTIN_DIVISOR_SPECS[16].formula() == "-q + r + floor(r/4)"
    assert BUILTIN_DIVISOR_SPECS[17].formula() == "r + floor((q + r)/4)"


def test_to_json_dict_keys():
    data = BUILTIN_DIVISOR_SPECS[12].to_json_dict()
    assert data == {
        "d": 12,
        "sign": "pos",
        "alpha": 1,
        "beta": 1,
        "gamma": 1,
        "delta_q": 0,
        "delta_r": 1,
    }


def test_divmod_split():
    assert divmod_split(59, 12) == (4, 11)
    assert divmod_split(3, 4) == (0, 3)
    with pytest.raises(ValueError):
        divmod_split(10, 1)
    with pytest.raises(ValueError):
        divmod_split(100, 4)


def test_eval_divisor_traces_replay():
    for spec in BUILTIN_DIVISOR_SPECS.values():
        for y in range(100):
            res = eval_divisor(spec, y)
            assert res.raw == spec.value(y)
            assert res.trace.replay() == res.raw


def test_eval_divisor_negative_inner_quantity():
    # d=11 at y=95: q=8, r=7, inner -q + r = -1, floored quarter is -1
    res = eval_divisor(BUILTIN_DIVISOR_SPECS[11], 95)
    assert res.raw == 6
    assert any(s.result == -1 and s.kind.value == "quarter_floor" for s in res.trace.steps)


def test_div4_wrapper():
    for y in range(100):
        res = div4(y)
        assert res.raw == BUILTIN_DIVISOR_SPECS[4].value(y)
        assert res.convention is NEG
        assert res.trace.replay() == res.raw
    assert len(div4(87).trace.steps) == 3


def test_div12_wrapper():
    for y in range(100):
        res = div12(y)
        assert res.raw == BUILTIN_DIVISOR_SPECS[12].value(y)
        assert res.convention is POS
        assert res.trace.replay() == res.raw
    # 61 = 5*12 + 1: 5 + 1 + 0
    assert div12(61).raw == 6


def test_derive_reproduces_builtin_table():
    for d, spec in BUILTIN_DIVISOR_SPECS.items():
        assert derive_divisor_formula(d, spec.convention) == spec, d


def test_derive_both_signs_are_termwise_negations():
    for d in (3, 4, 5, 11, 12, 16, 17, 25, 28):
        pos = derive_divisor_formula(d, POS)
        neg = derive_divisor_formula(d, NEG)
        assert (neg.coef_q, neg.coef_r, neg.coef_floor) == (
            -pos.coef_q,
            -pos.coef_r,
            -pos.coef_floor,
        )
        assert (neg.inner_q, neg.inner_r) == (pos.inner_q, pos.inner_r)


def test_derived_specs_verify_exhaustively():
    for d in range(2, 29):
        for conv in (POS, NEG):
            try:
                spec = derive_divisor_formula(d, conv)
            except NotRepresentableError:
                continue
            for y in range(100):
                assert spec_residue(spec, y) == year_share(y), (d, conv, y)


def test_not_representable_divisors():
    # 5d = 2 mod 4 exactly when d = 2 mod 4; no inner coefficient in
    # {-1,0,1} can make up a parity-2 defect
    for d in range(2, 29):
        if d % 4 == 2:
            with pytest.raises(NotRepresentableError):
                derive_divisor_formula(d, POS)
        else:
            derive_divisor_formula(d, POS)


def test_derive_rejects_out_of_range_divisor():
    with pytest.raises(ValueError):
        derive_divisor_formula(1, POS)
    with pytest.raises(ValueError):
        derive_divisor_formula(29, POS)


def test_spec_validation():
    with pytest.raises(ValueError):
        DivisorSpec(1, POS, 1, 1, 0, 0, 0)
    with pytest.raises(ValueError):
        DivisorSpec(5, POS, 1, 1, 2, 0, 1)
