"""Single-variable year-share methods.

These manipulate one running value YS (test it, bump it, halve it) and never
need a second number to be held in mind.  Both produce the *negative* year
share.  Raw outputs are left unreduced; mod-7 normalization happens in
ShareResult.
"""

from __future__ import annotations

from .arith import ShareResult, SignConvention, check_year2, normalize
from .trace import Step, StepKind, StepTrace


def odd11(y: int) -> ShareResult:
    """Odd+11: set YS to y; if odd add 11; halve; if odd add 11 again.

    The result is even for every y and is congruent mod 7 to the negative
    year share.  Writing y = 4a + 2b + c (b, c in {0, 1}), the output equals
    2a + 12b + 6c.
    """
    check_year2(y)
    steps = []
    ys = y
    steps.append(Step(StepKind.SET, f"set YS to {ys}", (ys,), ys))
    if ys % 2 == 1:
        steps.append(Step(StepKind.ADD_CONST, f"YS is odd: add 11, {ys} + 11 = {ys + 11}", (ys, 11), ys + 11))
        ys += 11
    else:
        steps.append(Step(StepKind.PARITY_TEST, f"YS is even: leave {ys} unchanged", (ys,), ys % 2))
    steps.append(Step(StepKind.HALVE, f"halve: {ys} / 2 = {ys // 2}", (ys,), ys // 2))
    ys //= 2
    if ys % 2 == 1:
        steps.append(Step(StepKind.ADD_CONST, f"YS is odd: add 11, {ys} + 11 = {ys + 11}", (ys, 11), ys + 11))
        ys += 11
    else:
        steps.append(Step(StepKind.PARITY_TEST, f"YS is even: leave {ys} unchanged", (ys,), ys % 2))
    return normalize(ys, SignConvention.NEGATIVE, StepTrace(tuple(steps)))


def parity3(y: int) -> ShareResult:
    """Parity Minus 3: like Odd+11 but with smaller intermediate values.

    Set YS to y; remember its parity and subtract 3 if odd; halve; subtract
    3 again if the parity changed.  Writing y = 4a + 2b + c, the output
    equals 2a - 2b - c, so it always has the same parity as y and is
    congruent mod 7 to the negative year share.  Intermediates can go
    slightly negative for y < 4; the algebra stays valid, so no clamping.
    """
    check_year2(y)
    steps = []
    ys = y
    steps.append(Step(StepKind.SET, f"set YS to {ys}", (ys,), ys))
    remembered = ys % 2  # step-ii parity flag, reused verbatim in step iv
    if remembered:
        steps.append(Step(StepKind.SUB_CONST, f"YS is odd (remember: odd): subtract 3, {ys} - 3 = {ys - 3}", (ys, 3), ys - 3))
        ys -= 3
    else:
        steps.append(Step(StepKind.PARITY_TEST, f"YS is even (remember: even): leave {ys} unchanged", (ys,), ys % 2))
    steps.append(Step(StepKind.HALVE, f"halve: {ys} / 2 = {ys // 2}", (ys,), ys // 2))
    ys //= 2
    if ys % 2 != remembered:
        steps.append(Step(StepKind.SUB_CONST, f"parity changed: subtract 3, {ys} - 3 = {ys - 3}", (ys, 3), ys - 3))
        ys -= 3
    else:
        steps.append(Step(StepKind.PARITY_TEST, f"parity unchanged: leave {ys} as is", (ys,), ys % 2))
    return normalize(ys, SignConvention.NEGATIVE, StepTrace(tuple(steps)))
