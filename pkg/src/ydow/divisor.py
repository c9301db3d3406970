"""Divisor-family year-share formulas.

Write y = d*q + r with 0 <= r < d.  For suitable divisors the year share (or
its negative) collapses to a formula of the shape

    alpha*q + beta*r + gamma * floor((delta_q*q + delta_r*r) / 4)

with small coefficients.  Six divisors ship as a built-in table; the
derivation engine reconstructs such a formula for any divisor in [2, 28]
that admits one with the inner q-coefficient in {-1, 0, 1}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import ShareResult, SignConvention, check_year2, floor_div, normalize
from .trace import Step, StepKind, StepTrace


class NotRepresentableError(ValueError):
    """No formula with a small inner coefficient exists for this divisor."""


@dataclass(frozen=True)
class DivisorSpec:
    """Coefficient record for one divisor formula.

    Value at y = d*q + r is coef_q*q + coef_r*r +
    coef_floor * floor((inner_q*q + inner_r*r) / 4), interpreted under the
    spec's sign convention.
    """

    d: int
    convention: SignConvention
    coef_q: int
    coef_r: int
    coef_floor: int
    inner_q: int
    inner_r: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"divisor must be >= 2, got {self.d}")
        if self.coef_floor not in (-1, 0, 1):
            raise ValueError(f"floor coefficient must be -1, 0 or 1, got {self.coef_floor}")

    def value(self, y: int) -> int:
        q, r = divmod_split(y, self.d)
        total = self.coef_q * q + self.coef_r * r
        if self.coef_floor != 0:
            total += self.coef_floor * floor_div(self.inner_q * q + self.inner_r * r, 4)
        return total

    def formula(self) -> str:
        parts = _linear_text([(self.coef_q, "q"), (self.coef_r, "r")])
        if self.coef_floor != 0:
            inner = _linear_text([(self.inner_q, "q"), (self.inner_r, "r")]) or "0"
            if any(ch in inner for ch in "+-"):
                inner = f"({inner})"
            parts = _append_term(parts, self.coef_floor, f"floor({inner}/4)")
        return parts or "0"

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "sign": self.convention.value,
            "alpha": self.coef_q,
            "beta": self.coef_r,
            "gamma": self.coef_floor,
            "delta_q": self.inner_q,
            "delta_r": self.inner_r,
        }


def _linear_text(pairs: list[tuple[int, str]]) -> str:
    text = ""
    for coef, sym in pairs:
        text = _append_term(text, coef, sym)
    return text


def _append_term(text: str, coef: int, sym: str) -> str:
    if coef == 0:
        return text
    mag = abs(coef)
    term = sym if mag == 1 else f"{mag}{sym}"
    if not text:
        return term if coef > 0 else f"-{term}"
    return f"{text} + {term}" if coef > 0 else f"{text} - {term}"


# The six shipped formulas, kept as data so a single evaluator runs them all.
# Conventions follow where each formula lands relative to the reference
# year share; the d=12 rule (dozens + remainder + fours) is the positive
# share, as its own congruence proof and the exhaustive check both confirm.
BUILTIN_DIVISOR_SPECS: dict[int, DivisorSpec] = {
    4: DivisorSpec(4, SignConvention.NEGATIVE, 2, -1, 0, 0, 0),
    5: DivisorSpec(5, SignConvention.NEGATIVE, 1, -1, -1, 1, 1),
    11: DivisorSpec(11, SignConvention.POSITIVE, 0, 1, 1, -1, 1),
    12: DivisorSpec(12, SignConvention.POSITIVE, 1, 1, 1, 0, 1),
    16: DivisorSpec(16, SignConvention.POSITIVE, -1, 1, 1, 0, 1),
    17: DivisorSpec(17, SignConvention.POSITIVE, 0, 1, 1, 1, 1),
}


def divmod_split(y: int, d: int) -> tuple[int, int]:
    """Quotient and remainder of y by d with 0 <= r < d."""
    if d < 2:
        raise ValueError(f"divisor must be >= 2, got {d}")
    check_year2(y)
    return y // d, y % d


def eval_divisor(spec: DivisorSpec, y: int) -> ShareResult:
    """Evaluate a divisor formula at y, recording one step per mental operation."""
    q, r = divmod_split(y, spec.d)
    steps: list[Step] = [
        Step(
            StepKind.DIV_SPLIT,
            f"split {y} = {spec.d}*{q} + {r} (q={q}, r={r})",
            (y, spec.d),
            q,
        )
    ]
    terms: list[tuple[int, int, str]] = [(spec.coef_q, q, "q"), (spec.coef_r, r, "r")]
    if spec.coef_floor != 0:
        inner, inner_sym = _accumulate(
            steps, [(spec.inner_q, q, "q"), (spec.inner_r, r, "r")]
        )
        if " " in inner_sym:
            inner_sym = f"({inner_sym})"
        fval = floor_div(inner, 4)
        steps.append(
            Step(
                StepKind.QUARTER_FLOOR,
                f"floor({inner_sym}/4) = floor({inner}/4) = {fval}",
                (inner,),
                fval,
            )
        )
        terms.append((spec.coef_floor, fval, f"floor({inner_sym}/4)"))
    raw, _ = _accumulate(steps, terms)
    if not steps or steps[-1].result != raw:
        # degenerate single-term formula; pin the final value explicitly
        steps.append(Step(StepKind.SET, f"value is {raw}", (raw,), raw))
    return normalize(raw, spec.convention, StepTrace(tuple(steps)))


def _accumulate(steps: list[Step], terms: list[tuple[int, int, str]]) -> tuple[int, str]:
    """Fold coef*value terms left to right, emitting add/sub/multiply steps."""
    acc = None
    acc_sym = ""
    for coef, val, sym in terms:
        if coef == 0:
            continue
        if acc is None:
            if coef == 1:
                acc = val
            elif coef == -1:
                steps.append(Step(StepKind.SIGN_FLIP, f"-{sym} = {-val}", (val,), -val))
                acc = -val
            else:
                steps.append(
                    Step(StepKind.MUL_SMALL, f"{coef}*{sym} = {coef * val}", (coef, val), coef * val)
                )
                acc = coef * val
            acc_sym = _append_term("", coef, sym)
            continue
        if abs(coef) == 1:
            operand = val
        else:
            steps.append(
                Step(StepKind.MUL_SMALL, f"{abs(coef)}*{sym} = {abs(coef) * val}", (abs(coef), val), abs(coef) * val)
            )
            operand = abs(coef) * val
        new_sym = _append_term(acc_sym, coef, sym)
        if coef > 0:
            steps.append(
                Step(StepKind.ADD_CONST, f"{new_sym}: {acc} + {operand} = {acc + operand}", (acc, operand), acc + operand)
            )
            acc += operand
        else:
            steps.append(
                Step(StepKind.SUB_CONST, f"{new_sym}: {acc} - {operand} = {acc - operand}", (acc, operand), acc - operand)
            )
            acc -= operand
        acc_sym = new_sym
    if acc is None:
        acc = 0
    return acc, acc_sym


def derive_divisor_formula(d: int, convention: SignConvention) -> DivisorSpec:
    """Reconstruct the formula for divisor d under the requested convention.

    Expanding floor(5y/4) at y = d*q + r and splitting 5r into 4r + r gives
    a positive-share shape a*q + r + floor((b*q + r)/4), valid exactly when
    4a + b is congruent to 5d mod 28 (adding 28 to the inner numerator or 7
    to the outer coefficient never changes the mod-7 value, and shifting a
    by k against b by -4k changes nothing at all).  The search keeps the
    inner coefficient b in {-1, 0, 1} and picks the representative
    minimizing max(|a|, |b|), breaking ties toward smaller |a|.  The
    negative-share spec is the termwise negation of the positive one.
    """
    if not 2 <= d <= 28:
        raise ValueError(f"divisor must be in [2, 28], got {d}")
    target = (5 * d) % 28
    candidates = []
    for b in (-1, 0, 1):
        for a in range(-9, 10):
            if (4 * a + b) % 28 == target:
                candidates.append((max(abs(a), abs(b)), abs(a), a, b))
    if not candidates:
        raise NotRepresentableError(
            f"divisor {d}: no formula with inner q-coefficient in -1..1 "
            f"(5*{d} is 2 mod 4, so the inner coefficient would need magnitude 2)"
        )
    candidates.sort()
    _, _, a, b = candidates[0]
    sign = 1 if convention is SignConvention.POSITIVE else -1
    if b == 0 and d <= 4:
        # r < 4 makes floor(r/4) identically zero; drop the term
        return DivisorSpec(d, convention, sign * a, sign, 0, 0, 0)
    return DivisorSpec(d, convention, sign * a, sign, sign, b, 1)


def div4(y: int) -> ShareResult:
    """Highest-multiple-of-four method: half that multiple, minus the remainder.

    Same formula as the d=4 entry of the built-in table (2q - r, negative
    share); the trace follows the halving phrasing people actually use.
    """
    spec = BUILTIN_DIVISOR_SPECS[4]
    q, r = divmod_split(y, 4)
    m = 4 * q
    half = m // 2
    raw = half - r
    steps = (
        Step(
            StepKind.DIV_SPLIT,
            f"highest multiple of four not exceeding {y} is {m}, remainder {r}",
            (y, 4),
            q,
        ),
        Step(StepKind.HALVE, f"half of {m} is {half}", (m,), half),
        Step(StepKind.SUB_CONST, f"minus the remainder: {half} - {r} = {raw}", (half, r), raw),
    )
    return normalize(raw, spec.convention, StepTrace(steps))


def div12(y: int) -> ShareResult:
    """Dozens method: dozens, plus the remainder, plus the fours in the remainder.

    Same formula as the d=12 entry of the built-in table (q + r + floor(r/4),
    positive share), phrased the way the rule is usually taught.
    """
    spec = BUILTIN_DIVISOR_SPECS[12]
    q, r = divmod_split(y, 12)
    fours = floor_div(r, 4)
    raw = q + r + fours
    steps = (
        Step(StepKind.DIV_SPLIT, f"dozens in {y}: {q}, remainder {r}", (y, 12), q),
        Step(StepKind.QUARTER_FLOOR, f"fours in the remainder: floor({r}/4) = {fours}", (r,), fours),
        Step(StepKind.ADD_CONST, f"dozens plus remainder: {q} + {r} = {q + r}", (q, r), q + r),
        Step(StepKind.ADD_CONST, f"plus the fours: {q + r} + {fours} = {raw}", (q + r, fours), raw),
    )
    return normalize(raw, spec.convention, StepTrace(steps))
