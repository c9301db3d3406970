"""Uniform interface over all fourteen year-share methods.

The registry is a closed, immutable table built at import time.  Everything
downstream (CLI, verification, cost reports, the day-of-week pipeline) goes
through `evaluate`, so a method is fully described by one descriptor plus
one function returning a ShareResult.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable

from . import digits, divisor, special
from .arith import ShareResult, SignConvention, check_year2, year_share
from .trace import DEFAULT_COST_MODEL, CostModel


class UnknownMethodError(ValueError):
    """Raised when a method id is not in the registry."""


class MethodCategory(str, Enum):
    SPECIAL = "special"
    DIVISOR = "divisor"
    DIGIT = "digit"


@dataclass(frozen=True)
class MethodDescriptor:
    id: str
    display_name: str
    category: MethodCategory
    convention: SignConvention
    citation: str
    func: Callable[[int], ShareResult]


def _divisor_func(d: int) -> Callable[[int], ShareResult]:
    spec = divisor.BUILTIN_DIVISOR_SPECS[d]

    def run(y: int) -> ShareResult:
        return divisor.eval_divisor(spec, y)

    run.__name__ = f"div{d}"
    run.__doc__ = f"Divisor formula for d={d}: {spec.formula()} ({spec.convention.value} share)."
    return run


def _build_registry() -> dict[str, MethodDescriptor]:
    neg = SignConvention.NEGATIVE
    pos = SignConvention.POSITIVE
    rows = [
        ("odd11", "Odd + 11", MethodCategory.SPECIAL, neg,
         "odd+11 rule of Fong and Walters", special.odd11),
        ("parity3", "Parity flag, subtract 3", MethodCategory.SPECIAL, neg,
         "parity-flag variant of the odd+11 rule", special.parity3),
        ("div4", "Halved multiple of four", MethodCategory.DIVISOR, neg,
         "leap-cycle split: half of 4q, minus the remainder", divisor.div4),
        ("div5", "Division by 5", MethodCategory.DIVISOR, neg,
         "derived divisor formula, d=5", _divisor_func(5)),
        ("div11", "Division by 11", MethodCategory.DIVISOR, pos,
         "derived divisor formula, d=11", _divisor_func(11)),
        ("div12", "Dozens", MethodCategory.DIVISOR, pos,
         "dozens + remainder + fours-in-remainder rule", divisor.div12),
        ("div16", "Division by 16", MethodCategory.DIVISOR, pos,
         "derived divisor formula, d=16", _divisor_func(16)),
        ("div17", "Division by 17", MethodCategory.DIVISOR, pos,
         "derived divisor formula, d=17", _divisor_func(17)),
        ("eisele", "Eisele digit rule", MethodCategory.DIGIT, pos,
         "Martin Eisele's multiple-of-four digit rule", digits.eisele),
        ("harringer", "Harringer digit rule", MethodCategory.DIGIT, pos,
         "Alexander Harringer's variant of the Eisele rule", digits.harringer),
        ("digits-aa", "Digit pair, variant a", MethodCategory.DIGIT, neg,
         "digit-pair rule, variant a", digits.digits_aa),
        ("fong", "Fong digit rule", MethodCategory.DIGIT, pos,
         "Chamberlain Fong's digit formula, also credited to YingKing Yu", digits.fong),
        ("wang", "Wang digit rule", MethodCategory.DIGIT, pos,
         "Xiang-Sheng Wang's digit formula", digits.wang),
        ("digits-ab", "Digit pair, variant b", MethodCategory.DIGIT, neg,
         "digit-pair rule, variant b", digits.digits_ab),
    ]
    table = {}
    for mid, name, cat, conv, cite, func in rows:
        if mid in table:
            raise ValueError(f"duplicate method id {mid!r}")
        table[mid] = MethodDescriptor(mid, name, cat, conv, cite, func)
    return table


METHODS: dict[str, MethodDescriptor] = _build_registry()


def method_ids() -> list[str]:
    return list(METHODS)


def get_method(method_id: str) -> MethodDescriptor:
    try:
        return METHODS[method_id]
    except KeyError:
        known = ", ".join(METHODS)
        raise UnknownMethodError(f"unknown method {method_id!r} (known: {known})") from None


@lru_cache(maxsize=8192)
def _cached_eval(func: Callable[[int], ShareResult], y: int) -> ShareResult:
    # Keyed on the function object itself, so a registry entry swapped out
    # (e.g. by a test installing a corrupted variant) can never be served a
    # stale result from the original function.
    return func(y)


def evaluate(method_id: str, y: int) -> ShareResult:
    """Run one method on a two-digit year; results are immutable and cached."""
    desc = get_method(method_id)
    check_year2(y)
    return _cached_eval(desc.func, y)


@dataclass(frozen=True)
class VerificationFailure:
    y: int
    expected: int
    got: int

    def to_json_dict(self) -> dict:
        return {"y": self.y, "expected": self.expected, "got": self.got}


@dataclass(frozen=True)
class VerificationReport:
    method_id: str
    total: int
    failures: tuple[VerificationFailure, ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "method": self.method_id,
            "total": self.total,
            "failures": [f.to_json_dict() for f in self.failures],
            "pass": self.passed,
        }


def verify_method(method_id: str) -> VerificationReport:
    """Check a method against the reference share for every y in [0, 99].

    Comparison is on normalized residues: any raw value in the right mod-7
    class passes.  Mismatches come back as data, never as exceptions.
    """
    desc = get_method(method_id)
    failures = []
    for y in range(100):
        expected = year_share(y)
        got = _cached_eval(desc.func, y).residue
        if got != expected:
            failures.append(VerificationFailure(y, expected, got))
    return VerificationReport(method_id, 100, tuple(failures))


def verify_all() -> list[VerificationReport]:
    return [verify_method(mid) for mid in METHODS]


@dataclass(frozen=True)
class CostReportRow:
    method_id: str
    min_cost: int
    max_cost: int
    mean_cost: float
    max_magnitude: int

    def to_json_dict(self) -> dict:
        return {
            "method": self.method_id,
            "min_cost": self.min_cost,
            "max_cost": self.max_cost,
            "mean_cost": self.mean_cost,
            "max_magnitude": self.max_magnitude,
        }


def cost_report(ids: list[str] | None = None, model: CostModel = DEFAULT_COST_MODEL) -> list[CostReportRow]:
    """Trace-cost statistics over all hundred years, per method.

    Costs depend on the model's weights; the max intermediate magnitude is
    model-independent (largest |operand or result| appearing in any step).
    """
    if ids is None:
        ids = method_ids()
    rows = []
    for mid in ids:
        desc = get_method(mid)
        costs = []
        magnitude = 0
        for y in range(100):
            res = _cached_eval(desc.func, y)
            costs.append(model.cost(res.trace))
            magnitude = max(magnitude, res.trace.max_magnitude())
        rows.append(
            CostReportRow(
                method_id=mid,
                min_cost=min(costs),
                max_cost=max(costs),
                mean_cost=statistics.fmean(costs),
                max_magnitude=magnitude,
            )
        )
    return rows
