"""Flat numbers: the integers under min (as addition) and + (as multiplication).

The order is reversed with respect to the usual one: ``x`` is inferior to
``y`` when ``min(x, y) == y``, so larger integers sit lower.
"""

from __future__ import annotations

from dataclasses import dataclass

GRADE_MIN = -(2**63)
GRADE_MAX = 2**63 - 1


class ArithmeticRangeError(OverflowError):
    """A grade left the signed 64-bit range."""


def _checked(grade: int) -> int:
    if not GRADE_MIN <= grade <= GRADE_MAX:
        raise ArithmeticRangeError(f"grade {grade} out of 64-bit range")
    return grade


@dataclass(frozen=True, order=False)
class FlatNumber:
    grade: int

    def __post_init__(self):
        if isinstance(self.grade, bool) or not isinstance(self.grade, int):
            raise TypeError(f"grade must be an int, got {type(self.grade).__name__}")
        _checked(self.grade)

    def __str__(self):
        return format_flat(self)

    def __repr__(self):
        return f"FlatNumber({self.grade})"


ONE = FlatNumber(0)  # multiplicative identity (0)


def flat(value: int | FlatNumber) -> FlatNumber:
    return value if isinstance(value, FlatNumber) else FlatNumber(value)


def fadd(x: FlatNumber, y: FlatNumber) -> FlatNumber:
    """x ⊕ y = min(x, y)."""
    return x if x.grade <= y.grade else y


def fmul(x: FlatNumber, y: FlatNumber) -> FlatNumber:
    """x ⊗ y = x + y, overflow-checked."""
    return FlatNumber(_checked(x.grade + y.grade))


def finv(x: FlatNumber) -> FlatNumber:
    return FlatNumber(_checked(-x.grade))


def fleq(x: FlatNumber, y: FlatNumber) -> bool:
    """True iff x is inferior to y, i.e. x ⊕ y == y."""
    return fadd(x, y) == y


def format_flat(x: FlatNumber) -> str:
    if x.grade == 0:
        return "(0)"
    return f"({x.grade:+d})"

