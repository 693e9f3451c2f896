"""Flat mnesors in canonical form.

Every flat mnesor is one of four shapes: the empty mnesor ``ZERO``, its
conjugate ``ALL``, or a graded generator ``PST·λ`` / ``NGT·λ``.  A larger
integer grade means a stronger constraint.

The rules that mix ``x`` with its conjugate (``xλ + x̄ = x̄`` and
``x + x̄ = ALL``) are applied to the base generators only; the general
mixed sums below are obtained from them by factoring the smaller grade out
of the sum.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from mnesor.minplus import ONE, FlatNumber, finv, flat, fmul


class Kind(enum.Enum):
    ZERO = "ZERO"
    ALL = "ALL"
    PST = "PST"
    NGT = "NGT"


_OPPOSITE = {Kind.ZERO: Kind.ALL, Kind.ALL: Kind.ZERO, Kind.PST: Kind.NGT, Kind.NGT: Kind.PST}


@dataclass(frozen=True)
class Mnesor:
    kind: Kind
    grade: FlatNumber | None = None

    def __post_init__(self):
        graded = self.kind in (Kind.PST, Kind.NGT)
        if graded and not isinstance(self.grade, FlatNumber):
            raise TypeError(f"{self.kind.value} needs a FlatNumber grade")
        if not graded and self.grade is not None:
            raise ValueError(f"{self.kind.value} carries no grade")

    @property
    def graded(self) -> bool:
        return self.grade is not None

    def base(self) -> Mnesor:
        """The generator this mnesor is a scaling of."""
        return Mnesor(self.kind, ONE) if self.graded else self

    def __add__(self, other):
        if not isinstance(other, Mnesor):
            return NotImplemented
        return madd(self, other)

    def __mul__(self, other):
        # x * y is the internal product, x * λ the external one
        if isinstance(other, Mnesor):
            return mmul(self, other)
        if isinstance(other, (FlatNumber, int)) and not isinstance(other, bool):
            return smul(self, flat(other))
        return NotImplemented

    def __invert__(self):
        return conj(self)

    def __str__(self):
        return format_mnesor(self)

    def __repr__(self):
        if self.graded:
            return f"Mnesor({self.kind.name}, {self.grade.grade})"
        return f"Mnesor({self.kind.name})"


ZERO = Mnesor(Kind.ZERO)
ALL = Mnesor(Kind.ALL)
PST = Mnesor(Kind.PST, ONE)
NGT = Mnesor(Kind.NGT, ONE)


def pst(grade: int | FlatNumber = 0) -> Mnesor:
    return Mnesor(Kind.PST, flat(grade))


def ngt(grade: int | FlatNumber = 0) -> Mnesor:
    return Mnesor(Kind.NGT, flat(grade))


def madd(x: Mnesor, y: Mnesor) -> Mnesor:
    """Sum of two mnesors; the softer constraint wins."""
    if x.kind is Kind.ZERO:
        return y
    if y.kind is Kind.ZERO:
        return x
    if x.kind is Kind.ALL or y.kind is Kind.ALL:
        return ALL
    lx, ly = x.grade.grade, y.grade.grade
    if x.kind is y.kind:
        return x if lx <= ly else y
    if lx == ly:
        return ALL
    return x if lx < ly else y


def smul(x: Mnesor, lam: FlatNumber) -> Mnesor:
    """External multiplication x·λ.  ZERO and ALL absorb every scaling."""
    if not x.graded:
        return x
    return Mnesor(x.kind, fmul(x.grade, lam))


def conj(x: Mnesor) -> Mnesor:
    if not x.graded:
        return ALL if x.kind is Kind.ZERO else ZERO
    return Mnesor(_OPPOSITE[x.kind], finv(x.grade))


def mmul(x: Mnesor, y: Mnesor) -> Mnesor:
    """Internal product; equal to conj(conj(x) + conj(y)).

    The stronger constraint wins, and exactly opposed generators cancel to
    ZERO.
    """
    if x.kind is Kind.ALL:
        return y
    if y.kind is Kind.ALL:
        return x
    if x.kind is Kind.ZERO or y.kind is Kind.ZERO:
        return ZERO
    lx, ly = x.grade.grade, y.grade.grade
    if x.kind is y.kind:
        return x if lx >= ly else y
    if lx == ly:
        return ZERO
    return x if lx > ly else y


def mleq(x: Mnesor, y: Mnesor) -> bool:
    """True iff x = y·λ for some λ with non-negative integer grade."""
    if x.kind is not y.kind:
        return False
    if not x.graded:
        return True
    return x.grade.grade >= y.grade.grade


def format_mnesor(x: Mnesor) -> str:
    if not x.graded:
        return x.kind.value
    if x.grade.grade == 0:
        return x.kind.value
    return f"{x.kind.value}({x.grade.grade:+d})"


def enumerate_mnesors(lo: int, hi: int) -> list[Mnesor]:
    """ZERO, ALL and every PST/NGT with grade in [lo, hi]."""
    out = [ZERO, ALL]
    for g in range(lo, hi + 1):
        out.append(pst(g))
        out.append(ngt(g))
    return out
