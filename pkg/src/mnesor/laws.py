"""Exhaustive law checking for the flat-number semiring and the mnesor algebra.

Every law is evaluated over all mnesors (and scalars) with grades inside a
window.  A failing law reports the smallest counterexample found, measured
by the total absolute grade of its bindings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable

from mnesor import core
from mnesor.core import ALL, NGT, PST, ZERO, Mnesor, enumerate_mnesors, format_mnesor, ngt, pst
from mnesor.minplus import ONE, FlatNumber, fadd, finv, fleq, fmul, format_flat

MAX_WINDOW = 65  # [-32, 32]


@dataclass(frozen=True)
class Algebra:
    """The operation table under test; swap entries to check a mutant."""

    madd: Callable = core.madd
    smul: Callable = core.smul
    conj: Callable = core.conj
    mmul: Callable = core.mmul
    mleq: Callable = core.mleq


STANDARD = Algebra()


@dataclass
class LawResult:
    name: str
    description: str
    cases: int = 0
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def render_counterexample(self) -> str:
        if self.counterexample is None:
            return ""
        return ", ".join(f"{k}={_render(v)}" for k, v in self.counterexample.items())

    def as_dict(self) -> dict:
        return {
            "law": self.name,
            "status": "pass" if self.passed else "fail",
            "cases": self.cases,
            "counterexample": None
            if self.counterexample is None
            else {k: _render(v) for k, v in self.counterexample.items()},
        }


@dataclass
class LawReport:
    lo: int
    hi: int
    results: list[LawResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[LawResult]:
        return [r for r in self.results if not r.passed]

    def __getitem__(self, name: str) -> LawResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def render(self) -> str:
        lines = []
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status}  {r.name:<28} {r.cases:>7} cases  {r.description}"
            if not r.passed:
                line += f"\n      counterexample: {r.render_counterexample()}"
            lines.append(line)
        bad = len(self.failures)
        lines.append(
            f"window [{self.lo}, {self.hi}]: {len(self.results) - bad} passed, {bad} failed"
        )
        return "\n".join(lines)

    def as_list(self) -> list[dict]:
        return [r.as_dict() for r in self.results]


def _render(value) -> str:
    if isinstance(value, Mnesor):
        return format_mnesor(value)
    if isinstance(value, FlatNumber):
        return format_flat(value)
    return str(value)


def _weight(value) -> int:
    if isinstance(value, Mnesor):
        return abs(value.grade.grade) if value.graded else 0
    if isinstance(value, FlatNumber):
        return abs(value.grade)
    return 0


def _check(name, description, names, cases: Iterable[tuple], holds) -> LawResult:
    result = LawResult(name, description)
    best = None
    for case in cases:
        result.cases += 1
        if not holds(*case):
            w = sum(_weight(v) for v in case)
            if best is None or w < best[0]:
                best = (w, case)
    if best is not None:
        result.counterexample = dict(zip(names, best[1]))
    return result


def _validate_window(lo: int, hi: int):
    if lo > hi:
        raise ValueError(f"empty grade window [{lo}, {hi}]")
    if hi - lo + 1 > MAX_WINDOW:
        raise ValueError(f"grade window wider than {MAX_WINDOW} grades")


def check_semiring(lo: int = -16, hi: int = 16) -> LawReport:
    """Min-plus laws over every grade triple in [lo, hi]."""
    _validate_window(lo, hi)
    xs = [FlatNumber(g) for g in range(lo, hi + 1)]
    pairs = list(itertools.product(xs, repeat=2))
    triples = list(itertools.product(xs, repeat=3))
    report = LawReport(lo, hi)
    add = report.results.append
    add(_check("fadd.associative", "(x⊕y)⊕z = x⊕(y⊕z)", "xyz", triples,
               lambda x, y, z: fadd(fadd(x, y), z) == fadd(x, fadd(y, z))))
    add(_check("fadd.commutative", "x⊕y = y⊕x", "xy", pairs,
               lambda x, y: fadd(x, y) == fadd(y, x)))
    add(_check("fadd.idempotent", "x⊕x = x", "x", [(x,) for x in xs],
               lambda x: fadd(x, x) == x))
    add(_check("fmul.associative", "(x⊗y)⊗z = x⊗(y⊗z)", "xyz", triples,
               lambda x, y, z: fmul(fmul(x, y), z) == fmul(x, fmul(y, z))))
    add(_check("fmul.commutative", "x⊗y = y⊗x", "xy", pairs,
               lambda x, y: fmul(x, y) == fmul(y, x)))
    add(_check("fmul.identity", "x⊗(0) = (0)⊗x = x", "x", [(x,) for x in xs],
               lambda x: fmul(x, ONE) == x == fmul(ONE, x)))
    add(_check("fmul.distributive", "x⊗(y⊕z) = (x⊗y)⊕(x⊗z)", "xyz", triples,
               lambda x, y, z: fmul(x, fadd(y, z)) == fadd(fmul(x, y), fmul(x, z))))
    add(_check("finv.involutive", "inv(inv(x)) = x", "x", [(x,) for x in xs],
               lambda x: finv(finv(x)) == x))
    add(_check("finv.inverse", "x⊗inv(x) = (0)", "x", [(x,) for x in xs],
               lambda x: fmul(x, finv(x)) == ONE))
    add(_check("fleq.total", "x≤y or y≤x", "xy", pairs,
               lambda x, y: fleq(x, y) or fleq(y, x)))
    add(_check("fleq.antisymmetric", "x≤y and y≤x imply x=y", "xy", pairs,
               lambda x, y: not (fleq(x, y) and fleq(y, x)) or x == y))
    add(_check("fleq.transitive", "x≤y and y≤z imply x≤z", "xyz", triples,
               lambda x, y, z: not (fleq(x, y) and fleq(y, z)) or fleq(x, z)))
    add(_check("fleq.reversed", "x≤y iff y≤x as integers", "xy", pairs,
               lambda x, y: fleq(x, y) == (y.grade <= x.grade)))
    return report


def check_laws(lo: int = -8, hi: int = 8, algebra: Algebra = STANDARD) -> LawReport:
    """Evaluate every mnesor law over grades in [lo, hi]."""
    _validate_window(lo, hi)
    A = algebra
    ms = enumerate_mnesors(lo, hi)
    lams = [FlatNumber(g) for g in range(lo, hi + 1)]
    positive = [lam for lam in lams if lam.grade > 0]
    nonneg = [lam for lam in lams if lam.grade >= 0]
    bases = [PST, NGT, ALL, ZERO]
    one = [(x,) for x in ms]
    pairs = list(itertools.product(ms, repeat=2))
    triples = list(itertools.product(ms, repeat=3))

    report = LawReport(lo, hi)
    add = report.results.append

    # monoid structure of the sum
    add(_check("madd.associative", "(x+y)+z = x+(y+z)", "xyz", triples,
               lambda x, y, z: A.madd(A.madd(x, y), z) == A.madd(x, A.madd(y, z))))
    add(_check("madd.commutative", "x+y = y+x", "xy", pairs,
               lambda x, y: A.madd(x, y) == A.madd(y, x)))
    add(_check("madd.identity", "ZERO+x = x+ZERO = x", "x", one,
               lambda x: A.madd(ZERO, x) == x == A.madd(x, ZERO)))
    add(_check("madd.idempotent", "x+x = x", "x", one,
               lambda x: A.madd(x, x) == x))

    # semimodule axioms
    add(_check("axiom1.unit", "x(0) = x", "x", one,
               lambda x: A.smul(x, ONE) == x))
    add(_check("axiom2.distributive", "(x+y)λ = xλ+yλ", ("x", "y", "λ"),
               ((x, y, lam) for x, y in pairs for lam in lams),
               lambda x, y, lam: A.smul(A.madd(x, y), lam)
               == A.madd(A.smul(x, lam), A.smul(y, lam))))
    add(_check("axiom3.compatible", "(xλ)μ = x(λ⊗μ)", ("x", "λ", "μ"),
               ((x, lam, mu) for x in ms for lam in lams for mu in lams),
               lambda x, lam, mu: A.smul(A.smul(x, lam), mu) == A.smul(x, fmul(lam, mu))))
    add(_check("axiom4.distributive", "x(λ⊕μ) = xλ+xμ", ("x", "λ", "μ"),
               ((x, lam, mu) for x in ms for lam in lams for mu in lams),
               lambda x, lam, mu: A.smul(x, fadd(lam, mu))
               == A.madd(A.smul(x, lam), A.smul(x, mu))))

    # conjugation
    add(_check("conj.involutive", "conj(conj(x)) = x", "x", one,
               lambda x: A.conj(A.conj(x)) == x))
    add(_check("conj.scaling", "conj(xλ) = conj(x)·inv(λ)", ("x", "λ"),
               ((x, lam) for x in ms for lam in lams),
               lambda x, lam: A.conj(A.smul(x, lam)) == A.smul(A.conj(x), finv(lam))))
    add(_check("conj.pst_ngt", "conj(PST) = NGT", (), [()],
               lambda: A.conj(PST) == NGT and A.conj(NGT) == PST))

    # internal multiplication
    add(_check("mmul.de_morgan", "x×y = conj(conj(x)+conj(y))", "xy", pairs,
               lambda x, y: A.mmul(x, y) == A.conj(A.madd(A.conj(x), A.conj(y)))))
    add(_check("mmul.associative", "(x×y)×z = x×(y×z)", "xyz", triples,
               lambda x, y, z: A.mmul(A.mmul(x, y), z) == A.mmul(x, A.mmul(y, z))))
    add(_check("mmul.commutative", "x×y = y×x", "xy", pairs,
               lambda x, y: A.mmul(x, y) == A.mmul(y, x)))
    add(_check("mmul.idempotent", "x×x = x", "x", one,
               lambda x: A.mmul(x, x) == x))
    add(_check("mmul.scaling", "(x×y)λ = (xλ)×(yλ)", ("x", "y", "λ"),
               ((x, y, lam) for x, y in pairs for lam in lams),
               lambda x, y, lam: A.smul(A.mmul(x, y), lam)
               == A.mmul(A.smul(x, lam), A.smul(y, lam))))
    add(_check("mmul.absorbs_scaled", "x×(xλ) = xλ for λ≥0", ("x", "λ"),
               ((x, lam) for x in ms for lam in nonneg),
               lambda x, lam: A.mmul(x, A.smul(x, lam)) == A.smul(x, lam)))

    # rules on the base mnesors
    add(_check("rule9.softer_conjugate", "xλ+conj(x) = conj(x), base x, λ>0", ("x", "λ"),
               ((x, lam) for x in bases for lam in positive),
               lambda x, lam: A.madd(A.smul(x, lam), A.conj(x)) == A.conj(x)))
    add(_check("rule10.sum_with_conjugate", "x+conj(x) = ALL, base x", "x",
               [(x,) for x in bases],
               lambda x: A.madd(x, A.conj(x)) == ALL))
    add(_check("derived.add_all", "x+ALL = ALL", "x", one,
               lambda x: A.madd(x, ALL) == ALL))
    add(_check("derived.mul_all", "x×ALL = x", "x", one,
               lambda x: A.mmul(x, ALL) == x))
    add(_check("derived.mul_zero", "x×ZERO = ZERO", "x", one,
               lambda x: A.mmul(x, ZERO) == ZERO))
    add(_check("derived.mul_conjugate", "x×conj(x) = ZERO, base x", "x",
               [(x,) for x in bases],
               lambda x: A.mmul(x, A.conj(x)) == ZERO))
    add(_check("derived.mul_scaled", "xλ×xμ = x·max(λ,μ), base x", ("x", "λ", "μ"),
               ((x, lam, mu) for x in bases for lam in lams for mu in lams),
               lambda x, lam, mu: A.mmul(A.smul(x, lam), A.smul(x, mu))
               == A.smul(x, max(lam, mu, key=lambda f: f.grade))))

    # order
    add(_check("mleq.definition", "x≤y iff x = yλ for some λ≥0", "xy", pairs,
               lambda x, y: A.mleq(x, y) == _scaled_below(A, x, y, hi - lo)))
    add(_check("mleq.reflexive", "x≤x", "x", one, lambda x: A.mleq(x, x)))
    add(_check("mleq.antisymmetric", "x≤y and y≤x imply x=y", "xy", pairs,
               lambda x, y: not (A.mleq(x, y) and A.mleq(y, x)) or x == y))
    add(_check("mleq.transitive", "x≤y and y≤z imply x≤z", "xyz", triples,
               lambda x, y, z: not (A.mleq(x, y) and A.mleq(y, z)) or A.mleq(x, z)))
    add(_check("mleq.monotone_scaling", "λ≼μ implies xλ≤xμ", ("x", "λ", "μ"),
               ((x, lam, mu) for x in ms for lam in lams for mu in lams),
               lambda x, lam, mu: not fleq(lam, mu) or A.mleq(A.smul(x, lam), A.smul(x, mu))))

    add(_check("witness.pst_ngt_distinct",
               "rule 9 on non-base PST(-1) would force PST(+1) = NGT(+1); they stay distinct",
               (), [()], lambda: _witness(A)))
    return report


def _scaled_below(A: Algebra, x: Mnesor, y: Mnesor, span: int) -> bool:
    return any(A.smul(y, FlatNumber(g)) == x for g in range(0, 2 * span + 1))


def _witness(A: Algebra) -> bool:
    x = pst(-1)
    lam = FlatNumber(2)
    lhs = A.madd(A.smul(x, lam), A.conj(x))  # PST(+1) + NGT(+1)
    swapped = A.madd(A.conj(x), A.smul(x, lam))
    return pst(1) != ngt(1) and lhs == swapped and lhs not in (pst(1), ngt(1))
