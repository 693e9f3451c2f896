"""Mnesors: a semimodule over the min-plus integers, and a logical
controller for an inverted pendulum built on it."""

from mnesor.core import (
    ALL,
    NGT,
    PST,
    ZERO,
    Kind,
    Mnesor,
    conj,
    format_mnesor,
    madd,
    mleq,
    mmul,
    ngt,
    pst,
    smul,
)
from mnesor.laws import check_laws, check_semiring
from mnesor.minplus import (
    ArithmeticRangeError,
    FlatNumber,
    fadd,
    finv,
    fleq,
    fmul,
    format_flat,
)
from mnesor.notation import ParseError, evaluate, parse_flat, parse_mnesor

__all__ = [
    "ALL", "NGT", "PST", "ZERO", "Kind", "Mnesor", "conj", "format_mnesor", "madd",
    "mleq", "mmul", "ngt", "pst", "smul", "check_laws", "check_semiring",
    "ArithmeticRangeError", "FlatNumber", "fadd", "finv", "fleq", "fmul", "format_flat",
    "ParseError", "evaluate", "parse_flat", "parse_mnesor",
]
