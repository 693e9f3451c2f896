import pytest
from hypothesis import given, strategies as st

from mnesor.laws import check_semiring
from mnesor.minplus import (
    GRADE_MAX,
    GRADE_MIN,
    ArithmeticRangeError,
    FlatNumber,
    fadd,
    finv,
    fleq,
    fmul,
    format_flat,
)
from mnesor.notation import ParseError, parse_flat

F = FlatNumber
grades = st.integers(min_value=-(10**6), max_value=10**6)


def test_fadd_is_min():
    assert fadd(F(1), F(2)) == F(1)
    assert fadd(F(-3), F(5)) == F(-3)
    assert fadd(F(4), F(4)) == F(4)


def test_fmul_is_sum():
    assert fmul(F(2), F(-3)) == F(-1)
    assert fmul(F(4), F(5)) == F(9)
    assert fmul(F(7), F(0)) == F(7)


def test_finv():
    assert finv(F(1)) == F(-1)
    assert finv(F(0)) == F(0)
    assert finv(F(-7)) == F(7)


def test_order_is_reversed():
    assert fleq(F(1), F(0))
    assert fleq(F(0), F(-1))
    assert not fleq(F(-2), F(3))
    assert fleq(F(5), F(5))


@given(grades, grades)
def test_fleq_matches_reversed_integer_order(x, y):
    assert fleq(F(x), F(y)) == (y <= x)


def test_overflow_is_an_error():
    with pytest.raises(ArithmeticRangeError):
        fmul(F(GRADE_MAX), F(1))
    with pytest.raises(ArithmeticRangeError):
        finv(F(GRADE_MIN))
    with pytest.raises(ArithmeticRangeError):
        F(GRADE_MAX + 1)


def test_grade_must_be_int():
    with pytest.raises(TypeError):
        F(1.5)
    with pytest.raises(TypeError):
        F(True)


@pytest.mark.parametrize("x, text", [(0, "(0)"), (2, "(+2)"), (-1, "(-1)"), (-16, "(-16)")])
def test_format_flat(x, text):
    assert format_flat(F(x)) == text
    assert parse_flat(text) == F(x)


def test_parse_flat_accepts_typographic_minus():
    assert parse_flat("(−3)") == F(-3)


@pytest.mark.parametrize("text, offset", [("(2", 2), ("2)", 0), ("(+)", 2), ("(1)x", 3), ("", 0)])
def test_parse_flat_errors_are_located(text, offset):
    with pytest.raises(ParseError) as err:
        parse_flat(text)
    assert err.value.offset == offset


@given(st.integers(min_value=GRADE_MIN + 1, max_value=GRADE_MAX))
def test_flat_round_trip(g):
    assert parse_flat(format_flat(F(g))) == F(g)


def test_semiring_laws_exhaustive():
    report = check_semiring(-16, 16)
    assert report.passed, report.render()
    assert report["fmul.distributive"].cases == 33**3
