from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from semicross.cocycle import ConstantJacobian, ExplicitTable
from semicross.dynsys import CircleSystem, ShiftSystem, ValidationError
from semicross.formats import (
    ParseError,
    parse_cocycle,
    parse_element_text,
    parse_function,
    parse_number,
    parse_system_text,
    parse_vector,
)
from semicross.funcalg import CylinderFn, FiniteTable, TrigPoly

CIRCLE23 = """\
[system]
backend = circle
point = 1/5

[circle]
multipliers = 2, 3
"""

BAD_FINITE = """\
[system]
backend = finite
point = a

[finite]
labels = a, b, c
generators = m

[map m]
a = b
b = a
c = a
"""


def test_circle_file_parses():
    spec = parse_system_text(CIRCLE23)
    assert isinstance(spec.system, CircleSystem)
    assert spec.system.d == 2
    assert spec.point == spec.system.parse_point("1/5")


def test_non_surjective_map_is_rejected():
    with pytest.raises(ValidationError) as err:
        parse_system_text(BAD_FINITE)
    assert "c" in str(err.value)
    assert not err.value.report.ok


def test_validation_can_be_skipped():
    spec = parse_system_text(BAD_FINITE, validate=False)
    assert spec.report is None or not spec.report.ok


def test_malformed_field_reports_its_line():
    text = CIRCLE23.replace("2, 3", "2, x")
    with pytest.raises(ParseError) as err:
        parse_system_text(text, path="c.ini")
    assert err.value.line == 6
    assert err.value.field == "circle.multipliers"
    assert "c.ini" in str(err.value)


def test_unknown_backend():
    with pytest.raises(ParseError):
        parse_system_text(CIRCLE23.replace("circle\n", "torus\n", 1))


@pytest.mark.parametrize(
    "text, value",
    [("2", 2), ("-1.5", -1.5), ("3i", 3j), ("-i", -1j), ("2+3i", 2 + 3j), ("1-0.5i", 1 - 0.5j)],
)
def test_numbers(text, value):
    assert parse_number(text) == pytest.approx(value)


def test_function_literals():
    assert parse_function("trig{0:1, 1:-0.25i}") == TrigPoly({0: 1, 1: -0.25j})
    assert parse_function("cyl{1; 0:5, 1:7}", ShiftSystem(2)) == CylinderFn(1, 2, {(0,): 5, (1,): 7})
    assert parse_function("table{a: 1, b: 2i}") == FiniteTable({"a": 1, "b": 2j})
    with pytest.raises(ValueError):
        parse_function("poly{1:2}")
    with pytest.raises(ValueError):
        parse_function("cyl{2; 0:1}", ShiftSystem(2))


def test_vectors():
    assert parse_vector("[1, 0]") == (1, 0)
    assert parse_vector("[]") == ()
    with pytest.raises(ValueError):
        parse_vector("1, 0")


def test_cocycle_literals():
    sys = CircleSystem((2,))
    assert isinstance(parse_cocycle("jacobian", sys), ConstantJacobian)
    c = parse_cocycle("table{0, 1/3: 0.5; *: 1}", sys)
    assert isinstance(c, ExplicitTable)


def test_element_file():
    sys = CircleSystem((2,))
    spec = parse_element_text("term { s = [0]; f = trig{1:0.5, -1:0.5} }\n# c\nterm { s = [2]; f = trig{0:1} }\ncocycle = jacobian\n", sys)
    F = spec.symbolic(sys)
    assert [s.exps for s in F.support] == [(0,), (2,)]
    assert spec.cocycle == "jacobian"


def test_element_group_terms_are_not_symbolic():
    sys = CircleSystem((2,))
    spec = parse_element_text("term { g = [-1]; f = trig{0:1}; offset = [1] }", sys)
    with pytest.raises(ValueError):
        spec.symbolic(sys)
    (vec, dtf), = spec.crossed_terms(sys)
    assert vec == (-1,) and dtf.offset == (1,)


@pytest.mark.parametrize(
    "line, field",
    [
        ("term { s = [1, 0]; f = trig{0:1} }", "s"),
        ("term { s = [-1]; f = trig{0:1} }", "s"),
        ("term { s = [1] }", "f"),
        ("term { s = [1]; f = nope{} }", "f"),
        ("cocycle = wobbly", "cocycle"),
    ],
)
def test_element_errors(line, field):
    with pytest.raises(ParseError) as err:
        parse_element_text("\n" + line, CircleSystem((2,)))
    assert err.value.line == 2
    assert err.value.field == field


@given(st.dictionaries(st.integers(-5, 5), st.integers(-9, 9), min_size=1, max_size=4))
def test_trig_literal_round_trip(coeffs):
    text = "trig{" + ", ".join(f"{k}:{v}" for k, v in coeffs.items()) + "}"
    assert parse_function(text) == TrigPoly(coeffs)


@given(st.fractions(min_value=0, max_value=1, max_denominator=50))
def test_circle_point_field(x):
    x = Fraction(x) % 1
    spec = parse_system_text(CIRCLE23.replace("1/5", f"{x.numerator}/{x.denominator}"))
    assert spec.point == spec.system.parse_point(f"{x.numerator}/{x.denominator}")
