from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import cylinders, finite_tables, gauss, q, trig_polys
from semicross.dynsys import CircleRational, CircleSystem, EvPeriodicWord, FiniteLabel, ShiftSystem
from semicross.funcalg import (
    BackendMismatch,
    CylinderFn,
    FiniteTable,
    TrigPoly,
    VariantMismatch,
    conj,
    evaluate,
    pullback,
    sup_norm_bounds,
)
from conftest import rotations

C2 = CircleSystem((2,))
C23 = CircleSystem((2, 3))
SH = ShiftSystem(2)
FIN = rotations(6, (1, 3))


def test_trig_product_and_conjugate():
    assert TrigPoly({1: 1}) * TrigPoly({2: 1}) == TrigPoly({3: 1})
    assert conj(TrigPoly({1: 1})) == TrigPoly({-1: 1})


def test_table_sum():
    assert FiniteTable({"a": 2, "b": 0}) + FiniteTable({"a": 1, "b": 1}) == FiniteTable({"a": 3, "b": 1})


def test_variant_mismatch():
    with pytest.raises(VariantMismatch):
        TrigPoly({0: 1}) + FiniteTable({"a": 1})


def test_evaluate_examples():
    assert evaluate(TrigPoly({1: 1}), q(1, 4)) == 1j
    f = CylinderFn(1, 2, {(0,): 5, (1,): 7})
    assert evaluate(f, EvPeriodicWord.parse("0(1)")) == 5
    with pytest.raises(KeyError):
        evaluate(FiniteTable({"a": 1}), FiniteLabel("b"))
    with pytest.raises(BackendMismatch):
        evaluate(TrigPoly({0: 1}), FiniteLabel("a"))


def test_pullback_examples():
    assert pullback(TrigPoly({1: 1}), (1,), C2) == TrigPoly({2: 1})
    assert pullback(TrigPoly({1: 1, -1: 1}), (0, 1), C23) == TrigPoly({3: 1, -3: 1})
    f = CylinderFn(1, 2, {(0,): 5, (1,): 7})
    g = pullback(f, (1,), SH)
    assert g.depth == 2
    for a0 in range(2):
        for a1 in range(2):
            assert g.value((a0, a1)) == f.value((a1,))


def test_sup_norm_examples():
    assert sup_norm_bounds(FiniteTable({"a": 3, "b": -4})) == (4, 4)
    assert sup_norm_bounds(TrigPoly({0: 1})) == (1, 1)
    lo, hi = sup_norm_bounds(TrigPoly({1: 1}))
    assert lo >= 1 - 1e-4 and hi == 1


@given(trig_polys, trig_polys, trig_polys)
def test_trig_star_algebra(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert conj(f * g) == conj(g) * conj(f) == conj(f) * conj(g)


@given(cylinders(), cylinders(), cylinders())
def test_cylinder_star_algebra(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert conj(f * g) == conj(f) * conj(g)


@given(finite_tables, finite_tables, finite_tables)
def test_table_star_algebra(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert conj(f * g) == conj(f) * conj(g)


@given(trig_polys, trig_polys, st.tuples(st.integers(0, 2), st.integers(0, 2)))
def test_pullback_is_star_homomorphism(f, g, s):
    assert pullback(f * g, s, C23) == pullback(f, s, C23) * pullback(g, s, C23)
    assert pullback(conj(f), s, C23) == conj(pullback(f, s, C23))
    assert pullback(C23.one(), s, C23) == C23.one()


@given(cylinders(), st.integers(0, 3), st.integers(0, 3))
def test_pullback_action_order(f, s, t):
    assert pullback(f, (s + t,), SH) == pullback(pullback(f, (t,), SH), (s,), SH)


@given(finite_tables, st.tuples(st.integers(0, 3), st.integers(0, 3)), st.tuples(st.integers(0, 3), st.integers(0, 3)))
def test_pullback_action_order_finite(f, s, t):
    st_ = tuple(a + b for a, b in zip(s, t))
    assert pullback(f, st_, FIN) == pullback(pullback(f, t, FIN), s, FIN)


@given(trig_polys, st.integers(0, 99), st.integers(1, 40), st.tuples(st.integers(0, 3), st.integers(0, 3)))
def test_eval_pullback_circle(f, p, n, s):
    x = CircleRational(Fraction(p % n, n))
    assert abs(evaluate(pullback(f, s, C23), x) - evaluate(f, C23.apply(s, x))) < 1e-9


@given(cylinders(), st.lists(st.integers(0, 1), max_size=3), st.lists(st.integers(0, 1), min_size=1, max_size=3), st.integers(0, 4))
def test_eval_pullback_shift(f, pre, per, s):
    x = EvPeriodicWord(tuple(pre), tuple(per))
    assert evaluate(pullback(f, (s,), SH), x) == evaluate(f, SH.apply((s,), x))


@given(finite_tables, st.integers(0, 5), st.tuples(st.integers(0, 4), st.integers(0, 4)))
def test_eval_pullback_finite(f, i, s):
    x = FiniteLabel(str(i))
    assert evaluate(pullback(f, s, FIN), x) == evaluate(f, FIN.apply(s, x))


@given(trig_polys)
def test_sup_norm_bracket(f):
    lo, hi = sup_norm_bounds(f)
    assert lo <= hi + 1e-12
