import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import q, rotations, trig_polys
from semicross.cocycle import ConstantJacobian, left_regular_orbit_cocycle, orbit_cocycle_from_cocycle
from semicross.dynsys import CircleSystem, EvPeriodicWord, ShiftSystem
from semicross.funcalg import TrigPoly, abs_squared, evaluate
from semicross.repn import (
    DftSupportError,
    SymbolicElement as SE,
    WindowTooSmall,
    adjoint_star_product,
    build_left_regular,
    build_left_regular_shift,
    build_orbit_rep,
    coeff_distance,
    dft_matrix_projection,
    estimate_norm,
    gauge,
    h0_invariance_defect,
    h0_projection,
    intertwiner,
    intertwining_defect,
    multiply,
    project,
    random_element,
    torus_window,
)
from semicross.semigroup import Character, SemigroupElement as S, Window, enumerate_window, window_index

C2 = CircleSystem((2,))
C23 = CircleSystem((2, 3))
X = q(1, 3)
ONE = Character.trivial(1)


@st.composite
def elements23(draw, bound=2):
    keys = st.tuples(st.integers(0, bound), st.integers(0, bound))
    return SE(C23, draw(st.dictionaries(keys, trig_polys, max_size=3)))


@st.composite
def elements2(draw, bound=3):
    return SE(C2, draw(st.dictionaries(st.integers(0, bound).map(lambda k: (k,)), trig_polys, max_size=3)))


characters2 = st.tuples(st.fractions(), st.fractions()).map(Character)


def test_multiply_noncommutative():
    f = TrigPoly({1: 1})
    a = SE.function(C2, f) * SE.mono(C2, (1,))
    b = SE.mono(C2, (1,)) * SE.function(C2, f)
    assert a == SE.mono(C2, (1,), TrigPoly({2: 1}))
    assert b == SE.mono(C2, (1,), TrigPoly({1: 1}))


def test_multiply_unit_and_rule():
    f, g = TrigPoly({1: 2}), TrigPoly({-1: 1j})
    F = SE.mono(C2, (1,), f) + SE.mono(C2, (3,), g)
    assert F * SE.function(C2, C2.one()) == F
    assert SE.mono(C2, (1,), f) * SE.mono(C2, (1,), g) == SE.mono(C2, (2,), C2.pullback(f, (1,)) * g)


def test_adjoint_star_product_examples():
    f, g = TrigPoly({1: 1, 0: 2}), TrigPoly({-2: 1j})
    F = SE.mono(C2, (0,), f) + SE.mono(C2, (1,), g)
    assert adjoint_star_product(F) == abs_squared(f) + abs_squared(g)
    assert adjoint_star_product(SE.mono(C2, (1,))) == TrigPoly({0: 1})
    assert adjoint_star_product(SE(C2)).is_zero()


def test_gauge_examples():
    f = TrigPoly({1: 1})
    F = SE.mono(C2, (1,), f)
    assert gauge(ONE, F) == F
    assert gauge(Character((Fraction(1, 4),)), F) == SE.mono(C2, (1,), f.scale(1j))


@given(elements23(), elements23(), characters2)
def test_gauge_is_multiplicative(F, G, gamma):
    assert coeff_distance(gauge(gamma, F * G), gauge(gamma, F) * gauge(gamma, G)) < 1e-12


def test_project_examples():
    f, g = TrigPoly({1: 1}), TrigPoly({2: 3})
    F = SE.mono(C2, (1,), f) + SE.mono(C2, (2,), g)
    assert project(F, (1,)) == SE.mono(C2, (1,), f)
    assert project(F, (5,)).is_zero()
    with pytest.raises(DftSupportError):
        project(F, (1,), "dft", Window((1,)))


@given(elements23(bound=3), st.tuples(st.integers(0, 3), st.integers(0, 3)))
def test_project_dft_matches_symbolic(F, s):
    w = Window((3, 3))
    assert coeff_distance(project(F, s, "dft", w), project(F, s)) < 1e-12


def test_left_regular_examples():
    w = Window((3,))
    assert np.array_equal(build_left_regular(C2, X, ONE, w, SE.function(C2, C2.one())).data, np.eye(4))
    d = build_left_regular(C2, X, ONE, w, SE.function(C2, TrigPoly({1: 1}))).data
    a, b = np.exp(2j * np.pi / 3), np.exp(4j * np.pi / 3)
    assert np.max(np.abs(d - np.diag([a, b, a, b]))) < 1e-15
    shift = build_left_regular(C2, X, ONE, w, SE.mono(C2, (1,))).data
    expected = np.zeros((4, 4))
    expected[1, 0] = expected[2, 1] = expected[3, 2] = 1
    assert np.array_equal(shift, expected)


def test_left_regular_window_too_small():
    with pytest.raises(WindowTooSmall):
        build_left_regular(C2, X, ONE, Window((2,)), SE.mono(C2, (3,)))


def test_orbit_rep_examples():
    mu = orbit_cocycle_from_cocycle(ConstantJacobian(), C2, X, Window((2,)))
    m = build_orbit_rep(C2, mu, SE.mono(C2, (1,)))
    r = 1 / math.sqrt(2)
    assert [str(p) for p in m.labels] == ["1/3", "2/3"]
    assert np.max(np.abs(m.data - np.array([[0, r], [r, 0]]))) < 1e-15
    assert abs(m.norm() - r) < 1e-15
    f = TrigPoly({1: 1, 0: 1})
    m = build_orbit_rep(C2, mu, SE.function(C2, f))
    assert np.max(np.abs(m.data - np.diag([evaluate(f, q(1, 3)), evaluate(f, q(2, 3))]))) < 1e-15


@given(trig_polys, st.integers(0, 2))
def test_orbit_rep_covariance(f, t):
    mu = orbit_cocycle_from_cocycle(ConstantJacobian(), C2, X, Window((2,)))
    lhs = build_orbit_rep(C2, mu, SE.function(C2, f)).data @ build_orbit_rep(C2, mu, SE.mono(C2, (t,))).data
    rhs = build_orbit_rep(C2, mu, SE.mono(C2, (t,), C2.pullback(f, (t,)))).data
    assert np.max(np.abs(lhs - rhs)) < 1e-12


def test_h0_examples():
    q_, qp = h0_projection(C2, X, Window((3,)))
    expected = np.zeros((4, 4))
    expected[np.ix_([0, 2], [0, 2])] = 0.5
    expected[np.ix_([1, 3], [1, 3])] = 0.5
    assert np.array_equal(qp.data.real, expected)
    assert np.array_equal(q_.data + qp.data, np.eye(4))
    fin = rotations(7, (1,))
    q_, qp = h0_projection(fin, fin.parse_point("0"), Window((5,)))
    assert not q_.data.any() and np.array_equal(qp.data, np.eye(6))


def test_intertwiner_examples():
    W = intertwiner(C2, X, Window((3,))).data
    r = 1 / math.sqrt(2)
    assert np.max(np.abs(W[:, 0] - np.array([r, 0, r, 0]))) < 1e-15
    assert np.max(np.abs(W.conj().T @ W - np.eye(2))) < 1e-12
    fin = rotations(7, (1,))
    W = intertwiner(fin, fin.parse_point("0"), Window((6,))).data
    assert np.array_equal(np.abs(W), np.eye(7))


def test_estimate_norm_examples():
    est = estimate_norm(SE.function(C2, C2.one()), [X], [ONE], [3])
    assert abs(est.lower_bound - 1) < 1e-12
    est = estimate_norm(SE.mono(C2, (1,)), [X], [ONE], [2, 4, 8])
    assert est.lower_bound >= 0.95
    # independent oracle: the truncated unilateral shift on 9 basis vectors
    shift = np.diag(np.ones(8), -1)
    assert abs(est.lower_bound - np.linalg.norm(shift, 2)) < 1e-12
    curve = [c["max_norm"] for c in est.curve]
    assert curve == sorted(curve)


@given(trig_polys, st.tuples(st.integers(0, 2), st.integers(0, 2)), characters2)
def test_covariance_full_window(f, t, gamma):
    x, w = q(1, 5), Window((4, 4))
    lhs = build_left_regular(C23, x, gamma, w, SE.function(C23, f)).data @ build_left_regular_shift(C23, gamma, w, t).data
    rhs = build_left_regular(C23, x, gamma, w, SE.mono(C23, t, C23.pullback(f, t))).data
    assert np.max(np.abs(lhs - rhs)) < 1e-12


@given(st.integers(0, 3), characters2.map(lambda c: Character(c.angles[:1])))
def test_interior_isometry(t, gamma):
    w = Window((8,))
    m = build_left_regular_shift(C2, gamma, w, (t,)).data
    cols = [i for i in range(9) if i + t <= 8]
    c = m[:, cols]
    assert np.max(np.abs(c.conj().T @ c - np.eye(len(cols)))) < 1e-12


@given(elements23(), elements23(), characters2)
def test_torus_window_is_multiplicative(F, G, gamma):
    x = q(1, 5)
    w = torus_window(C23, x, 4)
    pf = build_left_regular(C23, x, gamma, w, F).data
    pg = build_left_regular(C23, x, gamma, w, G).data
    pfg = build_left_regular(C23, x, gamma, w, multiply(F, G)).data
    assert np.max(np.abs(pf @ pg - pfg), initial=0) < 1e-10


@given(elements23(), characters2)
def test_h0_invariance(F, gamma):
    defect, excluded = h0_invariance_defect(C23, q(1, 5), gamma, Window((4, 4)), F)
    assert defect < 1e-12


@given(elements23(), characters2)
def test_intertwining_on_torus(F, gamma):
    x = q(1, 5)
    w = torus_window(C23, x, 4)
    assert intertwining_defect(C23, x, gamma, w, F) < 1e-10


@given(elements2(), st.sampled_from([q(1, 3), q(1, 7), q(3, 5), q(1, 6)]))
def test_positivity_of_expectation(F, x):
    orbit = C2.orbit(x)
    total = adjoint_star_product(F)
    for y in orbit.points:
        for f in F.terms.values():
            assert evaluate(total, y).real >= abs(evaluate(f, y)) ** 2 - 1e-12


@given(elements2())
def test_faithfulness_direction(F):
    assert adjoint_star_product(F).is_zero() == F.is_zero()


def test_expectation_matches_matrix_diagonal():
    # P0(F*F) evaluated along the orbit is the diagonal of pi(F)* pi(F) on interior columns
    rng = random.Random(3)
    F = random_element(C2, rng, Window((2,)), 3)
    w = Window((8,))
    m = build_left_regular(C2, X, ONE, w, F).data
    gram = (m.conj().T @ m).diagonal()
    total = adjoint_star_product(F)
    pts = [C2.apply((u,), X) for u in range(9)]
    for u in range(9 - 2):
        assert abs(gram[u] - evaluate(total, pts[u])) < 1e-12


@given(elements2(bound=3))
def test_dft_matrix_projection(F):
    assert dft_matrix_projection(C2, X, Window((3,)), F, (1,)) < 1e-12


def test_orbit_rep_left_regular_exact_is_unitary_on_cycle():
    mu = left_regular_orbit_cocycle(C23, q(1, 5), Window((2, 2)), "exact")
    m = build_orbit_rep(C23, mu, SE.mono(C23, (1, 0))).data
    assert np.max(np.abs(m.conj().T @ m - np.eye(4))) < 1e-12


def test_shift_left_regular_reads_letters():
    sh = ShiftSystem(2)
    from semicross.funcalg import CylinderFn

    f = CylinderFn(1, 2, {(0,): 5, (1,): 7})
    x = EvPeriodicWord.parse("0(1)")
    d = build_left_regular(sh, x, ONE, Window((3,)), SE.function(sh, f)).data
    assert np.array_equal(d.diagonal(), np.array([5, 7, 7, 7]))
