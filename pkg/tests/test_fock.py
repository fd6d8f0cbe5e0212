from fractions import Fraction

import numpy as np
from hypothesis import given, strategies as st

from conftest import finite_tables, q, rotations, trig_polys
from semicross.dynsys import CircleSystem, FiniteLabel
from semicross.fock import (
    CorrVector,
    FockVector,
    Lambda,
    corr_inner,
    creation,
    creation_matrix,
    fock_basis,
    fock_left_action,
    fock_matrix,
    left_action,
    left_action_matrix,
    rep_condition_check,
    small_lambda,
    toeplitz_defects,
)
from semicross.funcalg import TrigPoly, conj
from semicross.repn import SymbolicElement as SE, build_left_regular
from semicross.semigroup import Character, SemigroupElement, Window

C2 = CircleSystem((2,))


def eps(s, f=None):
    return CorrVector.basis(C2, (s,), f)


def test_basis_orthonormal():
    assert corr_inner(eps(1), eps(1)) == C2.one()
    assert corr_inner(eps(1), eps(2)).is_zero()


def test_inner_of_scaled_basis():
    f, g = TrigPoly({1: 2}), TrigPoly({0: 1j, -1: 1})
    assert corr_inner(eps(1, f), eps(1, g)) == conj(f) * g


@given(trig_polys, trig_polys)
def test_inner_is_sesquilinear_over_right_action(f, g):
    xi = eps(0, TrigPoly({1: 1})) + eps(2, TrigPoly({0: 3}))
    eta = eps(2, TrigPoly({-1: 1j}))
    assert corr_inner(xi.right(f), eta.right(g)) == conj(f) * corr_inner(xi, eta) * g


def test_left_action_examples():
    xi = eps(1, TrigPoly({3: 1}))
    assert left_action(C2.one(), xi) == xi
    f = TrigPoly({0: 2, 1: 1})
    assert left_action(f, eps(0)) == eps(0, f)
    # f o sigma_1 doubles the frequency
    assert left_action(TrigPoly({1: 1}), eps(1)) == eps(1, TrigPoly({2: 1}))


def test_creation_examples():
    f = TrigPoly({1: 1})
    vac = FockVector.vacuum(C2)
    assert creation(eps(1, f), vac, 3) == FockVector.word(C2, [(1,)], f)
    two = FockVector.word(C2, [(2,)])
    assert creation(eps(1, f), two, 3) == FockVector.word(C2, [(1,), (2,)], C2.pullback(f, (2,)))


def test_creation_flags_truncation():
    v = FockVector.word(C2, [(1,), (1,)])
    out = creation(eps(1), v, 2)
    assert out.truncated and not out.terms


def test_fock_left_action_on_words():
    f = TrigPoly({1: 1})
    v = FockVector.word(C2, [(1,), (2,)])
    assert fock_left_action(f, v) == FockVector.word(C2, [(1,), (2,)], C2.pullback(f, (3,)))


def test_fock_basis_size():
    letters = [SemigroupElement((0,)), SemigroupElement((1,))]
    assert len(fock_basis(letters, 3)) == 1 + 2 + 4 + 8


def test_fock_unit_and_shift():
    letters = [SemigroupElement((1,))]
    x = q(1, 3)
    ident = fock_matrix(C2, x, [C2.one()], letters, 3)
    assert np.allclose(ident.data, np.eye(4))
    t = creation_matrix(C2, x, eps(1), letters, 3)
    assert np.allclose(t.data, np.eye(4, k=-1))
    assert t.truncated_columns == [(SemigroupElement((1,)),) * 3]


def test_left_action_matrix_reads_orbit():
    letters = [SemigroupElement((1,))]
    f = TrigPoly({1: 1})
    m = left_action_matrix(C2, q(1, 3), f, letters, 2).data
    expected = [np.exp(2j * np.pi * v) for v in (Fraction(1, 3), Fraction(2, 3), Fraction(1, 3))]
    assert np.allclose(np.diag(m), expected)


def test_concrete_pair_product_is_a_shift():
    # Lambda(eps_1)* Lambda(eps_2) acts as pi(S_1) on interior columns, not as lambda(<eps_1, eps_2>) = 0.
    w, x, gamma = Window((8,)), q(1, 3), Character.trivial(1)
    lhs = Lambda(C2, x, gamma, w, eps(1)).conj().T @ Lambda(C2, x, gamma, w, eps(2))
    shift = build_left_regular(C2, x, gamma, w, SE.mono(C2, (1,))).data
    inner = list(range(0, 7))
    assert np.allclose(lhs[:, inner], shift[:, inner])
    assert np.abs(small_lambda(C2, x, gamma, w, corr_inner(eps(1), eps(2)))).max() == 0


def test_rep_conditions_on_circle():
    rep = rep_condition_check(C2, q(1, 3), Character.trivial(1), Window((8,)), samples=5, seed=1)
    status = {c.name: c.passed for c in rep.checks}
    assert status["condition-2"] and status["fock-condition-1"] and status["fock-condition-2"] and status["orthonormal"]
    assert not status["condition-1"]


@given(trig_polys, trig_polys, trig_polys)
def test_toeplitz_relations_on_circle(f, g, h):
    letters = [SemigroupElement((0,)), SemigroupElement((1,))]
    xi = eps(0, f) + eps(1, g)
    eta = eps(1, h)
    d = toeplitz_defects(C2, q(1, 5), xi, eta, TrigPoly({1: 1}), letters, 3)
    assert d["condition_1"] < 1e-9
    assert d["condition_2"] < 1e-9
    assert d["right_multiplication_grade0"] < 1e-9


@given(finite_tables, finite_tables)
def test_toeplitz_relations_on_finite(f, g):
    sys = rotations(6, (1, 3))
    letters = [SemigroupElement((1, 0)), SemigroupElement((0, 1))]
    xi = CorrVector(sys, {(1, 0): f, (0, 1): g})
    eta = CorrVector(sys, {(0, 1): f})
    d = toeplitz_defects(sys, FiniteLabel("0"), xi, eta, g, letters, 2)
    assert d["condition_1"] < 1e-9 and d["condition_2"] < 1e-9


@given(st.integers(0, 10_000))
def test_orthonormal_check_always_holds(seed):
    rep = rep_condition_check(C2, q(1, 5), Character((Fraction(1, 4),)), Window((6,)), samples=1, seed=seed)
    assert next(c for c in rep.checks if c.name == "orthonormal").passed
