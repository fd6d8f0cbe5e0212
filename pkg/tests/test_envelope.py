import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import circle_points, cylinders, q, rotations
from semicross.dynsys import CircleSystem, EvPeriodicWord, FiniteLabel, ShiftSystem
from semicross.envelope import (
    InsufficientDepth,
    build_closed_crossed_rep,
    build_crossed_rep,
    check_extension_diagram,
    check_path,
    closed_norm_gap,
    compression_defect,
    dilation_check,
    enumerate_paths,
    evaluate_tagged,
    lift,
    make_path,
    projection,
    shilov_report,
    tilde_sigma,
)
from semicross.funcalg import CylinderFn, TrigPoly, evaluate
from semicross.repn import SymbolicElement as SE
from semicross.semigroup import Character, SemigroupElement, Window

ONE = EvPeriodicWord((), (1,))


def test_shift_paths_depth_two():
    sys = ShiftSystem(2)
    paths = enumerate_paths(sys, ONE, 2)
    assert len(paths) == 4
    assert all(projection(p) == ONE and check_path(sys, p) for p in paths)


def test_circle_paths_depth_one():
    sys = CircleSystem((2,))
    tops = {p.top for p in enumerate_paths(sys, q(1, 3), 1)}
    assert tops == {q(1, 6), q(2, 3)}


def test_finite_bijection_has_one_path():
    sys = rotations(6, (1, 3))
    assert len(enumerate_paths(sys, FiniteLabel("0"), 3)) == 1


def test_tilde_sigma_zero_and_inverse():
    sys = ShiftSystem(2)
    for p in enumerate_paths(sys, ONE, 2):
        assert tilde_sigma(sys, 0, p) == p
        assert tilde_sigma(sys, -1, tilde_sigma(sys, 1, p)) == p


def test_backward_move_needs_depth():
    sys = ShiftSystem(2)
    p = enumerate_paths(sys, ONE, 1)[0]
    with pytest.raises(InsufficientDepth):
        tilde_sigma(sys, -2, p)


def test_diagram_on_sampled_shift_paths():
    sys = ShiftSystem(2)
    rng = random.Random(0)
    points = [EvPeriodicWord(tuple(rng.randrange(2) for _ in range(3)), (rng.randrange(2), 1)) for _ in range(10)]
    rep = check_extension_diagram(sys, points, 4, [1, 2], path_samples=50, rng=rng)
    assert rep.ok, rep.as_dict()


def test_diagram_and_bijection_on_finite():
    sys = rotations(6, (1, 3))
    rep = check_extension_diagram(sys, [FiniteLabel("0"), FiniteLabel("2")], (2, 2), [(1, 0), (0, 1), (1, 1)])
    assert rep.ok, rep.as_dict()


def test_untagged_lift_reads_anchor():
    sys = CircleSystem((2,))
    f = TrigPoly({1: 1, -2: 3j})
    for p in enumerate_paths(sys, q(1, 5), 2):
        assert evaluate_tagged(sys, lift(f), p) == evaluate(f, q(1, 5))


def test_alpha_round_trip():
    dtf = lift(TrigPoly({1: 1}), 2)
    assert dtf.alpha(3).alpha_inv(3) == dtf
    assert dtf.alpha_inv(1).alpha(1) == dtf


def test_tagged_function_separates_paths():
    # Two depth-1 paths over (1) share an anchor; a tag one step up sees their tops.
    sys = ShiftSystem(2)
    f = CylinderFn(1, 2, {(0,): 5, (1,): 7})
    paths = enumerate_paths(sys, ONE, 1)
    assert [evaluate_tagged(sys, lift(f), p) for p in paths] == [7, 7]
    assert sorted(evaluate_tagged(sys, lift(f, 1), p).real for p in paths) == [5, 7]


def test_crossed_unit_is_identity():
    sys = CircleSystem((2,))
    m = build_crossed_rep(sys, q(1, 3), Character.trivial(1), 2, 2, [((0,), sys.one())])
    assert np.allclose(m.data, np.eye(len(m.labels)))
    assert m.starved == []


def test_crossed_shift_starves_only_the_top_row():
    sys = CircleSystem((2,))
    m = build_crossed_rep(sys, q(1, 3), Character.trivial(1), 2, 2, [((1,), sys.one())])
    assert {lab[0] for lab in m.starved} == {(2,)}
    assert m.norm() == pytest.approx(1.0)


def test_closed_rep_on_finite_is_unitary():
    sys = rotations(6, (1, 3))
    for g in [(1, 0), (0, 1), (2, 1)]:
        u = build_closed_crossed_rep(sys, FiniteLabel("0"), Character((Fraction(1, 3), Fraction(1, 4))), [(g, sys.one())]).data
        assert np.allclose(u @ u.conj().T, np.eye(6))


def test_closed_rep_on_periodic_shift_is_a_swap():
    sys = ShiftSystem(2)
    u = build_closed_crossed_rep(sys, EvPeriodicWord((), (0, 1)), Character.trivial(1), [((1,), sys.one())]).data
    assert np.allclose(u, [[0, 1], [1, 0]])


def test_closed_rep_rejects_transient_orbit():
    sys = CircleSystem((2,))
    with pytest.raises(ValueError):
        build_closed_crossed_rep(sys, q(1, 6), Character.trivial(1), [((1,), sys.one())])


def test_closed_norm_matches_for_monomials():
    sys = CircleSystem((2,))
    F = SE.mono(sys, (1,), TrigPoly({0: 2, 1: 1}))
    assert closed_norm_gap(sys, q(1, 3), Character.trivial(1), F)["gap"] < 1e-10


def test_compression_recovers_truncated_shift():
    sys = CircleSystem((2,))
    assert compression_defect(sys, q(1, 3), Character.trivial(1), 3, 3, 1) < 1e-12
    assert compression_defect(sys, q(1, 3), Character((Fraction(1, 5),)), 3, 3, 2) < 1e-12


def test_dilation_compression_passes():
    sys = CircleSystem((2,))
    F = SE.mono(sys, (1,), TrigPoly({1: 1}))
    rep = dilation_check(sys, q(1, 3), Character.trivial(1), F, 2, 2)
    assert next(c for c in rep.checks if c.name == "compression").passed


def test_shilov_dimensions():
    sys = CircleSystem((2,))
    rep = shilov_report(sys, q(1, 3), Character.trivial(1), Window((3,)), [SE.mono(sys, (1,))], 2, 2)
    assert rep.data["dim_H0"] == 2 and rep.data["dim_H1"] == 2
    assert rep.ok, rep.as_dict()


# -- properties -----------------------------------------------------------------------------


@given(circle_points, st.integers(0, 3), st.integers(0, 3))
def test_tilde_sigma_composes(x, a, b):
    sys = CircleSystem((2,))
    for p in enumerate_paths(sys, x, 2):
        assert tilde_sigma(sys, a, tilde_sigma(sys, b, p)) == tilde_sigma(sys, a + b, p)


@given(circle_points, st.integers(0, 3))
def test_projection_intertwines(x, t):
    sys = CircleSystem((2,))
    for p in enumerate_paths(sys, x, 2):
        moved = tilde_sigma(sys, t, p)
        assert projection(moved) == sys.apply(SemigroupElement((t,)), projection(p))
        assert check_path(sys, moved)


@given(cylinders(), st.integers(0, 2), st.integers(-2, 2))
def test_alpha_matches_tilde_sigma(f, offset, g):
    sys = ShiftSystem(2)
    dtf = lift(f, offset)
    for p in enumerate_paths(sys, EvPeriodicWord((0,), (1, 0)), 3):
        if min(p.depth) + g < max(offset, offset - g):
            continue
        assert evaluate_tagged(sys, dtf.alpha(g), p) == pytest.approx(evaluate_tagged(sys, dtf, tilde_sigma(sys, g, p)))


@given(st.integers(1, 5), st.integers(0, 3))
def test_closed_rep_is_multiplicative(n, m):
    sys = rotations(6, (1, 3))
    gamma = Character((Fraction(1, 6), Fraction(1, 2)))
    u = build_closed_crossed_rep(sys, FiniteLabel("0"), gamma, [((1, 0), sys.one())]).data
    v = build_closed_crossed_rep(sys, FiniteLabel("0"), gamma, [((0, 1), sys.one())]).data
    direct = build_closed_crossed_rep(sys, FiniteLabel("0"), gamma, [((n, m), sys.one())]).data
    assert np.allclose(np.linalg.matrix_power(u, n) @ np.linalg.matrix_power(v, m), direct)


@given(circle_points)
def test_make_path_anchor(x):
    sys = CircleSystem((2, 3))
    p = make_path(sys, x, (1, 2))
    assert p.anchor == sys.apply(SemigroupElement((1, 2)), x)
