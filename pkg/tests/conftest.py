from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from semicross.dynsys import (
    CircleRational,
    CircleSystem,
    EvPeriodicWord,
    FiniteLabel,
    FiniteSystem,
    ShiftSystem,
)
from semicross.funcalg import CylinderFn, FiniteTable, TrigPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def rotations(n: int, steps) -> FiniteSystem:
    labels = [str(i) for i in range(n)]
    return FiniteSystem(labels, [{l: str((int(l) + k) % n) for l in labels} for k in steps])


@pytest.fixture
def circle2():
    return CircleSystem((2,))


@pytest.fixture
def circle23():
    return CircleSystem((2, 3))


@pytest.fixture
def shift2():
    return ShiftSystem(2)


@pytest.fixture
def finite6():
    return rotations(6, (1, 3))


def q(p, n):
    return CircleRational(Fraction(p, n))


# Gaussian integers keep every product exact in floating point.
gauss = st.builds(complex, st.integers(-3, 3), st.integers(-3, 3))

trig_polys = st.dictionaries(st.integers(-4, 4), gauss, max_size=4).map(TrigPoly)

finite_tables = st.lists(gauss, min_size=6, max_size=6).map(lambda vs: FiniteTable({str(i): v for i, v in enumerate(vs)}))


@st.composite
def cylinders(draw, k=2, max_depth=3):
    depth = draw(st.integers(0, max_depth))
    words = [tuple(int(c) for c in format(i, f"0{depth}b")) if depth else () for i in range(k**depth)]
    values = draw(st.lists(gauss, min_size=len(words), max_size=len(words)))
    return CylinderFn(depth, k, dict(zip(words, values)))


circle_points = st.builds(lambda p, n: CircleRational(Fraction(p % n, n)), st.integers(0, 200), st.integers(1, 60))

words = st.builds(
    EvPeriodicWord,
    st.lists(st.integers(0, 1), max_size=4).map(tuple),
    st.lists(st.integers(0, 1), min_size=1, max_size=4).map(tuple),
)

finite_points = st.integers(0, 5).map(lambda i: FiniteLabel(str(i)))
