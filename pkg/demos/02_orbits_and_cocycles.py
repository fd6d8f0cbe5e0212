"""
Orbits, equivalence classes and orbit representations
=====================================================

Two commuting maps on the circle: times 2 and times 3. The orbit of 1/5 is
finite, so the window {0..4}^2 splits into classes s ~ t when sigma_s and
sigma_t agree at x. A cocycle turns the orbit into a contractive
representation.
"""

from fractions import Fraction

import numpy as np

from semicross import CircleSystem, SymbolicElement, Window, build_orbit_rep
from semicross.cocycle import ConstantJacobian, left_regular_orbit_cocycle, orbit_cocycle_from_cocycle
from semicross.dynsys import CircleRational

sys = CircleSystem((2, 3))
x = CircleRational(Fraction(1, 5))

orbit = sys.orbit(x)
print(len(orbit), "orbit points:", [str(p) for p in orbit.points])
print("every generator permutes the orbit:", orbit.fully_recurrent())

w = Window((4, 4))
for y, members in sys.equivalence_classes(x, w):
    print(y, len(members), sys.class_finiteness(x, y).kind)

# the Jacobian cocycle omega(t, y) = 1 / deg(sigma_t); mu is its square root
mu = orbit_cocycle_from_cocycle(ConstantJacobian(), sys, x, w)
print("validated:", mu.validation.ok)

for s in [(1, 0), (0, 1), (1, 1)]:
    rho = build_orbit_rep(sys, mu, SymbolicElement.mono(sys, s))
    print(s, "norm", round(rho.norm(), 6), "1/sqrt(deg) =", round(1 / np.sqrt(sys.total_degree(sys.element(s))), 6))

# the left regular cocycle from class counts: all ones on a closed orbit
lr = left_regular_orbit_cocycle(sys, x, w, "exact")
print(lr.diagnostics["certificate"])
print(set(lr.table.values()))
