"""
The doubling map and its left regular representation
=====================================================

Build pi_{x,gamma}(F) as a matrix on a finite window, check the covariance
relation numerically, and watch the norm estimate as the window grows.
"""

from fractions import Fraction

import numpy as np

from semicross import CircleSystem, Character, SymbolicElement, Window, build_left_regular, estimate_norm
from semicross.dynsys import CircleRational
from semicross.funcalg import TrigPoly

sys = CircleSystem((2,))
x = CircleRational(Fraction(1, 3))

# the forward orbit of 1/3 under doubling is 1/3, 2/3, 1/3, ...
print([str(p) for p in sys.orbit(x).points])

# f = e(theta), one Fourier mode
f = TrigPoly({1: 1})
S1 = SymbolicElement.mono(sys, (1,))
w = Window((6,))
gamma = Character((Fraction(1, 4),))

pi_S1 = build_left_regular(sys, x, gamma, w, S1).data
pi_f = build_left_regular(sys, x, gamma, w, SymbolicElement.function(sys, f)).data
pi_pull = build_left_regular(sys, x, gamma, w, SymbolicElement.function(sys, sys.pullback(f, (1,)))).data

# f S_1 = S_1 (f o sigma_1), entrywise
print(np.abs(pi_f @ pi_S1 - pi_S1 @ pi_pull).max())

# the shift is a phased translation; its interior columns are orthonormal
np.set_printoptions(precision=2, suppress=True)
print(pi_S1)

# a two-term element and its norm: a lower bound that grows with the window
F = SymbolicElement(sys, {(0,): TrigPoly({0: 1}), (1,): TrigPoly({1: 0.5})})
chars = [Character((Fraction(k, 8),)) for k in range(8)]
pts = [CircleRational(Fraction(p, 7)) for p in range(7)]
est = estimate_norm(F, pts, chars, [2, 4, 8])
for row in est.curve:
    print(row["window"], round(row["running_bound"], 6))
print("lower bound", est.lower_bound)
