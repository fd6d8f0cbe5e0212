"""
Backward paths and the crossed product
======================================

Points of the natural extension are approximated by finite backward paths.
The shift sigma~_g becomes invertible there, and pi_{x,gamma} sits inside
the crossed product representation as a corner.
"""

from fractions import Fraction

import numpy as np

from semicross import CircleSystem, Character, SymbolicElement, ShiftSystem
from semicross.dynsys import CircleRational, EvPeriodicWord
from semicross.envelope import (
    build_closed_crossed_rep,
    compression_defect,
    enumerate_paths,
    evaluate_tagged,
    lift,
    norm_gap,
    tilde_sigma,
)
from semicross.funcalg import CylinderFn, TrigPoly

sys = CircleSystem((2,))
x = CircleRational(Fraction(1, 3))

# depth-2 paths over 1/3: one per preimage under sigma_2
for p in enumerate_paths(sys, x, 2):
    print(p)

# sigma~_{-1} splits a path open: the anchor moves one step back
p = enumerate_paths(sys, x, 2)[0]
print(tilde_sigma(sys, -1, p).anchor, "->", tilde_sigma(sys, 1, tilde_sigma(sys, -1, p)).anchor)

# a tagged function sees deeper coordinates than the anchor
shift = ShiftSystem(2)
f = CylinderFn(1, 2, {(0,): 5, (1,): 7})
one = EvPeriodicWord((), (1,))
print([evaluate_tagged(shift, lift(f, 1), q).real for q in enumerate_paths(shift, one, 1)])

# on the periodic orbit {1/3, 2/3} the unitaries close up exactly
gamma = Character((Fraction(1, 6),))
U = build_closed_crossed_rep(sys, x, gamma, [((1,), sys.one())]).data
print(np.round(U, 3))
print("unitary:", np.allclose(U @ U.conj().T, np.eye(2)))

# compression of U_1 to the embedded window gives back pi(S_1)
print("compression defect", compression_defect(sys, x, gamma, 3, 3, 1))

# truncated norms of a mixed element at two depths; on other base points
# the extra anchors can push the crossed norm above the left regular one
F = SymbolicElement(sys, {(0,): TrigPoly({1: 1}), (1,): TrigPoly({0: 1})})
for r in (2, 4):
    g = norm_gap(sys, x, gamma, F, r, r)
    print(r, round(g["crossed"], 6), round(g["left_regular"], 6), round(g["gap"], 6))
