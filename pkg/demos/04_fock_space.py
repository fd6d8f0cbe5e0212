"""
The correspondence and its Fock space
=====================================

Vectors eps_s f, the inner product <xi, eta> and the left action phi(f),
then creation operators T_xi on a truncated Fock space where the Toeplitz
relations can be read off as matrix identities.
"""

from fractions import Fraction

import numpy as np

from semicross import CircleSystem, Character, Window
from semicross.dynsys import CircleRational
from semicross.fock import (
    CorrVector,
    FockVector,
    Lambda,
    corr_inner,
    creation,
    creation_matrix,
    left_action,
    left_action_matrix,
    small_lambda,
)
from semicross.funcalg import TrigPoly
from semicross.semigroup import SemigroupElement

sys = CircleSystem((2,))
x = CircleRational(Fraction(1, 3))

e1 = CorrVector.basis(sys, (1,))
e2 = CorrVector.basis(sys, (2,), TrigPoly({1: 1}))
print(corr_inner(e1, e1), corr_inner(e1, e2))

# phi(f) acts on the s-th slot through f o sigma_s
print(left_action(TrigPoly({1: 1}), e1))

# T_xi on words: the new letter goes in front
v = creation(e1, FockVector.word(sys, [(2,)]), 3)
print(v.terms)

# T_xi* T_eta = phi_inf(<xi, eta>) on grades below the truncation
letters = [SemigroupElement((0,)), SemigroupElement((1,))]
xi = CorrVector(sys, {(0,): TrigPoly({1: 1}), (1,): TrigPoly({0: 2})})
eta = CorrVector(sys, {(1,): TrigPoly({-1: 1j})})
K = 3
T_xi = creation_matrix(sys, x, xi, letters, K).data
T_eta = creation_matrix(sys, x, eta, letters, K).data
phi = left_action_matrix(sys, x, corr_inner(xi, eta), letters, K).data
inner = [i for i, wd in enumerate(creation_matrix(sys, x, xi, letters, K).labels) if len(wd) < K]
print("Fock defect", np.abs((T_xi.conj().T @ T_eta - phi)[np.ix_(inner, inner)]).max())

# the concrete pair on l2(S) built from pi_{x,gamma} behaves differently:
# Lambda(eps_1)* Lambda(eps_2) is the shift pi(S_1), while <eps_1, eps_2> = 0
w = Window((8,))
gamma = Character.trivial(1)
lhs = Lambda(sys, x, gamma, w, e1).conj().T @ Lambda(sys, x, gamma, w, CorrVector.basis(sys, (2,)))
rhs = small_lambda(sys, x, gamma, w, corr_inner(e1, CorrVector.basis(sys, (2,))))
print("concrete pair defect", np.linalg.norm(lhs - rhs, 2))
