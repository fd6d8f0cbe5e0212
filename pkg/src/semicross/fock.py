"""The correspondence E over C(X), its Fock space and creation operators.

E has basis vectors eps_s with <eps_s, eps_t> = delta_{s,t} and left action
phi(f) = diag(f o sigma_s). Fock vectors are kept in the normal form
sum_w eps_w f_w, where eps_w = eps_{s_k} (x) ... (x) eps_{s_1}; the balanced
relation eps_s g (x) eta = eps_s (x) phi(g) eta pushes every coefficient to
the right end, where it picks up the pullback by |w| = s_1 + ... + s_k.

Matrices are taken after localizing at a point x: the basis vector for the
word w is eps_w evaluated at x, so T_xi eps_w = sum_s g_s(sigma_|w| x) eps_(s,w).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from .dynsys import DynSystem
from .funcalg import FunctionElement, evaluate, sup_norm_bounds
from .reports import Report
from .repn import SymbolicElement, build_left_regular, spectral_norm, window_points
from .semigroup import Character, SemigroupElement, Window, add, enumerate_window

TOL = 1e-12
FOCK_CAP = 4096

Word = tuple  # of SemigroupElement, outermost letter first


def word_weight(word: Word, d: int) -> SemigroupElement:
    total = SemigroupElement.zero(d)
    for s in word:
        total = add(total, s)
    return total


class CorrVector:
    """xi = sum_s eps_s f_s."""

    __slots__ = ("sys", "terms")

    def __init__(self, sys: DynSystem, terms: Optional[dict] = None):
        self.sys = sys
        self.terms = {sys.element(s): f for s, f in (terms or {}).items() if not f.is_zero()}

    @classmethod
    def basis(cls, sys: DynSystem, s, f: Optional[FunctionElement] = None) -> "CorrVector":
        return cls(sys, {s: sys.one() if f is None else f})

    def coeff(self, s) -> FunctionElement:
        return self.terms.get(self.sys.element(s), self.sys.constant(0))

    def right(self, f: FunctionElement) -> "CorrVector":
        """xi . f"""
        return CorrVector(self.sys, {s: g * f for s, g in self.terms.items()})

    def __add__(self, other: "CorrVector") -> "CorrVector":
        terms = dict(self.terms)
        for s, g in other.terms.items():
            terms[s] = terms[s] + g if s in terms else g
        return CorrVector(self.sys, terms)

    def scale(self, c) -> "CorrVector":
        return CorrVector(self.sys, {s: f.scale(c) for s, f in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, CorrVector) and self.terms == other.terms

    def __repr__(self):
        return " + ".join(f"eps{list(s.exps)} {f!r}" for s, f in sorted(self.terms.items())) or "0"


def corr_inner(xi: CorrVector, eta: CorrVector) -> FunctionElement:
    """<xi, eta> = sum_s conj(xi_s) eta_s, conjugate linear in xi."""
    total = xi.sys.constant(0)
    for s in set(xi.terms) & set(eta.terms):
        total = total + xi.terms[s].conj() * eta.terms[s]
    return total


def left_action(f: FunctionElement, xi: CorrVector) -> CorrVector:
    """phi(f) xi: the s-th coefficient is multiplied by f o sigma_s."""
    sys = xi.sys
    return CorrVector(sys, {s: sys.pullback(f, s) * g for s, g in xi.terms.items()})


@dataclass
class FockVector:
    sys: DynSystem
    terms: dict  # Word -> FunctionElement
    truncated: bool = False

    @classmethod
    def vacuum(cls, sys: DynSystem, f: Optional[FunctionElement] = None) -> "FockVector":
        return cls(sys, {(): sys.one() if f is None else f})

    @classmethod
    def word(cls, sys: DynSystem, letters: Sequence, f: Optional[FunctionElement] = None) -> "FockVector":
        return cls(sys, {tuple(sys.element(s) for s in letters): sys.one() if f is None else f})

    def grade(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def __add__(self, other: "FockVector") -> "FockVector":
        terms = dict(self.terms)
        for w, g in other.terms.items():
            terms[w] = terms[w] + g if w in terms else g
        return FockVector(self.sys, {w: f for w, f in terms.items() if not f.is_zero()}, self.truncated or other.truncated)

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        zero = self.sys.constant(0)
        return all(self.terms.get(w, zero) == other.terms.get(w, zero) for w in keys)


def fock_left_action(f: FunctionElement, v: FockVector) -> FockVector:
    """phi_infinity(f) eps_w g = eps_w (f o sigma_|w|) g."""
    sys = v.sys
    return FockVector(sys, {w: sys.pullback(f, word_weight(w, sys.d)) * g for w, g in v.terms.items()}, v.truncated)


def creation(xi: CorrVector, v: FockVector, K: int) -> FockVector:
    """T_xi v = xi (x) v in normal form; terms above grade K are dropped and flagged."""
    sys = xi.sys
    out: dict = {}
    truncated = v.truncated
    for w, f in v.terms.items():
        if len(w) + 1 > K:
            truncated = True
            continue
        weight = word_weight(w, sys.d)
        for s, g in xi.terms.items():
            key = (s,) + w
            term = sys.pullback(g, weight) * f
            out[key] = out[key] + term if key in out else term
    return FockVector(sys, {w: f for w, f in out.items() if not f.is_zero()}, truncated)


# -- localized matrices ------------------------------------------------------------


def fock_basis(letters: Sequence[SemigroupElement], K: int) -> list[Word]:
    words: list[Word] = []
    for k in range(K + 1):
        words.extend(itertools.product(letters, repeat=k))
    if len(words) > FOCK_CAP:
        raise ValueError(f"{len(words)} Fock basis words exceed the cap {FOCK_CAP}")
    return words


@dataclass
class FockMatrix:
    data: np.ndarray
    labels: list
    truncated_columns: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def norm(self) -> float:
        return spectral_norm(self.data)


def _point_cache(sys: DynSystem, x):
    cache: dict = {}

    def at(weight: SemigroupElement):
        if weight not in cache:
            cache[weight] = sys.apply(weight, x)
        return cache[weight]

    return at


def creation_matrix(sys: DynSystem, x, xi: CorrVector, letters: Sequence, K: int) -> FockMatrix:
    words = fock_basis(letters, K)
    index = {w: i for i, w in enumerate(words)}
    missing = [s for s in xi.terms if s not in letters]
    if missing:
        raise ValueError(f"letter {missing[0]} of xi is outside the Fock letter window")
    at = _point_cache(sys, x)
    m = np.zeros((len(words), len(words)), dtype=complex)
    truncated = []
    for w, j in index.items():
        if len(w) == K:
            truncated.append(w)
            continue
        y = at(word_weight(w, sys.d))
        for s, g in xi.terms.items():
            m[index[(s,) + w], j] += evaluate(g, y)
    return FockMatrix(m, words, truncated, {"K": K})


def left_action_matrix(sys: DynSystem, x, f: FunctionElement, letters: Sequence, K: int) -> FockMatrix:
    words = fock_basis(letters, K)
    at = _point_cache(sys, x)
    diag = [evaluate(f, at(word_weight(w, sys.d))) for w in words]
    return FockMatrix(np.diag(np.array(diag, dtype=complex)), words, [], {"K": K})


Generator = Union[CorrVector, FunctionElement]


def fock_matrix(sys: DynSystem, x, generators: Sequence[Generator], letters: Sequence, K: int) -> FockMatrix:
    """The product of the listed generators (leftmost acts last) on the truncated Fock space."""
    words = fock_basis(letters, K)
    out = np.eye(len(words), dtype=complex)
    truncated: set = set()
    for g in generators:
        if isinstance(g, CorrVector):
            mat = creation_matrix(sys, x, g, letters, K)
            truncated.update(mat.truncated_columns)
        else:
            mat = left_action_matrix(sys, x, g, letters, K)
        out = out @ mat.data
    return FockMatrix(out, words, sorted(truncated, key=len), {"K": K, "truncation_sensitive": True})


def toeplitz_defects(sys: DynSystem, x, xi: CorrVector, eta: CorrVector, f: FunctionElement, letters: Sequence, K: int) -> dict:
    """Relation defects for the localized Fock representation on grades < K."""
    t_xi = creation_matrix(sys, x, xi, letters, K)
    t_eta = creation_matrix(sys, x, eta, letters, K)
    words = t_xi.labels
    inner_rows = [i for i, w in enumerate(words) if len(w) < K]
    grade0 = [i for i, w in enumerate(words) if len(w) == 0]
    lhs1 = t_xi.data.conj().T @ t_eta.data
    rhs1 = left_action_matrix(sys, x, corr_inner(xi, eta), letters, K).data
    d1 = spectral_norm((lhs1 - rhs1)[np.ix_(inner_rows, inner_rows)])
    right_mult = evaluate(corr_inner(xi, eta), x) * np.eye(len(words))
    right_all = spectral_norm((lhs1 - right_mult)[np.ix_(inner_rows, inner_rows)])
    right_g0 = spectral_norm((lhs1 - right_mult)[np.ix_(grade0, grade0)])
    lhs2 = left_action_matrix(sys, x, f, letters, K).data @ t_xi.data
    rhs2 = creation_matrix(sys, x, left_action(f, xi), letters, K).data
    d2 = spectral_norm(lhs2 - rhs2)
    return {"condition_1": d1, "condition_2": d2, "right_multiplication_grade0": right_g0, "right_multiplication_interior": right_all}


# -- the concrete pair (Lambda_{x,gamma}, lambda_{x,gamma}) on l2(S) --------------------


def Lambda(sys: DynSystem, x, gamma: Character, w: Window, xi: CorrVector, points=None) -> np.ndarray:
    """Lambda_{x,gamma}(eps_s f) xi_t = <gamma,s> f(sigma_t x) xi_{s+t}, i.e. pi(S_s) pi(f)."""
    return build_left_regular(sys, x, gamma, w, SymbolicElement(sys, dict(xi.terms)), points).data


def small_lambda(sys: DynSystem, x, gamma: Character, w: Window, f: FunctionElement, points=None) -> np.ndarray:
    return build_left_regular(sys, x, gamma, w, SymbolicElement.function(sys, f), points).data


def random_corr_vector(sys: DynSystem, rng: random.Random, letters: Sequence, terms: int = 2) -> CorrVector:
    chosen = rng.sample(list(letters), min(terms, len(letters)))
    while True:
        xi = CorrVector(sys, {s: sys.sample_function(rng) for s in chosen})
        if not xi.is_zero():
            return xi


def rep_condition_check(sys: DynSystem, x, gamma: Character, w: Window, samples: int = 20, seed: int = 0, letter_bound: int = 2, K: int = 3) -> Report:
    """Conditions (1) Lambda(xi)* Lambda(eta) = lambda(<xi,eta>) and (2) lambda(f) Lambda(xi) = Lambda(phi(f) xi).

    Both are evaluated on interior columns of the window for the concrete
    pair built from the left regular representation, and on grades < K of the
    localized Fock representation.
    """
    rng = random.Random(seed)
    report = Report("correspondence")
    letters = enumerate_window(Window((letter_bound,) * sys.d))
    pts = window_points(sys, x, w)
    elems = enumerate_window(w)
    worst1 = worst2 = f1 = f2 = 0.0
    wit1 = None
    for _ in range(samples):
        xi = random_corr_vector(sys, rng, letters)
        eta = random_corr_vector(sys, rng, letters)
        f = sys.sample_function(rng)
        support = list(xi.terms) + list(eta.terms)
        inner = [i for i, u in enumerate(elems) if u in set(w.interior(support))]
        L_xi = Lambda(sys, x, gamma, w, xi, pts)
        L_eta = Lambda(sys, x, gamma, w, eta, pts)
        lhs = L_xi.conj().T @ L_eta
        rhs = small_lambda(sys, x, gamma, w, corr_inner(xi, eta), pts)
        d1 = spectral_norm((lhs - rhs)[:, inner])
        if d1 > worst1:
            worst1, wit1 = d1, {"xi": repr(xi), "eta": repr(eta)}
        lhs2 = small_lambda(sys, x, gamma, w, f, pts) @ L_xi
        rhs2 = Lambda(sys, x, gamma, w, left_action(f, xi), pts)
        worst2 = max(worst2, spectral_norm((lhs2 - rhs2)[:, inner]))
        fd = toeplitz_defects(sys, x, xi, eta, f, letters, K)
        f1, f2 = max(f1, fd["condition_1"]), max(f2, fd["condition_2"])
    report.bound("condition-1", "Lambda(xi)* Lambda(eta) = lambda(<xi|eta>)", worst1, TOL, witness=wit1,
                 detail="left regular pair on l2(S), interior columns")
    report.bound("condition-2", "lambda(f) Lambda(xi) = Lambda(phi(f) xi)", worst2, TOL, detail="interior columns")
    report.bound("fock-condition-1", "T_xi* T_eta = phi_inf(<xi|eta>)", f1, TOL, detail=f"localized Fock space, grades < {K}")
    report.bound("fock-condition-2", "phi_inf(f) T_xi = T_(phi(f) xi)", f2, TOL, detail=f"localized Fock space, grades <= {K}")

    delta = 0.0
    for s, t in itertools.product(letters, repeat=2):
        val = corr_inner(CorrVector.basis(sys, s), CorrVector.basis(sys, t))
        target = sys.one() if s == t else sys.constant(0)
        delta = max(delta, sup_norm_bounds(val - target)[1])
    report.add("orthonormal", "<eps_s, eps_t> = delta_st 1", delta == 0, delta, 0.0)
    return report


__all__ = [
    "CorrVector", "FockMatrix", "FockVector", "Lambda", "corr_inner", "creation", "creation_matrix",
    "fock_basis", "fock_left_action", "fock_matrix", "left_action", "left_action_matrix", "random_corr_vector",
    "rep_condition_check", "small_lambda", "toeplitz_defects", "word_weight",
]
