"""The covariance algebra A0 and truncated matrix models of its representations.

Elements of A0 are kept in the normal form F = sum_s S_s f_s. Matrices act on
l2 of a window (left regular), l2 of an orbit (orbit representations), or the
class decomposition H0 + H1 of the window.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .cocycle import OrbitCocycle, left_regular_orbit_cocycle, twist
from .dynsys import DynSystem
from .funcalg import FunctionElement, evaluate, sup_norm_bounds
from .semigroup import (
    Character,
    SemigroupElement,
    Window,
    add,
    dft_characters,
    enumerate_window,
    window_index,
)

MATRIX_CAP = 4096
TOL = 1e-12

GaugeTwist = Character


class WindowTooSmall(ValueError):
    pass


class CoverageGap(ValueError):
    pass


class ContractionViolation(ValueError):
    pass


class UnreachedOrbitPoint(ValueError):
    pass


class DftSupportError(ValueError):
    pass


class SymbolicElement:
    """F = sum_s S_s f_s with finitely many nonzero coefficients."""

    __slots__ = ("sys", "terms")

    def __init__(self, sys: DynSystem, terms: Optional[dict] = None):
        self.sys = sys
        self.terms: dict[SemigroupElement, FunctionElement] = {}
        for s, f in (terms or {}).items():
            s = sys.element(s)
            if not f.is_zero():
                self.terms[s] = f

    @classmethod
    def mono(cls, sys: DynSystem, s, f: Optional[FunctionElement] = None) -> "SymbolicElement":
        """S_s f (f defaults to the constant 1)."""
        return cls(sys, {s: sys.one() if f is None else f})

    @classmethod
    def function(cls, sys: DynSystem, f: FunctionElement) -> "SymbolicElement":
        return cls.mono(sys, SemigroupElement.zero(sys.d), f)

    @property
    def support(self) -> list[SemigroupElement]:
        return sorted(self.terms)

    def coeff(self, s) -> FunctionElement:
        return self.terms.get(self.sys.element(s), self.sys.constant(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "SymbolicElement") -> "SymbolicElement":
        terms = dict(self.terms)
        for s, g in other.terms.items():
            terms[s] = terms[s] + g if s in terms else g
        return SymbolicElement(self.sys, terms)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SymbolicElement":
        return SymbolicElement(self.sys, {s: f.scale(c) for s, f in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SymbolicElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        return isinstance(other, SymbolicElement) and self.terms == other.terms

    def __repr__(self):
        inner = " + ".join(f"S{list(s.exps)} {f!r}" for s, f in sorted(self.terms.items()))
        return inner or "0"


def multiply(F: SymbolicElement, G: SymbolicElement) -> SymbolicElement:
    """Normal form of FG using (S_s f)(S_t g) = S_{s+t} (f o sigma_t) g."""
    sys = F.sys
    out: dict = {}
    for s, f in F.terms.items():
        for t, g in G.terms.items():
            term = sys.pullback(f, t) * g
            u = add(s, t)
            out[u] = out[u] + term if u in out else term
    return SymbolicElement(sys, out)


def adjoint_star_product(F: SymbolicElement) -> FunctionElement:
    """The symbolic value of P0(F*F), namely sum_s |f_s|^2."""
    total = F.sys.constant(0)
    for f in F.terms.values():
        total = total + f.conj() * f
    return total


def gauge(gamma: Character, F: SymbolicElement) -> SymbolicElement:
    """tau_gamma: S_s f -> <gamma, s> S_s f."""
    return SymbolicElement(F.sys, {s: f.scale(gamma(s)) for s, f in F.terms.items()})


def project(F: SymbolicElement, s, method: str = "symbolic", w: Optional[Window] = None) -> SymbolicElement:
    """P_s(F). With ``method='dft'`` the Haar integral is replaced by the average
    over :func:`dft_characters` of ``w``; it must agree with the coefficient read-off."""
    s = F.sys.element(s)
    if method == "symbolic":
        return SymbolicElement(F.sys, {s: F.terms[s]} if s in F.terms else {})
    if method != "dft":
        raise ValueError(f"unknown projection method {method!r}")
    if w is None:
        raise ValueError("dft projection needs a window")
    outside = [t for t in F.support if t not in w]
    if outside or s not in w:
        raise DftSupportError(f"support element {outside[0] if outside else s} lies outside the window {list(w.bounds)}")
    grid = dft_characters(w)
    terms = {}
    for t, f in F.terms.items():
        weight = sum(gamma(t) * (-gamma)(s) for gamma in grid) / len(grid)
        if weight != 0:
            terms[t] = f.scale(weight)
    return SymbolicElement(F.sys, terms)


def coeff_distance(F: SymbolicElement, G: SymbolicElement) -> float:
    """max_s of an upper bound for ||f_s - g_s||_inf."""
    keys = set(F.terms) | set(G.terms)
    return max((sup_norm_bounds(F.coeff(s) - G.coeff(s))[1] for s in keys), default=0.0)


# -- matrices -----------------------------------------------------------------


@dataclass
class OperatorMatrix:
    data: np.ndarray
    labels: list
    provenance: str = ""
    notes: dict = field(default_factory=dict)

    def __post_init__(self):
        n = len(self.labels)
        if self.data.shape[0] != n:
            raise ValueError("matrix rows do not match the basis")

    @property
    def shape(self):
        return self.data.shape

    def norm(self) -> float:
        return spectral_norm(self.data)

    @property
    def H(self) -> np.ndarray:
        return self.data.conj().T

    def index(self, label) -> int:
        return self.labels.index(label)


def spectral_norm(a: np.ndarray) -> float:
    if a.size == 0:
        return 0.0
    return float(np.linalg.norm(a, 2))


def _check_dim(n: int) -> None:
    if n > MATRIX_CAP:
        raise WindowTooSmall(f"matrix dimension {n} exceeds cap {MATRIX_CAP}")


def window_points(sys: DynSystem, x, w: Window) -> dict:
    """sigma_s(x) for every s in the window, by one generator step per element."""
    pts: dict = {}
    for s in enumerate_window(w):
        i = next((i for i, e in enumerate(s.exps) if e > 0), None)
        if i is None:
            pts[s] = x
        else:
            prev = list(s.exps)
            prev[i] -= 1
            pts[s] = sys.apply_gen(i, pts[SemigroupElement(tuple(prev))])
    if w.cyclic:
        for s, p in pts.items():
            for i, b in enumerate(w.bounds):
                if sys.apply(SemigroupElement.unit(w.d, i, b + 1), p) != p:
                    raise WindowTooSmall(
                        f"torus window {list(w.bounds)} does not match the period of generator {i} at {p}"
                    )
    return pts


def torus_window(sys: DynSystem, x, n_min: int = 1) -> Window:
    """The smallest torus window with every side >= n_min whose periods match the orbit of x."""
    orbit = sys.orbit(x)
    if not orbit.fully_recurrent():
        raise ValueError(f"orbit of {x} is not fully recurrent; no torus window")
    bounds = []
    for p in orbit.periods():
        m = max(-(-(n_min + 1) // p) * p, 2)
        bounds.append(m - 1)
    return Window(tuple(bounds), cyclic=True)


def build_left_regular(sys: DynSystem, x, gamma: Character, w: Window, F: SymbolicElement, points: Optional[dict] = None) -> OperatorMatrix:
    """pi_{x,gamma}(F) on l2(w): S_t f sends xi_u to <gamma,t> f(sigma_u x) xi_{t+u}.

    Translates that leave a box window are dropped (boundary truncation);
    torus windows wrap around.
    """
    elems = enumerate_window(w)
    _check_dim(len(elems))
    too_big = [t for t in F.support if t not in w]
    if too_big:
        raise WindowTooSmall(f"support element {too_big[0]} does not fit in window {list(w.bounds)}")
    pts = points if points is not None else window_points(sys, x, w)
    idx = window_index(w)
    m = np.zeros((len(elems), len(elems)), dtype=complex)
    for t, f in F.terms.items():
        phase = gamma(t)
        cache: dict = {}
        for u in elems:
            v = w.translate(u, t)
            if v is None:
                continue
            p = pts[u]
            if p not in cache:
                cache[p] = evaluate(f, p)
            m[idx[v], idx[u]] += phase * cache[p]
    return OperatorMatrix(m, elems, f"left-regular x={x}", {"window": list(w.bounds), "cyclic": w.cyclic})


def build_left_regular_shift(sys: DynSystem, gamma: Character, w: Window, t) -> OperatorMatrix:
    """pi_{x,gamma}(S_t), which does not depend on x."""
    elems = enumerate_window(w)
    t = sys.element(t)
    idx = window_index(w)
    m = np.zeros((len(elems), len(elems)), dtype=complex)
    for u in elems:
        v = w.translate(u, t)
        if v is not None:
            m[idx[v], idx[u]] = gamma(t)
    return OperatorMatrix(m, elems, "left-regular shift")


def build_orbit_rep(sys: DynSystem, mu: OrbitCocycle, F: SymbolicElement, gamma: Optional[Character] = None) -> OperatorMatrix:
    """rho_{x,mu}(F) on l2(S(x)): S_t f sends xi_y to f(y) mu(t,y) xi_{sigma_t y}."""
    orbit = mu.orbit
    if not orbit.complete:
        raise CoverageGap("orbit representation needs a complete orbit")
    if not mu.covers(F.support):
        bad = next(t for t in F.support if t not in mu.window)
        raise CoverageGap(f"orbit cocycle not tabulated at t={bad}")
    if gamma is not None:
        mu = twist(gamma, mu)
    n = len(orbit)
    _check_dim(n)
    m = np.zeros((n, n), dtype=complex)
    for t, f in F.terms.items():
        shift = np.zeros((n, n), dtype=complex)
        for j, y in enumerate(orbit.points):
            shift[orbit.walk(j, t), j] = mu(t, j)
        norm = spectral_norm(shift)
        if norm > 1 + TOL:
            raise ContractionViolation(f"||rho(S_{list(t.exps)})|| = {norm:.6g} > 1; the orbit cocycle is invalid")
        m += shift @ np.diag([evaluate(f, y) for y in orbit.points])
    return OperatorMatrix(m, list(orbit.points), f"orbit x={mu.x}", {"cocycle": mu.provenance})


# -- H0, H1 and the intertwiner -----------------------------------------------------


def window_classes(sys: DynSystem, x, w: Window, points: Optional[dict] = None) -> dict:
    """Orbit point -> window elements in its class, in first-appearance order."""
    pts = points if points is not None else window_points(sys, x, w)
    classes: dict = {}
    for s in enumerate_window(w):
        classes.setdefault(pts[s], []).append(s)
    return classes


def h0_projection(sys: DynSystem, x, w: Window) -> tuple[OperatorMatrix, OperatorMatrix]:
    """(Q, Q_perp): Q projects onto within-class mean-zero vectors, Q_perp averages each class."""
    elems = enumerate_window(w)
    idx = window_index(w)
    qp = np.zeros((len(elems), len(elems)))
    for members in window_classes(sys, x, w).values():
        ids = [idx[s] for s in members]
        qp[np.ix_(ids, ids)] = 1.0 / len(ids)
    q = np.eye(len(elems)) - qp
    return OperatorMatrix(q.astype(complex), elems, "Q"), OperatorMatrix(qp.astype(complex), elems, "Q_perp")


def intertwiner(sys: DynSystem, x, w: Window, orbit=None) -> OperatorMatrix:
    """W xi_y = normalized class average of window elements landing on y."""
    orbit = orbit or sys.orbit(x)
    classes = window_classes(sys, x, w)
    idx = window_index(w)
    missing = [y for y in orbit.points if y not in classes]
    if missing:
        raise UnreachedOrbitPoint(f"orbit point {missing[0]} is not reached inside window {list(w.bounds)}")
    m = np.zeros((len(idx), len(orbit)), dtype=complex)
    for j, y in enumerate(orbit.points):
        members = classes[y]
        for s in members:
            m[idx[s], j] = 1 / np.sqrt(len(members))
    return OperatorMatrix(m, enumerate_window(w), "W", {"orbit": [str(y) for y in orbit.points]})


def interior_elements(w: Window, support: Iterable[SemigroupElement]) -> list[SemigroupElement]:
    return w.interior(support)


def h0_invariance_defect(sys: DynSystem, x, gamma: Character, w: Window, F: SymbolicElement) -> tuple[float, list]:
    """||Q_perp pi(F) v|| over unit vectors v in H0 supported where u + supp(F) stays in w.

    Returns the defect and the boundary elements excluded from the test space.
    """
    pts = window_points(sys, x, w)
    pi = build_left_regular(sys, x, gamma, w, F, pts).data
    _, qp = h0_projection(sys, x, w)
    inner = set(interior_elements(w, F.support))
    idx = window_index(w)
    cols = []
    for members in window_classes(sys, x, w, pts).values():
        ids = [idx[s] for s in members if s in inner]
        for k in ids[1:]:
            v = np.zeros(len(idx))
            v[ids[0]], v[k] = 1.0, -1.0
            cols.append(v)
    excluded = [s for s in enumerate_window(w) if s not in inner]
    if not cols:
        return 0.0, excluded
    basis, _ = np.linalg.qr(np.array(cols).T)
    return spectral_norm(qp.data @ pi @ basis), excluded


def pi_one(pi: OperatorMatrix, qperp: OperatorMatrix) -> np.ndarray:
    """The compression Q_perp pi Q_perp, i.e. pi acting on H1 = ran Q_perp."""
    return qperp.data @ pi.data @ qperp.data


def intertwining_defect(sys: DynSystem, x, gamma: Character, w: Window, F: SymbolicElement, mu: Optional[OrbitCocycle] = None) -> float:
    """||W* pi1(F) W - rho_{x, gamma mu}(F)|| with mu the left-regular orbit cocycle."""
    orbit = sys.orbit(x)
    if mu is None:
        mu = left_regular_orbit_cocycle(sys, x, Window(w.bounds), "exact")
    W = intertwiner(sys, x, w, orbit)
    _, qp = h0_projection(sys, x, w)
    pi = build_left_regular(sys, x, gamma, w, F)
    lhs = W.H @ pi_one(pi, qp) @ W.data
    rhs = build_orbit_rep(sys, mu, F, gamma).data
    return spectral_norm(lhs - rhs)


# -- gauge averaging at matrix level --------------------------------------------------


def dft_matrix_projection(sys: DynSystem, x, w: Window, F: SymbolicElement, s) -> float:
    """|| avg_gamma <-gamma, s> pi_{x,gamma}(F) - pi_{x,1}(P_s F) || over the grid of w."""
    s = sys.element(s)
    pts = window_points(sys, x, w)
    grid = dft_characters(w)
    avg = sum((-g)(s) * build_left_regular(sys, x, g, w, F, pts).data for g in grid) / len(grid)
    trivial = Character.trivial(sys.d)
    target = build_left_regular(sys, x, trivial, w, project(F, s), pts).data
    return spectral_norm(avg - target)


# -- norm estimation -------------------------------------------------------------------


@dataclass
class NormEstimate:
    lower_bound: float
    table: list
    curve: list
    orbit_table: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "lower_bound": self.lower_bound,
            "label": "certified lower bound for the left regular norm",
            "per_sample": self.table,
            "window_growth": self.curve,
            "orbit_representation_bounds": self.orbit_table,
        }


def default_characters(d: int, count: int = 16) -> list[Character]:
    side = max(1, round(count ** (1 / d)))
    return dft_characters(Window.cube(d, side - 1)) if side > 1 else [Character.trivial(d)]


def estimate_norm(
    F: SymbolicElement,
    points: Sequence,
    characters: Sequence[Character],
    ladder: Sequence[int],
    orbit_cocycles: Optional[dict] = None,
) -> NormEstimate:
    """Max spectral norm of pi_{x,gamma}(F) over sampled (x, gamma) and a ladder of box windows.

    The result is a lower bound for the left regular norm, never the norm.
    ``orbit_cocycles`` maps points to orbit cocycles; where given, the
    twisted orbit representation norms are tabulated alongside.
    """
    sys = F.sys
    table, curve = [], []
    best = 0.0
    span = [max((t.exps[i] for t in F.support), default=0) for i in range(sys.d)]
    for n in sorted(set(ladder)):
        w = Window(tuple(max(n, b, 1) for b in span))
        level = 0.0
        for x in points:
            pts = window_points(sys, x, w)
            for gamma in characters:
                v = spectral_norm(build_left_regular(sys, x, gamma, w, F, pts).data)
                table.append({"x": str(x), "gamma": [str(a) for a in gamma.angles], "window": list(w.bounds), "norm": v})
                level = max(level, v)
        best = max(best, level)
        curve.append({"window": list(w.bounds), "max_norm": level, "running_bound": best})
    orbit_table = []
    for x, mu in (orbit_cocycles or {}).items():
        for gamma in characters:
            try:
                v = build_orbit_rep(sys, mu, F, gamma).norm()
            except (CoverageGap, ContractionViolation) as exc:
                orbit_table.append({"x": str(x), "gamma": [str(a) for a in gamma.angles], "skipped": str(exc)})
                continue
            orbit_table.append({"x": str(x), "gamma": [str(a) for a in gamma.angles], "norm": v})
    return NormEstimate(best, table, curve, orbit_table)


def random_element(sys: DynSystem, rng, w: Window, terms: int = 3) -> SymbolicElement:
    """A random nonzero element supported in w."""
    elems = enumerate_window(w)
    chosen = rng.sample(elems, min(terms, len(elems)))
    while True:
        F = SymbolicElement(sys, {s: sys.sample_function(rng) for s in chosen})
        if not F.is_zero():
            return F


__all__ = [
    "ContractionViolation", "CoverageGap", "DftSupportError", "GaugeTwist", "NormEstimate", "OperatorMatrix",
    "SymbolicElement", "UnreachedOrbitPoint", "WindowTooSmall", "adjoint_star_product", "build_left_regular",
    "build_left_regular_shift", "build_orbit_rep", "coeff_distance", "default_characters", "dft_matrix_projection",
    "estimate_norm", "gauge", "h0_invariance_defect", "h0_projection", "interior_elements", "intertwiner",
    "intertwining_defect", "multiply", "pi_one", "project", "random_element", "spectral_norm", "torus_window",
    "window_classes", "window_points",
]
