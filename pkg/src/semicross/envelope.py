"""Finite-depth approximants of the natural extension and the crossed product.

A backward path of depth n over x is a top point z with sigma_n(z) = x. Its
coordinates are x_h = sigma_{n-h}(z) for every h <= n, so coordinate 0 is
the anchor, positive coordinates are preimages and negative ones forward
images. sigma~_g keeps the top and adds g to the depth.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from .dynsys import DynSystem, UnsupportedFiber
from .funcalg import FunctionElement, evaluate
from .reports import Report
from .repn import SymbolicElement, build_left_regular, spectral_norm, window_points
from .semigroup import Character, GroupElement, SemigroupElement, Window, enumerate_window

PATH_CAP = 4096
TOL = 1e-12


class InsufficientDepth(ValueError):
    def __init__(self, required, available):
        super().__init__(f"needs depth {list(required)}, path has depth {list(available)}")
        self.required = tuple(required)
        self.available = tuple(available)


class PathCapExceeded(ValueError):
    pass


def _vec(g, d: int) -> tuple[int, ...]:
    if isinstance(g, int):
        return (g,) * d
    if hasattr(g, "exps"):
        return tuple(g.exps)
    return tuple(g)


@dataclass(frozen=True, order=True)
class BackwardPath:
    depth: tuple[int, ...]
    top: object
    anchor: object = field(compare=False)

    def coordinate(self, sys: DynSystem, h) -> object:
        h = _vec(h, sys.d)
        rest = tuple(n - a for n, a in zip(self.depth, h))
        if any(r < 0 for r in rest):
            raise InsufficientDepth(h, self.depth)
        return sys.apply(SemigroupElement(rest), self.top)

    def __str__(self):
        return f"path(depth={list(self.depth)}, top={self.top}, anchor={self.anchor})"


def make_path(sys: DynSystem, top, depth) -> BackwardPath:
    depth = _vec(depth, sys.d)
    return BackwardPath(depth, top, sys.apply(SemigroupElement(depth), top))


def enumerate_paths(sys: DynSystem, x, depth, cap: int = PATH_CAP) -> list[BackwardPath]:
    depth = _vec(depth, sys.d)
    try:
        count = sys.total_degree(SemigroupElement(depth))
    except UnsupportedFiber:
        count = None
    if count is not None and count > cap:
        raise PathCapExceeded(f"{count} paths of depth {list(depth)} exceed the cap {cap}")
    tops = sys.fiber(SemigroupElement(depth), x)
    if len(tops) > cap:
        raise PathCapExceeded(f"{len(tops)} paths exceed the cap {cap}")
    return [BackwardPath(depth, z, x) for z in tops]


def tilde_sigma(sys: DynSystem, g, path: BackwardPath) -> BackwardPath:
    """sigma~_g: same top, depth + g. Backward moves need spare depth."""
    g = _vec(g, sys.d)
    depth = tuple(n + a for n, a in zip(path.depth, g))
    if any(n < 0 for n in depth):
        raise InsufficientDepth(tuple(-a for a in g), path.depth)
    return make_path(sys, path.top, depth)


def projection(path: BackwardPath):
    """p(path) = coordinate 0."""
    return path.anchor


def check_path(sys: DynSystem, path: BackwardPath) -> bool:
    """x_h = sigma_u(x_g) for neighbouring coordinates g = h + e_i inside the depth box."""
    d = sys.d
    coords = {}
    for h in itertools.product(*(range(n + 1) for n in path.depth)):
        coords[h] = path.coordinate(sys, h)
    if coords[(0,) * d] != path.anchor:
        return False
    for h, xh in coords.items():
        for i in range(d):
            g = list(h)
            g[i] += 1
            g = tuple(g)
            if g in coords and sys.apply_gen(i, coords[g]) != xh:
                return False
    return True


def check_extension_diagram(sys: DynSystem, points: Sequence, depth, ts: Sequence, path_samples: int = 100, rng=None) -> Report:
    """p o sigma~_t = sigma_t o p on sampled paths, and sigma~_t bijective between depth-matched path sets."""
    report = Report("extension")
    depth = _vec(depth, sys.d)
    violations, checked, broken = 0, 0, 0
    pool = [p for x in points for p in enumerate_paths(sys, x, depth)]
    if rng is not None and len(pool) > path_samples:
        pool = rng.sample(pool, path_samples)
    else:
        pool = pool[:path_samples]
    for path in pool:
        for t in ts:
            moved = tilde_sigma(sys, t, path)
            if not check_path(sys, moved):
                broken += 1
            if projection(moved) != sys.apply(t, projection(path)):
                violations += 1
            checked += 1
    report.add("diagram", "p o sigma~_t = sigma_t o p", violations == 0, violations, 0, detail=f"{checked} (path, t) pairs")
    report.add("compatibility", "x_h = sigma_u(x_g)", broken == 0, broken, 0)

    bij_fail = []
    for x in points:
        for t in ts:
            t = sys.element(t)
            y = sys.apply(t, x)
            sources = [p for z in sys.fiber(t, y) for p in enumerate_paths(sys, z, depth)]
            images = [tilde_sigma(sys, t, p) for p in sources]
            target = enumerate_paths(sys, y, tuple(a + b for a, b in zip(depth, t.exps)))
            if len(set(images)) != len(images) or set(images) != set(target):
                bij_fail.append({"x": str(x), "t": t})
    report.add("bijection", "sigma~_t is a bijection of path sets", not bij_fail, len(bij_fail), 0, witness=bij_fail[:1] or None)
    report.data["paths_sampled"] = len(pool)
    return report


@dataclass(frozen=True)
class DepthTaggedFunction:
    """f read at coordinate ``offset`` of a path, i.e. f o p o sigma~_{-offset}."""

    f: FunctionElement
    offset: tuple[int, ...]

    def alpha(self, g) -> "DepthTaggedFunction":
        """alpha~_g(ftilde) = ftilde o sigma~_g, which moves the tag by -g."""
        g = _vec(g, len(self.offset))
        return DepthTaggedFunction(self.f, tuple(o - a for o, a in zip(self.offset, g)))

    def alpha_inv(self, g) -> "DepthTaggedFunction":
        g = _vec(g, len(self.offset))
        return DepthTaggedFunction(self.f, tuple(o + a for o, a in zip(self.offset, g)))


def lift(f: FunctionElement, g=0, d: int = 1) -> DepthTaggedFunction:
    """j(f) = f o p when g = 0."""
    return DepthTaggedFunction(f, _vec(g, d))


def evaluate_tagged(sys: DynSystem, dtf: DepthTaggedFunction, path: BackwardPath) -> complex:
    return evaluate(dtf.f, path.coordinate(sys, dtf.offset))


# -- crossed-product representations ---------------------------------------------------

Term = tuple  # (GroupElement-like, FunctionElement | DepthTaggedFunction)


@dataclass
class CrossedMatrix:
    data: np.ndarray
    labels: list
    starved: list
    notes: dict = field(default_factory=dict)

    def norm(self) -> float:
        return spectral_norm(self.data)


def _as_tagged(f, d: int) -> DepthTaggedFunction:
    return f if isinstance(f, DepthTaggedFunction) else lift(f, 0, d)


def crossed_basis(sys: DynSystem, x, radius: int, depth: int) -> list[tuple[tuple[int, ...], object]]:
    """Labels (h, z): the path sigma~_h of the depth-D path with top z over x, h in [-M..M]^d."""
    if depth < radius:
        raise InsufficientDepth((radius,) * sys.d, (depth,) * sys.d)
    tops = [p.top for p in enumerate_paths(sys, x, depth)]
    box = list(itertools.product(range(-radius, radius + 1), repeat=sys.d))
    if len(box) * len(tops) > PATH_CAP:
        raise PathCapExceeded(f"{len(box) * len(tops)} basis paths exceed the cap {PATH_CAP}")
    return [(h, z) for z in tops for h in box]


def build_crossed_rep(sys: DynSystem, x, gamma: Character, radius: int, depth: int, terms: Sequence[Term]) -> CrossedMatrix:
    """pi~_{x^,gamma}(sum_g U_g ftilde_g) on the paths sigma~_h(x~), |h_i| <= M, x~ over x at depth D.

    U_g sends (h, z) to (h+g, z); columns whose image leaves the box are left
    zero and listed as starved.
    """
    d = sys.d
    labels = crossed_basis(sys, x, radius, depth)
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    m = np.zeros((n, n), dtype=complex)
    starved = set()
    for g, f in terms:
        g = _vec(g, d)
        dtf = _as_tagged(f, d)
        phase = gamma(g)
        for (h, z), j in index.items():
            path = make_path(sys, z, tuple(depth + a for a in h))
            target = (tuple(a + b for a, b in zip(h, g)), z)
            if target not in index:
                starved.add((h, z))
                continue
            m[index[target], j] += phase * evaluate_tagged(sys, dtf, path)
    return CrossedMatrix(m, labels, sorted(starved, key=lambda lab: (str(lab[1]), lab[0])), {"radius": radius, "depth": depth})


def build_closed_crossed_rep(sys: DynSystem, x, gamma: Character, terms: Sequence[Term]) -> CrossedMatrix:
    """pi~ on a closed set of periodic threads.

    Requires every generator to permute the orbit of x; each orbit point then
    carries exactly one thread inside the orbit and sigma~_g permutes them.
    Tagged functions are read at coordinate offset along that thread.
    """
    orbit = sys.orbit(x)
    if not orbit.fully_recurrent():
        raise ValueError(f"orbit of {x} is not closed under backward threads")
    pts = orbit.points
    n = len(pts)
    inverse = [[0] * sys.d for _ in range(n)]
    for j in range(n):
        for i in range(sys.d):
            inverse[orbit.edges[j][i]][i] = j

    def move(j: int, g) -> int:
        for i, a in enumerate(g):
            for _ in range(abs(a)):
                j = orbit.edges[j][i] if a > 0 else inverse[j][i]
        return j

    m = np.zeros((n, n), dtype=complex)
    for g, f in terms:
        g = _vec(g, sys.d)
        dtf = _as_tagged(f, sys.d)
        back = tuple(-o for o in dtf.offset)
        for j in range(n):
            m[move(j, g), j] += gamma(g) * evaluate(dtf.f, pts[move(j, back)])
    return CrossedMatrix(m, list(pts), [], {"closed": True})


def tilde_element(F: SymbolicElement) -> list[Term]:
    """F = sum S_s f_s  ->  F~ = sum U_s j(f_s)."""
    return [(s.exps, f) for s, f in sorted(F.terms.items())]


# -- dilation and Shilov reports ------------------------------------------------------------


def compression_defect(sys: DynSystem, x, gamma: Character, radius: int, depth: int, t) -> float:
    """Max entry of P pi~(U_t) P - emb(pi(S_t)) over the embedded window s -> (s, z_ref)."""
    t = sys.element(t)
    big = build_crossed_rep(sys, x, gamma, radius, depth, [(t.exps, sys.one())])
    z_ref = big.labels[0][1]
    w = Window((radius,) * sys.d)
    elems = enumerate_window(w)
    index = {lab: i for i, lab in enumerate(big.labels)}
    rows = [index[(s.exps, z_ref)] for s in elems]
    compressed = big.data[np.ix_(rows, rows)]
    small = build_left_regular(sys, x, gamma, w, SymbolicElement.mono(sys, t)).data
    return float(np.max(np.abs(compressed - small))) if compressed.size else 0.0


def norm_gap(sys: DynSystem, x, gamma: Character, F: SymbolicElement, radius: int, depth: int) -> dict:
    """|| pi~(F~) || on the (radius, depth) truncation against || pi_{x,gamma}(F) || on {0..2 radius}^d."""
    crossed = build_crossed_rep(sys, x, gamma, radius, depth, tilde_element(F)).norm()
    w = Window((2 * radius,) * sys.d)
    left = build_left_regular(sys, x, gamma, w, F, window_points(sys, x, w)).data
    left_norm = spectral_norm(left)
    return {"radius": radius, "depth": depth, "crossed": crossed, "left_regular": left_norm, "gap": abs(crossed - left_norm)}


def closed_norm_gap(sys: DynSystem, x, gamma: Character, F: SymbolicElement) -> dict:
    """Norms on a closed periodic-thread set against a torus truncation of pi_{x,gamma}."""
    from .repn import torus_window

    crossed = build_closed_crossed_rep(sys, x, gamma, tilde_element(F)).norm()
    span = max((max(s.exps) for s in F.support), default=1)
    w = torus_window(sys, x, max(span, 1))
    left = spectral_norm(build_left_regular(sys, x, gamma, w, F).data)
    return {"crossed": crossed, "left_regular_torus": left, "gap": abs(crossed - left), "torus": list(w.bounds)}


def dilation_check(sys: DynSystem, x, gamma: Character, F: SymbolicElement, radius: int = 4, depth: int = 4) -> Report:
    report = Report("dilation")
    worst = 0.0
    for t in F.support or [SemigroupElement.zero(sys.d)]:
        if all(e <= radius for e in t.exps):
            worst = max(worst, compression_defect(sys, x, gamma, radius, depth, t))
    report.bound("compression", "compression of pi~(U_t) equals pi(S_t)", worst, TOL)
    first = norm_gap(sys, x, gamma, F, radius, depth)
    second = norm_gap(sys, x, gamma, F, 2 * radius, 2 * depth)
    report.data["norm_trend"] = [first, second]
    report.add(
        "norm-trend",
        "|| pi~(F~) || = || pi(F) ||",
        second["gap"] <= first["gap"] + 1e-10,
        second["gap"],
        first["gap"],
        detail="gap after one window/depth doubling vs before",
    )
    return report


def shilov_report(sys: DynSystem, x, gamma: Character, w: Window, Fs: Sequence[SymbolicElement], radius: int = 4, depth: int = 4) -> Report:
    from .repn import h0_invariance_defect, h0_projection

    report = Report("shilov")
    inv = max((h0_invariance_defect(sys, x, gamma, w, F)[0] for F in Fs), default=0.0)
    report.bound("h0-invariance", "H0 invariant under pi(F)", inv, 1e-10)
    comp = 0.0
    for F in Fs:
        for t in F.support:
            if all(e <= radius for e in t.exps):
                comp = max(comp, compression_defect(sys, x, gamma, radius, depth, t))
    report.bound("compression", "pi is a corner of pi~", comp, 1e-10)
    q, _ = h0_projection(sys, x, w)
    dim_h0 = int(round(np.trace(q.data).real))
    orbit = sys.orbit(x)
    reached = len({p for p in window_points(sys, x, w).values()})
    size = w.size
    report.data.update({"dim_H0": dim_h0, "dim_H1": size - dim_h0, "orbit": len(orbit), "window": size, "reached": reached})
    if orbit.complete and reached == len(orbit):
        report.add("dimensions", "dim H0 + |orbit| = |window|", dim_h0 + len(orbit) == size, dim_h0 + len(orbit), size)
    else:
        report.notes.append("dimension identity skipped: some orbit points are not reached inside the window")
    return report


__all__ = [
    "BackwardPath", "CrossedMatrix", "DepthTaggedFunction", "InsufficientDepth", "PathCapExceeded",
    "build_closed_crossed_rep", "build_crossed_rep", "check_extension_diagram", "check_path", "closed_norm_gap",
    "compression_defect", "crossed_basis", "dilation_check", "enumerate_paths", "evaluate_tagged", "lift",
    "make_path", "norm_gap", "projection", "shilov_report", "tilde_element", "tilde_sigma",
]
