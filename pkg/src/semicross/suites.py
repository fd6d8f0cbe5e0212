"""Named check suites shared by the command line and the acceptance tests."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from . import cocycle as co
from . import envelope as env
from . import fock
from . import repn
from .dynsys import DynSystem, UnsupportedFiber
from .funcalg import evaluate
from .reports import Report
from .semigroup import Character, SemigroupElement, Window, dft_characters, enumerate_window, window_index


@dataclass
class SuiteConfig:
    window: Window
    depth: int = 4
    char_grid: int = 16
    n_points: int = 8
    samples: int = 20
    seed: int = 0
    tol: float = 1e-10
    point: object = None
    elements: list = field(default_factory=list)

    def rng(self, salt: str = "") -> random.Random:
        return random.Random(f"{self.seed}:{salt}")

    def characters(self, d: int) -> list[Character]:
        return repn.default_characters(d, self.char_grid)


def default_window(d: int) -> Window:
    return Window((8,)) if d == 1 else Window((4,) * d)


def sample_points(sys: DynSystem, cfg: SuiteConfig, salt: str = "points") -> list:
    rng = cfg.rng(salt)
    pts = [cfg.point] if cfg.point is not None else []
    for _ in range(50 * cfg.n_points):
        if len(pts) >= cfg.n_points:
            break
        p = sys.sample_point(rng)
        if p not in pts:
            pts.append(p)
    return pts


def orbit_cocycle_for(sys: DynSystem, x, w: Window) -> Optional[co.OrbitCocycle]:
    """The square root of the counting cocycle when degrees are known, else the left regular one.

    None when neither can be formed on ``w`` (orbit not closed, orbit points
    the window never reaches, or a windowed estimate that fails validation).
    """
    try:
        return co.orbit_cocycle_from_cocycle(co.ConstantJacobian(), sys, x, w)
    except (UnsupportedFiber, NotImplementedError):
        pass
    try:
        return co.left_regular_orbit_cocycle(sys, x, w, "exact")
    except co.CertificateUnavailable:
        pass
    try:
        mu = co.left_regular_orbit_cocycle(sys, x, w, "windowed")
    except co.CocycleError:
        return None
    return mu if mu.validation.ok else None


def _random_char(rng: random.Random, d: int, grid: int = 12) -> Character:
    return Character(tuple(Fraction(rng.randrange(grid), grid) for _ in range(d)))


def _half(w: Window) -> Window:
    return Window(tuple(max(1, b // 2) for b in w.bounds))


# -- 1: covariance --------------------------------------------------------------------------


def covariance_suite(sys: DynSystem, cfg: SuiteConfig, samples: int = 50, tol: float = 1e-12) -> Report:
    rng = cfg.rng("covariance")
    w = cfg.window
    pts = sample_points(sys, cfg)
    ts = enumerate_window(_half(w))
    report = Report(f"covariance {sys.describe()}")
    worst_pi = worst_rho = 0.0
    wit, skipped = None, 0
    for _ in range(samples):
        f = sys.sample_function(rng)
        t = rng.choice(ts)
        x = rng.choice(pts)
        gamma = _random_char(rng, sys.d)
        points = repn.window_points(sys, x, w)
        pf = repn.build_left_regular(sys, x, gamma, w, repn.SymbolicElement.function(sys, f), points).data
        st = repn.build_left_regular_shift(sys, gamma, w, t).data
        rhs = repn.build_left_regular(sys, x, gamma, w, repn.SymbolicElement.mono(sys, t, sys.pullback(f, t)), points).data
        d = float(np.max(np.abs(pf @ st - rhs)))
        if d > worst_pi:
            worst_pi, wit = d, {"x": str(x), "t": t}
        mu = orbit_cocycle_for(sys, x, _half(w))
        if mu is None:
            skipped += 1
            continue
        rf = repn.build_orbit_rep(sys, mu, repn.SymbolicElement.function(sys, f), gamma).data
        rs = repn.build_orbit_rep(sys, mu, repn.SymbolicElement.mono(sys, t), gamma).data
        rr = repn.build_orbit_rep(sys, mu, repn.SymbolicElement.mono(sys, t, sys.pullback(f, t)), gamma).data
        worst_rho = max(worst_rho, float(np.max(np.abs(rf @ rs - rr))))
    report.bound("pi-covariance", "f S_t = S_t (f o sigma_t)", worst_pi, tol, witness=wit, detail=f"{samples} samples, full window")
    report.bound("rho-covariance", "f S_t = S_t (f o sigma_t)", worst_rho, tol,
                 detail=f"{samples - skipped} samples ({skipped} points without an orbit cocycle on the window)")
    return report


# -- 2: isometries and contractions -------------------------------------------------------


def isometry_suite(sys: DynSystem, cfg: SuiteConfig, tol: float = 1e-12) -> Report:
    w = cfg.window
    report = Report(f"isometry {sys.describe()}")
    rng = cfg.rng("isometry")
    idx = window_index(w)
    elems = enumerate_window(w)
    worst_iso = worst_semi = worst_adj = 0.0
    gamma = _random_char(rng, sys.d)
    for t in enumerate_window(_half(w)):
        st = repn.build_left_regular_shift(sys, gamma, w, t).data
        cols = [idx[u] for u in elems if w.translate(u, t) is not None]
        c = st[:, cols]
        worst_iso = max(worst_iso, float(np.max(np.abs(c.conj().T @ c - np.eye(len(cols))))))
        # adjoint: xi_s -> <gamma,-t> xi_{s-t} when s - t lies in S, else 0
        adj = np.zeros_like(st)
        for s in elems:
            u = tuple(a - b for a, b in zip(s.exps, t.exps))
            if all(e >= 0 for e in u):
                adj[idx[SemigroupElement(u)], idx[s]] = (-gamma)(t)
        worst_adj = max(worst_adj, float(np.max(np.abs(st.conj().T - adj))))
        for s in enumerate_window(_half(w)):
            ss = repn.build_left_regular_shift(sys, gamma, w, s).data
            sst = repn.build_left_regular_shift(sys, gamma, w, s + t).data if (s + t) in w else None
            if sst is None:
                continue
            inner = [idx[u] for u in elems if (s + t + u) in w]
            worst_semi = max(worst_semi, float(np.max(np.abs((ss @ st - sst)[:, inner]), initial=0.0)))
    report.bound("interior-isometry", "pi(S_s) is an isometry", worst_iso, tol)
    report.bound("adjoint-formula", "S_t* xi_s = xi_{s-t} or 0", worst_adj, tol)
    report.bound("semigroup", "S_s S_t = S_{s+t}", worst_semi, tol)

    worst_rho = 0.0
    for x in sample_points(sys, cfg)[:4]:
        mus = [mu for mu in [orbit_cocycle_for(sys, x, _half(w))] if mu is not None]
        try:
            mus.append(co.left_regular_orbit_cocycle(sys, x, _half(w), "exact"))
        except co.CertificateUnavailable:
            pass
        for mu in mus:
            if mu.validation is not None and not mu.validation.ok:
                continue
            for t in enumerate_window(_half(w)):
                for g in (None, gamma):
                    worst_rho = max(worst_rho, repn.build_orbit_rep(sys, mu, repn.SymbolicElement.mono(sys, t), g).norm())
    report.bound("rho-contraction", "orbit representations are contractive", worst_rho, 1 + tol)
    return report


# -- 3: conditional expectation -----------------------------------------------------------


def expectation_suite(sys: DynSystem, cfg: SuiteConfig, samples: int = 50, tol: float = 1e-12) -> Report:
    rng = cfg.rng("expectation")
    w = cfg.window
    support_window = _half(w)
    pts = sample_points(sys, cfg)
    report = Report(f"conditional expectation {sys.describe()}")
    worst_diag = worst_dom = 0.0
    symbolic_bad = 0
    for _ in range(samples):
        F = repn.random_element(sys, rng, support_window, rng.randint(1, 3))
        p0 = repn.adjoint_star_product(F)
        expected = sys.constant(0)
        for s in reversed(F.support):
            f = F.terms[s]
            expected = expected + f.conj() * f
        symbolic_bad += p0 != expected
        x = rng.choice(pts)
        gamma = _random_char(rng, sys.d)
        points = repn.window_points(sys, x, w)
        pi = repn.build_left_regular(sys, x, gamma, w, F, points).data
        gram = pi.conj().T @ pi
        idx = window_index(w)
        for u in w.interior(F.support):
            y = points[u]
            v = evaluate(p0, y)
            worst_diag = max(worst_diag, abs(gram[idx[u], idx[u]] - v))
            for f in F.terms.values():
                worst_dom = max(worst_dom, abs(evaluate(f, y)) ** 2 - v.real)
    report.add("symbolic", "P0(F*F) = sum |f_s|^2", symbolic_bad == 0, symbolic_bad, 0, detail=f"{samples} random F")
    report.bound("matrix-diagonal", "P0(F*F) = sum |f_s|^2", worst_diag, tol, detail="diagonal of pi(F)*pi(F) at interior u")
    report.bound("dominance", "P0(F*F) >= |f_s|^2", worst_dom, tol)
    return report


# -- 4: Fourier recovery --------------------------------------------------------------------


def fourier_suite(sys: DynSystem, cfg: SuiteConfig, samples: int = 20, tol: float = 1e-12) -> Report:
    rng = cfg.rng("fourier")
    w = Window(tuple(min(b, 3) for b in cfg.window.bounds))
    pts = sample_points(sys, cfg)
    report = Report(f"fourier {sys.describe()}")
    worst_c = worst_m = 0.0
    for _ in range(samples):
        F = repn.random_element(sys, rng, w, rng.randint(1, 4))
        x = rng.choice(pts)
        for s in enumerate_window(w):
            worst_c = max(worst_c, repn.coeff_distance(repn.project(F, s, "dft", w), repn.project(F, s)))
        s = rng.choice(F.support)
        worst_m = max(worst_m, repn.dft_matrix_projection(sys, x, w, F, s))
    report.bound("coefficients", "P_s as an average of gauge twists", worst_c, tol)
    report.bound("matrices", "P_s as an average of gauge twists", worst_m, tol)
    return report


# -- 5: cocycles ----------------------------------------------------------------------------


def cocycle_suite(sys: DynSystem, cfg: SuiteConfig, x=None) -> Report:
    report = Report(f"cocycles {sys.describe()}")
    x = x if x is not None else sample_points(sys, cfg)[0]
    try:
        omega_report = co.validate_cocycle(co.ConstantJacobian(), sys, samples=cfg.samples, seed=cfg.seed)
        report.extend(omega_report, "omega/")
        mu = co.orbit_cocycle_from_cocycle(co.ConstantJacobian(), sys, x, _half(cfg.window))
        report.extend(mu.validation, "sqrt-omega/")
        gamma = _random_char(cfg.rng("twist"), sys.d)
        report.extend(co.validate_orbit_cocycle(co.twist(gamma, mu)), "twisted/")
    except (UnsupportedFiber, NotImplementedError) as exc:
        report.notes.append(f"counting cocycle unavailable: {exc}")
    except co.CocycleError as exc:
        report.add("sqrt-omega", "mu = sqrt(omega)", False, detail=str(exc))
    try:
        lr = co.left_regular_orbit_cocycle(sys, x, _half(cfg.window), "exact")
        dev = max(abs(v - 1) for v in lr.table.values()) if lr.diagnostics.get("certificate", "").startswith("full") else 0.0
        report.extend(lr.validation, "left-regular/")
        report.bound("left-regular-unit", "equal class densities give mu = 1", dev, 0.0, detail=lr.diagnostics["certificate"])
        report.data["left_regular_certificate"] = lr.diagnostics["certificate"]
    except co.CertificateUnavailable as exc:
        report.notes.append(str(exc))
    try:
        lw = co.left_regular_orbit_cocycle(sys, x, Window(tuple(max(9, b) for b in cfg.window.bounds)), "windowed")
        report.data["windowed"] = {
            "window": list(lw.window.bounds),
            "stable": lw.diagnostics["stable"],
            "max_change_under_doubling": lw.diagnostics["max_change_under_doubling"],
            "threshold": co.STABILITY_THRESHOLD,
        }
        if not lw.diagnostics["stable"]:
            report.notes.append("windowed left-regular estimate flagged unstable under window doubling")
        report.data["windowed_validation_ok"] = lw.validation.ok
    except co.CocycleError as exc:
        report.notes.append(f"windowed estimate unavailable: {exc}")
    return report


# -- 6: H0 and the intertwiner --------------------------------------------------------------


def h0_suite(sys: DynSystem, cfg: SuiteConfig, x=None, samples: int = 20) -> Report:
    x = x if x is not None else sample_points(sys, cfg)[0]
    w = cfg.window
    rng = cfg.rng("h0")
    report = Report(f"H0 {sys.describe()} at {x}")
    q, qp = repn.h0_projection(sys, x, w)
    qd = q.data
    report.bound("Q-idempotent", "projection onto H0", float(np.max(np.abs(qd @ qd - qd))), 1e-12)
    report.bound("Q-selfadjoint", "projection onto H0", float(np.max(np.abs(qd - qd.conj().T))), 1e-12)
    worst, excluded = 0.0, set()
    for _ in range(samples):
        F = repn.random_element(sys, rng, _half(w), rng.randint(1, 3))
        gamma = _random_char(rng, sys.d)
        d, ex = repn.h0_invariance_defect(sys, x, gamma, w, F)
        worst = max(worst, d)
        excluded.update(ex)
    report.bound("invariance", "H0 invariant under pi(F)", worst, 1e-12, detail="interior-supported H0 vectors")
    report.data["boundary_excluded"] = sorted(excluded)
    orbit = sys.orbit(x)
    reached = set(repn.window_points(sys, x, w).values())
    if orbit.complete and reached >= set(orbit.points):
        dim_h0 = int(round(np.trace(qd).real))
        report.add("dimensions", "dim H0 + |orbit| = |window|", dim_h0 + len(orbit) == w.size, dim_h0 + len(orbit), w.size)
        W = repn.intertwiner(sys, x, w, orbit).data
        report.bound("W-isometry", "W*W = I", float(np.max(np.abs(W.conj().T @ W - np.eye(len(orbit))))), 1e-12)
    report.extend(intertwining_suite(sys, cfg, x, samples))
    return report


def intertwining_suite(sys: DynSystem, cfg: SuiteConfig, x, samples: int = 20) -> Report:
    """W* pi1(F) W = rho_{x,gamma mu}(F) on a torus window matched to the orbit periods."""
    rng = cfg.rng("intertwine")
    report = Report("intertwiner")
    orbit = sys.orbit(x)
    if not orbit.fully_recurrent():
        report.notes.append(f"{x} is not fully recurrent; no torus window, box-window defect reported only")
        torus = None
    else:
        torus = repn.torus_window(sys, x, max(cfg.window.bounds))
    worst_t = worst_b = 0.0
    box = cfg.window
    for _ in range(samples):
        F = repn.random_element(sys, rng, _half(box), rng.randint(1, 3))
        gamma = _random_char(rng, sys.d)
        if torus is not None:
            worst_t = max(worst_t, repn.intertwining_defect(sys, x, gamma, torus, F))
        try:
            worst_b = max(worst_b, repn.intertwining_defect(sys, x, gamma, box, F))
        except (co.CertificateUnavailable, repn.UnreachedOrbitPoint):
            pass
    if torus is not None:
        report.bound("intertwining", "W* pi1(F) W = rho_{x,gamma mu}(F)", worst_t, cfg.tol,
                     detail=f"torus window {list(torus.bounds)}, {samples} random F")
    report.data["box_window_defect"] = worst_b
    report.data["box_window"] = list(box.bounds)
    return report


# -- 7: natural extension -------------------------------------------------------------------


def extension_suite(sys: DynSystem, cfg: SuiteConfig, paths: int = 100) -> Report:
    rng = cfg.rng("extension")
    depth = cfg.depth if sys.d == 1 else 1
    while depth > 0:
        try:
            env.enumerate_paths(sys, sample_points(sys, cfg)[0], depth)
            break
        except env.PathCapExceeded:
            depth -= 1
    pts = sample_points(sys, cfg)
    ts = [t for t in enumerate_window(Window((2,) * sys.d)) if _fiber_ok(sys, t)]
    report = check_extension_sampled(sys, pts, depth, ts, paths, rng)
    if sys.kind == "finite":
        tops = {}
        unique = True
        for x in (sys.parse_point(l) for l in sys.labels):
            ps = env.enumerate_paths(sys, x, depth)
            unique &= len(ps) == 1
            tops[ps[0]] = x
        anchors = {env.projection(p) for p in tops}
        report.add("unique-paths", "invertible sigma: one path per point", unique, int(unique), 1)
        report.add("p-bijective", "p is a homeomorphism", len(anchors) == len(sys.labels) == len(tops), len(anchors), len(sys.labels))
    return report


def _fiber_ok(sys: DynSystem, t: SemigroupElement) -> bool:
    try:
        sys.fiber(t, sample_point_any(sys))
        return True
    except UnsupportedFiber:
        return False


def sample_point_any(sys: DynSystem):
    return sys.sample_point(random.Random(0))


def check_extension_sampled(sys, pts, depth, ts, paths, rng) -> Report:
    pool_pts = list(pts)
    report = env.check_extension_diagram(sys, pool_pts, depth, ts, paths, rng)
    # top up to the requested number of sampled paths with extra anchors
    extra = 0
    while report.data["paths_sampled"] < paths and extra < 50:
        extra += 1
        p = sys.sample_point(rng)
        if p not in pool_pts:
            pool_pts.append(p)
            report = env.check_extension_diagram(sys, pool_pts, depth, ts, paths, rng)
    report.title = f"extension {sys.describe()}"
    return report


# -- 8: crossed product -----------------------------------------------------------------------


def crossed_suite(sys: DynSystem, cfg: SuiteConfig, x=None, samples: int = 10) -> Report:
    rng = cfg.rng("crossed")
    report = Report(f"crossed product {sys.describe()}")
    x = x if x is not None else sample_points(sys, cfg)[0]
    orbit = sys.orbit(x)
    gamma = _random_char(rng, sys.d)
    gens = [tuple(1 if j == i else 0 for j in range(sys.d)) for i in range(sys.d)]
    if orbit.fully_recurrent():
        worst_u = worst_h = 0.0
        group = list(itertools.product(range(-2, 3), repeat=sys.d))
        mats = {g: env.build_closed_crossed_rep(sys, x, gamma, [(g, sys.one())]).data for g in group}
        n = len(orbit)
        for g, u in mats.items():
            worst_u = max(worst_u, float(np.max(np.abs(u.conj().T @ u - np.eye(n)))), float(np.max(np.abs(u @ u.conj().T - np.eye(n)))))
        for g, h in itertools.product(group, repeat=2):
            gh = tuple(a + b for a, b in zip(g, h))
            if gh in mats:
                worst_h = max(worst_h, float(np.max(np.abs(mats[g] @ mats[h] - mats[gh]))))
        report.bound("unitary", "sigma~_g are homeomorphisms: U_g unitary", worst_u, 1e-12, detail="closed periodic threads")
        report.bound("multiplicative", "U_g U_h = U_{g+h}", worst_h, 1e-12)
        worst_mono = 0.0
        for _ in range(samples):
            t = SemigroupElement(tuple(rng.randrange(3) for _ in range(sys.d)))
            F = repn.SymbolicElement.mono(sys, t, sys.sample_function(rng))
            worst_mono = max(worst_mono, env.closed_norm_gap(sys, x, gamma, F)["gap"])
        report.bound("closed-norm-equality", "|| pi~(F~) || = || pi(F) ||", worst_mono, 1e-10,
                     detail="monomials S_t f on closed periodic threads")
    else:
        report.notes.append(f"orbit of {x} is not fully recurrent: no closed thread set")

    radius, depth = (cfg.depth, cfg.depth) if sys.d == 1 else (1, 1)
    worst_c = 0.0
    for t in enumerate_window(Window((min(2, radius),) * sys.d)):
        if _fiber_ok(sys, SemigroupElement((depth,) * sys.d)):
            worst_c = max(worst_c, env.compression_defect(sys, x, gamma, radius, depth, t))
    report.bound("compression", "P pi~(U_t) P = pi(S_t)", worst_c, 1e-12)

    trend, bad = [], 0
    for _ in range(samples):
        F = repn.random_element(sys, rng, Window((min(2, radius),) * sys.d), rng.randint(1, 3))
        r0 = max(1, radius // 2)
        a = env.norm_gap(sys, x, gamma, F, r0, r0)
        b = env.norm_gap(sys, x, gamma, F, 2 * r0, 2 * r0)
        trend.append({"before": a["gap"], "after": b["gap"]})
        bad += b["gap"] > a["gap"] + 1e-10
    report.data["norm_gap_trend"] = trend
    report.add("norm-gap-trend", "|| pi~(F~) || = || pi(F) ||", bad == 0, bad, 0,
               detail=f"gap increased on {bad} of {samples} random F under one window/depth doubling")
    return report


# -- 9: correspondence ----------------------------------------------------------------------


def correspondence_suite(sys: DynSystem, cfg: SuiteConfig, x=None, samples: int = 20) -> Report:
    x = x if x is not None else sample_points(sys, cfg)[0]
    gamma = _random_char(cfg.rng("fock"), sys.d)
    letter_bound = 2 if sys.d == 1 else 1
    K = 3 if sys.d == 1 else 2
    r = fock.rep_condition_check(sys, x, gamma, cfg.window, samples, cfg.seed, letter_bound, K)
    r.title = f"correspondence {sys.describe()} at {x}"
    return r


# -- 10: separation ------------------------------------------------------------------------


def separation_suite(sys: DynSystem, cfg: SuiteConfig, samples: int = 20) -> Report:
    rng = cfg.rng("separation")
    pts = sample_points(sys, cfg)
    chars = cfg.characters(sys.d)
    report = Report(f"separation {sys.describe()}")
    miss_pi = miss_rho = 0
    smallest_pi = smallest_rho = np.inf
    for _ in range(samples):
        F = repn.random_element(sys, rng, _half(cfg.window), rng.randint(1, 3))
        est = repn.estimate_norm(F, pts[:3], chars[:4], [max(cfg.window.bounds)])
        smallest_pi = min(smallest_pi, est.lower_bound)
        miss_pi += est.lower_bound <= 1e-12
        best = 0.0
        for x in pts[:3]:
            mu = orbit_cocycle_for(sys, x, _half(cfg.window))
            if mu is None:
                continue
            for g in chars[:4]:
                best = max(best, repn.build_orbit_rep(sys, mu, F, g).norm())
        smallest_rho = min(smallest_rho, best)
        miss_rho += best <= 1e-12
    report.add("left-regular", "pi_{x,gamma}(F) != 0", miss_pi == 0, float(smallest_pi), 0.0, detail="smallest sampled bound")
    report.add("orbit", "rho_{x,gamma mu}(F) != 0 for some twist", miss_rho == 0, float(smallest_rho), 0.0)
    return report


# -- norm report -------------------------------------------------------------------------------


def norm_report(sys: DynSystem, cfg: SuiteConfig, F: repn.SymbolicElement) -> Report:
    pts = sample_points(sys, cfg)
    chars = cfg.characters(sys.d)
    top = max(cfg.window.bounds)
    ladder = sorted({max(1, top // 4), max(1, top // 2), top})
    mus = {}
    for x in pts:
        mu = orbit_cocycle_for(sys, x, _half(cfg.window))
        if mu is not None:
            mus[x] = mu
    est = repn.estimate_norm(F, pts, chars, ladder, mus)
    report = Report("norm")
    curve = [c["max_norm"] for c in est.curve]
    report.add("monotone", "completion in the left regular norm", all(b >= a - 1e-12 for a, b in zip(curve, curve[1:])),
               detail="window-growth curve nondecreasing")
    report.data.update(est.as_dict())
    report.data["element"] = repr(F)
    return report


def shilov_suite(sys: DynSystem, cfg: SuiteConfig, x=None, samples: int = 10) -> Report:
    rng = cfg.rng("shilov")
    x = x if x is not None else sample_points(sys, cfg)[0]
    w = cfg.window
    radius, depth = (cfg.depth, cfg.depth) if sys.d == 1 else (1, 1)
    Fs = [repn.random_element(sys, rng, _half(w), rng.randint(1, 3)) for _ in range(samples)]
    gamma = _random_char(rng, sys.d)
    r = env.shilov_report(sys, x, gamma, w, Fs, radius, depth)
    r.title = f"shilov {sys.describe()} at {x}"
    return r


def dilation_suite(sys: DynSystem, cfg: SuiteConfig, x=None, elements: Optional[Sequence] = None) -> Report:
    rng = cfg.rng("dilation")
    x = x if x is not None else sample_points(sys, cfg)[0]
    radius, depth = (cfg.depth, cfg.depth) if sys.d == 1 else (1, 1)
    Fs = list(elements) if elements else [repn.random_element(sys, rng, Window((min(2, radius),) * sys.d), 2) for _ in range(3)]
    gamma = _random_char(rng, sys.d)
    report = Report(f"dilation {sys.describe()} at {x}")
    for k, F in enumerate(Fs):
        r0 = max(1, radius // 2)
        report.extend(env.dilation_check(sys, x, gamma, F, r0, max(r0, depth // 2)), f"F{k}/")
    return report


def standard_systems() -> list[tuple[str, DynSystem, object]]:
    """One representative per backend, each with a fully recurrent base point."""
    from fractions import Fraction as Fr

    from .dynsys import CircleRational, CircleSystem, EvPeriodicWord, FiniteLabel, FiniteSystem, ShiftSystem

    labels = [str(i) for i in range(6)]
    finite = FiniteSystem(labels, [{l: str((int(l) + 1) % 6) for l in labels}, {l: str((int(l) + 3) % 6) for l in labels}])
    return [
        ("circle2", CircleSystem((2,)), CircleRational(Fr(1, 3))),
        ("circle23", CircleSystem((2, 3)), CircleRational(Fr(1, 5))),
        ("shift2", ShiftSystem(2), EvPeriodicWord.parse("(01)")),
        ("finite6", finite, FiniteLabel("0")),
    ]
