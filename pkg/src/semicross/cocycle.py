"""Cocycles omega on (X, sigma, S) and orbit cocycles mu on S x S(x)."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .dynsys import DynSystem, OrbitSet, UnsupportedFiber
from .reports import Report
from .semigroup import Character, SemigroupElement, Window, enumerate_window, subtract_if_succ

TOL = 1e-12
STABILITY_THRESHOLD = 1e-2
MAX_FIBER = 4096


class CocycleError(ValueError):
    def __init__(self, message: str, report: Optional[Report] = None):
        super().__init__(message)
        self.report = report


class CertificateUnavailable(CocycleError):
    pass


def _split_first(t: SemigroupElement) -> tuple[int, SemigroupElement]:
    i = next(i for i, e in enumerate(t.exps) if e > 0)
    rest = list(t.exps)
    rest[i] -= 1
    return i, SemigroupElement(tuple(rest))


class Cocycle:
    """omega(t, x), extended from generator data by omega(e_i + t, x) = omega(e_i, x) omega(t, sigma_i x)."""

    def generator_value(self, sys: DynSystem, i: int, x):
        raise NotImplementedError

    def value(self, sys: DynSystem, t, x):
        t = sys.element(t)
        out = Fraction(1)
        while not t.is_zero():
            i, t = _split_first(t)
            out = out * self.generator_value(sys, i, x)
            x = sys.apply_gen(i, x)
        return out


class ConstantJacobian(Cocycle):
    """omega(t, x) = 1 / deg(sigma_t), the normalized counting cocycle."""

    def generator_value(self, sys, i, x):
        return Fraction(1, sys.degree(i))

    def value(self, sys, t, x):
        return Fraction(1, sys.total_degree(t))

    def __repr__(self):
        return "jacobian"


class ExplicitTable(Cocycle):
    """Generator-level values omega(e_i, x) looked up per point, with an optional default."""

    def __init__(self, table: dict, default=None):
        self.table = dict(table)
        self.default = default

    def generator_value(self, sys, i, x):
        try:
            return self.table[(i, x)]
        except KeyError:
            if self.default is None:
                raise KeyError(f"cocycle table has no value at generator {i}, point {x}") from None
            return self.default

    def __repr__(self):
        return f"table({len(self.table)} entries)"


def _sample_elements(sys: DynSystem, w: Window) -> list[SemigroupElement]:
    out = []
    for t in enumerate_window(w):
        try:
            size = sys.total_degree(t)
        except NotImplementedError:
            continue
        if size <= MAX_FIBER:
            out.append(t)
    return out


def validate_cocycle(omega: Cocycle, sys: DynSystem, samples: int = 20, w: Optional[Window] = None, seed: int = 0, points=None) -> Report:
    rng = random.Random(seed)
    w = w or Window.cube(sys.d, 2)
    report = Report("cocycle")
    anchor_fiber = "fiber sums of omega equal 1"
    anchor_identity = "omega(s+t,x) = omega(s,x) omega(t,sigma_s x)"
    ts = _sample_elements(sys, w)
    if len(ts) < 2:
        raise UnsupportedFiber(f"no fibers computable on {sys.describe()}")
    points = list(points) if points is not None else [sys.sample_point(rng) for _ in range(samples)]

    worst_neg, worst_sum, sum_witness, neg_witness = 0.0, 0.0, None, None
    for y in points:
        for t in ts:
            vals = [omega.value(sys, t, z) for z in sys.fiber(t, y)]
            for v, z in zip(vals, sys.fiber(t, y)):
                if v < 0 and -v > worst_neg:
                    worst_neg, neg_witness = float(-v), {"t": t, "x": str(z)}
            dev = abs(sum(vals) - 1)
            if dev > worst_sum:
                worst_sum, sum_witness = float(dev), {"t": t, "y": str(y), "sum": float(sum(vals))}
    report.add("nonnegative", "omega >= 0", worst_neg == 0, worst_neg, 0.0, witness=neg_witness)
    report.bound("fiber-sum", anchor_fiber, worst_sum, TOL, witness=sum_witness)
    report.add("continuity", "omega continuous in x", True, detail="satisfied by construction (closed form)")

    worst_id, id_witness = 0.0, None
    for _ in range(samples):
        s, t = rng.choice(ts), rng.choice(ts)
        x = rng.choice(points)
        lhs = omega.value(sys, s + t, x)
        rhs = omega.value(sys, s, x) * omega.value(sys, t, sys.apply(s, x))
        if abs(lhs - rhs) > worst_id:
            worst_id, id_witness = float(abs(lhs - rhs)), {"s": s, "t": t, "x": str(x)}
    report.bound("cocycle-identity", anchor_identity, worst_id, TOL, witness=id_witness)
    report.data["exact"] = isinstance(omega, ConstantJacobian)
    return report


@dataclass
class OrbitCocycle:
    """mu(t, y) tabulated for t in a window and y in the (complete) orbit of x."""

    x: object
    orbit: OrbitSet
    window: Window
    table: dict
    provenance: str
    diagnostics: dict = field(default_factory=dict)
    validation: Optional[Report] = None

    def __call__(self, t, y) -> complex:
        j = y if isinstance(y, int) else self.orbit.index[y]
        try:
            return self.table[(t, j)]
        except KeyError:
            raise KeyError(f"orbit cocycle not tabulated at t={t}") from None

    def covers(self, ts) -> bool:
        return all(t in self.window for t in ts)


def validate_orbit_cocycle(mu: OrbitCocycle, w: Optional[Window] = None) -> Report:
    w = w or mu.window
    orbit = mu.orbit
    report = Report("orbit cocycle")
    if not orbit.complete:
        report.add("orbit-complete", "orbit closure", False, detail="orbit exploration incomplete")
        return report
    n = len(orbit)
    ts = enumerate_window(w)

    worst_row, row_witness = -math.inf, None
    for t in ts:
        sums = [0.0] * n
        for j in range(n):
            sums[orbit.walk(j, t)] += abs(mu(t, j)) ** 2
        k = max(range(n), key=lambda k: sums[k])
        if sums[k] > worst_row:
            worst_row, row_witness = sums[k], {"t": t, "z": str(orbit.points[k])}
    report.bound("row-l2", "sum over sigma_t(y_j) = z of |mu(t,y_j)|^2 <= 1", worst_row, 1 + TOL, witness=row_witness)

    worst, witness = 0.0, None
    for st in ts:
        for t in ts:
            s = subtract_if_succ(st, t)
            if s is None:
                continue
            for j in range(n):
                dev = abs(mu(st, j) - mu(t, j) * mu(s, orbit.walk(j, t)))
                if dev > worst:
                    worst, witness = dev, {"s": s, "t": t, "y": str(orbit.points[j])}
    report.bound("cocycle-condition", "mu(s+t,y) = mu(t,y) mu(s,sigma_t y)", worst, TOL, witness=witness)

    zero = SemigroupElement.zero(w.d)
    dev0 = max(abs(mu(zero, j) - 1) for j in range(n))
    report.bound("unit", "mu(0,y) = 1", dev0, TOL)
    return report


def _orbit_for(sys: DynSystem, x, w: Window) -> OrbitSet:
    orbit = sys.orbit(x)
    if not orbit.complete:
        raise CocycleError(f"orbit of {x} did not close within the exploration bound")
    return orbit


def orbit_cocycle_from_cocycle(omega: Cocycle, sys: DynSystem, x, w: Window) -> OrbitCocycle:
    """mu(t, y) = sqrt(omega(t, y)), validated before it is returned."""
    orbit = _orbit_for(sys, x, w)
    table = {}
    for t in enumerate_window(w):
        for j, y in enumerate(orbit.points):
            table[(t, j)] = complex(math.sqrt(omega.value(sys, t, y)))
    mu = OrbitCocycle(x, orbit, w, table, "derived-from-omega", {"formula": "mu(t,y) = sqrt(omega(t,y))"})
    mu.validation = validate_orbit_cocycle(mu)
    if not mu.validation.ok:
        bad = mu.validation.failures()[0]
        raise CocycleError(f"derived orbit cocycle fails {bad.name} at {bad.witness}", mu.validation)
    return mu


def class_counts(orbit: OrbitSet, w: Window) -> list[int]:
    """|[u] intersected with w| for each orbit point."""
    counts = [0] * len(orbit)
    for j in orbit.window_map(w).values():
        counts[j] += 1
    return counts


def _windowed_table(orbit: OrbitSet, w: Window, counts_window: Window) -> Optional[dict]:
    counts = class_counts(orbit, counts_window)
    if 0 in counts:
        return None
    return {
        (t, j): complex(math.sqrt(counts[j] / counts[orbit.walk(j, t)]))
        for t in enumerate_window(w)
        for j in range(len(orbit))
    }


def left_regular_orbit_cocycle(sys: DynSystem, x, w: Window, mode: str = "exact") -> OrbitCocycle:
    """mu(t, y) = sqrt(|[u]| / |[t+u]|) where sigma_u(x) = y.

    ``exact`` mode needs a certificate: either every generator permutes the
    orbit (the classes are then cosets of one finite-index sublattice, so all
    densities agree and mu = 1), or every needed class is finite. In
    ``windowed`` mode the counts are taken inside ``w`` and compared against
    the doubled window.
    """
    orbit = _orbit_for(sys, x, w)
    n = len(orbit)
    ts = enumerate_window(w)
    if mode == "exact":
        if orbit.fully_recurrent():
            table = {(t, j): 1 + 0j for t in ts for j in range(n)}
            cert = "full recurrence: equal class densities"
        else:
            sizes = [sys.class_finiteness(x, y) for y in orbit.points]
            if any(s.kind != "finite" for s in sizes):
                infinite = [str(orbit.points[j]) for j, s in enumerate(sizes) if s.kind != "finite"]
                raise CertificateUnavailable(
                    f"exact mode refused: classes over {', '.join(infinite)} are infinite and the orbit is not fully recurrent"
                )
            table = {(t, j): complex(math.sqrt(sizes[j].count / sizes[orbit.walk(j, t)].count)) for t in ts for j in range(n)}
            cert = "finite classes, exact counts"
        mu = OrbitCocycle(x, orbit, w, table, "left-regular-exact", {"certificate": cert})
    elif mode == "windowed":
        table = _windowed_table(orbit, w, w)
        if table is None:
            raise CocycleError("some orbit point is not reached inside the window")
        doubled = _windowed_table(orbit, w, w.doubled())
        change = max(abs(table[k] - doubled[k]) for k in table)
        mu = OrbitCocycle(
            x, orbit, w, table, f"left-regular-windowed({list(w.bounds)})",
            {"stable": change < STABILITY_THRESHOLD, "max_change_under_doubling": change, "threshold": STABILITY_THRESHOLD},
        )
    else:
        raise ValueError(f"unknown mode {mode!r}")
    mu.validation = validate_orbit_cocycle(mu)
    smallest = min(abs(v) for v in mu.table.values())
    mu.validation.add("nonvanishing", "mu(s,y) != 0 for all s", smallest > 0, smallest, 0.0)
    if mode == "exact" and not mu.validation.ok:
        raise CocycleError("exact left-regular cocycle failed validation", mu.validation)
    return mu


def twist(gamma: Character, mu: OrbitCocycle) -> OrbitCocycle:
    """(gamma mu)(t, y) = <gamma, t> mu(t, y)."""
    table = {(t, j): gamma(t) * v for (t, j), v in mu.table.items()}
    return OrbitCocycle(mu.x, mu.orbit, mu.window, table, f"twisted {mu.provenance}", dict(mu.diagnostics))
