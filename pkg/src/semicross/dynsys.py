"""Dynamical-system backends (X, sigma, S) with exact points.

Three backends are provided:

* :class:`FiniteSystem` -- commuting bijections of a finite label set;
* :class:`CircleSystem` -- the maps x -> a x mod 1 on rational points;
* :class:`ShiftSystem` -- commuting one-sided block maps of the full shift,
  acting on eventually periodic words.
"""

from __future__ import annotations

import itertools
import math
import random
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .funcalg import CylinderFn, FiniteTable, FunctionElement, TrigPoly
from .semigroup import SemigroupElement, Window, as_element, enumerate_window, iter_lex

DEFAULT_ORBIT_BOUND = 256
SHIFT_CHECK_DEPTH = 12


class UnsupportedFiber(NotImplementedError):
    pass


class UnsupportedComposition(NotImplementedError):
    pass


class ValidationError(ValueError):
    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__("; ".join(report.failures) or "validation failed")


# -- points -----------------------------------------------------------------


@dataclass(frozen=True, slots=True, order=True)
class FiniteLabel:
    label: str

    def __str__(self):
        return self.label


@dataclass(frozen=True, slots=True, order=True)
class CircleRational:
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value) % 1)

    def __str__(self):
        if self.value == 0:
            return "0"
        return f"{self.value.numerator}/{self.value.denominator}"


def _canonical_word(pre: tuple, per: tuple) -> tuple[tuple, tuple]:
    n = len(per)
    for p in range(1, n + 1):
        if n % p == 0 and per[:p] * (n // p) == per:
            per = per[:p]
            break
    while pre and pre[-1] == per[-1]:
        pre = pre[:-1]
        per = (per[-1],) + per[:-1]
    return pre, per


@dataclass(frozen=True, slots=True, order=True)
class EvPeriodicWord:
    """The one-sided word pre . per . per . per ... in canonical minimal form."""

    pre: tuple[int, ...]
    per: tuple[int, ...]

    def __post_init__(self):
        if not self.per:
            raise ValueError("period word must be nonempty")
        pre, per = _canonical_word(tuple(self.pre), tuple(self.per))
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "per", per)

    @classmethod
    def parse(cls, text: str) -> "EvPeriodicWord":
        m = re.fullmatch(r"\s*([0-9]*)\(([0-9]+)\)\s*", text)
        if not m:
            raise ValueError(f"bad eventually periodic word {text!r}; expected e.g. 0(1)")
        return cls(tuple(map(int, m.group(1))), tuple(map(int, m.group(2))))

    def letter(self, i: int) -> int:
        n = len(self.pre)
        return self.pre[i] if i < n else self.per[(i - n) % len(self.per)]

    def prefix(self, m: int) -> tuple[int, ...]:
        return tuple(self.letter(i) for i in range(m))

    def drop(self, k: int) -> "EvPeriodicWord":
        n = len(self.pre)
        if k <= n:
            return EvPeriodicWord(self.pre[k:], self.per)
        r = (k - n) % len(self.per)
        return EvPeriodicWord((), self.per[r:] + self.per[:r])

    def prepend(self, a: int) -> "EvPeriodicWord":
        return EvPeriodicWord((a,) + self.pre, self.per)

    def __str__(self):
        return "".join(map(str, self.pre)) + "(" + "".join(map(str, self.per)) + ")"


# -- block maps ---------------------------------------------------------------


@dataclass(frozen=True)
class BlockMap:
    """A one-sided sliding block code F(x)_i = rule(x_i .. x_{i+span-1})."""

    k: int
    span: int
    rule: tuple[int, ...]  # indexed by the base-k value of the window word
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.span < 1 or len(self.rule) != self.k**self.span:
            raise ValueError("rule table must have k**span entries")
        if any(not 0 <= a < self.k for a in self.rule):
            raise ValueError("rule values must be letters")

    @classmethod
    def from_function(cls, k: int, span: int, fn, name: str = "") -> "BlockMap":
        rule = tuple(fn(w) for w in itertools.product(range(k), repeat=span))
        return cls(k, span, rule, name)

    @classmethod
    def shift(cls, k: int) -> "BlockMap":
        return cls.from_function(k, 2, lambda w: w[1], "shift")

    @property
    def is_shift(self) -> bool:
        return self.span == 2 and self.rule == BlockMap.shift(self.k).rule

    def local(self, word: Sequence[int]) -> int:
        idx = 0
        for a in word:
            idx = idx * self.k + a
        return self.rule[idx]

    def image_block(self, word: Sequence[int]) -> tuple[int, ...]:
        word = tuple(word)
        return tuple(self.local(word[i : i + self.span]) for i in range(len(word) - self.span + 1))

    def apply_word(self, x: EvPeriodicWord) -> EvPeriodicWord:
        n, p = len(x.pre), len(x.per)
        pre = tuple(self.local([x.letter(i + j) for j in range(self.span)]) for i in range(n))
        per = tuple(self.local([x.letter(n + i + j) for j in range(self.span)]) for i in range(p))
        return EvPeriodicWord(pre, per)

    def compose(self, inner: "BlockMap") -> "BlockMap":
        """The block map self o inner."""
        span = self.span + inner.span - 1
        return BlockMap.from_function(self.k, span, lambda w: self.local(inner.image_block(w)))

    def surjectivity(self, max_subsets: int = 200_000) -> tuple[bool, str]:
        """Decide surjectivity on A^N by the subset construction on the de Bruijn graph.

        Falls back to checking every word of length <= 12 when the subset
        search exceeds ``max_subsets``; the method string says which was used.
        """
        r = self.span - 1
        states = list(itertools.product(range(self.k), repeat=r))
        index = {s: i for i, s in enumerate(states)}
        step: dict[tuple[int, int], set[int]] = {}
        for s in states:
            for a in range(self.k):
                w = s + (a,)
                step.setdefault((index[s], self.local(w)), set()).add(index[w[1:]])
        start = frozenset(range(len(states)))
        seen = {start}
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            for b in range(self.k):
                nxt = frozenset(j for i in cur for j in step.get((i, b), ()))
                if not nxt:
                    return False, "exact (de Bruijn subset construction)"
                if nxt not in seen:
                    if len(seen) >= max_subsets:
                        return self._surjective_up_to(SHIFT_CHECK_DEPTH), f"empirical (words up to length {SHIFT_CHECK_DEPTH})"
                    seen.add(nxt)
                    queue.append(nxt)
        return True, "exact (de Bruijn subset construction)"

    def _surjective_up_to(self, depth: int) -> bool:
        for m in range(1, depth + 1):
            images = {self.image_block(w) for w in itertools.product(range(self.k), repeat=m + self.span - 1)}
            if len(images) < self.k**m:
                return False
        return True


# -- orbits and classes -------------------------------------------------------


@dataclass
class OrbitSet:
    """Breadth-first closure of {x} under the generators.

    ``edges[j][i]`` is the index of sigma_{e_i}(points[j]), or -1 when the
    exploration bound stopped before that edge was followed.
    """

    base: object
    points: list
    index: dict
    edges: list[list[int]]
    complete: bool

    def __len__(self):
        return len(self.points)

    def step(self, j: int, i: int) -> int:
        nxt = self.edges[j][i]
        if nxt < 0:
            raise ValueError("orbit exploration incomplete along this edge")
        return nxt

    def walk(self, j: int, s: SemigroupElement) -> int:
        """Index of sigma_s(points[j])."""
        for i, m in enumerate(s.exps):
            for _ in range(m):
                j = self.step(j, i)
        return j

    def locate(self, s: SemigroupElement) -> int:
        return self.walk(0, s)

    def window_map(self, w: Window) -> dict[SemigroupElement, int]:
        out: dict[SemigroupElement, int] = {}
        for s in enumerate_window(w):
            i = next((i for i, e in enumerate(s.exps) if e > 0), None)
            if i is None:
                out[s] = 0
            else:
                prev = list(s.exps)
                prev[i] -= 1
                out[s] = self.step(out[SemigroupElement(tuple(prev))], i)
        return out

    def is_cyclic(self, j: int) -> bool:
        """True iff points[j] lies on a directed cycle of the generator graph."""
        seen = set()
        queue = deque(k for k in self.edges[j] if k >= 0)
        while queue:
            k = queue.popleft()
            if k == j:
                return True
            if k in seen:
                continue
            seen.add(k)
            queue.extend(n for n in self.edges[k] if n >= 0)
        return False

    def generator_permutes(self, i: int) -> bool:
        if not self.complete:
            return False
        image = [self.edges[j][i] for j in range(len(self.points))]
        return len(set(image)) == len(self.points)

    def fully_recurrent(self) -> bool:
        """Every generator acts as a permutation of the (complete) orbit."""
        d = len(self.edges[0]) if self.edges else 0
        return self.complete and all(self.generator_permutes(i) for i in range(d))

    def periods(self) -> tuple[int, ...]:
        """Order of each generator as a permutation of a fully recurrent orbit."""
        if not self.fully_recurrent():
            raise ValueError("orbit is not fully recurrent")
        out = []
        for i in range(len(self.edges[0])):
            order = 1
            for j in range(len(self.points)):
                n, k = 1, self.edges[j][i]
                while k != j:
                    k = self.edges[k][i]
                    n += 1
                order = math.lcm(order, n)
            out.append(order)
        return tuple(out)


@dataclass(frozen=True)
class ClassSize:
    kind: str  # "finite" | "infinite" | "unknown"
    count: Optional[int] = None

    def __str__(self):
        return f"Finite({self.count})" if self.kind == "finite" else self.kind.capitalize()


INFINITE = ClassSize("infinite")
UNKNOWN = ClassSize("unknown")


@dataclass
class ValidationReport:
    system: str
    checks: list[dict] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def failures(self) -> list[str]:
        return [c["detail"] for c in self.checks if not c["passed"]]

    @property
    def ok(self) -> bool:
        return all(c["passed"] for c in self.checks)

    def add(self, name: str, passed: bool, detail: str, method: str) -> None:
        self.checks.append({"check": name, "passed": bool(passed), "detail": detail, "method": method})

    def as_dict(self) -> dict:
        return {"system": self.system, "ok": self.ok, "checks": self.checks, "warnings": self.warnings}


# -- systems -------------------------------------------------------------------


class DynSystem:
    """Common machinery; subclasses supply one-generator maps and preimages."""

    kind = "abstract"
    d: int

    def apply_gen(self, i: int, x):
        raise NotImplementedError

    def gen_preimages(self, i: int, y) -> list:
        raise UnsupportedFiber(f"{self.kind} backend: no preimages for generator {i}")

    def degree(self, i: int) -> int:
        raise UnsupportedFiber(f"{self.kind} backend: degree of generator {i} unknown")

    def pull_gen(self, f: FunctionElement, i: int) -> FunctionElement:
        raise UnsupportedComposition

    def constant(self, c) -> FunctionElement:
        raise NotImplementedError

    def parse_point(self, text: str):
        raise NotImplementedError

    def element(self, s) -> SemigroupElement:
        s = as_element(s, self.d)
        if s.d != self.d:
            raise ValueError(f"element {s} has dimension {s.d}, system has d={self.d}")
        return s

    def apply(self, s, x):
        s = self.element(s)
        for i, m in enumerate(s.exps):
            for _ in range(m):
                x = self.apply_gen(i, x)
        return x

    def fiber(self, t, y) -> list:
        """All z with sigma_t(z) = y, sorted."""
        t = self.element(t)
        current = {y}
        for i, m in enumerate(t.exps):
            for _ in range(m):
                current = {z for w in current for z in self.gen_preimages(i, w)}
        return sorted(current)

    def total_degree(self, t) -> int:
        t = self.element(t)
        return math.prod(self.degree(i) ** m for i, m in enumerate(t.exps) if m)

    def pullback(self, f: FunctionElement, s) -> FunctionElement:
        s = self.element(s)
        for i, m in enumerate(s.exps):
            for _ in range(m):
                f = self.pull_gen(f, i)
        return f

    def one(self) -> FunctionElement:
        return self.constant(1)

    def orbit(self, x, bound: int = DEFAULT_ORBIT_BOUND) -> OrbitSet:
        points = [x]
        index = {x: 0}
        edges: list[list[int]] = []
        queue = deque([0])
        complete = True
        while queue:
            j = queue.popleft()
            row = []
            for i in range(self.d):
                y = self.apply_gen(i, points[j])
                if y not in index:
                    if len(points) >= bound:
                        complete = False
                        row.append(-1)
                        continue
                    index[y] = len(points)
                    points.append(y)
                    queue.append(index[y])
                row.append(index[y])
            edges.append(row)
        return OrbitSet(x, points, index, edges, complete)

    def equivalence_classes(self, x, w: Window, orbit: Optional[OrbitSet] = None) -> list[tuple[object, list[SemigroupElement]]]:
        """Window elements grouped by sigma_s(x); each class is labelled by that orbit point."""
        orbit = orbit or self.orbit(x)
        wmap = orbit.window_map(w)
        groups: dict[int, list[SemigroupElement]] = {}
        for s in enumerate_window(w):
            groups.setdefault(wmap[s], []).append(s)
        return [(orbit.points[j], members) for j, members in groups.items()]

    def class_finiteness(self, x, y, bound: int = DEFAULT_ORBIT_BOUND) -> ClassSize:
        orbit = self.orbit(x, bound)
        if not orbit.complete:
            return UNKNOWN
        if y not in orbit.index:
            return ClassSize("finite", 0)
        j = orbit.index[y]
        if self._analytic_cyclic(y) if self._has_analytic_cycles else orbit.is_cyclic(j):
            return INFINITE
        return ClassSize("finite", _count_class(orbit, j, self.d))

    _has_analytic_cycles = False

    def _analytic_cyclic(self, y) -> bool:
        raise NotImplementedError

    def validate(self) -> ValidationReport:
        report = ValidationReport(self.describe())
        self._validate_backend(report)
        self._isomorphism_probe(report)
        return report

    def _validate_backend(self, report: ValidationReport) -> None:
        raise NotImplementedError

    def probe_points(self) -> list:
        raise NotImplementedError

    def _isomorphism_probe(self, report: ValidationReport) -> None:
        probes = self.probe_points()
        seen: dict[tuple, SemigroupElement] = {}
        for exps in iter_lex((3,) * self.d):
            s = SemigroupElement(exps)
            sig = tuple(self.apply(s, p) for p in probes)
            if sig in seen:
                report.warnings.append(
                    f"sigma is not injective on S: {list(seen[sig].exps)} and {list(exps)} agree on every probe point"
                )
                return
            seen[sig] = s

    def describe(self) -> str:
        return self.kind

    def validated(self) -> "DynSystem":
        report = self.validate()
        if not report.ok:
            raise ValidationError(report)
        return self

    # sampling helpers used by the check suites
    def sample_point(self, rng: random.Random):
        raise NotImplementedError

    def sample_function(self, rng: random.Random) -> FunctionElement:
        raise NotImplementedError


def _gauss_int(rng: random.Random, r: int = 3) -> complex:
    while True:
        c = complex(rng.randint(-r, r), rng.randint(-r, r))
        if c != 0:
            return c


def _count_class(orbit: OrbitSet, j: int, d: int) -> int:
    """|{s : sigma_s(x) = points[j]}| for a non-cyclic target.

    Any s in the class has |s|_1 < |orbit|: a longer lattice path repeats a
    point, which would then be cyclic and make the class infinite.
    """
    n = len(orbit.points)
    level = {SemigroupElement.zero(d): 0}
    count = int(j == 0)
    for _ in range(n - 1):
        nxt = {}
        for s, k in level.items():
            for i in range(d):
                e = list(s.exps)
                e[i] += 1
                nxt[SemigroupElement(tuple(e))] = orbit.step(k, i)
        level = nxt
        count += sum(1 for k in level.values() if k == j)
    return count


class FiniteSystem(DynSystem):
    """Commuting maps of a finite label set (validated to be bijections)."""

    kind = "finite"

    def __init__(self, labels: Sequence[str], maps: Sequence[dict]):
        self.labels = tuple(labels)
        self.maps = tuple({str(k): str(v) for k, v in m.items()} for m in maps)
        self.d = len(self.maps)
        if self.d < 1:
            raise ValueError("need at least one generator")
        for m in self.maps:
            if set(m) != set(self.labels) or not set(m.values()) <= set(self.labels):
                raise ValueError("each map must be a total function on the label set")
        self._inverse = [
            {y: sorted(z for z in self.labels if m[z] == y) for y in self.labels} for m in self.maps
        ]

    def describe(self):
        return f"finite(labels={len(self.labels)}, d={self.d})"

    def apply_gen(self, i, x):
        return FiniteLabel(self.maps[i][x.label])

    def gen_preimages(self, i, y):
        return [FiniteLabel(z) for z in self._inverse[i][y.label]]

    def degree(self, i):
        return 1

    def pull_gen(self, f, i):
        if not isinstance(f, FiniteTable):
            raise UnsupportedComposition("finite backend composes table functions only")
        return FiniteTable({z: f.values[self.maps[i][z]] for z in self.labels})

    def constant(self, c):
        return FiniteTable({z: c for z in self.labels})

    def parse_point(self, text):
        text = text.strip()
        if text not in self.labels:
            raise ValueError(f"unknown label {text!r}")
        return FiniteLabel(text)

    def probe_points(self):
        return [FiniteLabel(z) for z in self.labels]

    def _validate_backend(self, report):
        labels = self.labels
        for i, j in itertools.combinations(range(self.d), 2):
            bad = [z for z in labels if self.maps[i][self.maps[j][z]] != self.maps[j][self.maps[i][z]]]
            report.add(
                "commutativity",
                not bad,
                f"generators {i},{j} commute" if not bad else f"generators {i},{j} do not commute at {bad[0]}",
                "exhaustive",
            )
        for i, m in enumerate(self.maps):
            uncovered = sorted(set(labels) - set(m.values()))
            report.add(
                "surjectivity",
                not uncovered,
                f"generator {i} is a bijection" if not uncovered else f"generator {i} misses label {uncovered[0]}",
                "exhaustive",
            )

    def sample_point(self, rng):
        return FiniteLabel(rng.choice(self.labels))

    def sample_function(self, rng):
        return FiniteTable({z: complex(rng.randint(-3, 3), rng.randint(-3, 3)) for z in self.labels})


def _integer_root(a: int) -> tuple[int, int]:
    """(r, k) with a = r**k and k maximal."""
    for k in range(int(math.log2(a)), 0, -1):
        r = round(a ** (1 / k))
        for c in (r - 1, r, r + 1):
            if c > 1 and c**k == a:
                return c, k
    return a, 1


class CircleSystem(DynSystem):
    """x -> a_i x mod 1 on the circle, acting on rational points."""

    kind = "circle"
    _has_analytic_cycles = True

    def __init__(self, multipliers: Sequence[int] = (2, 3)):
        self.multipliers = tuple(int(a) for a in multipliers)
        self.d = len(self.multipliers)
        if self.d < 1 or any(a < 2 for a in self.multipliers):
            raise ValueError("multipliers must be integers >= 2")

    def describe(self):
        return f"circle(multipliers={list(self.multipliers)})"

    def apply_gen(self, i, x):
        return CircleRational(x.value * self.multipliers[i])

    def gen_preimages(self, i, y):
        a = self.multipliers[i]
        return [CircleRational((y.value + j) / a) for j in range(a)]

    def degree(self, i):
        return self.multipliers[i]

    def pull_gen(self, f, i):
        if not isinstance(f, TrigPoly):
            raise UnsupportedComposition("circle backend composes trigonometric polynomials only")
        return f.dilate(self.multipliers[i])

    def constant(self, c):
        return TrigPoly({0: c})

    def parse_point(self, text):
        return CircleRational(Fraction(text.strip()))

    def _analytic_cyclic(self, y) -> bool:
        # a^u y = y mod 1 for some u != 0 iff some multiplier is a unit mod den(y)
        q = y.value.denominator
        return any(math.gcd(q, a) == 1 for a in self.multipliers)

    def probe_points(self):
        return [CircleRational(Fraction(1, 1_000_003)), CircleRational(Fraction(2, 999_983))]

    def _validate_backend(self, report):
        report.add("commutativity", True, "multiplication maps commute", "analytic")
        report.add("surjectivity", True, "x -> a x mod 1 is onto for a >= 2", "certified (analytic)")
        roots = [_integer_root(a)[0] for a in self.multipliers]
        for i, j in itertools.combinations(range(self.d), 2):
            if roots[i] == roots[j]:
                report.warnings.append(
                    f"multipliers {self.multipliers[i]} and {self.multipliers[j]} are multiplicatively dependent"
                )

    def sample_point(self, rng):
        q = rng.choice([3, 5, 6, 7, 9, 10, 11, 12, 13, 15])
        return CircleRational(Fraction(rng.randrange(q), q))

    def sample_function(self, rng):
        ks = rng.sample(range(-3, 4), rng.randint(1, 3))
        return TrigPoly({k: _gauss_int(rng) for k in ks})


class ShiftSystem(DynSystem):
    """Commuting one-sided block maps of the full shift on k letters.

    The first generator is the one-step shift unless ``generators`` says
    otherwise.
    """

    kind = "shift"

    def __init__(self, k: int = 2, generators: Optional[Sequence[BlockMap]] = None):
        self.k = int(k)
        if self.k < 2:
            raise ValueError("alphabet must have at least two letters")
        self.generators = tuple(generators) if generators else (BlockMap.shift(self.k),)
        if any(g.k != self.k for g in self.generators):
            raise ValueError("block maps over a different alphabet")
        self.d = len(self.generators)

    def describe(self):
        names = [g.name or f"span{g.span}" for g in self.generators]
        return f"shift(k={self.k}, generators={names})"

    def apply_gen(self, i, x):
        return self.generators[i].apply_word(x)

    def gen_preimages(self, i, y):
        if not self.generators[i].is_shift:
            raise UnsupportedFiber(f"preimages only along the shift; generator {i} is a general block map")
        return [y.prepend(a) for a in range(self.k)]

    def degree(self, i):
        if not self.generators[i].is_shift:
            raise UnsupportedFiber(f"degree of block map generator {i} not computed")
        return self.k

    def pull_gen(self, f, i):
        if not isinstance(f, CylinderFn):
            raise UnsupportedComposition("shift backend composes cylinder functions only")
        g = self.generators[i]
        if f.depth == 0:
            return f
        depth = f.depth + g.span - 1
        table = {}
        for w in itertools.product(range(self.k), repeat=depth):
            v = f.value(g.image_block(w))
            if v != 0:
                table[w] = v
        return CylinderFn(depth, self.k, table)

    def constant(self, c):
        return CylinderFn(0, self.k, {(): c})

    def parse_point(self, text):
        x = EvPeriodicWord.parse(text)
        if any(a >= self.k for a in x.pre + x.per):
            raise ValueError(f"word {text!r} uses letters outside the alphabet")
        return x

    def probe_points(self):
        rng = random.Random(7)
        return [
            EvPeriodicWord(tuple(rng.randrange(self.k) for _ in range(5)), tuple(rng.randrange(self.k) for _ in range(11)))
            for _ in range(4)
        ]

    def _validate_backend(self, report):
        for i, j in itertools.combinations(range(self.d), 2):
            f, g = self.generators[i], self.generators[j]
            ok = f.compose(g).rule == g.compose(f).rule
            report.add(
                "commutativity",
                ok,
                f"generators {i},{j} commute" if ok else f"generators {i},{j} do not commute",
                "exact (composed local rules)",
            )
        for i, g in enumerate(self.generators):
            ok, method = g.surjectivity()
            report.add(
                "surjectivity",
                ok,
                f"generator {i} is onto" if ok else f"generator {i} is not onto",
                method,
            )

    def sample_point(self, rng):
        pre = tuple(rng.randrange(self.k) for _ in range(rng.randint(0, 2)))
        per = tuple(rng.randrange(self.k) for _ in range(rng.randint(1, 3)))
        return EvPeriodicWord(pre, per)

    def sample_function(self, rng):
        depth = rng.randint(0, 2)
        words = list(itertools.product(range(self.k), repeat=depth))
        chosen = rng.sample(words, rng.randint(1, len(words)))
        return CylinderFn(depth, self.k, {w: _gauss_int(rng) for w in chosen})


def apply(sys: DynSystem, s, x):
    return sys.apply(s, x)


def orbit(sys: DynSystem, x, bound: int = DEFAULT_ORBIT_BOUND) -> OrbitSet:
    return sys.orbit(x, bound)


def fiber(sys: DynSystem, t, y) -> list:
    return sys.fiber(t, y)


def equivalence_classes(sys: DynSystem, x, w: Window):
    return sys.equivalence_classes(x, w)


def class_finiteness(sys: DynSystem, x, y, bound: int = DEFAULT_ORBIT_BOUND) -> ClassSize:
    return sys.class_finiteness(x, y, bound)


def validate(sys: DynSystem) -> ValidationReport:
    return sys.validate()


__all__ = [
    "BlockMap", "CircleRational", "CircleSystem", "ClassSize", "DynSystem", "EvPeriodicWord",
    "FiniteLabel", "FiniteSystem", "INFINITE", "OrbitSet", "ShiftSystem", "UNKNOWN",
    "UnsupportedComposition", "UnsupportedFiber", "ValidationError", "ValidationReport",
    "apply", "class_finiteness", "equivalence_classes", "fiber", "orbit", "validate",
]
