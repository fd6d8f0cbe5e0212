"""Lattice arithmetic for S = Z_+^d, its group G = Z^d, windows and characters."""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

DEFAULT_WINDOW_CAP = 4096


class DimensionMismatch(ValueError):
    pass


class WindowCapExceeded(ValueError):
    pass


def _check_dims(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise DimensionMismatch(f"dimension {len(a)} vs {len(b)}")


@dataclass(frozen=True, slots=True, order=True)
class GroupElement:
    exps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exps", tuple(int(e) for e in self.exps))

    @property
    def d(self) -> int:
        return len(self.exps)

    @classmethod
    def zero(cls, d: int) -> "GroupElement":
        return cls((0,) * d)

    def __add__(self, other: "GroupElement") -> "GroupElement":
        _check_dims(self.exps, other.exps)
        return GroupElement(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __neg__(self) -> "GroupElement":
        return GroupElement(tuple(-a for a in self.exps))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def in_semigroup(self) -> bool:
        return all(e >= 0 for e in self.exps)

    def to_semigroup(self) -> "SemigroupElement":
        return SemigroupElement(self.exps)

    def __repr__(self) -> str:
        return f"g{list(self.exps)}"


@dataclass(frozen=True, slots=True, order=True)
class SemigroupElement:
    """An element of Z_+^d, stored as its exponent vector."""

    exps: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exps)
        if any(e < 0 for e in exps):
            raise ValueError(f"semigroup exponents must be >= 0, got {exps}")
        object.__setattr__(self, "exps", exps)

    @property
    def d(self) -> int:
        return len(self.exps)

    @classmethod
    def zero(cls, d: int) -> "SemigroupElement":
        return cls((0,) * d)

    @classmethod
    def unit(cls, d: int, i: int, k: int = 1) -> "SemigroupElement":
        exps = [0] * d
        exps[i] = k
        return cls(tuple(exps))

    def is_zero(self) -> bool:
        return not any(self.exps)

    def __add__(self, other: "SemigroupElement") -> "SemigroupElement":
        if isinstance(other, GroupElement):
            return NotImplemented
        return add(self, other)

    def as_group(self) -> GroupElement:
        return GroupElement(self.exps)

    def __repr__(self) -> str:
        return f"s{list(self.exps)}"


def add(s: SemigroupElement, t: SemigroupElement) -> SemigroupElement:
    _check_dims(s.exps, t.exps)
    return SemigroupElement(tuple(a + b for a, b in zip(s.exps, t.exps)))


def subtract_if_succ(t: SemigroupElement, s: SemigroupElement) -> Optional[SemigroupElement]:
    """Return ``u`` with ``t = u + s`` if it exists in S, else ``None``."""
    _check_dims(t.exps, s.exps)
    diff = tuple(a - b for a, b in zip(t.exps, s.exps))
    if any(e < 0 for e in diff):
        return None
    return SemigroupElement(diff)


def as_element(value, d: Optional[int] = None) -> SemigroupElement:
    """Coerce an int, a sequence or an element into a ``SemigroupElement``."""
    if isinstance(value, SemigroupElement):
        return value
    if isinstance(value, GroupElement):
        return value.to_semigroup()
    if isinstance(value, int):
        if d is None or d == 1:
            return SemigroupElement((value,))
        raise DimensionMismatch(f"scalar {value} given for d={d}")
    return SemigroupElement(tuple(value))


@dataclass(frozen=True)
class Window:
    """The box {0..N_1} x ... x {0..N_d} of S, optionally with a group box {-M..M}^d.

    With ``cyclic=True`` the box is read as the torus Z/(N_1+1) x ... and
    translations wrap around; see :meth:`translate`.
    """

    bounds: tuple[int, ...]
    group_radius: Optional[int] = None
    cyclic: bool = False
    cap: int = field(default=DEFAULT_WINDOW_CAP, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "bounds", tuple(int(b) for b in self.bounds))
        if not self.bounds or any(b < 1 for b in self.bounds):
            raise ValueError(f"window bounds must be >= 1, got {self.bounds}")

    @classmethod
    def cube(cls, d: int, n: int, **kw) -> "Window":
        return cls((n,) * d, **kw)

    @property
    def d(self) -> int:
        return len(self.bounds)

    @property
    def size(self) -> int:
        return math.prod(b + 1 for b in self.bounds)

    def __contains__(self, s) -> bool:
        exps = s.exps if hasattr(s, "exps") else tuple(s)
        return len(exps) == self.d and all(0 <= e <= b for e, b in zip(exps, self.bounds))

    def doubled(self) -> "Window":
        """The box with twice as many elements along each axis."""
        return Window(tuple(2 * b + 1 for b in self.bounds), self.group_radius, self.cyclic, self.cap)

    def translate(self, s: SemigroupElement, t: SemigroupElement) -> Optional[SemigroupElement]:
        """``s + t`` inside the window: wrapped when cyclic, ``None`` when it falls off the box."""
        u = add(s, t)
        if self.cyclic:
            return SemigroupElement(tuple(e % (b + 1) for e, b in zip(u.exps, self.bounds)))
        return u if u in self else None

    def interior(self, support: Iterable[SemigroupElement]) -> list[SemigroupElement]:
        """Window elements u with u + s inside the window for every s in ``support``."""
        support = list(support)
        if self.cyclic:
            return enumerate_window(self)
        return [u for u in enumerate_window(self) if all(add(u, s) in self for s in support)]


def enumerate_window(w: Window) -> list[SemigroupElement]:
    if w.size > w.cap:
        raise WindowCapExceeded(f"window has {w.size} elements, cap is {w.cap}")
    return [SemigroupElement(e) for e in itertools.product(*(range(b + 1) for b in w.bounds))]


def enumerate_group_box(w: Window) -> list[GroupElement]:
    if w.group_radius is None:
        raise ValueError("window has no group box")
    m = w.group_radius
    count = (2 * m + 1) ** w.d
    if count > w.cap:
        raise WindowCapExceeded(f"group box has {count} elements, cap is {w.cap}")
    return [GroupElement(e) for e in itertools.product(range(-m, m + 1), repeat=w.d)]


def window_index(w: Window) -> dict[SemigroupElement, int]:
    return {s: i for i, s in enumerate(enumerate_window(w))}


@dataclass(frozen=True, slots=True)
class Character:
    """A character of Z^d given by rational angles in turns."""

    angles: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "angles", tuple(Fraction(a) % 1 for a in self.angles))

    @classmethod
    def trivial(cls, d: int) -> "Character":
        return cls((Fraction(0),) * d)

    @property
    def d(self) -> int:
        return len(self.angles)

    def phase(self, g) -> Fraction:
        exps = g.exps if hasattr(g, "exps") else tuple(g)
        _check_dims(self.angles, exps)
        return sum((a * e for a, e in zip(self.angles, exps)), Fraction(0)) % 1

    def __call__(self, g) -> complex:
        return turn(self.phase(g))

    def __add__(self, other: "Character") -> "Character":
        _check_dims(self.angles, other.angles)
        return Character(tuple(a + b for a, b in zip(self.angles, other.angles)))

    def __neg__(self) -> "Character":
        return Character(tuple(-a for a in self.angles))

    def is_trivial(self) -> bool:
        return not any(self.angles)


_QUARTER_TURNS = {Fraction(0): 1 + 0j, Fraction(1, 4): 1j, Fraction(1, 2): -1 + 0j, Fraction(3, 4): -1j}


def turn(theta: Fraction) -> complex:
    """exp(2 pi i theta) for a rational theta, exact at quarter turns."""
    theta = Fraction(theta) % 1
    exact = _QUARTER_TURNS.get(theta)
    if exact is not None:
        return exact
    return cmath.exp(2j * math.pi * float(theta))


def dft_characters(w: Window) -> list[Character]:
    """The grid of characters with angles k_j / (N_j + 1)."""
    grids = [[Fraction(k, b + 1) for k in range(b + 1)] for b in w.bounds]
    return [Character(angles) for angles in itertools.product(*grids)]


def iter_lex(bounds: Sequence[int]) -> Iterator[tuple[int, ...]]:
    return itertools.product(*(range(b + 1) for b in bounds))
