"""Exact stand-ins for C(X): finite tables, trigonometric polynomials, cylinder functions.

Coefficients are ordinary Python numbers. With Gaussian-integer or
``Fraction`` data every algebra operation is exact; evaluation at a point
returns a ``complex``.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from numbers import Number
from typing import Mapping

import numpy as np

from .semigroup import turn


class VariantMismatch(TypeError):
    pass


class BackendMismatch(TypeError):
    pass


class FunctionElement:
    """Base class; concrete variants implement the pointwise *-algebra."""

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self.scale(-1)

    def __rmul__(self, c):
        if isinstance(c, Number):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Number):
            return self.scale(other)
        return self._multiply(other)

    def _require_same(self, other):
        if type(other) is not type(self):
            raise VariantMismatch(f"{type(self).__name__} vs {type(other).__name__}")


def _clean(d: Mapping) -> dict:
    return {k: v for k, v in d.items() if v != 0}


class FiniteTable(FunctionElement):
    """A function on a finite label set, stored as its full value table."""

    __slots__ = ("values",)

    def __init__(self, values: Mapping[str, Number]):
        self.values = dict(values)

    @property
    def labels(self) -> frozenset:
        return frozenset(self.values)

    def _check_labels(self, other):
        self._require_same(other)
        if self.labels != other.labels:
            raise BackendMismatch("tables over different label sets")

    def _combine(self, other, op):
        self._check_labels(other)
        return FiniteTable({k: op(v, other.values[k]) for k, v in self.values.items()})

    def _multiply(self, other):
        return self._combine(other, lambda a, b: a * b)

    def scale(self, c):
        return FiniteTable({k: c * v for k, v in self.values.items()})

    def conj(self):
        return FiniteTable({k: v.conjugate() for k, v in self.values.items()})

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values.values())

    def __eq__(self, other):
        return isinstance(other, FiniteTable) and self.values == other.values

    def __repr__(self):
        inner = ", ".join(f"{k}:{v}" for k, v in sorted(self.values.items()))
        return f"table{{{inner}}}"


class TrigPoly(FunctionElement):
    """sum_k c_k exp(2 pi i k x) on the circle R/Z."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, Number]):
        self.coeffs = _clean({int(k): v for k, v in coeffs.items()})

    def _combine(self, other, op):
        self._require_same(other)
        keys = set(self.coeffs) | set(other.coeffs)
        return TrigPoly({k: op(self.coeffs.get(k, 0), other.coeffs.get(k, 0)) for k in keys})

    def _multiply(self, other):
        self._require_same(other)
        out: dict[int, Number] = {}
        for (j, a), (k, b) in itertools.product(self.coeffs.items(), other.coeffs.items()):
            out[j + k] = out.get(j + k, 0) + a * b
        return TrigPoly(out)

    def scale(self, c):
        return TrigPoly({k: c * v for k, v in self.coeffs.items()})

    def conj(self):
        return TrigPoly({-k: v.conjugate() for k, v in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def dilate(self, a: int) -> "TrigPoly":
        """f(a x): frequencies multiply by ``a``."""
        return TrigPoly({a * k: v for k, v in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, TrigPoly) and self.coeffs == other.coeffs

    def __repr__(self):
        inner = ", ".join(f"{k}:{v}" for k, v in sorted(self.coeffs.items()))
        return f"trig{{{inner}}}"


class CylinderFn(FunctionElement):
    """A function on A^N depending only on the first ``depth`` letters.

    Words missing from ``table`` have value 0. Operations on functions of
    different depths refine the shallower one first.
    """

    __slots__ = ("depth", "k", "table")

    def __init__(self, depth: int, k: int, table: Mapping[tuple, Number]):
        if depth < 0 or k < 1:
            raise ValueError("cylinder depth must be >= 0 and alphabet size >= 1")
        self.depth = int(depth)
        self.k = int(k)
        cleaned = {}
        for word, v in table.items():
            word = tuple(word)
            if len(word) != depth or any(not 0 <= a < k for a in word):
                raise ValueError(f"bad cylinder word {word} for depth {depth}, alphabet {k}")
            if v != 0:
                cleaned[word] = v
        self.table = cleaned

    def words(self):
        return itertools.product(range(self.k), repeat=self.depth)

    def value(self, word) -> Number:
        return self.table.get(tuple(word[: self.depth]), 0)

    def refine(self, depth: int) -> "CylinderFn":
        if depth < self.depth:
            raise ValueError("cannot refine to a shallower depth")
        if depth == self.depth:
            return self
        table = {}
        for word, v in self.table.items():
            for tail in itertools.product(range(self.k), repeat=depth - self.depth):
                table[word + tail] = v
        return CylinderFn(depth, self.k, table)

    def _aligned(self, other):
        self._require_same(other)
        if self.k != other.k:
            raise BackendMismatch("cylinder functions over different alphabets")
        m = max(self.depth, other.depth)
        return self.refine(m), other.refine(m)

    def _combine(self, other, op):
        a, b = self._aligned(other)
        keys = set(a.table) | set(b.table)
        return CylinderFn(a.depth, a.k, {w: op(a.table.get(w, 0), b.table.get(w, 0)) for w in keys})

    def _multiply(self, other):
        a, b = self._aligned(other)
        keys = set(a.table) & set(b.table)
        return CylinderFn(a.depth, a.k, {w: a.table[w] * b.table[w] for w in keys})

    def scale(self, c):
        return CylinderFn(self.depth, self.k, {w: c * v for w, v in self.table.items()})

    def conj(self):
        return CylinderFn(self.depth, self.k, {w: v.conjugate() for w, v in self.table.items()})

    def is_zero(self) -> bool:
        return not self.table

    def __eq__(self, other):
        if not isinstance(other, CylinderFn) or self.k != other.k:
            return False
        a, b = self._aligned(other)
        return a.table == b.table

    def __repr__(self):
        inner = ", ".join("".join(map(str, w)) + f":{v}" for w, v in sorted(self.table.items()))
        return f"cyl{{{self.depth}; {inner}}}"


def add(f: FunctionElement, g: FunctionElement) -> FunctionElement:
    return f + g


def mul(f: FunctionElement, g: FunctionElement) -> FunctionElement:
    return f * g


def conj(f: FunctionElement) -> FunctionElement:
    return f.conj()


def abs_squared(f: FunctionElement) -> FunctionElement:
    return f.conj() * f


def evaluate(f: FunctionElement, x) -> complex:
    """Point evaluation; ``x`` must be a point of the matching backend."""
    # Imported lazily: points live in dynsys, which imports this module.
    from .dynsys import CircleRational, EvPeriodicWord, FiniteLabel

    if isinstance(f, FiniteTable):
        if not isinstance(x, FiniteLabel):
            raise BackendMismatch(f"table function evaluated at {x!r}")
        try:
            return complex(f.values[x.label])
        except KeyError:
            raise KeyError(f"label {x.label!r} not in table") from None
    if isinstance(f, TrigPoly):
        if not isinstance(x, CircleRational):
            raise BackendMismatch(f"trigonometric polynomial evaluated at {x!r}")
        p, q = x.value.numerator, x.value.denominator
        return complex(sum(c * turn(Fraction(k * p % q, q)) for k, c in f.coeffs.items()))
    if isinstance(f, CylinderFn):
        if not isinstance(x, EvPeriodicWord):
            raise BackendMismatch(f"cylinder function evaluated at {x!r}")
        if any(a >= f.k for a in x.pre + x.per):
            raise BackendMismatch("word and cylinder function over different alphabets")
        return complex(f.value(x.prefix(f.depth)))
    raise TypeError(f"unknown function variant {type(f).__name__}")


def pullback(f: FunctionElement, s, sys) -> FunctionElement:
    """f o sigma_s, computed one generator at a time."""
    return sys.pullback(f, s)


SUP_GRID = 1024


def sup_norm_bounds(f: FunctionElement) -> tuple[float, float]:
    """(lower, upper) with lower <= ||f||_inf <= upper."""
    if isinstance(f, FiniteTable):
        v = max((abs(complex(c)) for c in f.values.values()), default=0.0)
        return v, v
    if isinstance(f, CylinderFn):
        v = max((abs(complex(c)) for c in f.table.values()), default=0.0)
        return v, v
    if isinstance(f, TrigPoly):
        if not f.coeffs:
            return 0.0, 0.0
        upper = float(sum(abs(complex(c)) for c in f.coeffs.values()))
        if set(f.coeffs) == {0}:
            return upper, upper
        xs = np.arange(SUP_GRID) / SUP_GRID
        ks = np.array(list(f.coeffs))
        cs = np.array([complex(c) for c in f.coeffs.values()])
        vals = np.exp(2j * math.pi * np.outer(xs, ks)) @ cs
        return float(np.max(np.abs(vals))), upper
    raise TypeError(f"unknown function variant {type(f).__name__}")
