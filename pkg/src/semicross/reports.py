"""Small report container shared by every check suite."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Optional


def _plain(value):
    """Coerce numbers and containers into JSON-friendly values."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        if math.isnan(value) or math.isinf(value):
            return repr(value)
        return float(f"{value:.15g}")
    if isinstance(value, complex):
        return [_plain(value.real), _plain(value.imag)]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if hasattr(value, "exps"):
        return list(value.exps)
    try:
        return float(value)
    except (TypeError, ValueError):
        return str(value)


@dataclass
class Check:
    name: str
    anchor: str
    passed: bool
    value: Optional[float] = None
    tol: Optional[float] = None
    detail: str = ""
    witness: Any = None

    def as_dict(self) -> dict:
        out = {"check": self.name, "anchor": self.anchor, "passed": self.passed}
        if self.value is not None:
            out["value"] = _plain(self.value)
        if self.tol is not None:
            out["tol"] = self.tol
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = _plain(self.witness)
        return out


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)
    data: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, anchor: str, passed: bool, value=None, tol=None, detail: str = "", witness=None) -> Check:
        c = Check(name, anchor, bool(passed), value, tol, detail, witness)
        self.checks.append(c)
        return c

    def bound(self, name: str, anchor: str, value: float, tol: float, detail: str = "", witness=None) -> Check:
        """Record a check of the form value <= tol."""
        return self.add(name, anchor, value <= tol, value, tol, detail, witness)

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.anchor, c.passed, c.value, c.tol, c.detail, c.witness))
        self.notes.extend(other.notes)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def as_dict(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": [c.as_dict() for c in self.checks],
            "data": _plain(self.data),
            "notes": list(self.notes),
        }
