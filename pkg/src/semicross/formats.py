"""Text formats: system files, element files and function literals.

System file (configparser sections)::

    [system]
    backend = circle          ; circle | shift | finite
    point = 1/3               ; optional default base point

    [circle]
    multipliers = 2, 3

    [shift]
    alphabet = 2
    generators = shift, flip  ; built-ins: shift, shiftN (N-step shift)

    [block flip]
    span = 1
    rule = 10                 ; images of the words of length span, lexicographic

    [finite]
    labels = a, b, c
    generators = rot

    [map rot]
    a = b
    b = c
    c = a

Element file: one term per line (``#`` starts a comment)::

    term { s = [1]; f = trig{1:1} }
    term { g = [-1]; f = cyl{1; 0:5, 1:7}; offset = [1] }
    cocycle = jacobian

Function literals: ``table{a:1+0i, b:2}``, ``trig{k:re+imi, ...}``,
``cyl{m; word:value, ...}``.
"""

from __future__ import annotations

import configparser
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .cocycle import Cocycle, ConstantJacobian, ExplicitTable
from .dynsys import (
    BlockMap,
    CircleSystem,
    DynSystem,
    FiniteSystem,
    ShiftSystem,
    ValidationError,
)
from .funcalg import CylinderFn, FiniteTable, FunctionElement, TrigPoly


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None, field: Optional[str] = None, path: Optional[str] = None):
        where = []
        if path:
            where.append(str(path))
        if line is not None:
            where.append(f"line {line}")
        if field:
            where.append(f"field {field!r}")
        super().__init__(f"{': '.join([', '.join(where), message]) if where else message}")
        self.line = line
        self.field = field
        self.path = path


_NUMBER = r"[-+]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][-+]?\d+)?"


def parse_number(text: str):
    """``3``, ``-1.5``, ``2+3i``, ``-i``, ``0.5i`` -> int, float or complex."""
    text = text.strip()
    if not text:
        raise ValueError("empty number")
    if "i" not in text:
        try:
            return int(text)
        except ValueError:
            return float(text)
    m = re.fullmatch(rf"({_NUMBER})?\s*([-+])?\s*({_NUMBER})?\s*i", text)
    if not m:
        raise ValueError(f"bad complex literal {text!r}")
    re_part, sign, im_part = m.groups()
    if re_part is not None and sign is None:
        # "3i" parsed as real part "3" with no operator: the number is purely imaginary
        re_part, im_part, sign = None, re_part, "+"
    real = _num(re_part) if re_part else 0
    imag = _num(im_part) if im_part else 1
    if sign == "-":
        imag = -imag
    return complex(real, imag)


def _num(text: str):
    try:
        return int(text)
    except ValueError:
        return float(text)


def _split_entries(body: str) -> list[tuple[str, str]]:
    out = []
    for part in body.split(","):
        part = part.strip()
        if not part:
            continue
        if ":" not in part:
            raise ValueError(f"entry {part!r} lacks ':'")
        key, value = part.rsplit(":", 1)
        out.append((key.strip(), value.strip()))
    return out


def parse_function(text: str, sys: Optional[DynSystem] = None) -> FunctionElement:
    text = text.strip()
    m = re.fullmatch(r"(table|trig|cyl)\s*\{(.*)\}", text, re.S)
    if not m:
        raise ValueError(f"unknown function literal {text!r}")
    kind, body = m.groups()
    if kind == "table":
        values = {k: parse_number(v) for k, v in _split_entries(body)}
        if sys is not None and isinstance(sys, FiniteSystem):
            unknown = set(values) - set(sys.labels)
            if unknown:
                raise ValueError(f"table label {sorted(unknown)[0]!r} not in the system")
            values = {l: values.get(l, 0) for l in sys.labels}
        return FiniteTable(values)
    if kind == "trig":
        return TrigPoly({int(k): parse_number(v) for k, v in _split_entries(body)})
    head, sep, rest = body.partition(";")
    if not sep:
        raise ValueError("cylinder literal needs 'depth; entries'")
    depth = int(head)
    k = sys.k if isinstance(sys, ShiftSystem) else None
    table = {}
    for word, v in _split_entries(rest):
        if len(word) != depth or (word and not word.isdigit()):
            raise ValueError(f"cylinder word {word!r} does not have length {depth}")
        table[tuple(int(a) for a in word)] = parse_number(v)
    if k is None:
        k = max((a for w in table for a in w), default=0) + 1
        k = max(k, 2)
    return CylinderFn(depth, k, table)


def parse_vector(text: str) -> tuple[int, ...]:
    m = re.fullmatch(r"\s*\[([^\]]*)\]\s*", text)
    if not m:
        raise ValueError(f"expected a vector like [1,0], got {text!r}")
    body = m.group(1).strip()
    return tuple(int(a) for a in body.split(",")) if body else ()


def parse_cocycle(text: str, sys: DynSystem) -> Cocycle:
    """``jacobian`` or ``table{gen, point: value; ...; *: default}``."""
    text = text.strip()
    if text == "jacobian":
        return ConstantJacobian()
    m = re.fullmatch(r"table\s*\{(.*)\}", text, re.S)
    if not m:
        raise ValueError(f"unknown cocycle literal {text!r}")
    table, default = {}, None
    for entry in m.group(1).split(";"):
        entry = entry.strip()
        if not entry:
            continue
        key, _, value = entry.rpartition(":")
        if key.strip() == "*":
            default = float(value)
            continue
        gen, _, point = key.partition(",")
        table[(int(gen), sys.parse_point(point))] = float(value)
    return ExplicitTable(table, default)


# -- system files ------------------------------------------------------------------------


def _locate(lines: list[str], section: str, key: Optional[str] = None) -> Optional[int]:
    current = None
    for n, line in enumerate(lines, 1):
        stripped = line.strip()
        if stripped.startswith("[") and stripped.endswith("]"):
            current = stripped[1:-1].strip()
            if key is None and current == section:
                return n
            continue
        if current == section and key is not None:
            name = re.split(r"[=:]", stripped, maxsplit=1)[0].strip()
            if name == key:
                return n
    return None


@dataclass
class SystemSpec:
    system: DynSystem
    point: object = None
    path: Optional[str] = None
    report: object = None


def parse_system_text(text: str, path: Optional[str] = None, validate: bool = True) -> SystemSpec:
    lines = text.splitlines()
    cp = configparser.ConfigParser(inline_comment_prefixes=(";", "#"), interpolation=None)
    cp.optionxform = str
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        line = getattr(exc, "lineno", None)
        raise ParseError(str(exc).splitlines()[0], line, path=path) from None

    def need(section: str, key: str) -> str:
        if not cp.has_section(section):
            raise ParseError(f"missing section [{section}]", path=path)
        if not cp.has_option(section, key):
            raise ParseError(f"missing key {key!r}", _locate(lines, section), f"{section}.{key}", path)
        return cp.get(section, key)

    def fail(section: str, key: str, message: str):
        raise ParseError(message, _locate(lines, section, key), f"{section}.{key}", path)

    backend = need("system", "backend").strip()
    if backend == "circle":
        raw = need("circle", "multipliers")
        try:
            mults = [int(a) for a in raw.split(",")]
            sys = CircleSystem(mults)
        except ValueError as exc:
            fail("circle", "multipliers", str(exc))
    elif backend == "shift":
        try:
            k = int(need("shift", "alphabet"))
        except ValueError:
            fail("shift", "alphabet", "alphabet must be an integer")
        names = [n.strip() for n in (cp.get("shift", "generators") if cp.has_option("shift", "generators") else "shift").split(",")]
        gens = []
        for name in names:
            m = re.fullmatch(r"shift(\d*)", name)
            if m:
                n = int(m.group(1) or 1)
                gens.append(BlockMap.from_function(k, n + 1, lambda w, n=n: w[n], name))
                continue
            sec = f"block {name}"
            if not cp.has_section(sec):
                fail("shift", "generators", f"generator {name!r} has no [block {name}] section")
            try:
                span = int(need(sec, "span"))
                raw = need(sec, "rule")
                rule = tuple(int(a) for a in (raw.split(",") if "," in raw else raw.replace(" ", "")))
                gens.append(BlockMap(k, span, rule, name))
            except ValueError as exc:
                fail(sec, "rule", str(exc))
        try:
            sys = ShiftSystem(k, gens)
        except ValueError as exc:
            fail("shift", "generators", str(exc))
    elif backend == "finite":
        labels = [a.strip() for a in need("finite", "labels").split(",") if a.strip()]
        names = [n.strip() for n in need("finite", "generators").split(",")]
        maps = []
        for name in names:
            sec = f"map {name}"
            if not cp.has_section(sec):
                fail("finite", "generators", f"generator {name!r} has no [map {name}] section")
            table = dict(cp.items(sec))
            for key, value in table.items():
                if key not in labels:
                    fail(sec, key, f"unknown label {key!r}")
                if value.strip() not in labels:
                    fail(sec, key, f"image {value.strip()!r} is not a label")
            missing = [l for l in labels if l not in table]
            if missing:
                raise ParseError(f"map {name!r} does not define label {missing[0]!r}", _locate(lines, sec), sec, path)
            maps.append({k: v.strip() for k, v in table.items()})
        sys = FiniteSystem(labels, maps)
    else:
        fail("system", "backend", f"unknown backend {backend!r}")

    point = None
    if cp.has_option("system", "point"):
        try:
            point = sys.parse_point(cp.get("system", "point"))
        except ValueError as exc:
            fail("system", "point", str(exc))
    spec = SystemSpec(sys, point, path)
    if validate:
        report = sys.validate()
        spec.report = report
        if not report.ok:
            raise ValidationError(report)
    return spec


def parse_system(path) -> SystemSpec:
    path = Path(path)
    return parse_system_text(path.read_text(), str(path))


# -- element files --------------------------------------------------------------------------


@dataclass
class ElementSpec:
    terms: list = field(default_factory=list)  # (kind 's' | 'g', vector, function, offset)
    cocycle: Optional[str] = None

    def symbolic(self, sys: DynSystem):
        from .repn import SymbolicElement

        out = SymbolicElement(sys)
        for kind, vec, f, offset in self.terms:
            if kind != "s" or offset is not None:
                raise ValueError("element has group or offset terms; it is not in A0")
            out = out + SymbolicElement.mono(sys, vec, f)
        return out

    def crossed_terms(self, sys: DynSystem):
        from .envelope import DepthTaggedFunction

        return [(vec, DepthTaggedFunction(f, offset or (0,) * sys.d)) for _, vec, f, offset in self.terms]


_TERM = re.compile(r"term\s*\{(.*)\}\s*$")


def parse_element_text(text: str, sys: DynSystem, path: Optional[str] = None) -> ElementSpec:
    spec = ElementSpec()
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("cocycle"):
            key, _, value = line.partition("=")
            if key.strip() != "cocycle" or not value.strip():
                raise ParseError("expected 'cocycle = <literal>'", n, "cocycle", path)
            try:
                parse_cocycle(value, sys)
            except ValueError as exc:
                raise ParseError(str(exc), n, "cocycle", path) from None
            spec.cocycle = value.strip()
            continue
        m = _TERM.match(line)
        if not m:
            raise ParseError("expected 'term { ... }'", n, path=path)
        fields = {}
        for part in _split_fields(m.group(1)):
            key, sep, value = part.partition("=")
            if not sep:
                raise ParseError(f"malformed field {part.strip()!r}", n, path=path)
            fields[key.strip()] = value.strip()
        kind = "s" if "s" in fields else "g" if "g" in fields else None
        if kind is None:
            raise ParseError("term needs s = [...] or g = [...]", n, path=path)
        try:
            vec = parse_vector(fields[kind])
        except ValueError as exc:
            raise ParseError(str(exc), n, kind, path) from None
        if len(vec) != sys.d:
            raise ParseError(f"vector has {len(vec)} entries, system has d={sys.d}", n, kind, path)
        if kind == "s" and any(e < 0 for e in vec):
            raise ParseError("semigroup exponents must be >= 0", n, "s", path)
        if "f" not in fields:
            raise ParseError("term needs f = <function literal>", n, "f", path)
        try:
            f = parse_function(fields["f"], sys)
        except ValueError as exc:
            raise ParseError(str(exc), n, "f", path) from None
        offset = None
        if "offset" in fields:
            try:
                offset = parse_vector(fields["offset"])
            except ValueError as exc:
                raise ParseError(str(exc), n, "offset", path) from None
        spec.terms.append((kind, vec, f, offset))
    return spec


def _split_fields(body: str) -> list[str]:
    """Split on ';' outside braces."""
    parts, depth, cur = [], 0, []
    for ch in body:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        if ch == ";" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if "".join(cur).strip():
        parts.append("".join(cur))
    return parts


def parse_element(path, sys: DynSystem) -> ElementSpec:
    path = Path(path)
    return parse_element_text(path.read_text(), sys, str(path))
