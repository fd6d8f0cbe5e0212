"""Batch front end: ``semicross COMMAND --system FILE [options]``.

Exit status is 0 when every check passed, 1 when a check failed or a
module raised a domain error (the record carries the witness), and 2 for
missing files, unparsable input or bad flags.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys as _sys
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import suites
from .dynsys import DynSystem, UnsupportedComposition, UnsupportedFiber, ValidationError
from .formats import ElementSpec, ParseError, parse_cocycle, parse_element, parse_system
from .reports import Report, _plain
from .semigroup import Character, SemigroupElement, Window

SCHEMA = 1

COMMANDS = (
    "validate", "orbit", "classes", "cocycle-check", "repn-check", "norm", "h0", "intertwine",
    "extend", "crossed-check", "dilation", "fock-check", "shilov", "all",
)


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    system_path: str
    element_path: Optional[str]
    window: Optional[str]
    depth: int
    point: Optional[str]
    char_grid: int
    n_points: int
    samples: int
    seed: int
    tol: float
    fmt: str
    out: Optional[str]
    dot: Optional[str]

    def echo(self) -> dict:
        return {
            "system": self.system_path, "element": self.element_path, "window": self.window, "depth": self.depth,
            "point": self.point, "char_grid": self.char_grid, "n_points": self.n_points, "samples": self.samples,
            "seed": self.seed, "tol": self.tol,
        }


def parse_window(text: Optional[str], d: int) -> Window:
    if text is None:
        return suites.default_window(d)
    try:
        bounds = tuple(int(a) for a in text.split(","))
    except ValueError:
        raise UsageError(f"--window expects integers like 8 or 4,4, got {text!r}") from None
    if len(bounds) == 1:
        bounds = bounds * d
    if len(bounds) != d:
        raise UsageError(f"--window needs {d} bounds, got {len(bounds)}")
    try:
        return Window(bounds)
    except ValueError as exc:
        raise UsageError(f"--window: {exc}") from None


# -- commands ---------------------------------------------------------------------------------


def _validate_report(sys: DynSystem) -> Report:
    v = sys.validate()
    r = Report(f"validate {sys.describe()}")
    for c in v.checks:
        r.add(c["check"], "continuous surjections that commute", c["passed"], detail=f"{c['detail']} [{c['method']}]")
    r.notes.extend(v.warnings)
    return r


def _orbit_report(sys: DynSystem, x, w: Window) -> tuple[Report, str]:
    orbit = sys.orbit(x)
    r = Report(f"orbit of {x}")
    r.add("complete", "orbit S(x) = {sigma_s(x)}", orbit.complete, len(orbit), detail="exploration bound not reached")
    rows = [{"index": j, "point": str(p), **{f"gen{i}": orbit.edges[j][i] for i in range(sys.d)}} for j, p in enumerate(orbit.points)]
    r.data["table"] = rows
    r.data["fully_recurrent"] = orbit.fully_recurrent()
    if orbit.fully_recurrent():
        r.data["periods"] = list(orbit.periods())
    wmap = orbit.window_map(w) if orbit.complete else {}
    r.data["window_reached"] = sorted({j for j in wmap.values()})
    lines = ["digraph orbit {"]
    for j, p in enumerate(orbit.points):
        lines.append(f'  n{j} [label="{p}"];')
    for j, row in enumerate(orbit.edges):
        for i, k in enumerate(row):
            if k >= 0:
                lines.append(f'  n{j} -> n{k} [label="e{i}"];')
    lines.append("}")
    return r, "\n".join(lines) + "\n"


def _classes_report(sys: DynSystem, x, w: Window) -> tuple[Report, str]:
    r = Report(f"classes of {x} on window {list(w.bounds)}")
    classes = sys.equivalence_classes(x, w)
    rows = []
    lines = ["graph classes {"]
    for n, (y, members) in enumerate(classes):
        size = sys.class_finiteness(x, y)
        rows.append({"point": str(y), "window_count": len(members), "class": size.kind,
                     "size": size.count if size.count is not None else "", "members": ";".join(str(list(s.exps)) for s in members)})
        lines.append(f'  subgraph cluster{n} {{ label="{y}"; ' + " ".join(f'"{list(s.exps)}";' for s in members) + " }")
    lines.append("}")
    r.add("partition", "s ~ t iff sigma_s(x) = sigma_t(x)", sum(len(m) for _, m in classes) == w.size, sum(len(m) for _, m in classes), w.size)
    r.data["table"] = rows
    return r, "\n".join(lines) + "\n"


def _fiber_dot(sys: DynSystem, x, depth: int) -> str:
    lines = ["digraph paths {", f'  "0:{x}" [label="{x}"];']
    level = [x]
    e0 = SemigroupElement.unit(sys.d, 0)
    for h in range(1, depth + 1):
        nxt = []
        for y in level:
            try:
                pre = sys.fiber(e0, y)
            except UnsupportedFiber:
                pre = []
            for z in pre:
                lines.append(f'  "{h}:{z}" [label="{z}"];')
                lines.append(f'  "{h}:{z}" -> "{h - 1}:{y}";')
                nxt.append(z)
        level = sorted(set(nxt), key=str)[:64]
    lines.append("}")
    return "\n".join(lines) + "\n"


def _elements(sys: DynSystem, spec: Optional[ElementSpec]):
    if spec is None:
        return []
    try:
        return [spec.symbolic(sys)]
    except ValueError:
        return []


def _cocycle_report(sys, cfg, x, spec: Optional[ElementSpec]) -> Report:
    from . import cocycle as co

    r = suites.cocycle_suite(sys, cfg, x)
    if spec is not None and spec.cocycle and spec.cocycle != "jacobian":
        r.extend(co.validate_cocycle(parse_cocycle(spec.cocycle, sys), sys, samples=cfg.samples, seed=cfg.seed), "file/")
    return r


def _crossed_report(sys, cfg, x, spec: Optional[ElementSpec]) -> Report:
    from . import envelope as env

    r = suites.crossed_suite(sys, cfg, x)
    if spec is not None and spec.terms:
        xx = x if x is not None else suites.sample_points(sys, cfg)[0]
        terms = spec.crossed_terms(sys)
        size = cfg.depth if sys.d == 1 else 1
        m = env.build_crossed_rep(sys, xx, Character.trivial(sys.d), size, size, terms)
        r.data["element_crossed_norm"] = m.norm()
        r.data["element_starved_columns"] = len(m.starved)
    return r


def _run(cmd: str, sys: DynSystem, cfg: suites.SuiteConfig, spec: Optional[ElementSpec], want_dot: bool) -> tuple[list[Report], Optional[str]]:
    x = cfg.point
    xx = x if x is not None else suites.sample_points(sys, cfg)[0]
    Fs = _elements(sys, spec)
    dot = None
    if cmd == "validate":
        out = [_validate_report(sys)]
    elif cmd == "orbit":
        r, dot = _orbit_report(sys, xx, cfg.window)
        out = [r]
    elif cmd == "classes":
        r, dot = _classes_report(sys, xx, cfg.window)
        out = [r]
    elif cmd == "cocycle-check":
        out = [_cocycle_report(sys, cfg, xx, spec)]
    elif cmd == "repn-check":
        out = [suites.covariance_suite(sys, cfg), suites.isometry_suite(sys, cfg), suites.expectation_suite(sys, cfg), suites.fourier_suite(sys, cfg)]
    elif cmd == "norm":
        if not Fs:
            raise UsageError("norm needs --element with an A0 element")
        out = [suites.norm_report(sys, cfg, Fs[0])]
    elif cmd == "h0":
        out = [suites.h0_suite(sys, cfg, xx)]
    elif cmd == "intertwine":
        out = [suites.intertwining_suite(sys, cfg, xx)]
    elif cmd == "extend":
        out = [suites.extension_suite(sys, cfg)]
        dot = _fiber_dot(sys, xx, cfg.depth)
    elif cmd == "crossed-check":
        out = [_crossed_report(sys, cfg, xx, spec)]
    elif cmd == "dilation":
        out = [suites.dilation_suite(sys, cfg, xx, Fs or None)]
    elif cmd == "fock-check":
        out = [suites.correspondence_suite(sys, cfg, xx)]
    elif cmd == "shilov":
        out = [suites.shilov_suite(sys, cfg, xx)]
    elif cmd == "all":
        out = []
        for sub in COMMANDS[:-1]:
            if sub == "norm" and not Fs:
                continue
            try:
                reports, _ = _run(sub, sys, cfg, spec, False)
            except (UnsupportedFiber, UnsupportedComposition) as exc:
                # the backend cannot express this construction; recorded, not failed
                reports = [Report(f"{sub} skipped", data={"skipped": True, "reason": str(exc)}, notes=[str(exc)])]
            out.extend(reports)
        try:
            out.append(suites.separation_suite(sys, cfg))
        except (UnsupportedFiber, UnsupportedComposition) as exc:
            out.append(Report("separation skipped", data={"skipped": True, "reason": str(exc)}, notes=[str(exc)]))
    else:
        raise UsageError(f"unknown command {cmd!r}")
    return out, dot if want_dot else None


# -- output -----------------------------------------------------------------------------------


def atomic_write(path: str, text: str) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def render_json(doc: dict) -> str:
    return json.dumps(_plain(doc), sort_keys=True, indent=2) + "\n"


def render_csv(reports: list[Report]) -> str:
    buf = io.StringIO()
    tables = [r for r in reports if "table" in r.data]
    if len(reports) == 1 and tables:
        rows = reports[0].data["table"]
        fields = list(rows[0]) if rows else ["empty"]
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["report", "check", "anchor", "passed", "value", "tol", "detail"])
    for r in reports:
        for c in r.checks:
            d = c.as_dict()
            w.writerow([r.title, c.name, c.anchor, c.passed, json.dumps(d.get("value")), d.get("tol", ""), c.detail])
    return buf.getvalue()


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        atomic_write(out, text)
    else:
        try:
            _sys.stdout.write(text)
            _sys.stdout.flush()
        except BrokenPipeError:
            # reader went away (e.g. piped into head); silence the interpreter's flush at exit
            os.dup2(os.open(os.devnull, os.O_WRONLY), _sys.stdout.fileno())


def _error_doc(cfg: Optional[RunConfig], kind: str, exc: BaseException, code: int, extra: Optional[dict] = None) -> dict:
    record = {"kind": kind, "type": type(exc).__name__, "message": str(exc)}
    for attr in ("line", "field", "path"):
        if getattr(exc, attr, None) is not None:
            record[attr] = getattr(exc, attr)
    report = getattr(exc, "report", None)
    if report is not None and hasattr(report, "as_dict"):
        record["witness"] = report.as_dict()
    record.update(extra or {})
    return {"schema": SCHEMA, "command": cfg.command if cfg else None, "config": cfg.echo() if cfg else None,
            "ok": False, "exit": code, "error": record}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--system", required=True, help="system description file (.ini)")
    common.add_argument("--element", help="element file (terms and optional cocycle)")
    common.add_argument("--window", help="window bounds, e.g. 8 or 4,4")
    common.add_argument("--depth", type=int, default=4)
    common.add_argument("--point", help="base point, in the backend's point syntax")
    common.add_argument("--char-grid", type=int, default=16, help="number of characters sampled")
    common.add_argument("--points", type=int, default=8, dest="n_points", help="number of sample points")
    common.add_argument("--samples", type=int, default=20)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tol", type=float, default=1e-10)
    common.add_argument("--format", choices=("json", "csv"), default="json", dest="fmt")
    common.add_argument("--out", help="output file (default stdout)")
    common.add_argument("--dot", help="also write a DOT graph (orbit, classes, extend)")
    parser = argparse.ArgumentParser(prog="semicross", description="Finite-truncation checks for semicrossed products.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    cfg = RunConfig(args.command, args.system, args.element, args.window, args.depth, args.point, args.char_grid,
                    args.n_points, args.samples, args.seed, args.tol, args.fmt, args.out, args.dot)
    try:
        return run(cfg)
    except (FileNotFoundError, IsADirectoryError) as exc:
        doc = _error_doc(cfg, "missing-file", exc, 2)
        code = 2
    except (ParseError, UsageError) as exc:
        doc = _error_doc(cfg, "input", exc, 2)
        code = 2
    except ValidationError as exc:
        doc = _error_doc(cfg, "validation", exc, 1)
        code = 1
    except (ValueError, NotImplementedError) as exc:
        doc = _error_doc(cfg, "module", exc, 1)
        code = 1
    print(f"semicross: {doc['error']['message']}", file=_sys.stderr)
    _emit(render_json(doc), cfg.out)
    return code


def run(cfg: RunConfig) -> int:
    spec = parse_system(cfg.system_path)
    sys = spec.system
    point = spec.point
    if cfg.point is not None:
        try:
            point = sys.parse_point(cfg.point)
        except ValueError as exc:
            raise UsageError(f"--point: {exc}") from None
    element = parse_element(cfg.element_path, sys) if cfg.element_path else None
    window = parse_window(cfg.window, sys.d)
    scfg = suites.SuiteConfig(window, depth=cfg.depth, char_grid=cfg.char_grid, n_points=cfg.n_points,
                              samples=cfg.samples, seed=cfg.seed, tol=cfg.tol, point=point)
    reports, dot = _run(cfg.command, sys, scfg, element, cfg.dot is not None)
    ok = all(r.ok for r in reports)
    code = 0 if ok else 1
    doc = {
        "schema": SCHEMA,
        "command": cfg.command,
        "system": sys.describe(),
        "point": str(point) if point is not None else None,
        "config": cfg.echo(),
        "ok": ok,
        "exit": code,
        "failed": [f"{r.title}: {c.name}" for r in reports for c in r.failures()],
        "reports": [r.as_dict() for r in reports],
    }
    _emit(render_json(doc) if cfg.fmt == "json" else render_csv(reports), cfg.out)
    if cfg.dot is not None:
        if dot is None:
            print(f"semicross: no graph for command {cfg.command!r}", file=_sys.stderr)
        else:
            atomic_write(cfg.dot, dot)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
