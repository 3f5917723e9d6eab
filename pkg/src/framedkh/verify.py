"""Batch checks bundling every executable identity of the package."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .chain_complex import ClosedOnly, KhovanovComplex
from .diagram import TangleDiagram, parse_diagram
from .homology import BigradedHomology, homology
from .ring import LaurentPoly
from .rmatrix import bracket_tensor, bracket_tensor_marked, check_matrix_identities
from .statesum import bracket_circles, bracket_state_sum, bracket_via_ranks

__all__ = [
    "METHODS",
    "bracket",
    "FileRecord",
    "RunReport",
    "check_diagram",
    "corpus_files",
    "load_corpus",
]

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"

METHODS = {
    "statesum": lambda d: bracket_state_sum(d).value,
    "tensor": bracket_tensor,
    "marked": bracket_tensor_marked,
    "circles": bracket_circles,
    "ranks": bracket_via_ranks,
}


def bracket(d: TangleDiagram, method: str = "statesum") -> LaurentPoly:
    try:
        fn = METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(METHODS)}") from None
    return fn(d)


def corpus_files() -> list[Path]:
    root = resources.files("framedkh") / "corpus"
    return sorted(Path(str(p)) for p in root.iterdir() if p.name.endswith(".tang"))


def load_corpus() -> dict[str, TangleDiagram]:
    return {p.stem: parse_diagram(p.read_text()) for p in corpus_files()}


@dataclass
class FileRecord:
    name: str
    crossings: int
    closed: bool
    brackets: dict[str, str | None] = field(default_factory=dict)
    homology: list[dict] | None = None
    checks: dict[str, str] = field(default_factory=dict)
    wall_time: float = 0.0
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and FAIL not in self.checks.values()

    def to_json(self, with_time: bool = True) -> dict:
        out = {
            "file": self.name,
            "crossings": self.crossings,
            "closed": self.closed,
            "brackets": self.brackets,
            "homology": self.homology,
            "checks": self.checks,
        }
        if self.error is not None:
            out["error"] = self.error
        if with_time:
            out["wall_time"] = round(self.wall_time, 4)
        return out


@dataclass
class RunReport:
    records: list[FileRecord] = field(default_factory=list)
    comparisons: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.records) and all(c["equal"] for c in self.comparisons)

    def to_json(self, with_time: bool = True) -> dict:
        return {
            "files": [r.to_json(with_time) for r in self.records],
            "comparisons": self.comparisons,
            "ok": self.ok,
        }

    def render(self) -> str:
        lines = []
        for r in self.records:
            status = "ok" if r.ok else "FAIL"
            checks = " ".join(f"{k}={v}" for k, v in r.checks.items())
            lines.append(f"{r.name}: {status} ({r.crossings} crossings) {checks}")
            if r.error:
                lines.append(f"  error: {r.error}")
        for c in self.comparisons:
            lines.append(f"compare {c['a']} {c['b']}: {'equal' if c['equal'] else 'DIFFERENT'}")
        return "\n".join(lines)


def _flag(ok: bool) -> str:
    return PASS if ok else FAIL


def check_diagram(d: TangleDiagram, name: str = "<diagram>", table=None) -> tuple[FileRecord, BigradedHomology | None]:
    """Run every applicable check on one diagram.

    ``table`` replaces the merge/split table used by the closed-diagram
    differential; it exists for negative-control runs.
    """
    start = time.perf_counter()
    rec = FileRecord(name, d.n_crossings, d.is_closed)
    values = {}
    for method in METHODS:
        try:
            values[method] = bracket(d, method)
            rec.brackets[method] = str(values[method])
        except ClosedOnly:
            rec.brackets[method] = None

    ref = values["statesum"]
    cx = KhovanovComplex(d)
    rec.checks["dsquare"] = _flag(cx.dsquare_ok())
    if d.is_closed:
        link_cx = KhovanovComplex(d, method="link", table=table)
        rec.checks["dsquare_table"] = _flag(link_cx.dsquare_ok())
        same = all(cx.boundary(s) == link_cx.boundary(s) for g in cx.groups.values() for s in g.basis)
        rec.checks["boundaries_agree"] = _flag(same)
    else:
        rec.checks["dsquare_table"] = SKIPPED
        rec.checks["boundaries_agree"] = SKIPPED

    rec.checks["euler_chain"] = _flag(values["ranks"] == ref)
    h = None
    if rec.checks["dsquare"] == PASS:
        h = homology(cx)
        rec.homology = h.to_json()
        rec.checks["euler_homology"] = _flag(h.euler_characteristic() == ref)
    else:
        rec.checks["euler_homology"] = SKIPPED
    for method, check in (("circles", "circle_formula"), ("tensor", "tensor"), ("marked", "marked_tensor")):
        rec.checks[check] = _flag(values[method] == ref) if method in values else SKIPPED
    rec.checks["matrix_identities"] = _flag(check_matrix_identities())
    rec.wall_time = time.perf_counter() - start
    return rec, h
