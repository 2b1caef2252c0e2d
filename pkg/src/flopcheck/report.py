"""Verification reports and their text/JSON rendering."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import __version__

STATUSES = ("pass", "fail", "reported")
SCHEMA_VERSION = "1"


@dataclass
class Check:
    id: str
    anchor: str
    status: str
    payload: Any = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"status must be one of {STATUSES}, got {self.status!r}")


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    parameters: dict = field(default_factory=dict)
    engine_version: str = __version__

    def add(self, id: str, anchor: str, ok_or_status, payload=None) -> Check:
        if isinstance(ok_or_status, str):
            status = ok_or_status
        else:
            status = "pass" if ok_or_status else "fail"
        c = Check(id, anchor, status, payload)
        self.checks.append(c)
        return c

    @property
    def failed(self) -> list[Check]:
        return [c for c in self.checks if c.status == "fail"]

    @property
    def exit_status(self) -> int:
        return 1 if self.failed else 0


def canonical(obj):
    """JSON-ready copy with every number rendered as an exact string."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, (int, Fraction)):
        return str(obj)
    if isinstance(obj, float):
        raise TypeError("floating point values are not allowed in reports")
    if isinstance(obj, str):
        return obj
    if isinstance(obj, dict):
        return {str(canonical(k)) if not isinstance(k, str) else k: canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [canonical(x) for x in obj]
    if hasattr(obj, "to_dict"):
        return canonical(obj.to_dict())
    return str(obj)


def report_to_dict(rep: VerificationReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "suite": rep.suite,
        "engine_version": rep.engine_version,
        "parameters": canonical(rep.parameters),
        "checks": [
            {"id": c.id, "anchor": c.anchor, "status": c.status, "payload": canonical(c.payload)}
            for c in rep.checks
        ],
    }


def format_report(rep: VerificationReport, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(report_to_dict(rep), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [f"{c.status.upper()} {c.id} {c.anchor}" for c in rep.checks]
    counts = {s: sum(c.status == s for c in rep.checks) for s in STATUSES}
    lines.append(f"-- {rep.suite}: {counts['pass']} pass, {counts['fail']} fail, {counts['reported']} reported")
    return "\n".join(lines) + "\n"
