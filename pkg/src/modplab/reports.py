"""Report records for suite runs: canonical JSON (sorted keys, fixed
separators, newline-terminated, no timestamps) so identical inputs and
seed produce byte-identical output.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

VERSION = "0.1.0"

__all__ = ["VERSION", "Case", "input_digest", "canonical_json", "make_report", "render_text"]


@dataclass
class Case:
    id: str
    inputs: dict
    outcome: str  # "pass" | "fail" | "error"
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "inputs_digest": input_digest(self.inputs),
            "outcome": self.outcome,
            "details": self.details,
        }


def input_digest(obj) -> str:
    blob = json.dumps(obj, sort_keys=True, separators=(",", ":"), default=str)
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()[:12]


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def make_report(suite: str, seed: int, cases: list[Case]) -> dict:
    ordered = sorted(cases, key=lambda c: c.id)
    summary = {"pass": 0, "fail": 0, "error": 0, "total": len(ordered)}
    for c in ordered:
        if c.outcome not in ("pass", "fail", "error"):
            raise ValueError(f"bad outcome {c.outcome!r} in case {c.id}")
        summary[c.outcome] += 1
    return {
        "schema": "1",
        "suite": suite,
        "seed": seed,
        "version": VERSION,
        "cases": [c.to_json() for c in ordered],
        "summary": summary,
    }


def render_text(report: dict) -> str:
    lines = [f"suite: {report['suite']}  seed: {report['seed']}  version: {report['version']}"]
    width = max((len(c["id"]) for c in report["cases"]), default=4)
    for c in report["cases"]:
        detail = json.dumps(c["details"], sort_keys=True, default=str)
        lines.append(f"{c['outcome'].upper():5s} {c['id']:<{width}s} {detail}")
    s = report["summary"]
    lines.append(
        f"total {s['total']}: {s['pass']} pass, {s['fail']} fail, {s['error']} error"
    )
    return "\n".join(lines) + "\n"
