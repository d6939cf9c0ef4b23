"""Machine-readable verification reports.

A ReportBundle maps check names to {status, expected, computed, runtime}.
Exact quantities are rendered as rationals ("1/27"), never floats; only
entropies are floats and they are marked as such by their check names.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction


def fmt(value) -> str:
    """Render a value for a report: rationals stay rational."""
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(value.numerator)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(fmt(v) for v in value) + "]"
    if isinstance(value, dict):
        items = sorted(value.items(), key=lambda kv: str(kv[0]))
        return "{" + ", ".join(f"{fmt(k)}: {fmt(v)}" for k, v in items) + "}"
    return str(value)


@dataclass
class CheckResult:
    status: str
    expected: str
    computed: str
    runtime: float

    def to_json(self):
        return {
            "status": self.status,
            "expected": self.expected,
            "computed": self.computed,
            "runtime": round(self.runtime, 4),
        }


class ReportBundle:
    """Ordered sections of named checks."""

    def __init__(self):
        self.sections: dict[str, dict[str, CheckResult]] = {}

    def add(self, section: str, name: str, ok: bool, expected, computed, runtime: float):
        checks = self.sections.setdefault(section, {})
        assert name not in checks, f"duplicate check name {name!r}"
        checks[name] = CheckResult(
            status="pass" if ok else "fail",
            expected=fmt(expected),
            computed=fmt(computed),
            runtime=runtime,
        )

    def merge(self, other: "ReportBundle"):
        for section, checks in other.sections.items():
            for name, result in checks.items():
                target = self.sections.setdefault(section, {})
                assert name not in target, f"duplicate check name {name!r}"
                target[name] = result

    def all_passed(self) -> bool:
        return all(c.status == "pass"
                   for checks in self.sections.values()
                   for c in checks.values())

    def first_failure(self):
        for section, checks in self.sections.items():
            for name, c in checks.items():
                if c.status != "pass":
                    return f"{section}:{name}"
        return None

    def to_json(self):
        return {
            section: {name: c.to_json() for name, c in checks.items()}
            for section, checks in self.sections.items()
        }

    def render_text(self) -> str:
        lines = []
        for section, checks in self.sections.items():
            lines.append(f"[{section}]")
            for name, c in checks.items():
                mark = "ok " if c.status == "pass" else "FAIL"
                lines.append(f"  {mark} {name}: computed {c.computed}"
                             + (f" (expected {c.expected})" if c.status != "pass" else "")
                             + f"  [{c.runtime:.2f}s]")
        lines.append("")
        lines.append("RESULT: " + ("all checks passed" if self.all_passed()
                                   else f"FAILED at {self.first_failure()}"))
        return "\n".join(lines)

    def write_json(self, path: str):
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=2)
            fh.write("\n")
