"""Pass/fail reports returned by the verification routines."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of an exact verification.

    ``violations`` holds JSON-ready dicts (scalars already encoded as
    strings) so a report can be written out unchanged.
    """

    name: str
    checked: int = 0
    violations: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def fail(self, **details):
        self.violations.append(details)

    def merge(self, other: "Report"):
        self.checked += other.checked
        self.violations.extend(other.violations)
        return self

    def to_dict(self):
        return {
            "name": self.name,
            "status": "PASS" if self.passed else "FAIL",
            "checked": self.checked,
            "violations": self.violations,
            **self.data,
        }

    def summary(self) -> str:
        head = f"{self.name}: {'PASS' if self.passed else 'FAIL'} ({self.checked} checks"
        if self.passed:
            return head + ")"
        lines = [head + f", {len(self.violations)} violations)"]
        for v in self.violations[:10]:
            lines.append("  " + ", ".join(f"{k}={v[k]}" for k in v))
        if len(self.violations) > 10:
            lines.append(f"  ... {len(self.violations) - 10} more")
        return "\n".join(lines)
