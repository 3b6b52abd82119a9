"""Shared validation report type used by the checking entry points."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    code: str
    message: str

    def as_dict(self) -> dict:
        return {"code": self.code, "message": self.message}


@dataclass
class ValidationReport:
    """Outcome of a semantic validation pass: ok iff no violations."""

    violations: list[Violation] = field(default_factory=list)

    def add(self, code: str, message: str) -> None:
        self.violations.append(Violation(code, message))

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {"ok": self.ok, "violations": [v.as_dict() for v in self.violations]}

    def merge(self, other: "ValidationReport", prefix: str = "") -> None:
        for v in other.violations:
            self.add(v.code if not prefix else f"{prefix}.{v.code}", v.message)
