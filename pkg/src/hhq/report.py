"""Check results shared by the verification routines and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"
NOTE = "pass-with-note"


@dataclass
class Check:
    name: str
    status: str
    note: str = ""
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> dict[str, Any]:
        out = {"name": self.name, "status": self.status, "note": self.note}
        if self.details:
            out["details"] = self.details
        return out


@dataclass
class Report:
    """A list of checks; truthy iff none failed."""

    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, ok: bool, note: str = "", **details) -> Check:
        check = Check(name, PASS if ok else FAIL, note, details)
        self.checks.append(check)
        return check

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    __bool__ = ok.fget

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def to_list(self) -> list[dict[str, Any]]:
        return [c.to_dict() for c in self.checks]
