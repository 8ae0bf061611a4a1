"""Structured pass/fail reports shared by the verification routines and the CLI."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

PASS, FAIL, SKIP, INFO = "pass", "fail", "skipped", "info"


@dataclass(frozen=True)
class Check:
    id: str
    anchor: str
    status: str
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def line(self) -> str:
        text = f"[{self.status}] {self.id} ({self.anchor})"
        return f"{text}: {self.detail}" if self.detail else text


@dataclass
class Report:
    command: str
    digest: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    output: str = ""
    data: dict = field(default_factory=dict)

    def add(self, id: str, anchor: str, passed: bool | None, detail: str = "") -> Check:
        status = SKIP if passed is None else (PASS if passed else FAIL)
        c = Check(id, anchor, status, detail)
        self.checks.append(c)
        return c

    def skip(self, id: str, anchor: str, reason: str) -> Check:
        return self.add(id, anchor, None, reason)

    def info(self, id: str, anchor: str, detail: str) -> Check:
        """Record an observation that never affects the exit status."""
        c = Check(id, anchor, INFO, detail)
        self.checks.append(c)
        return c

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def exit_status(self) -> int:
        return 0 if self.passed else 1

    def __getitem__(self, id: str) -> Check:
        for c in self.checks:
            if c.id == id:
                return c
        raise KeyError(id)

    def to_lines(self) -> list[str]:
        head = " ".join(f"{k}={v}" for k, v in self.digest.items())
        lines = [f"{self.command}: {head}".rstrip()] if head else [self.command]
        lines += [c.line() for c in self.checks]
        lines.append(f"status: {'pass' if self.passed else 'fail'}")
        return lines

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "digest": self.digest,
            "checks": [asdict(c) for c in self.checks],
            "exit_status": self.exit_status,
            **({"data": self.data} if self.data else {}),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def render(self, as_json: bool = False) -> str:
        """Text printed by the CLI: the payload, then the check lines if there are any."""
        if as_json:
            return self.to_json() + "\n"
        text = self.output
        if self.checks:
            text += "\n".join(self.to_lines()) + "\n"
        return text
