from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckReport:
    """Outcome of an exhaustive identity check: how many cases ran, which failed."""

    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def passed(self) -> int:
        return self.checked - len(self.failures)

    def record(self, condition: bool, what: str) -> None:
        self.checked += 1
        if not condition:
            self.failures.append(what)

    def merge(self, other: CheckReport) -> None:
        self.checked += other.checked
        self.failures.extend(f"{other.name}: {f}" for f in other.failures)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.passed}/{self.checked}"
