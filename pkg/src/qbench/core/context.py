"""Verification context - data shared across the verification pipeline"""

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from qbench.core.config import VerificationConfig
    from qbench.problems.instance import Instance


@dataclass
class CheckResult:
    """Outcome of one named check"""

    name: str
    passed: bool
    residual: float | None = None
    detail: str = ""


@dataclass
class VerificationContext:
    """State shared by all verification stages"""

    # input
    instance: "Instance"
    level: str = "quick"  # quick | full
    config: "VerificationConfig | None" = None

    # results
    checks: list[CheckResult] = field(default_factory=list)

    # metadata
    metadata: dict[str, Any] = field(default_factory=dict)

    def add(
        self, name: str, passed: bool, residual: float | None = None, detail: str = ""
    ) -> CheckResult:
        result = CheckResult(name=name, passed=bool(passed), residual=residual, detail=detail)
        self.checks.append(result)
        return result

    def extend(self, results: list[CheckResult]) -> None:
        self.checks.extend(results)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failed_checks(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def get_summary_text(self) -> str:
        """One line per check, failures marked"""
        lines = []
        for check in self.checks:
            mark = "ok  " if check.passed else "FAIL"
            residual = "" if check.residual is None else f" ({check.residual:.3e})"
            lines.append(f"{mark} {check.name}{residual}")
        return "\n".join(lines)
