from dataclasses import dataclass

from models.identity import IdentityResult


@dataclass(frozen=True)
class SuiteSummary:
    total: int
    passed: int
    reported: int
    failures: tuple[IdentityResult, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def summarize(results: list[IdentityResult]) -> SuiteSummary:
    """Reported-only identities count as neither passed nor failed."""
    failures = tuple(r for r in results if not r.passed)
    reported = sum(1 for r in results if r.reported_only)
    return SuiteSummary(
        total=len(results),
        passed=len(results) - len(failures) - reported,
        reported=reported,
        failures=failures,
    )
