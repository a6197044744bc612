from dataclasses import dataclass


@dataclass(frozen=True)
class IdentityResult:
    """
    Outcome of one machine-checked identity.
    reported_only results carry a residual but never fail the suite.
    """

    name: str
    residual: float
    tolerance: float
    reported_only: bool = False

    @property
    def passed(self) -> bool:
        return self.reported_only or self.residual <= self.tolerance

    @property
    def status(self) -> str:
        if self.reported_only:
            return "reported"
        return "ok" if self.passed else "FAILED"


def max_residual(values) -> float:
    values = list(values)
    return float(max(values)) if values else 0.0
