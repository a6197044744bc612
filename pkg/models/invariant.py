from dataclasses import dataclass
from math import gcd

from core.errors import ConfigError
from models.weight import Weight

RAW_S00 = "raw_S00_convention"
BRACKET = "bracket"
NORMALIZATIONS = (RAW_S00, BRACKET)


@dataclass(frozen=True)
class TorusKnotSpec:
    """(p, q) torus knot colored by lambda; p >= 1 and gcd(p, q) = 1 unless q = 0."""

    p: int
    q: int
    color: Weight

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 1:
            raise ConfigError("p", f"winding number p must be a positive integer, got {self.p!r}")
        if not isinstance(self.q, int):
            raise ConfigError("q", f"winding number q must be an integer, got {self.q!r}")
        if self.q != 0 and gcd(self.p, self.q) != 1:
            raise ConfigError("q", f"p={self.p} and q={self.q} are not coprime")


@dataclass(frozen=True)
class InvariantValue:
    value: complex
    normalization: str

    def __post_init__(self):
        if self.normalization not in NORMALIZATIONS:
            raise ValueError(f"Invalid normalization: {self.normalization}")


@dataclass(frozen=True)
class SurgeryCheck:
    """
    Both sides of the surgery identity for a torus knot in S^3.

    exact_support is true when the level is high enough for the truncated
    sums to agree exactly; passed is None otherwise (residual reported only).
    """

    lhs: complex
    rhs: complex
    residual: float
    exact_support: bool
    tolerance: float

    @property
    def passed(self) -> bool | None:
        if not self.exact_support:
            return None
        return self.residual < self.tolerance
