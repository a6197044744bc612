from dataclasses import dataclass
from fractions import Fraction

from core.exact import to_fraction


@dataclass(frozen=True)
class Weight:
    """
    A point of the (co)weight space in exact ambient coordinates.
    Inner products here are Euclidean; the normalised invariant form lives
    on RootSystem.
    """

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(to_fraction(c) for c in self.coords))

    @classmethod
    def zero(cls, dim: int) -> "Weight":
        return cls((Fraction(0),) * dim)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def _check_dim(self, other: "Weight"):
        if other.dim != self.dim:
            raise ValueError(f"Invalid weight dimension: {other.dim} != {self.dim}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check_dim(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check_dim(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, scalar) -> "Weight":
        s = to_fraction(scalar)
        return Weight(tuple(s * a for a in self.coords))

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Weight":
        s = to_fraction(scalar)
        return Weight(tuple(a / s for a in self.coords))

    def dot(self, other: "Weight") -> Fraction:
        self._check_dim(other)
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"
