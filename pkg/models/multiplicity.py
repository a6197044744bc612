from dataclasses import dataclass, field
from functools import cached_property

from core.exact import to_fraction
from models.root_system import RootSystem
from models.weight import Weight


@dataclass(frozen=True)
class MultiplicityTable:
    """
    Weight multiplicities of one irreducible representation.
    Keys of by_labels are Dynkin label tuples; dominant holds the
    dominant part only.
    """

    root_system: RootSystem = field(repr=False)
    highest_labels: tuple[int, ...]
    by_labels: dict[tuple[int, ...], int] = field(repr=False)
    dominant: dict[tuple[int, ...], int] = field(repr=False)

    @property
    def highest_weight(self) -> Weight:
        return self.root_system.from_labels(self.highest_labels)

    @cached_property
    def entries(self) -> dict[Weight, int]:
        return {self.root_system.from_labels(a): m for a, m in self.by_labels.items()}

    @property
    def dimension(self) -> int:
        return sum(self.by_labels.values())

    def multiplicity(self, labels) -> int:
        """m(mu); zero for anything outside the support, including non-integral mu."""
        key = tuple(labels)
        if any(to_fraction(a).denominator != 1 for a in key):
            return 0
        return self.by_labels.get(tuple(int(a) for a in key), 0)

    def of(self, weight: Weight) -> int:
        rs = self.root_system
        if not rs.in_weight_lattice(weight):
            return 0
        return self.multiplicity(rs.to_labels(weight))
