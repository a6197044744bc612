from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from core.errors import InvalidWeight
from models.root_system import RootSystem
from models.weight import Weight


@dataclass(frozen=True, eq=False)
class LevelData:
    """
    Modular data of (rs, k). Matrices are indexed by position in
    label_keys, the Dynkin labels of the level-k dominant weights in
    their fixed order; index 0 is the trivial weight.
    """

    rs: RootSystem
    k: int
    label_keys: tuple[tuple[int, ...], ...]
    S: np.ndarray = field(repr=False)
    C: np.ndarray = field(repr=False)
    theta: np.ndarray = field(repr=False)
    qdim: np.ndarray = field(repr=False)
    bar: tuple[int, ...] = field(repr=False)

    @cached_property
    def labels(self) -> tuple[Weight, ...]:
        return tuple(self.rs.from_labels(a) for a in self.label_keys)

    @cached_property
    def _index(self) -> dict[tuple[int, ...], int]:
        return {a: i for i, a in enumerate(self.label_keys)}

    @property
    def size(self) -> int:
        return len(self.label_keys)

    @property
    def S00(self) -> float:
        return float(self.S[0, 0].real)

    def contains(self, labels) -> bool:
        return tuple(labels) in self._index

    def index_of(self, labels) -> int:
        key = tuple(labels)
        if key not in self._index:
            raise InvalidWeight(
                f"Invalid color {key}: not a dominant weight with <lambda + rho, theta> < {self.k} for {self.rs.name}"
            )
        return self._index[key]

    def index(self, weight: Weight) -> int:
        return self.index_of(self.rs.to_labels(weight))
