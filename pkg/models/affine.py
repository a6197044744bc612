from dataclasses import dataclass

from models.root_system import WeylElement
from models.weight import Weight


@dataclass(frozen=True)
class AffineElement:
    """
    Element of the affine Weyl group: b -> weyl_part(b) + translation,
    translation in the coroot lattice. The star action at the given level
    is tau * b = k * tau((b + rho) / k) - rho.
    """

    weyl_part: WeylElement
    translation: Weight
    level: int

    @property
    def sign(self) -> int:
        return self.weyl_part.sign

    def is_finite(self) -> bool:
        return self.translation.is_zero()
