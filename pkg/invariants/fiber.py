import logging

import numpy as np

from core.config import get_settings
from core.errors import InvalidWeight, NumericDegradation
from models.invariant import RAW_S00, InvariantValue
from models.level_data import LevelData
from models.weight import Weight

logger = logging.getLogger(__name__)


def z_fiber_link(ld: LevelData, genus: int, colors: list[Weight]) -> InvariantValue:
    """
    sum_lambda (prod_i S_{lambda mu_i} / S_{lambda 0}) S_{lambda 0}^(2 - 2g)
    for fiber loops colored mu_i in Sigma_g x S^1.
    """
    if genus < 0:
        raise InvalidWeight(f"Invalid genus: {genus}")
    columns = [ld.index(c) for c in colors]

    S = ld.S
    s0 = S[:, 0]
    terms = s0 ** (2 - 2 * genus)
    for j in columns:
        terms = terms * S[:, j] / s0
    return InvariantValue(complex(np.sum(terms)), RAW_S00)


def verlinde_dim(ld: LevelData, genus: int, tolerance: float | None = None) -> int:
    """Dimension of the space of conformal blocks on a genus g surface."""
    if genus < 0:
        raise InvalidWeight(f"Invalid genus: {genus}")
    tolerance = get_settings().dimension_tolerance if tolerance is None else tolerance

    value = complex(np.sum(ld.S[:, 0] ** (2 - 2 * genus)))
    nearest = int(round(value.real))
    residual = abs(value - nearest)
    if residual >= tolerance:
        raise NumericDegradation(f"Verlinde dimension at genus {genus}", residual, tolerance)
    logger.debug("dim V(g=%d) = %d (residual %.2e)", genus, nearest, residual)
    return nearest
