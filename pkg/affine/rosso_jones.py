import logging
from functools import lru_cache

import numpy as np

from core.errors import InvalidWeight
from lie.root_systems import check_dominant_integral
from lie.weyl import weyl_matrices
from models.root_system import RootSystem
from models.weight import Weight
from weights.freudenthal import multiplicity_table

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def rosso_jones_labels(
    rs: RootSystem,
    highest: tuple[int, ...],
    p: int,
    cap: int | None = None,
) -> dict[tuple[int, ...], int]:
    """
    c^mu = sum_w (-1)^w m_lambda((mu - w rho + rho) / p), accumulated over
    (w, nu) with mu = p nu + w rho - rho and kept for dominant mu only.
    """
    highest = check_dominant_integral(rs, highest, "highest weight")
    if not isinstance(p, int) or p == 0:
        raise InvalidWeight(f"Invalid degree p={p}")

    mats, signs = weyl_matrices(rs, cap)
    rho = np.ones(rs.rank, dtype=np.int64)
    shifts = np.einsum("j,wjk->wk", rho, mats) - rho

    table = multiplicity_table(rs, highest)
    support = np.array(list(table.by_labels.keys()), dtype=np.int64)
    mults = np.array(list(table.by_labels.values()), dtype=np.int64)

    coeffs: dict[tuple[int, ...], int] = {}
    for shift, sign in zip(shifts, signs):
        targets = p * support + shift
        dominant = np.all(targets >= 0, axis=1)
        for mu, m in zip(targets[dominant], mults[dominant]):
            key = tuple(int(x) for x in mu)
            coeffs[key] = coeffs.get(key, 0) + int(sign) * int(m)

    coeffs = {mu: c for mu, c in coeffs.items() if c}
    logger.debug("Rosso-Jones %s p=%d: %d nonzero coefficients", highest, p, len(coeffs))
    return dict(sorted(coeffs.items(), key=lambda item: (sum(item[0]), item[0])))


def rosso_jones_coeffs(rs: RootSystem, highest_weight: Weight, p: int, cap: int | None = None) -> dict[Weight, int]:
    return {
        rs.from_labels(mu): c
        for mu, c in rosso_jones_labels(rs, rs.to_labels(highest_weight), p, cap).items()
    }


def rosso_jones_coeff(rs: RootSystem, highest_weight: Weight, p: int, mu: Weight, cap: int | None = None) -> int:
    labels = check_dominant_integral(rs, rs.to_labels(mu), "mu")
    return rosso_jones_labels(rs, rs.to_labels(highest_weight), p, cap).get(labels, 0)
