import logging

from core.errors import ArithmeticInconsistency, InvalidWeight
from lie.root_systems import check_dominant_integral, weyl_dimension
from models.root_system import RootSystem, is_dominant
from models.weight import Weight
from weights.freudenthal import dominant_multiplicities

logger = logging.getLogger(__name__)

"""
Adams operations by character subtraction.

chi_lambda(x^p) has the weights of lambda scaled by p. Its decomposition
into irreducible characters is found by repeatedly removing the character
of the highest remaining weight. Only dominant weights are tracked, which
is enough since every character involved is Weyl invariant.
"""


def adams_decomposition(rs: RootSystem, highest: tuple, p: int) -> dict[tuple[int, ...], int]:
    highest = check_dominant_integral(rs, highest, "highest weight")
    if not isinstance(p, int) or p < 1:
        raise InvalidWeight(f"Invalid Adams degree: {p}")

    residual = {
        tuple(p * a for a in mu): m
        for mu, m in dominant_multiplicities(rs, highest).items()
    }

    decomposition = {}
    while residual:
        leader = max(residual, key=lambda mu: (rs.height(mu), mu))
        if not is_dominant(leader):
            raise ArithmeticInconsistency(f"Non-dominant leader {leader} in Adams decomposition")

        c = residual[leader]
        for mu, m in dominant_multiplicities(rs, leader).items():
            value = residual.get(mu, 0) - c * m
            if value:
                residual[mu] = value
            else:
                residual.pop(mu, None)

        if leader in residual:
            raise ArithmeticInconsistency(f"Leader {leader} survived its own subtraction")
        decomposition[leader] = c

    total = sum(c * weyl_dimension(rs, mu) for mu, c in decomposition.items())
    if total != weyl_dimension(rs, highest):
        raise ArithmeticInconsistency(
            f"Adams decomposition of {highest} at p={p} has dimension {total}"
        )
    logger.debug("psi^%d(%s) has %d components", p, highest, len(decomposition))
    return decomposition


def plethysm_coeffs(rs: RootSystem, highest_weight: Weight, p: int) -> dict[Weight, int]:
    """c^mu with chi_lambda(x^p) = sum_mu c^mu chi_mu."""
    decomposition = adams_decomposition(rs, rs.to_labels(highest_weight), p)
    return {rs.from_labels(mu): c for mu, c in decomposition.items()}
