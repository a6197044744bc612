import logging
from functools import lru_cache

import numpy as np

from core.errors import ArithmeticInconsistency
from lie.root_systems import (
    check_dominant_integral,
    dominant_representative,
    weyl_dimension,
    weyl_orbit,
)
from models.multiplicity import MultiplicityTable
from models.root_system import RootSystem
from models.weight import Weight

logger = logging.getLogger(__name__)

"""
Weight multiplicities by Freudenthal's recursion.

Only dominant weights are computed; every other multiplicity is read off
the dominant representative of its Weyl orbit. The invariant form is
scaled by the root system's form_denominator so all arithmetic stays in
the integers.
"""


def _root_labels(rs: RootSystem) -> np.ndarray:
    coeffs = np.array(rs.root_coefficients, dtype=np.int64)
    return coeffs @ np.array(rs.cartan, dtype=np.int64)


def _dominant_weights_below(rs: RootSystem, highest: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Dominant weights mu <= highest, by increasing height of highest - mu."""
    roots = [tuple(int(x) for x in row) for row in _root_labels(rs)]
    heights = [sum(c) for c in rs.root_coefficients]

    depth = {highest: 0}
    frontier = [highest]
    while frontier:
        nxt = []
        for mu in frontier:
            for alpha, h in zip(roots, heights):
                nu = tuple(a - b for a, b in zip(mu, alpha))
                if min(nu) < 0 or nu in depth:
                    continue
                depth[nu] = depth[mu] + h
                nxt.append(nu)
        frontier = nxt

    return sorted(depth, key=lambda mu: (depth[mu], tuple(-a for a in mu)))


@lru_cache(maxsize=None)
def dominant_multiplicities(rs: RootSystem, highest: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    roots = _root_labels(rs)
    form = rs.scaled_form
    # <x, alpha> scaled: x @ paired[a]
    paired = roots @ form
    root_norms = np.einsum("ij,ij->i", roots, paired)

    lam_rho = np.array(highest, dtype=np.int64) + 1
    top = int(lam_rho @ form @ lam_rho)

    mult = {highest: 1}
    order = _dominant_weights_below(rs, highest)
    for mu in order[1:]:
        mu_vec = np.array(mu, dtype=np.int64)
        total = 0
        for alpha, p_alpha, norm in zip(roots, paired, root_norms):
            base = int(mu_vec @ p_alpha)
            j = 1
            while True:
                shifted = tuple(int(x) for x in mu_vec + j * alpha)
                m = mult.get(dominant_representative(rs, shifted))
                if not m:
                    break
                total += m * (base + j * int(norm))
                j += 1

        mu_rho = mu_vec + 1
        denom = top - int(mu_rho @ form @ mu_rho)
        value, rest = divmod(2 * total, denom)
        if rest or value <= 0:
            raise ArithmeticInconsistency(
                f"Freudenthal recursion for {rs.name} {highest} gave {2 * total}/{denom} at {mu}"
            )
        mult[mu] = value

    return mult


@lru_cache(maxsize=None)
def multiplicity_table(rs: RootSystem, highest: tuple[int, ...]) -> MultiplicityTable:
    highest = check_dominant_integral(rs, highest, "highest weight")
    dominant = dominant_multiplicities(rs, highest)

    full = {}
    for mu, m in dominant.items():
        for nu in weyl_orbit(rs, mu):
            full[nu] = m

    table = MultiplicityTable(rs, highest, full, dominant)
    expected = weyl_dimension(rs, highest)
    if table.dimension != expected:
        raise ArithmeticInconsistency(
            f"Multiplicities of {rs.name} {highest} sum to {table.dimension}, Weyl dimension is {expected}"
        )
    logger.debug("%s %s: %d weights, dim %d", rs.name, highest, len(full), expected)
    return table


def weight_multiplicities(rs: RootSystem, highest_weight: Weight) -> MultiplicityTable:
    return multiplicity_table(rs, rs.to_labels(highest_weight))
