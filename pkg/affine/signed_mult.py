import logging
from dataclasses import dataclass
from functools import lru_cache

from core.errors import InvalidWeight, WallWeight
from lie.alcove import fold_labels
from models.root_system import RootSystem
from models.weight import Weight
from weights.freudenthal import multiplicity_table

logger = logging.getLogger(__name__)

"""
Signed multiplicity sums over the affine Weyl group.

For fixed (lambda, p, eta1) the terms (-1)^tau m_lambda((eta1 - tau * eta2) / p)
are found from the support of m_lambda: every nu in the support gives the
candidate mu = eta1 - p * nu = tau * eta2, and folding mu identifies eta2 and
the sign of tau. Freeness of the action means at most one tau per mu.
"""


@dataclass(frozen=True)
class Contribution:
    value: int                     # (-1)^tau * m_lambda(nu)
    image: tuple                   # tau * eta2 = eta1 - p * nu, Dynkin labels
    source: tuple[int, ...]        # nu


@dataclass(frozen=True)
class SignedMultiplicity:
    contributions: tuple[Contribution, ...]

    @property
    def total(self) -> int:
        return sum(c.value for c in self.contributions)


@lru_cache(maxsize=None)
def contributions_by_target(
    rs: RootSystem,
    k: int,
    highest: tuple[int, ...],
    p: int,
    eta1: tuple[int, ...],
) -> dict[tuple[int, ...], tuple[Contribution, ...]]:
    """All nonzero terms for fixed eta1, grouped by the regular eta2 they land on."""
    if p == 0:
        raise InvalidWeight("Invalid degree p=0")

    table = multiplicity_table(rs, highest)
    grouped: dict[tuple, list[Contribution]] = {}
    for nu, m in table.by_labels.items():
        mu = tuple(a - p * b for a, b in zip(eta1, nu))
        fold = fold_labels(rs, k, mu)
        if fold.on_boundary:
            continue
        grouped.setdefault(fold.folded, []).append(Contribution(fold.sign * m, mu, nu))

    return {target: tuple(items) for target, items in grouped.items()}


def signed_mult_labels(
    rs: RootSystem,
    k: int,
    highest: tuple,
    p: int,
    eta1: tuple,
    eta2: tuple,
) -> SignedMultiplicity:
    target = fold_labels(rs, k, eta2)
    if target.on_boundary:
        raise WallWeight(f"eta2={tuple(eta2)} + rho lies on an affine wall at level {k}")
    grouped = contributions_by_target(rs, k, tuple(highest), p, tuple(eta1))
    found = grouped.get(target.folded, ())
    if target.sign < 0:
        # eta2 outside the alcove: tau picks up the sign of eta2's own fold
        found = tuple(Contribution(-c.value, c.image, c.source) for c in found)
    return SignedMultiplicity(found)


def signed_mult(
    rs: RootSystem,
    k: int,
    highest_weight: Weight,
    p: int,
    eta1: Weight,
    eta2: Weight,
) -> SignedMultiplicity:
    """
    Terms of sum_tau (-1)^tau m_lambda((eta1 - tau * eta2) / p); each term
    carries tau * eta2 for the twist powers callers need.
    """
    return signed_mult_labels(
        rs, k,
        rs.to_labels(highest_weight), p,
        rs.to_labels(eta1), rs.to_labels(eta2),
    )
