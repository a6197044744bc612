import logging

import numpy as np

from core.errors import InvalidWeight
from core.exact import normalize, to_fraction
from lie.alcove import Fold
from lie.weyl import compose as compose_weyl
from lie.weyl import element_from_dynkin, inverse as inverse_weyl, weyl_element
from models.affine import AffineElement
from models.root_system import RootSystem, WeylElement
from models.weight import Weight

logger = logging.getLogger(__name__)


# -----------------------------
# Constructors
# -----------------------------

def identity(rs: RootSystem, k: int) -> AffineElement:
    return AffineElement(weyl_element(rs, ()), Weight.zero(rs.ambient_dim), k)


def from_weyl(rs: RootSystem, k: int, w: WeylElement) -> AffineElement:
    return AffineElement(w, Weight.zero(rs.ambient_dim), k)


def translation(rs: RootSystem, k: int, y: Weight) -> AffineElement:
    if not rs.in_coroot_lattice(y):
        raise InvalidWeight(f"Translation {y} is not in the coroot lattice of {rs.name}")
    return AffineElement(weyl_element(rs, ()), y, k)


def affine_reflection(rs: RootSystem, k: int, i: int) -> AffineElement:
    """
    Generators of the affine Weyl group: i = 1..rank are the simple
    reflections, i = 0 the reflection in the wall <b, theta> = 1.
    """
    if 1 <= i <= rs.rank:
        return from_weyl(rs, k, weyl_element(rs, (i - 1,)))
    if i != 0:
        raise ValueError(f"Invalid affine generator: {i}")

    r = rs.rank
    s_theta = [[int(a == b) - rs.comarks[a] * rs.theta_labels[b] for b in range(r)] for a in range(r)]
    return AffineElement(element_from_dynkin(rs, s_theta), rs.theta, k)


def element_from_fold(rs: RootSystem, k: int, fold: Fold) -> AffineElement:
    """The affine element g with g * x = fold.folded (fold must be tracked)."""
    if fold.dynkin is None:
        raise ValueError("Invalid fold: affine tracking was not requested")
    shift = tuple(normalize(to_fraction(t) / k) for t in fold.shift)
    return AffineElement(element_from_dynkin(rs, fold.dynkin), rs.from_labels(shift), k)


# -----------------------------
# Group structure
# -----------------------------

def compose(rs: RootSystem, outer: AffineElement, inner: AffineElement) -> AffineElement:
    """outer after inner."""
    if outer.level != inner.level:
        raise ValueError(f"Invalid composition across levels {outer.level} and {inner.level}")
    w = compose_weyl(outer.weyl_part, inner.weyl_part)
    shift = outer.weyl_part.apply(inner.translation) + outer.translation
    return AffineElement(w, shift, outer.level)


def inverse(rs: RootSystem, tau: AffineElement) -> AffineElement:
    w_inv = inverse_weyl(rs, tau.weyl_part)
    return AffineElement(w_inv, -w_inv.apply(tau.translation), tau.level)


# -----------------------------
# Actions
# -----------------------------

def dot_action(rs: RootSystem, tau: AffineElement, b: Weight) -> Weight:
    return tau.weyl_part.apply(b) + tau.translation


def star_labels(rs: RootSystem, tau: AffineElement, labels) -> tuple:
    shifted = tuple(to_fraction(a) + 1 for a in labels)
    moved = tau.weyl_part.act(shifted)
    gamma = rs.to_labels(tau.translation)
    return tuple(
        normalize(to_fraction(m) + tau.level * to_fraction(g) - 1)
        for m, g in zip(moved, gamma)
    )


def star_action(rs: RootSystem, k: int, tau: AffineElement, b: Weight) -> Weight:
    """tau * b = k * tau((b + rho) / k) - rho."""
    if k <= 0:
        raise ValueError(f"Invalid level: {k}")
    if tau.level != k:
        raise ValueError(f"Invalid affine element: level {tau.level} used at level {k}")
    return dot_action(rs, tau, (b + rs.rho) / k) * k - rs.rho


def sample_affine_elements(
    rs: RootSystem,
    k: int,
    rng: np.random.Generator,
    count: int,
    max_length: int = 6,
) -> list[AffineElement]:
    """Random products of affine generators, reproducible through rng."""
    generators = [affine_reflection(rs, k, i) for i in range(rs.rank + 1)]
    samples = []
    for _ in range(count):
        tau = identity(rs, k)
        for _ in range(int(rng.integers(0, max_length + 1))):
            tau = compose(rs, generators[int(rng.integers(0, len(generators)))], tau)
        samples.append(tau)
    return samples
