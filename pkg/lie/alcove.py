import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache

from core.errors import LevelTooLow
from core.exact import normalize, to_fraction
from lie.root_systems import dominant_representative
from models.root_system import RootSystem
from models.weight import Weight

logger = logging.getLogger(__name__)

"""
Level-k alcove geometry.

All folding works on y = x + rho in Dynkin labels. The fundamental alcove
scaled by k is {y : y_i >= 0, <y, theta> <= k}; its walls are the simple
walls y_i = 0 and the affine wall <y, theta> = k.
"""


@dataclass(frozen=True)
class Fold:
    """
    Result of folding x + rho into the closed alcove.

    The folding map g satisfies g(y) = y @ dynkin + shift on shifted labels;
    shift is k times an element of the coroot lattice.
    """

    folded: tuple
    sign: int
    on_boundary: bool
    dynkin: tuple[tuple[int, ...], ...] | None = None
    shift: tuple | None = None


def check_level(rs: RootSystem, k: int):
    if k <= rs.dual_coxeter:
        raise LevelTooLow(k, rs.dual_coxeter)


@lru_cache(maxsize=None)
def level_labels(rs: RootSystem, k: int) -> tuple[tuple[int, ...], ...]:
    """
    Dynkin labels of the dominant weights with <lambda + rho, theta> < k,
    graded by total label then lexicographically descending.
    """
    check_level(rs, k)
    bound = k - rs.dual_coxeter

    found = []
    ranges = [range(bound // c + 1) for c in rs.comarks]
    for labels in itertools.product(*ranges):
        if sum(a * c for a, c in zip(labels, rs.comarks)) <= bound:
            found.append(tuple(labels))

    found.sort(key=lambda a: (sum(a), tuple(-x for x in a)))
    logger.info("%s at level %d: %d labels", rs.name, k, len(found))
    return tuple(found)


def dominant_weights_at_level(rs: RootSystem, k: int) -> list[Weight]:
    return [rs.from_labels(a) for a in level_labels(rs, k)]


def in_level_range(rs: RootSystem, k: int, labels) -> bool:
    if any(a < 0 for a in labels):
        return False
    return rs.theta_pairing(labels) + rs.dual_coxeter - 1 < k


# -----------------------------
# Folding
# -----------------------------

def _fold_shifted(rs: RootSystem, k: int, y: list, track: bool) -> Fold:
    r = rs.rank
    sign = 1
    theta = rs.theta_labels
    comarks = rs.comarks

    if track:
        m = [[int(i == j) for j in range(r)] for i in range(r)]
        t = [0] * r

    while True:
        i = next((j for j in range(r) if y[j] < 0), None)
        if i is not None:
            a = y[i]
            row = rs.cartan[i]
            y = [y[j] - a * row[j] for j in range(r)]
            if track:
                # right-multiply by S_i: column j gains -col_i * A_ij
                m = [[x[j] - x[i] * row[j] for j in range(r)] for x in m]
                ti = t[i]
                t = [t[j] - ti * row[j] for j in range(r)]
            sign = -sign
            continue

        level = sum(y[j] * comarks[j] for j in range(r))
        if level > k:
            excess = level - k
            y = [y[j] - excess * theta[j] for j in range(r)]
            if track:
                # y -> y @ (I - comarks^T theta) + k theta
                m = [[x[j] - sum(x[l] * comarks[l] for l in range(r)) * theta[j] for j in range(r)] for x in m]
                tl = sum(t[l] * comarks[l] for l in range(r))
                t = [t[j] - tl * theta[j] + k * theta[j] for j in range(r)]
            sign = -sign
            continue
        break

    boundary = any(v == 0 for v in y) or sum(y[j] * comarks[j] for j in range(r)) == k
    return Fold(
        folded=tuple(normalize(v) for v in y),
        sign=sign,
        on_boundary=boundary,
        dynkin=tuple(tuple(row) for row in m) if track else None,
        shift=tuple(normalize(v) for v in t) if track else None,
    )


def fold_labels(rs: RootSystem, k: int, labels, track: bool = False) -> Fold:
    """
    Fold x + rho (x given by Dynkin labels) into the closed level-k alcove.
    The returned folded value is shifted back by rho.
    """
    y = [to_fraction(a) + 1 if not isinstance(a, int) else a + 1 for a in labels]
    shifted = _fold_shifted(rs, k, y, track)
    return Fold(
        folded=tuple(normalize(v - 1) for v in shifted.folded),
        sign=shifted.sign,
        on_boundary=shifted.on_boundary,
        dynkin=shifted.dynkin,
        shift=shifted.shift,
    )


def fold_to_alcove(rs: RootSystem, k: int, x: Weight) -> tuple[Weight, int, bool]:
    """
    Fold x by the level-k affine Weyl group (star action) so that
    folded + rho lies in the closed alcove.

    When on_boundary is true the sign carries no meaning and callers must
    treat the contribution as zero.
    """
    if k <= 0:
        raise ValueError(f"Invalid level: {k}")
    result = fold_labels(rs, k, rs.to_labels(x))
    return rs.from_labels(result.folded), result.sign, result.on_boundary


def same_finite_orbit(rs: RootSystem, labels, target) -> bool:
    """True when labels + rho is a finite Weyl image of target + rho."""
    shifted = tuple(normalize(to_fraction(a) + 1) for a in labels)
    goal = tuple(normalize(to_fraction(a) + 1) for a in target)
    return dominant_representative(rs, shifted) == goal
