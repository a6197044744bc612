import logging

import numpy as np

from affine.signed_mult import signed_mult_labels
from core.config import get_settings
from core.errors import NumericDegradation
from lie.root_systems import check_dominant_integral
from models.level_data import LevelData
from models.weight import Weight

logger = logging.getLogger(__name__)


# -----------------------------
# Verlinde formula
# -----------------------------

def verlinde_indexed(ld: LevelData, i: int, j: int, l: int) -> complex:
    S = ld.S
    return complex(np.sum(S[:, i] * S[:, j] * S[:, l] / S[:, 0]))


def verlinde_number(ld: LevelData, lam: Weight, mu: Weight, nu: Weight) -> complex:
    """N_{lambda mu nu} = sum_alpha S_{alpha lambda} S_{alpha mu} S_{alpha nu} / S_{alpha 0}."""
    return verlinde_indexed(ld, ld.index(lam), ld.index(mu), ld.index(nu))


def verlinde_tensor(ld: LevelData) -> np.ndarray:
    S = ld.S
    return np.einsum("al,am,an,a->lmn", S, S, S, 1.0 / S[:, 0])


def round_integer(value: complex, identity: str, tolerance: float | None = None) -> int:
    tolerance = get_settings().integer_tolerance if tolerance is None else tolerance
    nearest = int(round(value.real))
    residual = abs(value - nearest)
    if residual > tolerance:
        raise NumericDegradation(identity, residual, tolerance)
    return nearest


def fusion_indexed(ld: LevelData, i: int, j: int, l: int, tolerance: float | None = None) -> int:
    """N^l_{ij} = N_{i j lbar}."""
    return round_integer(verlinde_indexed(ld, i, j, ld.bar[l]), "Verlinde integrality", tolerance)


def fusion_coefficient(
    ld: LevelData, lam: Weight, mu: Weight, nu: Weight, tolerance: float | None = None
) -> int:
    return fusion_indexed(ld, ld.index(lam), ld.index(mu), ld.index(nu), tolerance)


# -----------------------------
# Quantum Racah formula
# -----------------------------

def fusion_racah_labels(ld: LevelData, lam, mu, nu) -> int:
    """N^mu_{lambda nu} = sum_tau (-1)^tau m_lambda(mu - tau * nu)."""
    lam = check_dominant_integral(ld.rs, lam, "lambda")
    ld.index_of(mu)
    ld.index_of(nu)
    return signed_mult_labels(ld.rs, ld.k, lam, 1, tuple(mu), tuple(nu)).total


def fusion_racah(ld: LevelData, lam: Weight, mu: Weight, nu: Weight) -> int:
    rs = ld.rs
    return fusion_racah_labels(ld, rs.to_labels(lam), rs.to_labels(mu), rs.to_labels(nu))


def fusion_matrix(ld: LevelData, lam) -> np.ndarray:
    """M[a, b] = N^{a}_{lambda b} over the level-k labels, from the Racah formula."""
    n = ld.size
    matrix = np.zeros((n, n), dtype=np.int64)
    for a, mu in enumerate(ld.label_keys):
        for b, nu in enumerate(ld.label_keys):
            matrix[a, b] = fusion_racah_labels(ld, lam, mu, nu)
    return matrix
