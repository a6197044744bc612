from fractions import Fraction

import numpy as np

from core.exact import phase, to_fraction
from models.level_data import LevelData
from models.root_system import RootSystem
from models.weight import Weight

"""
Twists, quantum dimensions and the Weyl denominator product, evaluated for
arbitrary weights (not only level-k labels).
"""


def casimir(rs: RootSystem, labels) -> Fraction:
    """<lambda, lambda + 2 rho>."""
    if all(isinstance(a, int) for a in labels):
        v = np.array(labels, dtype=np.int64)
        n = int(v @ rs.scaled_form @ (v + 2))
        return Fraction(n, rs.form_denominator)
    doubled_rho = tuple(to_fraction(a) + 2 for a in labels)
    return rs.label_inner(labels, doubled_rho)


def twist_labels(rs: RootSystem, k: int, labels, r=1) -> complex:
    """
    exp(r * (pi i / k) * <lambda, lambda + 2 rho>), the rational exponent
    reduced mod 2 before one exponential. Not a branch power of theta.
    """
    return phase(casimir(rs, labels) * to_fraction(r) / k)


def theta_pow(ld: LevelData, weight: Weight, r) -> complex:
    return twist_labels(ld.rs, ld.k, ld.rs.to_labels(weight), r)


def twist(rs: RootSystem, k: int, weight: Weight) -> complex:
    return twist_labels(rs, k, rs.to_labels(weight))


def quantum_dimension_labels(rs: RootSystem, k: int, labels) -> float:
    """prod_{alpha > 0} sin(pi <lambda + rho, alpha> / k) / sin(pi <rho, alpha> / k)."""
    shifted = np.array([float(a) + 1.0 for a in labels])
    pairing = shifted @ rs.root_pairing_matrix
    base = np.ones(rs.rank) @ rs.root_pairing_matrix
    return float(np.prod(np.sin(np.pi * pairing / k) / np.sin(np.pi * base / k)))


def quantum_dimension(rs: RootSystem, k: int, weight: Weight) -> float:
    return quantum_dimension_labels(rs, k, rs.to_labels(weight))


def quantum_dimensions(rs: RootSystem, k: int, labels: np.ndarray) -> np.ndarray:
    shifted = np.asarray(labels, dtype=float) + 1.0
    base = np.ones(rs.rank) @ rs.root_pairing_matrix
    ratios = np.sin(np.pi * (shifted @ rs.root_pairing_matrix) / k) / np.sin(np.pi * base / k)
    return np.prod(ratios, axis=1)


def half_det_labels(rs: RootSystem, b_labels) -> float:
    """prod_{alpha > 0} 2 sin(pi <alpha, b>), a square root of det(1 - Ad(exp b)) on k/t."""
    b = np.array([float(x) for x in b_labels])
    return float(np.prod(2.0 * np.sin(np.pi * (b @ rs.root_pairing_matrix))))


def half_det(rs: RootSystem, b: Weight) -> float:
    return half_det_labels(rs, rs.to_labels(b))
