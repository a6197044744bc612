import logging
from fractions import Fraction
from functools import partial

import numpy as np

from affine.rosso_jones import rosso_jones_labels
from affine.signed_mult import contributions_by_target
from core.config import get_settings
from core.parallel import partitioned_sum
from lie.alcove import in_level_range, same_finite_orbit
from models.invariant import BRACKET, RAW_S00, InvariantValue, SurgeryCheck, TorusKnotSpec
from models.level_data import LevelData
from models.weight import Weight
from modular.twists import quantum_dimension_labels, twist_labels

logger = logging.getLogger(__name__)

"""
Torus knot invariants.

Every (p, q) torus knot value here is built from one vector over the
level-k labels,

    v[eta2] = sum_eta1 d_eta1 theta_eta1^(q/p)
              sum_tau (-1)^tau m_lambda((eta1 - tau * eta2) / p) theta_(tau * eta2)^(-q/p)

where the fractional twist of tau * eta2 is taken at the unfolded weight.
"""


def _color_labels(ld: LevelData, spec: TorusKnotSpec) -> tuple[int, ...]:
    labels = ld.rs.to_labels(spec.color)
    ld.index_of(labels)
    return tuple(labels)


def _row(ld: LevelData, highest, p: int, ratio: Fraction, i: int) -> np.ndarray:
    rs, k = ld.rs, ld.k
    eta1 = ld.label_keys[i]
    row = np.zeros(ld.size, dtype=complex)

    outer = ld.qdim[i] * twist_labels(rs, k, eta1, ratio)
    for eta2, contributions in contributions_by_target(rs, k, highest, p, eta1).items():
        inner = sum(c.value * twist_labels(rs, k, c.image, -ratio) for c in contributions)
        row[ld.index_of(eta2)] += outer * inner
    return row


def torus_knot_vector(ld: LevelData, spec: TorusKnotSpec, threads: int | None = None) -> np.ndarray:
    highest = _color_labels(ld, spec)
    ratio = Fraction(spec.q, spec.p)
    threads = get_settings().threads if threads is None else threads

    partial_row = partial(_row, ld, highest, spec.p, ratio)
    return np.asarray(partitioned_sum(partial_row, range(ld.size), threads))


def bracket_torus_knot_s2s1(ld: LevelData, spec: TorusKnotSpec, threads: int | None = None) -> InvariantValue:
    v = torus_knot_vector(ld, spec, threads)
    return InvariantValue(complex(ld.S00 ** 2 * np.sum(ld.qdim * v)), BRACKET)


def bracket_torus_knot_with_fiber(
    ld: LevelData,
    spec: TorusKnotSpec,
    fiber_color: Weight,
    threads: int | None = None,
) -> InvariantValue:
    """Torus knot together with a fiber loop colored alpha."""
    alpha = ld.index(fiber_color)
    v = torus_knot_vector(ld, spec, threads)
    return InvariantValue(complex(ld.S00 * (ld.S[alpha, :] @ v)), BRACKET)


def z_s3_torus_knot(ld: LevelData, spec: TorusKnotSpec, cap: int | None = None) -> InvariantValue:
    """S00 sum_mu c^mu_{lambda,p} d_mu theta_mu^(q/p) over the finite support of c."""
    rs, k = ld.rs, ld.k
    highest = _color_labels(ld, spec)
    ratio = Fraction(spec.q, spec.p)

    total = 0j
    for mu, c in rosso_jones_labels(rs, highest, spec.p, cap).items():
        total += c * quantum_dimension_labels(rs, k, mu) * twist_labels(rs, k, mu, ratio)
    return InvariantValue(ld.S00 * total, RAW_S00)


def exact_support(ld: LevelData, spec: TorusKnotSpec, cap: int | None = None) -> bool:
    """
    True when the level-k sum reproduces the Rosso-Jones sum term by term:
    every c^mu sits in the level-k range and every term landing on the
    trivial label comes from a finite Weyl group element.
    """
    rs, k = ld.rs, ld.k
    highest = _color_labels(ld, spec)

    coeffs = rosso_jones_labels(rs, highest, spec.p, cap)
    if not all(in_level_range(rs, k, mu) for mu in coeffs):
        return False

    zero = rs.zero_labels
    for eta1 in ld.label_keys:
        for c in contributions_by_target(rs, k, highest, spec.p, eta1).get(zero, ()):
            if not same_finite_orbit(rs, c.image, zero):
                return False
    return True


def surgery_check(
    ld: LevelData,
    spec: TorusKnotSpec,
    tolerance: float | None = None,
    threads: int | None = None,
    cap: int | None = None,
) -> SurgeryCheck:
    """
    Compare sum_alpha S_{alpha 0} <K, fiber alpha> with the Rosso-Jones value.
    """
    tolerance = get_settings().integer_tolerance if tolerance is None else tolerance

    v = torus_knot_vector(ld, spec, threads)
    with_fiber = ld.S00 * (ld.S @ v)
    lhs = complex(np.sum(ld.S[:, 0] * with_fiber))
    rhs = z_s3_torus_knot(ld, spec, cap).value

    exact = exact_support(ld, spec, cap)
    residual = abs(lhs - rhs)
    if not exact:
        logger.info("surgery residual %.3e at k=%d reported only (support not exact)", residual, ld.k)
    return SurgeryCheck(lhs=lhs, rhs=rhs, residual=residual, exact_support=exact, tolerance=tolerance)
