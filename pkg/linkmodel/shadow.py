import itertools
import logging
from functools import partial

import numpy as np

from core.config import get_settings
from core.errors import TermBudgetExceeded
from core.parallel import partitioned_sum
from linkmodel.faces import faces
from models.level_data import LevelData
from models.surface_link import OUTER, FaceData, SurfaceLink
from modular.fusion import fusion_matrix
from modular.twists import twist_labels

logger = logging.getLogger(__name__)

"""
Shadow state sum for double-point-free links.

    |L| = sum_eta  prod_loops N^{eta(Y+)}_{lambda, eta(Y-)}
                 * prod_faces d_eta(Y)^chi(Y) theta_eta(Y)^gleam(Y)

Colorings eta run over the level-k labels and are enumerated as a
mixed-radix counter over faces in FaceData order.
"""


def estimate_terms(ld: LevelData, data: FaceData) -> int:
    return ld.size ** len(data.faces)


def _face_weights(ld: LevelData, data: FaceData) -> list[np.ndarray]:
    weights = []
    for face in data.faces:
        twists = np.array([twist_labels(ld.rs, ld.k, a, face.gleam) for a in ld.label_keys])
        weights.append(ld.qdim ** face.chi * twists)
    return weights


def _loop_matrices(ld: LevelData, link: SurfaceLink) -> dict[str, np.ndarray]:
    """M[a, b] = N^a_{lambda, b} for each loop color."""
    matrices = {}
    for loop in link.loops:
        labels = ld.rs.to_labels(loop.color)
        ld.index_of(labels)
        matrices[loop.id] = fusion_matrix(ld, labels)
    return matrices


def _check_budget(ld: LevelData, data: FaceData, budget: int | None) -> int:
    budget = get_settings().term_budget if budget is None else budget
    estimate = estimate_terms(ld, data)
    logger.info("shadow state sum: %d faces, %d terms", len(data.faces), estimate)
    if estimate > budget:
        raise TermBudgetExceeded(estimate, budget)
    return estimate


def _leading_partition(ids, position, weights, loop_terms, n, lead: int) -> complex:
    rest = len(ids) - 1
    total = 0j
    for tail in itertools.product(range(n), repeat=rest):
        colors = (lead,) + tail
        term = complex(1.0)
        for f, c in enumerate(colors):
            term *= weights[f][c]
            if term == 0:
                break
        if term == 0:
            continue
        for matrix, plus, minus in loop_terms:
            term *= matrix[colors[position[plus]], colors[position[minus]]]
            if term == 0:
                break
        total += term
    return total


def shadow_invariant(
    ld: LevelData,
    link: SurfaceLink,
    budget: int | None = None,
    threads: int | None = None,
) -> complex:
    """|L| by explicit enumeration of face colorings."""
    data = faces(link)
    matrices = _loop_matrices(ld, link)
    _check_budget(ld, data, budget)
    threads = get_settings().threads if threads is None else threads

    ids = data.ids
    position = {face_id: i for i, face_id in enumerate(ids)}
    weights = _face_weights(ld, data)
    loop_terms = [
        (matrices[loop.id], data.plus_face[loop.id], data.minus_face[loop.id])
        for loop in link.loops
    ]

    partial_sum = partial(_leading_partition, ids, position, weights, loop_terms, ld.size)
    return partitioned_sum(partial_sum, range(ld.size), threads)


def contract_shadow(ld: LevelData, link: SurfaceLink) -> complex:
    """
    The same state sum evaluated by contracting the face tree from the
    innermost loops outwards, one matrix-vector product per loop.
    """
    data = faces(link)
    matrices = _loop_matrices(ld, link)
    weights = dict(zip(data.ids, _face_weights(ld, data)))

    def message(face_id: str) -> np.ndarray:
        vector = weights[face_id].astype(complex)
        for child in link.children(face_id):
            inner = message(child.id)
            m = matrices[child.id]
            # inner side positive: N^{inner}_{lambda, this}; otherwise N^{this}_{lambda, inner}
            vector = vector * (m.T @ inner if child.inner_is_plus else m @ inner)
        return vector

    return complex(np.sum(message(OUTER)))


def empty_surface_value(ld: LevelData, genus: int) -> complex:
    """|empty link| on a genus g surface: sum_eta d_eta^(2 - 2g)."""
    return complex(np.sum(ld.qdim ** (2 - 2 * genus)))


def normalized_shadow(
    ld: LevelData,
    link: SurfaceLink,
    budget: int | None = None,
    threads: int | None = None,
) -> complex:
    return shadow_invariant(ld, link, budget, threads) / empty_surface_value(ld, link.genus)
