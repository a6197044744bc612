import logging
from functools import lru_cache

import numpy as np

from core.config import get_settings
from core.errors import NumericDegradation
from lie.alcove import level_labels
from lie.root_systems import conjugate_labels
from lie.weyl import weyl_matrices
from models.level_data import LevelData
from models.root_system import RootSystem
from modular.twists import quantum_dimensions, twist_labels

logger = logging.getLogger(__name__)

"""
Level-k modular data.

S_{lambda mu} = i^{|R+|} / (k^{r/2} |Lambda/Gamma|^{1/2})
                * sum_w (-1)^w exp(-(2 pi i / k) <lambda + rho, w(mu + rho)>)

The pairing is evaluated as an exact integer numerator over
form_denominator * k and reduced before exponentiation.
"""

_I_POWERS = (1, 1j, -1, -1j)


def _s_matrix(rs: RootSystem, k: int, keys, cap: int | None) -> np.ndarray:
    mats, signs = weyl_matrices(rs, cap)
    shifted = np.array(keys, dtype=np.int64) + 1
    period = rs.form_denominator * k

    left = shifted @ rs.scaled_form
    total = np.zeros((len(keys), len(keys)), dtype=complex)
    for m, sign in zip(mats, signs):
        numerators = left @ (shifted @ m).T
        total += sign * np.exp(-2j * np.pi * (numerators % period) / period)

    prefactor = _I_POWERS[len(rs.positive_roots) % 4] / (
        k ** (rs.rank / 2) * np.sqrt(rs.lattice_index)
    )
    return prefactor * total


def _residual(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(a - b))) if a.size else 0.0


def _check(name: str, residual: float, tolerance: float):
    if residual > tolerance:
        raise NumericDegradation(name, residual, tolerance)


def _verify(ld: LevelData, tolerance: float):
    S, C = ld.S, ld.C
    n = ld.size

    _check("S symmetric", _residual(S, S.T), tolerance)
    _check("S unitary", _residual(S @ S.conj().T, np.identity(n)), tolerance)
    _check("S^2 = C", _residual(S @ S, C), tolerance)
    _check("C^2 = 1", _residual(C @ C, np.identity(n)), tolerance)

    column = S[:, 0]
    _check("S_lambda0 real", float(np.max(np.abs(column.imag))), tolerance)
    if np.any(column.real <= 0):
        raise NumericDegradation("S_lambda0 positive", float(-np.min(column.real)), 0.0)

    sine = quantum_dimensions(ld.rs, ld.k, np.array(ld.label_keys))
    _check("quantum dimension ratio = sine product", _residual(ld.qdim, sine), tolerance)
    _check("|theta| = 1", _residual(np.abs(ld.theta), np.ones(n)), tolerance)


@lru_cache(maxsize=None)
def _build(rs: RootSystem, k: int, cap: int | None, tolerance: float) -> LevelData:
    keys = level_labels(rs, k)
    logger.info("building modular data for %s at k=%d (%d labels)", rs.name, k, len(keys))

    S = _s_matrix(rs, k, keys, cap)

    index = {a: i for i, a in enumerate(keys)}
    bar = tuple(index[conjugate_labels(rs, a)] for a in keys)
    C = np.zeros((len(keys), len(keys)), dtype=np.int64)
    for i, j in enumerate(bar):
        C[i, j] = 1

    theta = np.array([twist_labels(rs, k, a) for a in keys])
    qdim = (S[:, 0] / S[0, 0]).real

    ld = LevelData(rs=rs, k=k, label_keys=keys, S=S, C=C, theta=theta, qdim=qdim, bar=bar)
    _verify(ld, tolerance)
    return ld


def level_data(rs: RootSystem, k: int, cap: int | None = None, tolerance: float | None = None) -> LevelData:
    settings = get_settings()
    cap = settings.weyl_cap if cap is None else cap
    tolerance = settings.identity_tolerance if tolerance is None else tolerance
    return _build(rs, k, cap, tolerance)
