import numpy as np

from models.identity import IdentityResult, max_residual
from models.level_data import LevelData
from modular.twists import half_det_labels, quantum_dimensions


def check_modular(ld: LevelData, tolerance: float) -> list[IdentityResult]:
    S, C = ld.S, ld.C
    n = ld.size
    identity = np.identity(n)

    results = [
        IdentityResult("S symmetric", max_residual(np.abs(S - S.T).ravel()), tolerance),
        IdentityResult("S unitary", max_residual(np.abs(S @ S.conj().T - identity).ravel()), tolerance),
        IdentityResult("S^2 = C", max_residual(np.abs(S @ S - C).ravel()), tolerance),
        IdentityResult("C^2 = 1", max_residual(np.abs(C @ C - identity).ravel()), 0.0),
        IdentityResult("|theta| = 1", max_residual(np.abs(np.abs(ld.theta) - 1)), tolerance),
    ]

    sine = quantum_dimensions(ld.rs, ld.k, np.array(ld.label_keys))
    results.append(IdentityResult(
        "quantum dimension: S ratio = sine product",
        max_residual(np.abs(ld.qdim - sine)),
        tolerance,
    ))

    ratios = np.array([
        half_det_labels(ld.rs, [(a + 1) / ld.k for a in labels]) / ld.S[i, 0].real
        for i, labels in enumerate(ld.label_keys)
    ])
    results.append(IdentityResult(
        "det^1/2 proportional to S_lambda0 (relative spread)",
        float((np.max(ratios) - np.min(ratios)) / abs(np.mean(ratios))),
        tolerance,
    ))
    return results
