import numpy as np

from models.identity import IdentityResult
from models.level_data import LevelData
from weights.characters import character_at_labels


def check_characters(ld: LevelData, tolerance: float) -> list[IdentityResult]:
    """
    chi_lambda((mu + rho) / k) = S_{mu lambdabar} / S_{mu 0}.

    S carries exp(-2 pi i <.,.> / k), so the ratio S_{mu lambda} / S_{mu 0}
    evaluates chi_lambda at -(mu + rho) / k, which is chi_lambdabar there.
    """
    worst = 0.0
    for l, lam in enumerate(ld.label_keys):
        lbar = ld.bar[l]
        for m, mu in enumerate(ld.label_keys):
            b = [(a + 1) / ld.k for a in mu]
            value = character_at_labels(ld.rs, lam, b)
            expected = ld.S[m, lbar] / ld.S[m, 0]
            worst = max(worst, abs(value - expected))
    return [IdentityResult("Weyl character = S ratio", float(worst), tolerance)]
