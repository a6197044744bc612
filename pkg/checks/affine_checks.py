import numpy as np

from affine.action import sample_affine_elements, star_labels
from affine.rosso_jones import rosso_jones_labels
from lie.root_systems import weyl_dimension
from models.identity import IdentityResult
from models.level_data import LevelData
from modular.twists import quantum_dimension_labels, twist_labels
from weights.plethysm import adams_decomposition

MAX_PLETHYSM_DIMENSION = 200
ADAMS_DEGREES = (1, 2, 3)


def check_affine_invariance(ld: LevelData, tolerance: float, seed: int = 0, samples: int = 12) -> list[IdentityResult]:
    rs, k = ld.rs, ld.k
    rng = np.random.default_rng(seed)
    taus = sample_affine_elements(rs, k, rng, samples)

    d_worst = 0.0
    theta_worst = 0.0
    for tau in taus:
        for i, eta in enumerate(ld.label_keys):
            moved = star_labels(rs, tau, eta)
            d_worst = max(d_worst, abs(quantum_dimension_labels(rs, k, moved) - tau.sign * ld.qdim[i]))
            theta_worst = max(theta_worst, abs(twist_labels(rs, k, moved) - ld.theta[i]))

    return [
        IdentityResult("d_{tau * eta} = (-1)^tau d_eta", float(d_worst), tolerance),
        IdentityResult("theta_{tau * eta} = theta_eta", float(theta_worst), tolerance),
    ]


def check_rosso_jones(ld: LevelData, cap: int | None = None) -> list[IdentityResult]:
    """Alternating Weyl sum against the Adams decomposition, exactly."""
    rs = ld.rs
    mismatches = 0
    for lam in ld.label_keys:
        if weyl_dimension(rs, lam) > MAX_PLETHYSM_DIMENSION:
            continue
        for p in ADAMS_DEGREES:
            if rosso_jones_labels(rs, lam, p, cap) != adams_decomposition(rs, lam, p):
                mismatches += 1
    return [IdentityResult("Rosso-Jones coefficients = Adams decomposition", float(mismatches), 0.0)]
