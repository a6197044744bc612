import logging

from checks.affine_checks import check_affine_invariance, check_rosso_jones
from checks.character_checks import check_characters
from checks.fusion_checks import check_fusion
from checks.lie_checks import check_lie
from checks.link_checks import check_link_combinatorics, check_shadow_contraction
from checks.modular_checks import check_modular
from checks.torus_checks import check_degenerations, check_surgery, check_symmetries
from core.config import Settings, get_settings
from models.identity import IdentityResult
from models.level_data import LevelData

logger = logging.getLogger(__name__)

"""
Identity suite orchestration.

This module only decides which families run and in which order.
The identities themselves live in the family modules.
"""


def run_identity_suite(ld: LevelData, settings: Settings | None = None) -> list[IdentityResult]:
    settings = settings or get_settings()
    tol = settings.identity_tolerance
    int_tol = settings.integer_tolerance

    families = [
        ("lie", lambda: check_lie(ld.rs)),
        ("modular", lambda: check_modular(ld, tol)),
        ("fusion", lambda: check_fusion(ld, tol, int_tol, settings.dimension_tolerance)),
        ("characters", lambda: check_characters(ld, tol)),
        ("affine", lambda: check_affine_invariance(ld, tol)),
        ("rosso-jones", lambda: check_rosso_jones(ld, settings.weyl_cap)),
        ("torus degenerations", lambda: check_degenerations(ld, tol)),
        ("torus symmetries", lambda: check_symmetries(ld, tol)),
        ("surgery", lambda: check_surgery(ld, tol, int_tol, settings.weyl_cap, settings.threads)),
        ("link combinatorics", lambda: check_link_combinatorics(ld)),
        ("shadow contraction", lambda: check_shadow_contraction(ld, tol)),
    ]

    results: list[IdentityResult] = []
    for name, run in families:
        family = run()
        logger.info("%s: %d identities", name, len(family))
        results.extend(family)
    return results
