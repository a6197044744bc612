import numpy as np

from linkmodel.faces import euler_characteristic, faces, total_gleam
from linkmodel.random_links import random_link
from linkmodel.shadow import contract_shadow, estimate_terms, shadow_invariant
from models.identity import IdentityResult
from models.level_data import LevelData

RANDOM_FORESTS = 1000
SHADOW_SAMPLES = 6


def check_link_combinatorics(ld: LevelData, seed: int = 0) -> list[IdentityResult]:
    rng = np.random.default_rng(seed)
    chi_bad = 0
    gleam_bad = 0
    for _ in range(RANDOM_FORESTS):
        link = random_link(rng, list(ld.labels))
        data = faces(link)
        if euler_characteristic(data) != 2 - 2 * link.genus:
            chi_bad += 1
        if total_gleam(data) != 0:
            gleam_bad += 1
    return [
        IdentityResult("sum chi = 2 - 2g", float(chi_bad), 0.0),
        IdentityResult("sum gleam = 0", float(gleam_bad), 0.0),
    ]


def check_shadow_contraction(ld: LevelData, tolerance: float, seed: int = 1, budget: int = 20_000) -> list[IdentityResult]:
    """Brute-force coloring sum against face tree contraction on small random links."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    checked = 0
    while checked < SHADOW_SAMPLES:
        link = random_link(rng, list(ld.labels), max_loops=3, max_genus=2)
        if estimate_terms(ld, faces(link)) > budget:
            continue
        direct = shadow_invariant(ld, link, budget=budget, threads=1)
        contracted = contract_shadow(ld, link)
        worst = max(worst, abs(direct - contracted) / max(1.0, abs(contracted)))
        checked += 1
    return [IdentityResult("shadow enumeration = tree contraction", worst, tolerance)]
