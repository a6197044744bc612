from functools import lru_cache

import numpy as np

from lie.root_systems import weyl_dimension
from models.root_system import RootSystem
from models.weight import Weight
from weights.freudenthal import multiplicity_table


@lru_cache(maxsize=None)
def _support_arrays(rs: RootSystem, highest: tuple) -> tuple[np.ndarray, np.ndarray]:
    table = multiplicity_table(rs, highest)
    labels = np.array(list(table.by_labels.keys()), dtype=float)
    mults = np.array(list(table.by_labels.values()), dtype=float)
    return labels, mults


def character_at_labels(rs: RootSystem, highest: tuple, b_labels) -> complex:
    """sum_mu m(mu) exp(2 pi i <mu, b>) with b given by (rational) Dynkin labels."""
    labels, mults = _support_arrays(rs, tuple(highest))
    b = np.array([float(x) for x in b_labels])
    pairings = labels @ rs.form_matrix @ b
    return complex(np.sum(mults * np.exp(2j * np.pi * pairings)))


def character_eval(rs: RootSystem, highest_weight: Weight, b: Weight) -> complex:
    return character_at_labels(rs, rs.to_labels(highest_weight), rs.to_labels(b))


def classical_dimension(rs: RootSystem, highest_weight: Weight) -> int:
    return weyl_dimension(rs, rs.to_labels(highest_weight))
