import itertools
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from core.exact import exact_inverse, phase
from lie.root_systems import weyl_dimension
from lie.weyl import weyl_group
from models.invariant import TorusKnotSpec
from models.level_data import LevelData
from models.weight import Weight
from modular.twists import half_det_labels
from weights.characters import character_at_labels
from weights.freudenthal import multiplicity_table

"""
Independent reference computations for the test scripts.
None of these are used by the library itself.
"""


# ======================================================
# A1 CLOSED FORMS
# labels n = 0 .. k-2
# ======================================================

def a1_s_matrix(k: int) -> np.ndarray:
    n = np.arange(k - 1)
    return math.sqrt(2 / k) * np.sin(np.pi * np.outer(n + 1, n + 1) / k)


def a1_qdims(k: int) -> np.ndarray:
    n = np.arange(k - 1)
    return np.sin(np.pi * (n + 1) / k) / math.sin(math.pi / k)


def a1_fusion(k: int, n1: int, n2: int, n3: int) -> int:
    """Truncated Clebsch-Gordan rule: N^{n3}_{n1 n2} at level k - 2."""
    if (n1 + n2 + n3) % 2:
        return 0
    upper = min(n1 + n2, 2 * (k - 2) - n1 - n2)
    return int(abs(n1 - n2) <= n3 <= upper)


def a1_trefoil_s3(k: int) -> complex:
    """(2,3) torus knot colored by the fundamental weight, raw S00 convention."""
    s00 = math.sqrt(2 / k) * math.sin(math.pi / k)
    d2 = math.sin(3 * math.pi / k) / math.sin(math.pi / k)
    return s00 * (d2 * complex(np.exp(6j * np.pi / k)) - 1)


# ======================================================
# TYPE A MULTIPLICITIES (Kostka numbers)
# ======================================================

def _tableaux(shape: list[int], entries: int):
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    filling = {}

    def fill(idx):
        if idx == len(cells):
            yield dict(filling)
            return
        i, j = cells[idx]
        low = 1
        if j > 0:
            low = max(low, filling[(i, j - 1)])
        if i > 0:
            low = max(low, filling[(i - 1, j)] + 1)
        for value in range(low, entries + 1):
            filling[(i, j)] = value
            yield from fill(idx + 1)
        filling.pop((i, j), None)

    yield from fill(0)


def kostka_multiplicities(rank: int, labels) -> dict[tuple[int, ...], int]:
    """Weight multiplicities of A_rank by counting semistandard tableaux."""
    shape = [sum(labels[i:]) for i in range(rank)]
    shape = [row for row in shape if row > 0]

    counts: dict[tuple[int, ...], int] = {}
    for tableau in _tableaux(shape, rank + 1):
        content = [0] * (rank + 1)
        for value in tableau.values():
            content[value - 1] += 1
        weight = tuple(content[i] - content[i + 1] for i in range(rank))
        counts[weight] = counts.get(weight, 0) + 1
    return counts


# ======================================================
# ANY TYPE: KOSTANT PARTITION FUNCTION
# ======================================================

def kostant_multiplicities(rs, labels) -> dict[tuple[int, ...], int]:
    """
    Dominant weight multiplicities from Kostant's formula

        m(mu) = sum_w sgn(w) P(w(lambda + rho) - (mu + rho))

    where P counts the ways of writing a vector as a sum of positive roots.
    Dominant weights of V_lambda have lambda - mu in the positive root cone
    and nonnegative root coordinates, so lambda bounds the search box.
    """
    r = rs.rank
    roots = rs.root_coefficients
    group = weyl_group(rs)

    @lru_cache(maxsize=None)
    def partitions(v: tuple[int, ...], start: int) -> int:
        if all(c == 0 for c in v):
            return 1
        if start == len(roots):
            return 0
        total = 0
        alpha = roots[start]
        rest = v
        while all(c >= 0 for c in rest):
            total += partitions(rest, start + 1)
            rest = tuple(c - a for c, a in zip(rest, alpha))
        return total

    def kostant(labels_diff) -> int:
        coords = rs.root_coordinates(labels_diff)
        if any(c.denominator != 1 or c < 0 for c in coords):
            return 0
        return partitions(tuple(int(c) for c in coords), 0)

    simple = [rs.to_labels(alpha) for alpha in rs.simple_roots]
    shifted = tuple(a + 1 for a in labels)
    images = [(w.sign, w.act(shifted)) for w in group]
    bounds = [math.floor(c) for c in rs.root_coordinates(labels)]

    found: dict[tuple[int, ...], int] = {}
    for steps in itertools.product(*(range(b + 1) for b in bounds)):
        mu = tuple(
            int(labels[j] - sum(steps[i] * simple[i][j] for i in range(r)))
            for j in range(r)
        )
        if any(a < 0 for a in mu):
            continue
        m = sum(
            sign * kostant(tuple(x - a - 1 for x, a in zip(image, mu)))
            for sign, image in images
        )
        if m:
            found[mu] = m
    return found


def labels_up_to_dimension(rs, bound: int) -> list[tuple[int, ...]]:
    """Every dominant highest weight whose irreducible representation has dimension <= bound."""
    r = rs.rank
    found = []

    def extend(prefix: list[int]):
        if len(prefix) == r:
            found.append(tuple(prefix))
            return
        a = 0
        while weyl_dimension(rs, tuple(prefix + [a] + [0] * (r - len(prefix) - 1))) <= bound:
            extend(prefix + [a])
            a += 1

    extend([])
    return found


# ======================================================
# LATTICE SUM ORACLE FOR TORUS KNOTS IN S^2 x S^1
# ======================================================

def _coroot_gram(rs) -> list[list[Fraction]]:
    r = rs.rank
    return [[Fraction(rs.cartan[i][j]) / rs.half_lengths[i] for j in range(r)] for i in range(r)]


def fundamental_box(ld: LevelData) -> list[tuple[int, ...]]:
    """
    Weights alpha0 whose coroot coordinates lie in [0, k): one representative
    of every class of the weight lattice modulo k times the coroot lattice.
    """
    rs, k = ld.rs, ld.k
    r = rs.rank
    gram = _coroot_gram(rs)
    gram_inv = exact_inverse(gram)

    reps = set()
    for a in itertools.product(range(rs.lattice_index), repeat=r):
        x = [sum(a[i] * gram_inv[i][j] for i in range(r)) for j in range(r)]
        reps.add(tuple(v - math.floor(v) for v in x))

    points = []
    for c in sorted(reps):
        for n in itertools.product(range(k), repeat=r):
            x = [c[i] + n[i] for i in range(r)]
            labels = [sum(x[i] * gram[i][j] for i in range(r)) for j in range(r)]
            points.append(tuple(int(v) for v in labels))
    return points


def lattice_bracket(ld: LevelData, spec: TorusKnotSpec, fiber_color: Weight | None = None) -> complex:
    """
    Normalised torus knot bracket from the double lattice sum

        sum_{alpha0, alpha1} m(alpha1) D(alpha0 / k) D((alpha0 - p alpha1) / k)
                             exp(pi i q <alpha1, 2 alpha0 - p alpha1> / k)

    with D(b) = prod_{alpha > 0} 2 sin(pi <alpha, b>), divided by the same
    sum for the empty link. A fiber loop multiplies each term by its
    character at (alpha0 - p alpha1) / k.
    """
    rs, k, p, q = ld.rs, ld.k, spec.p, spec.q
    table = multiplicity_table(rs, rs.to_labels(spec.color))
    fiber = rs.to_labels(fiber_color) if fiber_color is not None else None

    raw_link = 0j
    raw_empty = 0.0
    for alpha0 in fundamental_box(ld):
        b1 = [Fraction(a, k) for a in alpha0]
        d1 = half_det_labels(rs, b1)
        raw_empty += d1 * d1

        for alpha1, m in table.by_labels.items():
            shifted = tuple(a - p * b for a, b in zip(alpha0, alpha1))
            b2 = [Fraction(a, k) for a in shifted]
            d2 = half_det_labels(rs, b2)
            doubled = tuple(2 * a - p * b for a, b in zip(alpha0, alpha1))
            term = m * d1 * d2 * phase(q * rs.label_inner(alpha1, doubled) / k)
            if fiber is not None:
                term *= character_at_labels(rs, fiber, b2)
            raw_link += term

    return raw_link / raw_empty
