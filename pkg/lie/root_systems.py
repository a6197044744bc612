import logging
from fractions import Fraction
from functools import lru_cache
from math import lcm

from core.errors import InvalidRootSystem, InvalidWeight
from core.exact import exact_det, exact_inverse, normalize, to_fraction
from data.series import (
    SERIES,
    ambient_simple_roots,
    is_valid_type,
    lie_dimension,
    rank_constraint,
)
from models.root_system import RootSystem, is_dominant, is_integral
from models.weight import Weight

logger = logging.getLogger(__name__)


# -----------------------------
# Construction
# -----------------------------

def _cartan_matrix(roots: list[Weight]) -> tuple[tuple[int, ...], ...]:
    # A_ij = 2 <alpha_i, alpha_j> / <alpha_j, alpha_j>; row i = labels of alpha_i
    rows = []
    for a in roots:
        row = []
        for b in roots:
            entry = 2 * a.dot(b) / b.dot(b)
            if entry.denominator != 1:
                raise InvalidRootSystem(f"Non-integral Cartan entry {entry}")
            row.append(int(entry))
        rows.append(tuple(row))
    return tuple(rows)


def _positive_root_coefficients(cartan) -> list[tuple[int, ...]]:
    """Closure of the simple roots under simple reflections, positive half."""
    r = len(cartan)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]

    def labels_of(c):
        return [sum(c[i] * cartan[i][j] for i in range(r)) for j in range(r)]

    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for c in frontier:
            a = labels_of(c)
            for i in range(r):
                reflected = list(c)
                reflected[i] -= a[i]
                reflected = tuple(reflected)
                if reflected not in seen:
                    seen.add(reflected)
                    nxt.append(reflected)
        frontier = nxt

    positive = [c for c in seen if all(x >= 0 for x in c)]
    # by height, then lexicographic
    return sorted(positive, key=lambda c: (sum(c), tuple(-x for x in c)))


def _combine(coeffs, vectors: list[Weight]) -> Weight:
    total = Weight.zero(vectors[0].dim)
    for c, v in zip(coeffs, vectors):
        if c:
            total = total + v * c
    return total


@lru_cache(maxsize=None)
def build_root_system(series: str, rank: int) -> RootSystem:
    """
    Build the root system of type (series, rank) with long roots of squared
    length 2 under the stored form.
    """
    if series not in SERIES:
        raise InvalidRootSystem(f"Invalid series: {series} (expected one of {', '.join(SERIES)})")
    if not isinstance(rank, int) or not is_valid_type(series, rank):
        raise InvalidRootSystem(f"Invalid type {series}{rank}: {rank_constraint(series)}")

    simple = [Weight(tuple(v)) for v in ambient_simple_roots(series, rank)]
    cartan = _cartan_matrix(simple)
    cartan_inverse = exact_inverse(cartan)

    coefficients = _positive_root_coefficients(cartan)
    positive = [_combine(c, simple) for c in coefficients]
    theta_coeffs = coefficients[-1]
    theta = positive[-1]

    form_scale = Fraction(2) / theta.dot(theta)
    half_lengths = tuple(form_scale * a.dot(a) / 2 for a in simple)

    fundamental = [_combine(row, simple) for row in cartan_inverse]
    rho = _combine([Fraction(1, 2)] * len(positive), positive)

    quadratic_form = tuple(
        tuple(cartan_inverse[i][j] * half_lengths[j] for j in range(rank))
        for i in range(rank)
    )
    form_denominator = lcm(*(x.denominator for row in quadratic_form for x in row))

    comarks = tuple(to_fraction(c) * h for c, h in zip(theta_coeffs, half_lengths))
    if any(c.denominator != 1 for c in comarks):
        raise InvalidRootSystem(f"Non-integral comarks for {series}{rank}: {comarks}")
    comarks = tuple(int(c) for c in comarks)

    theta_labels = tuple(
        sum(theta_coeffs[i] * cartan[i][j] for i in range(rank)) for j in range(rank)
    )

    # <theta, rho> = sum of comarks since rho has all labels 1
    dual_coxeter = 1 + sum(comarks)

    cartan_det = exact_det(cartan)
    lattice_index = cartan_det
    for h in half_lengths:
        lattice_index /= h

    rs = RootSystem(
        series=series,
        rank=rank,
        ambient_dim=simple[0].dim,
        lie_dimension=lie_dimension(series, rank),
        simple_roots=tuple(simple),
        positive_roots=tuple(positive),
        fundamental_weights=tuple(fundamental),
        rho=rho,
        theta=theta,
        dual_coxeter=dual_coxeter,
        cartan_det=int(cartan_det),
        lattice_index=int(lattice_index),
        form_scale=form_scale,
        cartan=cartan,
        cartan_inverse=cartan_inverse,
        root_coefficients=tuple(coefficients),
        half_lengths=half_lengths,
        comarks=comarks,
        theta_labels=theta_labels,
        quadratic_form=quadratic_form,
        form_denominator=form_denominator,
    )
    _verify(rs)

    logger.info(
        "built %s: |R+|=%d cg=%d det=%d |Lambda/Gamma|=%d",
        rs.name, len(positive), dual_coxeter, rs.cartan_det, rs.lattice_index,
    )
    return rs


def _verify(rs: RootSystem):
    if rs.inner(rs.theta, rs.theta) != 2:
        raise InvalidRootSystem(f"<theta, theta> = {rs.inner(rs.theta, rs.theta)}, expected 2")

    expected = (rs.lie_dimension - rs.rank) // 2
    if len(rs.positive_roots) != expected:
        raise InvalidRootSystem(f"|R+| = {len(rs.positive_roots)}, expected {expected} for {rs.name}")

    if rs.to_labels(rs.rho) != rs.rho_labels:
        raise InvalidRootSystem(f"rho has labels {rs.to_labels(rs.rho)}, expected all 1")

    if rs.dual_coxeter != 1 + rs.inner(rs.theta, rs.rho):
        raise InvalidRootSystem(f"dual Coxeter number {rs.dual_coxeter} != 1 + <theta, rho>")


def parse_group(name: str) -> tuple[str, int]:
    """'A1' -> ('A', 1)."""
    name = name.strip().upper()
    if len(name) < 2 or not name[1:].isdigit():
        raise InvalidRootSystem(f"Invalid group name: {name!r} (expected e.g. A1, B2, G2)")
    return name[0], int(name[1:])


# -----------------------------
# Weights
# -----------------------------

def check_dominant_integral(rs: RootSystem, labels, what: str = "weight") -> tuple[int, ...]:
    if len(labels) != rs.rank:
        raise InvalidWeight(f"Invalid {what} for {rs.name}: {len(labels)} labels, expected {rs.rank}")
    if not is_integral(labels):
        raise InvalidWeight(f"Invalid {what}: labels {tuple(labels)} are not integral")
    if not is_dominant(labels):
        raise InvalidWeight(f"Invalid {what}: labels {tuple(labels)} are not dominant")
    return tuple(int(a) for a in labels)


def weyl_dimension(rs: RootSystem, labels) -> int:
    """Classical dimension of the irreducible representation with these labels."""
    shifted = [to_fraction(a) + 1 for a in labels]
    num = Fraction(1)
    den = Fraction(1)
    for c in rs.root_coefficients:
        num *= rs.root_pairing(shifted, c)
        den *= rs.root_pairing(rs.rho_labels, c)
    value = num / den
    if value.denominator != 1:
        raise InvalidWeight(f"Non-integral Weyl dimension {value} for labels {tuple(labels)}")
    return int(value)


def reflect(rs: RootSystem, labels, i: int) -> tuple:
    a = labels[i]
    return tuple(normalize(x - a * c) for x, c in zip(labels, rs.cartan[i]))


@lru_cache(maxsize=None)
def _dominant(rs: RootSystem, labels: tuple) -> tuple[tuple, int]:
    current = labels
    sign = 1
    while True:
        for i, a in enumerate(current):
            if a < 0:
                current = reflect(rs, current, i)
                sign = -sign
                break
        else:
            return current, sign


def dominant_representative(rs: RootSystem, labels) -> tuple:
    return _dominant(rs, tuple(labels))[0]


def conjugate_labels(rs: RootSystem, labels) -> tuple:
    """lambda* = -w0 lambda, the dominant representative of -lambda."""
    return dominant_representative(rs, tuple(normalize(-to_fraction(a)) for a in labels))


def weyl_orbit(rs: RootSystem, labels) -> list[tuple]:
    start = tuple(labels)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for i in range(rs.rank):
                if x[i] == 0:
                    continue
                y = reflect(rs, x, i)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)
