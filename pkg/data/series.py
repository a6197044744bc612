"""
Classification tables for the simple Lie algebras.

Rules:
- Only constants live here
- Simple roots are given in orthonormal ambient coordinates (Bourbaki)
- No normalisation of the invariant form here, that happens in lie/
"""

from fractions import Fraction
from math import factorial

HALF = Fraction(1, 2)


# ======================================================
# VALID TYPES
# ======================================================

SERIES = ("A", "B", "C", "D", "E", "F", "G")

MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}

EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


def rank_constraint(series: str) -> str:
    if series in MIN_RANK:
        return f"{series}_n requires n >= {MIN_RANK[series]}"
    ranks = "/".join(str(r) for r in EXCEPTIONAL_RANKS[series])
    return f"{series} exists only in rank {ranks}"


def is_valid_type(series: str, rank: int) -> bool:
    if series in MIN_RANK:
        return rank >= MIN_RANK[series]
    if series in EXCEPTIONAL_RANKS:
        return rank in EXCEPTIONAL_RANKS[series]
    return False


# ======================================================
# DIMENSIONS AND WEYL GROUP ORDERS
# ======================================================

EXCEPTIONAL_DIMENSION = {("E", 6): 78, ("E", 7): 133, ("E", 8): 248, ("F", 4): 52, ("G", 2): 14}

EXCEPTIONAL_WEYL_ORDER = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("G", 2): 12,
}


def lie_dimension(series: str, rank: int) -> int:
    n = rank
    if series == "A":
        return n * (n + 2)
    if series in ("B", "C"):
        return n * (2 * n + 1)
    if series == "D":
        return n * (2 * n - 1)
    return EXCEPTIONAL_DIMENSION[(series, rank)]


def weyl_group_order(series: str, rank: int) -> int:
    n = rank
    if series == "A":
        return factorial(n + 1)
    if series in ("B", "C"):
        return 2 ** n * factorial(n)
    if series == "D":
        return 2 ** (n - 1) * factorial(n)
    return EXCEPTIONAL_WEYL_ORDER[(series, rank)]


# ======================================================
# SIMPLE ROOTS (ambient coordinates)
# ======================================================

def _unit(dim: int, i: int, scale=1) -> list:
    v = [Fraction(0)] * dim
    v[i] = Fraction(scale)
    return v


def _diff(dim: int, i: int, j: int) -> list:
    # e_i - e_j
    v = _unit(dim, i)
    v[j] -= 1
    return v


def _e8_roots() -> list[list]:
    roots = [[HALF, -HALF, -HALF, -HALF, -HALF, -HALF, -HALF, HALF]]
    v = _unit(8, 0)
    v[1] = Fraction(1)
    roots.append(v)                     # e1 + e2
    roots.append(_diff(8, 1, 0))        # e2 - e1
    for i in range(2, 7):
        roots.append(_diff(8, i, i - 1))
    return roots


def ambient_simple_roots(series: str, rank: int) -> list[list[Fraction]]:
    n = rank

    if series == "A":
        return [_diff(n + 1, i, i + 1) for i in range(n)]

    if series == "B":
        return [_diff(n, i, i + 1) for i in range(n - 1)] + [_unit(n, n - 1)]

    if series == "C":
        return [_diff(n, i, i + 1) for i in range(n - 1)] + [_unit(n, n - 1, 2)]

    if series == "D":
        last = _unit(n, n - 2)
        last[n - 1] = Fraction(1)
        return [_diff(n, i, i + 1) for i in range(n - 1)] + [last]

    if series == "E":
        return _e8_roots()[:n]

    if series == "F":
        return [
            _diff(4, 1, 2),
            _diff(4, 2, 3),
            _unit(4, 3),
            [HALF, -HALF, -HALF, -HALF],
        ]

    if series == "G":
        return [
            [Fraction(1), Fraction(-1), Fraction(0)],
            [Fraction(-2), Fraction(1), Fraction(1)],
        ]

    raise ValueError(f"Invalid series: {series}")
