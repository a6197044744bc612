"""
Checks for weight multiplicities, Weyl characters and Adams operations.
Run from the project root: python scripts/test_weights.py
"""
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import cmath
import math

import pytest

from core.errors import InvalidWeight
from fixtures.oracles import kostant_multiplicities, kostka_multiplicities, labels_up_to_dimension
from lie.root_systems import build_root_system, weyl_dimension
from weights.characters import character_at_labels, character_eval, classical_dimension
from weights.freudenthal import multiplicity_table, weight_multiplicities
from weights.plethysm import adams_decomposition, plethysm_coeffs


def test_a1_weight_string():
    print("A1, lambda = 2 omega: weights -2, 0, 2 each once")
    rs = build_root_system("A", 1)
    table = multiplicity_table(rs, (2,))
    assert table.by_labels == {(2,): 1, (0,): 1, (-2,): 1}
    assert table.multiplicity((1,)) == 0
    assert table.dimension == 3


def test_a2_adjoint():
    print("A2 adjoint: zero weight twice, six roots once")
    rs = build_root_system("A", 2)
    table = weight_multiplicities(rs, rs.from_labels((1, 1)))
    assert table.multiplicity((0, 0)) == 2
    roots = [rs.to_labels(a) for a in rs.positive_roots]
    for root in roots:
        assert table.multiplicity(root) == 1
        assert table.multiplicity(tuple(-a for a in root)) == 1
    assert len(table.by_labels) == 7
    assert table.of(rs.theta) == 1


def test_multiplicities_against_kostka_numbers():
    print("Freudenthal against semistandard tableaux counts (type A)")
    for rank, labels in ((1, (3,)), (2, (2, 1)), (2, (3, 0)), (3, (1, 1, 1)), (3, (2, 0, 1))):
        rs = build_root_system("A", rank)
        table = multiplicity_table(rs, labels)
        assert table.by_labels == kostka_multiplicities(rank, labels), (rank, labels)
        print(f"  A{rank} {labels}: dim {table.dimension}")


def test_multiplicities_against_partition_function():
    print("Freudenthal against Kostant's partition function, every lambda with dim <= 200")
    for series, rank in (("A", 3), ("B", 2), ("G", 2), ("B", 3), ("C", 3)):
        rs = build_root_system(series, rank)
        candidates = labels_up_to_dimension(rs, 200)
        for labels in candidates:
            table = multiplicity_table(rs, labels)
            assert table.dominant == kostant_multiplicities(rs, labels), (rs.name, labels)
        print(f"  {rs.name}: {len(candidates)} highest weights")

    a1 = build_root_system("A", 1)
    assert len(labels_up_to_dimension(a1, 200)) == 200


def test_dimensions_match_weyl_formula():
    for series, rank in (("B", 2), ("G", 2), ("C", 3)):
        rs = build_root_system(series, rank)
        for i in range(rank):
            labels = tuple(1 if j == i else 0 for j in range(rank))
            assert multiplicity_table(rs, labels).dimension == weyl_dimension(rs, labels)


def test_rejects_non_dominant():
    rs = build_root_system("A", 2)
    with pytest.raises(InvalidWeight):
        multiplicity_table(rs, (-1, 1))


def test_character_values():
    print("Characters at b = 0 and the A1 cosine")
    rs = build_root_system("A", 2)
    highest = rs.from_labels((1, 1))
    value = character_eval(rs, highest, rs.from_labels((0, 0)))
    assert abs(value - 8) < 1e-12
    assert classical_dimension(rs, highest) == 8

    a1 = build_root_system("A", 1)
    for t in (0.1, 0.25, 0.37):
        # <omega, b> = t for b with label 2t
        value = character_at_labels(a1, (1,), [2 * t])
        assert abs(value - 2 * math.cos(2 * math.pi * t)) < 1e-12
        assert abs(value.imag) < 1e-12

    # Weyl invariance: b and its image under s_1 give the same value
    b = [0.13, 0.29]
    reflected = [-b[0], b[1] + b[0]]
    assert cmath.isclose(character_at_labels(rs, (2, 1), b), character_at_labels(rs, (2, 1), reflected), abs_tol=1e-10)


def test_adams_operations():
    print("Adams decompositions")
    a1 = build_root_system("A", 1)
    assert adams_decomposition(a1, (1,), 1) == {(1,): 1}
    assert adams_decomposition(a1, (1,), 2) == {(2,): 1, (0,): -1}
    assert adams_decomposition(a1, (2,), 2) == {(4,): 1, (2,): -1, (0,): 1}

    rs = build_root_system("A", 2)
    coeffs = plethysm_coeffs(rs, rs.from_labels((1, 0)), 2)
    # psi^2 of the defining rep is Sym^2 - Lambda^2
    assert coeffs == {rs.from_labels((2, 0)): 1, rs.from_labels((0, 1)): -1}

    for series, rank, labels in (("B", 2, (1, 0)), ("G", 2, (0, 1)), ("A", 2, (1, 1))):
        rs = build_root_system(series, rank)
        for p in (1, 2, 3):
            decomposition = adams_decomposition(rs, labels, p)
            assert sum(c * weyl_dimension(rs, mu) for mu, c in decomposition.items()) == weyl_dimension(rs, labels)

    with pytest.raises(InvalidWeight):
        adams_decomposition(a1, (1,), 0)


if __name__ == "__main__":
    tests = [
        test_a1_weight_string,
        test_a2_adjoint,
        test_multiplicities_against_kostka_numbers,
        test_multiplicities_against_partition_function,
        test_dimensions_match_weyl_formula,
        test_rejects_non_dominant,
        test_character_values,
        test_adams_operations,
    ]
    failed = 0
    for test in tests:
        try:
            test()
        except AssertionError as e:
            failed += 1
            print(f"[FAIL] {test.__name__}: {e}")

    print("\n" + "=" * 60)
    print("ALL TESTS PASSED" if not failed else "SOME TESTS FAILED")
    print("=" * 60)
