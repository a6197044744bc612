"""
Checks for root systems, Weyl groups and the level-k alcove.
Run from the project root: python scripts/test_lie.py
"""
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from fractions import Fraction

import pytest

from core.errors import InvalidRootSystem, InvalidWeight, LevelTooLow, WeylCapExceeded
from lie.alcove import dominant_weights_at_level, fold_labels, fold_to_alcove, level_labels, same_finite_orbit
from lie.root_systems import (
    build_root_system,
    check_dominant_integral,
    conjugate_labels,
    parse_group,
    weyl_dimension,
    weyl_orbit,
)
from lie.weyl import compose, element_from_dynkin, inverse, weyl_element, weyl_group


def test_root_system_constants():
    print("Root system constants for A1, A2, B2, G2")

    a1 = build_root_system("A", 1)
    assert len(a1.positive_roots) == 1
    assert a1.dual_coxeter == 2
    assert a1.rho == a1.theta / 2

    a2 = build_root_system("A", 2)
    assert len(a2.positive_roots) == 3
    assert a2.dual_coxeter == 3
    assert a2.cartan_det == 3
    assert a2.lattice_index == 3

    b2 = build_root_system("B", 2)
    assert len(b2.positive_roots) == 4
    assert b2.dual_coxeter == 3
    assert b2.lattice_index == 4

    g2 = build_root_system("G", 2)
    assert len(g2.positive_roots) == 6
    assert g2.dual_coxeter == 4
    assert g2.cartan_det == 1
    assert g2.lattice_index == 3

    for rs in (a1, a2, b2, g2):
        assert rs.inner(rs.theta, rs.theta) == 2
        assert rs.rho_labels == (1,) * rs.rank
        print(f"  {rs.name}: |R+|={len(rs.positive_roots)} cg={rs.dual_coxeter} index={rs.lattice_index}")


def test_exceptional_and_classical_dimensions():
    print("dim G = rank + 2 |R+| across the classification")
    for series, rank in (("B", 3), ("C", 3), ("D", 4), ("F", 4), ("E", 6)):
        rs = build_root_system(series, rank)
        assert rs.lie_dimension == rs.rank + 2 * len(rs.positive_roots), rs.name
        assert rs.inner(rs.theta, rs.theta) == 2


def test_invalid_types_rejected():
    print("Invalid (series, rank) pairs")
    for series, rank in (("A", 0), ("B", 1), ("C", 2), ("D", 3), ("E", 5), ("G", 3), ("X", 2)):
        with pytest.raises(InvalidRootSystem):
            build_root_system(series, rank)
    assert parse_group("b2") == ("B", 2)
    with pytest.raises(InvalidRootSystem):
        parse_group("A")


def test_weyl_group_orders():
    print("Weyl group orders")
    expected = {("A", 1): 2, ("A", 2): 6, ("B", 2): 8, ("G", 2): 12, ("A", 3): 24}
    for (series, rank), order in expected.items():
        group = weyl_group(build_root_system(series, rank))
        assert len(group) == order
        assert group[0].length == 0
        assert sum(w.sign for w in group) == 0


def test_weyl_cap():
    print("Weyl cap rejects before enumerating")
    rs = build_root_system("A", 2)
    with pytest.raises(WeylCapExceeded) as e:
        weyl_group(rs, cap=5)
    assert e.value.order == 6


def test_weyl_element_algebra():
    print("Composition and inverses")
    rs = build_root_system("G", 2)
    s1 = weyl_element(rs, (0,))
    s2 = weyl_element(rs, (1,))
    assert compose(s1, s1) == weyl_element(rs, ())

    w = compose(compose(s1, s2), s1)
    assert w.sign == -1
    assert compose(w, inverse(rs, w)) == weyl_element(rs, ())

    # (s1 s2)^6 = 1 in G2
    r = weyl_element(rs, ())
    for _ in range(6):
        r = compose(r, compose(s1, s2))
    assert r == weyl_element(rs, ())

    assert element_from_dynkin(rs, w.dynkin) == w


def test_weyl_dimension():
    print("Weyl dimension formula")
    a2 = build_root_system("A", 2)
    assert weyl_dimension(a2, (1, 1)) == 8
    assert weyl_dimension(a2, (1, 0)) == 3
    g2 = build_root_system("G", 2)
    assert {weyl_dimension(g2, (1, 0)), weyl_dimension(g2, (0, 1))} == {7, 14}
    b2 = build_root_system("B", 2)
    assert {weyl_dimension(b2, (1, 0)), weyl_dimension(b2, (0, 1))} == {4, 5}


def test_conjugation_and_orbits():
    print("Conjugate weights and Weyl orbits")
    a2 = build_root_system("A", 2)
    assert conjugate_labels(a2, (1, 0)) == (0, 1)
    assert conjugate_labels(a2, (2, 1)) == (1, 2)
    a1 = build_root_system("A", 1)
    assert conjugate_labels(a1, (3,)) == (3,)
    assert len(weyl_orbit(a2, (1, 0))) == 3
    assert len(weyl_orbit(a2, (1, 1))) == 6


def test_dominant_integral_check():
    rs = build_root_system("A", 2)
    assert check_dominant_integral(rs, (1, 0)) == (1, 0)
    for bad in ((1,), (-1, 0), (Fraction(1, 2), 0)):
        with pytest.raises(InvalidWeight):
            check_dominant_integral(rs, bad)


def test_level_labels():
    print("Dominant weights at level k")
    a1 = build_root_system("A", 1)
    assert level_labels(a1, 4) == ((0,), (1,), (2,))
    assert level_labels(a1, 3) == ((0,), (1,))
    a2 = build_root_system("A", 2)
    assert set(level_labels(a2, 4)) == {(0, 0), (1, 0), (0, 1)}
    assert level_labels(a2, 4)[0] == (0, 0)
    with pytest.raises(LevelTooLow):
        level_labels(a1, 2)
    g2 = build_root_system("G", 2)
    with pytest.raises(LevelTooLow):
        level_labels(g2, 4)


def test_fold():
    print("Folding into the level-k alcove")
    rs = build_root_system("A", 1)

    inside = fold_labels(rs, 4, (1,))
    assert (inside.folded, inside.sign, inside.on_boundary) == ((1,), 1, False)

    assert fold_labels(rs, 4, (3,)).on_boundary
    assert fold_labels(rs, 4, (-1,)).on_boundary

    reflected = fold_labels(rs, 4, (-3,))
    assert (reflected.folded, reflected.sign, reflected.on_boundary) == ((1,), -1, False)

    # 4 + rho sits past the affine wall and reflects back to 2 + rho
    affine = fold_labels(rs, 4, (4,))
    assert affine.folded == (2,) and affine.sign == -1

    a2 = build_root_system("A", 2)
    for labels in ((3, -5), (-2, 7), (6, 6), (0, -4)):
        fold = fold_labels(a2, 5, labels, track=True)
        if fold.on_boundary:
            continue
        assert fold.folded in level_labels(a2, 5), labels


def test_dominant_weights_at_level():
    print("Dominant weights at level k as weights")
    a1 = build_root_system("A", 1)
    assert dominant_weights_at_level(a1, 4) == [a1.from_labels((n,)) for n in range(3)]
    assert dominant_weights_at_level(a1, 3) == [a1.from_labels((0,)), a1.from_labels((1,))]

    a2 = build_root_system("A", 2)
    found = dominant_weights_at_level(a2, 4)
    assert len(found) == 3
    assert {a2.to_labels(w) for w in found} == {(0, 0), (1, 0), (0, 1)}
    assert found[0] == a2.from_labels((0, 0))


def test_fold_to_alcove():
    print("fold_to_alcove on weights")
    rs = build_root_system("A", 1)
    x = rs.from_labels((1,))
    assert fold_to_alcove(rs, 4, x) == (x, 1, False)

    _, _, boundary = fold_to_alcove(rs, 4, rs.from_labels((3,)))
    assert boundary

    folded, sign, boundary = fold_to_alcove(rs, 4, rs.from_labels((-3,)))
    assert (folded, sign, boundary) == (rs.from_labels((1,)), -1, False)

    with pytest.raises(ValueError):
        fold_to_alcove(rs, 0, x)


def test_fold_is_idempotent():
    print("Folding a folded weight changes nothing")
    rank_two = ((3, -5), (-2, 7), (6, 6), (0, -4), (9, 1), (-1, -1))
    cases = (
        ("A", 1, 4, ((5,), (-7,), (11,), (2,))),
        ("A", 2, 5, rank_two),
        ("B", 2, 6, rank_two),
        ("G", 2, 6, rank_two),
    )
    for series, rank, k, samples in cases:
        rs = build_root_system(series, rank)
        for labels in samples:
            folded, _, boundary = fold_to_alcove(rs, k, rs.from_labels(labels))
            again = fold_to_alcove(rs, k, folded)
            if boundary:
                assert again[2]
            else:
                assert again == (folded, 1, False), (series, rank, labels)


def test_same_finite_orbit():
    rs = build_root_system("A", 2)
    assert same_finite_orbit(rs, (-2, 1), (0, 0))
    assert not same_finite_orbit(rs, (1, 0), (0, 0))


if __name__ == "__main__":
    tests = [
        test_root_system_constants,
        test_exceptional_and_classical_dimensions,
        test_invalid_types_rejected,
        test_weyl_group_orders,
        test_weyl_cap,
        test_weyl_element_algebra,
        test_weyl_dimension,
        test_conjugation_and_orbits,
        test_dominant_integral_check,
        test_level_labels,
        test_fold,
        test_dominant_weights_at_level,
        test_fold_to_alcove,
        test_fold_is_idempotent,
        test_same_finite_orbit,
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
