"""
Checks for link diagrams on Sigma x S^1: faces, link files and the shadow
state sum.
Run from the project root: python scripts/test_linkmodel.py
"""
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import tempfile
from pathlib import Path

import numpy as np
import pytest

from core.errors import ConfigError, InvalidLink, InvalidWeight, TermBudgetExceeded
from lie.root_systems import build_root_system
from linkmodel.faces import euler_characteristic, faces, total_gleam
from linkmodel.link_file import load_link, parse_link
from linkmodel.random_links import random_link
from linkmodel.shadow import (
    contract_shadow,
    empty_surface_value,
    estimate_terms,
    normalized_shadow,
    shadow_invariant,
)
from linkmodel.transform import flip_loop, recolor_loop, remove_loop, single_loop
from models.surface_link import OUTER, LoopSpec, SurfaceLink
from modular.fusion import fusion_indexed
from modular.level_data import level_data

SAMPLE_LINK = """
# two nested loops and a sibling on a torus
genus=1
genus_face=a
loop a parent=outer winding=2 color=1 plus=inner
loop b parent=a winding=-1 color=2
loop c parent=outer winding=0 color=1 plus=outer
"""


def _a1(k=4):
    rs = build_root_system("A", 1)
    return rs, level_data(rs, k)


def test_face_data_examples():
    print("Faces of the empty link, one loop and two nested loops")
    rs, _ = _a1()
    omega = rs.from_labels((1,))

    empty = faces(SurfaceLink(genus=0))
    assert [(f.id, f.chi, f.gleam) for f in empty.faces] == [(OUTER, 2, 0)]

    data = faces(single_loop(0, 3, omega))
    assert data.face(OUTER).chi == 1 and data.face("K").chi == 1
    assert data.face("K").gleam == 3 and data.face(OUTER).gleam == -3

    nested = SurfaceLink(genus=0, loops=(
        LoopSpec("x", OUTER, 1, omega),
        LoopSpec("y", "x", 2, omega),
    ))
    data = faces(nested)
    assert [data.face(i).chi for i in (OUTER, "x", "y")] == [1, 0, 1]
    assert euler_characteristic(data) == 2
    assert total_gleam(data) == 0


def test_random_forests():
    print("chi and gleam sums over 1000 random nesting forests")
    rs, ld = _a1()
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        link = random_link(rng, list(ld.labels), max_genus=3)
        data = faces(link)
        assert euler_characteristic(data) == 2 - 2 * link.genus
        assert total_gleam(data) == 0


def test_invalid_links():
    rs, _ = _a1()
    omega = rs.from_labels((1,))
    with pytest.raises(InvalidLink):
        SurfaceLink(genus=0, loops=(LoopSpec("x", "nowhere", 0, omega),))
    with pytest.raises(InvalidLink):
        SurfaceLink(genus=0, loops=(LoopSpec("x", "y", 0, omega), LoopSpec("y", "x", 0, omega)))
    with pytest.raises(InvalidLink):
        SurfaceLink(genus=0, loops=(LoopSpec("x", OUTER, 0, omega), LoopSpec("x", OUTER, 1, omega)))
    with pytest.raises(InvalidLink):
        SurfaceLink(genus=1, genus_face="z")
    with pytest.raises(InvalidLink):
        LoopSpec(OUTER, OUTER, 0, omega)


def test_parse_link_file():
    print("Link description files")
    rs, _ = _a1()
    link = parse_link(SAMPLE_LINK, rs)
    assert link.genus == 1 and link.genus_face == "a"
    assert [l.id for l in link.loops] == ["a", "b", "c"]
    assert link.loop("b").parent == "a" and link.loop("b").winding == -1
    assert link.loop("b").inner_is_plus
    assert not link.loop("c").inner_is_plus
    assert rs.to_labels(link.loop("b").color) == (2,)

    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "link.txt"
        path.write_text(SAMPLE_LINK, encoding="utf-8")
        assert load_link(path, rs) == link


def test_link_file_errors():
    rs, _ = _a1()
    bad = [
        "loop a parent=outer winding=1 color=1",                       # no genus
        "genus=0\nloop a parent=outer winding=1 color=1 shade=red",    # unknown key
        "genus=0\nloop a parent=outer winding=x color=1",              # bad integer
        "genus=0\nloop a parent=outer winding=1 color=-1",             # not dominant
        "genus=0\nloop a parent=outer winding=1 color=1 plus=up",
        "genus=0\nloop parent=outer winding=1 color=1",
    ]
    for text in bad:
        with pytest.raises(ConfigError):
            parse_link(text, rs)
    with pytest.raises(InvalidLink):
        parse_link("genus=0\nloop a parent=b winding=1 color=1", rs)
    with pytest.raises(ConfigError):
        load_link("/nonexistent/link.txt", rs)


def test_empty_link_values():
    print("Empty link on the sphere and the torus")
    rs, ld = _a1()
    sphere = shadow_invariant(ld, SurfaceLink(genus=0))
    assert abs(sphere - 1 / ld.S00 ** 2) < 1e-9
    assert abs(shadow_invariant(ld, SurfaceLink(genus=1)) - 3) < 1e-12
    assert abs(normalized_shadow(ld, SurfaceLink(genus=2)) - 1) < 1e-12
    assert abs(empty_surface_value(ld, 0) - sphere) < 1e-9


def test_single_loop_values():
    print("One loop on the sphere")
    rs, ld = _a1(5)
    zero = rs.from_labels((0,))
    for q in range(-2, 4):
        assert abs(normalized_shadow(ld, single_loop(0, q, zero)) - 1) < 1e-10

    lam = rs.from_labels((1,))
    i = ld.index(lam)
    expected = sum(
        fusion_indexed(ld, i, b, a) * ld.qdim[a] * ld.qdim[b]
        for a in range(ld.size)
        for b in range(ld.size)
    )
    assert abs(shadow_invariant(ld, single_loop(0, 0, lam)) - expected) < 1e-9


def test_enumeration_matches_contraction():
    print("Mixed radix enumeration against face tree contraction")
    rs = build_root_system("A", 2)
    ld = level_data(rs, 5)
    rng = np.random.default_rng(11)
    for _ in range(8):
        link = random_link(rng, list(ld.labels), max_loops=3, max_genus=2)
        direct = shadow_invariant(ld, link)
        contracted = contract_shadow(ld, link)
        assert abs(direct - contracted) <= 1e-9 * max(1.0, abs(contracted))


def test_threads_do_not_change_value():
    rs, ld = _a1(6)
    link = parse_link(SAMPLE_LINK, rs)
    single = shadow_invariant(ld, link, threads=1)
    pooled = shadow_invariant(ld, link, threads=4)
    assert abs(single - pooled) < 1e-12 * max(1.0, abs(single))


def test_trivial_color_removes_loop():
    print("A loop colored 0 can be deleted")
    rs, ld = _a1(6)
    link = parse_link(SAMPLE_LINK, rs)
    recolored = recolor_loop(link, "a", rs.from_labels((0,)))
    removed = remove_loop(recolored, "a")
    assert removed.genus_face == OUTER and removed.loop("b").parent == OUTER
    assert abs(shadow_invariant(ld, recolored) - shadow_invariant(ld, removed)) < 1e-9


def test_flip_self_conjugate():
    print("Flipping orientation and winding of a self-conjugate loop")
    rs, ld = _a1(6)
    link = parse_link(SAMPLE_LINK, rs)
    for loop_id in ("a", "b", "c"):
        flipped = flip_loop(link, loop_id)
        assert abs(shadow_invariant(ld, flipped) - shadow_invariant(ld, link)) < 1e-9


def test_flip_single_loop_any_color():
    print("A lone loop is insensitive to its orientation, whatever its color")
    rs = build_root_system("A", 2)
    ld = level_data(rs, 5)
    for labels in ((1, 0), (0, 1), (1, 1), (2, 0)):
        color = rs.from_labels(labels)
        for genus in (0, 1):
            for winding in (-1, 0, 2):
                link = single_loop(genus, winding, color)
                flipped = flip_loop(link, "K")
                assert abs(shadow_invariant(ld, flipped) - shadow_invariant(ld, link)) < 1e-9, (labels, genus, winding)


def test_budget_and_colors():
    rs, ld = _a1(6)
    link = parse_link(SAMPLE_LINK, rs)
    assert estimate_terms(ld, faces(link)) == ld.size ** 4
    with pytest.raises(TermBudgetExceeded):
        shadow_invariant(ld, link, budget=10)

    outside = single_loop(0, 1, rs.from_labels((5,)))
    with pytest.raises(InvalidWeight):
        shadow_invariant(ld, outside)


if __name__ == "__main__":
    tests = [
        test_face_data_examples,
        test_random_forests,
        test_invalid_links,
        test_parse_link_file,
        test_link_file_errors,
        test_empty_link_values,
        test_single_loop_values,
        test_enumeration_matches_contraction,
        test_threads_do_not_change_value,
        test_trivial_color_removes_loop,
        test_flip_self_conjugate,
        test_flip_single_loop_any_color,
        test_budget_and_colors,
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
