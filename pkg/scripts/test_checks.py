"""
Checks for the identity suite and its summary.
Run from the project root: python scripts/test_checks.py
"""
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from checks.aggregate import summarize
from checks.engine import run_identity_suite
from checks.link_checks import check_link_combinatorics, check_shadow_contraction
from core.config import get_settings
from lie.root_systems import build_root_system
from models.identity import IdentityResult
from modular.level_data import level_data


def test_suite_passes():
    print("Identity suite on small groups")
    for series, rank, k in (("A", 1, 4), ("A", 1, 6), ("A", 2, 4), ("B", 2, 4), ("G", 2, 5)):
        ld = level_data(build_root_system(series, rank), k)
        results = run_identity_suite(ld, get_settings())
        summary = summarize(results)
        for r in summary.failures:
            print(f"  [FAIL] {series}{rank} k={k} {r.name}: {r.residual:.3e} > {r.tolerance:.1e}")
        assert summary.ok, (series, rank, k)
        assert summary.passed + summary.reported == summary.total
        print(f"  {series}{rank} k={k}: {summary.passed} passed, {summary.reported} reported")


def test_link_checks_on_a2():
    ld = level_data(build_root_system("A", 2), 5)
    assert all(r.passed for r in check_link_combinatorics(ld, seed=3))
    assert all(r.passed for r in check_shadow_contraction(ld, 1e-9, seed=4))


def test_summary_counts():
    results = [
        IdentityResult("a", 0.0, 1e-9),
        IdentityResult("b", 1.0, 1e-9),
        IdentityResult("c", 5.0, 1e-9, reported_only=True),
    ]
    summary = summarize(results)
    assert (summary.total, summary.passed, summary.reported) == (3, 1, 1)
    assert [r.name for r in summary.failures] == ["b"]
    assert not summary.ok
    assert results[1].status == "FAILED" and results[2].status == "reported"


if __name__ == "__main__":
    tests = [
        test_suite_passes,
        test_link_checks_on_a2,
        test_summary_counts,
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
