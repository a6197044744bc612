"""
Checks for the command line frontend: reports, formats and exit codes.
Run from the project root: python scripts/test_cli.py
"""
import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import io
import tempfile
from pathlib import Path

import pytest

from cli.main import main, parse_args, run
from cli.report import format_complex
from core.config import VERSION
from core.errors import ConfigError


def _run(*argv) -> tuple[int, str]:
    out = io.StringIO()
    code = run(parse_args(list(argv)), out=out)
    return code, out.getvalue()


def _csv_values(report: str) -> dict[str, str]:
    rows = [line.split(",", 1) for line in report.splitlines()[2:] if line and not line.startswith("#")]
    return {key: value for key, value in rows}


def test_complex_format():
    assert format_complex(1 + 0j) == "1+0i"
    assert format_complex(complex(-0.0, -2.5)) == "0-2.5i"
    assert format_complex(complex(0.1, -0.0)) == "0.1+0i"
    assert format_complex(complex(1 / 3, 2 / 3)) == "0.333333333333+0.666666666667i"


def test_header():
    code, report = _run("--group", "A1", "--level", "4", "--cmd", "verlinde-dim", "--genus", "2")
    assert code == 0
    first = report.splitlines()[0]
    assert first == f"# group=A1 series=A rank=1 level=4 command=verlinde-dim version={VERSION}"
    assert "10" in report


def test_check_a1_level_4():
    print("check on A1, k=4")
    code, report = _run("--group", "A1", "--level", "4", "--cmd", "check")
    print(report)
    assert code == 0
    assert "FAILED" not in report


def test_fiber_fusion_rule():
    print("fiber on A1, k=5 with colors 1, 1, 2")
    code, report = _run(
        "--group", "A1", "--level", "5", "--cmd", "fiber",
        "--color", "1", "--color", "1", "--color", "2", "--format", "csv",
    )
    assert code == 0
    assert report.splitlines()[1] == "quantity,value"
    assert _csv_values(report)["N"] == "1"


def test_rosso_jones_command():
    print("rosso-jones on A1, k=40, (2,3), omega")
    code, report = _run(
        "--group", "A1", "--level", "40", "--cmd", "rosso-jones",
        "--p", "2", "--q", "3", "--color", "1", "--format", "csv",
    )
    assert code == 0
    values = _csv_values(report)
    assert float(values["surgery_residual"]) < 1e-7
    assert values["exact_support"] == "true"
    assert values["c(2)"] == "1" and values["c(0)"] == "-1"


def test_smatrix_and_fusion_tables():
    code, report = _run("--group", "A2", "--level", "5", "--cmd", "smatrix", "--format", "csv")
    assert code == 0
    lines = report.splitlines()
    assert lines[1] == "lambda,mu,S"
    assert len(lines) == 2 + 6 * 6

    code, report = _run("--group", "A1", "--level", "5", "--cmd", "fusion", "--format", "csv")
    assert code == 0
    lines = report.splitlines()
    assert lines[1] == "lambda,mu,nu,N"
    assert "(1),(1),(2),1" in lines
    assert "(1),(1),(1),0" in lines


def test_torus_knot_command():
    code, report = _run(
        "--group", "A1", "--level", "5", "--cmd", "torus-knot",
        "--p", "2", "--q", "3", "--color", "0", "--fiber-color", "1", "--format", "csv",
    )
    assert code == 0
    values = _csv_values(report)
    real = values["bracket"].split("+")[0].split("-")[0]
    assert abs(float(real) - 1) < 1e-9
    assert "bracket_with_fiber" in values


def test_shadow_command():
    text = "genus=0\nloop K parent=outer winding=2 color=0\n"
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "unknot.txt"
        path.write_text(text, encoding="utf-8")
        code, report = _run("--group", "A1", "--level", "5", "--cmd", "shadow", "--link", str(path), "--format", "csv")
    assert code == 0
    values = _csv_values(report)
    assert values["terms"] == str(4 ** 2)
    assert values["bracket"].startswith("1+") or values["bracket"].startswith("1-")


def test_reports_are_deterministic():
    argv = ("--group", "B2", "--level", "5", "--cmd", "torus-knot", "--p", "2", "--q", "1", "--color", "1,0")
    assert _run(*argv) == _run(*argv)


def test_config_errors():
    print("Configuration errors exit with status 2")
    assert main(["--group", "Z1", "--level", "4", "--cmd", "check"]) == 2
    assert main(["--group", "A0", "--level", "4", "--cmd", "check"]) == 2
    assert main(["--group", "A1", "--level", "0", "--cmd", "check"]) == 2
    assert main(["--group", "A1", "--level", "5", "--cmd", "torus-knot", "--q", "3", "--color", "1"]) == 2
    assert main(["--group", "A1", "--level", "5", "--cmd", "shadow"]) == 2
    assert main(["--group", "A1", "--level", "5", "--cmd", "check", "--threads", "0"]) == 2
    assert main(["--group", "A1", "--level", "5", "--cmd", "fiber", "--color", "x"]) == 2
    assert main(["--group", "A1", "--level", "5", "--cmd", "torus-knot", "--p", "2", "--q", "4", "--color", "1"]) == 2
    assert main(["--group", "A1", "--level", "5", "--cmd", "shadow", "--link", "/nonexistent"]) == 2

    with pytest.raises(ConfigError) as e:
        parse_args(["--group", "A1", "--level", "5", "--cmd", "rosso-jones", "--p", "2", "--q", "3"])
    assert e.value.field == "colors"

    with pytest.raises(SystemExit) as e:
        parse_args(["--group", "A1", "--level", "5", "--cmd", "nothing"])
    assert e.value.code == 2


def test_rejections():
    print("Rejected computations exit with status 3")
    assert main(["--group", "A1", "--level", "2", "--cmd", "smatrix"]) == 3
    assert main(["--group", "A2", "--level", "5", "--cmd", "smatrix", "--weyl-cap", "2"]) == 3
    assert main(["--group", "E8", "--level", "40", "--cmd", "smatrix"]) == 3
    assert main(["--group", "A1", "--level", "5", "--cmd", "fiber", "--color", "7"]) == 3


def test_identity_failure_exit_code():
    print("An impossible tolerance turns into status 4")
    assert main(["--group", "A2", "--level", "5", "--cmd", "smatrix", "--tolerance", "1e-30"]) == 4


def test_overrides_reach_the_library():
    print("Flag overrides are used by fusion, rosso-jones and check")
    assert main(["--group", "A1", "--level", "5", "--cmd", "fusion"]) == 0
    assert main(["--group", "A1", "--level", "5", "--cmd", "fusion", "--integer-tolerance", "1e-300"]) == 4

    assert main([
        "--group", "A1", "--level", "40", "--cmd", "rosso-jones",
        "--p", "2", "--q", "3", "--color", "1", "--integer-tolerance", "1e-300",
    ]) == 4


if __name__ == "__main__":
    tests = [
        test_complex_format,
        test_header,
        test_check_a1_level_4,
        test_fiber_fusion_rule,
        test_rosso_jones_command,
        test_smatrix_and_fusion_tables,
        test_torus_knot_command,
        test_shadow_command,
        test_reports_are_deterministic,
        test_config_errors,
        test_rejections,
        test_identity_failure_exit_code,
        test_overrides_reach_the_library,
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
