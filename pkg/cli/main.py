import argparse
import logging
import sys
from typing import Optional

import pandas as pd

from affine.rosso_jones import rosso_jones_labels
from checks.aggregate import summarize
from checks.engine import run_identity_suite
from cli.report import format_complex, format_labels, format_real, key_value_table, render
from core.config import Settings, get_settings
from core.errors import ArithmeticInconsistency, ConfigError, InvariantError
from core.logs import configure_logging
from invariants.fiber import verlinde_dim, z_fiber_link
from invariants.torus_knots import (
    bracket_torus_knot_s2s1,
    bracket_torus_knot_with_fiber,
    surgery_check,
    z_s3_torus_knot,
)
from lie.root_systems import build_root_system
from lie.weyl import check_weyl_cap
from linkmodel.faces import faces
from linkmodel.link_file import load_link, parse_color
from linkmodel.shadow import empty_surface_value, estimate_terms, shadow_invariant
from models.invariant import TorusKnotSpec
from models.level_data import LevelData
from models.run_config import COMMANDS, RunConfig, build_run_config
from modular.fusion import fusion_indexed, fusion_matrix
from modular.level_data import level_data

logger = logging.getLogger(__name__)

"""
Command line frontend.

    python -m cli.main --group A1 --level 4 --cmd check
    python -m cli.main --group A1 --level 5 --cmd fiber --color 1 --color 1 --color 2
    python -m cli.main --group A1 --level 40 --cmd rosso-jones --p 2 --q 3 --color 1

Exit status: 0 ok, 2 configuration error, 3 computation rejected,
4 identity failure.
"""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qinv",
        description="Level-k modular data, fusion rules and torus gauge link invariants.",
    )
    parser.add_argument("--group", required=True, help="Simple Lie algebra, e.g. A1, B2, G2.")
    parser.add_argument("--level", type=int, required=True, help="Level k (must exceed the dual Coxeter number).")
    parser.add_argument("--cmd", required=True, choices=COMMANDS, dest="command")
    parser.add_argument("--link", help="Link description file (shadow).")
    parser.add_argument("--p", type=int, help="Torus knot winding p.")
    parser.add_argument("--q", type=int, help="Torus knot winding q.")
    parser.add_argument("--color", action="append", default=[], dest="colors",
                        help="Dynkin labels, comma separated; repeat for several colors.")
    parser.add_argument("--fiber-color", dest="fiber_color", help="Color of an extra fiber loop (torus-knot).")
    parser.add_argument("--genus", type=int, default=0)
    parser.add_argument("--format", choices=("table", "csv"), default="table", dest="output_format")
    parser.add_argument("--weyl-cap", type=int, dest="weyl_cap")
    parser.add_argument("--term-budget", type=int, dest="term_budget")
    parser.add_argument("--threads", type=int)
    parser.add_argument("--tolerance", type=float, dest="identity_tolerance",
                        help="Tolerance for float identities.")
    parser.add_argument("--integer-tolerance", type=float, dest="integer_tolerance",
                        help="Tolerance for float-to-integer rounding.")
    parser.add_argument("--dimension-tolerance", type=float, dest="dimension_tolerance")
    return parser


def parse_args(argv: Optional[list[str]] = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    return build_run_config(**vars(args))


def effective_settings(config: RunConfig) -> Settings:
    overrides = {
        name: getattr(config, name)
        for name in ("weyl_cap", "term_budget", "threads", "identity_tolerance", "integer_tolerance", "dimension_tolerance")
        if getattr(config, name) is not None
    }
    return get_settings().model_copy(update=overrides)


# -----------------------------
# Commands
# -----------------------------

def _knot_spec(ld: LevelData, config: RunConfig) -> TorusKnotSpec:
    color = parse_color(ld.rs, config.colors[0], "color")
    return TorusKnotSpec(config.p, config.q, color)


def cmd_smatrix(ld: LevelData, config: RunConfig, settings: Settings):
    rows = [
        (format_labels(lam), format_labels(mu), format_complex(ld.S[i, j]))
        for i, lam in enumerate(ld.label_keys)
        for j, mu in enumerate(ld.label_keys)
    ]
    return pd.DataFrame(rows, columns=["lambda", "mu", "S"]), []


def cmd_fusion(ld: LevelData, config: RunConfig, settings: Settings):
    rows = []
    for i, lam in enumerate(ld.label_keys):
        racah = fusion_matrix(ld, lam)
        for j, mu in enumerate(ld.label_keys):
            for l, nu in enumerate(ld.label_keys):
                verlinde = fusion_indexed(ld, i, j, l, settings.integer_tolerance)
                if verlinde != racah[l, j]:
                    raise ArithmeticInconsistency(
                        f"N^{nu}_{lam},{mu}: Verlinde gives {verlinde}, Racah gives {racah[l, j]}"
                    )
                rows.append((format_labels(lam), format_labels(mu), format_labels(nu), verlinde))
    return pd.DataFrame(rows, columns=["lambda", "mu", "nu", "N"]), []


def cmd_verlinde_dim(ld: LevelData, config: RunConfig, settings: Settings):
    dim = verlinde_dim(ld, config.genus, settings.dimension_tolerance)
    return key_value_table([("genus", str(config.genus)), ("dim", str(dim))]), []


def cmd_fiber(ld: LevelData, config: RunConfig, settings: Settings):
    colors = [parse_color(ld.rs, text, "color") for text in config.colors]
    value = z_fiber_link(ld, config.genus, colors).value
    rows = [
        ("genus", str(config.genus)),
        ("colors", " ".join(format_labels(ld.rs.to_labels(c)) for c in colors) or "-"),
        ("Z", format_complex(value)),
    ]
    nearest = round(value.real)
    if abs(value - nearest) < settings.integer_tolerance:
        rows.append(("N", str(int(nearest))))
    return key_value_table(rows), []


def cmd_torus_knot(ld: LevelData, config: RunConfig, settings: Settings):
    spec = _knot_spec(ld, config)
    rows = [
        ("p", str(spec.p)),
        ("q", str(spec.q)),
        ("color", format_labels(ld.rs.to_labels(spec.color))),
        ("bracket", format_complex(bracket_torus_knot_s2s1(ld, spec, settings.threads).value)),
    ]
    if config.fiber_color is not None:
        alpha = parse_color(ld.rs, config.fiber_color, "fiber_color")
        value = bracket_torus_knot_with_fiber(ld, spec, alpha, settings.threads).value
        rows.append(("fiber_color", format_labels(ld.rs.to_labels(alpha))))
        rows.append(("bracket_with_fiber", format_complex(value)))
    return key_value_table(rows), []


def cmd_rosso_jones(ld: LevelData, config: RunConfig, settings: Settings):
    spec = _knot_spec(ld, config)
    highest = ld.rs.to_labels(spec.color)
    z = z_s3_torus_knot(ld, spec, settings.weyl_cap).value
    check = surgery_check(ld, spec, settings.integer_tolerance, settings.threads, settings.weyl_cap)

    rows = [
        ("p", str(spec.p)),
        ("q", str(spec.q)),
        ("color", format_labels(highest)),
        ("Z_S3", format_complex(z)),
        ("surgery_sum", format_complex(check.lhs)),
        ("surgery_residual", f"{check.residual:.3e}"),
        ("exact_support", str(check.exact_support).lower()),
    ]
    for mu, c in rosso_jones_labels(ld.rs, highest, spec.p, settings.weyl_cap).items():
        rows.append((f"c{format_labels(mu)}", str(c)))

    footer = []
    if check.passed is False:
        footer.append(f"# FAILED surgery residual {check.residual:.3e} > {check.tolerance:.1e}")
    return key_value_table(rows), footer


def cmd_shadow(ld: LevelData, config: RunConfig, settings: Settings):
    link = load_link(config.link, ld.rs)
    terms = estimate_terms(ld, faces(link))
    raw = shadow_invariant(ld, link, settings.term_budget, settings.threads)
    empty = empty_surface_value(ld, link.genus)
    rows = [
        ("genus", str(link.genus)),
        ("loops", str(len(link.loops))),
        ("terms", str(terms)),
        ("shadow", format_complex(raw)),
        ("empty_surface", format_real(empty.real)),
        ("bracket", format_complex(raw / empty)),
    ]
    return key_value_table(rows), []


def cmd_check(ld: LevelData, config: RunConfig, settings: Settings):
    results = run_identity_suite(ld, settings)
    summary = summarize(results)
    rows = [(r.name, f"{r.residual:.3e}", f"{r.tolerance:.1e}", r.status) for r in results]
    table = pd.DataFrame(rows, columns=["identity", "residual", "tolerance", "status"])

    footer = [f"# {summary.passed}/{summary.total} passed, {summary.reported} reported only"]
    for r in summary.failures:
        footer.append(f"# FAILED {r.name}: residual {r.residual:.3e} > tolerance {r.tolerance:.1e}")
    return table, footer


HANDLERS = {
    "smatrix": cmd_smatrix,
    "fusion": cmd_fusion,
    "verlinde-dim": cmd_verlinde_dim,
    "fiber": cmd_fiber,
    "torus-knot": cmd_torus_knot,
    "rosso-jones": cmd_rosso_jones,
    "shadow": cmd_shadow,
    "check": cmd_check,
}


def run(config: RunConfig, out=None) -> int:
    out = out or sys.stdout
    settings = effective_settings(config)
    try:
        rs = build_root_system(config.series, config.rank)
        order = check_weyl_cap(rs, settings.weyl_cap)
        logger.info("%s: |W| = %d", rs.name, order)
        ld = level_data(rs, config.level, settings.weyl_cap, settings.identity_tolerance)
        table, footer = HANDLERS[config.command](ld, config, settings)
    except InvariantError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code

    out.write(render(config, table, footer))
    return 4 if any(line.startswith("# FAILED") for line in footer) else 0


def main(argv: Optional[list[str]] = None) -> int:
    configure_logging(get_settings().log_level)
    try:
        config = parse_args(argv)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
