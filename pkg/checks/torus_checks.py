from invariants.torus_knots import (
    bracket_torus_knot_s2s1,
    bracket_torus_knot_with_fiber,
    surgery_check,
    z_s3_torus_knot,
)
from linkmodel.shadow import normalized_shadow
from linkmodel.transform import single_loop
from models.identity import IdentityResult
from models.invariant import TorusKnotSpec
from models.level_data import LevelData

FRAMINGS = range(-2, 4)
SURGERY_KNOTS = ((2, 3), (3, 2), (2, 5))


def check_degenerations(ld: LevelData, tolerance: float) -> list[IdentityResult]:
    rs = ld.rs
    zero = ld.labels[0]

    shadow_worst = 0.0
    for color in ld.labels:
        for q in FRAMINGS:
            knot = bracket_torus_knot_s2s1(ld, TorusKnotSpec(1, q, color)).value
            loop = normalized_shadow(ld, single_loop(0, q, color))
            shadow_worst = max(shadow_worst, abs(knot - loop))

    trivial = max(
        abs(bracket_torus_knot_s2s1(ld, TorusKnotSpec(p, q, zero)).value - 1)
        for p, q in SURGERY_KNOTS
    )

    fiber_worst = 0.0
    collapse_worst = 0.0
    for p, q in SURGERY_KNOTS:
        for color in ld.labels[: rs.rank + 1]:
            spec = TorusKnotSpec(p, q, color)
            plain = bracket_torus_knot_s2s1(ld, spec).value
            fiber_worst = max(fiber_worst, abs(bracket_torus_knot_with_fiber(ld, spec, zero).value - plain))
        for a, alpha in enumerate(ld.labels):
            value = bracket_torus_knot_with_fiber(ld, TorusKnotSpec(p, q, zero), alpha).value
            collapse_worst = max(collapse_worst, abs(value - (1.0 if a == 0 else 0.0)))

    return [
        IdentityResult("p=1 torus knot = single loop shadow", shadow_worst, 10 * tolerance),
        IdentityResult("trivially colored torus knot = 1", trivial, tolerance),
        IdentityResult("fiber colored 0 = plain bracket", fiber_worst, tolerance),
        IdentityResult("trivial knot with fiber alpha = delta_alpha0", collapse_worst, tolerance),
    ]


def check_symmetries(ld: LevelData, tolerance: float) -> list[IdentityResult]:
    conjugate_worst = 0.0
    mirror_worst = 0.0
    for i, color in enumerate(ld.labels):
        for p, q in SURGERY_KNOTS:
            value = bracket_torus_knot_s2s1(ld, TorusKnotSpec(p, q, color)).value
            conjugate = bracket_torus_knot_s2s1(ld, TorusKnotSpec(p, q, ld.labels[ld.bar[i]])).value
            mirror = bracket_torus_knot_s2s1(ld, TorusKnotSpec(p, -q, color)).value
            conjugate_worst = max(conjugate_worst, abs(value - conjugate))
            mirror_worst = max(mirror_worst, abs(value.conjugate() - mirror))

    return [
        IdentityResult("bracket(lambda bar) = bracket(lambda)", conjugate_worst, 10 * tolerance),
        IdentityResult("bracket(-q) = conj bracket(q)", mirror_worst, 10 * tolerance),
    ]


def check_surgery(
    ld: LevelData,
    tolerance: float,
    integer_tolerance: float,
    cap: int | None = None,
    threads: int | None = None,
) -> list[IdentityResult]:
    results = []

    p1_worst = 0.0
    for color in ld.labels:
        for q in FRAMINGS:
            spec = TorusKnotSpec(1, q, color)
            i = ld.index(color)
            expected = ld.S00 * ld.qdim[i] * ld.theta[i] ** q
            p1_worst = max(p1_worst, abs(z_s3_torus_knot(ld, spec, cap).value - expected))
    results.append(IdentityResult("Z(S^3, unknot) = S00 d theta^q", p1_worst, tolerance))

    for p, q in SURGERY_KNOTS:
        for color in ld.labels[: ld.rs.rank + 1]:
            check = surgery_check(ld, TorusKnotSpec(p, q, color), integer_tolerance, threads, cap)
            name = f"surgery ({p},{q}) color {ld.rs.to_labels(color)}"
            results.append(IdentityResult(
                name,
                check.residual,
                integer_tolerance,
                reported_only=not check.exact_support,
            ))
    return results
