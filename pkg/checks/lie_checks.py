from fractions import Fraction

from lie.weyl import weyl_group
from models.identity import IdentityResult
from models.root_system import RootSystem


def check_lie(rs: RootSystem) -> list[IdentityResult]:
    results = []

    theta_norm = rs.inner(rs.theta, rs.theta)
    results.append(IdentityResult("<theta, theta> = 2", float(abs(theta_norm - 2)), 0.0))

    expected = (rs.lie_dimension - rs.rank) // 2
    results.append(IdentityResult("|R+| = (dim G - rank) / 2", float(abs(len(rs.positive_roots) - expected)), 0.0))

    results.append(IdentityResult(
        "cg = 1 + <theta, rho>",
        float(abs(rs.dual_coxeter - 1 - rs.inner(rs.theta, rs.rho))),
        0.0,
    ))

    group = weyl_group(rs)
    results.append(IdentityResult("sum_W sign = 0", float(abs(sum(w.sign for w in group))), 0.0))

    # simple coroots generate an even integral lattice
    coroots = [alpha * (Fraction(1) / h) for alpha, h in zip(rs.simple_roots, rs.half_lengths)]
    bad = 0
    for i, x in enumerate(coroots):
        for j, y in enumerate(coroots):
            value = rs.inner(x, y)
            if value.denominator != 1 or (i == j and value % 2):
                bad += 1
    results.append(IdentityResult("coroot lattice even", float(bad), 0.0))

    return results
