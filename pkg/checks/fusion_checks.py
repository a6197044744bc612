import numpy as np

from invariants.fiber import verlinde_dim, z_fiber_link
from models.identity import IdentityResult, max_residual
from models.level_data import LevelData
from modular.fusion import fusion_matrix, verlinde_tensor


def check_fusion(
    ld: LevelData,
    tolerance: float,
    integer_tolerance: float,
    dimension_tolerance: float | None = None,
) -> list[IdentityResult]:
    n = ld.size
    tensor = verlinde_tensor(ld)
    rounded = np.rint(tensor.real)

    results = [
        IdentityResult("Verlinde numbers integral", max_residual(np.abs(tensor - rounded).ravel()), integer_tolerance),
        IdentityResult("Verlinde numbers nonnegative", float(np.sum(rounded < 0)), 0.0),
        IdentityResult("N_000 = 1", abs(tensor[0, 0, 0] - 1), tolerance),
    ]

    symmetry = max(
        max_residual(np.abs(tensor - tensor.transpose(axes)).ravel())
        for axes in ((1, 0, 2), (0, 2, 1), (2, 1, 0))
    )
    results.append(IdentityResult("Verlinde numbers totally symmetric", symmetry, tolerance))

    # N^mu_{lambda nu} (Racah) against N_{lambda nu mubar} (Verlinde)
    mismatches = 0
    for l, lam in enumerate(ld.label_keys):
        racah = fusion_matrix(ld, lam)
        for m in range(n):
            for v in range(n):
                if racah[m, v] != rounded[l, v, ld.bar[m]]:
                    mismatches += 1
    results.append(IdentityResult("quantum Racah = Verlinde fusion", float(mismatches), 0.0))

    # fiber links on S^2 x S^1 reproduce the fusion rules
    fiber_residual = 0.0
    for a in range(n):
        for b in range(n):
            for c in range(n):
                value = z_fiber_link(ld, 0, [ld.labels[a], ld.labels[b], ld.labels[c]]).value
                fiber_residual = max(fiber_residual, abs(value - rounded[a, b, c]))
    results.append(IdentityResult("fiber link = N_{abc}", fiber_residual, integer_tolerance))

    empty = z_fiber_link(ld, 0, []).value
    results.append(IdentityResult("Z(S^2 x S^1) = 1", abs(empty - 1), tolerance))

    torus = verlinde_dim(ld, 1, dimension_tolerance)
    results.append(IdentityResult("dim V(torus) = number of labels", float(abs(torus - n)), 0.0))
    sphere = verlinde_dim(ld, 0, dimension_tolerance)
    results.append(IdentityResult("dim V(sphere) = 1", float(abs(sphere - 1)), 0.0))

    return results
