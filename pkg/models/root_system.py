from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from core.exact import normalize, to_fraction
from models.weight import Weight


@dataclass(frozen=True)
class WeylElement:
    """
    Element of the finite Weyl group.

    word lists simple reflection indices, leftmost applied last.
    dynkin is the integer matrix acting on Dynkin label row vectors.
    """

    word: tuple[int, ...] = field(compare=False)
    dynkin: tuple[tuple[int, ...], ...]
    sign: int = field(compare=False)
    simple_roots: tuple[Weight, ...] = field(compare=False, repr=False)

    @property
    def length(self) -> int:
        return len(self.word)

    @cached_property
    def matrix(self) -> tuple[tuple[Fraction, ...], ...]:
        """Exact orthogonal matrix in ambient coordinates (column action)."""
        dim = self.simple_roots[0].dim
        m = np.array([[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)], dtype=object)
        for i in self.word:
            alpha = self.simple_roots[i]
            factor = 2 / alpha.dot(alpha)
            reflection = np.array(
                [[Fraction(int(a == b)) - factor * alpha.coords[a] * alpha.coords[b] for b in range(dim)] for a in range(dim)],
                dtype=object,
            )
            m = m.dot(reflection)
        return tuple(tuple(to_fraction(x) for x in row) for row in m)

    def act(self, labels) -> tuple:
        r = len(labels)
        return tuple(
            normalize(sum(labels[i] * self.dynkin[i][j] for i in range(r)))
            for j in range(r)
        )

    def apply(self, weight: Weight) -> Weight:
        return Weight(tuple(
            sum((row[j] * weight.coords[j] for j in range(weight.dim)), Fraction(0))
            for row in self.matrix
        ))


@dataclass(frozen=True, eq=False)
class RootSystem:
    """
    Immutable Lie-theoretic ambient for one simple type.

    The invariant form is form_scale times the Euclidean dot product, scaled
    so that long roots have squared length 2. Dynkin labels of a weight are
    its pairings with the simple coroots.
    """

    series: str
    rank: int
    ambient_dim: int
    lie_dimension: int

    simple_roots: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    fundamental_weights: tuple[Weight, ...]
    rho: Weight
    theta: Weight

    dual_coxeter: int
    cartan_det: int
    lattice_index: int
    form_scale: Fraction

    cartan: tuple[tuple[int, ...], ...]
    cartan_inverse: tuple[tuple[Fraction, ...], ...]
    # positive roots in simple root coordinates, same order as positive_roots
    root_coefficients: tuple[tuple[int, ...], ...]
    # <alpha_i, alpha_i> / 2
    half_lengths: tuple[Fraction, ...]
    # <omega_i, theta>
    comarks: tuple[int, ...]
    theta_labels: tuple[int, ...]
    # <omega_i, omega_j>
    quadratic_form: tuple[tuple[Fraction, ...], ...]
    form_denominator: int

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"

    @property
    def zero_labels(self) -> tuple[int, ...]:
        return (0,) * self.rank

    @property
    def rho_labels(self) -> tuple[int, ...]:
        return (1,) * self.rank

    @cached_property
    def form_matrix(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.quadratic_form])

    @cached_property
    def scaled_form(self) -> np.ndarray:
        """form_denominator * <omega_i, omega_j>, an integer matrix."""
        d = self.form_denominator
        return np.array([[int(x * d) for x in row] for row in self.quadratic_form], dtype=np.int64)

    @cached_property
    def root_pairing_matrix(self) -> np.ndarray:
        """P[i, a] = <omega_i, alpha_a> over positive roots alpha_a."""
        return np.array(
            [[float(c[i] * self.half_lengths[i]) for c in self.root_coefficients] for i in range(self.rank)]
        )

    # -----------------------------
    # Forms
    # -----------------------------

    def inner(self, a: Weight, b: Weight) -> Fraction:
        return self.form_scale * a.dot(b)

    def label_inner(self, a, b) -> Fraction:
        r = self.rank
        return sum(
            (to_fraction(a[i]) * self.quadratic_form[i][j] * to_fraction(b[j]) for i in range(r) for j in range(r)),
            Fraction(0),
        )

    def theta_pairing(self, labels) -> Fraction:
        return sum((to_fraction(a) * c for a, c in zip(labels, self.comarks)), Fraction(0))

    def root_pairing(self, labels, coefficients) -> Fraction:
        """<lambda, alpha> for alpha given in simple root coordinates."""
        return sum(
            (to_fraction(a) * c * h for a, c, h in zip(labels, coefficients, self.half_lengths)),
            Fraction(0),
        )

    # -----------------------------
    # Coordinates
    # -----------------------------

    def to_labels(self, weight: Weight) -> tuple:
        if weight.dim != self.ambient_dim:
            raise ValueError(f"Invalid weight dimension for {self.name}: {weight.dim}")
        return tuple(
            normalize(2 * weight.dot(alpha) / alpha.dot(alpha))
            for alpha in self.simple_roots
        )

    def from_labels(self, labels) -> Weight:
        if len(labels) != self.rank:
            raise ValueError(f"Invalid label count for {self.name}: {len(labels)}")
        total = Weight.zero(self.ambient_dim)
        for a, omega in zip(labels, self.fundamental_weights):
            if a:
                total = total + omega * a
        return total

    def in_span(self, weight: Weight) -> bool:
        return self.from_labels(self.to_labels(weight)) == weight

    def in_weight_lattice(self, weight: Weight) -> bool:
        return self.in_span(weight) and all(to_fraction(a).denominator == 1 for a in self.to_labels(weight))

    def root_coordinates(self, labels) -> tuple[Fraction, ...]:
        r = self.rank
        return tuple(
            sum((to_fraction(labels[i]) * self.cartan_inverse[i][j] for i in range(r)), Fraction(0))
            for j in range(r)
        )

    def in_coroot_lattice(self, weight: Weight) -> bool:
        if not self.in_span(weight):
            return False
        coords = self.root_coordinates(self.to_labels(weight))
        return all((c * h).denominator == 1 for c, h in zip(coords, self.half_lengths))

    def height(self, labels) -> Fraction:
        return sum(self.root_coordinates(labels), Fraction(0))


def is_dominant(labels) -> bool:
    return all(a >= 0 for a in labels)


def is_integral(labels) -> bool:
    return all(to_fraction(a).denominator == 1 for a in labels)
