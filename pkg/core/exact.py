from fractions import Fraction

import numpy as np
import sympy

"""
Exact arithmetic helpers shared by the Lie-theoretic modules.
"""


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, sympy.Rational):
        return Fraction(int(x.p), int(x.q))
    if isinstance(x, float):
        raise TypeError(f"Refusing inexact coordinate: {x}")
    return Fraction(x)


def normalize(x):
    """Fraction with denominator 1 -> int, anything else unchanged."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def exact_inverse(rows) -> tuple[tuple, ...]:
    inverse = sympy.Matrix(rows).inv()
    n = inverse.shape[0]
    return tuple(tuple(to_fraction(inverse[i, j]) for j in range(n)) for i in range(n))


def exact_det(rows) -> Fraction:
    return to_fraction(sympy.Matrix(rows).det())


def mod2(x: Fraction) -> Fraction:
    """Reduce a rational multiple of pi to [0, 2)."""
    return x - 2 * (x.numerator // (2 * x.denominator))


def phase(x: Fraction) -> complex:
    """exp(pi i x) for rational x, reduced before a single exponential."""
    reduced = mod2(x)
    return complex(np.exp(1j * np.pi * float(reduced)))
