"""Seeded random bicomplex numbers and polynomials for property checks."""
from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from .core import Bicomplex
from .polynomial import BCPolynomial


def random_rational(rng: random.Random, bound: int = 5, max_den: int = 6) -> Fraction:
    return Fraction(rng.randint(-bound * max_den, bound * max_den), rng.randint(1, max_den))


def random_exact_bicomplex(rng: random.Random, bound: int = 5, max_den: int = 6) -> Bicomplex:
    return Bicomplex.from_cartesian(*(random_rational(rng, bound, max_den) for _ in range(4)))


def random_ball_bicomplex(rng: np.random.Generator, radius: float = 1.0) -> Bicomplex:
    """Uniform sample from the Euclidean ball of ``radius`` in BC = R^4."""
    v = rng.standard_normal(4)
    v *= radius * rng.random() ** 0.25 / np.linalg.norm(v)
    return Bicomplex.from_cartesian(*(float(x) for x in v))


def random_polynomial(rng: random.Random, max_degree: int = 6, n_terms: int = 6,
                      exact: bool = True, touch_all: bool = False) -> BCPolynomial:
    """Random polynomial with total degree <= ``max_degree``.

    ``touch_all`` adds one term containing every variable so no formal
    derivative of the result vanishes identically.
    """
    terms = {}
    for _ in range(n_terms):
        d = rng.randint(0, max_degree)
        cuts = sorted(rng.randint(0, d) for _ in range(3))
        e = (cuts[0], cuts[1] - cuts[0], cuts[2] - cuts[1], d - cuts[2])
        terms[e] = _coeff(rng, exact)
    if touch_all and max_degree >= 4:
        terms[(1, 1, 1, 1)] = _coeff(rng, exact)
    return BCPolynomial(terms)


def _coeff(rng: random.Random, exact: bool) -> Bicomplex:
    if exact:
        return random_exact_bicomplex(rng, bound=3, max_den=4)
    return Bicomplex.from_cartesian(*(rng.uniform(-1, 1) for _ in range(4)))
