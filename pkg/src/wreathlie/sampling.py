"""Seeded random rationals, vectors and series with small numerators and denominators."""
from __future__ import annotations

import random
from fractions import Fraction

from .formal import FormalSeries, HomogeneousMap, monomials

MAX_ENTRY = 9


def random_rational(rng: random.Random, max_entry: int = MAX_ENTRY) -> Fraction:
    return Fraction(rng.randint(-max_entry, max_entry), rng.randint(1, max_entry))


def random_vector(rng: random.Random, dim: int, density: float = 1.0) -> tuple:
    return tuple(random_rational(rng) if rng.random() < density else Fraction(0) for _ in range(dim))


def random_homogeneous(rng: random.Random, src_dim: int, tgt_dim: int, degree: int,
                       density: float = 0.5) -> HomogeneousMap:
    coeffs = {}
    for alpha in monomials(src_dim, degree):
        if rng.random() < density:
            coeffs[alpha] = random_vector(rng, tgt_dim)
    return HomogeneousMap(src_dim, tgt_dim, degree, coeffs)


def random_series(rng: random.Random, src_dim: int, tgt_dim: int, valid_through: int,
                  density: float = 0.5) -> FormalSeries:
    return FormalSeries(src_dim, tgt_dim,
                        (random_homogeneous(rng, src_dim, tgt_dim, m, density) for m in range(valid_through + 1)))
