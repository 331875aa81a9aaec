"""Seeded generators of bounded-height rationals, matrices and algebras."""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import StructureConstants
from .linalg import Mat, Vec, det

DEFAULT_HEIGHT = 9


def rng_from(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def rational(rng: random.Random, height: int = DEFAULT_HEIGHT) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def nonzero_rational(rng: random.Random, height: int = DEFAULT_HEIGHT) -> Fraction:
    while True:
        q = rational(rng, height)
        if q:
            return q


def vector(rng: random.Random, n: int = 4, height: int = DEFAULT_HEIGHT) -> Vec:
    return tuple(rational(rng, height) for _ in range(n))


def matrix(rng: random.Random, n: int, height: int = DEFAULT_HEIGHT) -> Mat:
    return tuple(tuple(rational(rng, height) for _ in range(n)) for _ in range(n))


def invertible(rng: random.Random, n: int = 4, height: int = DEFAULT_HEIGHT) -> Mat:
    while True:
        m = matrix(rng, n, height)
        if det(m) != 0:
            return m


def constants(rng: random.Random, n: int = 4, height: int = DEFAULT_HEIGHT, density: float = 0.5) -> StructureConstants:
    products = {}
    for i in range(n):
        for j in range(i + 1, n):
            products[(i, j)] = tuple(rational(rng, height) if rng.random() < density else Fraction(0) for _ in range(n))
    return StructureConstants.from_products(products, n)


def weak_iso(rng: random.Random, height: int = DEFAULT_HEIGHT, xi3_preserving: bool = False):
    from .presentation import WeakIso

    P = invertible(rng, 2, height)
    u0 = nonzero_rational(rng, height)
    u, pq3 = vector(rng, 3, height), vector(rng, 2, height)
    if xi3_preserving:
        return WeakIso.xi3_preserving(u0, u, P, pq3)
    return WeakIso(u0, u, P, pq3, nonzero_rational(rng, height))


def bl4_presentation(rng: random.Random, height: int = DEFAULT_HEIGHT, xi3=None):
    """A random BL4 presentation covering all three reduction cases."""
    from .presentation import Bl4Presentation

    xi = nonzero_rational(rng, height) if xi3 is None else xi3
    r = rng.random()
    if r < 0.15:
        X = ((0, 0), (rational(rng, height), nonzero_rational(rng, height)))
        return Bl4Presentation(0, xi, X)
    x11 = nonzero_rational(rng, height)
    if r < 0.5:
        X = ((nonzero_rational(rng, height), 0), (rational(rng, height), rational(rng, height)))
    else:
        X = ((rational(rng, height), nonzero_rational(rng, height)), (rational(rng, height), rational(rng, height)))
    return Bl4Presentation(x11, xi, X)
