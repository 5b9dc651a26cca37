"""Shared corpus helpers: deterministic random polynomial generators."""

from __future__ import annotations

import random
from fractions import Fraction

from srcirc.embedding import CoeffVector


def random_int_coeffs(rng: random.Random, g: int, bound: int = 9) -> CoeffVector:
    c0 = 0
    while c0 == 0:
        c0 = rng.randint(-bound, bound)
    return CoeffVector.make([c0] + [rng.randint(-bound, bound) for _ in range(g)])


def random_rational_coeffs(rng: random.Random, g: int, bound: int = 9) -> CoeffVector:
    c0 = Fraction(0)
    while c0 == 0:
        c0 = Fraction(rng.randint(-bound, bound), rng.randint(1, 5))
    rest = [Fraction(rng.randint(-bound, bound), rng.randint(1, 5)) for _ in range(g)]
    return CoeffVector.make([c0] + rest)
