"""Seeded random rational parameter sets that avoid every tabulated pole.

Alpha has denominator 3, 7 or 11 and beta 5 or 13 (both in lowest terms), so
no combination ``i*alpha + j*beta + k/2`` with nonzero integer ``i, j`` is an
integer or half-integer.
"""

import random
from fractions import Fraction

from dualhahn import M1HahnParams

ALPHA_DENOMINATORS = (3, 7, 11)
BETA_DENOMINATORS = (5, 13)


def _rational(rng: random.Random, denominators, span: int = 6) -> Fraction:
    den = rng.choice(denominators)
    while True:
        num = rng.randint(-span * den, span * den)
        if num % den:
            return Fraction(num, den)


def random_params(seed: int, parity: str, count: int = 20, max_N: int = 12) -> list:
    rng = random.Random(f"{seed}-{parity}")
    choices = [N for N in range(1, max_N + 1) if (N % 2 == 0) == (parity == "even")]
    out = []
    for _ in range(count):
        N = rng.choice(choices)
        out.append(M1HahnParams(_rational(rng, ALPHA_DENOMINATORS), _rational(rng, BETA_DENOMINATORS), N))
    return out


def sweep(seed: int = 2024, count: int = 20, max_N: int = 12) -> list:
    """Anchors ``(N, alpha, beta) = (2, 3, 3), (1, 1, 1)`` plus ``count`` sets per parity."""
    anchors = [M1HahnParams(3, 3, 2), M1HahnParams(1, 1, 1)]
    return anchors + random_params(seed, "even", count, max_N) + random_params(seed, "odd", count, max_N)


def positivity_params(seed: int, N: int, count: int = 10) -> list:
    """Parameters inside the positivity regime, offsets ``k/101`` in ``(0, 2]``."""
    rng = random.Random(f"pos-{seed}-{N}")
    base = N if N % 2 == 0 else -1
    return [
        M1HahnParams(base + Fraction(rng.randint(1, 202), 101), base + Fraction(rng.randint(1, 202), 101), N)
        for _ in range(count)
    ]
