"""Seeded random coefficient vectors for verification campaigns.

Everything takes an explicit ``random.Random`` so that identical seeds give
byte-identical campaigns.
"""

from __future__ import annotations

import random

from .intcore import CorePoly


def sample_core(rng: random.Random, k: int, bound: int) -> CorePoly:
    """Uniform coefficients in [-bound, bound], trailing resampled until nonzero."""
    if k < 1 or bound < 1:
        raise ValueError("need k >= 1 and bound >= 1")
    t = [rng.randint(-bound, bound) for _ in range(k)]
    while t[-1] == 0:
        t[-1] = rng.randint(-bound, bound)
    return CorePoly(tuple(t))


def sample_cores(rng: random.Random, count: int, k_max: int, bound: int) -> list[CorePoly]:
    """Cores with degree drawn uniformly from 1..k_max."""
    return [sample_core(rng, rng.randint(1, k_max), bound) for _ in range(count)]


def primes_up_to(n: int) -> list[int]:
    """Sieve of Eratosthenes."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, flag in enumerate(sieve) if flag]
