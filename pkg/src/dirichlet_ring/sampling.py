"""Seeded random generation of exact truncated functions.

Entries are small rationals (numerator -3..3 over denominator 1..3) so
that convolutions stay cheap and every failure reproduces from the seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .ring import ArithFunc, EXACT

NUMERATOR_RANGE = (-3, 3)
DENOMINATOR_RANGE = (1, 3)


def random_scalar(rng: random.Random) -> Fraction:
    return Fraction(
        rng.randint(*NUMERATOR_RANGE), rng.randint(*DENOMINATOR_RANGE)
    )


def random_func(rng: random.Random, n: int) -> ArithFunc:
    return ArithFunc([random_scalar(rng) for _ in range(n)], EXACT)


def random_nonzero(rng: random.Random, n: int) -> ArithFunc:
    vals = [random_scalar(rng) for _ in range(n)]
    if not any(vals):
        vals[rng.randrange(n)] = Fraction(rng.choice((-3, -2, -1, 1, 2, 3)))
    return ArithFunc(vals, EXACT)


def random_unit(rng: random.Random, n: int) -> ArithFunc:
    """Random function with a nonzero value at 1."""
    vals = [random_scalar(rng) for _ in range(n)]
    while not vals[0]:
        vals[0] = random_scalar(rng)
    return ArithFunc(vals, EXACT)


def random_non_unit(rng: random.Random, n: int) -> ArithFunc:
    """Random nonzero function vanishing at 1."""
    vals = [random_scalar(rng) for _ in range(n)]
    vals[0] = Fraction(0)
    if n > 1 and not any(vals):
        vals[1 + rng.randrange(n - 1)] = Fraction(rng.choice((-3, -2, -1, 1, 2, 3)))
    return ArithFunc(vals, EXACT)


def random_with_norm(rng: random.Random, n: int, norm: int) -> ArithFunc:
    """Random function whose first nonzero value sits exactly at ``norm``."""
    if not 1 <= norm <= n:
        raise ValueError(f"norm {norm} must lie in the window 1..{n}")
    vals = [Fraction(0)] * (norm - 1)
    vals.append(Fraction(rng.choice((-3, -2, -1, 1, 2, 3)), rng.randint(1, 3)))
    vals.extend(random_scalar(rng) for _ in range(n - norm))
    return ArithFunc(vals, EXACT)


def random_in_ideal(rng: random.Random, spec, n: int) -> ArithFunc:
    """Random member: sample freely, then zero out the constrained indices."""
    vals = [random_scalar(rng) for _ in range(n)]
    for idx in spec.constrained_indices(n):
        vals[idx - 1] = Fraction(0)
    return ArithFunc(vals, EXACT)


def random_additive(rng: random.Random, n: int) -> ArithFunc:
    """Random additive function: one value per prime power, summed over
    the factorization of each index."""
    from .primes import factorize

    assigned: dict[tuple[int, int], Fraction] = {}

    def value_at(p: int, a: int) -> Fraction:
        if (p, a) not in assigned:
            assigned[(p, a)] = random_scalar(rng)
        return assigned[(p, a)]

    vals = []
    for k in range(1, n + 1):
        total = Fraction(0)
        for p, a in factorize(k).factors:
            total += value_at(p, a)
        vals.append(total)
    return ArithFunc(vals, EXACT)
